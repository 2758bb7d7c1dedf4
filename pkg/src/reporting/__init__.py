"""Markdown run reports."""

from .run_report import RunReportBuilder

__all__ = ["RunReportBuilder"]
