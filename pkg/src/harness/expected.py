"""
Survivor sets that line and triangle enumeration must reproduce.

Diagrams are written as in the classification tables: lines as
(v1, e12, v2, e23, v3) and triangles as (v1, e12, v2, e23, v3, e13), with
ζ ∈ G'_3, ξ ∈ G'_12 (lines) and ξ ∈ G'_4 (triangles). Comparison is up to
vertex permutation and the Galois substitutions named per shape.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..diagram import DynkinDiagram, canonical_key, galois_conjugates
from ..scalar import ONE, UnityRoot, make

Z = make(1, 3)
XI12 = make(1, 12)
XI4 = make(1, 4)


@dataclass(frozen=True)
class ExpectedSurvivor:
    diagram: DynkinDiagram
    label: str


def _line(v1, e12, v2, e23, v3) -> DynkinDiagram:
    return DynkinDiagram((v1, v2, v3), (e12, ONE, e23))


def _triangle(v1, e12, v2, e23, v3, e13) -> DynkinDiagram:
    return DynkinDiagram((v1, v2, v3), (e12, e13, e23))


def expected_lines(zeta: UnityRoot = Z, xi: UnityRoot = XI12) -> List[ExpectedSurvivor]:
    z, z2, m = zeta, zeta ** 2, -ONE
    return [
        ExpectedSurvivor(_line(m, m, -z2, -z, z), "StandardIndefinite"),
        ExpectedSurvivor(_line(m, -z, z, -z, -z2), "StandardAffine(D_3^(2))"),
        ExpectedSurvivor(_line(m, -z, z, -z2, -z), "StandardAffine(D_3^(2))"),
        ExpectedSurvivor(_line(z2, z, m, m, z), "SixPointGroupoid"),
        ExpectedSurvivor(_line(z, z2, m, -z, z), "SixPointGroupoid"),
        ExpectedSurvivor(_line(z, -z, -z2, z2, z), "StandardAffine(A_4^(2))"),
        ExpectedSurvivor(_line(-xi ** 4, xi ** 2, -xi.inverse(), -xi, xi ** 4), "StandardAffine(A_4^(2))"),
    ]


def expected_triangles(zeta: UnityRoot = Z, xi: UnityRoot = XI4) -> List[ExpectedSurvivor]:
    z, z2, m = zeta, zeta ** 2, -ONE
    return [
        ExpectedSurvivor(_triangle(m, m, m, -z, m, -z), "StandardAffine(A_2^(1))"),
        ExpectedSurvivor(_triangle(m, m, m, -z, -z2, -z), "StandardAffine(A_2^(1))"),
        ExpectedSurvivor(_triangle(-z2, -z, m, -z, -z2, -z), "StandardAffine(A_2^(1))"),
        ExpectedSurvivor(_triangle(-xi, xi, m, xi, -xi, xi), "StandardAffine(A_2^(1))"),
        ExpectedSurvivor(_triangle(xi, -xi, m, -xi, xi, -xi), "StandardAffine(A_2^(1))"),
    ]


def symmetry_key(d: DynkinDiagram) -> str:
    """Smallest print over vertex permutations and every Galois conjugate."""
    return min(canonical_key(g) for g in galois_conjugates(d))


def compare_survivors(
    found: Iterable[Tuple[DynkinDiagram, str]], expected: Sequence[ExpectedSurvivor]
) -> dict:
    """
    Match survivors to the expected set up to symmetry.

    Labels are compared by prefix so that ``StandardIndefinite`` also accepts
    ``StandardIndefiniteIsotropic``.

    Returns:
        {"missing": [...], "unexpected": [...], "label_mismatch": [...], "ok": bool}
    """
    wanted = {}
    for item in expected:
        wanted.setdefault(symmetry_key(item.diagram), item.label)
    seen = {}
    for d, label in found:
        seen.setdefault(symmetry_key(d), label)

    missing = sorted(set(wanted) - set(seen))
    unexpected = sorted(set(seen) - set(wanted))
    label_mismatch = sorted(
        (key, wanted[key], seen[key])
        for key in set(wanted) & set(seen)
        if not seen[key].startswith(wanted[key])
    )
    return {
        "missing": missing,
        "unexpected": unexpected,
        "label_mismatch": label_mismatch,
        "ok": not (missing or unexpected or label_mismatch),
    }
