"""
Nichols algebras of diagonal type

Weyl groupoids, finiteness certificates, the rank-2 list and the rank-3
enumeration harness.
"""

__version__ = "1.0.0"
