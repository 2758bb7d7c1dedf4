"""
Finite / affine / indefinite trichotomy of generalized Cartan matrices.

Uses the recursive determinant criterion on each indecomposable component:
finite iff det > 0 and every proper principal submatrix is of finite type,
affine iff det = 0 and every proper principal submatrix is of finite type,
indefinite otherwise. Determinants are exact (sympy, Bareiss).
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Tuple

from sympy import Matrix

from .matrix import GCM


class GCMType(Enum):
    """Kac type of an indecomposable GCM."""
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class ComponentClass:
    indices: Tuple[int, ...]
    kind: GCMType
    compactly_hyperbolic: bool = False


@dataclass(frozen=True)
class GCMClass:
    """
    Classification of a GCM, per indecomposable component.

    ``kind`` summarises the components (indefinite beats affine beats finite);
    ``compactly_hyperbolic`` is only meaningful for indecomposable input.
    """
    components: Tuple[ComponentClass, ...]

    @property
    def kind(self) -> GCMType:
        kinds = {comp.kind for comp in self.components}
        for candidate in (GCMType.INDEFINITE, GCMType.AFFINE):
            if candidate in kinds:
                return candidate
        return GCMType.FINITE

    @property
    def compactly_hyperbolic(self) -> bool:
        return len(self.components) == 1 and self.components[0].compactly_hyperbolic

    @property
    def is_finite(self) -> bool:
        return self.kind is GCMType.FINITE


def determinant(c: GCM) -> int:
    return int(Matrix(c.entries).det(method="bareiss"))


@lru_cache(maxsize=None)
def _classify_indecomposable(entries: Tuple[Tuple[int, ...], ...]) -> Tuple[GCMType, bool]:
    c = GCM(entries)
    proper_finite = _proper_minors_finite(entries)
    det = determinant(c)
    if proper_finite and det > 0:
        return GCMType.FINITE, False
    if proper_finite and det == 0:
        return GCMType.AFFINE, False
    return GCMType.INDEFINITE, proper_finite


@lru_cache(maxsize=None)
def _all_finite(entries: Tuple[Tuple[int, ...], ...]) -> bool:
    c = GCM(entries)
    for comp in c.components():
        kind, _ = _classify_indecomposable(c.principal(comp).entries)
        if kind is not GCMType.FINITE:
            return False
    return True


def _proper_minors_finite(entries: Tuple[Tuple[int, ...], ...]) -> bool:
    """Every principal submatrix of size rank-1 has only finite components."""
    rank = len(entries)
    if rank == 1:
        return True
    c = GCM(entries)
    # all smaller minors are principal minors of the rank-1 ones
    return all(
        _all_finite(c.principal(idx).entries)
        for idx in combinations(range(rank), rank - 1)
    )


def gcm_class(c: GCM) -> GCMClass:
    """Classify every indecomposable component of c."""
    result = []
    for comp in c.components():
        kind, proper_finite = _classify_indecomposable(c.principal(comp).entries)
        result.append(ComponentClass(
            indices=comp,
            kind=kind,
            compactly_hyperbolic=kind is GCMType.INDEFINITE and proper_finite,
        ))
    return GCMClass(tuple(result))
