"""Generalized Cartan matrices: representation, text format, submatrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List, Sequence, Tuple

from ..errors import InvalidArgument, ParseError


@dataclass(frozen=True)
class GCM:
    """
    Integer generalized Cartan matrix.

    Invariants: c_ii = 2, c_ij <= 0 off the diagonal, c_ij = 0 iff c_ji = 0.
    """

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rank = len(self.entries)
        if rank < 1 or any(len(row) != rank for row in self.entries):
            raise InvalidArgument("GCM must be square and non-empty")
        for i in range(rank):
            if self.entries[i][i] != 2:
                raise InvalidArgument(f"c[{i + 1}][{i + 1}] must be 2")
            for j in range(rank):
                if i == j:
                    continue
                cij, cji = self.entries[i][j], self.entries[j][i]
                if cij > 0:
                    raise InvalidArgument(f"c[{i + 1}][{j + 1}] = {cij} is positive")
                if (cij == 0) != (cji == 0):
                    raise InvalidArgument(f"c[{i + 1}][{j + 1}] and c[{j + 1}][{i + 1}] vanish asymmetrically")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "GCM":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> "GCM":
        return GCM(tuple(zip(*self.entries)))

    def principal(self, indices: Sequence[int]) -> "GCM":
        idx = list(indices)
        return GCM(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def permuted(self, perm: Sequence[int]) -> "GCM":
        """New index k is old index perm[k]."""
        return GCM(tuple(tuple(self.entries[a][b] for b in perm) for a in perm))

    def components(self) -> List[Tuple[int, ...]]:
        """Index sets of the indecomposable components."""
        remaining = set(range(self.rank))
        result = []
        while remaining:
            start = min(remaining)
            seen, frontier = {start}, [start]
            while frontier:
                i = frontier.pop()
                for j in range(self.rank):
                    if j not in seen and self.entries[i][j] != 0:
                        seen.add(j)
                        frontier.append(j)
            remaining -= seen
            result.append(tuple(sorted(seen)))
        return result

    def is_indecomposable(self) -> bool:
        return len(self.components()) == 1

    def canonical(self) -> "GCM":
        """Representative of the permutation class (lexicographically smallest rows)."""
        return min(
            (self.permuted(p) for p in permutations(range(self.rank))),
            key=lambda c: c.entries,
        )

    def __str__(self) -> str:
        return format_gcm(self)


def parse_gcm(text: str) -> GCM:
    """Parse ``θ; c11 c12 ...; c21 ...`` (row-major)."""
    parts = [p.strip() for p in text.strip().rstrip(";").split(";")]
    if not parts or not parts[0].isdigit():
        raise ParseError("GCM text must start with the rank", text, 0)
    rank = int(parts[0])
    rows = parts[1:]
    if len(rows) != rank:
        raise ParseError(f"rank {rank} but {len(rows)} rows", text)
    try:
        entries = [[int(tok) for tok in row.split()] for row in rows]
    except ValueError as exc:
        raise ParseError(f"non-integer GCM entry ({exc})", text) from exc
    if any(len(row) != rank for row in entries):
        raise ParseError("GCM rows have the wrong length", text)
    return GCM.from_rows(entries)


def format_gcm(c: GCM) -> str:
    rows = "; ".join(" ".join(str(x) for x in row) for row in c.entries)
    return f"{c.rank}; {rows}"
