"""
The rank-2 list as data.

Parametric rows are matched by solving for q; finite rows are instantiated
over their primitive roots at load time and closed under rank-2 reflections,
so finite membership is a dictionary lookup.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import pandas as pd

from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram
from ..errors import ConfigurationError, ParseError
from ..groupoid import explore
from ..io import AssetLoader
from ..scalar import UnityRoot, primitive_roots
from .expr import Z3, ScalarExpr, parse_expr

logger = logging.getLogger(__name__)

Triple = Tuple[UnityRoot, UnityRoot, UnityRoot]

ROW_KINDS = ("finite", "parametric")
PROVENANCES = ("quoted", "external")

# Rows of the published rank-2 list whose entries are concrete roots of unity
FINITE_LIST_ROWS = frozenset(range(6, 11)) | frozenset(range(12, 18))


def rank2(v1: UnityRoot, e: UnityRoot, v2: UnityRoot) -> DynkinDiagram:
    return DynkinDiagram((v1, v2), (e,))


def as_triple(d: DynkinDiagram) -> Triple:
    return d.vertex(0), d.edge(0, 1), d.vertex(1)


@dataclass(frozen=True)
class Rank2Row:
    """
    One record of the rank-2 table.

    Attributes:
        id: Row label
        kind: finite | parametric
        v1, e, v2: Entry expressions
        forbidden: Orders q may not have (parametric rows)
        required_order: q ranges over G'_N (finite rows)
        provenance: quoted | external
        list_row: Row number in the published rank-2 list, when the source
            states it (finite rows only)
    """
    id: str
    kind: str
    v1: ScalarExpr
    e: ScalarExpr
    v2: ScalarExpr
    forbidden: FrozenSet[int] = frozenset()
    required_order: Optional[int] = None
    provenance: str = "quoted"
    list_row: Optional[int] = None

    @property
    def entries(self) -> Tuple[ScalarExpr, ScalarExpr, ScalarExpr]:
        return self.v1, self.e, self.v2

    @property
    def is_parametric(self) -> bool:
        return self.kind == "parametric"

    def zetas(self) -> List[UnityRoot]:
        """Both primitive cube roots when the row mentions ζ."""
        if any(x.mentions_zeta for x in self.entries):
            return [Z3, Z3 ** 2]
        return [Z3]

    def admits(self, q: UnityRoot) -> bool:
        if self.required_order is not None:
            return q.order == self.required_order
        return q.order not in self.forbidden

    def evaluate(self, q: UnityRoot, zeta: UnityRoot = Z3) -> Triple:
        return tuple(x.evaluate(q, zeta) for x in self.entries)

    def instances(self, domain: List[UnityRoot]) -> Iterator[Tuple[Triple, UnityRoot, UnityRoot]]:
        """(triple, q, ζ) for every admissible q in domain."""
        for zeta in self.zetas():
            for q in domain:
                if self.admits(q):
                    yield self.evaluate(q, zeta), q, zeta

    def solve(self, triple: Triple) -> List[Tuple[UnityRoot, UnityRoot]]:
        """Every admissible (q, ζ) with evaluate(q, ζ) == triple, in this orientation."""
        pivot = next((k for k, x in enumerate(self.entries) if x.mentions_q), None)
        found = []
        for zeta in self.zetas():
            if pivot is None:
                continue
            for q in self.entries[pivot].solve(triple[pivot], zeta):
                if self.admits(q) and self.evaluate(q, zeta) == triple:
                    found.append((q, zeta))
        return found


def _parse_constraints(text: str, row_id: str) -> Tuple[FrozenSet[int], Optional[int]]:
    text = text.strip()
    try:
        if text.startswith("!"):
            return frozenset(int(k) for k in text[1:].split(",") if k.strip()), None
        if text.startswith("="):
            return frozenset(), int(text[1:])
    except ValueError:
        pass
    raise ParseError(f"row {row_id}: malformed constraints", text)


def _parse_list_row(text: str, row_id: str, kind: str) -> Optional[int]:
    text = (text or "").strip()
    if not text:
        return None
    if not text.isdigit():
        raise ParseError(f"row {row_id}: malformed list row", text)
    number = int(text)
    if kind != "finite" or number not in FINITE_LIST_ROWS:
        raise ConfigurationError(f"row {row_id}: list row {number} is not a finite row of the rank-2 list")
    return number


def rows_from_frame(frame: pd.DataFrame) -> List[Rank2Row]:
    rows = []
    for record in frame.to_dict(orient="records"):
        row_id = record["id"]
        if record["kind"] not in ROW_KINDS:
            raise ConfigurationError(f"row {row_id}: unknown kind {record['kind']!r}")
        if record["provenance"] not in PROVENANCES:
            raise ConfigurationError(f"row {row_id}: unknown provenance {record['provenance']!r}")
        forbidden, required = _parse_constraints(record["constraints"], row_id)
        if (record["kind"] == "finite") != (required is not None):
            raise ConfigurationError(f"row {row_id}: finite rows take '=N', parametric rows '!k,...'")
        list_row = _parse_list_row(record.get("list_row"), row_id, record["kind"])
        rows.append(Rank2Row(
            id=row_id,
            kind=record["kind"],
            v1=parse_expr(record["v1"]),
            e=parse_expr(record["e"]),
            v2=parse_expr(record["v2"]),
            forbidden=forbidden,
            required_order=required,
            provenance=record["provenance"],
            list_row=list_row,
        ))
    return rows


@dataclass
class Rank2Table:
    """
    Immutable-after-load rank-2 table.

    Attributes:
        rows: All rows in file order
        finite: Every oriented triple of the reflection closure of the finite
            rows, mapped to the ids of the rows it came from
        sha256: Hash of the source file ("" when built in memory)
        dropped: Finite rows whose instances did not close (logged on load)
    """
    rows: List[Rank2Row]
    finite: Dict[Triple, Tuple[str, ...]] = field(default_factory=dict)
    sha256: str = ""
    dropped: List[str] = field(default_factory=list)

    @property
    def parametric_rows(self) -> List[Rank2Row]:
        return [row for row in self.rows if row.is_parametric]

    @property
    def finite_rows(self) -> List[Rank2Row]:
        return [row for row in self.rows if not row.is_parametric]

    def row(self, row_id: str) -> Rank2Row:
        for row in self.rows:
            if row.id == row_id:
                return row
        raise KeyError(row_id)

    def split_list_rows(self) -> Dict[int, List[List[str]]]:
        """
        List rows whose finite rows fall into more than one reflection orbit.

        Rows of one list row share a Weyl groupoid, so their closures share
        triples. Returns {list_row: [orbit ids, ...]} for every violation.
        """
        parent = {row.id: row.id for row in self.finite_rows}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ids in self.finite.values():
            for other in ids[1:]:
                parent[find(other)] = find(ids[0])

        groups: Dict[int, Dict[str, List[str]]] = {}
        for row in self.finite_rows:
            if row.list_row is not None and row.id not in self.dropped:
                groups.setdefault(row.list_row, {}).setdefault(find(row.id), []).append(row.id)
        return {n: sorted(orbits.values()) for n, orbits in groups.items() if len(orbits) > 1}

    @classmethod
    def build(cls, rows: List[Rank2Row], bounds: Bounds = None, sha256: str = "") -> "Rank2Table":
        bounds = bounds or DEFAULT_BOUNDS
        table = cls(rows=rows, sha256=sha256)
        index: Dict[Triple, set] = {}
        for row in table.finite_rows:
            closure = _closure(row, bounds)
            if closure is None:
                table.dropped.append(row.id)
                logger.warning("finite row %s does not close under reflections; skipped", row.id)
                continue
            for triple in closure:
                index.setdefault(triple, set()).add(row.id)
        table.finite = {t: tuple(sorted(ids)) for t, ids in index.items()}
        logger.debug("rank-2 table: %d rows, %d finite triples", len(rows), len(table.finite))
        return table


def _closure(row: Rank2Row, bounds: Bounds) -> Optional[set]:
    triples = set()
    for triple, _, _ in row.instances(primitive_roots(row.required_order)):
        datum = explore(rank2(*triple), bounds, with_roots=True)
        if not datum.is_complete:
            return None
        for node in datum.nodes:
            v1, e, v2 = as_triple(node)
            triples.add((v1, e, v2))
            triples.add((v2, e, v1))
    return triples


@lru_cache(maxsize=4)
def load_rank2_table(data_dir: Optional[str] = None) -> Rank2Table:
    """Load, validate and close the shipped table (cached per directory)."""
    loader = AssetLoader(data_dir=data_dir)
    frame = loader.load_rank2_frame()
    return Rank2Table.build(rows_from_frame(frame), sha256=loader.metadata["rank2_table_sha256"])
