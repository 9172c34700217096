"""Cyclic interval hypergraphs, restrictions, and the structural lattice test.

Vertices are plain integers on a ground interval ``[lo, hi]``.  Singletons are
always implicitly present and are never stored.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import EdgeShapeError, EmptyGroundError, InputError
from .report import FixlessQuadruple, IntersectionGap, LatticeReport, Method


@dataclass(frozen=True, order=True)
class GroundInterval:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1:
            raise EmptyGroundError(f"ground interval must start at 1 or later, got {self.lo}")
        if self.lo >= self.hi:
            raise EmptyGroundError(
                f"ground interval [{self.lo}, {self.hi}] needs at least two vertices"
            )

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def covers(self, other: GroundInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def subintervals(self) -> Iterator[GroundInterval]:
        """Every ``[x, y]`` with ``lo <= x < y <= hi``, lexicographically."""
        for x in range(self.lo, self.hi):
            for y in range(x + 1, self.hi + 1):
                yield GroundInterval(x, y)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


class Kind(enum.Enum):
    REGULAR = "regular"
    CYCLIC = "cyclic"


def classify(vertices: Iterable[int], ground: GroundInterval) -> Kind | None:
    """Return the shape of a vertex set on ``ground``, or None if it has neither.

    The full ground set is cyclic.  Sets with fewer than two vertices are
    rejected (None).
    """
    vs = sorted(set(vertices))
    if len(vs) < 2 or vs[0] < ground.lo or vs[-1] > ground.hi:
        return None
    gaps = [i for i in range(1, len(vs)) if vs[i] != vs[i - 1] + 1]
    if not gaps:
        if vs[0] == ground.lo and vs[-1] == ground.hi:
            return Kind.CYCLIC
        return Kind.REGULAR
    if len(gaps) == 1 and vs[0] == ground.lo and vs[-1] == ground.hi:
        return Kind.CYCLIC
    return None


def format_vertices(vertices: Iterable[int]) -> str:
    vs = sorted(vertices)
    if all(0 <= v <= 9 for v in vs):
        return "".join(map(str, vs))
    return ",".join(map(str, vs))


@dataclass(frozen=True)
class Hyperedge:
    vertices: frozenset
    kind: Kind
    ground: GroundInterval = field(compare=False, repr=False)

    @classmethod
    def make(cls, vertices: Iterable[int], ground: GroundInterval) -> Hyperedge:
        vs = frozenset(vertices)
        kind = classify(vs, ground)
        if kind is None:
            raise EdgeShapeError(
                f"{{{format_vertices(vs)}}} is neither a regular nor a cyclic interval on {ground}"
            )
        return cls(vs, kind, ground)

    @property
    def is_regular(self) -> bool:
        return self.kind is Kind.REGULAR

    @property
    def is_cyclic(self) -> bool:
        return self.kind is Kind.CYCLIC

    @property
    def minus(self) -> frozenset:
        """The piece ``[x, i]`` of a cyclic edge (``[x, y-1]`` for the full set)."""
        return self._pieces()[0]

    @property
    def plus(self) -> frozenset:
        """The piece ``[j, y]`` of a cyclic edge (``{y}`` for the full set)."""
        return self._pieces()[1]

    def _pieces(self):
        if not self.is_cyclic:
            raise ValueError(f"{self} is regular; only cyclic edges split into two pieces")
        x, y = self.ground.lo, self.ground.hi
        if len(self.vertices) == self.ground.size:
            return frozenset(range(x, y)), frozenset({y})
        i = x
        while i + 1 in self.vertices:
            i += 1
        return frozenset(range(x, i + 1)), self.vertices - frozenset(range(x, i + 1))

    def __str__(self):
        return format_vertices(self.vertices)

    def __lt__(self, other):
        return sorted(self.vertices) < sorted(other.vertices)


class _EdgeListMixin:
    ground: GroundInterval

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __len__(self):
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Edge bitmasks in local coordinates (bit ``v - ground.lo``)."""
        lo = self.ground.lo
        return tuple(sum(1 << (v - lo) for v in vs) for vs in self.vertex_sets)

    def labels(self) -> list[str]:
        return [format_vertices(vs) for vs in self.vertex_sets]

    def __str__(self):
        return "{" + ", ".join(self.labels()) + "} on " + str(self.ground)


def _clean_sets(ground: GroundInterval, raw_edges) -> list[frozenset]:
    seen = set()
    out = []
    for raw in raw_edges:
        vs = frozenset(raw)
        bad = [v for v in vs if v not in ground]
        if bad:
            raise InputError(f"vertices {sorted(bad)} lie outside {ground}")
        if len(vs) < 2 or vs in seen:
            continue
        seen.add(vs)
        out.append(vs)
    return out


@dataclass(frozen=True)
class Hypergraph(_EdgeListMixin):
    """An arbitrary hypergraph; edges are distinct vertex sets of size >= 2."""

    ground: GroundInterval
    edges: tuple

    @classmethod
    def from_sets(cls, ground: GroundInterval, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
        return cls(ground, tuple(_clean_sets(ground, raw_edges)))

    @property
    def vertex_sets(self) -> tuple:
        return self.edges


@dataclass(frozen=True)
class CyclicIntervalHypergraph(_EdgeListMixin):
    ground: GroundInterval
    edges: tuple  # of Hyperedge, in declaration order

    @cached_property
    def vertex_sets(self) -> tuple:
        return tuple(e.vertices for e in self.edges)

    @property
    def regular(self) -> list[Hyperedge]:
        return [e for e in self.edges if e.is_regular]

    @property
    def cyclic(self) -> list[Hyperedge]:
        return [e for e in self.edges if e.is_cyclic]

    def as_generic(self) -> Hypergraph:
        return Hypergraph(self.ground, self.vertex_sets)

    def __contains__(self, vertices) -> bool:
        vs = frozenset(vertices)
        return len(vs) == 1 or vs in self._index

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.vertex_sets)


def parse(ground: GroundInterval, raw_edges: Iterable[Iterable[int]]) -> CyclicIntervalHypergraph:
    """Validate raw vertex sets into a cyclic interval hypergraph.

    Singletons are dropped, duplicates merged, declaration order kept.
    """
    sets = _clean_sets(ground, raw_edges)
    return CyclicIntervalHypergraph(ground, tuple(Hyperedge.make(vs, ground) for vs in sets))


def complete_interval_hypergraph(n: int) -> CyclicIntervalHypergraph:
    """All intervals ``[i, j]`` on ``[1, n]``; the full set comes out cyclic."""
    ground = GroundInterval(1, n)
    edges = [range(i, j + 1) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return parse(ground, edges)


def cyclic_interval_edges(ground: GroundInterval) -> list[frozenset]:
    """Every distinct non-singleton cyclic-interval vertex set on ``ground``.

    Regular edges come first (by left end, then right end), then cyclic ones
    (by ``i``, then ``j``), with the full ground set last.
    """
    x, y = ground.lo, ground.hi
    out = [frozenset(range(i, j + 1)) for i in range(x, y + 1) for j in range(i + 1, y + 1)
           if (i, j) != (x, y)]
    for i in range(x, y + 1):
        for j in range(i + 2, y + 1):
            out.append(frozenset(range(j, y + 1)) | frozenset(range(x, i + 1)))
    out.append(frozenset(ground.vertices))
    return out


def complete_cyclic_interval_hypergraph(n: int) -> CyclicIntervalHypergraph:
    ground = GroundInterval(1, n)
    return parse(ground, cyclic_interval_edges(ground))


def restrict(H, D: GroundInterval):
    """Intersect every edge with ``D``; empties and singletons vanish.

    Works for both hypergraph types and returns the same type as ``H``.
    """
    if not H.ground.covers(D):
        raise ValueError(f"{D} is not inside {H.ground}")
    window = frozenset(D.vertices)
    sets = [vs & window for vs in H.vertex_sets]
    if isinstance(H, CyclicIntervalHypergraph):
        return parse(D, sets)
    return Hypergraph.from_sets(D, sets)


def reflect(H):
    """Relabel ``v -> lo + hi - v``; edge order is kept."""
    s = H.ground.lo + H.ground.hi
    sets = [frozenset(s - v for v in vs) for vs in H.vertex_sets]
    if isinstance(H, CyclicIntervalHypergraph):
        return parse(H.ground, sets)
    return Hypergraph(H.ground, tuple(sets))


def intersection_gap(H: CyclicIntervalHypergraph) -> IntersectionGap | None:
    """First pair of regular edges whose non-trivial intersection is missing."""
    present = H._index
    regs = H.regular
    for a, b in itertools.combinations(regs, 2):
        common = a.vertices & b.vertices
        if len(common) >= 2 and common not in present:
            return IntersectionGap(H.ground, a, b, common)
    return None


def regular_closed(H: CyclicIntervalHypergraph) -> bool:
    return intersection_gap(H) is None


@dataclass(frozen=True)
class HuggingQuadruple:
    I: Hyperedge
    I_cyc: Hyperedge
    J: Hyperedge
    J_cyc: Hyperedge

    @property
    def members(self) -> tuple:
        return (self.I, self.I_cyc, self.J, self.J_cyc)

    @property
    def union(self) -> frozenset:
        return self.I.vertices | self.I_cyc.vertices | self.J.vertices | self.J_cyc.vertices

    def __str__(self):
        return f"I={self.I} I_cyc={self.I_cyc} J={self.J} J_cyc={self.J_cyc}"


def hugging_quadruples(H: CyclicIntervalHypergraph) -> list[HuggingQuadruple]:
    x, y = H.ground.lo, H.ground.hi
    low, high = {x, x + 1}, {y - 1, y}
    i_reg = [e for e in H.regular if low <= e.vertices]
    i_cyc = [e for e in H.cyclic if low <= e.vertices]
    j_reg = [e for e in H.regular if high <= e.vertices]
    j_cyc = [e for e in H.cyclic if high <= e.vertices]
    out = []
    for quad in itertools.product(i_reg, i_cyc, j_reg, j_cyc):
        if len({e.vertices for e in quad}) == 4:
            out.append(HuggingQuadruple(*quad))
    return out


def find_fix(H: CyclicIntervalHypergraph, Q: HuggingQuadruple) -> Hyperedge | None:
    x, y = H.ground.lo, H.ground.hi
    need = {x + 1, y - 1}
    union = Q.union
    for e in H.edges:
        if need <= e.vertices <= union:
            return e
    return None


def has_fix(H: CyclicIntervalHypergraph, Q: HuggingQuadruple) -> bool:
    return find_fix(H, Q) is not None


def _first_violation(H: CyclicIntervalHypergraph):
    gap = intersection_gap(H)
    if gap is not None:
        return gap
    for quad in hugging_quadruples(H):
        if find_fix(H, quad) is None:
            return FixlessQuadruple(H.ground, quad)
    return None


def satisfies_characterization(H: CyclicIntervalHypergraph) -> LatticeReport:
    """Structural lattice test over every restriction to a sub-interval.

    Sub-intervals are scanned lexicographically; the first violation found is
    the witness.
    """
    for D in H.ground.subintervals():
        witness = _first_violation(restrict(H, D))
        if witness is not None:
            return LatticeReport(False, Method.CHARACTERIZATION, witness)
    return LatticeReport(True, Method.CHARACTERIZATION)


def as_sets(edges: Sequence) -> list[frozenset]:
    return [e.vertices if isinstance(e, Hyperedge) else frozenset(e) for e in edges]
