"""The source sequence poset: order, Hasse diagram, brute-force joins and meets."""

from __future__ import annotations

from functools import cached_property

import networkx as nx
import numpy as np

from . import _kernels
from .errors import BudgetExceeded, InternalDisagreement, MismatchedHypergraph
from .hypergraph import restrict
from .orientation import (
    DEFAULT_BUDGET,
    Orientation,
    as_orientation,
    enumerate_acyclic,
    orientation_from_permutation,
    permutation_for,
)
from .report import LatticeReport, Method, MissingBound

MAX_ELEMENTS = 2 ** 14


def leq(A, B, H=None) -> bool:
    """Componentwise comparison of two source sequences of the same hypergraph."""
    A, B = as_orientation(A), as_orientation(B)
    if len(A) != len(B) or (H is not None and len(A) != H.n_edges):
        raise MismatchedHypergraph(f"{A} and {B} do not orient the same hypergraph")
    return all(a <= b for a, b in zip(A, B))


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class SourcePoset:
    """All acyclic orientations of a hypergraph under the componentwise order.

    Elements are indexed along a linear extension (sum of sources, then the
    sequence itself), so ``i < j`` whenever element ``i`` is strictly below
    element ``j``.  ``up[i]`` and ``down[i]`` are bitset rows.
    """

    def __init__(self, hypergraph, elements, backend=None):
        self.hypergraph = hypergraph
        self.backend = backend or _kernels.active
        self.elements = sorted(elements, key=lambda A: (sum(A), A.sources))
        self.index = {A: i for i, A in enumerate(self.elements)}
        m = hypergraph.n_edges
        self.sources = np.array([A.sources for A in self.elements],
                                dtype=np.int64).reshape(len(self.elements), m)
        self.up = self.backend.up_rows(self.sources)
        self.down = self.backend.up_rows(-self.sources)
        g = hypergraph.ground
        self.bottom = self.index[orientation_from_permutation(hypergraph, g.vertices)]
        self.top = self.index[orientation_from_permutation(hypergraph, reversed(g.vertices))]
        full = (1 << len(self)) - 1
        if self.up_ints[self.bottom] != full or self.down_ints[self.top] != full:
            raise InternalDisagreement("the all-min / all-max orientations are not extreme")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def up_ints(self) -> list[int]:
        return [int.from_bytes(r.tobytes(), "little") for r in self.up]

    @cached_property
    def down_ints(self) -> list[int]:
        return [int.from_bytes(r.tobytes(), "little") for r in self.down]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up_ints[i] >> j & 1)

    def position(self, A) -> int:
        try:
            return self.index[as_orientation(A)]
        except KeyError:
            raise KeyError(f"{A} is not an acyclic orientation of {self.hypergraph}") from None

    def interval(self, i: int, j: int) -> list[int]:
        return list(_bits(self.up_ints[i] & self.down_ints[j]))

    def minimal_elements(self, mask: int) -> list[int]:
        return [c for c in _bits(mask) if self.down_ints[c] & mask == 1 << c]

    def maximal_elements(self, mask: int) -> list[int]:
        return [c for c in _bits(mask) if self.up_ints[c] & mask == 1 << c]


def build_poset(H, budget: int = DEFAULT_BUDGET, strategy: str = "backtrack",
                max_elements: int = MAX_ELEMENTS, backend=None) -> SourcePoset:
    elements = enumerate_acyclic(H, strategy=strategy, budget=budget, backend=backend)
    if len(elements) > max_elements:
        raise BudgetExceeded(f"{len(elements)} orientations exceed the limit of {max_elements}")
    return SourcePoset(H, elements, backend=backend)


def hasse(P: SourcePoset) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)``: ``j`` covers ``i``."""
    return sorted(P.backend.cover_pairs(P.up, P.down))


def _bound(P: SourcePoset, A, B, kind: str):
    a, b = P.position(A), P.position(B)
    if kind == "join":
        found = P.minimal_elements(P.up_ints[a] & P.up_ints[b])
    else:
        found = P.maximal_elements(P.down_ints[a] & P.down_ints[b])
    if len(found) == 1:
        return P.elements[found[0]]
    return MissingBound(kind, P.elements[a].sources, P.elements[b].sources,
                        tuple(P.elements[c].sources for c in found))


def brute_join(P: SourcePoset, A, B):
    """The unique minimal upper bound, or a MissingBound listing all of them."""
    return _bound(P, A, B, "join")


def brute_meet(P: SourcePoset, A, B):
    return _bound(P, A, B, "meet")


def join_table(P: SourcePoset) -> np.ndarray:
    """``T[a, b]`` is the index of the join of elements ``a`` and ``b``, or -1."""
    return P.backend.bound_table(P.up, False)


def meet_table(P: SourcePoset) -> np.ndarray:
    return P.backend.bound_table(P.down, True)


def is_lattice_bruteforce(P: SourcePoset) -> LatticeReport:
    """Every pair must have a unique minimal upper and a unique maximal lower bound."""
    for kind, rows, highest, oracle in (("join", P.up, False, brute_join),
                                        ("meet", P.down, True, brute_meet)):
        pair = P.backend.first_missing_bound(rows, highest)
        if pair is not None:
            a, b = (P.elements[i] for i in pair)
            witness = oracle(P, a, b)
            if not isinstance(witness, MissingBound):
                raise InternalDisagreement(f"kernel and oracle disagree on the {kind} of {a}, {b}")
            return LatticeReport(False, Method.BRUTE_FORCE, witness)
    return LatticeReport(True, Method.BRUTE_FORCE)


def reflect_orientation(H, A) -> Orientation:
    s = H.ground.lo + H.ground.hi
    return Orientation(s - v for v in as_orientation(A))


def embed_restriction(H, D, budget: int = DEFAULT_BUDGET):
    """Map each orientation of ``H|_D`` into ``P_H`` through ``pi_A`` followed by
    the rest of the ground set in ascending order.

    Returns ``(P_D, P_H, image)`` with ``image[i]`` the index in ``P_H`` of the
    image of element ``i`` of ``P_D``.
    """
    HD = restrict(H, D)
    PD = build_poset(HD, budget=budget)
    PH = build_poset(H, budget=budget)
    tail = [v for v in H.ground.vertices if v not in D]
    image = []
    for A in PD.elements:
        pi = list(permutation_for(HD, A)) + tail
        image.append(PH.position(orientation_from_permutation(H, pi)))
    return PD, PH, image


def _is_interval_image(PD, PH, image) -> bool:
    if len(set(image)) != len(image):
        return False
    for i in range(len(PD)):
        for j in range(len(PD)):
            if PD.leq(i, j) != PH.leq(image[i], image[j]):
                return False
    return set(PH.interval(image[PD.bottom], image[PD.top])) == set(image)


def _hasse_graph(P, members) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(members)
    inside = set(members)
    for i in members:
        for j in members:
            if i != j and P.leq(i, j):
                # j covers i inside the sub-poset
                if not any(P.leq(i, z) and P.leq(z, j) for z in inside - {i, j}):
                    g.add_edge(i, j)
    return g


def _search_interval(PD, PH) -> bool:
    target = _hasse_graph(PD, list(range(len(PD))))
    size = len(PD)
    for a in range(len(PH)):
        for c in _bits(PH.up_ints[a]):
            members = PH.interval(a, c)
            if len(members) != size:
                continue
            candidate = _hasse_graph(PH, members)
            if nx.is_isomorphic(candidate, target):
                return True
    return False


def restriction_embedding_check(H, D, budget: int = DEFAULT_BUDGET) -> bool:
    """Is ``P_{H|_D}`` isomorphic to an interval of ``P_H``?

    The canonical embedding is tried first; if its image is not an interval,
    every interval of matching size is tested for isomorphism.
    """
    PD, PH, image = embed_restriction(H, D, budget=budget)
    if _is_interval_image(PD, PH, image):
        return True
    return _search_interval(PD, PH)
