"""Orientations of hypergraphs: acyclicity, the permutation surjection, enumeration."""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .errors import BudgetExceeded, CycleError, InvalidSource, NotAPermutation

DEFAULT_BUDGET = 9


@dataclass(frozen=True, order=True)
class Orientation:
    """Source sequence: ``sources[i]`` is the source of edge ``i``."""

    sources: tuple

    def __init__(self, sources: Iterable[int]):
        object.__setattr__(self, "sources", tuple(int(s) for s in sources))

    def __len__(self):
        return len(self.sources)

    def __iter__(self):
        return iter(self.sources)

    def __getitem__(self, i):
        return self.sources[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.sources)) + ")"

    def to_json(self) -> list:
        return list(self.sources)


def as_orientation(A) -> Orientation:
    return A if isinstance(A, Orientation) else Orientation(A)


def check_valid(H, A) -> Orientation:
    """Raise InvalidSource unless ``A`` picks one vertex inside each edge of ``H``."""
    A = as_orientation(A)
    sets = H.vertex_sets
    if len(A) != len(sets):
        raise InvalidSource(f"orientation has {len(A)} sources but the hypergraph has {len(sets)} edges")
    for i, (s, vs) in enumerate(zip(A, sets)):
        if s not in vs:
            raise InvalidSource(f"source {s} of edge {i} is not in the edge {sorted(vs)}")
    return A


def orientation_digraph(H, A) -> list[list[int]]:
    """Edge-indexed digraph: ``p -> q`` iff ``A(q)`` is a non-source vertex of edge ``p``."""
    sets = H.vertex_sets
    out = [[] for _ in sets]
    for p, vs in enumerate(sets):
        for q, s in enumerate(A):
            if s != A[p] and s in vs:
                out[p].append(q)
    return out


def find_cycle(H, A) -> tuple | None:
    """A directed cycle of edge indices, or None when ``A`` is acyclic."""
    A = check_valid(H, A)
    adj = orientation_digraph(H, A)
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * len(adj)
    parent = [-1] * len(adj)
    for root in range(len(adj)):
        if color[root] != WHITE:
            continue
        color[root] = GREY
        stack = [(root, iter(adj[root]))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if color[nxt] == WHITE:
                    color[nxt] = GREY
                    parent[nxt] = node
                    stack.append((nxt, iter(adj[nxt])))
                    break
                if color[nxt] == GREY:
                    cycle = [node]
                    while cycle[-1] != nxt:
                        cycle.append(parent[cycle[-1]])
                    return tuple(reversed(cycle))
            else:
                color[node] = BLACK
                stack.pop()
    return None


def is_acyclic(H, A) -> bool:
    return find_cycle(H, A) is None


def require_acyclic(H, A, error=CycleError, what="orientation") -> Orientation:
    A = check_valid(H, A)
    cycle = find_cycle(H, A)
    if cycle is not None:
        raise error(f"{what} {A} is cyclic", cycle)
    return A


def _check_permutation(H, perm) -> tuple:
    perm = tuple(perm)
    if sorted(perm) != list(H.ground.vertices):
        raise NotAPermutation(f"{perm} is not a permutation of {H.ground}")
    return perm


def orientation_from_permutation(H, perm: Sequence[int]) -> Orientation:
    """Each edge's source is the first vertex of ``perm`` that lies in the edge."""
    perm = _check_permutation(H, perm)
    rank = {v: i for i, v in enumerate(perm)}
    return Orientation(min(vs, key=rank.__getitem__) for vs in H.vertex_sets)


def permutation_for(H, A) -> tuple:
    """A permutation ``pi`` with ``orientation_from_permutation(H, pi) == A``.

    Any linear extension of "each source precedes the rest of its edge" works.
    """
    A = require_acyclic(H, A)
    sorter = graphlib.TopologicalSorter({v: set() for v in H.ground.vertices})
    for s, vs in zip(A, H.vertex_sets):
        for v in vs:
            if v != s:
                sorter.add(v, s)
    return tuple(sorter.static_order())


def _check_budget(H, budget):
    if H.ground.size > budget:
        raise BudgetExceeded(
            f"enumeration over {H.ground.size} vertices exceeds the budget of {budget}"
        )
    if H.ground.size > _kernels.MAX_VERTICES:
        raise BudgetExceeded(f"kernels handle at most {_kernels.MAX_VERTICES} vertices")


def enumerate_acyclic(H, strategy: str = "backtrack", budget: int = DEFAULT_BUDGET,
                      backend=None) -> list[Orientation]:
    """All acyclic orientations of ``H``, sorted by source sequence.

    ``strategy="permutations"`` takes the image of every permutation;
    ``strategy="backtrack"`` chooses sources edge by edge and prunes cycles.
    The two must agree.
    """
    _check_budget(H, budget)
    kern = backend or _kernels.active
    lo, n = H.ground.lo, H.ground.size
    if strategy == "backtrack":
        raw = kern.backtrack_acyclic(H.masks, n)
    elif strategy == "permutations":
        raw = kern.permutation_image(H.masks, n)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return [Orientation(s + lo for s in row) for row in raw]
