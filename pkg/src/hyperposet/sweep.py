"""Exhaustive cross-check of the structural lattice test against brute force.

Every subset of the distinct cyclic-interval edges on ``[1, n]`` is one
hypergraph; subset ``s`` keeps edge ``i`` when bit ``i`` of ``s`` is set.
"""

from __future__ import annotations

import logging
import multiprocessing
import time
from dataclasses import dataclass, field

from .hypergraph import GroundInterval, cyclic_interval_edges, parse, satisfies_characterization
from .orientation import enumerate_acyclic, is_acyclic
from .poset import build_poset, is_lattice_bruteforce

log = logging.getLogger(__name__)

HARD_CAP = 5
CHUNK = 1024


def sweep_edges(n: int) -> list[frozenset]:
    return cyclic_interval_edges(GroundInterval(1, n))


def subset_hypergraph(n: int, subset: int, edges=None):
    edges = edges if edges is not None else sweep_edges(n)
    return parse(GroundInterval(1, n), [e for i, e in enumerate(edges) if subset >> i & 1])


@dataclass
class Disagreement:
    subset: int
    kind: str
    detail: str
    edges: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"subset": self.subset, "kind": self.kind, "detail": self.detail,
                "edges": self.edges}


@dataclass
class SweepResult:
    n: int
    total: int = 0
    lattices: int = 0
    non_lattices: int = 0
    orientations: int = 0
    disagreements: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "total": self.total,
            "lattices": self.lattices,
            "non_lattices": self.non_lattices,
            "orientations": self.orientations,
            "disagreements": [d.to_json() for d in self.disagreements],
            "seconds": round(self.seconds, 3),
        }

    def summary(self) -> str:
        return (f"n={self.n}: {self.total} hypergraphs checked, {self.lattices} lattices, "
                f"{self.non_lattices} non-lattices, {len(self.disagreements)} disagreements "
                f"({self.seconds:.2f}s)")


def check_subset(n: int, subset: int, edges, cross_check: bool):
    """Return ``(is_lattice, n_orientations, disagreements)`` for one hypergraph."""
    H = subset_hypergraph(n, subset, edges)
    found = []
    structural = satisfies_characterization(H)
    P = build_poset(H)
    brute = is_lattice_bruteforce(P)
    if structural.verdict != brute.verdict:
        found.append(("verdict", f"structural={structural.verdict} brute-force={brute.verdict}"))
    if cross_check:
        image = enumerate_acyclic(H, strategy="permutations")
        if image != sorted(P.elements):
            found.append(("enumeration", f"{len(image)} permutation images vs "
                                         f"{len(P)} backtracked orientations"))
        cyclic = [A for A in image if not is_acyclic(H, A)]
        if cyclic:
            found.append(("acyclicity", f"permutation image {cyclic[0]} is cyclic"))
    out = [Disagreement(subset, kind, detail, [sorted(vs) for vs in H.vertex_sets])
           for kind, detail in found]
    return structural.verdict, len(P), out


def _run_chunk(args):
    n, start, stop, cross_check = args
    edges = sweep_edges(n)
    lattices = orientations = 0
    bad = []
    for subset in range(start, stop):
        verdict, count, found = check_subset(n, subset, edges, cross_check)
        lattices += verdict
        orientations += count
        bad.extend(found)
    return start, stop, lattices, orientations, bad


def verify(n: int, parallel: int = 1, cross_check: bool = False, cap: int = HARD_CAP,
           chunk: int = CHUNK) -> SweepResult:
    """Check every cyclic interval hypergraph on ``[1, n]``.

    Results are merged in subset order, so the outcome does not depend on
    ``parallel``.
    """
    if not 2 <= n <= cap:
        raise ValueError(f"sweep size must satisfy 2 <= n <= {cap}, got {n}")
    total = 1 << len(sweep_edges(n))
    jobs = [(n, lo, min(lo + chunk, total), cross_check) for lo in range(0, total, chunk)]
    result = SweepResult(n)
    t0 = time.perf_counter()
    if parallel > 1:
        with multiprocessing.get_context("fork").Pool(parallel) as pool:
            parts = pool.imap(_run_chunk, jobs)
            _merge(result, parts)
    else:
        _merge(result, map(_run_chunk, jobs))
    result.seconds = time.perf_counter() - t0
    return result


def _merge(result, parts):
    for start, stop, lattices, orientations, bad in parts:
        result.total += stop - start
        result.lattices += lattices
        result.non_lattices += (stop - start) - lattices
        result.orientations += orientations
        result.disagreements.extend(bad)
        log.debug("subsets %d..%d done", start, stop)
