"""Lattice verdicts and the witnesses attached to negative ones."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Method(enum.Enum):
    CHARACTERIZATION = "characterization"
    BRUTE_FORCE = "brute-force"
    COMBINED = "combined"


def _label(vertices) -> str:
    vs = sorted(vertices)
    if all(0 <= v <= 9 for v in vs):
        return "".join(map(str, vs))
    return ",".join(map(str, vs))


@dataclass(frozen=True)
class IntersectionGap:
    """Two regular edges of a restriction whose intersection is not an edge."""

    interval: object
    first: object
    second: object
    missing: frozenset

    def describe(self) -> str:
        return (f"on {self.interval}: regular edges {self.first} and {self.second} "
                f"intersect in {_label(self.missing)}, which is not an edge")

    def to_json(self) -> dict:
        return {
            "type": "intersection-gap",
            "interval": [self.interval.lo, self.interval.hi],
            "edges": [sorted(self.first.vertices), sorted(self.second.vertices)],
            "missing": sorted(self.missing),
        }


@dataclass(frozen=True)
class FixlessQuadruple:
    interval: object
    quadruple: object

    def describe(self) -> str:
        return f"on {self.interval}: hugging quadruple {self.quadruple} has no fix"

    def to_json(self) -> dict:
        q = self.quadruple
        return {
            "type": "fixless-quadruple",
            "interval": [self.interval.lo, self.interval.hi],
            "quadruple": {name: sorted(e.vertices) for name, e in
                          zip(("I", "I_cyc", "J", "J_cyc"), q.members)},
        }


@dataclass(frozen=True)
class MissingBound:
    """A pair whose minimal upper (or maximal lower) bounds are not unique.

    ``candidates`` holds every minimal upper bound for ``kind == "join"`` and
    every maximal lower bound for ``kind == "meet"``.
    """

    kind: str
    first: tuple
    second: tuple
    candidates: tuple

    def describe(self) -> str:
        fmt = lambda s: "(" + ",".join(map(str, s)) + ")"
        word = "minimal upper" if self.kind == "join" else "maximal lower"
        cands = ", ".join(fmt(c) for c in self.candidates)
        return (f"{fmt(self.first)} and {fmt(self.second)} have {len(self.candidates)} "
                f"{word} bounds: {cands}")

    def to_json(self) -> dict:
        return {
            "type": f"no-{self.kind}",
            "pair": [list(self.first), list(self.second)],
            "candidates": [list(c) for c in self.candidates],
        }


@dataclass(frozen=True)
class LatticeReport:
    verdict: bool
    method: Method
    witness: object = None
    parts: tuple = field(default=())
    single_method: bool = False

    def __post_init__(self):
        if not self.verdict and self.witness is None:
            raise ValueError("a negative verdict needs a witness")

    def __bool__(self):
        return self.verdict

    def describe(self) -> str:
        head = "lattice" if self.verdict else "not a lattice"
        lines = [f"{head} ({self.method.value})"]
        if self.single_method:
            lines.append("brute-force check skipped: enumeration budget exceeded")
        for part in self.parts:
            lines.append(f"  {part.method.value}: {'lattice' if part.verdict else 'not a lattice'}")
            if part.witness is not None:
                lines.append(f"    witness {part.witness.describe()}")
        if not self.parts and self.witness is not None:
            lines.append(f"witness {self.witness.describe()}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "method": self.method.value,
            "witness": None if self.witness is None else self.witness.to_json(),
        }
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        if self.single_method:
            out["single_method"] = True
        return out
