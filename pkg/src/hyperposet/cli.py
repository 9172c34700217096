"""Command-line front end.

Exit codes: 0 success or lattice, 1 not a lattice (or no join/meet),
2 input error, 3 internal disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import io
from .errors import (
    BudgetExceeded,
    CycleError,
    InputError,
    InputOrientationCyclic,
    InternalDisagreement,
)
from .hypergraph import GroundInterval, restrict
from .lattice import OrientationFamily, lattice_verdict, pseudo_join, pseudo_meet
from .orientation import DEFAULT_BUDGET, enumerate_acyclic
from .poset import build_poset, hasse
from .sweep import HARD_CAP, verify

EXIT_OK, EXIT_NOT_LATTICE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    output: str = "text"
    budget: int = DEFAULT_BUDGET
    parallel: int = 1
    n: int | None = None
    cap: int = HARD_CAP

    def __post_init__(self):
        if self.budget < 1:
            raise InputError("--budget must be at least 1")
        if self.parallel < 1:
            raise InputError("--parallel must be at least 1")
        if self.n is not None and not 2 <= self.n <= self.cap:
            raise InputError(f"--n must lie in [2, {self.cap}]")

    @classmethod
    def from_args(cls, args) -> RunConfig:
        output = getattr(args, "format", None) or ("json" if getattr(args, "json", False) else "text")
        return cls(
            command=args.command,
            inputs=[args.file] if getattr(args, "file", None) else [],
            output=output,
            budget=getattr(args, "budget", DEFAULT_BUDGET),
            parallel=getattr(args, "parallel", 1),
            n=getattr(args, "n", None),
            cap=getattr(args, "max_n", HARD_CAP),
        )


def _emit(obj, text, cfg):
    if cfg.output == "json":
        if isinstance(obj, dict):
            obj = {"schema": io.SCHEMA, **obj}
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_check(args, cfg):
    H = io.load(args.file)
    report = lattice_verdict(H, budget=cfg.budget)
    _emit(report.to_json(), report.describe(), cfg)
    return EXIT_OK if report.verdict else EXIT_NOT_LATTICE


def _bound_command(args, cfg, op):
    H = io.load(args.file)
    if len(args.orient) < 2:
        raise InputError("give at least two --orient sequences")
    members = [io.parse_orientation(s, H) for s in args.orient]
    family = OrientationFamily(H, members)
    try:
        X = op(family)
    except CycleError as exc:
        labels = H.labels()
        cycle = [labels[i] for i in exc.cycle]
        _emit({"result": None, "error": type(exc).__name__, "cycle": cycle},
              f"{type(exc).__name__}: cycle through edges {' -> '.join(cycle + cycle[:1])}", cfg)
        return EXIT_NOT_LATTICE
    _emit({"result": list(X.sources)}, ",".join(map(str, X.sources)), cfg)
    return EXIT_OK


def cmd_join(args, cfg):
    return _bound_command(args, cfg, pseudo_join)


def cmd_meet(args, cfg):
    return _bound_command(args, cfg, pseudo_meet)


def cmd_hasse(args, cfg):
    H = io.load(args.file, generic=args.generic)
    P = build_poset(H, budget=cfg.budget)
    covers = hasse(P)
    if cfg.output == "json":
        print(json.dumps(io.hasse_json(P, covers), indent=2))
    else:
        sys.stdout.write(io.hasse_dot(P, covers))
    return EXIT_OK


def cmd_orientations(args, cfg):
    H = io.load(args.file, generic=args.generic)
    found = enumerate_acyclic(H, budget=cfg.budget)
    if args.list:
        rows = [list(A.sources) for A in found]
        _emit({"count": len(rows), "orientations": rows},
              "\n".join(",".join(map(str, r)) for r in rows), cfg)
    else:
        _emit({"count": len(found)}, str(len(found)), cfg)
    return EXIT_OK


def cmd_restrict(args, cfg):
    H = io.load(args.file, generic=args.generic)
    D = GroundInterval(*args.interval)
    if not H.ground.covers(D):
        raise InputError(f"{D} is not inside {H.ground}")
    R = restrict(H, D)
    if cfg.output == "json":
        print(json.dumps(io.to_json(R)))
    else:
        sys.stdout.write(io.dumps_text(R))
    return EXIT_OK


def cmd_verify(args, cfg):
    result = verify(cfg.n, parallel=cfg.parallel, cross_check=args.cross_check, cap=cfg.cap)
    if cfg.output == "json":
        print(json.dumps(result.to_json(), indent=2))
    else:
        print(result.summary())
        for d in result.disagreements:
            print(f"DISAGREEMENT subset {d.subset} ({d.kind}): {d.detail}; edges {d.edges}")
    return EXIT_OK if result.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperposet",
        description="Lattice checks, joins and meets for cyclic interval hypergraphic posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file=True):
        if file:
            p.add_argument("file", help="hypergraph file (text or JSON)")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="largest ground set to enumerate (default %(default)s)")
        p.add_argument("--parallel", type=int, default=1, help="worker processes")
        return p

    common(sub.add_parser("check", help="decide whether the poset is a lattice"))
    for name in ("join", "meet"):
        p = common(sub.add_parser(name, help=f"pseudo-{name} of several orientations"))
        p.add_argument("--orient", action="append", default=[], metavar="SEQ",
                       help="source sequence in file edge order (repeat)")
    p = common(sub.add_parser("hasse", help="export the Hasse diagram"))
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--generic", action="store_true", help="accept arbitrary hyperedges")
    p = common(sub.add_parser("orientations", help="count or list acyclic orientations"))
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", default=True)
    group.add_argument("--list", action="store_true")
    p.add_argument("--generic", action="store_true", help="accept arbitrary hyperedges")
    p = common(sub.add_parser("restrict", help="restrict to a sub-interval"))
    p.add_argument("--interval", type=int, nargs=2, required=True, metavar=("X", "Y"))
    p.add_argument("--generic", action="store_true", help="accept arbitrary hyperedges")
    p = common(sub.add_parser("verify", help="exhaustive sweep comparing both lattice tests"), file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=HARD_CAP, help="hard cap on --n")
    p.add_argument("--cross-check", action="store_true",
                   help="also compare both enumeration strategies")
    return parser


COMMANDS = {
    "check": cmd_check,
    "join": cmd_join,
    "meet": cmd_meet,
    "hasse": cmd_hasse,
    "orientations": cmd_orientations,
    "restrict": cmd_restrict,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](args, cfg)
    except InputOrientationCyclic as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalDisagreement as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
