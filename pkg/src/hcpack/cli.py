"""Command-line surface: generate, pack, verify, oracle, render.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 construction or packing failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .cycles import HamCycle, verify_packing
from .errors import (
    ConstructionFailed,
    DegenerateInput,
    HcpackError,
    InvalidN,
    MarchFailed,
    NoJoinFound,
    PackingIncomplete,
    TooLarge,
)
from .general import pack_general_detailed
from .geometry import Config, PointSet, oracle_for
from .instances import InstanceFile, PackingFile, generate
from .oracle import max_packing_exact
from .render import render_svg
from .structured import pack_convex, pack_wheel

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_CONSTRUCT = 3


def _load_instance(path: str) -> tuple[InstanceFile, PointSet]:
    inst = InstanceFile.load(path)
    try:
        ps = inst.to_point_set()
    except HcpackError as exc:
        raise DegenerateInput(f"{path}: {exc}") from exc
    return inst, ps


def _relabel_wheel(cycles, ps: PointSet) -> List[List[int]]:
    """Map sentinel labels (rim 0..m-1 ccw, center last) to file indices."""
    rim = ps.rim_order()
    mapping = rim + [ps.center_index]
    return [[mapping[v] for v in c.order] for c in cycles]


def cmd_generate(args) -> int:
    try:
        inst = generate(Config(args.config), args.n, args.seed)
    except (InvalidN, DegenerateInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    inst.save(args.out)
    print(f"wrote {args.out} ({args.config}, n={args.n})")
    return EXIT_OK


def cmd_pack(args) -> int:
    try:
        inst, ps = _load_instance(getattr(args, "in"))
    except DegenerateInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    n = len(ps)
    removed: List[List[tuple[int, int]]] = []
    try:
        if ps.config is Config.CONVEX:
            cycles = [list(c.order) for c in pack_convex(n).cycles]
        elif ps.config is Config.WHEEL:
            packing = pack_wheel(n)
            cycles = _relabel_wheel(packing.cycles, ps)
        else:
            result = pack_general_detailed(ps)
            cycles = [list(c.order) for c in result.packing.cycles]
            removed = [[] for _ in cycles]
            for ci, moves in enumerate(result.join_log):
                for mv in moves:
                    removed[ci].extend(mv.removed_edges())
    except (ConstructionFailed, InvalidN, MarchFailed, NoJoinFound) as exc:
        print(f"packing failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT
    except PackingIncomplete as exc:
        print(
            f"packing incomplete at level {exc.level}: {exc} "
            f"({len(exc.cycles)} cycles found)",
            file=sys.stderr,
        )
        return EXIT_CONSTRUCT
    pf = PackingFile(instance_hash=inst.digest(), cycles=cycles, removed_edges=removed)
    pf.save(args.out)
    print(f"wrote {args.out} ({len(cycles)} cycles)")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst, ps = _load_instance(args.instance)
        pf = PackingFile.load(args.packing)
    except DegenerateInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    n = len(ps)
    report: dict = {"n": n, "config": ps.config.value, "cycle_count": len(pf.cycles)}
    if pf.instance_hash != inst.digest():
        report["hash_match"] = False
        report["ok"] = False
        _emit_verify(report, args.json)
        return EXIT_VERIFY
    report["hash_match"] = True
    try:
        cycles = [HamCycle(tuple(c)) for c in pf.cycles]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if any(not all(0 <= v < n for v in c.order) for c in cycles):
        print("error: cycle references an index out of range", file=sys.stderr)
        return EXIT_INPUT
    report.update(verify_packing(cycles, n, oracle_for(ps)))
    _emit_verify(report, args.json)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def _emit_verify(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    print(f"instance: n={report['n']} config={report['config']}")
    if not report.get("hash_match", True):
        print("FAIL: packing digest does not match this instance")
        return
    for i, rc in enumerate(report["cycles"]):
        status = "ok" if rc["hamiltonian"] and rc["one_plane"] else "FAIL"
        print(
            f"  cycle {i}: hamiltonian={rc['hamiltonian']} "
            f"max_crossings={rc['max_crossings']} [{status}]"
        )
    print(f"  pairwise edge-disjoint: {report['all_disjoint']}")
    print("PASS" if report["ok"] else "FAIL")


def cmd_oracle(args) -> int:
    try:
        _inst, ps = _load_instance(getattr(args, "in"))
    except DegenerateInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    cap = args.max_n
    if cap is None:
        cap = int(os.environ.get("HCP_MAX_ORACLE_N", 8))
    try:
        rep = max_packing_exact(ps, max_n=cap)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(
        json.dumps(
            {
                "n": rep.n,
                "total_ham_cycles": rep.total_ham_cycles,
                "one_plane_count": rep.one_plane_count,
                "max_packing_size": rep.max_packing_size,
                "witness": [list(c.order) for c in rep.witness.cycles],
            },
            indent=2,
        )
    )
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        inst, ps = _load_instance(args.instance)
        pf = PackingFile.load(args.packing)
    except DegenerateInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if pf.instance_hash != inst.digest():
        print("error: packing digest does not match this instance", file=sys.stderr)
        return EXIT_INPUT
    cycles = [HamCycle(tuple(c)) for c in pf.cycles]
    svg = render_svg(ps, cycles, pf.removed_edges or None)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hcpack",
        description="Pack and verify edge-disjoint 1-plane Hamiltonian cycles.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a point-set instance file")
    g.add_argument("--config", choices=[c.value for c in Config], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    k = sub.add_parser("pack", help="construct a packing for an instance")
    k.add_argument("--in", required=True)
    k.add_argument("--out", required=True)
    k.set_defaults(func=cmd_pack)

    v = sub.add_parser("verify", help="verify a packing against its instance")
    v.add_argument("--instance", required=True)
    v.add_argument("--packing", required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive packing bound at small n")
    o.add_argument("--in", required=True)
    o.add_argument("--max-n", type=int, default=None,
                   help="exhaustive cap (default 8, or HCP_MAX_ORACLE_N)")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("render", help="draw a packing as SVG")
    r.add_argument("--instance", required=True)
    r.add_argument("--packing", required=True)
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
