"""``norbit`` command line. Exit codes: 0 ok, 1 usage or validation error,
2 a verification found a discrepancy."""
from __future__ import annotations

import argparse
import importlib
import json
import os
import sys
from fractions import Fraction

# the package re-exports a function named infchar, so fetch the module itself
ic = importlib.import_module("norbit.infchar")
from . import orbits as ob
from .partitions import Partition, PartitionError, is_valid, type_size
from .weights import WeightError, branch_to_levi, root_system, weyl_dim

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text if text is not None else json.dumps(obj, indent=2))


def _orbit_from(args) -> ob.OrbitDescriptor:
    return ob.parse_orbit(args.type, args.rank, args.partition, args.label)


def _frac_list(text: str) -> tuple:
    try:
        return tuple(Fraction(x.strip()) for x in text.strip("()[] ").split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse weight {text!r}") from None


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NORBIT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"NORBIT_SEED must be an integer, got {env!r}") from None


# subcommands ---------------------------------------------------------------


def cmd_validate(args):
    p = Partition.parse(args.partition)
    ok = is_valid(args.type, args.rank, p)
    if ok and ob.is_very_even(args.type, p) and args.label is None:
        msg = "valid (very even: pass --label I or II to name an orbit)"
    else:
        msg = "valid" if ok else f"invalid: not a type {args.type} partition of {type_size(args.type, args.rank)}"
    _emit({"type": args.type, "rank": args.rank, "partition": list(p), "valid": ok}, args.format, msg)
    return EXIT_OK if ok else EXIT_USAGE


def _info(o, mode):
    d = {
        "orbit": o.to_json(),
        "special": ob.is_special(o),
        "even": ob.is_even(o),
        "dynkin_h": list(ob.dynkin_h(o)),
        "simple_root_labels": list(ob.simple_root_labels(o.type, ob.dynkin_h(o))),
        "component_group_order": ob.component_group_order(o),
        "stably_trivial": ob.is_stably_trivial(o, mode),
        "stably_trivial_mode": mode,
        "triangular": ob.is_triangular(o),
        "bv_dual": ob.bv_dual(o).to_json(),
        "infchar": ic.infchar(o).to_json(),
    }
    if o.type == "D":
        d["stably_trivial_parity_parallel"] = ob.is_stably_trivial(o, "parity-parallel")
    if d["triangular"]:
        d["triangular_levi"] = ob.triangular_levi(o).to_json()
    try:
        d["cuspidal"] = ob.is_cuspidal(o)
    except ob.BoundExceeded:
        d["cuspidal"] = None
    return d


def cmd_orbit_info(args):
    o = _orbit_from(args)
    d = _info(o, args.mode)
    lines = [f"{k}: {v}" for k, v in d.items() if k != "orbit"]
    _emit(d, args.format, "\n".join([str(o)] + lines))
    return EXIT_OK


def cmd_orbit_list(args):
    orbs = ob.enumerate_orbits(args.type, args.rank)
    _emit([o.to_json() for o in orbs], args.format, "\n".join(str(o) for o in orbs))
    return EXIT_OK


def _dot_id(o):
    return f'"{o}"'


def cmd_hasse(args):
    nodes = ob.enumerate_orbits(args.type, args.rank)
    edges = ob.hasse_edges(args.type, args.rank)
    if args.format == "dot":
        out = [f"digraph hasse_{args.type}{args.rank} {{"]
        out += [f"  {_dot_id(o)};" for o in nodes]
        out += [f"  {_dot_id(a)} -> {_dot_id(b)};" for a, b in edges]
        out.append("}")
        print("\n".join(out))
        return EXIT_OK
    obj = {"nodes": [o.to_json() for o in nodes], "edges": [[a.to_json(), b.to_json()] for a, b in edges]}
    _emit(obj, args.format, "\n".join(f"{a} > {b}" for a, b in edges))
    return EXIT_OK


def cmd_infchar(args):
    o = _orbit_from(args)
    if args.rule == "recipe":
        lam = ic.recipe_infchar(o, args.pairing_mode)
    elif args.rule == "even-dual":
        lam = ic.even_dual_infchar(o)
    elif args.rule == "triangular":
        lam = ic.triangular_infchar(o)
    else:
        lam = ic.infchar(o, args.pairing_mode, args.precedence)
    d = lam.to_json(with_trace=args.explain)
    text = f"{o}: {lam} [{lam.rule}]"
    if args.explain:
        text += "\n" + json.dumps(lam.trace, indent=2)
    _emit(d, args.format, text)
    return EXIT_OK


def _blocks(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse blocks {text!r}") from None


def _base_for(t, text, label=None):
    if t == "A":
        return None
    p = Partition.parse(text)
    r = (p.size - 1) // 2 if t == "B" else p.size // 2
    return ob.orbit(t, r, p, label)


def cmd_induce(args):
    base = _base_for(args.type, args.base, args.base_label)
    if args.gl_orbits:
        gl = [Partition.parse(s) for s in args.gl_orbits.split(";")]
        res = ob.induce_general(args.type, args.rank, base, gl, args.levi_label)
    else:
        res = ob.induce(args.type, args.rank, base, _blocks(args.blocks or ""), args.levi_label)
    _emit(res.to_json(), args.format, str(res))
    return EXIT_OK


def cmd_complete(args):
    o = _orbit_from(args)
    c = ob.complete_to_triangular(o, args.bound, args.mode)
    if c.found:
        text = f"{o}: blocks {list(c.blocks)} give triangular {c.orbit}"
    else:
        text = f"{o}: no triangular completion with block total <= {c.bound} ({c.searched} multisets tried)"
    _emit(c.to_json(), args.format, text)
    return EXIT_OK


def cmd_bvdual(args):
    o = _orbit_from(args)
    d = ob.bv_dual(o)
    _emit(d.to_json(), args.format, str(d))
    return EXIT_OK


def cmd_branch(args):
    rs = root_system(args.type, args.rank)
    lam = _frac_list(args.weight)
    levi = ob.LeviShape(tuple(_blocks(args.levi)), args.residual)
    comps = branch_to_levi(rs, lam, levi, args.bound)
    obj = {
        "highest_weight": [str(x) for x in lam],
        "dimension": weyl_dim(rs, lam),
        "levi": levi.to_json(),
        "components": [{"weight": [str(x) for x in w], "multiplicity": m} for w, m in comps],
    }
    text = "\n".join(f"({', '.join(map(str, w))}) x{m}" for w, m in comps)
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_verify(args):
    from . import verify as vf

    cfg = None
    if args.check in ("hilbert", "richardson", "prop55"):
        cfg = vf.OracleConfig(
            degree=args.degree, sample_count=args.samples, tolerance=args.tolerance, seed=_seed(args)
        )
    if args.check == "hilbert":
        o = ob.parse_orbit(args.type, args.rank, args.partition or "", args.label)
        dims = [vf.hilbert_oracle(o, d, cfg) for d in range(args.degree + 1)]
        rep = vf.Report(f"hilbert/{o}", "pass", None, {"dimensions": dims, "seed": cfg.seed})
    elif args.check == "richardson":
        o = ob.parse_orbit(args.type, args.rank, args.partition or "", args.label)
        rep = vf.check_richardson_typeA(o, args.weight_bound, cfg)
    elif args.check == "prop55":
        gl = tuple(tuple(Partition.parse(s)) for s in (args.gl_orbits or "").split(";") if s)
        base = _base_for(args.type, args.base or ("1" if args.type == "B" else ""))
        data = vf.InductionData(args.type, args.rank, gl, base)
        rep = vf.check_prop55(data, args.weight_bound, cfg)
    elif args.check == "stages":
        rep = vf.check_stage_independence(args.type, args.rank, args.bound)
    elif args.check == "duality":
        rep = vf.check_duality(args.type, args.rank)
    elif args.check == "collapse":
        rep = vf.check_collapse(args.type, args.rank)
    else:
        d = ic.consistency_report(
            args.type, args.rank, args.pairing_mode, precedence=args.precedence
        ).to_json()
        rep = vf.Report(d.pop("case"), d.pop("status"), d.pop("witness"), d)
    obj = rep.to_json()
    _emit(obj, args.format, f"{rep.case}: {rep.status}")
    return EXIT_OK if rep.status in ("pass", "info") else EXIT_DISCREPANCY


# parser ----------------------------------------------------------------------


def _type_arg(s):
    s = s.upper()
    if s not in "ABCD" or len(s) != 1:
        raise argparse.ArgumentTypeError("type must be one of A, B, C, D")
    return s


def _orbit_args(p, partition=True):
    p.add_argument("type", type=_type_arg)
    p.add_argument("rank", type=int)
    if partition:
        p.add_argument("partition", help='comma-separated parts, e.g. "3,1,1"')
    p.add_argument("--label", choices=ob.LABELS, help="very even type D label")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="norbit", description="Nilpotent orbit combinatorics and verification.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, formats=("text", "json"), **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--format", choices=formats, default="text")
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, help="check a partition against a type")
    _orbit_args(p)
    p = add("orbit-info", cmd_orbit_info, help="everything known about one orbit")
    _orbit_args(p)
    p.add_argument("--mode", choices=ob.STABLY_TRIVIAL_MODES, default="literal")
    p = add("orbit-list", cmd_orbit_list, help="list all orbits")
    _orbit_args(p, partition=False)
    p = add("hasse", cmd_hasse, formats=("text", "json", "dot"), help="closure order covering relations")
    _orbit_args(p, partition=False)
    p = add("infchar", cmd_infchar, help="infinitesimal character of an orbit")
    _orbit_args(p)
    p.add_argument("--explain", action="store_true", help="print the pairing trace")
    p.add_argument("--pairing-mode", choices=ic.PAIRING_MODES, default="matched")
    p.add_argument("--rule", choices=("auto", "recipe", "even-dual", "triangular"), default="auto")
    p.add_argument("--precedence", choices=ic.PRECEDENCES, default="triangular")
    p = add("induce", cmd_induce, help="induce from a Levi subalgebra")
    p.add_argument("type", type=_type_arg)
    p.add_argument("rank", type=int, help="ambient rank")
    p.add_argument("--base", default="", help="residual orbit partition (omit for type A)")
    p.add_argument("--base-label", choices=ob.LABELS)
    p.add_argument("--blocks", help="gl block sizes with the zero orbit, e.g. 2,4")
    p.add_argument("--gl-orbits", help='orbits on gl blocks separated by ";", e.g. "2;1,1"')
    p.add_argument("--levi-label", choices=ob.LABELS, default="I")
    p = add("complete", cmd_complete, help="search gl blocks completing to a triangular orbit")
    _orbit_args(p)
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--mode", choices=ob.STABLY_TRIVIAL_MODES, default="literal")
    p = add("bvdual", cmd_bvdual, help="dual orbit under special-orbit duality")
    _orbit_args(p)
    p = add("branch", cmd_branch, help="restrict an irreducible to a block Levi")
    p.add_argument("type", type=_type_arg)
    p.add_argument("rank", type=int)
    p.add_argument("weight", help='highest weight in e-coordinates, e.g. "1,0,-1"')
    p.add_argument("--levi", required=True, help="gl block sizes")
    p.add_argument("--residual", type=int, default=0)
    p.add_argument("--bound", type=int, default=20000)
    p = add("verify", cmd_verify, help="run a verification and emit a report")
    p.add_argument(
        "check",
        choices=("hilbert", "richardson", "prop55", "stages", "duality", "collapse", "consistency"),
    )
    p.add_argument("type", type=_type_arg)
    p.add_argument("rank", type=int, help="rank (for collapse: partition size)")
    p.add_argument("partition", nargs="?")
    p.add_argument("--label", choices=ob.LABELS)
    p.add_argument("--seed", type=int)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--samples", type=int)
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--weight-bound", type=int, default=200)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--gl-orbits")
    p.add_argument("--base")
    p.add_argument("--pairing-mode", choices=ic.PAIRING_MODES, default="matched")
    p.add_argument("--precedence", choices=ic.PRECEDENCES, default="triangular")
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except (UsageError, PartitionError, ob.OrbitError, ic.InfCharError, WeightError, ValueError) as exc:
        print(f"norbit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())
