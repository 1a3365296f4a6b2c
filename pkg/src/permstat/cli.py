"""Command-line front end.

Exit codes: 0 success, 1 failed check or broken invariant, 2 usage or parse
error.
"""

import argparse
import json
import sys

from . import bijections as bij
from .core import (
    LAGUERRE,
    LARGE,
    STANDARD,
    TYPE0,
    comp_maj,
    comp_mirror,
    dwsf_max_weight,
    dwsf_stats,
    perm_gc,
    perm_gc0,
    perm_gdes,
    perm_gdes0,
    perm_ltr_maxima,
    perm_recoil_composition,
    perm_recoils,
    perm_tot_vector,
    sf_alpha,
    sf_dc,
    sf_inv,
    sf_lc,
    sf_zero_positions,
    wdp_dc,
    wdp_gc,
    wdp_tw,
)
from .encoding import format_object, parse, parse_laguerre
from .errors import InvalidInput, InvariantViolation, PermstatError, ResourceLimit
from .matrices import matrix
from .sylvester import bst_from_perm, bst_from_wdp
from .verify import CHECKS, run_checks

FAMILY_FLAGS = {"perm": "perm_gc", "perm0": "perm_gc0", "sf": "sf"}


def _parts(comp):
    return list(comp.parts)


def stats_of(kind, obj):
    """Every statistic defined on ``obj`` as a JSON-ready dict."""
    if kind == "perm":
        tot = perm_tot_vector(obj)
        return {
            "rec": _parts(perm_recoil_composition(obj)),
            "recoils": sorted(perm_recoils(obj)),
            "gc": _parts(perm_gc(obj)),
            "gdes": sorted(perm_gdes(obj)),
            "gc0": _parts(perm_gc0(obj)),
            "gdes0": sorted(perm_gdes0(obj)),
            "tot": sum(tot),
            "tot_k": list(tot),
            "ltr_maxima": sorted(perm_ltr_maxima(obj)),
        }
    if kind == "sf":
        out = {
            "lc": _parts(sf_lc(obj)),
            "dc": _parts(sf_dc(obj)),
            "inv": sf_inv(obj),
            "alpha": sf_alpha(obj),
            "zero_positions": sorted(sf_zero_positions(obj)),
            "decreasing": obj.is_decreasing(),
        }
        if obj.is_decreasing():
            out["max_weight"] = list(dwsf_max_weight(obj))
        return out
    if kind == "wdp":
        return {
            "tw": wdp_tw(obj),
            "dc": _parts(wdp_dc(obj, STANDARD)),
            "gc": _parts(wdp_gc(obj, STANDARD)),
            "dc0": _parts(wdp_dc(obj, TYPE0)),
            "gc0": _parts(wdp_gc(obj, TYPE0)),
            "meeting_heights": list(obj.path.meeting_heights()),
            "max_weight": list(obj.max_weight()),
        }
    if kind == "dwsf":
        s = dwsf_stats(obj)
        return {
            "inv": s.inv,
            "tw": s.tw,
            "dc": _parts(s.dc),
            "lc": _parts(s.lc),
            "max_weight": list(dwsf_max_weight(obj.sf)),
        }
    if kind == "laguerre":
        return {"kind": obj.kind, "size": obj.n, "wdp": str(bij.laguerre_to_wdp(obj))}
    if kind == "composition":
        return {
            "parts": _parts(obj),
            "n": obj.n,
            "descents": sorted(obj.descents),
            "maj": comp_maj(obj),
            "mirror": _parts(comp_mirror(obj)),
        }
    raise InvalidInput(f"no statistics for kind {kind!r}")


# route -> (forward input kind, forward map, inverse input kind, inverse map)
ROUTES = {
    "fv": ("perm", bij.psi_fv, "wdp", bij.psi_fv_inv),
    "fv0": ("perm", bij.psi_fv0, "wdp", bij.psi_fv0_inv),
    "psi": ("wdp", bij.psi, "wdp", bij.psi),
    "phi1": ("sf", bij.phi1, "dwsf", bij.phi1_inv),
    "phi2": ("dwsf", bij.phi2, "wdp", bij.phi2_inv),
    "laguerre": (LAGUERRE, bij.laguerre_to_wdp, "wdp", lambda x: bij.wdp_to_laguerre(x, LAGUERRE)),
    "large-laguerre": (LARGE, bij.laguerre_to_wdp, "wdp", lambda x: bij.wdp_to_laguerre(x, LARGE)),
    "Phi": ("sf", bij.big_phi, "perm", bij.big_phi_inv),
    "Psi": ("perm", bij.big_psi, "perm", bij.big_psi_inv),
    "parking": ("sf", bij.dsf_to_parking, "parking", bij.parking_to_dsf),
}


def run_map(route, text, inverse=False):
    fwd_kind, fwd, inv_kind, inv = ROUTES[route]
    kind, fn = (inv_kind, inv) if inverse else (fwd_kind, fwd)
    if kind in (LAGUERRE, LARGE):
        obj = parse_laguerre(text, kind)
    else:
        obj = parse(kind, text)
    return format_object(fn(obj))


def _cmd_stats(args, out):
    obj = parse(args.kind, args.text)
    data = stats_of(args.kind, obj)
    if args.format == "json":
        print(json.dumps(data), file=out)
    else:
        for key, value in data.items():
            print(f"{key}: {value}", file=out)
    return 0


def _cmd_map(args, out):
    print(run_map(args.route, args.text, args.inverse), file=out)
    return 0


def _cmd_matrix(args, out):
    m = matrix(args.n, FAMILY_FLAGS[args.family], jobs=args.jobs)
    print(m.to_json() if args.format == "json" else m.to_text(), file=out)
    return 0


def _cmd_verify(args, out):
    checks = CHECKS if not args.check or "all" in args.check else tuple(args.check)
    results = run_checks(args.n_max, checks, jobs=args.jobs)
    ok = all(r.passed for r in results)
    if args.format == "json":
        matrices = [
            m.to_json_dict()
            for r in results
            for m in r.extra.get("matrices", {}).values()
        ]
        report = {
            "passed": ok,
            "checks": [r.to_json_dict() for r in results],
            "matrices": matrices,
        }
        print(json.dumps(report), file=out)
    else:
        for r in results:
            print(r.summary(), file=out)
        print("all checks passed" if ok else "SOME CHECKS FAILED", file=out)
    return 0 if ok else 1


def _cmd_bst(args, out):
    obj = parse(args.kind, args.text)
    if args.kind == "perm":
        tree = bst_from_perm(obj)
    else:
        tree = bst_from_wdp(obj, args.mode)
    print(format_object(tree), file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="permstat",
        description="Permutation statistics, weighted Dyck path bijections "
        "and equidistribution checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="print every statistic of an object")
    p.add_argument("kind", choices=["perm", "sf", "wdp", "dwsf", "laguerre", "composition"])
    p.add_argument("text")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("route", choices=list(ROUTES))
    p.add_argument("text")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("matrix", help="print a q-transition matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=list(FAMILY_FLAGS), default="perm")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--check", action="append", choices=["all", *CHECKS])
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bst", help="binary search tree of a permutation or path")
    p.add_argument("kind", choices=["perm", "wdp"])
    p.add_argument("text")
    p.add_argument("--mode", choices=["direct", "shifted"], default="direct")
    p.set_defaults(func=_cmd_bst)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"permstat: invariant violated: {exc}", file=sys.stderr)
        return 1
    except (InvalidInput, ResourceLimit) as exc:
        print(f"permstat: {exc}", file=sys.stderr)
        return 2
    except PermstatError as exc:
        print(f"permstat: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
