"""Command line interface.

Subcommands mirror the library operations; every command prints either JSON
(default, machine-readable, floats rounded to 9 significant digits) or an
aligned key/value table. Exit codes: 0 success, 1 input validation failure
(the diagnostic line starts with the error class name), 2 internal error.

Distribution files are JSON objects {"p": [...]} or one-column CSVs (an
optional non-numeric header line is skipped). Partitions are JSON
{"blocks": [[...], ...]} with 0-based original component indices.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import errors
from .aggregation import (
    DEFAULT_EXACT_CAP,
    aggregate,
    exact_max_aggregation,
    exact_min_aggregation,
    huffman_max_aggregation,
    make_partition,
)
from .coupling import (
    aggregation_coupling,
    approx_best_approximation,
    divergence_upper_bound,
    min_entropy_coupling_exact,
    DEFAULT_COUPLING_CAP,
)
from .dist import Dist, alpha, entropy, make_dist
from .ratio import flat_majorant, ratio_lower_bound
from .reduction import bound_report, max_entropy_envelope


def _round_sig(x: float) -> float:
    return float(f"{float(x):.9g}")


def canonical(obj):
    """Round every float to 9 significant digits, recursively."""
    if isinstance(obj, dict):
        return {k: canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round_sig(obj)
    return obj


def _emit(payload: dict, mode: str) -> None:
    payload = canonical(payload)
    if mode == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    width = max(len(k) for k in payload)
    for k in sorted(payload):
        v = payload[k]
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        print(f"{k:<{width}}  {v}")


def load_distribution(path: str) -> Dist:
    """Read {"p": [...]} JSON or a one-column CSV of probabilities."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        doc = json.loads(text)
        if not isinstance(doc, dict) or "p" not in doc:
            raise errors.Empty(f'{path}: expected a JSON object with key "p"')
        return make_dist(doc["p"])
    values = []
    for row in csv.reader(text.splitlines()):
        if not row or not row[0].strip():
            continue
        try:
            values.append(float(row[0]))
        except ValueError:
            if values:
                raise errors.NotNormalized(f"{path}: non-numeric row {row!r}")
            continue  # header line
    return make_dist(values)


def load_partition(path: str, n: int):
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "blocks" not in doc:
        raise errors.BadPartition(f'{path}: expected JSON with key "blocks"')
    return make_partition(doc["blocks"], n)


def _input_dist(args) -> Dist:
    if getattr(args, "random", None) is not None:
        rng = np.random.default_rng(args.seed)
        return make_dist(rng.dirichlet(np.ones(args.random)))
    if args.input is None:
        raise errors.Empty("no input file given (and --random not used)")
    return load_distribution(args.input)


def _partition_payload(partition) -> dict:
    return {"blocks": [list(b) for b in partition.blocks]}


def cmd_entropy(args) -> dict:
    p = _input_dist(args)
    return {"n": p.n, "entropy_bits": entropy(p)}


def cmd_bounds(args) -> dict:
    p = _input_dist(args)
    rep = bound_report(p, args.m)
    return {
        "n": p.n,
        "m": rep.m,
        "h_upper": rep.h_upper,
        "h_lower_achievable": rep.h_lower_achievable,
        "alpha": rep.alpha,
    }


def cmd_reduce_max(args) -> dict:
    p = _input_dist(args)
    res = huffman_max_aggregation(p, args.m)
    h_upper = entropy(max_entropy_envelope(p, args.m))
    out = {
        "n": p.n,
        "m": args.m,
        "h": res.h,
        "h_upper": h_upper,
        "certified_interval": [res.h, h_upper],
        "alpha": alpha(),
        "dist": list(res.dist.probs),
        "partition": _partition_payload(res.partition),
        "merge_count": len(res.trace.merge_steps),
        "original_prefix_len": res.trace.original_prefix_len,
        "guarantee": res.guarantee,
        "exact_ran": False,
    }
    if p.n <= args.exact_cap:
        exact = exact_max_aggregation(p, args.m, cap=args.exact_cap)
        out["exact_ran"] = True
        out["h_exact"] = exact.h
    return out


def cmd_reduce_min(args) -> dict:
    p = _input_dist(args)
    res = exact_min_aggregation(p, args.m)
    return {
        "n": p.n,
        "m": args.m,
        "h": res.h,
        "dist": list(res.dist.probs),
        "partition": _partition_payload(res.partition),
        "guarantee": res.guarantee,
    }


def cmd_reduce_exact(args) -> dict:
    p = _input_dist(args)
    res = exact_max_aggregation(p, args.m, cap=args.exact_cap)
    return {
        "n": p.n,
        "m": args.m,
        "h": res.h,
        "dist": list(res.dist.probs),
        "partition": _partition_payload(res.partition),
        "guarantee": res.guarantee,
    }


def cmd_ratio_bound(args) -> dict:
    rb = ratio_lower_bound(args.n, args.rho)
    return {
        "n": rb.n,
        "rho": rb.rho,
        "gap_bits": rb.gap_bits,
        "lower_bound_bits": rb.lower_bound_bits,
    }


def cmd_zrho(args) -> dict:
    p = _input_dist(args)
    z = flat_majorant(p, args.rho)
    return {"n": p.n, "rho": float(args.rho), "z": list(z.probs)}


def _coupling_payload(coupling) -> dict:
    return {
        "matrix": [list(row) for row in coupling.matrix],
        "p": list(coupling.p.probs),
        "q": list(coupling.q.probs),
    }


def cmd_distance(args) -> dict:
    p = _input_dist(args)
    if (args.q is None) == (args.blocks is None):
        raise errors.Empty("distance needs exactly one of --q or --blocks")
    if args.q is not None:
        q = load_distribution(args.q)
        cpl, rep = min_entropy_coupling_exact(p, q)
        return {
            "method": "exact",
            "w": rep.w,
            "d": rep.d,
            "h_p": entropy(p),
            "h_q": entropy(q),
            "coupling": _coupling_payload(cpl),
        }
    part = load_partition(args.blocks, p.n)
    q = aggregate(p, part)
    if p.n + q.n <= DEFAULT_COUPLING_CAP:
        cpl, rep = min_entropy_coupling_exact(p, q)
        return {
            "method": "exact",
            "w": rep.w,
            "d": rep.d,
            "h_p": entropy(p),
            "h_q": entropy(q),
            "coupling": _coupling_payload(cpl),
        }
    # too large for the vertex scan: certified upper bound via the
    # aggregation coupling, whose joint entropy is exactly H(p)
    cpl = aggregation_coupling(p, part)
    return {
        "method": "mq_upper_bound",
        "w": entropy(p),
        "d": divergence_upper_bound(p, part),
        "h_p": entropy(p),
        "h_q": entropy(q),
        "coupling": _coupling_payload(cpl),
    }


def cmd_approx(args) -> dict:
    p = _input_dist(args)
    q_bar, bound = approx_best_approximation(p, args.m)
    return {
        "n": p.n,
        "m": args.m,
        "q_bar": list(q_bar.probs),
        "d_upper": bound,
        "alpha": alpha(),
    }


def _add_io(sub, needs_input=True):
    if needs_input:
        sub.add_argument("input", nargs="?", help="distribution file (JSON or CSV)")
        sub.add_argument(
            "--random",
            type=int,
            metavar="N",
            help="generate a random N-component distribution instead of reading a file",
        )
        sub.add_argument("--seed", type=int, help="seed for --random")
    sub.add_argument(
        "--output", choices=("json", "table"), default="json", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="entroreduce",
        description="Entropy bounds, certified reductions, and min-entropy "
        "couplings for finite distributions.",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    s = sp.add_parser("entropy", help="Shannon entropy in bits")
    _add_io(s)
    s.set_defaults(func=cmd_entropy)

    s = sp.add_parser("bounds", help="achievable entropy range at support size m")
    s.add_argument("--m", type=int, required=True)
    _add_io(s)
    s.set_defaults(func=cmd_bounds)

    s = sp.add_parser("reduce-max", help="greedy entropy-maximizing reduction")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    _add_io(s)
    s.set_defaults(func=cmd_reduce_max)

    s = sp.add_parser("reduce-min", help="exact entropy-minimizing reduction")
    s.add_argument("--m", type=int, required=True)
    _add_io(s)
    s.set_defaults(func=cmd_reduce_min)

    s = sp.add_parser(
        "reduce-exact", help="exact entropy-maximizing reduction (exhaustive)"
    )
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    _add_io(s)
    s.set_defaults(func=cmd_reduce_exact)

    s = sp.add_parser("ratio-bound", help="entropy lower bound from a ratio cap")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--rho", type=float, required=True)
    _add_io(s, needs_input=False)
    s.set_defaults(func=cmd_ratio_bound)

    s = sp.add_parser("zrho", help="flattest majorant with entries in {p_n, rho*p_n}")
    s.add_argument("--rho", type=float, required=True)
    _add_io(s)
    s.set_defaults(func=cmd_zrho)

    s = sp.add_parser("distance", help="coupling divergence D(p, q)")
    s.add_argument("--q", help="second distribution file (exact vertex scan)")
    s.add_argument(
        "--blocks", help="partition file; q = aggregate(p, blocks), bound if large"
    )
    _add_io(s)
    s.set_defaults(func=cmd_distance)

    s = sp.add_parser("approx", help="certified m-outcome approximation of p")
    s.add_argument("--m", type=int, required=True)
    _add_io(s)
    s.set_defaults(func=cmd_approx)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except (errors.ValidationError, OSError, json.JSONDecodeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports, not raises
        print(f"InternalError: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
