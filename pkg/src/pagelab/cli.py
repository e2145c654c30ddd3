"""Command-line front end.

Exit codes: 0 success, 1 failed check, 2 usage or parse error, 3 I/O error,
4 invalid state (e.g. a warm start with repeated pages).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import construct, paging, search, traces, verify

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_IO, EXIT_STATE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def fraction_doc(value: Fraction) -> dict:
    value = Fraction(value)
    return {
        "numerator": value.numerator,
        "denominator": value.denominator,
        "decimal_advisory": round(float(value), 6),
    }


def show_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator} (~{float(value):.6f}, advisory)"


def _pages(text):
    try:
        return traces.parse_inline(text)
    except traces.TraceParseError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def _load_refs(args):
    if getattr(args, "refs", None) is not None:
        return _pages(args.refs)
    if args.trace is None:
        raise CliError("give a trace path (or '-' for stdin) or --refs", EXIT_USAGE)
    try:
        text = sys.stdin.read() if args.trace == "-" else Path(args.trace).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {args.trace}: {exc}", EXIT_IO) from None
    try:
        return traces.parse_trace(text)
    except traces.TraceParseError as exc:
        raise CliError(f"{args.trace}: {exc}", EXIT_USAGE) from None


def _emit(args, report: dict, lines: list[str]):
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _write_outputs(path, refs, report, comment):
    path = Path(path)
    try:
        traces.write_trace(path, refs, comment)
        path.with_suffix(".report.json").write_text(json.dumps(report, sort_keys=True, indent=2) + "\n")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from None
    report["trace_path"] = str(path)


def cmd_simulate(args):
    refs = _load_refs(args)
    warm = _pages(args.warm) if args.warm else None
    result = paging.simulate(args.policy, refs, args.frames, warm, trace=args.show_states)
    report = {
        "command": "simulate",
        "policy": result.policy.value,
        "frames": args.frames,
        "warm_start": list(warm) if warm else None,
        "length": len(refs),
        "fault_count": result.fault_count,
        "fault_positions": list(result.fault_positions),
        "faulted_pages": list(result.faulted_pages),
        "final_state": list(result.final_state),
    }
    lines = [
        f"policy {result.policy.value}, {args.frames} frames, {len(refs)} references",
        f"faults: {result.fault_count}",
        f"final state: {tuple(result.final_state)}",
    ]
    if args.show_states:
        report["states"] = [list(s) for s in result.state_trace]
        lines += [f"q_{t} = {tuple(s)}" for t, s in enumerate(result.state_trace)]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_ratio(args):
    refs = _load_refs(args)
    r = paging.anomaly_ratio(refs, args.frames, args.frames_large, args.policy)
    report = {
        "command": "ratio",
        "policy": paging.Policy(args.policy).value,
        "frames": r.small_capacity,
        "frames_large": r.large_capacity,
        "small_faults": r.small_faults,
        "large_faults": r.large_faults,
        "ratio": fraction_doc(r.ratio),
        "anomaly": r.is_anomaly,
    }
    flag = " ANOMALY" if r.is_anomaly else ""
    lines = [
        f"{r.ratio.numerator}/{r.ratio.denominator}{flag}",
        f"faults: {r.small_faults} with {r.small_capacity} frames, "
        f"{r.large_faults} with {r.large_capacity} frames",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_family(args):
    fam = construct.unbounded_family(args.n, args.k)
    refs = fam.prefix_U + fam.block_V * args.k
    report = {
        "command": "family",
        "n": args.n,
        "k": args.k,
        "frames": fam.spec.m,
        "frames_large": fam.spec.M,
        "prefix_length": len(fam.prefix_U),
        "block_length": len(fam.block_V),
        "sync_blocks": fam.sync_blocks,
        "length": len(refs),
        "small_faults": fam.small_faults,
        "large_faults": fam.large_faults,
        "ratio": fraction_doc(fam.ratio),
        "limit_ratio": fraction_doc(fam.limit_ratio),
        "periodic": fam.periodic,
    }
    if args.trace_out:
        _write_outputs(args.trace_out, refs, report, f"family n={args.n} k={args.k}")
    lines = [
        f"n={args.n} k={args.k}: frames {fam.spec.m} vs {fam.spec.M}, length {len(refs)}",
        f"faults: {fam.small_faults} vs {fam.large_faults}",
        f"ratio: {show_fraction(fam.ratio)}",
        f"limit: {show_fraction(fam.limit_ratio)}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _fraction_arg(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def cmd_ratio_target(args):
    res = construct.construct_for_ratio(args.L)
    report = {
        "command": "ratio-target",
        "target": fraction_doc(res.target),
        "n": res.n,
        "k": res.k,
        "frames": res.m,
        "frames_large": res.M,
        "length": len(res.refs),
        "small_faults": res.small_faults,
        "large_faults": res.large_faults,
        "ratio": fraction_doc(res.ratio),
        "exceeds_target": res.ratio > res.target,
    }
    if args.trace_out:
        _write_outputs(args.trace_out, res.refs, report, f"ratio target {res.target}")
    lines = [
        f"target {res.target}: n={res.n} (frames {res.m} vs {res.M}), k={res.k}, length {len(res.refs)}",
        f"faults: {res.small_faults} vs {res.large_faults}",
        f"ratio: {show_fraction(res.ratio)}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_construct_prefix(args):
    target = _pages(args.target)
    refs = construct.anomaly_prefix(args.frames, args.frames_large, target)
    small = paging.simulate("fifo", refs, args.frames)
    large = paging.simulate("fifo", refs, args.frames_large)
    report = {
        "command": "construct-prefix",
        "frames": args.frames,
        "frames_large": args.frames_large,
        "target": list(target),
        "refs": list(refs),
        "small_faults": small.fault_count,
        "small_final_state": list(small.final_state),
        "large_faults": large.fault_count,
        "large_final_state": list(large.final_state),
    }
    if args.trace_out:
        _write_outputs(args.trace_out, refs, report, f"prefix for target {tuple(target)}")
    lines = [
        " ".join(map(str, refs)),
        f"{args.frames} frames: {small.fault_count} faults, final {tuple(small.final_state)}",
        f"{args.frames_large} frames: {large.fault_count} faults, final {tuple(large.final_state)}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_search(args):
    space = search.SearchSpace(args.frames, args.frames_large, args.pages, args.max_len,
                               canonicalize=not args.no_canonical)
    if args.budget is not None:
        res = search.randomized_search(space, args.seed, args.budget)
        method = "randomized"
    else:
        res = search.exhaustive_search(space)
        method = "exhaustive"
    report = {
        "command": "search",
        "method": method,
        "frames": space.m,
        "frames_large": space.M,
        "pages": space.n,
        "max_len": space.max_len,
        "feasible": search.anomaly_feasible(space.m, space.M),
        "best_ratio": fraction_doc(res.best_ratio),
        "witness": list(res.witness),
        "small_faults": res.small_faults,
        "large_faults": res.large_faults,
        "strings_examined": res.strings_examined,
        "exhausted": res.exhausted,
    }
    lines = [
        f"{method} search, frames {space.m} vs {space.M}, {space.n} pages, length <= {space.max_len}",
        f"best ratio: {show_fraction(res.best_ratio)}",
        f"witness: {' '.join(map(str, res.witness))}",
        f"examined {res.strings_examined} strings, exhausted: {res.exhausted}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_rate(args):
    if args.cycle is not None:
        rate = paging.cyclic_rate_estimate(args.policy, args.cycle, args.frames, args.cycles)
        source = {"cycle": args.cycle, "cycles": args.cycles}
    else:
        rate = paging.paging_rate_finite(args.policy, _load_refs(args), args.frames)
        source = {}
    report = {"command": "rate", "policy": paging.Policy(args.policy).value,
              "frames": args.frames, "rate": fraction_doc(rate), **source}
    _emit(args, report, [f"paging rate: {show_fraction(rate)}"])
    return EXIT_OK


def _short(value, width=60):
    text = repr(value)
    return text if len(text) <= width else text[:width - 3] + "..."


def cmd_verify_paper(args):
    checks = verify.run_checks()
    failed = [c for c in checks if not c.passed]
    report = {
        "command": "verify-paper",
        "passed": not failed,
        "checks": [{"name": c.name, "passed": c.passed, "expected": repr(c.expected),
                    "actual": repr(c.actual)} for c in checks],
    }
    lines = []
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {_short(c.actual)}")
        if not c.passed:
            lines.append(f"      expected {c.expected!r}")
            lines.append(f"      actual   {c.actual!r}")
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit(args, report, lines)
    return EXIT_CHECK if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="pagelab", description="FIFO anomaly laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        return p

    def trace_input(p):
        p.add_argument("trace", nargs="?", help="trace file, or '-' for stdin")
        p.add_argument("--refs", help="inline references, e.g. '1,2,3,1'")

    policy = dict(choices=[p.value for p in paging.Policy], default="fifo")
    trace_out = dict(metavar="PATH", help="write the reference string here, report next to it")

    p = common(sub.add_parser("simulate", help="run one policy over a trace"))
    trace_input(p)
    p.add_argument("--policy", **policy)
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--warm", help="warm-start state, oldest first, e.g. '7,3,6,2,5'")
    p.add_argument("--show-states", action="store_true", help="print every control state")
    p.set_defaults(func=cmd_simulate)

    p = common(sub.add_parser("ratio", help="exact fault ratio between two memory sizes"))
    trace_input(p)
    p.add_argument("--policy", **policy)
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--frames-large", type=int, required=True)
    p.set_defaults(func=cmd_ratio)

    p = common(sub.add_parser("family", help="odd-n family prefix + V^k"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--trace-out", **trace_out)
    p.set_defaults(func=cmd_family)

    p = common(sub.add_parser("ratio-target", help="string with anomaly ratio above L"))
    p.add_argument("L", type=_fraction_arg)
    p.add_argument("--trace-out", **trace_out)
    p.set_defaults(func=cmd_ratio_target)

    p = common(sub.add_parser("construct-prefix", help="drive the small FIFO memory into a state"))
    p.add_argument("target", help="target control state, oldest first, e.g. '7,3,6,2,5'")
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--frames-large", type=int, required=True)
    p.add_argument("--trace-out", **trace_out)
    p.set_defaults(func=cmd_construct_prefix)

    p = common(sub.add_parser("search", help="search for high FIFO ratios"))
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--frames-large", type=int, required=True)
    p.add_argument("--pages", type=int, help="alphabet size (default frames-large + 1)")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--no-canonical", action="store_true", help="disable relabeling symmetry pruning")
    p.add_argument("--budget", type=int, help="switch to randomized search with this many evaluations")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_search)

    p = common(sub.add_parser("rate", help="paging rate of a trace or of a cyclic string"))
    trace_input(p)
    p.add_argument("--policy", **policy)
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--cycle", type=int, metavar="N", help="use (1..N) repeated instead of a trace")
    p.add_argument("--cycles", type=int, default=100)
    p.set_defaults(func=cmd_rate)

    p = common(sub.add_parser("verify-paper", help="replay every published number"))
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "pages", "unset") is None:
        args.pages = args.frames_large + 1
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (paging.InvalidStateError, construct.ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STATE
    except (ValueError, search.SearchSpaceTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
