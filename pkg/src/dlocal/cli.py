"""Command-line surface: compute, patterns, explain, verify.

One binary with subcommands; every number printed is exact unless the
explicitly non-canonical --eval-p substitution is requested.  Exit status
0 on success, 1 when a verification suite fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coeff_ring import RingElem, _gmono_str
from .decoration import (
    _strictness_failure,
    component_structure,
    decorate,
    render_decorated,
)
from .local_part import LocalPart, local_part, sigma_component, sigma_rule_tag
from .oracle import (
    check_all,
    check_dimension,
    check_example2,
    check_rank2,
    check_tokuyama,
)
from .pattern import (
    LittelmannPattern,
    enumerate_decorated,
    weight_vector,
)
from .root_data import HighestWeight, build_root_system


def _int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _write(text: str, path) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _highest_weight(rank: int, twist) -> HighestWeight:
    if len(twist) != rank:
        raise ValueError(f"twist must have {rank} entries, got {len(twist)}")
    if any(l < 0 for l in twist):
        raise ValueError(f"twist entries must be >= 0, got {twist}")
    return HighestWeight.from_twist(twist)


def _format_eval_p(part: LocalPart, p_value: Fraction) -> str:
    lines = [f"# evaluated at p = {p_value} (non-canonical output)"]
    for lam in part.support():
        pieces = []
        for gmono, value in part.coefficients[lam].eval_p(p_value).items():
            gstr = _gmono_str(gmono)
            pieces.append(f"{value}*{gstr}" if gstr else str(value))
        lines.append(f"{','.join(map(str, lam))}: {' + '.join(pieces) if pieces else '0'}")
    return "\n".join(lines)


def cmd_compute(args) -> int:
    try:
        hw = _highest_weight(args.rank, args.twist)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.coeff is not None and len(args.coeff) != args.rank:
        return _usage_error(f"--coeff must have {args.rank} entries")
    rs = build_root_system(args.rank)
    part = local_part(rs, hw, n=args.n, weight=args.coeff, jobs=args.jobs)

    if args.coeff is not None:
        value = part.coefficient_at(args.coeff)
        if args.format == "json":
            obj = {
                "rank": args.rank,
                "n": args.n,
                "twist": list(args.twist),
                "lambda": list(args.coeff),
                "value": value.to_json_obj(),
            }
            _write(json.dumps(obj, separators=(",", ":")), args.output)
        else:
            _write(str(value), args.output)
        return 0

    if args.format == "json":
        _write(part.to_json_str(), args.output)
    elif args.eval_p is not None:
        _write(_format_eval_p(part, args.eval_p), args.output)
    else:
        lines = [
            f"{','.join(map(str, lam))}: {part.coefficients[lam]}"
            for lam in part.support()
        ]
        _write("\n".join(lines), args.output)
    return 0


def cmd_patterns(args) -> int:
    try:
        hw = _highest_weight(args.rank, args.twist)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.weight is not None and len(args.weight) != args.rank:
        return _usage_error(f"--weight must have {args.rank} entries")
    rs = build_root_system(args.rank)
    stream = enumerate_decorated(rs, hw, args.weight)

    if args.count_only:
        total = nonstrict = 0
        for T, crit in stream:
            total += 1
            if _strictness_failure(T, crit) is not None:
                nonstrict += 1
        if args.format == "json":
            obj = {"total": total, "nonstrict": nonstrict, "strict": total - nonstrict}
            _write(json.dumps(obj, separators=(",", ":")), args.output)
        else:
            _write(
                f"total {total}\nnonstrict {nonstrict}\nstrict {total - nonstrict}",
                args.output,
            )
        return 0

    records = []
    lines = []
    for T, crit in stream:
        strict = _strictness_failure(T, crit) is None
        lam = weight_vector(T)
        if args.format == "json":
            records.append(
                {
                    "pattern": T.to_string(),
                    "rows": [list(row) for row in T.rows],
                    "weight": list(lam),
                    "strict": strict,
                    "critical": [list(pos) for pos in sorted(crit)],
                }
            )
        else:
            cpos = ",".join(f"({i},{j})" for i, j in sorted(crit)) or "-"
            lines.append(
                f"{T.to_string()}  weight={','.join(map(str, lam))}"
                f"  strict={'yes' if strict else 'no'}  critical={cpos}"
            )
    if args.format == "json":
        _write(json.dumps(records, separators=(",", ":")), args.output)
    else:
        _write("\n".join(lines), args.output)
    return 0


def cmd_explain(args) -> int:
    try:
        T = LittelmannPattern.from_string(args.pattern)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.rank is not None and args.rank != T.rank:
        return _usage_error(f"pattern literal has rank {T.rank}, not {args.rank}")
    try:
        hw = _highest_weight(T.rank, args.twist)
    except ValueError as exc:
        return _usage_error(str(exc))
    if not T.is_admissible():
        return _usage_error("pattern rows are not weakly decreasing")
    try:
        graph = decorate(T, hw)
    except ValueError as exc:
        return _usage_error(str(exc))

    n = args.n
    lam = weight_vector(T)
    out = [render_decorated(graph), ""]
    out.append(f"weight: {','.join(map(str, lam))}   |weight| = {sum(lam)}")
    components = component_structure(T)
    failure = _strictness_failure(T, graph.circled)
    total = None
    factors = []
    for comp in components:
        tag = sigma_rule_tag(comp, graph.circled, n)
        if failure is None:
            factor = sigma_component(comp, graph.circled, n)
            factors.append(factor)
            shown = str(factor)
        else:
            shown = "skipped"
        cols = ",".join(map(str, comp.columns))
        out.append(
            f"row {comp.row} columns [{cols}] value {comp.value}: {comp.kind}; "
            f"{tag}; factor = {shown}"
        )
    if failure is None:
        total = RingElem.p_power(sum(lam), n)
        for factor in factors:
            total = total * factor
        out.append("strict: yes")
        out.append(f"contribution: p^{sum(lam)} * product = {total}")
    else:
        out.append(f"strict: no ({failure})")
        out.append("contribution: excluded (nonstrict patterns are discarded)")
    _write("\n".join(out), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.suite == "dimension":
        max_twist = 2 if args.max_twist is None else args.max_twist
        extra = ((5, (0,) * 5),) if args.max_rank >= 4 else ()
        reports = [
            check_dimension(max_rank=args.max_rank, max_twist=max_twist, extra_cases=extra)
        ]
    elif args.suite == "tokuyama":
        reports = [check_tokuyama(max_rank=args.rank if args.rank else min(args.max_rank, 4))]
    elif args.suite == "rank2":
        max_twist = 3 if args.max_twist is None else args.max_twist
        reports = [check_rank2(max_twist=max_twist, max_n=args.max_n)]
    elif args.suite == "example2":
        reports = [check_example2()]
    else:
        reports = check_all()
    if args.format == "json":
        payload = json.dumps([r.to_json_obj() for r in reports], separators=(",", ":"))
        _write(payload, args.output)
    else:
        _write("\n".join(r.to_text() for r in reports), args.output)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlocal",
        description="Exact local parts of type-D Weyl group multiple Dirichlet series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="assemble a local part or one coefficient")
    compute.add_argument("--rank", type=int, required=True)
    compute.add_argument("--n", type=int, required=True, help="cover degree")
    compute.add_argument("--twist", type=_int_vector, required=True)
    compute.add_argument("--coeff", type=_int_vector, help="print only this coefficient")
    compute.add_argument("--jobs", type=int, default=0, help="0 = sequential canonical mode")
    compute.add_argument("--format", choices=("text", "json"), default="text")
    compute.add_argument("--output", help="write to this path instead of stdout")
    compute.add_argument(
        "--eval-p",
        type=Fraction,
        dest="eval_p",
        help="substitute a rational p in text output (non-canonical)",
    )
    compute.set_defaults(func=cmd_compute)

    patterns = sub.add_parser("patterns", help="list or count bounded patterns")
    patterns.add_argument("--rank", type=int, required=True)
    patterns.add_argument("--twist", type=_int_vector, required=True)
    patterns.add_argument("--weight", type=_int_vector, help="restrict to one weight")
    patterns.add_argument("--count-only", action="store_true", dest="count_only")
    patterns.add_argument("--format", choices=("text", "json"), default="text")
    patterns.add_argument("--output", help="write to this path instead of stdout")
    patterns.set_defaults(func=cmd_patterns)

    explain = sub.add_parser("explain", help="show one pattern's decorated graph and factors")
    explain.add_argument("--pattern", required=True, help='literal like "1,1,0,0;1,0"')
    explain.add_argument("--twist", type=_int_vector, required=True)
    explain.add_argument("--n", type=int, required=True)
    explain.add_argument("--rank", type=int, help="optional cross-check of the literal")
    explain.add_argument("--output", help="write to this path instead of stdout")
    explain.set_defaults(func=cmd_explain)

    verify = sub.add_parser("verify", help="run the self-verification suites")
    verify.add_argument(
        "--suite",
        choices=("dimension", "tokuyama", "rank2", "example2", "all"),
        required=True,
    )
    verify.add_argument("--max-rank", type=int, default=4, dest="max_rank")
    verify.add_argument(
        "--max-twist",
        type=int,
        default=None,
        dest="max_twist",
        help="defaults to the acceptance grid of the chosen suite",
    )
    verify.add_argument("--max-n", type=int, default=4, dest="max_n")
    verify.add_argument("--rank", type=int, help="largest rank for the tokuyama suite")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--output", help="write to this path instead of stdout")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
