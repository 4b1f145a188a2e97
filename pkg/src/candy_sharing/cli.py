"""Command-line front end.

Exit status: 0 success, 1 domain error (bad state, unmet precondition),
2 a theorem check failed, 64 malformed command line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .classify import (
    NotPeriodic,
    TheoremViolation,
    classify_periodic,
    monopoly,
    predict_outcome,
    predict_symmetric,
)
from .core import (
    CandyError,
    deficiency,
    format_state,
    index,
    is_symmetric,
    parse_state,
    share_one,
    step,
    tau,
)
from .dynamics import DEFAULT_MAX_STEPS, Trajectory, detect_cycle
from .enumeration import (
    DEFAULT_BUDGET,
    THEOREMS,
    check_states,
    count_states,
    enumerate_states,
    random_states,
    verify,
)

SCHEMA = 1
EXIT_OK, EXIT_DOMAIN, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2, 64


class MissingPrefix(CandyError):
    pass


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_range(text: str) -> list[int]:
    """``"3..8"``, ``"4,6,8"`` or a mix like ``"3..5,9"``."""
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise ValueError
                out.update(range(lo, hi + 1))
            else:
                out.add(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad ring-size range {text!r}") from None
    if min(out) < 1:
        raise argparse.ArgumentTypeError(f"ring sizes must be positive: {text!r}")
    return sorted(out)


def render_trajectory(traj: Trajectory, width: int = 80) -> str:
    """One line per visited state with sharers starred, and a rule where the cycle starts."""
    if traj.steps is None:
        raise MissingPrefix("trajectory was detected without keeping its steps")
    digits = len(str(len(traj.steps)))
    lines = []
    for t, s in enumerate(traj.steps):
        if t == traj.transient_length:
            lines.append(f"-- cycle, period {traj.period} --")
        cells = ",".join(f"{c}*" if c >= 2 else str(c) for c in s)
        lines.append(f"{t:>{digits}}  {cells}")
    # overlong lines are cut and end in ">"
    lines = [x if len(x) <= width else x[: max(width - 1, 0)] + ">" for x in lines]
    return "\n".join(lines) + "\n"


def _emit_json(obj: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=False) + "\n")


def _trajectory_text(traj: Trajectory) -> str:
    cycle = " -> ".join(format_state(s) for s in traj.cycle)
    return (
        f"initial:   {format_state(traj.initial)}\n"
        f"transient: {traj.transient_length}\n"
        f"period:    {traj.period}\n"
        f"cycle:     {cycle}\n"
    )


# -- subcommands -------------------------------------------------------------


def cmd_simulate(args, out):
    s = parse_state(args.state)
    traj = detect_cycle(s, args.max_steps, keep_steps=args.render)
    if args.format == "json":
        obj = traj.to_json()
        if args.render:
            obj["render"] = render_trajectory(traj, args.width)
        _emit_json(obj, out)
    else:
        out.write(_trajectory_text(traj))
        if args.render:
            out.write(render_trajectory(traj, args.width))
    return EXIT_OK


def cmd_render(args, out):
    traj = detect_cycle(parse_state(args.state), args.max_steps, keep_steps=True)
    out.write(render_trajectory(traj, args.width))
    return EXIT_OK


def cmd_step(args, out):
    s = parse_state(args.state)
    result = step(s) if args.child is None else share_one(s, args.child)
    if args.format == "json":
        _emit_json({"state": list(s), "child": args.child, "result": list(result)}, out)
    else:
        out.write(format_state(result) + "\n")
    return EXIT_OK


def cmd_index(args, out):
    s = parse_state(args.state)
    if args.start is not None or args.length is not None:
        if args.start is None or args.length is None:
            raise UsageError("index: --start and --length go together")
        value = deficiency(s, args.start, args.length)
        key = "deficiency"
    else:
        value = index(s)
        key = "index"
    if args.format == "json":
        _emit_json({"state": list(s), key: value}, out)
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_tau(args, out):
    s = parse_state(args.state)
    value = tau(s)
    if args.format == "json":
        _emit_json({"state": list(s), "tau": value}, out)
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _report_out(report, s, args, out):
    if args.format == "json":
        _emit_json({"state": list(s), **report.to_json()}, out)
    else:
        out.write(f"tau={report.tau} class={report.predicted}\n")


def cmd_predict(args, out):
    s = parse_state(args.state)
    _report_out(predict_outcome(s), s, args, out)
    return EXIT_OK


def cmd_symmetric(args, out):
    s = parse_state(args.state)
    if not args.predict:
        sym = is_symmetric(s)
        if args.format == "json":
            _emit_json({"state": list(s), "symmetric": sym}, out)
        else:
            out.write(f"{'symmetric' if sym else 'not symmetric'}\n")
        return EXIT_OK
    _report_out(predict_symmetric(s), s, args, out)
    return EXIT_OK


def cmd_classify(args, out):
    s = parse_state(args.state)
    cls = classify_periodic(s)
    if args.format == "json":
        _emit_json({"state": list(s), **cls.to_json()}, out)
    else:
        out.write(f"{cls}\n")
    return EXIT_OK


def cmd_monopoly(args, out):
    s = monopoly(args.n)
    if args.format == "json":
        _emit_json({"n": args.n, "state": list(s)}, out)
    else:
        out.write(format_state(s) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    m = args.n if args.m is None else args.m
    if args.count_only and not args.unique:
        count = count_states(args.n, m)
    else:
        states = enumerate_states(args.n, m, unique=args.unique, budget=args.budget)
        if args.count_only:
            count = sum(1 for _ in states)
        else:
            states = list(states)
            if args.format == "json":
                _emit_json(
                    {"n": args.n, "m": m, "unique": args.unique,
                     "states": [list(s) for s in states]},
                    out,
                )
            else:
                out.writelines(format_state(s) + "\n" for s in states)
            return EXIT_OK
    if args.format == "json":
        _emit_json({"n": args.n, "m": m, "unique": args.unique, "count": count}, out)
    else:
        out.write(f"{count}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.sample:
        states = [
            s
            for i, n in enumerate(args.n)
            for s in random_states(n, n, args.sample, args.seed + i)
        ]
        report = check_states(args.theorem, states, jobs=args.jobs, label=args.n)
    else:
        report = verify(args.theorem, args.n, jobs=args.jobs, budget=args.budget)
    if args.format == "json":
        _emit_json(report.to_json(timing=args.timing), out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, ["theorem", "n", "states_checked", "failures"], lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(report.csv_rows())
        out.write(buf.getvalue())
    else:
        status = "PASS" if report.ok else "FAIL"
        out.write(
            f"{status} {report.theorem} n={','.join(map(str, report.n))} "
            f"states={report.states_checked} failures={len(report.failures)} "
            f"elapsed={report.elapsed:.2f}s\n"
        )
        for f in report.failures[:20]:
            out.write(
                f"  {format_state(f['state'])}: expected {f['expected']}, "
                f"observed {f['observed']}\n"
            )
    return EXIT_OK if report.ok else EXIT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="candy", description="Balanced candy sharing on a ring.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_state(name, help, formats=("text", "json")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--state", required=True, help="comma-separated counts, e.g. 0,2,1,1")
        sp.add_argument("--format", choices=formats, default="text")
        return sp

    sp = with_state("simulate", "run to the cycle and report transient and period")
    sp.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    sp.add_argument("--render", action="store_true")
    sp.add_argument("--width", type=int, default=80)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("render", help="draw the trajectory one step per line")
    sp.add_argument("--state", required=True)
    sp.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    sp.add_argument("--width", type=int, default=80)
    sp.set_defaults(func=cmd_render)

    sp = with_state("step", "one sharing round, or a single child sharing")
    sp.add_argument("--child", type=int, help="1-based child; only this child shares")
    sp.set_defaults(func=cmd_step)

    sp = with_state("index", "sum of substring deficiencies")
    sp.add_argument("--start", type=int, help="deficiency of one substring instead")
    sp.add_argument("--length", type=int)
    sp.set_defaults(func=cmd_index)

    with_state("tau", "the conserved tau value").set_defaults(func=cmd_tau)
    with_state("predict", "long-run class from tau").set_defaults(func=cmd_predict)
    with_state("classify", "family of a periodic state").set_defaults(func=cmd_classify)

    sp = with_state("symmetric", "mirror-symmetry test")
    sp.add_argument("--predict", action="store_true",
                    help="also predict the outcome, checking the symmetric-state claim")
    sp.set_defaults(func=cmd_symmetric)

    sp = sub.add_parser("monopoly", help="the state with all candies on child 1")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_monopoly)

    sp = sub.add_parser("enumerate", help="list states with n children and m candies")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, help="candies (default n)")
    sp.add_argument("--unique", action="store_true", help="one state per rotation class")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check a theorem on every state of the given sizes")
    sp.add_argument("--theorem", choices=THEOREMS, required=True)
    sp.add_argument("--n", type=parse_range, required=True, help="e.g. 3..8 or 4,6,8")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--sample", type=int, default=0,
                    help="check this many random states per n instead of all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except TheoremViolation as exc:
        err.write(f"theorem violated: {exc}\n")
        return EXIT_FALSIFIED
    except (CandyError, NotPeriodic) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
