"""Command-line front end.

Exit codes::

    0  success (solvable / verified / schedule found)
    1  infeasible λ, or no synchronising offset
    2  invalid input (interval invariants, non-finite data, bad λ)
    3  shape mismatch
    4  unreadable or malformed file
    5  theorem verification failed
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from . import io
from .core import DimensionError
from .generators import random_interval_system, random_rational
from .scheduling import solve_schedule
from .spectrum import (
    IntervalSystem,
    IntervalSystemError,
    compute_spectrum,
    membership,
    synth_matrices,
    verify_theorem,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INVALID = 2
EXIT_SHAPE = 3
EXIT_PARSE = 4
EXIT_VERIFY_FAILED = 5


class CommandError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _fmt(v) -> str:
    return io.format_scalar(v)


def _pair(lo, hi) -> list:
    return [io.scalar_to_json(lo), io.scalar_to_json(hi)]


def _vec(xs) -> list:
    return [io.scalar_to_json(v) for v in xs]


def _witness_hash(x) -> str:
    return hashlib.sha256(" ".join(_fmt(v) for v in x).encode()).hexdigest()[:12]


def _load_system(arg: str, seed) -> IntervalSystem:
    if arg == "random":
        return random_interval_system(random.Random(seed or 0))
    return io.intervals_from_json(io.load_json(arg))


def _load_pencil(a_path, b_path):
    A = io.matrix_from_json(io.load_json(a_path))
    B = io.matrix_from_json(io.load_json(b_path))
    if A.shape != B.shape:
        raise CommandError(f"A is {A.shape[0]}x{A.shape[1]} but B is {B.shape[0]}x{B.shape[1]}", EXIT_SHAPE)
    return A, B


def _components_text(components) -> str:
    return " ".join(f"[{_fmt(lo)}, {_fmt(hi)}]" for lo, hi in components) or "(empty)"


def cmd_synth(args, out) -> tuple[int, dict]:
    system = _load_system(args.intervals, args.seed)
    A, B = synth_matrices(system)
    a_path, b_path = f"{args.out_prefix}A.json", f"{args.out_prefix}B.json"
    io.dump_json(io.matrix_to_json(A), a_path)
    io.dump_json(io.matrix_to_json(B), b_path)
    if not args.json:
        print(f"wrote {a_path} and {b_path} ({A.nrows}x{A.ncols})", file=out)
        print(f"predicted spectrum: {_components_text(system.intervals)}", file=out)
    return EXIT_OK, {
        "A": a_path,
        "B": b_path,
        "predicted_components": [_pair(a, c) for a, c in system],
    }


def cmd_check(args, out) -> tuple[int, dict]:
    A, B = _load_pencil(args.A, args.B)
    lam = io.parse_scalar(args.lam)
    if lam is io.BOTTOM:
        raise CommandError("λ must be finite", EXIT_INVALID)
    result = membership(A, B, lam)
    doc = {
        "lambda": io.scalar_to_json(lam),
        "status": result.status.value,
        "method": result.method,
        "reason": result.reason,
        "iterations": result.iterations,
    }
    if result.solvable:
        doc["witness"] = _vec(result.witness_x)
        doc["common_value"] = _vec(result.witness_z)
    if not args.json:
        print(f"lambda: {_fmt(lam)}", file=out)
        print(f"status: {result.status.value}", file=out)
        print(f"method: {result.method} ({result.reason})", file=out)
        if result.solvable:
            print("witness: " + " ".join(_fmt(v) for v in result.witness_x), file=out)
            print("common value: " + " ".join(_fmt(v) for v in result.witness_z), file=out)
    return (EXIT_OK if result.solvable else EXIT_INFEASIBLE), doc


def cmd_spectrum(args, out) -> tuple[int, dict]:
    A, B = _load_pencil(args.A, args.B)
    spec = compute_spectrum(A, B)
    bounds = None if spec.bounds is None else _pair(spec.bounds.lo, spec.bounds.hi)
    if not args.json:
        if spec.bounds is None:
            print("bounds: empty", file=out)
        else:
            print(f"bounds: [{_fmt(spec.bounds.lo)}, {_fmt(spec.bounds.hi)}]", file=out)
        print(f"components: {_components_text(spec.components)}", file=out)
        print(f"heuristic: {'yes' if spec.heuristic else 'no'}", file=out)
    return EXIT_OK, {
        "bounds": bounds,
        "components": [_pair(lo, hi) for lo, hi in spec.components],
        "heuristic": spec.heuristic,
    }


def cmd_verify(args, out) -> tuple[int, dict]:
    system = _load_system(args.intervals, args.seed)
    extra = []
    if args.seed is not None and args.intervals != "random":
        rng = random.Random(args.seed)
        first, last = system.intervals[0][0], system.intervals[-1][1]
        lo, hi = int(first) - 2, int(last) + 2
        extra = [random_rational(rng, lo, hi, 4) for _ in range(args.samples)]
    report = verify_theorem(system, args.samples, scan=not args.no_scan, extra_points=extra)
    checks = []
    for c in report.checks:
        item = {"name": c.name, "passed": c.passed, "detail": c.detail}
        if c.lam is not None:
            item["lambda"] = io.scalar_to_json(c.lam)
        if c.witness is not None:
            item["witness_hash"] = _witness_hash(c.witness)
        checks.append(item)
    doc = {
        "intervals": [_pair(a, c) for a, c in system],
        "passed": report.passed,
        "checks": checks,
    }
    if report.spectrum is not None:
        doc["components"] = [_pair(lo, hi) for lo, hi in report.spectrum.components]
    if not args.json:
        print(f"intervals: {_components_text(system.intervals)}", file=out)
        for c in report.checks:
            where = "" if c.lam is None else f" lambda={_fmt(c.lam)}"
            wh = "" if c.witness is None else f" witness={_witness_hash(c.witness)}"
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name}{where}{wh} {c.detail}".rstrip(), file=out)
        print(f"{'passed' if report.passed else 'FAILED'}: {len(report.checks) - len(report.failures)}"
              f"/{len(report.checks)} checks", file=out)
    return (EXIT_OK if report.passed else EXIT_VERIFY_FAILED), doc


def cmd_schedule(args, out) -> tuple[int, dict]:
    inst = io.instance_from_json(io.load_json(args.instance))
    spec = compute_spectrum(inst.durations_a, inst.durations_b)
    sols = solve_schedule(inst, spec)
    chosen = {}
    for s in sols:
        lo, hi = spec.components[s.component]
        if s.component not in chosen or s.lam == (lo + hi) / 2:
            chosen[s.component] = s
    doc = {
        "components": [_pair(lo, hi) for lo, hi in spec.components],
        "schedules": [
            {
                "lambda": io.scalar_to_json(s.lam),
                "component": k,
                "starts_x": _vec(s.starts_x),
                "starts_y": _vec(s.starts_y),
                "completion": _vec(s.completion),
            }
            for k, s in sorted(chosen.items())
        ],
    }
    if not args.json:
        if not spec.components:
            print("no synchronizing offset exists", file=out)
        else:
            print(f"feasible offsets: {_components_text(spec.components)}", file=out)
            for k, s in sorted(chosen.items()):
                print(
                    f"component {k}: lambda={_fmt(s.lam)} "
                    f"starts_x=({' '.join(map(_fmt, s.starts_x))}) "
                    f"starts_y=({' '.join(map(_fmt, s.starts_y))}) "
                    f"completion=({' '.join(map(_fmt, s.completion))})",
                    file=out,
                )
    return (EXIT_OK if spec.components else EXIT_INFEASIBLE), doc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxpencil", description="Exact max-plus two-sided eigenproblem toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
        return sp

    sp = common(sub.add_parser("synth", help="build a pencil whose spectrum is the given intervals"))
    sp.add_argument("intervals", help="interval JSON file, or 'random' (uses --seed)")
    sp.add_argument("out_prefix", help="prefix for the A.json / B.json output files")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_synth)

    sp = common(sub.add_parser("check", help="decide whether λ is an eigenvalue"))
    sp.add_argument("A")
    sp.add_argument("B")
    sp.add_argument("--lambda", dest="lam", required=True, help="exact rational, e.g. 1/2")
    sp.set_defaults(func=cmd_check)

    sp = common(sub.add_parser("spectrum", help="scan the spectrum of a finite pencil"))
    sp.add_argument("A")
    sp.add_argument("B")
    sp.set_defaults(func=cmd_spectrum)

    sp = common(sub.add_parser("verify", help="check a synthesized pencil against its intervals"))
    sp.add_argument("intervals", help="interval JSON file, or 'random' (uses --seed)")
    sp.add_argument("--samples", type=int, default=5, help="samples per interval and per gap")
    sp.add_argument("--seed", type=int, default=None, help="random system, or extra random λ samples")
    sp.add_argument("--no-scan", action="store_true", help="skip the full breakpoint scan")
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("schedule", help="synchronise two machine banks"))
    sp.add_argument("instance")
    sp.set_defaults(func=cmd_schedule)
    return p


def _glue_lambda(argv: list) -> list:
    # argparse would read a negative value such as -1/2 as an option flag
    glued, i = [], 0
    while i < len(argv):
        if argv[i] == "--lambda" and i + 1 < len(argv):
            glued.append(f"--lambda={argv[i + 1]}")
            i += 2
        else:
            glued.append(argv[i])
            i += 1
    return glued


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_lambda(argv))
    try:
        code, doc = args.func(args, out)
    except CommandError as exc:
        code, msg = exc.code, str(exc)
    except io.ParseError as exc:
        code, msg = EXIT_PARSE, str(exc)
    except DimensionError as exc:
        code, msg = EXIT_SHAPE, str(exc)
    except IntervalSystemError as exc:
        code, msg = EXIT_INVALID, f"invalid interval system: {exc}"
    except ValueError as exc:
        code, msg = EXIT_INVALID, str(exc)
    else:
        if args.json:
            print(json.dumps(doc), file=out)
        return code
    if args.json:
        print(json.dumps({"error": msg, "exit_code": code}), file=out)
    else:
        print(f"error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
