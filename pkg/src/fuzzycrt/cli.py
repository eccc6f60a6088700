"""
Command-line front end.

Every command prints exactly one JSON object on stdout.  Exit codes:
0 success, 1 infeasible, 2 bad input or violated precondition, 3 the
brute-force oracle refused because its search window exceeds ``--limit``.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .core import FscInstance, check_guess, is_feasible
from .errors import InconsistencyError, ResourceLimitError
from .fileformat import FormatError, from_doc, int_str, to_doc
from .generators import gen_random_dda, gen_random_harmonic
from .mixing import MixingInstance, mixing_min_s
from .optimize import solve
from .oracle import oracle_max_s, oracle_min_s
from .realtime import TaskSet, response_solution, reveal
from .reduction import DdaInstance, dda_to_bms, oracle_dda

EXIT_OK, EXIT_INFEASIBLE, EXIT_ERROR, EXIT_LIMIT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would print usage and sys.exit(2); we still owe a JSON document
    def error(self, message):
        raise _UsageError(message)


def _load(path: str, *kinds):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: not valid JSON: {e}") from None
    inst = from_doc(doc)
    if kinds and not isinstance(inst, kinds):
        names = ", ".join(k.__name__ for k in kinds)
        raise FormatError(f"{path}: this command expects {names}, got kind {doc.get('kind')!r}")
    return inst


def _ints(xs):
    return [int_str(v) for v in xs]


def _cmd_feasible(args):
    inst = _load(args.instance, FscInstance)
    ok = is_feasible(inst)
    return {"feasible": ok}, EXIT_OK if ok else EXIT_INFEASIBLE


def _cmd_solve(args):
    inst = _load(args.instance, FscInstance)
    sol = solve(inst, objective=args.objective, method=args.method)
    if sol is None:
        return {"s": None, "x": None}, EXIT_INFEASIBLE
    return {"s": int_str(sol.s), "x": _ints(sol.x)}, EXIT_OK


def _cmd_check(args):
    inst = _load(args.instance, FscInstance)
    sol = check_guess(inst, args.s)
    if sol is None:
        return {"s": int_str(args.s), "x": None}, EXIT_INFEASIBLE
    return {"s": int_str(sol.s), "x": _ints(sol.x)}, EXIT_OK


def _cmd_mixing(args):
    inst = _load(args.instance, MixingInstance)
    s, x = mixing_min_s(inst.a, inst.b)
    return {"s": int_str(s), "x": _ints(x)}, EXIT_OK


def _cmd_wcrt(args):
    ts = _load(args.instance, TaskSet)
    xn = reveal(ts)
    if xn is None:
        return {"x_n": None, "x": None}, EXIT_INFEASIBLE
    return {"x_n": int_str(xn), "x": _ints(response_solution(ts, xn))}, EXIT_OK


def _cmd_oracle(args):
    inst = _load(args.instance, FscInstance, DdaInstance)
    if args.limit < 1:
        raise FormatError("--limit must be >= 1")
    if isinstance(inst, DdaInstance):
        if inst.N > args.limit:
            raise ResourceLimitError(f"would enumerate {inst.N} values of Q, limit is {args.limit}")
        q = oracle_dda(inst)
        out = {"Q": None if q is None else int_str(q)}
        return out, EXIT_INFEASIBLE if q is None else EXIT_OK
    pick = oracle_max_s if args.objective == "max" else oracle_min_s
    s = pick(inst, args.limit)
    return {"s": None if s is None else int_str(s)}, EXIT_INFEASIBLE if s is None else EXIT_OK


def _cmd_gen(args):
    if args.family == "random":
        inst = gen_random_harmonic(args.n, args.max_ratio, args.seed, args.plant)
    else:
        inst = gen_random_dda(args.n, args.max_den, args.max_N, args.seed)
        if args.embed:
            inst = dda_to_bms(inst)
    return to_doc(inst), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fuzzycrt", description="Fuzzy simultaneous congruences and bounded mixing sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_instance(name, helptext, fn):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("instance", help="instance JSON file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    with_instance("feasible", "decide feasibility of a harmonic fsc instance", _cmd_feasible)
    sp = with_instance("solve", "smallest or largest feasible s with its x", _cmd_solve)
    sp.add_argument("--objective", choices=("min", "max"), default="min")
    sp.add_argument("--method", choices=("binary", "aggregate"), default="aggregate")
    sp = with_instance("check", "test a single guess s", _cmd_check)
    sp.add_argument("--s", type=int, required=True)
    with_instance("mixing", "minimise s over an unbounded mixing set", _cmd_mixing)
    with_instance("wcrt", "reveal x_n for a harmonic task set with jitter", _cmd_wcrt)
    sp = with_instance("oracle", "brute-force answer (fsc or dda instance)", _cmd_oracle)
    sp.add_argument("--limit", type=int, default=10**7)
    sp.add_argument("--objective", choices=("min", "max"), default="min")

    gp = sub.add_parser("gen", help="print a seeded random instance")
    gp.set_defaults(fn=_cmd_gen)
    gp.add_argument("family", choices=("random", "dda"))
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--n", type=int, default=4, help="number of constraints / alphas")
    gp.add_argument("--max-ratio", type=int, default=4)
    gp.add_argument("--plant", action="store_true", help="guarantee feasibility (random)")
    gp.add_argument("--max-den", type=int, default=10)
    gp.add_argument("--max-N", dest="max_N", type=int, default=50)
    gp.add_argument("--embed", action="store_true", help="emit the dda instance as fsc")
    return p


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out, code = args.fn(args)
    except _UsageError as e:
        out, code = {"error": f"usage: {e}"}, EXIT_ERROR
    except ResourceLimitError as e:
        out, code = {"error": str(e)}, EXIT_LIMIT
    except (ValueError, IndexError, InconsistencyError) as e:
        # PreconditionError, NotHarmonicError and FormatError are ValueErrors
        out, code = {"error": str(e)}, EXIT_ERROR
    if "error" in out:
        print(f"fuzzycrt: {out['error']}", file=stderr)
    print(json.dumps(out), file=stdout)
    return code


def main():
    sys.exit(run())
