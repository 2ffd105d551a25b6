"""Command-line front end: JSON job in, JSON result out.

Exit status 0 on success, 1 on domain errors, 2 on usage errors; failures
print {"error": {"code", "message", "context"}}.
"""

import argparse
import json
import random
import sys
from functools import lru_cache
from importlib import resources
from typing import List, Optional

import jsonschema

from .curve import Curve, Point
from .divisor import HRep, PointDivisor, points_from_rep, rep_from_points_g, rep_from_points_g1
from .errors import TrigonalError
from .linfun import YLinFun
from .oracle import check_reduction, exhaustive_class_census
from .poly import Poly
from .reduction import add_divisors, invert, reduce_divisor
from .sampling import random_divisor

COMMANDS = ("curve-check", "rep", "reduce", "add", "invert", "verify", "census")


class UsageError(Exception):
    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context


@lru_cache(maxsize=None)
def _schema_doc() -> dict:
    text = resources.files("trigonal").joinpath("schemas/job.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_job(command: str, job) -> None:
    doc = _schema_doc()
    schema = {"$schema": doc["$schema"], "$defs": doc["$defs"], "$ref": f"#/$defs/{command}"}
    try:
        jsonschema.validate(job, schema)
    except jsonschema.ValidationError as err:
        path = "/".join(str(p) for p in err.absolute_path)
        raise UsageError(f"invalid job: {err.message}", path=path) from None


# -- decoding ------------------------------------------------------------------------


def _points(curve: Curve, raw: List) -> List[Point]:
    return [curve.point(x, y) for x, y in raw]


def _hrep(curve: Curve, doc: dict) -> HRep:
    return HRep(Poly(curve.field, doc["H"]).monic(), YLinFun.from_json(curve.field, doc["I"], 2 * curve.genus))


def _operand(curve: Curve, doc: dict) -> HRep:
    if "points" in doc:
        return rep_from_points_g(curve, _points(curve, doc["points"]))
    return _hrep(curve, doc)


def _maybe_points(curve: Curve, rep) -> Optional[List]:
    try:
        return points_from_rep(curve, rep).to_json()
    except TrigonalError:
        return None


# -- commands --------------------------------------------------------------------------


def cmd_curve_check(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    g = c.genus
    return {
        "curve": c.to_json(),
        "s": c.s,
        "genus": g,
        "gap_sequence": c.gap_sequence(),
        "monomials": [{"i": mo.i, "j": mo.j, "weight": mo.weight} for mo in c.monomial_basis(g + 2)],
        "nondegeneracy_certified": c.nondegeneracy_certified,
    }


def cmd_rep(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    pts = _points(c, job["points"])
    if len(pts) == c.genus:
        out = rep_from_points_g(c, pts).to_json()
    elif len(pts) == c.genus + 1:
        out = rep_from_points_g1(c, pts).to_json()
    else:
        raise UsageError(f"rep needs g = {c.genus} or g+1 points, got {len(pts)}")
    out["points"] = PointDivisor(c, pts).to_json()
    return out


def cmd_reduce(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    if "random_degree" in job:
        pts = random_divisor(c, job["random_degree"], random.Random(args.seed))
    else:
        pts = _points(c, job["points"])
    rep, trace = reduce_divisor(c, pts, trace=True)
    out = {"curve": c.to_json(), "points": PointDivisor(c, pts).to_json(), **rep.to_json()}
    if args.trace:
        out["trace"] = trace.to_json()
    if args.points:
        out["reduced_points"] = _maybe_points(c, rep)
    return out


def cmd_add(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    a, b = _operand(c, job["a"]), _operand(c, job["b"])
    rep, trace = add_divisors(c, a, b, trace=True)
    out = {"curve": c.to_json(), **rep.to_json()}
    if args.trace:
        out["trace"] = trace.to_json()
    if args.points:
        out["reduced_points"] = _maybe_points(c, rep)
    return out


def cmd_invert(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    rep = invert(c, _hrep(c, job))
    out = {"curve": c.to_json(), **rep.to_json()}
    if args.points:
        out["reduced_points"] = _maybe_points(c, rep)
    return out


def cmd_verify(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    verdict = check_reduction(c, _points(c, job["points"]), _hrep(c, job))
    return verdict.to_json()


def cmd_census(job, args) -> dict:
    c = Curve.from_json(job["curve"])
    return exhaustive_class_census(c, reduce_divisor, jobs=args.jobs)


HANDLERS = {
    "curve-check": cmd_curve_check,
    "rep": cmd_rep,
    "reduce": cmd_reduce,
    "add": cmd_add,
    "invert": cmd_invert,
    "verify": cmd_verify,
    "census": cmd_census,
}


# -- driver -----------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trigonal", description="Divisor arithmetic on trigonal (3,s) curves.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-", help="job JSON file, or - for standard input")
    p.add_argument("--trace", action="store_true", help="include the reduction trace")
    p.add_argument("--points", action="store_true", help="also emit the reduced divisor as points (small fields)")
    p.add_argument("--seed", type=int, default=0, help="seed for jobs with random_degree")
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for census")
    return p


def _dump(obj, fmt: str) -> str:
    if fmt == "pretty":
        return json.dumps(obj, sort_keys=True, indent=2, default=str)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def _error(code: str, message: str, context: dict) -> dict:
    return {"error": {"code": code, "message": message, "context": context}}


def run(argv: Optional[List[str]] = None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    fmt = "json"
    try:
        args = build_parser().parse_intermixed_args(argv)
        fmt = args.format
        try:
            if args.input == "-":
                text = stdin.read()
            else:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
        except OSError as err:
            raise UsageError(f"cannot read input: {err.strerror}", path=args.input) from None
        try:
            job = json.loads(text)
        except json.JSONDecodeError as err:
            raise UsageError(f"input is not valid JSON: {err.msg}", line=err.lineno, column=err.colno) from None
        validate_job(args.command, job)
        result = HANDLERS[args.command](job, args)
    except UsageError as err:
        stdout.write(_dump(_error("UsageError", err.message, err.context), fmt) + "\n")
        return 2
    except TrigonalError as err:
        ctx = dict(err.context)
        if getattr(err, "trace", None) is not None:
            ctx["trace"] = err.trace.to_json()
        stdout.write(_dump(_error(err.code, err.message or str(err), ctx), fmt) + "\n")
        return 1
    except (ValueError, ArithmeticError) as err:
        stdout.write(_dump(_error(type(err).__name__, str(err), {}), fmt) + "\n")
        return 1
    stdout.write(_dump(result, fmt) + "\n")
    return 0


def main() -> None:
    sys.exit(run())
