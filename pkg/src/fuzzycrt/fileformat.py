"""
JSON instance files.

Integers travel as decimal strings and rationals as ``"p/q"`` strings so that
nothing is lost to floating point.  Plain JSON integers are accepted on input.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, Union

from .core import Constraint, FscInstance
from .intervals import Interval
from .mixing import MixingInstance
from .realtime import Task, TaskSet
from .reduction import DdaInstance

__all__ = ["FormatError", "to_doc", "from_doc", "dumps", "loads", "int_str", "frac_str"]

Instance = Union[FscInstance, TaskSet, MixingInstance, DdaInstance]


class FormatError(ValueError):
    pass


def int_str(v: int) -> str:
    return str(int(v))


def frac_str(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _int(v: Any, what: str) -> int:
    if isinstance(v, bool):
        raise FormatError(f"{what}: expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip())
        except ValueError:
            pass
    raise FormatError(f"{what}: expected an integer, got {v!r}")


def _frac(v: Any, what: str) -> Fraction:
    if isinstance(v, (int, str)) and not isinstance(v, bool):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            pass
    raise FormatError(f"{what}: expected a rational like \"p/q\", got {v!r}")


def _ints(doc: Dict, key: str):
    vals = doc.get(key)
    if not isinstance(vals, list):
        raise FormatError(f"field {key!r} must be a list")
    return [_int(v, f"{key}[{k}]") for k, v in enumerate(vals)]


def to_doc(inst: Instance) -> Dict[str, Any]:
    if isinstance(inst, FscInstance):
        doc = {
            "kind": "fsc",
            "capacities": [int_str(c.a) for c in inst.constraints],
            "lower": [int_str(c.lower) for c in inst.constraints],
            "upper": [int_str(c.upper) for c in inst.constraints],
        }
        if inst.s_domain is not None:
            doc["s_domain"] = {"lo": int_str(inst.s_domain.lo), "hi": int_str(inst.s_domain.hi)}
        return doc
    if isinstance(inst, TaskSet):
        return {
            "kind": "tasks",
            "tasks": [{"C": int_str(t.C), "T": int_str(t.T), "J": int_str(t.J)} for t in inst.tasks],
        }
    if isinstance(inst, MixingInstance):
        return {
            "kind": "mixing",
            "capacities": [int_str(v) for v in inst.a],
            "lower": [int_str(v) for v in inst.b],
        }
    if isinstance(inst, DdaInstance):
        return {
            "kind": "dda",
            "alphas": [frac_str(a) for a in inst.alphas],
            "N": int_str(inst.N),
            "eps": frac_str(inst.eps),
        }
    raise TypeError(f"cannot serialize {type(inst).__name__}")


def from_doc(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise FormatError("instance document must be a JSON object")
    kind = doc.get("kind")
    if kind == "fsc":
        caps, lo, hi = _ints(doc, "capacities"), _ints(doc, "lower"), _ints(doc, "upper")
        if not len(caps) == len(lo) == len(hi):
            raise FormatError("capacities, lower and upper differ in length")
        dom = doc.get("s_domain")
        if dom is not None:
            if not isinstance(dom, dict):
                raise FormatError("s_domain must be an object with lo and hi")
            dom = Interval(_int(dom.get("lo"), "s_domain.lo"), _int(dom.get("hi"), "s_domain.hi"))
        return FscInstance(tuple(Constraint(*row) for row in zip(caps, lo, hi)), dom)
    if kind == "tasks":
        rows = doc.get("tasks")
        if not isinstance(rows, list):
            raise FormatError("field 'tasks' must be a list")
        tasks = []
        for k, t in enumerate(rows):
            if not isinstance(t, dict):
                raise FormatError(f"tasks[{k}] must be an object")
            tasks.append(
                Task(
                    _int(t.get("C"), f"tasks[{k}].C"),
                    _int(t.get("T"), f"tasks[{k}].T"),
                    _int(t.get("J", 0), f"tasks[{k}].J"),
                )
            )
        return TaskSet(tuple(tasks))
    if kind == "mixing":
        return MixingInstance(tuple(_ints(doc, "capacities")), tuple(_ints(doc, "lower")))
    if kind == "dda":
        alphas = doc.get("alphas")
        if not isinstance(alphas, list):
            raise FormatError("field 'alphas' must be a list")
        return DdaInstance(
            tuple(_frac(a, f"alphas[{k}]") for k, a in enumerate(alphas)),
            _int(doc.get("N"), "N"),
            _frac(doc.get("eps"), "eps"),
        )
    raise FormatError(f"unknown instance kind {kind!r}")


def dumps(inst: Instance) -> str:
    return json.dumps(to_doc(inst))


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from None
    return from_doc(doc)
