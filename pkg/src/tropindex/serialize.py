"""JSON forms of polynomials, sequences, witnesses and reports.

Rationals always travel as strings (``"3"`` or ``"-1/3"``) so nothing is lost
to JSON number precision.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .indices import ISOLATING_INTERVAL, IndexReport, Witness
from .poly import GammaSequence, Polynomial
from .preservers import PreservationVerdict, SequenceClass
from .realroot import Interval

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def fmt_rational(q: Fraction) -> str:
    return str(Fraction(q))


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{value!r}: rationals must be integers or 'p/q' strings")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.fullmatch(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError as exc:
            raise ParseError(f"zero denominator: {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def parse_csv(text: str) -> list[Fraction]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty list")
    return [parse_rational(p) for p in parts]


def _rationals(obj: dict, key: str) -> list[Fraction]:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"expected an object with a {key!r} list")
    values = obj[key]
    if not isinstance(values, list):
        raise ParseError(f"{key!r} must be a list")
    return [parse_rational(v) for v in values]


def polynomial_to_json(f: Polynomial) -> dict:
    return {"coeffs": [fmt_rational(c) for c in f.coeffs]}


def polynomial_from_json(obj: dict) -> Polynomial:
    return Polynomial(_rationals(obj, "coeffs"))


def gamma_to_json(gamma: GammaSequence) -> dict:
    return {"gamma": [fmt_rational(v) for v in gamma.values]}


def gamma_from_json(obj: dict) -> GammaSequence:
    return GammaSequence(_rationals(obj, "gamma"))


def witness_to_json(w: Witness | None) -> dict | None:
    if w is None:
        return None
    if w.kind != ISOLATING_INTERVAL:
        return {"kind": "point", "z": fmt_rational(w.point)}
    return {
        "kind": "interval",
        "lo": fmt_rational(w.interval.lo),
        "hi": fmt_rational(w.interval.hi),
        "certificate": [fmt_rational(c) for c in w.certificate.coeffs],
    }


def witness_from_json(obj: dict | None) -> Witness | None:
    if obj is None:
        return None
    if obj.get("kind") == "point":
        return Witness.exact(parse_rational(obj["z"]))
    if obj.get("kind") == "interval":
        iv = Interval(parse_rational(obj["lo"]), parse_rational(obj["hi"]))
        return Witness.algebraic(iv, Polynomial(_rationals(obj, "certificate")))
    raise ParseError(f"unknown witness kind {obj.get('kind')!r}")


def report_to_json(report: IndexReport) -> dict:
    out: dict = {
        "degree": report.degree,
        "indices": [
            {
                "m": e.m,
                "tropical": e.tropical,
                "central": e.central,
                "tropical_witness": witness_to_json(e.tropical_witness),
                "central_witness": witness_to_json(e.central_witness),
            }
            for e in report.per_index
        ],
    }
    if report.warnings:
        out["warnings"] = list(report.warnings)
    return out


def verdict_to_json(v: PreservationVerdict) -> dict:
    return {
        "holds": v.holds,
        "violating_index": v.violating_index,
        "before": list(v.input_indices),
        "after": list(v.output_indices),
    }


def classification_to_json(c: SequenceClass) -> dict:
    return {"classification": c.label, "log_concave": c.log_concave, "violating_index": c.violating_index}


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
