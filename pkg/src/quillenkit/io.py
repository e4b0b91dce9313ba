"""JSON loading, schema validation and serialization of objects."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .algebras import FinDimAlgebra
from .builtins import builtin_algebra, builtin_group
from .errors import ValidationError
from .fields import Field
from .groups import FinGroup, make_group
from .rings import CommRingPres

SCHEMAS = ("group", "algebra", "commring", "report")


@lru_cache(maxsize=None)
def load_schema(kind: str) -> dict:
    if kind not in SCHEMAS:
        raise KeyError(kind)
    text = resources.files("quillenkit").joinpath(f"schemas/{kind}.v1.json").read_text()
    return json.loads(text)


def _field_of(err: jsonschema.ValidationError) -> str:
    path = [str(p) for p in err.absolute_path]
    if err.validator == "required":
        m = re.match(r"'([^']+)' is a required property", err.message)
        if m:
            path.append(m.group(1))
    return "/".join(path) or "<root>"


def validate(obj, kind: str) -> None:
    """Raise :class:`ValidationError` naming the offending field."""
    validator = jsonschema.Draft202012Validator(load_schema(kind))
    err = jsonschema.exceptions.best_match(validator.iter_errors(obj))
    if err is not None:
        field = _field_of(err)
        raise ValidationError(f"{kind} schema violation at {field}: {err.message}",
                              field=field)


def read_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ValidationError(f"no such file: {path}", field=str(path)) from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})", field=str(path)) from None


# ---- groups


def group_from_json(obj) -> FinGroup:
    validate(obj, "group")
    return make_group(obj)


def group_to_json(g: FinGroup) -> dict:
    out: dict = {"kind": "table", "table": [list(r) for r in g.table]}
    if g.name:
        out["name"] = g.name
    return out


def resolve_group(ref: str) -> FinGroup:
    """``builtin:NAME`` or a path to a group JSON file."""
    if ref.startswith("builtin:"):
        return builtin_group(ref[len("builtin:"):])
    return group_from_json(read_json(ref))


# ---- algebras and rings


def _scalar(x) -> Fraction:
    return Fraction(x) if not isinstance(x, str) else Fraction(x.strip())


def algebra_from_json(obj) -> FinDimAlgebra:
    validate(obj, "algebra")
    field = Field.from_json(obj["field"])
    d = obj["dim"]
    mul = obj["mul"]
    if d and (len(mul) != d or any(len(r) != d or any(len(c) != d for c in r)
                                   for r in mul)):
        raise ValidationError(f"mul must be a {d}x{d}x{d} array", field="mul")
    if len(obj["unit"]) != d:
        raise ValidationError(f"unit must have {d} entries", field="unit")
    mul = [[[_scalar(x) for x in c] for c in r] for r in mul]
    unit = [_scalar(x) for x in obj["unit"]]
    return FinDimAlgebra(field, d, mul, unit, name=obj.get("name"))


def algebra_to_json(a: FinDimAlgebra) -> dict:
    out = a.to_json()
    if a.name:
        out["name"] = a.name
    return out


def ring_from_json(obj) -> CommRingPres:
    validate(obj, "commring")
    return CommRingPres(Field.from_json(obj["field"]), obj["vars"], obj["relations"],
                        name=obj.get("name"))


def ring_to_json(r: CommRingPres) -> dict:
    out = r.to_json()
    if r.name:
        out["name"] = r.name
    return out


def resolve_algebra(ref: str) -> tuple[FinDimAlgebra, CommRingPres | None]:
    """``builtin:NAME`` or a path to an algebra or commutative-ring JSON file."""
    if ref.startswith("builtin:"):
        return builtin_algebra(ref[len("builtin:"):])
    obj = read_json(ref)
    if isinstance(obj, dict) and "vars" in obj:
        r = ring_from_json(obj)
        return r.to_algebra(), r
    return algebra_from_json(obj), None


def validate_report(obj: dict) -> None:
    validate(obj, "report")
