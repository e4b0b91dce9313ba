import json
from importlib import resources
from pathlib import Path

import pytest

from quillenkit.builtins import ALGEBRAS, GROUPS, builtin_algebra, builtin_group
from quillenkit.errors import GroupAxiomError, ValidationError
from quillenkit.io import (SCHEMAS, algebra_from_json, algebra_to_json, group_from_json,
                           group_to_json, load_schema, resolve_algebra, resolve_group,
                           ring_from_json, ring_to_json, validate)

DOCS = Path(__file__).resolve().parents[1] / "docs" / "schemas"


@pytest.mark.parametrize("kind", SCHEMAS)
def test_docs_schemas_match_package(kind):
    shipped = resources.files("quillenkit").joinpath(f"schemas/{kind}.v1.json").read_text()
    assert json.loads((DOCS / f"{kind}.v1.json").read_text()) == json.loads(shipped)
    assert load_schema(kind)["$id"] == f"urn:quillenkit:schema:{kind}:v1"


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_roundtrip(name):
    g = builtin_group(name)
    obj = group_to_json(g)
    validate(obj, "group")
    back = group_from_json(json.loads(json.dumps(obj)))
    assert back.table == g.table and back.name == g.name


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_algebra_roundtrip(name):
    a, r = builtin_algebra(name)
    obj = algebra_to_json(a)
    validate(obj, "algebra")
    back = algebra_from_json(json.loads(json.dumps(obj)))
    assert back.dim == a.dim and back.field == a.field
    assert (back.mul == a.mul).all() and (back.unit == a.unit).all()
    if r is not None:
        robj = ring_to_json(r)
        validate(robj, "commring")
        r2 = ring_from_json(json.loads(json.dumps(robj)))
        assert r2.dim() == r.dim() and r2.variables == r.variables


def test_group_errors_name_field():
    with pytest.raises(ValidationError) as err:
        group_from_json({"kind": "cyclic"})
    assert err.value.field == "n"
    with pytest.raises(ValidationError) as err:
        group_from_json({"kind": "table", "table": "nope"})
    assert err.value.field == "table"
    with pytest.raises(GroupAxiomError):
        group_from_json({"kind": "table", "table": [[0, 1], [1, 1]]})


def test_algebra_errors_name_field():
    with pytest.raises(ValidationError) as err:
        algebra_from_json({"field": "Q", "dim": 1, "mul": [[[1]]], "unit": [1, 0]})
    assert err.value.field == "unit"
    with pytest.raises(ValidationError) as err:
        algebra_from_json({"field": {"Fp": 4}, "dim": 1, "mul": [[[1]]], "unit": [1]})
    assert err.value.field == "field"


def test_resolve_paths(tmp_path):
    gp = tmp_path / "c5.json"
    gp.write_text(json.dumps({"kind": "cyclic", "n": 5}))
    assert resolve_group(str(gp)).order == 5
    rp = tmp_path / "ring.json"
    rp.write_text(json.dumps({"field": "Q", "vars": ["x"], "relations": ["x^2"]}))
    a, r = resolve_algebra(str(rp))
    assert a.dim == 2 and r is not None
    with pytest.raises(ValidationError):
        resolve_group(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValidationError):
        resolve_group(str(bad))
    with pytest.raises(ValidationError):
        resolve_group("builtin:nope")
