import json
from pathlib import Path

import pytest

from fcplat.lattice import ExtensionLattice
from fcplat.specfile import SpecError, parse_spec

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return (FIXTURES / name).read_text()


def test_parse_b5101_fixture():
    spec, ext = parse_spec(load("b5101_q2.json"))
    assert ext.top.size == 16
    assert ext.bottom.size == 2
    lat = ExtensionLattice(ext)
    assert lat.node_count() == 6
    assert lat.length() == 3


def test_parse_remark_1317_fixture():
    spec, ext = parse_spec(load("remark_1317.json"))
    assert ext.top.size == 32
    assert ext.bottom.size == 4
    lat = ExtensionLattice(ext)
    assert lat.node_count() == 7
    assert lat.length() == 3


def test_invalid_json():
    with pytest.raises(SpecError, match="invalid JSON"):
        parse_spec("{not json")


def test_empty_constructions():
    with pytest.raises(SpecError, match="non-empty"):
        parse_spec(json.dumps({"constructions": [], "extension": {}}))


def test_unresolved_name():
    doc = {
        "constructions": [
            {"name": "S", "op": "product", "args": {"factors": ["K", "K"]}},
        ],
        "extension": {"top": "S", "bottom": {"generated_by": []}},
    }
    with pytest.raises(SpecError, match="unresolved name"):
        parse_spec(json.dumps(doc))


def test_duplicate_name():
    doc = {
        "constructions": [
            {"name": "K", "op": "prime_field", "args": {"p": 2}},
            {"name": "K", "op": "prime_field", "args": {"p": 3}},
        ],
        "extension": {"top": "K", "bottom": {"generated_by": []}},
    }
    with pytest.raises(SpecError, match="duplicate"):
        parse_spec(json.dumps(doc))


def test_wrong_reduction_length():
    doc = {
        "constructions": [
            {"name": "K", "op": "prime_field", "args": {"p": 2}},
            {"name": "T", "op": "monogenic",
             "args": {"base": "K", "degree": 3, "reduction": [0, 0]}},
        ],
        "extension": {"top": "T", "bottom": {"generated_by": []}},
    }
    with pytest.raises(SpecError, match="exactly 3"):
        parse_spec(json.dumps(doc))


def test_size_cap():
    with pytest.raises(SpecError, match="exceeds cap"):
        parse_spec(load("b5101_q2.json"), max_size=8)


def test_bad_bottom_reference():
    doc = {
        "constructions": [
            {"name": "K", "op": "prime_field", "args": {"p": 2}},
        ],
        "extension": {"top": "K", "bottom": "nope"},
    }
    with pytest.raises(SpecError, match="bottom"):
        parse_spec(json.dumps(doc))
