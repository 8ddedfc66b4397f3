from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heptaknot.census import sample_embedding
from heptaknot.pointfile import (
    PointFileError,
    append_record,
    coord_json,
    dumps_points,
    loads_points,
    read_points,
    read_records,
)

from conftest import DATA

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


def test_exact_decimal_strings():
    pts = loads_points('{"points": [["0.1", "-1.25", "7/3"]]}')
    assert pts == [(Fraction(1, 10), Fraction(-5, 4), Fraction(7, 3))]


def test_json_float_literals_are_read_exactly():
    # 0.1 is never routed through a binary double
    assert loads_points('{"points": [[0.1, 2, -3.5]]}') == [(Fraction(1, 10), 2, Fraction(-7, 2))]


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"points": 3}',
    '{"points": [[1, 2]]}',
    '{"points": [[1, 2, true]]}',
    '{"points": [[1, 2, null]]}',
    '{"points": [[1, 2, "abc"]]}',
    '{"points": [[1, 2, "1/0"]]}',
])
def test_bad_documents(text):
    with pytest.raises(PointFileError):
        loads_points(text)


def test_missing_file(tmp_path):
    with pytest.raises(PointFileError):
        read_points(tmp_path / "nope.json")


def test_rational_data_file_matches_integer_one():
    half = read_points(DATA / "rational_figure8.json")
    full = read_points(DATA / "figure8_rs1.json")
    assert half == [tuple(c / 2 for c in p) for p in full]


@given(st.lists(st.tuples(rationals, rationals, rationals), min_size=1, max_size=8))
def test_roundtrip(points):
    assert loads_points(dumps_points(points)) == points


def test_sampler_output_roundtrips():
    for seed in range(5):
        e = sample_embedding(7, seed)
        assert tuple(loads_points(dumps_points(e.points))) == e.points


def test_coord_json():
    assert coord_json(Fraction(4, 2)) == 2
    assert coord_json(Fraction(-1, 3)) == "-1/3"


def test_jsonl_append(tmp_path):
    path = tmp_path / "log.jsonl"
    append_record(path, {"b": 1, "a": [1, 2]})
    append_record(path, {"c": "x"})
    assert path.read_text().splitlines()[0] == '{"a":[1,2],"b":1}'
    assert read_records(path) == [{"a": [1, 2], "b": 1}, {"c": "x"}]
