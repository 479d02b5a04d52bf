"""JSON and CSV round trips with deterministic output."""

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from natspec.errors import SchemaError
from natspec.kronecker import KroneckerProblem, KroneckerSolution
from natspec.measures import MixedMeasure, TrigPolyDensity, as_mixed
from natspec.sampling import default_rng, random_discrete, random_mixed
from natspec.serialize import (angle_from_json, angle_to_json, basis_from_json,
                               basis_to_json, dumps, kronecker_problem_from_json,
                               kronecker_problem_to_json, kronecker_solution_to_json,
                               measure_from_json, measure_to_json, points_from_csv,
                               read_json, sample_to_csv, write_json)


def test_dumps_is_sorted_and_newline_terminated():
    text = dumps({"b": 1, "a": [1.5, "x"]})
    assert text == '{\n  "a": [\n    1.5,\n    "x"\n  ],\n  "b": 1\n}\n'
    assert dumps({"b": 1, "a": 2}) == dumps({"a": 2, "b": 1})


def test_json_file_round_trip(tmp_path):
    path = tmp_path / "obj.json"
    write_json(path, {"x": [1, 2, 3]})
    assert read_json(path) == {"x": [1, 2, 3]}


def test_read_json_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaError):
        read_json(path)


def test_basis_round_trip(basis):
    assert basis_from_json(basis_to_json(basis)) == basis


def test_angle_round_trip(basis):
    ang = basis.angle(Fraction(5, 6), (2, -3))
    obj = angle_to_json(ang, basis)
    assert obj["turns"] == "5/6"
    assert obj["coeffs"] == {"a": 2, "b": -3}
    assert angle_from_json(obj, basis) == ang
    plain = angle_to_json(basis.zero(), basis)
    assert plain["coeffs"] == {}
    assert angle_from_json(plain, basis) == basis.zero()


def test_discrete_measure_round_trip(basis):
    rng = default_rng(101)
    for _ in range(5):
        mu = random_discrete(rng, basis)
        obj = measure_to_json(mu)
        assert obj["kind"] == "discrete"
        back = measure_from_json(obj)
        assert back == mu


def test_mixed_measure_round_trip(basis):
    rng = default_rng(202)
    for _ in range(5):
        mu = random_mixed(rng, basis)
        obj = measure_to_json(mu)
        assert obj["kind"] == "mixed"
        back = measure_from_json(obj)
        assert back == mu


def test_measure_round_trip_is_byte_stable(basis):
    mu = random_mixed(default_rng(7), basis)
    once = dumps(measure_to_json(mu))
    twice = dumps(measure_to_json(measure_from_json(measure_to_json(mu))))
    assert once == twice


def test_discrete_kind_rejects_density_payload(basis):
    obj = measure_to_json(as_mixed(MixedMeasure.from_density(basis, {1: 1.0})))
    obj["kind"] = "discrete"
    with pytest.raises(SchemaError):
        measure_from_json(obj)


def test_measure_schema_errors(basis):
    with pytest.raises(SchemaError):
        measure_from_json({"kind": "unknown", "basis": basis_to_json(basis)})
    with pytest.raises(SchemaError):
        measure_from_json({"kind": "discrete"})
    with pytest.raises(SchemaError):
        measure_from_json([1, 2, 3])


def test_kronecker_problem_round_trip():
    problem = KroneckerProblem(alpha=math.sqrt(2), beta=math.sqrt(3), target_x=1.0,
                               target_y=2.0, epsilon=0.05, n_max=12345,
                               method="lattice", min_abs_n=3, parity="odd")
    assert kronecker_problem_from_json(kronecker_problem_to_json(problem)) == problem
    defaults = kronecker_problem_from_json(
        {"alpha": 1.0, "beta": 2.0, "target_x": 0.0, "target_y": 0.0, "epsilon": 0.1})
    assert defaults.n_max == 10 ** 6 and defaults.parity == "any"
    with pytest.raises(SchemaError):
        kronecker_problem_from_json({"alpha": 1.0})


def test_kronecker_solution_serializes():
    sol = KroneckerSolution(40, 0.0198744032001446, 0.16679995163153874, 79)
    obj = kronecker_solution_to_json(sol)
    assert obj["n"] == 40 and obj["evaluations"] == 79
    assert json.loads(dumps(obj)) == obj


def test_sample_csv_round_trip():
    pts = np.array([0.25 + 0.5j, -1.0 + 0j, 1e-17 - 3.5j])
    text = sample_to_csv(pts)
    lines = text.strip().split("\n")
    assert lines[0] == "re,im"
    back = points_from_csv(text)
    assert np.array_equal(back, pts)


def test_points_from_csv_rejects_garbage():
    with pytest.raises(SchemaError):
        points_from_csv("re,im\n1.0,not_a_number\n")
