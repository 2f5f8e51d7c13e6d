import cmath
import math
import random

import pytest

import ambig


def test_array_and_tableaux():
    arr = ambig.make_array([0, 1, 3, 4])
    assert arr.positions == [0, 1, 3, 4]
    assert arr.baseline == "1"

    shape = ambig.shape_of([0, 1, 3, 4])
    assert ambig.ssyt_count(shape, 4) == 6
    assert ambig.ssyt_count(ambig.shape_of([0, 2, 4]), 3) == 8

    weights = ambig.weight_matrix(shape, 4)
    assert len(weights) == 6
    assert all(sum(w) == sum(shape) for w in weights)


def test_schur_identity():
    random.seed(5)
    positions = [0, 1, 3, 4]
    shape = ambig.shape_of(positions)
    weights = ambig.weight_matrix(shape, 4)
    for _ in range(10):
        z = [cmath.exp(2j * math.pi * random.random()) for _ in positions]
        lhs = ambig.generalized_vandermonde_det(positions, z)
        rhs = ambig.schur_eval(weights, z) * ambig.classical_vandermonde_det(z)
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


def test_verify_exact_turns():
    arr = ambig.make_array([0, 1, 3, 4])
    turns = [-0.5, -7 / 15, -4 / 15, 1 / 10]
    phis = [2 * math.pi * t for t in turns]
    verdict = ambig.is_ambiguous(arr, phis)
    assert verdict.status == "ok"
    assert verdict.ambiguous
    assert verdict.smallest_sv < 1e-10

    generic = ambig.is_ambiguous(arr, [0.3, 0.9, 1.4, 2.2])
    assert not generic.ambiguous


def test_vanishing_sums():
    assert ambig.restricted_partitions(6) == [[2, 2, 2], [3, 3], [6]]
    assert ambig.is_vanishing(["0", "1/2"])
    assert not ambig.is_vanishing(["0", "1/3"])
    assert ambig.is_minimal(["0", "1/3", "2/3"])
    assert not ambig.is_minimal(["0", "1/4", "1/2", "3/4"])
    assert ambig.catalog_of_length(4) == []
    assert ["0", "1/2"] in ambig.catalog_of_length(2)


def test_enumerate_report():
    report = ambig.enumerate_all(ambig.make_array([0, 1, 3, 4]))
    assert report["N"] == 6
    assert [p["parts"] for p in report["partitions"]] == [[2, 2, 2], [3, 3], [6]]
    merged = report["merged_classes"]
    assert sum(1 for c in merged if c["kind"] == "parametric") == 4
    assert sum(1 for c in merged if c["kind"] == "discrete") == 8
    assert all(c["verified"] for c in merged)

    empty = ambig.enumerate_all(ambig.make_array([0, 1, 2, 3]))
    assert empty["merged_classes"] == []

    capped = ambig.enumerate_all(ambig.make_array([0, 1, 3, 4]), max_nodes=5)
    assert any(not p["complete"] for p in capped["partitions"])


def test_uniform_coverage():
    assert ambig.uniform_coverage(ambig.make_array([0, 1, 3, 4]))
    rows = ambig.uniform_ambiguities(ambig.make_array([0, 1, 3, 4]))
    assert rows, "wide pair spacings must yield uniform ambiguities"


def test_symmetric_analysis():
    arr = ambig.make_array([0, 1, 3, 4])
    sym = ambig.detect_symmetry(arr)
    assert sym is not None
    assert sym.shift == "2"
    assert sym.positions == ["-2", "-1", "1", "2"]
    assert sym.norm == pytest.approx(math.sqrt(10), rel=1e-12)

    assert ambig.detect_symmetry(ambig.make_array([0, 1, 2, 5])) is None

    pts = ambig.characteristic_points(sym, 2)
    got = [math.degrees(p.theta) for p in pts]
    want = [43.6036, 77.3453, 102.6547, 136.3964]
    assert got == pytest.approx(want, abs=1e-3)

    red = ambig.reduced_array(sym)
    assert red.positions == [1, 2]

    lhs, rhs = ambig.real_part_ambiguity_equivalence(sym, [pts[0].theta, pts[1].theta])
    assert lhs and rhs
    lhs, rhs = ambig.real_part_ambiguity_equivalence(
        sym, [math.radians(30), math.radians(60)])
    assert not lhs and not rhs

    pairs = ambig.symmetric_ambiguity_family(sym, [math.acos(1 / 3)])
    assert pairs and abs(pairs[0][1]) < 1e-6

    mat = ambig.real_part_steering(red, [math.pi / 2, math.acos(1 / 3)])
    assert mat.shape == (2, 2)
    assert mat[0][0] == pytest.approx(1.0, abs=1e-14)
    assert mat[1][1] == pytest.approx(-0.5, abs=1e-12)


def test_error_mapping():
    with pytest.raises(ValueError):
        ambig.make_array([0, 0, 1])
    with pytest.raises(ValueError):
        ambig.theta_of(-1.0, math.sqrt(10))
