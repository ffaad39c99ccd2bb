"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import wallfact as wf


def test_reflection_length_over_f3():
    f3 = wf.Field.prime(3)
    s = wf.QuadraticSpace(f3, [[1, 0], [0, 1]])
    rot = wf.Isometry(s, [[0, 2], [1, 0]])
    assert wf.reflection_length(rot) == 2
    assert wf.is_minimal(rot)
    vs = wf.minimal_factorization(rot)
    prod = wf.Isometry.identity(s)
    for v in vs:
        prod = prod * wf.reflection(s, v)
    assert prod == rot


def test_rational_scalars_are_fractions():
    s = wf.diagonal_space(wf.Field.rational(), [1, -1, -1])
    assert s.q([Fraction(1, 2), 0, 0]) == Fraction(1, 4)
    assert s.signature() == (1, 2)


def test_positive_factorization_of_involution():
    s = wf.diagonal_space(wf.Field.rational(), [1, -1, -1])
    f = wf.Isometry(s, [[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert wf.reflection_length(f) == 2
    assert wf.positive_reflection_length(f) == 4
    vs = wf.positive_factorization(f)
    assert len(vs) == 4
    assert all(s.q(v) > 0 for v in vs)


def test_wall_round_trip():
    s = wf.lorentz_space(2)
    f = wf.reflection(s, [1, 0, 0]) * wf.reflection(s, [0, 1, 0])
    basis, chi = wf.wall_form(f)
    assert wf.isometry_from_wall(s, basis, chi) == f


def test_classify_parabolic():
    s = wf.lorentz_space(2)
    f = wf.Isometry(s, [[-1, -2, 2], [2, 1, -2], [-2, -2, 3]])
    assert wf.classify(f) == "parabolic"
    assert len(wf.hyperbolic_positive_factorization(f)) == 2


def test_errors_carry_code():
    s = wf.diagonal_space(wf.Field.prime(3), [1, 1])
    with pytest.raises(wf.WallfactError) as info:
        wf.Isometry(s, [[1, 1], [0, 1]])
    assert info.value.args[0] == "NotIsometry"


def test_oracle_small():
    s = wf.diagonal_space(wf.Field.prime(3), [1, 1])
    out = wf.oracle(s)
    assert out["group_order"] == 8
    assert all(c["violations"] == 0 for c in out["checks"])


def test_interval_totally_singular():
    s = wf.QuadraticSpace(wf.Field.prime(3), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    f = wf.Isometry(s, [[1, 1, 0, 2], [2, 1, 1, 0], [0, 1, 1, 2], [2, 0, 1, 1]])
    iv = wf.interval(f)
    assert not iv["minimal"]
    assert iv["graded"]
