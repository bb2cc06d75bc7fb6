import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argstar import (
    ArgOfZero,
    DivisionNearZero,
    PowerSeries,
    differentiate,
    evaluate,
    integrate,
    jcv,
    jst,
    make_series,
    principal_arg,
)


def geometric(N=64):
    # truncation of z/(1-z) = z + z^2 + ...
    return make_series(1, [1.0] * (N - 1), N)


# ---------------------------------------------------------------- construction

def test_make_series_monomial():
    s = make_series(2, [], 1)
    assert s.order_p == 2
    assert s.truncation_N == 1
    assert s.coeffs[0] == 1


def test_make_series_direct():
    s = make_series(1, [0.5], 2)
    assert np.array_equal(s.coeffs, [1, 0.5])
    t = make_series(3, [(0, 0.25)], 2)
    assert t.coeffs[1] == 0.25j


@pytest.mark.parametrize(
    "p,tail,N",
    [(0, [], 1), (-1, [], 1), (2, [], 0), (2, [0.5], 1), (2, [], 2), (1.5, [], 1)],
)
def test_make_series_rejects_bad_shape(p, tail, N):
    with pytest.raises(ValueError):
        make_series(p, tail, N)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), complex(0, float("nan"))])
def test_make_series_rejects_nonfinite(bad):
    with pytest.raises(ValueError):
        make_series(1, [bad], 2)


def test_series_is_immutable():
    s = make_series(2, [0.5], 2)
    with pytest.raises(AttributeError):
        s.order_p = 3
    with pytest.raises(ValueError):
        s.coeffs[0] = 7.0


# ------------------------------------------------------------------- calculus

def test_differentiate_examples():
    assert np.array_equal(differentiate(make_series(3, [], 1), 3).coeffs, [6])
    d = differentiate(make_series(2, [0.5], 2), 1)
    assert d.order_p == 1
    assert np.array_equal(d.coeffs, [2, 1.5])
    assert differentiate(make_series(4, [], 1), 4).coeffs[0] == 24


def test_differentiate_below_zero_vanishes():
    d = differentiate(make_series(2, [0.5], 2), 3)
    assert d.order_p == 0
    assert np.array_equal(d.coeffs, [3.0])  # only the 0.5 z^3 term survives
    z = differentiate(make_series(1, [], 1), 2)
    assert np.array_equal(z.coeffs, [0.0])


def test_integrate_examples():
    s = integrate(PowerSeries(0, [2.0]), 2)
    assert s.order_p == 2 and s.coeffs[0] == 1
    s = integrate(PowerSeries(1, [6.0]), 1)
    assert s.order_p == 2 and s.coeffs[0] == 3
    f = make_series(3, [1.0], 2)
    assert integrate(differentiate(f, 2), 2) == f


coeff_st = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


@given(
    p=st.integers(1, 8),
    tail=st.lists(coeff_st, max_size=31),
    k=st.integers(0, 8),
)
def test_roundtrip_integrate_then_differentiate_is_exact(p, tail, k):
    s = make_series(p, tail, len(tail) + 1)
    back = differentiate(integrate(s, k), k)
    assert back.order_p == s.order_p
    # bit-exact, not approximately equal
    assert back.coeffs.tobytes() == s.coeffs.tobytes()


@given(
    tail=st.lists(coeff_st, min_size=1, max_size=31),
    z=st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False),
)
@settings(max_examples=200)
def test_derivative_matches_finite_difference(tail, z):
    s = make_series(1, tail, len(tail) + 1)
    h = 1e-5
    fd = (evaluate(s, z + h) - evaluate(s, z - h)) / (2 * h)
    assert abs(evaluate(differentiate(s, 1), z) - fd) <= 1e-6


# ----------------------------------------------------------------- evaluation

def test_eval_examples():
    assert evaluate(make_series(2, [], 1), 0.5) == 0.25
    assert evaluate(make_series(1, [0.5], 2), 0.5) == 0.625
    assert abs(evaluate(geometric(), 0.5) - 1.0) <= 1e-15


@given(
    p=st.integers(1, 8),
    z=st.complex_numbers(max_magnitude=0.99, allow_nan=False, allow_infinity=False),
)
def test_eval_monomial_exact(p, z):
    got = evaluate(make_series(p, [], 1), z)
    assert cmath.isclose(got, z**p, rel_tol=1e-15, abs_tol=0.0) or got == z**p


@pytest.mark.parametrize("z", [1.0, -1.0, 1 + 0j, 0.8 + 0.7j, 2.0])
def test_eval_rejects_outside_disk(z):
    with pytest.raises(ValueError):
        evaluate(geometric(), z)
    with pytest.raises(ValueError):
        jst(geometric(), z)


# ---------------------------------------------------------------- functionals

def test_jst_examples():
    assert jst(make_series(3, [], 1), 0.1 + 0.2j) == 3
    assert abs(jst(geometric(), 0.5) - 2.0) <= 1e-13
    assert jst(make_series(2, [1.0], 2), 0) == 2  # removable singularity


def test_jcv_examples():
    assert jcv(make_series(1, [], 1), 0.3 + 0.4j) == 1
    assert jcv(make_series(2, [], 1), 0.5) == 2
    assert abs(jcv(geometric(), 0.5) - 3.0) <= 1e-12


@given(
    p=st.integers(1, 8),
    z=st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False),
)
def test_jst_jcv_monomial(p, z):
    mono = make_series(p, [], 1)
    assert abs(jst(mono, z) - p) <= 1e-14
    assert abs(jcv(mono, z) - p) <= 1e-14


def test_division_near_zero():
    # f = z - 2 z^2 vanishes at z = 0.5
    f = make_series(1, [-2.0], 2)
    with pytest.raises(DivisionNearZero):
        jst(f, 0.5)
    # f' = 1 - 4z vanishes at 0.25
    with pytest.raises(DivisionNearZero):
        jcv(f, 0.25)


# -------------------------------------------------------------- principal arg

def test_principal_arg_examples():
    assert principal_arg(1 + 1j) == pytest.approx(math.pi / 4, abs=1e-15)
    assert principal_arg(-1) == math.pi
    assert principal_arg(complex(-1, -0.0)) == math.pi  # branch (-pi, pi]
    assert principal_arg(0.64 + 0.48j) == pytest.approx(math.atan(0.75), abs=1e-15)
    assert principal_arg(0.64 + 0.48j) == pytest.approx(math.asin(0.6), abs=1e-15)


def test_principal_arg_rejects_zero():
    with pytest.raises(ArgOfZero):
        principal_arg(0)
    with pytest.raises(ArgOfZero):
        principal_arg(complex(0.0, -0.0))


@given(st.complex_numbers(min_magnitude=1e-300, max_magnitude=1e300, allow_nan=False, allow_infinity=False))
def test_principal_arg_range(w):
    a = principal_arg(w)
    assert -math.pi < a <= math.pi
