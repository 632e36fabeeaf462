import math

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from alphaspline.alpha import (
    CLASSICAL,
    Alpha,
    Span,
    conjugate,
    homographic,
    phi,
    phi_barycentric,
    phi_derivative_limit,
)

from conftest import alphas_with_classical, finite_alphas, spans

UNIT = Span(0.0, 1.0)


def test_phi_examples():
    assert phi(Alpha(2), 0.5, UNIT) == pytest.approx(2 / 3, abs=1e-15)
    assert phi(Alpha(-1), 0.5, UNIT) == pytest.approx(1 / 3, abs=1e-15)
    assert phi(CLASSICAL, 0.25, UNIT) == 0.25
    for a in (Alpha(-4), Alpha(5), CLASSICAL):
        assert phi(a, 0.0, UNIT) == 0.0
        assert phi(a, 1.0, UNIT) == 0.0
        assert phi(a, -0.5, UNIT) == 0.0


def test_barycentric_examples():
    assert phi_barycentric(Alpha(2), 0.5) == pytest.approx(2 / 3, abs=1e-15)
    assert phi_barycentric(Alpha(5), 0.5) == pytest.approx(5 / 9, abs=1e-15)
    for a in (Alpha(-3), Alpha(1.5), CLASSICAL):
        assert phi_barycentric(a, 0.0) == 0.0
        assert phi_barycentric(a, 1.0) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ValueError):
        phi_barycentric(Alpha(2), 1.5)


def test_conjugate_examples():
    assert conjugate(Alpha(2)) == Alpha(-1)
    assert conjugate(Alpha(-1)) == Alpha(2)
    assert conjugate(CLASSICAL) is CLASSICAL


def test_derivative_limit_examples():
    assert phi_derivative_limit(Alpha(2), UNIT, "a_plus") == pytest.approx(2.0)
    assert phi_derivative_limit(Alpha(2), UNIT, "b_minus") == pytest.approx(0.5)
    assert phi_derivative_limit(Alpha(-4), Span(1, 3), "a_minus") == 0.0
    assert phi_derivative_limit(CLASSICAL, Span(1, 3), "a_plus") == 0.5


@pytest.mark.parametrize("bad", [0, 0.5, 1, float("nan")])
def test_invalid_alpha(bad):
    with pytest.raises(ValueError):
        Alpha(bad)


def test_parse_forms():
    assert Alpha.parse("inf") is CLASSICAL
    assert Alpha.parse("-inf") is CLASSICAL
    assert Alpha.parse("-1/2").value == -0.5
    assert Alpha.parse("6/5").label == "6/5"
    with pytest.raises(ValueError):
        Alpha.parse("abc")
    with pytest.raises(ValueError):
        Alpha.parse("1/2")


def test_span_rejects_empty():
    with pytest.raises(ValueError):
        Span(1.0, 1.0)


@given(alphas_with_classical(), spans(), st.floats(0, 1))
def test_range_in_unit_interval(alpha, ab, lam):
    a, b = ab
    x = a + lam * (b - a)
    assume(x < b)
    v = phi(alpha, x, Span(a, b))
    assert -1e-15 <= v <= 1 + 1e-15


@given(alphas_with_classical(), st.floats(0, 1), st.floats(0, 1))
def test_strictly_increasing(alpha, l1, l2):
    assume(abs(l1 - l2) > 1e-9)
    lo, hi = sorted((l1, l2))
    assert phi_barycentric(alpha, lo) < phi_barycentric(alpha, hi)


@given(alphas_with_classical(), spans(), st.floats(0, 0.999))
def test_depends_only_on_barycentric_coordinate(alpha, ab, lam):
    a, b = ab
    x = a + lam * (b - a)
    assume(a <= x < b)
    lam_x = (x - a) / (b - a)
    assert phi(alpha, x, Span(a, b)) == pytest.approx(phi_barycentric(alpha, lam_x), abs=1e-12)


@given(finite_alphas(), spans(), st.floats(0.001, 0.999))
def test_conjugation_identity(alpha, ab, lam):
    a, b = ab
    x = a + lam * (b - a)
    lhs = homographic(alpha, a + b - x, a, b)
    rhs = 1.0 - homographic(conjugate(alpha), x, a, b)
    # forming a + b - x loses about eps * (|a| + |b|) relative to the width
    cond = 1.0 + (abs(a) + abs(b)) / (b - a)
    assert lhs == pytest.approx(rhs, abs=1e-13 * cond)


@given(finite_alphas())
def test_conjugate_is_involution(alpha):
    assert conjugate(conjugate(alpha)).value == pytest.approx(alpha.value, rel=1e-15)


@given(st.floats(0, 1))
def test_large_index_tends_to_identity(lam):
    errs = [abs(phi_barycentric(Alpha(a), lam) - lam) for a in (1e2, 1e4, 1e6)]
    # the error is lam * (1 - lam) / (alpha - 1 + lam), up to rounding
    assert errs[2] <= errs[1] + 1e-15 and errs[1] <= errs[0] + 1e-15 and errs[0] <= 0.01
    assert abs(phi_barycentric(Alpha(-1e6), lam) - lam) <= 1e-5


@given(finite_alphas(), st.floats(0.01, 0.99))
def test_convexity_sign(alpha, lam):
    # positive index: concave (above the chord); negative: convex (below)
    v = phi_barycentric(alpha, lam)
    if alpha.value > 1:
        assert v >= lam - 1e-15
    else:
        assert v <= lam + 1e-15


@given(finite_alphas(), spans())
def test_derivative_limits_match_differences(alpha, ab):
    a, b = ab
    assume(abs(alpha.value) < 50 and min(abs(alpha.value), abs(alpha.value - 1)) > 0.05)
    span = Span(a, b)
    h = (b - a) * 1e-7
    d_left = (homographic(alpha, a + h, a, b) - homographic(alpha, a, a, b)) / h
    d_right = (homographic(alpha, b, a, b) - homographic(alpha, b - h, a, b)) / h
    assert d_left == pytest.approx(phi_derivative_limit(alpha, span, "a_plus"), rel=1e-4)
    assert d_right == pytest.approx(phi_derivative_limit(alpha, span, "b_minus"), rel=1e-4)
    # product of the two end slopes times the squared width is one
    prod = phi_derivative_limit(alpha, span, "a_plus") * phi_derivative_limit(alpha, span, "b_minus")
    assert prod * (b - a) ** 2 == pytest.approx(1.0, rel=1e-12)


def test_homographic_stable_near_one():
    # alpha just above 1 drives the value towards a step; no division blow-up
    v = homographic(Alpha(1 + 1e-12), 0.5, 0.0, 1.0)
    assert math.isfinite(v) and 0.99 < v <= 1.0
