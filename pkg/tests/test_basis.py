from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from alphaspline import cases
from alphaspline.alpha import CLASSICAL, Alpha, Span, phi
from alphaspline.basis import (
    BasisSpec,
    basis_matrix,
    bernstein_closed_form,
    bezier_knots,
    endpoint_derivative_factors,
    endpoint_derivatives,
    eval_basis_all,
    eval_basis_single,
    eval_basis_vector,
    greville_abscissae,
    symmetry_partner,
)
from alphaspline.oracle import oracle_basis

from conftest import U0, U4, alphas_with_classical

ALPHAS = [Alpha.parse(a) for a in cases.ALPHA_SET]


def test_indicator_degree_zero():
    spec = BasisSpec([0, 1], 0, Alpha(2))
    assert eval_basis_single(spec, 0, 0.5) == 1.0


@pytest.mark.parametrize("alpha", ALPHAS, ids=str)
def test_open_start_value(alpha):
    spec = BasisSpec(U4, 2, alpha)
    assert list(eval_basis_vector(spec, 0.0)) == [1.0, 0.0, 0.0, 0.0, 0.0]
    assert list(eval_basis_vector(spec, 3.0)) == [0.0, 0.0, 0.0, 0.0, 1.0]
    # just inside the right end the last function tends to one
    near = eval_basis_vector(spec, 3.0 - 1e-9)
    assert near[-1] == pytest.approx(1.0, abs=1e-6)


def test_u4_alpha2_oracle_value():
    spec = BasisSpec(U4, 2, Alpha(2))
    assert eval_basis_single(spec, 1, 0.5) == pytest.approx(28 / 45, abs=1e-14)


def test_eval_all_u0_partition():
    vals = eval_basis_all(BasisSpec(U0, 2, Alpha(-1)), 2.5)
    assert len(vals.values) == 3
    assert all(v > 0 for v in vals.values)
    assert sum(vals.values) == pytest.approx(1.0, abs=1e-15)


def test_eval_all_matches_single_at_knot():
    spec = BasisSpec(U4, 2, Alpha(2))
    vec = eval_basis_vector(spec, 1.0)
    for i in range(5):
        assert vec[i] == pytest.approx(eval_basis_single(spec, i, 1.0), abs=1e-14)


def test_single_index_bounds():
    spec = BasisSpec(U4, 2, Alpha(2))
    with pytest.raises(IndexError):
        eval_basis_single(spec, 5, 1.0)
    with pytest.raises(ValueError):
        eval_basis_single(spec, 0, 3.5)


def test_spec_validation():
    with pytest.raises(ValueError):
        BasisSpec([0, 1, 2], 2, Alpha(2))
    with pytest.raises(ValueError):
        BasisSpec(U4, 2, 0.5)


def test_endpoint_derivative_example():
    start, end = endpoint_derivatives(BasisSpec(U4, 2, Alpha(2)))
    assert start == pytest.approx([-4, 4, 0, 0, 0])
    assert end == pytest.approx([0, 0, 0, -1, 1])


def test_endpoint_derivatives_non_open_rejected():
    with pytest.raises(ValueError):
        endpoint_derivatives(BasisSpec(U0, 2, Alpha(2)))


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("alpha", [Fraction(2), Fraction(-1), Fraction(-1, 2), Fraction(6, 5), None])
def test_endpoint_factor_substitution(k, alpha):
    # exact closed forms evaluated in rationals, then compared with the float kernel
    t = [Fraction(0)] * (k + 1) + [Fraction(1, 2), Fraction(2)] + [Fraction(3)] * (k + 1)
    m = len(t) - 1
    n = m - k - 1
    if alpha is None:
        left, right = k / (t[k + 1] - t[0]), k / (t[m] - t[n])
        a = CLASSICAL
    else:
        left = k * alpha / ((alpha - 1) * (t[k + 1] - t[0]))
        right = k * (alpha - 1) / (alpha * (t[m] - t[n]))
        a = Alpha(float(alpha))
    s0, sm = endpoint_derivative_factors(BasisSpec([float(v) for v in t], k, a))
    assert s0 == pytest.approx(float(left), rel=1e-15)
    assert sm == pytest.approx(float(right), rel=1e-15)


def test_conjugate_tangent_factor_identity():
    # factor at t_0 under alpha equals factor at t_m under 1 - alpha on a symmetric vector
    U = cases.BASIS_KNOTS["U9"]
    for a in (Alpha(2), Alpha(-1 / 2), Alpha(5)):
        s0, _ = endpoint_derivative_factors(BasisSpec(U, 2, a))
        _, sm = endpoint_derivative_factors(BasisSpec(U, 2, Alpha(1 - a.value)))
        assert s0 == pytest.approx(sm, rel=1e-14)


def test_bernstein_examples():
    span = Span(0.0, 1.0)
    assert bernstein_closed_form(2, Alpha(2), 0.5, span) == pytest.approx([1 / 9, 4 / 9, 4 / 9], abs=1e-15)
    assert bernstein_closed_form(3, Alpha(-3), 0.0, span) == [1.0, 0.0, 0.0, 0.0]
    # choose x with w = 1/2: for alpha = 2, f(x) = 2x/(x+1) = 1/2 at x = 1/3
    assert bernstein_closed_form(2, Alpha(2), 1 / 3, span) == pytest.approx([0.25, 0.5, 0.25], abs=1e-15)


@given(st.integers(0, 8), alphas_with_classical(), st.floats(0, 1))
def test_bernstein_matches_recurrence(k, alpha, lam):
    span = Span(-1.0, 2.0)
    x = -1.0 + 3.0 * lam
    spec = BasisSpec(bezier_knots(k, span), k, alpha)
    closed = bernstein_closed_form(k, alpha, x, span)
    assert np.max(np.abs(eval_basis_vector(spec, x) - closed)) <= 1e-14


def test_symmetry_partner_examples():
    spec = BasisSpec(U4, 2, Alpha(-1))
    assert symmetry_partner(spec, 0, 0.7) == eval_basis_single(BasisSpec(U4, 2, Alpha(2)), 4, 0.7)
    assert symmetry_partner(spec, 0, 0.7) == pytest.approx(eval_basis_single(spec, 0, 3 - 0.7), abs=1e-12)
    spec_c = BasisSpec(U4, 2, CLASSICAL)
    assert symmetry_partner(spec_c, 1, 1.3) == eval_basis_single(spec_c, 3, 1.3)
    assert symmetry_partner(spec_c, 2, 1.5) == eval_basis_single(spec_c, 2, 1.5)
    with pytest.raises(ValueError):
        symmetry_partner(BasisSpec(cases.BASIS_KNOTS["U3"], 2, Alpha(2)), 0, 1.0)


@given(st.sampled_from(cases.SYMMETRIC_BASIS_KNOTS), st.integers(1, 3),
       alphas_with_classical(), st.floats(0.001, 0.999))
def test_conjugate_symmetry_property(name, k, alpha, lam):
    spec = BasisSpec(cases.BASIS_KNOTS[name], k, alpha)
    lo, hi = spec.knots.domain
    x = lo + lam * (hi - lo)
    mirrored = eval_basis_vector(spec, lo + hi - x)
    for i in range(spec.n + 1):
        assert mirrored[i] == pytest.approx(symmetry_partner(spec, i, x), abs=1e-12)


@given(st.sampled_from(sorted(cases.BASIS_KNOTS)), st.integers(0, 3),
       alphas_with_classical(), st.floats(0, 1))
def test_local_support_and_positivity(name, k, alpha, lam):
    spec = BasisSpec(cases.BASIS_KNOTS[name], k, alpha)
    assume(spec.n >= 0)
    t = spec.knots.nodes
    x = t[0] + lam * (t[-1] - t[0])
    assume(x < t[-1])
    vec = eval_basis_vector(spec, x)
    for i, v in enumerate(vec):
        if not t[i] <= x < t[i + k + 1]:
            assert v == 0.0
        elif x - t[i] >= 1e-6:
            # closer to t_i the value can underflow to zero
            assert v > 0.0
        assert v >= 0.0


@given(st.sampled_from(sorted(cases.BASIS_KNOTS)), st.integers(1, 3),
       alphas_with_classical(), st.floats(0, 1))
def test_partition_of_unity_inner_spans(name, k, alpha, lam):
    spec = BasisSpec(cases.BASIS_KNOTS[name], k, alpha)
    t, m = spec.knots.nodes, spec.knots.m
    assume(t[k] < t[m - k])
    x = t[k] + lam * (t[m - k] - t[k])
    assert float(np.sum(eval_basis_vector(spec, x))) == pytest.approx(1.0, abs=1e-12)


@given(st.sampled_from(["U4", "U9", "U5"]), st.integers(1, 3),
       st.sampled_from([2, -1, Fraction(-1, 2), Fraction(6, 5), Fraction(5)]),
       st.fractions(0, 1, max_denominator=64))
def test_float_matches_oracle(name, k, alpha, lam):
    nodes = [Fraction(v) for v in cases.BASIS_KNOTS[name].split(",")]
    x = nodes[0] + lam * (nodes[-1] - nodes[0])
    assume(x < nodes[-1])
    spec = BasisSpec(cases.BASIS_KNOTS[name], k, float(alpha))
    vec = eval_basis_vector(spec, float(x))
    for i in range(spec.n + 1):
        assert abs(vec[i] - float(oracle_basis(nodes, k, alpha, i, x))) <= 1e-13


def test_basis_matrix_shape_and_greville():
    spec = BasisSpec(U4, 2, Alpha(2))
    g = greville_abscissae(spec)
    assert g == [0.0, 0.5, 1.5, 2.5, 3.0]
    M = basis_matrix(spec, g)
    assert M.shape == (5, 5)
    assert np.linalg.svd(M, compute_uv=False).min() > 1e-10


def test_phi_weights_drive_degree_one():
    # degree one on an open vector is the pair (1 - w, w)
    spec = BasisSpec([0, 0, 1, 1], 1, Alpha(2))
    w = phi(Alpha(2), 0.3, Span(0, 1))
    assert eval_basis_vector(spec, 0.3) == pytest.approx([1 - w, w], abs=1e-15)
