"""Index-alpha B-spline basis via the generalized Cox-de Boor recurrence.

``B_{i,0}`` is the indicator of ``[t_i, t_{i+1})`` and

    B_{i,r} = w_i^r B_{i,r-1} + (1 - w_{i+1}^r) B_{i+1,r-1},
    w_i^r(x) = phi_alpha(x, t_i, t_{i+r}).

Evaluation works on one knot span at a time: on ``[t_j, t_{j+1})`` only
``B_{j-k} .. B_j`` can be non-zero, and every weight that multiplies a
non-zero lower-degree function comes from an interval containing the span.
Those weights are evaluated with the homographic formula itself, so that at
``x = t_m`` the last span yields the left-limit (continuous extension).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .alpha import Alpha, Span, as_alpha, conjugate, homographic
from .knots import KnotVector, classify, find_span, is_open, is_symmetric, make_knot_vector


@dataclass(frozen=True)
class BasisSpec:
    knots: KnotVector
    degree: int
    alpha: Alpha

    def __post_init__(self):
        if not isinstance(self.knots, KnotVector):
            object.__setattr__(self, "knots", make_knot_vector(self.knots))
        object.__setattr__(self, "alpha", as_alpha(self.alpha))
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if self.n < 0:
            raise ValueError(
                f"degree {self.degree} needs at least {self.degree + 2} knots, got {len(self.knots)}"
            )

    @property
    def n(self) -> int:
        """Index of the last basis function, ``m - k - 1``."""
        return self.knots.m - self.degree - 1

    def with_alpha(self, alpha: Alpha) -> BasisSpec:
        return BasisSpec(self.knots, self.degree, alpha)


@dataclass(frozen=True)
class BasisValues:
    """Values of ``B_{j-k} .. B_j`` at one point; entries for indices outside ``0..n`` are 0."""

    span_index: int
    values: tuple[float, ...]

    @property
    def first_index(self) -> int:
        return self.span_index - len(self.values) + 1

    def get(self, i: int) -> float:
        p = i - self.first_index
        if 0 <= p < len(self.values):
            return self.values[p]
        return 0.0


def _check_x(U: KnotVector, x: float):
    if not U.nodes[0] <= x <= U.nodes[-1]:
        raise ValueError(f"x={x} outside the knot domain [{U.nodes[0]}, {U.nodes[-1]}]")


def _triangle(t: Sequence[float], k: int, alpha: Alpha, j: int, x: float) -> list[float]:
    m = len(t) - 1
    # N[p] holds B_{j-k+p, r}; level r occupies positions k-r .. k
    N = [0.0] * (k + 1)
    N[k] = 1.0
    for r in range(1, k + 1):
        new = [0.0] * (k + 1)
        for p in range(k - r, k + 1):
            i = j - k + p
            if i < 0 or i + r + 1 > m:
                continue
            val = 0.0
            if p >= k - r + 1 and N[p] != 0.0:
                val += homographic(alpha, x, t[i], t[i + r]) * N[p]
            if p + 1 <= k and N[p + 1] != 0.0:
                val += (1.0 - homographic(alpha, x, t[i + 1], t[i + r + 1])) * N[p + 1]
            new[p] = val
        N = new
    return N


def eval_basis_all(spec: BasisSpec, x: float) -> BasisValues:
    """The ``k + 1`` basis functions that may be non-zero at ``x``."""
    U = spec.knots
    _check_x(U, x)
    j = find_span(U, x)
    return BasisValues(j, tuple(_triangle(U.nodes, spec.degree, spec.alpha, j, x)))


def eval_basis_single(spec: BasisSpec, i: int, x: float) -> float:
    if not 0 <= i <= spec.n:
        raise IndexError(f"basis index {i} outside 0..{spec.n}")
    return eval_basis_all(spec, x).get(i)


def eval_basis_vector(spec: BasisSpec, x: float) -> np.ndarray:
    """All ``n + 1`` basis values at ``x`` as a dense array."""
    bv = eval_basis_all(spec, x)
    out = np.zeros(spec.n + 1)
    for p, v in enumerate(bv.values):
        i = bv.first_index + p
        if 0 <= i <= spec.n:
            out[i] = v
    return out


def basis_matrix(spec: BasisSpec, xs) -> np.ndarray:
    """Collocation matrix ``[B_i(x_s)]`` with one row per sample."""
    return np.array([eval_basis_vector(spec, float(x)) for x in xs]).reshape(len(xs), spec.n + 1)


def endpoint_derivative_factors(spec: BasisSpec) -> tuple[float, float]:
    """Slopes ``-dB_0/dx(t_0+)`` and ``dB_n/dx(t_m-)`` for an open knot vector."""
    U, k, alpha = spec.knots, spec.degree, spec.alpha
    if not is_open(U, k):
        raise ValueError("endpoint derivatives are only available for open knot vectors")
    t, m, n = U.nodes, U.m, spec.n
    left, right = t[k + 1] - t[0], t[m] - t[n]
    if left <= 0 or right <= 0:
        raise ValueError("end nodes have multiplicity above k + 1")
    if alpha.is_classical:
        return k / left, k / right
    v = alpha.value
    return k * v / ((v - 1.0) * left), k * (v - 1.0) / (v * right)


def endpoint_derivatives(spec: BasisSpec) -> tuple[list[float], list[float]]:
    """One-sided derivatives of every ``B_i`` at ``t_0+`` and at ``t_m-``.

    Only ``B_0, B_1`` move at the left end and ``B_{n-1}, B_n`` at the right
    end; the remaining derivatives vanish.
    """
    n = spec.n
    if n < 1:
        raise ValueError("endpoint derivatives need at least two basis functions")
    s0, sm = endpoint_derivative_factors(spec)
    at_start = [0.0] * (n + 1)
    at_end = [0.0] * (n + 1)
    at_start[0], at_start[1] = -s0, s0
    at_end[n - 1], at_end[n] = -sm, sm
    return at_start, at_end


def bernstein_closed_form(k: int, alpha: Alpha, x: float, span: Span) -> list[float]:
    """``C(k, i) w^i (1 - w)^(k - i)`` with ``w = phi_alpha(x, a, b)``.

    At ``x = b`` the left limit ``w = 1`` is used, matching the recurrence on
    the open vector with no interior node; outside ``[a, b]`` all values are 0.
    """
    if k < 0:
        raise ValueError("degree must be non-negative")
    if not span.a <= x <= span.b:
        return [0.0] * (k + 1)
    w = homographic(alpha, x, span.a, span.b)
    return [comb(k, i) * w**i * (1.0 - w) ** (k - i) for i in range(k + 1)]


def bezier_knots(k: int, span: Span) -> KnotVector:
    """Open knot vector with no interior node: ``k + 1`` copies of each end."""
    return KnotVector((span.a,) * (k + 1) + (span.b,) * (k + 1))


def symmetry_partner(spec: BasisSpec, i: int, x: float) -> float:
    """``B_{n-i,k,1-alpha}(x)``, which equals ``B_{i,k,alpha}(t_0 + t_m - x)`` on a symmetric vector."""
    if not is_symmetric(spec.knots):
        raise ValueError("symmetry partner requires a symmetric knot vector")
    return eval_basis_single(spec.with_alpha(conjugate(spec.alpha)), spec.n - i, x)


def greville_abscissae(spec: BasisSpec) -> list[float]:
    """Knot averages ``(t_{i+1} + ... + t_{i+k}) / k``; for ``k = 0`` the span midpoints."""
    t, k = spec.knots.nodes, spec.degree
    if k == 0:
        return [0.5 * (t[i] + t[i + 1]) for i in range(spec.n + 1)]
    return [sum(t[i + 1 : i + k + 1]) / k for i in range(spec.n + 1)]


def taxonomy(spec: BasisSpec):
    return classify(spec.knots, spec.degree)
