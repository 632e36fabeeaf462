"""Index-alpha B-spline curves ``G(x) = sum_i d_i B_{i,k,alpha}(x)``."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from .alpha import Alpha, conjugate, homographic
from .basis import BasisSpec, endpoint_derivative_factors, eval_basis_all
from .knots import find_span, is_symmetric


class ControlPolygon:
    """Ordered control points ``d_0 .. d_n`` in the plane or in space."""

    __slots__ = ("_points",)

    def __init__(self, points):
        pts = np.array(points, dtype=float)
        if pts.ndim != 2:
            raise ValueError("control points must be a sequence of 2D or 3D points")
        if pts.shape[0] < 2:
            raise ValueError("a control polygon needs at least two points")
        if pts.shape[1] not in (2, 3):
            raise ValueError(f"control points must be 2D or 3D, got dimension {pts.shape[1]}")
        pts.setflags(write=False)
        self._points = pts

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def dim(self) -> int:
        return self._points.shape[1]

    def __len__(self) -> int:
        return self._points.shape[0]

    def __getitem__(self, i) -> np.ndarray:
        return self._points[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, ControlPolygon) and np.array_equal(self._points, other._points)

    def __hash__(self):
        return hash(self._points.tobytes())

    def __repr__(self) -> str:
        return f"ControlPolygon({self._points.tolist()!r})"


@dataclass(frozen=True)
class CurveSpec:
    basis: BasisSpec
    polygon: ControlPolygon

    def __post_init__(self):
        if not isinstance(self.polygon, ControlPolygon):
            object.__setattr__(self, "polygon", ControlPolygon(self.polygon))
        n, k = self.basis.n, self.basis.degree
        if len(self.polygon) != n + 1:
            raise ValueError(
                f"degree {k} on {len(self.basis.knots)} knots needs {n + 1} control points, "
                f"got {len(self.polygon)}"
            )
        if n < k:
            raise ValueError(f"a curve needs n >= k, got n={n}, k={k}")

    @property
    def alpha(self) -> Alpha:
        return self.basis.alpha

    def with_alpha(self, alpha: Alpha) -> CurveSpec:
        return CurveSpec(self.basis.with_alpha(alpha), self.polygon)


def blending_coefficients(spec: CurveSpec, x: float) -> tuple[int, np.ndarray]:
    """First active index and the coefficients of ``d_{first} ..`` at ``x``."""
    bv = eval_basis_all(spec.basis, x)
    first = bv.first_index
    coeffs = np.array(bv.values)
    lo = max(0, -first)
    hi = min(len(coeffs), spec.basis.n + 1 - first)
    return first + lo, coeffs[lo:hi]


def eval_direct(spec: CurveSpec, x: float) -> np.ndarray:
    first, coeffs = blending_coefficients(spec, x)
    return coeffs @ spec.polygon.points[first : first + len(coeffs)]


def eval_deboor(spec: CurveSpec, x: float) -> np.ndarray:
    """Generalized de Boor scheme.

    Level ``r`` blends ``d_i^r = (1 - w) d_{i-1}^{r-1} + w d_i^{r-1}`` with
    ``w = phi_alpha(x, t_i, t_{i+k-r+1})``; the curve point is ``d_j^k``.
    Needs the whole triangle ``d_{j-k} .. d_j``, so ``x`` must lie in
    ``[t_k, t_{m-k}]`` (all of ``[t_0, t_m]`` for an open vector).
    """
    U, k, alpha = spec.basis.knots, spec.basis.degree, spec.basis.alpha
    t, m = U.nodes, U.m
    if not t[0] <= x <= t[-1]:
        raise ValueError(f"x={x} outside the knot domain [{t[0]}, {t[-1]}]")
    if not t[k] <= x <= t[m - k] or t[k] == t[m - k]:
        raise ValueError(f"de Boor evaluation needs x in [t_k, t_(m-k)] = [{t[k]}, {t[m - k]}]")
    if x == t[m - k]:
        # left limit on the last span of the valid range
        j = bisect.bisect_left(t, x) - 1
    else:
        j = find_span(U, x)
    d = spec.polygon.points[j - k : j + 1].copy()
    for r in range(1, k + 1):
        # descending so d[p - 1] still holds level r - 1
        for p in range(k, r - 1, -1):
            i = j - k + p
            w = homographic(alpha, x, t[i], t[i + k - r + 1])
            d[p] = (1.0 - w) * d[p - 1] + w * d[p]
    return d[k]


def eval_curve(spec: CurveSpec, x: float) -> np.ndarray:
    return eval_direct(spec, x)


def endpoint_tangents(spec: CurveSpec) -> tuple[np.ndarray, np.ndarray]:
    """Derivatives ``dG/dx`` at ``t_0`` and ``t_m`` for an open knot vector."""
    s0, sm = endpoint_derivative_factors(spec.basis)
    d = spec.polygon.points
    return s0 * (d[1] - d[0]), sm * (d[-1] - d[-2])


def affine_image(spec: CurveSpec, linear, translation) -> CurveSpec:
    """The curve whose control points are ``linear @ d_i + translation``."""
    A = np.asarray(linear, dtype=float)
    b = np.asarray(translation, dtype=float)
    dim = spec.polygon.dim
    if A.shape != (dim, dim) or b.shape != (dim,):
        raise ValueError(f"affine map must be {dim}x{dim} plus a {dim}-vector")
    return CurveSpec(spec.basis, ControlPolygon(spec.polygon.points @ A.T + b))


def mirror_about_bisector(polygon: ControlPolygon):
    """Reflection across the perpendicular bisector of ``d_0 d_n`` as a callable on points."""
    d0, dn = polygon.points[0], polygon.points[-1]
    axis = dn - d0
    norm = np.linalg.norm(axis)
    if norm == 0.0:
        raise ValueError("first and last control points coincide; the bisector is undefined")
    u = axis / norm
    mid = 0.5 * (d0 + dn)

    def mirror(p):
        p = np.asarray(p, dtype=float)
        return p - 2.0 * np.outer((p - mid) @ u, u).reshape(p.shape)

    return mirror


def is_mirror_symmetric(polygon: ControlPolygon, tol: float = 1e-12) -> bool:
    mirror = mirror_about_bisector(polygon)
    pts = polygon.points
    scale = max(1.0, float(np.max(np.abs(pts))))
    return bool(np.all(np.abs(mirror(pts) - pts[::-1]) <= tol * scale))


def symmetric_counterpart(spec: CurveSpec) -> CurveSpec:
    """Same knots and polygon with the conjugate index.

    For a symmetric knot vector and a polygon symmetric about the bisector of
    ``d_0 d_n``, ``mirror(G_alpha(x)) == G_{1-alpha}(t_0 + t_m - x)``.
    """
    if not is_symmetric(spec.basis.knots):
        raise ValueError("symmetric counterpart requires a symmetric knot vector")
    if not is_mirror_symmetric(spec.polygon):
        raise ValueError("control polygon is not symmetric about the bisector of d_0 d_n")
    return spec.with_alpha(conjugate(spec.alpha))
