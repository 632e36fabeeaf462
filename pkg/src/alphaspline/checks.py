"""Invariant suites over the reference configurations.

Each suite returns a :class:`CheckResult` carrying the worst observed
deviation next to the tolerance it was held to.  The ``check`` CLI command
prints them as a table; the acceptance tests assert on them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import cases
from .alpha import Alpha, CLASSICAL, Span, conjugate
from .basis import (
    BasisSpec,
    basis_matrix,
    bernstein_closed_form,
    bezier_knots,
    endpoint_derivatives,
    eval_basis_all,
    eval_basis_single,
    eval_basis_vector,
    greville_abscissae,
)
from .curve import (
    CurveSpec,
    affine_image,
    blending_coefficients,
    eval_deboor,
    eval_direct,
    is_mirror_symmetric,
    mirror_about_bisector,
)
from .knots import is_open, make_knot_vector
from .oracle import oracle_basis


@dataclass
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    cases: int
    detail: str = ""
    warnings: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}  {self.name:<28} worst={self.worst:.3e}  tol={self.tolerance:.0e}  "
                f"cases={self.cases}{'  ' + self.detail if self.detail else ''}")


def alphas(labels=cases.ALPHA_SET) -> list[Alpha]:
    return [Alpha.parse(a) for a in labels]


def curve_specs(case: cases.CurveCase, alpha_labels=cases.ALPHA_SET):
    knots = make_knot_vector(case.knots)
    for a in alphas(alpha_labels):
        yield CurveSpec(BasisSpec(knots, case.degree, a), case.polygon)


def interior_multiplicity_ok(knots, k: int) -> bool:
    """No node strictly inside the domain repeats more than ``k`` times."""
    return all(p <= k for p in knots.multiplicities[1:-1])


def _span_samples(a: float, b: float, count: int) -> list[float]:
    return [a + (b - a) * s / count for s in range(count)]


def partition_of_unity(samples_per_span=200, tol=1e-12, degrees=(1, 2, 3)) -> CheckResult:
    """Active functions sum to one on every non-empty span of ``[t_k, t_{m-k}]``."""
    worst, count = 0.0, 0
    for label, text in cases.BASIS_KNOTS.items():
        knots = make_knot_vector(text)
        t, m = knots.nodes, knots.m
        for k in degrees:
            if m - k - 1 < 0:
                continue
            spans = [j for j in knots.nonempty_spans() if k <= j <= m - k - 1]
            for a in alphas():
                spec = BasisSpec(knots, k, a)
                for j in spans:
                    for x in _span_samples(t[j], t[j + 1], samples_per_span):
                        bv = eval_basis_all(spec, x)
                        worst = max(worst, abs(sum(bv.values) - 1.0))
                        count += 1
    return CheckResult("partition of unity", worst <= tol, worst, tol, count)


def oracle_parity(probes_per_vector=200, tol=1e-13, seed=20240601) -> CheckResult:
    """Float recurrence against exact rational evaluation at random rational points."""
    rng = random.Random(seed)
    alpha_choices = list(cases.ALPHA_SET)
    worst, count, worst_at = 0.0, 0, ""
    for label, text in cases.BASIS_KNOTS.items():
        exact = [Fraction(tok) for tok in text.split(",")]
        knots = make_knot_vector(text)
        t0, tm = exact[0], exact[-1]
        for _ in range(probes_per_vector):
            k = rng.choice([kk for kk in (0, 1, 2, 3) if len(exact) - kk - 2 >= 0])
            n = len(exact) - k - 2
            a_label = rng.choice(alpha_choices)
            i = rng.randint(0, n)
            q = rng.randint(1, 64)
            x = t0 + (tm - t0) * Fraction(rng.randint(0, q - 1), q)
            a_exact = float("inf") if a_label == "inf" else Fraction(a_label)
            ref = oracle_basis(exact, k, a_exact, i, x)
            got = eval_basis_single(BasisSpec(knots, k, Alpha.parse(a_label)), i, float(x))
            err = abs(got - float(ref))
            if err > worst:
                worst, worst_at = err, f"{label} k={k} alpha={a_label} i={i} x={x}"
            count += 1
    return CheckResult("oracle parity", worst <= tol, worst, tol, count, worst_at)


def deboor_parity(samples=500, tol=1e-12) -> CheckResult:
    """de Boor triangle against the direct basis sum, relative to ``max(1, |G|)``."""
    worst, count = 0.0, 0
    for case in cases.CURVE_CASES:
        for spec in curve_specs(case):
            lo, hi = spec.basis.knots.domain
            for x in np.linspace(lo, hi, samples):
                p = eval_direct(spec, float(x))
                q = eval_deboor(spec, float(x))
                worst = max(worst, float(np.linalg.norm(p - q)) / max(1.0, float(np.linalg.norm(p))))
                count += 1
    return CheckResult("de Boor = direct sum", worst <= tol, worst, tol, count)


SYMMETRY_ALPHAS = ("-4", "-1", "-1/2", "2", "3/2", "5", "inf")


def conjugate_symmetry(points=300, tol=1e-12, degrees=(1, 2, 3)) -> CheckResult:
    """``B_{i,k,alpha}(t_0 + t_m - x) == B_{n-i,k,1-alpha}(x)`` on symmetric vectors."""
    worst, count = 0.0, 0
    for label in cases.SYMMETRIC_BASIS_KNOTS:
        knots = make_knot_vector(cases.BASIS_KNOTS[label])
        t0, tm = knots.domain
        for k in degrees:
            for a in alphas(SYMMETRY_ALPHAS):
                spec = BasisSpec(knots, k, a)
                partner = BasisSpec(knots, k, conjugate(a))
                n = spec.n
                for s in range(1, points + 1):
                    x = t0 + (tm - t0) * s / (points + 1)
                    lhs = eval_basis_vector(spec, t0 + tm - x)
                    rhs = eval_basis_vector(partner, x)[::-1]
                    worst = max(worst, float(np.max(np.abs(lhs - rhs))))
                    count += n + 1
    return CheckResult("conjugate symmetry", worst <= tol, worst, tol, count)


def open_configurations():
    """(label, knots, degree) for every open reference vector."""
    out = []
    for label, text in cases.BASIS_KNOTS.items():
        knots = make_knot_vector(text)
        if is_open(knots, 2):
            out.append((label, knots, 2))
    seen = set()
    for case in cases.CURVE_CASES:
        key = (case.knots, case.degree)
        if key not in seen:
            seen.add(key)
            out.append((case.name, make_knot_vector(case.knots), case.degree))
    return out


def one_sided_derivative(f, x: float, h: float) -> float:
    """Second-order one-sided difference; ``h < 0`` looks to the left."""
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)


def endpoint_derivative_check(steps=(1e-4, 1e-5, 1e-6), tol=1e-4) -> CheckResult:
    """Closed-form end slopes against finite differences, relative to the largest slope."""
    worst, count, worst_at = 0.0, 0, ""
    for label, knots, k in open_configurations():
        t0, tm = knots.domain
        for a in alphas():
            spec = BasisSpec(knots, k, a)
            at_start, at_end = endpoint_derivatives(spec)
            for x, ref, sign in ((t0, at_start, 1.0), (tm, at_end, -1.0)):
                ref = np.array(ref)
                scale = float(np.max(np.abs(ref)))
                best = np.inf
                for h in steps:
                    fd = np.array([
                        one_sided_derivative(lambda u, i=i: eval_basis_single(spec, i, u), x, sign * h)
                        for i in range(spec.n + 1)
                    ])
                    best = min(best, float(np.max(np.abs(fd - ref))) / scale)
                if best > worst:
                    worst, worst_at = best, f"{label} k={k} alpha={a.label} x={x}"
                count += 1
    return CheckResult("endpoint derivatives", worst <= tol, worst, tol, count, worst_at)


def bernstein_equivalence(samples=500, tol=1e-14, max_degree=8) -> CheckResult:
    worst, count = 0.0, 0
    for span in (Span(0.0, 1.0), Span(-2.0, 3.5)):
        for k in range(max_degree + 1):
            knots = bezier_knots(k, span)
            for a in alphas():
                spec = BasisSpec(knots, k, a)
                for x in np.linspace(span.a, span.b, samples):
                    closed = np.array(bernstein_closed_form(k, a, float(x), span))
                    rec = eval_basis_vector(spec, float(x))
                    worst = max(worst, float(np.max(np.abs(closed - rec))))
                    count += 1
    return CheckResult("Bernstein equivalence", worst <= tol, worst, tol, count)


RECOVERY_ALPHAS = (1e2, 1e4, 1e6)


def classical_recovery(grid=2000, tol=1e-4, signs=(1.0, -1.0)) -> CheckResult:
    """Distance to the classical basis at large ``|alpha|`` and its strict decrease."""
    worst, count, detail = 0.0, 0, ""
    monotone = True
    for label, k in cases.BASIS_FIGURES:
        if k == 0:
            continue
        knots = make_knot_vector(cases.BASIS_KNOTS[label])
        xs = np.linspace(*knots.domain, grid)
        ref = basis_matrix(BasisSpec(knots, k, CLASSICAL), xs)
        for sign in signs:
            errs = []
            for mag in RECOVERY_ALPHAS:
                B = basis_matrix(BasisSpec(knots, k, Alpha(sign * mag)), xs)
                errs.append(float(np.max(np.abs(B - ref))))
            if not all(b < a for a, b in zip(errs, errs[1:])):
                monotone = False
                detail = f"not decreasing on {label} k={k} sign={sign:+.0f}: {errs}"
            worst = max(worst, errs[-1])
            count += 1
    passed = worst <= tol and monotone
    return CheckResult("classical recovery", passed, worst, tol, count, detail)


def endpoint_interpolation() -> CheckResult:
    """``G(t_0) == d_0`` and ``G(t_m) == d_n`` exactly."""
    worst, count = 0.0, 0
    for case in cases.CURVE_CASES:
        for spec in curve_specs(case):
            t0, tm = spec.basis.knots.domain
            d = spec.polygon.points
            for x, target in ((t0, d[0]), (tm, d[-1])):
                worst = max(worst, float(np.max(np.abs(eval_direct(spec, x) - target))))
                count += 1
    return CheckResult("endpoint interpolation", worst == 0.0, worst, 0.0, count)


def convex_hull(samples=500, neg_tol=1e-14, sum_tol=1e-12) -> CheckResult:
    worst_neg, worst_sum, count = 0.0, 0.0, 0
    for case in cases.CURVE_CASES:
        for spec in curve_specs(case):
            for x in np.linspace(*spec.basis.knots.domain, samples):
                _, coeffs = blending_coefficients(spec, float(x))
                worst_neg = max(worst_neg, float(-coeffs.min()))
                worst_sum = max(worst_sum, abs(float(coeffs.sum()) - 1.0))
                count += 1
    passed = worst_neg <= neg_tol and worst_sum <= sum_tol
    return CheckResult("convex hull coefficients", passed, worst_sum, sum_tol, count,
                       f"most negative coefficient {-worst_neg:.3e}")


def affected_by(spec: CurveSpec, j: int, x: float) -> bool:
    """Whether ``G(x)`` may depend on ``d_j``: ``x`` in ``[t_j, t_{j+k+1})`` or the closing ``t_m``."""
    t, k = spec.basis.knots.nodes, spec.basis.degree
    right = t[j + k + 1]
    return t[j] <= x < right or (x == t[-1] and right == t[-1])


def local_control(samples=100, seed=7) -> CheckResult:
    rng = np.random.default_rng(seed)
    violations, count = 0, 0
    for case in cases.CURVE_CASES:
        for spec in curve_specs(case):
            xs = [float(x) for x in np.linspace(*spec.basis.knots.domain, samples)]
            base = [eval_direct(spec, x) for x in xs]
            for j in range(len(spec.polygon)):
                pts = spec.polygon.points.copy()
                pts[j] += rng.normal(size=pts.shape[1])
                moved = CurveSpec(spec.basis, pts)
                for x, g in zip(xs, base):
                    if not affected_by(spec, j, x):
                        count += 1
                        if not np.array_equal(eval_direct(moved, x), g):
                            violations += 1
    return CheckResult("local control", violations == 0, float(violations), 0.0, count,
                       "worst = number of changed samples outside the support")


def affine_invariance(samples=100, tol=1e-10, seed=11) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst, count = 0.0, 0
    for case in cases.CURVE_CASES:
        for spec in curve_specs(case):
            theta = rng.uniform(0, 2 * np.pi)
            A = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
            A = A @ np.diag(rng.uniform(0.5, 2.0, size=2))
            b = rng.uniform(-5, 5, size=2)
            image = affine_image(spec, A, b)
            for x in np.linspace(*spec.basis.knots.domain, samples):
                p = A @ eval_direct(spec, float(x)) + b
                q = eval_direct(image, float(x))
                worst = max(worst, float(np.max(np.abs(p - q))))
                count += 1
    return CheckResult("affine invariance", worst <= tol, worst, tol, count)


MIRROR_CASES = ("symmetry_1", "symmetry_4")


def curve_mirror_symmetry(samples=500, tol=1e-10, names=MIRROR_CASES) -> CheckResult:
    """``mirror(G_alpha(x)) == G_{1-alpha}(t_0 + t_m - x)`` for symmetric data."""
    worst, count = 0.0, 0
    for name in names:
        case = cases.CURVE_CASES_BY_NAME[name]
        for spec in curve_specs(case):
            if not is_mirror_symmetric(spec.polygon):
                raise ValueError(f"{name}: polygon is not mirror symmetric")
            partner = spec.with_alpha(conjugate(spec.alpha))
            mirror = mirror_about_bisector(spec.polygon)
            t0, tm = spec.basis.knots.domain
            for x in np.linspace(t0, tm, samples):
                p = mirror(eval_direct(spec, float(x)))
                q = eval_direct(partner, t0 + tm - float(x))
                worst = max(worst, float(np.max(np.abs(p - q))))
                count += 1
    return CheckResult("curve mirror symmetry", worst <= tol, worst, tol, count)


def linear_independence(threshold=1e-10) -> CheckResult:
    """Smallest singular value of the collocation matrix at the Greville abscissae."""
    smallest, count, skipped = np.inf, 0, []
    for i in range(4, 14):
        label = f"U{i}"
        knots = make_knot_vector(cases.BASIS_KNOTS[label])
        if not interior_multiplicity_ok(knots, 2):
            skipped.append(label)
            continue
        for a in alphas():
            spec = BasisSpec(knots, 2, a)
            M = basis_matrix(spec, greville_abscissae(spec))
            smallest = min(smallest, float(np.linalg.svd(M, compute_uv=False).min()))
            count += 1
    return CheckResult("linear independence", smallest > threshold, smallest, threshold, count,
                       f"worst = smallest singular value; skipped {','.join(skipped)}")


def peak_violation(values, tie=1e-13) -> bool:
    """True unless the sequence rises then falls (ties within ``tie`` ignored)."""
    falling = False
    for a, b in zip(values, values[1:]):
        d = b - a
        if abs(d) <= tie:
            continue
        if d < 0:
            falling = True
        elif falling:
            return True
    return False


def unimodality(grid=2000) -> CheckResult:
    """Single-peak audit of every basis function; failures only where continuity is guaranteed."""
    hard, warnings, count = 0, [], 0
    configs = [(label, make_knot_vector(cases.BASIS_KNOTS[label]), k) for label, k in cases.BASIS_FIGURES if k >= 1]
    configs += [(n, kv, k) for n, kv, k in open_configurations() if not n.startswith("U")]
    for label, knots, k in configs:
        t = knots.nodes
        regular = interior_multiplicity_ok(knots, k)
        for a in alphas():
            spec = BasisSpec(knots, k, a)
            for i in range(spec.n + 1):
                lo, hi = t[i], t[i + k + 1]
                if not lo < hi:
                    continue
                vals = [eval_basis_single(spec, i, float(x)) for x in np.linspace(lo, hi, grid)]
                count += 1
                if peak_violation(vals):
                    msg = f"{label} k={k} alpha={a.label} i={i}"
                    warnings.append(msg)
                    if regular:
                        hard += 1
    return CheckResult("unimodality audit", hard == 0, float(hard), 0.0, count,
                       f"{len(warnings)} warning(s)", warnings)


SUITES = {
    "partition": partition_of_unity,
    "oracle": oracle_parity,
    "deboor": deboor_parity,
    "symmetry": conjugate_symmetry,
    "endpoint-derivatives": endpoint_derivative_check,
    "bernstein": bernstein_equivalence,
    "classical": classical_recovery,
    "interpolation": endpoint_interpolation,
    "convex-hull": convex_hull,
    "local-control": local_control,
    "affine": affine_invariance,
    "mirror": curve_mirror_symmetry,
    "independence": linear_independence,
    "unimodality": unimodality,
}


def run_all(names=None) -> list[CheckResult]:
    return [SUITES[name]() for name in (names or SUITES)]
