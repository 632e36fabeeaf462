"""Rational B-spline bases and curves built on a homographic reparametrization of index alpha."""

from .alpha import CLASSICAL, Alpha, Span, conjugate, phi, phi_barycentric, phi_derivative_limit
from .basis import (
    BasisSpec,
    BasisValues,
    bernstein_closed_form,
    endpoint_derivatives,
    eval_basis_all,
    eval_basis_single,
    symmetry_partner,
)
from .curve import (
    ControlPolygon,
    CurveSpec,
    affine_image,
    endpoint_tangents,
    eval_deboor,
    eval_direct,
    symmetric_counterpart,
)
from .knots import KnotError, KnotTaxonomy, KnotVector, classify, find_span, make_knot_vector, multiplicity
from .oracle import oracle_basis, oracle_phi
from .sampling import SampleSeries, sample_basis, sample_curve, sample_phi
from .emit import emit_csv, emit_svg

__all__ = [
    "CLASSICAL", "Alpha", "Span", "conjugate", "phi", "phi_barycentric", "phi_derivative_limit",
    "BasisSpec", "BasisValues", "bernstein_closed_form", "endpoint_derivatives",
    "eval_basis_all", "eval_basis_single", "symmetry_partner",
    "ControlPolygon", "CurveSpec", "affine_image", "endpoint_tangents", "eval_deboor",
    "eval_direct", "symmetric_counterpart",
    "KnotError", "KnotTaxonomy", "KnotVector", "classify", "find_span", "make_knot_vector",
    "multiplicity", "oracle_basis", "oracle_phi",
    "SampleSeries", "sample_basis", "sample_curve", "sample_phi", "emit_csv", "emit_svg",
]
