"""Reference configurations: the published test-case knot vectors and control polygons.

Knot vectors are kept as text so fractions such as ``3/4`` stay exact for the
rational oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

BASIS_KNOTS = {
    "U0": "0,1,2,3,4,5,6",
    "U1": "0,1,2,3,3,5,6",
    "U2": "0,1,1,2,4,5,6",
    "U3": "0,1,1.5,2,3.5,5,6",
    "U4": "0,0,0,1,2,3,3,3",
    "U5": "0,0,0,0.4,2.6,3,3,3",
    "U6": "0,0,0,1.8,2.2,3,3,3",
    "U7": "0,0,0,1,1,3,3,3",
    "U8": "0,0,0,2,2,3,3,3",
    "U9": "0,0,0,3/4,6/4,9/4,3,3,3",
    "U10": "0,0,0,3/4,3/4,9/4,3,3,3",
    "U11": "0,0,0,3/4,3/4,3/4,3,3,3",
    "U12": "0,0,0,3/4,9/4,9/4,3,3,3",
    "U13": "0,0,0,9/4,9/4,9/4,3,3,3",
}

# knot vectors the basis figures are drawn for, with their degrees
BASIS_FIGURES = [("U0", k) for k in range(4)] + [(f"U{i}", 2) for i in range(1, 14)]
BASIS_FIGURE_ALPHAS = ("-1", "2", "5", "inf")

SYMMETRIC_BASIS_KNOTS = ("U4", "U5", "U9")

ALPHA_SET = ("-4", "-1", "-1/2", "-1/5", "6/5", "3/2", "2", "5", "inf")

# negative indices of the curve figures; each is drawn with its conjugate too
CURVE_ALPHAS_NEG = ("inf", "-4", "-1/2", "-1/5", "-1/7")
SYMMETRY_ALPHAS = ("inf", "-1", "-1/2", "-1/5")


@dataclass(frozen=True)
class CurveCase:
    name: str
    knots: str
    degree: int
    polygon: tuple[tuple[float, ...], ...]
    alphas: tuple[str, ...]


def _conjugated(alphas):
    out = []
    for a in alphas:
        out.append(a)
        if a != "inf":
            out.append(str(1 - Fraction(a)))
    return tuple(out)


_ALPHA_POLY = ((0, 2), (1.5, 5), (2.5, 4), (3, 1), (5, 4), (7, 1), (8, 4), (10, 4))
_DEGREE_POLY_1 = ((0, 0), (3, 9), (6, 3), (9, 6))
_DEGREE_POLY_2 = ((1, 3), (0, 5), (5, 5), (3, 0), (8, 0), (7, 3))
_LOCAL_HEAD = ((0, 4), (5, 4), (5, 8), (11, 7.5))
_LOCAL_TAIL = ((12, 0), (2, 0))
_SYM_OY_1 = ((4, 0), (0, 11), (6, 14), (10, 14), (16, 11), (12, 0))
_SYM_OY_2 = ((4, 0), (0, 11), (8, 14), (8, 14), (16, 11), (12, 0))
_SYM_OX_4 = (
    (0, 5), (0, 4), (1, 4), (2, 4), (2, 6), (4, 6), (5, 5),
    (5, 1), (4, 0), (2, 0), (2, 2), (1, 2), (0, 2), (0, 1),
)  # fmt: skip
_SYM_OX_5 = (
    (0, 5), (0, 4), (1, 4), (2, 4), (2, 6), (4, 6), (5, 3),
    (5, 3), (4, 0), (2, 0), (2, 2), (1, 2), (0, 2), (0, 1),
)  # fmt: skip
_SYM_DOUBLE_7 = (
    (0, 2), (0, 3), (1, 4), (3, 4), (5, 4), (6, 3), (6, 2),
    (6, 1), (5, 0), (3, 0), (1, 0), (0, 1), (0, 2),
)  # fmt: skip

_ALL_ALPHAS = _conjugated(CURVE_ALPHAS_NEG)
_SYM_ALPHAS = _conjugated(SYMMETRY_ALPHAS)

CURVE_CASES = [
    CurveCase("alpha_influence", "0,0,0,0,1,2,3,4,5,5,5,5", 3, _ALPHA_POLY, _ALL_ALPHAS),
    CurveCase("degree_ex1_k1", "0,0,1,2,3,3", 1, _DEGREE_POLY_1, _ALL_ALPHAS),
    CurveCase("degree_ex1_k2", "0,0,0,1.5,3,3,3", 2, _DEGREE_POLY_1, _ALL_ALPHAS),
    CurveCase("degree_ex1_k3", "0,0,0,0,3,3,3,3", 3, _DEGREE_POLY_1, _ALL_ALPHAS),
    CurveCase("degree_ex2_k1", "0,0,1,2,3,4,5,5", 1, _DEGREE_POLY_2, _ALL_ALPHAS),
    CurveCase("degree_ex2_k2", "0,0,0,5/4,5/2,15/4,5,5,5", 2, _DEGREE_POLY_2, _ALL_ALPHAS),
    CurveCase("degree_ex2_k3", "0,0,0,0,5/3,10/3,5,5,5,5", 3, _DEGREE_POLY_2, _ALL_ALPHAS),
    CurveCase("degree_ex2_k4", "0,0,0,0,0,5/2,5,5,5,5,5", 4, _DEGREE_POLY_2, _ALL_ALPHAS),
    CurveCase("degree_ex2_k5", "0,0,0,0,0,0,5,5,5,5,5,5", 5, _DEGREE_POLY_2, _ALL_ALPHAS),
    CurveCase("local_control_1", "0,0,0,0,1,2,3,4,4,4,4", 3, _LOCAL_HEAD + ((6, 2),) + _LOCAL_TAIL, _ALL_ALPHAS),
    CurveCase("local_control_2", "0,0,0,0,1,2,3,4,4,4,4", 3, _LOCAL_HEAD + ((9, 3),) + _LOCAL_TAIL, _ALL_ALPHAS),
    CurveCase("local_control_3", "0,0,0,0,1,2,3,4,4,4,4", 3, _LOCAL_HEAD + ((12, 4),) + _LOCAL_TAIL, _ALL_ALPHAS),
    CurveCase("symmetry_1", "0,0,0,0,1,2,3,3,3,3", 3, _SYM_OY_1, _SYM_ALPHAS),
    CurveCase("symmetry_2", "0,0,0,0,1,2,3,3,3,3", 3, _SYM_OY_2, _SYM_ALPHAS),
    CurveCase("symmetry_3", "0,0,0,0,2,2,4,4,4,4", 3, _SYM_OY_2, _SYM_ALPHAS),
    CurveCase("symmetry_4", "0,0,0,0,1,2,3,4,5,6,7,8,9,10,11,11,11,11", 3, _SYM_OX_4, _SYM_ALPHAS),
    CurveCase("symmetry_5", "0,0,0,0,1,2,3,4,5,6,7,8,9,10,11,11,11,11", 3, _SYM_OX_5, _SYM_ALPHAS),
    CurveCase("symmetry_6", "0,0,0,0,1,2,3,4,5,5,6,7,8,9,10,10,10,10", 3, _SYM_OX_5, _SYM_ALPHAS),
    CurveCase("symmetry_7", "0,0,0,0,1,2,3,4,5,6,7,8,9,10,10,10,10", 3, _SYM_DOUBLE_7, _SYM_ALPHAS),
]

CURVE_CASES_BY_NAME = {c.name: c for c in CURVE_CASES}

# phi figures: (name, span, plotting domain, alphas)
PHI_FIGURES = [
    ("phi_negative", (0.0, 1.0), (-1.0, 2.0), ("-1/3", "-1/2", "-4", "inf")),
    ("phi_positive", (0.0, 1.0), (-1.0, 2.0), ("4/3", "3/2", "5", "inf")),
    ("phi_conjugates", (1.0, 3.0), (0.0, 6.0), ("-1/3", "4/3", "-1/2", "3/2", "-4", "5", "inf")),
]
