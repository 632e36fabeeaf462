"""Homographic parametrization of index alpha.

For a span ``[a, b)`` and an index ``alpha`` with ``alpha * (alpha - 1) > 0``
the parametrization is the strictly increasing homographic map

    f(x) = alpha * (x - a) / (x + (alpha - 1) * b - alpha * a)

sending ``a`` to 0 and ``b`` to 1.  Outside the half-open span it is 0.
The classical linear weight ``(x - a) / (b - a)`` is the limit ``|alpha| -> inf``
and is represented by :data:`CLASSICAL`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

Endpoint = Literal["a_plus", "b_minus", "a_minus", "b_plus"]


@dataclass(frozen=True)
class Alpha:
    """Index of the parametrization; ``math.inf`` stands for the classical case.

    Finite values must satisfy ``value < 0`` or ``value > 1``; the comparison is
    exact.  ``-inf`` is normalised to ``+inf`` since both are the same limit.
    """

    value: float

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v):
            raise ValueError("alpha must not be NaN")
        if math.isinf(v):
            v = math.inf
        elif not (v < 0.0 or v > 1.0):
            raise ValueError(f"alpha must lie in (-inf, 0) U (1, inf), got {self.value!r}")
        object.__setattr__(self, "value", v)

    @classmethod
    def parse(cls, text: str) -> Alpha:
        """Parse ``"inf"``, ``"-inf"``, an integer, a decimal or a fraction like ``"-1/2"``."""
        token = text.strip().lower()
        if token in ("inf", "+inf", "-inf", "infinity", "classical"):
            return CLASSICAL
        try:
            value = float(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed alpha {text!r}") from None
        return cls(value)

    @property
    def is_classical(self) -> bool:
        return math.isinf(self.value)

    @property
    def label(self) -> str:
        """Short stable text form: ``inf`` or the simplest close fraction."""
        if self.is_classical:
            return "inf"
        frac = Fraction(self.value).limit_denominator(10**6)
        if float(frac) == self.value:
            return str(frac)
        return repr(self.value)

    def __str__(self) -> str:
        return self.label


CLASSICAL = Alpha(math.inf)


def as_alpha(alpha: Alpha | float | int | str) -> Alpha:
    if isinstance(alpha, Alpha):
        return alpha
    if isinstance(alpha, str):
        return Alpha.parse(alpha)
    return Alpha(alpha)


@dataclass(frozen=True)
class Span:
    a: float
    b: float

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"span requires a < b, got [{self.a}, {self.b}]")


def homographic(alpha: Alpha, x: float, a: float, b: float) -> float:
    """Evaluate ``f_alpha`` on ``[a, b]`` with no support cut-off; requires ``a < b``.

    The denominator is split so both of its terms carry the sign of ``alpha``,
    which avoids cancellation for ``alpha`` close to 0 or 1.
    """
    if alpha.is_classical:
        return (x - a) / (b - a)
    v = alpha.value
    if v > 1.0:
        den = (x - a) + (v - 1.0) * (b - a)
    else:
        den = (x - b) + v * (b - a)
    return v * (x - a) / den


def phi(alpha: Alpha, x: float, span: Span) -> float:
    """Parametrization of index ``alpha`` on ``span``: ``f_alpha(x)`` on ``[a, b)``, else 0."""
    return phi_raw(alpha, x, span.a, span.b)


def phi_raw(alpha: Alpha, x: float, a: float, b: float) -> float:
    """Same as :func:`phi` but on bare bounds; an empty span ``a >= b`` gives 0."""
    if not a <= x < b:
        return 0.0
    return homographic(alpha, x, a, b)


def phi_barycentric(alpha: Alpha, lam: float) -> float:
    """``f_alpha(a + lam * (b - a))``, which does not depend on the span."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"barycentric coordinate must lie in [0, 1], got {lam!r}")
    if alpha.is_classical:
        return lam
    v = alpha.value
    if v > 1.0:
        return lam * v / (lam + (v - 1.0))
    return lam * v / ((lam - 1.0) + v)


def conjugate(alpha: Alpha) -> Alpha:
    """The conjugate index ``1 - alpha``; the classical index is self-conjugate."""
    if alpha.is_classical:
        return alpha
    return Alpha(1.0 - alpha.value)


def phi_derivative_limit(alpha: Alpha, span: Span, endpoint: Endpoint) -> float:
    """One-sided limit of ``d phi / dx`` at an end of the span.

    Outside the support (``a_minus``, ``b_plus``) the limit is 0.
    """
    width = span.b - span.a
    if endpoint in ("a_minus", "b_plus"):
        return 0.0
    if alpha.is_classical:
        if endpoint in ("a_plus", "b_minus"):
            return 1.0 / width
    else:
        v = alpha.value
        if endpoint == "a_plus":
            return v / ((v - 1.0) * width)
        if endpoint == "b_minus":
            return (v - 1.0) / (v * width)
    raise ValueError(f"unknown endpoint {endpoint!r}")
