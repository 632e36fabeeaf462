"""Exact rational reference for the parametrization and the basis recurrence.

Everything here works on :class:`fractions.Fraction` and follows the
recurrence top-down, with no span-local shortcuts, so it shares no code path
with the floating-point kernels it is used to check.  The classical index is
passed as ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence, Union

Rational = Union[Fraction, int, str]

MAX_DEGREE = 6
MAX_KNOT_INDEX = 16


class OracleCostError(ValueError):
    pass


def to_fraction(value) -> Fraction:
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"not a finite rational: {value!r}")
    return Fraction(value)


def _check_alpha(alpha):
    if isinstance(alpha, float) and math.isinf(alpha):
        return None
    a = to_fraction(alpha)
    if not (a < 0 or a > 1):
        raise ValueError(f"alpha must lie outside [0, 1], got {a}")
    return a


def oracle_phi(alpha, x: Rational, a: Rational, b: Rational) -> Fraction:
    """Exact ``phi_alpha(x, a, b)``; an empty interval gives 0 like the float version."""
    al = _check_alpha(alpha)
    x, a, b = to_fraction(x), to_fraction(a), to_fraction(b)
    if not (a <= x < b):
        return Fraction(0)
    if al is None:
        return (x - a) / (b - a)
    return al * (x - a) / (x + (al - 1) * b - al * a)


def oracle_basis(knots: Sequence[Rational], k: int, alpha, i: int, x: Rational) -> Fraction:
    """Exact ``B_{i,k,alpha}(x)`` by the plain recursive definition.

    ``x = t_m`` gives 0 here (pure half-open indicator); probes should stay in
    ``[t_0, t_m)``.
    """
    t = tuple(to_fraction(v) for v in knots)
    m = len(t) - 1
    if k > MAX_DEGREE or m > MAX_KNOT_INDEX:
        raise OracleCostError(f"oracle limited to k <= {MAX_DEGREE}, m <= {MAX_KNOT_INDEX}")
    if not 0 <= i <= m - k - 1:
        raise IndexError(f"basis index {i} outside 0..{m - k - 1}")
    al = _check_alpha(alpha)
    alpha_arg = math.inf if al is None else al
    xq = to_fraction(x)

    @lru_cache(maxsize=None)
    def B(idx: int, deg: int) -> Fraction:
        if deg == 0:
            return Fraction(1) if t[idx] <= xq < t[idx + 1] else Fraction(0)
        w_left = oracle_phi(alpha_arg, xq, t[idx], t[idx + deg])
        w_right = oracle_phi(alpha_arg, xq, t[idx + 1], t[idx + deg + 1])
        return w_left * B(idx, deg - 1) + (1 - w_right) * B(idx + 1, deg - 1)

    return B(i, k)


@dataclass(frozen=True)
class GoldenProbe:
    i: int
    k: int
    alpha: Fraction
    x: Fraction
    value: Fraction

    def to_line(self) -> str:
        def q(f: Fraction) -> str:
            return f"{f.numerator}/{f.denominator}"

        return f"{self.i} {self.k} {q(self.alpha)} {q(self.x)} {q(self.value)}"

    @classmethod
    def from_line(cls, line: str) -> GoldenProbe:
        i, k, al, x, v = line.split()
        return cls(int(i), int(k), Fraction(al), Fraction(x), Fraction(v))


def write_golden(path: Path, probes: Iterable[GoldenProbe], header: str = "") -> None:
    lines = [f"# {h}" for h in header.splitlines() if h]
    lines += [p.to_line() for p in probes]
    Path(path).write_text("\n".join(lines) + "\n")


def read_golden(path: Path) -> list[GoldenProbe]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(GoldenProbe.from_line(line))
    return out
