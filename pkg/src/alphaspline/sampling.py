"""Uniform sampling of the parametrization, bases and curves into tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .alpha import Alpha, Span, phi
from .basis import BasisSpec, eval_basis_vector
from .curve import CurveSpec, eval_direct


@dataclass(frozen=True)
class SampleSeries:
    xs: tuple[float, ...]
    columns: Mapping[str, tuple[float, ...]]
    x_name: str = "x"

    def __post_init__(self):
        xs = tuple(float(x) for x in self.xs)
        cols = {str(k): tuple(float(v) for v in vals) for k, vals in self.columns.items()}
        if len(xs) < 1:
            raise ValueError("empty series")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("sample abscissae must be strictly increasing")
        for name, vals in cols.items():
            if len(vals) != len(xs):
                raise ValueError(f"column {name!r} has {len(vals)} values for {len(xs)} samples")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "columns", cols)

    @property
    def names(self) -> list[str]:
        return list(self.columns)

    def __len__(self) -> int:
        return len(self.xs)


def uniform_grid(lo: float, hi: float, n: int) -> list[float]:
    """``n`` equally spaced samples with both ends included exactly."""
    if not lo < hi:
        raise ValueError(f"invalid sampling domain [{lo}, {hi}]")
    if n < 2:
        raise ValueError("at least two samples are required")
    xs = np.linspace(lo, hi, n)
    xs[0], xs[-1] = lo, hi
    return [float(x) for x in xs]


def alpha_column(alpha: Alpha) -> str:
    return f"alpha={alpha.label}"


def sample_phi(alpha: Alpha, span: Span, domain: tuple[float, float], n: int) -> SampleSeries:
    xs = uniform_grid(domain[0], domain[1], n)
    return SampleSeries(xs, {alpha_column(alpha): [phi(alpha, x, span) for x in xs]})


def sample_basis(spec: BasisSpec, n: int) -> SampleSeries:
    lo, hi = spec.knots.domain
    xs = uniform_grid(lo, hi, n)
    table = np.array([eval_basis_vector(spec, x) for x in xs])
    return SampleSeries(xs, {f"B_{i}": table[:, i] for i in range(spec.n + 1)})


def sample_curve(spec: CurveSpec, n: int) -> SampleSeries:
    lo, hi = spec.basis.knots.domain
    xs = uniform_grid(lo, hi, n)
    pts = np.array([eval_direct(spec, x) for x in xs])
    names = ("x", "y", "z")[: spec.polygon.dim]
    return SampleSeries(xs, {name: pts[:, c] for c, name in enumerate(names)}, x_name="t")


def merge_series(series: Sequence[SampleSeries], prefixes: Sequence[str] | None = None) -> SampleSeries:
    """Concatenate the columns of series sharing the same abscissae."""
    if not series:
        raise ValueError("nothing to merge")
    xs = series[0].xs
    cols: dict[str, tuple[float, ...]] = {}
    for idx, s in enumerate(series):
        if s.xs != xs:
            raise ValueError("merged series must share their abscissae")
        for name, vals in s.columns.items():
            key = f"{name}[{prefixes[idx]}]" if prefixes else name
            if key in cols:
                raise ValueError(f"duplicate column {key!r}")
            cols[key] = vals
    return SampleSeries(xs, cols, x_name=series[0].x_name)
