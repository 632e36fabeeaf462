"""Knot vectors: validation, breakpoints, taxonomy and span lookup."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


class KnotError(ValueError):
    """Raised for a decreasing knot sequence; ``index`` is the offending position."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class KnotVector:
    nodes: tuple[float, ...]
    breakpoints: tuple[float, ...] = field(init=False)
    multiplicities: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        nodes = tuple(float(t) for t in self.nodes)
        if len(nodes) < 2:
            raise KnotError("a knot vector needs at least 2 nodes")
        for i in range(1, len(nodes)):
            if not nodes[i - 1] <= nodes[i]:
                raise KnotError(
                    f"knots must be non-decreasing: t[{i}]={nodes[i]} < t[{i - 1}]={nodes[i - 1]}",
                    index=i,
                )
        if nodes[0] == nodes[-1]:
            raise KnotError("knot vector spans an empty interval")
        breaks: list[float] = []
        mults: list[int] = []
        for t in nodes:
            if breaks and t == breaks[-1]:
                mults[-1] += 1
            else:
                breaks.append(t)
                mults.append(1)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "breakpoints", tuple(breaks))
        object.__setattr__(self, "multiplicities", tuple(mults))

    @property
    def m(self) -> int:
        """Index of the last node (the vector has ``m + 1`` nodes)."""
        return len(self.nodes) - 1

    @property
    def domain(self) -> tuple[float, float]:
        return self.nodes[0], self.nodes[-1]

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, i):
        return self.nodes[i]

    def nonempty_spans(self) -> list[int]:
        """Indices ``j`` with ``t_j < t_{j+1}``."""
        t = self.nodes
        return [j for j in range(self.m) if t[j] < t[j + 1]]

    def to_text(self) -> str:
        return ",".join(repr(t) for t in self.nodes)


@dataclass(frozen=True)
class KnotTaxonomy:
    is_open: bool
    is_periodic: bool
    is_uniform: bool
    is_symmetric: bool


def parse_number(text: str) -> float:
    """Parse a real written as an integer, decimal or fraction (``"3/4"``)."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed number {text!r}") from None


def make_knot_vector(nodes: Sequence[float] | str) -> KnotVector:
    """Build a validated knot vector from numbers or from ``"0,0,0,1,2,3,3,3"``."""
    if isinstance(nodes, str):
        nodes = [parse_number(tok) for tok in nodes.split(",") if tok.strip()]
    return KnotVector(tuple(nodes))


def _close(x: float, y: float, scale: float) -> bool:
    return abs(x - y) <= 1e-12 * max(1.0, abs(scale))


def is_open(U: KnotVector, k: int) -> bool:
    t, m = U.nodes, U.m
    if m <= 2 * k:
        return False
    return all(t[i] == t[0] for i in range(k + 1)) and all(t[i] == t[m] for i in range(m - k, m + 1))


def is_uniform(U: KnotVector, k: int) -> bool:
    """Equal spacing ``h > 0`` of ``t_k .. t_{m-k}``."""
    t, m = U.nodes, U.m
    if m <= 2 * k:
        return False
    steps = [t[i + 1] - t[i] for i in range(k, m - k)]
    h = steps[0]
    if h <= 0:
        return False
    return all(_close(s, h, h) for s in steps)


def is_symmetric(U: KnotVector) -> bool:
    t, m = U.nodes, U.m
    total = t[0] + t[m]
    scale = max(abs(t[0]), abs(t[m]))
    return all(_close(t[m - i], total - t[i], scale) for i in range(m + 1))


def classify(U: KnotVector, k: int) -> KnotTaxonomy:
    """Open/periodic/uniform flags for degree ``k``, plus symmetry.

    The end-node split needs ``m > 2k``; below that open, periodic and
    uniform all report False.
    """
    if k < 0:
        raise ValueError("degree must be non-negative")
    defined = U.m > 2 * k
    opened = is_open(U, k)
    return KnotTaxonomy(
        is_open=opened,
        is_periodic=defined and not opened,
        is_uniform=is_uniform(U, k),
        is_symmetric=is_symmetric(U),
    )


def find_span(U: KnotVector, x: float) -> int:
    """Index ``j`` with ``t_j <= x < t_{j+1}``; ``x == t_m`` maps to the last non-empty span."""
    t = U.nodes
    if not t[0] <= x <= t[-1]:
        raise ValueError(f"x={x} outside the knot domain [{t[0]}, {t[-1]}]")
    if x == t[-1]:
        # left-limit convention: the last interval with t_j < t_m
        return bisect.bisect_left(t, t[-1]) - 1
    return bisect.bisect_right(t, x) - 1


def multiplicity(U: KnotVector, value: float) -> int:
    return sum(1 for t in U.nodes if t == value)
