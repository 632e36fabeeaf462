"""Regenerate the frozen exact-rational basis probes (run once; outputs are committed)."""

from fractions import Fraction
from pathlib import Path

from alphaspline import cases
from alphaspline.oracle import GoldenProbe, oracle_basis, write_golden

ALPHAS = (Fraction(2), Fraction(-1), Fraction(-1, 2), Fraction(6, 5), Fraction(5), Fraction(-4))
HERE = Path(__file__).parent


def probes_for(nodes):
    t = [Fraction(v) for v in nodes.split(",")]
    m = len(t) - 1
    out = []
    for k in (1, 2, 3):
        n = m - k - 1
        if n < 0:
            continue
        for ai, a in enumerate(ALPHAS):
            x = t[0] + (t[-1] - t[0]) * Fraction(2 * ai + 1 + k, 17)
            j = max(s for s in range(m) if t[s] <= x)
            lo, hi = max(0, j - k), min(n, j)
            for i in range(lo, hi + 1):
                out.append(GoldenProbe(i, k, a, x, oracle_basis(t, k, a, i, x)))
    return out


if __name__ == "__main__":
    for name, nodes in cases.BASIS_KNOTS.items():
        write_golden(HERE / f"{name}.txt", probes_for(nodes), header=f"knots {nodes}\ni k alpha x value")
