"""Monotonicity of P(G, x)/x^n for large x.

Every verdict here is an exact sign or an exact comparison of rationals; only
quantities involving rho(G) or square roots are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chromatic import chromatic_polynomial
from .graph import Graph, max_degree, structural_queries, to_graph6
from .poly import IntPolynomial
from .roots import newton_power_sums

MONO_THRESHOLD_CONSTANT = 10  # x >= 10 * Delta^(3/2)
SEYMOUR_BOUND = Fraction(685, 252)


@dataclass(frozen=True)
class LaurentCoeffs:
    """c[0] is c_1: coefficients of ln(P(G,x)/x^n) = sum_i c_i x^-i."""

    c: tuple

    def __getitem__(self, i: int) -> Fraction:
        if i < 1:
            raise IndexError("Laurent coefficients start at c_1")
        return self.c[i - 1]

    def __len__(self):
        return len(self.c)


@dataclass(frozen=True)
class MonotonicityWitness:
    graph6: str
    n: int
    x: Fraction
    lhs: int
    rhs: int
    verdict: bool
    ratio: Fraction | None = field(default=None, compare=False)

    def to_dict(self, g: Graph | None = None) -> dict:
        d = {
            "graph6": self.graph6,
            "n": self.n,
            "x_num": str(self.x.numerator),
            "x_den": str(self.x.denominator),
            "verdict": self.verdict,
            "lhs_digits": str(self.lhs),
            "rhs_digits": str(self.rhs),
        }
        if g is not None:
            s = structural_queries(g)
            d.update(m=s.edge_count, t=s.triangle_count, delta=s.max_degree)
        return d


def laurent_coeffs_from_poly(p: IntPolynomial, count: int) -> LaurentCoeffs:
    sums = newton_power_sums(p, count)
    return LaurentCoeffs(tuple(Fraction(-s, i) for i, s in enumerate(sums, 1)))


def laurent_coeffs(g: Graph, count: int) -> LaurentCoeffs:
    return laurent_coeffs_from_poly(chromatic_polynomial(g), count)


def verify_lemma22(g: Graph) -> bool:
    """c_1 = -m and c_2 = -t - m/2, exactly."""
    s = structural_queries(g)
    c = laurent_coeffs(g, 2)
    return c[1] == -s.edge_count and c[2] == -s.triangle_count - Fraction(s.edge_count, 2)


def fprime_lower_bound(n: int, m: int, t: int, x: float, rho: float) -> float:
    """m/x^2 + (2t+m)/x^3 - n rho^3 / (x^3 (x - rho))."""
    if not x > rho > 0:
        raise ValueError(f"lower bound needs x > rho > 0 (x={x}, rho={rho})")
    return m / x ** 2 + (2 * t + m) / x ** 3 - n * rho ** 3 / (x ** 3 * (x - rho))


def fprime_lower_bound_graph(g: Graph, x: float, rho: float) -> float:
    s = structural_queries(g)
    return fprime_lower_bound(g.n, s.edge_count, s.triangle_count, x, rho)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def fprime_sign_poly(p: IntPolynomial, x: Fraction) -> int:
    n = p.degree
    px = p(x)
    if px == 0:
        raise ZeroDivisionError(f"P vanishes at x = {x}: F' has a pole")
    num = x * p.derivative()(x) - n * px
    return _sign(num) * _sign(x * px)


def fprime_exact_sign(g: Graph, x) -> int:
    """Exact sign of d/dx ln(P(G,x)/x^n) = P'/P - n/x at rational x."""
    return fprime_sign_poly(chromatic_polynomial(g), Fraction(x))


def x0(rho: float) -> float:
    """Larger root of (x + 1)(x - rho) = rho^3."""
    if rho <= 0:
        raise ValueError("x0 needs rho > 0")
    return (rho - 1 + math.sqrt((rho + 1) ** 2 + 4 * rho ** 3)) / 2


def ratio_inequality_poly(p: IntPolynomial, n: int, x: Fraction) -> tuple[int, int]:
    """Both sides of (x-1)^n P(x) >= x^n P(x-1), scaled by den^(2n) to integers."""
    a, b = x.numerator, x.denominator
    lhs = (a - b) ** n * p.eval_homogeneous(a, b) * b ** (n - p.degree)
    rhs = a ** n * p.eval_homogeneous(a - b, b) * b ** (n - p.degree)
    return lhs, rhs


def check_ratio_inequality(g: Graph, x) -> MonotonicityWitness:
    """Exact verdict of (x-1)^n P(G,x) >= x^n P(G,x-1).

    The cross-multiplied form stays defined when P(G, x-1) = 0; ``ratio`` is
    then None.
    """
    x = Fraction(x)
    if x <= 1:
        raise ValueError("ratio inequality is checked for x > 1")
    p = chromatic_polynomial(g)
    lhs, rhs = ratio_inequality_poly(p, g.n, x)
    below = p(x - 1)
    ratio = p(x) / below if below != 0 else None
    return MonotonicityWitness(to_graph6(g), g.n, x, lhs, rhs, lhs >= rhs, ratio)


def ceil_hundredths_threshold(delta: int) -> Fraction:
    """10 * delta^(3/2) rounded up to two decimals, exactly."""
    if delta == 0:
        return Fraction(0)
    target = 10 ** 6 * delta ** 3  # (100 * 10 * delta^1.5)^2
    root = math.isqrt(target)
    if root * root < target:
        root += 1
    return Fraction(root, 100)


def thm13_sample_points(delta: int, count: int = 10, step: Fraction = Fraction(1)) -> list[Fraction]:
    start = max(ceil_hundredths_threshold(delta), Fraction(2))
    return [start + j * step for j in range(count)]


@dataclass(frozen=True)
class ThresholdScan:
    x_star: Fraction | None
    paper_threshold: float
    points_tested: int
    failures: tuple


def threshold_scan(g: Graph, grid_step=Fraction(1, 100), upper=None) -> ThresholdScan:
    """Least grid point x* in (1, upper] beyond which the ratio inequality holds
    at every grid point.  ``upper`` defaults to 10 Delta^(3/2) (at least 2)."""
    step = Fraction(grid_step)
    p = chromatic_polynomial(g)
    paper = MONO_THRESHOLD_CONSTANT * max_degree(g) ** 1.5
    if upper is None:
        upper = max(ceil_hundredths_threshold(max_degree(g)), Fraction(2))
    upper = Fraction(upper)
    grid = []
    x = Fraction(1) + step
    while x <= upper:
        grid.append(x)
        x += step
    x_star = None
    failures = []
    for x in reversed(grid):
        lhs, rhs = ratio_inequality_poly(p, g.n, x)
        if lhs >= rhs:
            if not failures:
                x_star = x
        else:
            failures.append(x)
    return ThresholdScan(x_star, paper, len(grid), tuple(reversed(failures)))


# Case 2 certificates ------------------------------------------------------------

def H(y: float, C: float) -> float:
    """(C y^1.5 + 1)(C y^1.5 - 17y/4) - (17y/4)^3."""
    return (C * y ** 1.5 + 1) * (C * y ** 1.5 - 4.25 * y) - (4.25 * y) ** 3


def H_prime(y: float, C: float) -> float:
    return (3 * (C ** 2 - 4913 / 64) * y ** 2 - 85 / 8 * C * math.sqrt(y) ** 3
            + 1.5 * C * math.sqrt(y) - 4.25)


def H3_closed_form(C: float) -> float:
    return 27 * C ** 2 - 141 * math.sqrt(3) / 4 * C - 133467 / 64


def hprime_condition(C: float, y: float = 3.0) -> float:
    """3 (C^2 - 4913/64) sqrt(y) - 85 C / 8; positive means H is increasing from y on."""
    return 3 * (C ** 2 - 4913 / 64) * math.sqrt(y) - 85 / 8 * C


@dataclass(frozen=True)
class Case2Certificate:
    C: float
    H3_value: float
    hprime_value: float
    Hprime_condition_ok: bool


def case2_certificates(C: float) -> Case2Certificate:
    if C <= 0:
        raise ValueError("C must be positive")
    hp = hprime_condition(C)
    return Case2Certificate(C, H3_closed_form(C), hp, hp > 0)


# catalog helpers -------------------------------------------------------------------

def shameful_ratio(p: IntPolynomial, n: int) -> Fraction | None:
    """P(n)/P(n-1), or None when P(n-1) = 0."""
    below = p(n - 1)
    return None if below == 0 else Fraction(p(n), below)


def shameful_holds(p: IntPolynomial, n: int) -> bool:
    """(n-1)^n P(n) >= n^n P(n-1)."""
    return (n - 1) ** n * p(n) >= n ** n * p(n - 1)


def mean_color_number(p: IntPolynomial, n: int) -> Fraction:
    """n (1 - P(n-1)/P(n)): the exact mean number of colors in proper n-colorings."""
    return n * (1 - Fraction(p(n - 1), p(n)))
