"""Higher derivatives of L_G(x) = ln[(-1)^n P(G, x)] on the negative axis.

L_G^{(k)} = N_k / P^k with integer polynomials N_1 = P' and
N_{k+1} = N_k' P - k N_k P'.  Signs are therefore decided exactly.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chromatic import chromatic_polynomial, whitney_coefficients
from .graph import Graph, is_claw_free, max_degree
from .poly import IntPolynomial
from .roots import RHO_BOUNDS, RootSet

THM15_CONSTANT = Fraction(301, 100)
CSC_SLOPE = 0.708
DEFAULT_SEED = 20240601


def default_seed() -> int:
    env = os.environ.get("CHROMABOUNDS_SEED")
    return int(env) if env else DEFAULT_SEED


@dataclass(frozen=True)
class LogDerivNumerator:
    k: int
    numerator: IntPolynomial


@lru_cache(maxsize=1 << 14)
def _numerators(coeffs: tuple, k: int) -> tuple:
    p = IntPolynomial(coeffs)
    dp = p.derivative()
    out = [dp]
    for j in range(1, k):
        nj = out[-1]
        out.append(nj.derivative() * p - j * nj * dp)
    return tuple(out)


def log_deriv_numerator(p: IntPolynomial, k: int) -> LogDerivNumerator:
    if k < 1:
        raise ValueError("derivative order must be >= 1")
    return LogDerivNumerator(k, _numerators(p.coeffs, k)[k - 1])


def log_deriv_poly(p: IntPolynomial, k: int, x) -> Fraction:
    x = Fraction(x)
    px = p(x)
    if px == 0:
        raise ZeroDivisionError(f"x = {x} is a chromatic root: L^({k}) has a pole")
    return Fraction(log_deriv_numerator(p, k).numerator(x)) / px ** k


def log_deriv_sign_poly(p: IntPolynomial, k: int, x) -> int:
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    px = p.eval_homogeneous(a, b)
    if px == 0:
        raise ZeroDivisionError(f"x = {x} is a chromatic root: L^({k}) has a pole")
    nk = log_deriv_numerator(p, k).numerator
    nx = nk.eval_homogeneous(a, b)  # positive multiple of N_k(x)
    s = (nx > 0) - (nx < 0)
    if k % 2 and px < 0:
        s = -s
    return s


def log_deriv_exact(g: Graph, k: int, x) -> Fraction:
    """Exact L_G^{(k)}(x) at a rational x."""
    return log_deriv_poly(chromatic_polynomial(g), k, x)


def log_deriv_from_roots(rootset: RootSet, k: int, x: float) -> float:
    """(k-1)! * sum_j Re((-1)^(k-1) / (x - alpha_j)^k), in floating point."""
    if k < 1:
        raise ValueError("derivative order must be >= 1")
    total = 0.0
    for a in rootset.roots:
        d = x - a
        if abs(d) < 1e-8:
            raise ZeroDivisionError(f"x = {x} is within 1e-8 of the root {a}")
        total += ((-1) ** (k - 1) / d ** k).real
    return math.factorial(k - 1) * total


def root_sum_terms(rootset: RootSet, k: int, x: float) -> list[float]:
    return [((-1) ** (k - 1) / (x - a) ** k).real for a in rootset.roots]


def sector_realpart(x: float, z: complex, k: int, variant: str = "negative_x") -> float:
    """Re((-1)^(k-1)/(x-z)^k) for ``negative_x``; Re(-sgn(x)^k/(x-z)^k) for ``signed``."""
    if x == 0:
        raise ValueError("x must be nonzero")
    if variant == "negative_x":
        if x >= 0:
            raise ValueError("variant negative_x needs x < 0")
        num = (-1) ** (k - 1)
    elif variant == "signed":
        num = -(1 if x > 0 else -1) ** k
    else:
        raise ValueError(f"unknown variant {variant!r}")
    d = x - z
    if d == 0:
        raise ZeroDivisionError("x coincides with z")
    return (num / d ** k).real


def csc_threshold(k: int, rho_bound: float) -> float:
    """-rho_bound * csc(pi/2k)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return -rho_bound / math.sin(math.pi / (2 * k))


def csc_estimate(k: int) -> float:
    """0.708 k, an upper bound for csc(pi/2k) when k >= 2."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return CSC_SLOPE * k


def tangent_point(x: float, R: float, k: int) -> complex:
    """The z with |z| = R where x - z touches the edge of the sector |arg + pi| <= pi/2k.

    Requires |x| = R csc(pi/2k) for the tangent ray to sit exactly on that edge.
    """
    phi = math.asin(R / abs(x))
    dist = math.sqrt(x * x - R * R)
    base = math.pi if x < 0 else 0.0
    return x - dist * complex(math.cos(base + phi), math.sin(base + phi))


# theorem checks -----------------------------------------------------------------

def _ceil_hundredths(value: float) -> Fraction:
    # nudged upward so float rounding never lands below the true threshold
    return Fraction(math.ceil(value * 100 * (1 + 1e-12)), 100) if value > 0 else Fraction(0)


def thm33_threshold(delta: int, k: int, claw_free: bool = False) -> float:
    mult = RHO_BOUNDS.claw_free if claw_free else RHO_BOUNDS.general
    return mult * delta / math.sin(math.pi / (2 * k))


def thm15_threshold(delta: int, k: int) -> Fraction:
    return THM15_CONSTANT * delta * k


def threshold_samples(T, count: int = 10) -> list[Fraction]:
    """x = -ceil(100 T)/100 - j for j = 0..count-1; T = 0 starts at x = -1."""
    if isinstance(T, Fraction):
        start = Fraction(math.ceil(T * 100), 100)
    else:
        start = _ceil_hundredths(T)
    if start == 0:
        start = Fraction(1)
    return [-(start + j) for j in range(count)]


@dataclass(frozen=True)
class ThresholdVerdict:
    k: int
    threshold: float
    samples: tuple
    signs: tuple
    verdict: bool


def _verify_at(p: IntPolynomial, k: int, T, count: int) -> ThresholdVerdict:
    if k < 2:
        raise ValueError("k must be >= 2")
    xs = threshold_samples(T, count)
    signs = tuple(log_deriv_sign_poly(p, k, x) for x in xs)
    return ThresholdVerdict(k, float(T), tuple(xs), signs, all(s < 0 for s in signs))


def verify_thm33(g: Graph, k: int, use_claw_free: bool = False, count: int = 10) -> ThresholdVerdict:
    """L^{(k)} < 0 below -c Delta csc(pi/2k), c = 4.25 (3.81 for claw-free when asked)."""
    T = thm33_threshold(max_degree(g), k, use_claw_free and is_claw_free(g))
    return _verify_at(chromatic_polynomial(g), k, T, count)


def verify_thm15(g: Graph, k: int, count: int = 10) -> ThresholdVerdict:
    """L^{(k)} < 0 below -3.01 Delta k."""
    return _verify_at(chromatic_polynomial(g), k, thm15_threshold(max_degree(g), k), count)


@dataclass(frozen=True)
class WindowScan:
    k: int
    window: Fraction
    points: tuple
    signs: tuple  # None marks a pole

    @property
    def negatives(self) -> int:
        return sum(1 for s in self.signs if s == -1)

    @property
    def nonnegatives(self) -> int:
        return sum(1 for s in self.signs if s is not None and s >= 0)

    @property
    def poles(self) -> int:
        return sum(1 for s in self.signs if s is None)


def window_grid(delta: int, k: int, count: int = 50) -> list[Fraction]:
    """``count`` equally spaced points strictly inside (-3.01 max(Delta,1) k, 0)."""
    W = THM15_CONSTANT * max(delta, 1) * k
    return [-W * j / (count + 1) for j in range(1, count + 1)]


def conjecture_window_scan(g: Graph, k: int, grid=None) -> WindowScan:
    """Exact signs of L^{(k)} on the window the theorems do not cover.

    Reported only: nothing here asserts the sign.
    """
    p = chromatic_polynomial(g)
    if grid is None:
        grid = window_grid(max_degree(g), k)
    signs = []
    for x in grid:
        x = Fraction(x)
        if x >= 0:
            raise ValueError("window scan points must be negative")
        try:
            signs.append(log_deriv_sign_poly(p, k, x))
        except ZeroDivisionError:
            signs.append(None)
    return WindowScan(k, THM15_CONSTANT * max(max_degree(g), 1) * k, tuple(grid), tuple(signs))


# epsilon ---------------------------------------------------------------------------

def epsilon_poly(p: IntPolynomial, x) -> Fraction:
    x = Fraction(x)
    px = p(x)
    if px == 0:
        raise ZeroDivisionError(f"P vanishes at x = {x}")
    return Fraction(p.derivative()(x)) / px


def epsilon_via_roots(g: Graph, x=-1) -> Fraction:
    """epsilon(G, x) = P'(G, x) / P(G, x)."""
    return epsilon_poly(chromatic_polynomial(g), x)


def epsilon_from_whitney(a: list[int], n: int) -> Fraction:
    return Fraction(sum((n - i) * a[i] for i in range(n + 1)), sum(a))


def epsilon_mean_subgraph(g: Graph) -> Fraction:
    """Mean size of a broken-cycle-free spanning subgraph."""
    return epsilon_from_whitney(whitney_coefficients(g), g.n)


def epsilon_identity(g: Graph) -> bool:
    return epsilon_mean_subgraph(g) == g.n + epsilon_via_roots(g, -1)


# sector lemma sampling --------------------------------------------------------------

@dataclass(frozen=True)
class SectorSample:
    k: int
    R: float
    x: float
    z: complex
    value: float
    precondition_ok: bool


def sector_samples(count: int, seed: int | None = None, variant: str = "negative_x"):
    """Random points satisfying the sector lemma hypotheses.

    k in 2..8, R in (0, 5], |x| = R csc(pi/2k)(1 + u) with u ~ Exp(1), z uniform
    in the disk of radius R.  For the ``signed`` variant x takes either sign.
    """
    rng = random.Random(default_seed() if seed is None else seed)
    for _ in range(count):
        k = rng.randint(2, 8)
        R = 5.0 * (1.0 - rng.random())
        mag = R / math.sin(math.pi / (2 * k)) * (1 + rng.expovariate(1.0))
        sign = -1.0 if variant == "negative_x" or rng.random() < 0.5 else 1.0
        x = sign * mag
        r = R * math.sqrt(rng.random())
        t = rng.uniform(0, 2 * math.pi)
        z = complex(r * math.cos(t), r * math.sin(t))
        ok = abs(x) >= R / math.sin(math.pi / (2 * k)) and abs(z) <= R
        yield SectorSample(k, R, x, z, sector_realpart(x, z, k, variant), ok)
