"""Chromatic roots: numeric root sets with residual certificates, exact power
sums, closed-form cycle roots and the maximum-degree bounds on rho(G)."""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, is_claw_free, max_degree
from .poly import IntPolynomial

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 200


class RootFindingError(RuntimeError):
    def __init__(self, message: str, worst_residual: float):
        super().__init__(f"{message} (worst residual {worst_residual:.3e})")
        self.worst_residual = worst_residual


@dataclass(frozen=True)
class RhoBoundTable:
    """Multipliers c with rho(G) <= c * max degree."""

    general: float = 4.25
    claw_free: float = 3.81

    def __post_init__(self):
        if not self.claw_free < self.general:
            raise ValueError("claw-free multiplier must be below the general one")


RHO_BOUNDS = RhoBoundTable()


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residuals: tuple
    rho: float
    tol: float = DEFAULT_TOL

    def power_sum(self, k: int) -> complex:
        return sum(z ** k for z in self.roots)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def to_dict(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": list(self.residuals),
            "rho": self.rho,
            "tol": self.tol,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> RootSet:
        return cls(tuple(complex(re, im) for re, im in d["roots"]),
                   tuple(d["residuals"]), d["rho"], d.get("tol", DEFAULT_TOL))


def cauchy_bound(p: IntPolynomial) -> float:
    lead = abs(p.lead)
    return 1 + max((abs(c) for c in p.coeffs[:-1]), default=0) / lead


# exact helpers over Q ------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _trim(a)
    return _trim(q), a


def _qmonic(a):
    return [c / a[-1] for c in a]


def _qgcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a)


def _qderiv(a):
    return [i * c for i, c in enumerate(a)][1:]


def squarefree_factors(coeffs) -> list[tuple[list, int]]:
    """Yun's square-free decomposition over Q: [(factor, multiplicity), ...]."""
    f = [Fraction(c) for c in coeffs]
    if len(f) <= 1:
        return []
    fp = _qderiv(f)
    a = _qgcd(f, fp)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(fp, a)[0]
    d = _trim([x - y for x, y in _zip_pad(c, _qderiv(b))])
    out = []
    i = 1
    while len(b) > 1:
        a = _qgcd(b, d) if d else _qmonic(b)
        if len(a) > 1:
            out.append((a, i))
        b = _qdivmod(b, a)[0]
        c = _qdivmod(d, a)[0] if d else []
        d = _trim([x - y for x, y in _zip_pad(c, _qderiv(b))])
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


# numeric iteration -------------------------------------------------------------------

def _horner_with_derivative(coeffs, z):
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs: list[float], max_sweeps: int) -> list[complex]:
    n = len(coeffs) - 1
    if n == 1:
        return [complex(-coeffs[0] / coeffs[1])]
    lead = coeffs[-1]
    radius = 1 + max(abs(c / lead) for c in coeffs[:-1])
    # start inside the Cauchy disk, off the real axis to break symmetry
    r0 = max(abs(coeffs[0] / lead) ** (1.0 / n), 0.5)
    r0 = min(r0, radius)
    z = [r0 * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    for _ in range(max_sweeps):
        biggest = 0.0
        for k in range(n):
            p, dp = _horner_with_derivative(coeffs, z[k])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else p
            s = sum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[k] != z[j])
            w = ratio / (1 - ratio * s)
            z[k] -= w
            biggest = max(biggest, abs(w) / max(1.0, abs(z[k])))
        if biggest < 1e-15:
            break
    # Newton polishing on the (square-free) factor
    for k in range(n):
        for _ in range(3):
            p, dp = _horner_with_derivative(coeffs, z[k])
            if dp == 0:
                break
            z[k] -= p / dp
    return z


def relative_residual(coeffs, z: complex) -> float:
    """|P(z)| divided by sum |c_i| |z|^i (0 when P(z) vanishes)."""
    p, _ = _horner_with_derivative(coeffs, z)
    if p == 0:
        return 0.0
    scale = 0.0
    az = abs(z)
    for c in reversed(coeffs):
        scale = scale * az + abs(c)
    return abs(p) / scale


def _symmetrize(roots: list[complex], tol: float) -> list[complex]:
    out = []
    upper, lower = [], []
    for z in roots:
        if abs(z.imag) <= tol * max(1.0, abs(z)):
            out.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    lower = list(lower)
    for z in upper:
        if not lower:
            out.append(z)
            continue
        j = min(range(len(lower)), key=lambda i: abs(lower[i].conjugate() - z))
        w = lower.pop(j)
        avg = (z + w.conjugate()) / 2
        out.extend([avg, avg.conjugate()])
    out.extend(lower)
    return out


def find_roots(p: IntPolynomial, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> RootSet:
    """All complex roots of p with multiplicity.

    Integer roots in 0..deg are split off exactly by synthetic division; the
    rest is reduced to square-free factors over Q, whose roots are found by
    simultaneous Aberth iteration and polished by Newton steps.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    return _find_roots_cached(p.coeffs, tol, max_sweeps)


@lru_cache(maxsize=1 << 16)
def _find_roots_cached(coeffs: tuple, tol: float, max_sweeps: int) -> RootSet:
    rest = IntPolynomial(coeffs)
    roots: list[complex] = []
    for r in range(0, rest.degree + 1):
        while rest.degree >= 1:
            q, rem = rest.divmod_linear(r)
            if rem != 0:
                break
            rest = q
            roots.append(complex(r))
    numeric: list[complex] = []
    if rest.degree >= 1:
        for factor, mult in squarefree_factors(rest.coeffs):
            fl = [float(c) for c in factor]
            zs = _aberth(fl, max_sweeps)
            numeric.extend(zs * mult)
    numeric = _symmetrize(numeric, tol)
    roots.extend(sorted(numeric, key=lambda z: (z.real, z.imag)))
    residuals = tuple(relative_residual(coeffs, z) for z in roots)
    worst = max(residuals)
    if worst > tol:
        raise RootFindingError(f"root iteration did not reach tolerance {tol:g}", worst)
    rho = max(abs(z) for z in roots)
    return RootSet(tuple(roots), residuals, rho, tol)


def rho_numeric(p: IntPolynomial, tol: float = DEFAULT_TOL) -> float:
    if p.degree < 1:
        return 0.0
    return find_roots(p, tol).rho


# exact power sums ------------------------------------------------------------------

def newton_power_sums(p: IntPolynomial, count: int) -> list[int]:
    """p_1..p_count, the power sums of the roots, from Newton's identities."""
    if p.lead != 1:
        raise ValueError("newton_power_sums needs a monic polynomial")
    n = p.degree
    # p(x) = x^n + e[1] x^(n-1) + ... + e[n]
    e = [p.coeffs[n - j] for j in range(n + 1)]
    sums = [0] * (count + 1)
    for k in range(1, count + 1):
        acc = k * e[k] if k <= n else 0
        for j in range(1, min(k - 1, n) + 1):
            acc += e[j] * sums[k - j]
        sums[k] = -acc
    return sums[1:]


# cycles ------------------------------------------------------------------------------

def cycle_roots_closed_form(n: int) -> list[complex]:
    """Roots of (x-1)^n + (-1)^n (x-1): 1 + e^{i(pi + 2k pi/(n-1))}, k=0..n-2, and 1."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    out = [1 + cmath.exp(1j * (math.pi + 2 * k * math.pi / (n - 1))) for k in range(n - 1)]
    out.append(1 + 0j)
    return out


def cycle_root_moduli(n: int) -> list[float]:
    """Moduli 2|sin(k pi/(n-1))| for k = 0..n-2, followed by 1 for the root at 1."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return [2 * abs(math.sin(k * math.pi / (n - 1))) for k in range(n - 1)] + [1.0]


# degree bounds -------------------------------------------------------------------------

def rho_upper_bound(g: Graph, table: RhoBoundTable = RHO_BOUNDS) -> float:
    delta = max_degree(g)
    if delta == 0:
        return 0.0
    return (table.claw_free if is_claw_free(g) else table.general) * delta
