"""Dense polynomials with exact integer coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class IntPolynomial:
    """``coeffs[i]`` is the coefficient of x**i; trailing zeros are stripped."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * power + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = IntPolynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        if isinstance(x, float) and x.is_integer():
            x = int(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_homogeneous(self, num: int, den: int) -> int:
        """``den**degree * P(num/den)`` as an exact integer."""
        acc = 0
        dpow = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dpow
            dpow *= den
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod_linear(self, r: int) -> tuple[IntPolynomial, int]:
        """Synthetic division by (x - r): returns (quotient, remainder)."""
        if not self.coeffs:
            return IntPolynomial(), 0
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return IntPolynomial(tuple(reversed(out))), rem

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d: dict) -> IntPolynomial:
        return cls(tuple(int(c) for c in d["coeffs"]))

    @classmethod
    def from_json(cls, s: str) -> IntPolynomial:
        return cls.from_dict(json.loads(s))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "x" if i == 1 else f"x^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(v) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial((v,))
    raise TypeError(f"cannot combine IntPolynomial with {type(v).__name__}")


def poly_eval(p: IntPolynomial, x) -> Fraction:
    """Exact value of p at a rational point."""
    if not isinstance(x, Rational):
        raise TypeError("poly_eval needs an exact rational argument")
    return Fraction(p(Fraction(x)))


def poly_derivative(p: IntPolynomial) -> IntPolynomial:
    return p.derivative()


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_pow(p: IntPolynomial, k: int) -> IntPolynomial:
    return p ** k


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal string exactly."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc
