"""Dense univariate polynomials with exact integer coefficients.

A :class:`Polynomial` stores its coefficients in ascending degree order,
``Polynomial([1, 10, 5])`` being ``1 + 10*x + 5*x^2``.  Trailing zeros are
stripped, so the zero polynomial has an empty coefficient tuple and
``degree`` returns ``None`` for it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Immutable polynomial over the integers."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _normalize(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_histogram(cls, counts: Sequence[int]) -> "Polynomial":
        """Generating polynomial ``sum counts[k] * x^k``."""
        return cls(counts)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative degree")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _normalize((other,))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("Polynomial", self.coeffs)))
        return self._hash

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial((other,))
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            q = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] += c
        return Polynomial(res)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        try:
            q = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "Polynomial":
        try:
            q = self._coerce(other)
        except TypeError:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "Polynomial":
        try:
            q = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if not a or not b:
            return Polynomial()
        res = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    res[i + j] += ca * cb
        return Polynomial(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact division; raises ``ArithmeticError`` on a nonzero remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < db:
            if rem:
                raise ArithmeticError("inexact polynomial division")
            return Polynomial()
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k - db] = q
            for t, dc in enumerate(divisor.coeffs):
                rem[k - db + t] -= q * dc
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return Polynomial(quot)

    # -- evaluation and transforms -------------------------------------

    def __call__(self, t: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def substitute_affine(self, a: int, b: int) -> "Polynomial":
        """Return ``p(a*x + b)``."""
        lin = Polynomial((b, a))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def reverse(self, d: int) -> "Polynomial":
        """Return ``x^d * p(1/x)``; requires ``degree <= d``."""
        if self.coeffs and len(self.coeffs) - 1 > d:
            raise ValueError(
                f"degree exceeds reversal bound: degree {self.degree} > {d}"
            )
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return Polynomial(reversed(padded))

    def truncate(self, k: int) -> "Polynomial":
        """Drop every term of degree above ``k``."""
        return Polynomial(self.coeffs[: max(k + 1, 0)])

    def shifted_coeffs(self) -> tuple[int, ...]:
        """Coefficients ``q_k`` with ``p(x) = sum q_k (x-1)^k``."""
        return self.substitute_affine(1, 1).coeffs

    # -- text forms ----------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        """Canonical text form, e.g. ``1 + 11*x + 2*x^2``."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = f"{mag}*{var}"
            else:
                body = f"{mag}*{var}^{k}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_latex(self, var: str = "x", shifted: bool = False) -> str:
        """LaTeX form; ``shifted`` expands in powers of ``(var-1)``."""
        coeffs = self.shifted_coeffs() if shifted else self.coeffs
        base = f"({var}-1)" if shifted else var
        parts = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = base if k == 1 else f"{base}^{{{k}}}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append((c < 0, body))
        if not parts:
            return "0"
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array of integers")
        return cls(data)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


X = Polynomial.x()
ONE = Polynomial.constant(1)
ZERO = Polynomial()


def arith(p: Polynomial, q: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def evaluate(p: Polynomial, t: Scalar) -> Scalar:
    """Horner evaluation at an exact rational (``int`` or ``Fraction``)."""
    if isinstance(t, float):
        raise TypeError("floating-point evaluation is not supported")
    value = p(Fraction(t))
    return value.numerator if value.denominator == 1 else value


def substitute_affine(p: Polynomial, a: int, b: int) -> Polynomial:
    return p.substitute_affine(a, b)


def reverse(p: Polynomial, d: int) -> Polynomial:
    return p.reverse(d)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("Catalan index must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def one_minus_x_power(k: int) -> Polynomial:
    """``(1 - x)^k`` by the binomial theorem."""
    return Polynomial((-1) ** s * comb(k, s) for s in range(k + 1))


def x_minus_one_power(k: int) -> Polynomial:
    """``(x - 1)^k`` by the binomial theorem."""
    return Polynomial((-1) ** (k - s) * comb(k, s) for s in range(k + 1))
