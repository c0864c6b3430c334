"""Exact univariate polynomials, sign patterns and multiplier sequences.

Scalars are :class:`fractions.Fraction` throughout; they are always kept in
lowest terms with a positive denominator, so equality is structural.
Coefficients are stored densely, index 0 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import InvalidIndex, LengthMismatch, NonPositiveEntry, SequenceTooShort

ExactScalar = Fraction


def as_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction, refusing floats (they are not exact input)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial ``a_0 + a_1 z + ... + a_d z^d``.

    Trailing zeros are stripped on construction; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, n: int, c=1) -> Polynomial:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __call__(self, z) -> Fraction:
        return evaluate(self, z)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self), len(other))
        return Polynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> Polynomial:
        return Polynomial(n * c for n, c in enumerate(self.coeffs) if n)

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other)
        if dq < 0:
            return Polynomial(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem[: other.degree])

    def monic(self) -> Polynomial:
        return self * (1 / self.leading) if self.coeffs else self

    def dilate(self, c) -> Polynomial:
        """Return ``f(c z)``."""
        c = as_rational(c)
        return Polynomial(a * c**n for n, a in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and n) else str(mag)
            if n == 1:
                body += "z"
            elif n > 1:
                body += f"z^{n}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class SignPattern:
    signs: tuple[int, ...]

    def __init__(self, signs: Iterable[int]):
        s = tuple(int(x) for x in signs)
        if any(x not in (1, -1) for x in s):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "signs", s)

    def __len__(self) -> int:
        return len(self.signs)


@dataclass(frozen=True)
class GammaSequence:
    """Finite prefix ``gamma_0 .. gamma_N`` of a strictly positive sequence."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        vs = tuple(as_rational(v) for v in values)
        for n, v in enumerate(vs):
            if v <= 0:
                raise NonPositiveEntry(f"gamma_{n} = {v} is not positive")
        object.__setattr__(self, "values", vs)

    @classmethod
    def ones(cls, length: int) -> GammaSequence:
        return cls([1] * length)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def __repr__(self) -> str:
        return f"GammaSequence({[str(v) for v in self.values]})"


def evaluate(f: Polynomial, z) -> Fraction:
    """Horner evaluation; ``evaluate(f, 0) == a_0`` (0^0 = 1)."""
    z = as_rational(z)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * z + c
    return acc


def abs_coefficients(f: Polynomial) -> Polynomial:
    return Polynomial(abs(c) for c in f.coeffs)


def _require_prefix(gamma: GammaSequence, d: int) -> None:
    if len(gamma) < d + 1:
        raise SequenceTooShort(f"need gamma_0..gamma_{d}, got {len(gamma)} values")


def apply_diagonal(gamma: GammaSequence, f: Polynomial) -> Polynomial:
    """The diagonal operator ``z^n -> gamma_n z^n``."""
    _require_prefix(gamma, f.degree)
    return Polynomial(g * a for g, a in zip(gamma.values, f.coeffs))


def apply_signs(f: Polynomial, s: SignPattern | Sequence[int]) -> Polynomial:
    if not isinstance(s, SignPattern):
        s = SignPattern(s)
    if len(s) != len(f.coeffs):
        raise LengthMismatch(f"{len(s)} signs for {len(f.coeffs)} coefficients")
    return Polynomial(a * e for a, e in zip(f.coeffs, s.signs))


def geometric_poly(d: int) -> Polynomial:
    """``1 + z + ... + z^d``."""
    if d < 0:
        raise InvalidIndex("degree must be nonnegative")
    return Polynomial([1] * (d + 1))


def trinomial(m: int) -> Polynomial:
    """``z^(m-1) + 2 z^m + z^(m+1)``."""
    if m < 1:
        raise InvalidIndex(f"trinomial needs m >= 1, got {m}")
    return Polynomial([0] * (m - 1) + [1, 2, 1])


def gamma_symbol(gamma: GammaSequence, d: int) -> Polynomial:
    """``gamma_0 + gamma_1 z + ... + gamma_d z^d``."""
    _require_prefix(gamma, d)
    return Polynomial(gamma.values[: d + 1])
