"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as integer numerators plus a positive common
denominator, reduced modulo the N-th cyclotomic polynomial.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

DEFAULT_MAX_ORDER = 720
ORDER_CAP_ENV = "MCKAYCONE_MAX_ORDER"


class OrderOverflowError(ArithmeticError):
    pass


class NotRationalError(ValueError):
    pass


def max_order() -> int:
    return int(os.environ.get(ORDER_CAP_ENV, DEFAULT_MAX_ORDER))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficients low degree first)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k - dd] = q
        for i, d in enumerate(den):
            num[k - dd + i] -= q * d
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _reduce(coeffs: list[int], n: int) -> list[int]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, deg - 1, -1):
        x = c[k]
        if x:
            base = k - deg
            for i in range(deg + 1):
                c[base + i] -= x * phi[i]
    c = c[:deg] + [0] * max(0, deg - len(c))
    return c


class CyclotomicNumber:
    """An element of Q(zeta_N) in normal form."""

    __slots__ = ("order", "nums", "den")

    def __init__(self, order: int, nums, den: int = 1, _reduced: bool = False, _known: bool = False):
        # _known: order already validated by an operand of the same order
        if order < 1:
            raise ValueError("order must be positive")
        if not _known and order > max_order():
            raise OrderOverflowError(f"cyclotomic order {order} exceeds cap {max_order()}")
        nums = list(nums)
        if not _reduced:
            nums = _reduce(nums, order)
        if den < 0:
            den, nums = -den, [-x for x in nums]
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = gcd(den, *nums)
        if g > 1:
            den //= g
            nums = [x // g for x in nums]
        self.order = order
        self.nums = tuple(nums)
        self.den = den

    # constructors

    @classmethod
    def rational(cls, q, order: int = 1) -> "CyclotomicNumber":
        q = Fraction(q)
        deg = len(cyclotomic_polynomial(order)) - 1
        return cls(order, [q.numerator] + [0] * (deg - 1), q.denominator, _reduced=True)

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> "CyclotomicNumber":
        """``sum coeffs[k] * zeta^k`` for rational coefficients (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        return cls(order, [int(c * den) for c in fr], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    # coercion

    def lift(self, order: int) -> "CyclotomicNumber":
        """Re-express in Q(zeta_order); ``order`` must be a multiple of ours."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        raw = [0] * (step * (len(self.nums) - 1) + 1) if self.nums else [0]
        for k, x in enumerate(self.nums):
            raw[k * step] = x
        return CyclotomicNumber(order, raw, self.den)

    def _common(self, other):
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(other, self.order)
        if other.order == self.order:
            return self, other
        n = _lcm(self.order, other.order)
        if n > max_order():
            raise OrderOverflowError(f"cyclotomic order {n} exceeds cap {max_order()}")
        return self.lift(n), other.lift(n)

    # ring operations

    def __add__(self, other):
        a, b = self._common(other)
        den = _lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        return CyclotomicNumber(a.order, [x * fa + y * fb for x, y in zip(a.nums, b.nums)], den,
                                _reduced=True, _known=True)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-x for x in self.nums], self.den, _reduced=True, _known=True)

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            q = Fraction(other)
            return CyclotomicNumber(self.order, [x * q.numerator for x in self.nums],
                                    self.den * q.denominator, _reduced=True, _known=True)
        a, b = self._common(other)
        raw = [0] * (len(a.nums) + len(b.nums) - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        raw[i + j] += x * y
        return CyclotomicNumber(a.order, raw, a.den * b.den, _known=True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are only supported for roots of unity via conj")
        result = CyclotomicNumber.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "CyclotomicNumber":
        """Complex conjugate: zeta^k -> zeta^(N-k)."""
        n = self.order
        raw = [0] * n
        for k, x in enumerate(self.nums):
            raw[(-k) % n] += x
        return CyclotomicNumber(n, raw, self.den, _known=True)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_rational(self) -> Fraction:
        """Rational value; raises :class:`NotRationalError` otherwise."""
        if not self.is_rational() or self.conj() != self:
            raise NotRationalError(f"{self} is not rational")
        return Fraction(self.nums[0] if self.nums else 0, self.den)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicNumber):
            try:
                other = CyclotomicNumber.rational(other, self.order)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._common(other)
        return a.den == b.den and a.nums == b.nums

    __hash__ = None

    def __repr__(self):
        return f"CyclotomicNumber({format_cyclotomic(self)!r})"

    def __str__(self):
        return format_cyclotomic(self)


def hermitian_sum(weights, xs, ys) -> "CyclotomicNumber":
    """sum_k weights[k] * xs[k] * conj(ys[k]) with a single reduction.

    Exponents are accumulated modulo the common order, which is valid since
    zeta^N = 1; only the final sum is reduced modulo Phi_N.
    """
    xs, ys = list(xs), list(ys)
    n = lcm(*{v.order for v in xs}, *{v.order for v in ys})
    if n > max_order():
        raise OrderOverflowError(f"cyclotomic order {n} exceeds cap {max_order()}")
    den = lcm(*{x.den * y.den for x, y in zip(xs, ys)}) if xs else 1
    acc = [0] * n
    for w, x, y in zip(weights, xs, ys):
        sx, sy = n // x.order, n // y.order
        f = int(w) * (den // (x.den * y.den))
        ty = [(j * sy, b) for j, b in enumerate(y.nums) if b]
        for i, a in enumerate(x.nums):
            if a:
                fa, e = f * a, i * sx
                for jj, b in ty:
                    acc[(e - jj) % n] += fa * b
    return CyclotomicNumber(n, acc, den)


def root_of_unity(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_n ** k in normal form."""
    k %= n
    return CyclotomicNumber(n, [0] * k + [1])


def format_cyclotomic(x: CyclotomicNumber) -> str:
    """Formal sum ``c0 + c1*z(N)^1 + ...``; parses back exactly."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = f"z({x.order})^{k}" if mag == 1 else f"{mag}*z({x.order})^{k}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*)?)?(?:z\((\d+)\)(?:\^(-?\d+))?)?\s*")


def parse_cyclotomic(text: str) -> CyclotomicNumber:
    """Inverse of :func:`format_cyclotomic`; accepts mixed orders and bare ``z(N)``."""
    text = text.strip()
    if not text:
        raise ValueError("empty cyclotomic literal")
    pos = 0
    total = None
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse cyclotomic literal {text!r} at {pos}")
        sign, coef, order, power = m.groups()
        if not first and sign is None:
            raise ValueError(f"missing operator in {text!r}")
        if coef is None and order is None:
            raise ValueError(f"empty term in {text!r}")
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        if order is not None:
            n = int(order)
            term = root_of_unity(n, int(power) if power is not None else 1) * c
        else:
            term = CyclotomicNumber.rational(c)
        total = term if total is None else total + term
        pos = m.end()
        first = False
    return total
