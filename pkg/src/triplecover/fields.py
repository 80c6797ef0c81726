"""Coefficient domains: exact rationals and prime fields GF(p) with p > 3.

Scalars are plain Python values (``Fraction`` over the rationals, ``int`` in
``[0, p)`` over a prime field); the field object supplies the arithmetic.
The p > 3 restriction exists because the cover-data formulas divide by
2, 3, 18 and 27.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of exact rationals (characteristic 0)."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, value):
        """Coerce an int, Fraction or numeric string into a scalar."""
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero scalar")
        return Fraction(a) / b

    def format(self, a) -> str:
        return str(a)

    def scalar_content(self, values) -> Fraction:
        """A scale whose removal leaves coprime integers (keeps pseudo-
        remainder sequences from exploding)."""
        num_gcd = 0
        den_lcm = 1
        for v in values:
            num_gcd = math.gcd(num_gcd, abs(v.numerator))
            den_lcm = den_lcm * v.denominator // math.gcd(den_lcm,
                                                          v.denominator)
        return Fraction(num_gcd, den_lcm) if num_gcd else Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p > 3; elements are ints reduced mod p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p <= 3:
            raise ValueError("prime field needs p > 3 (formulas divide by 2 and 3)")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def of(self, value):
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            value = Fraction(value)
            return self.of(value)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def format(self, a) -> str:
        return str(a)

    def scalar_content(self, values) -> int:
        """Mod-p coefficients cannot grow; normalize by the first value."""
        for v in values:
            if v:
                return v
        return 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
