"""Exact elements of Q(zeta_e), stored as rational coefficient vectors.

An element is sum_i c_i x^i with x a primitive e-th root of unity and
0 <= i < phi(e); vectors are always reduced modulo the cyclotomic
polynomial, so equality is coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, lowest degree first."""
    if e < 1:
        raise ValueError("e must be positive")
    # x^e - 1 divided by Phi_d for every proper divisor d of e
    num = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert not any(num), "inexact polynomial division"
    return out


def _reduce(e: int, coeffs) -> tuple:
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if lead:
            # Phi_e is monic
            for j in range(deg):
                c[i - deg + j] -= lead * phi[j]
            c[i] = 0
    c = c[:deg] + [0] * (deg - len(c))
    return tuple(_norm(x) for x in c)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


class Cyclotomic:
    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs=()):
        self.e = e
        self.coeffs = _reduce(e, coeffs)

    @classmethod
    def root(cls, e: int, k: int = 1) -> "Cyclotomic":
        """x^k."""
        vec = [0] * e
        vec[k % e] = 1
        return cls(e, vec)

    @classmethod
    def rational(cls, e: int, value) -> "Cyclotomic":
        return cls(e, [value])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.e != self.e:
                raise ValueError(f"mixing levels {self.e} and {other.e}")
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic(self.e, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.e, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prod = [0] * (len(self.coeffs) + len(o.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.e, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return Cyclotomic(self.e, [Fraction(a) / other for a in self.coeffs])
        return NotImplemented

    def conjugate(self) -> "Cyclotomic":
        vec = [0] * self.e
        for i, a in enumerate(self.coeffs):
            vec[(-i) % self.e] += a
        return Cyclotomic(self.e, vec)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.e == other.e and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.as_rational() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash((self.e, self.coeffs))

    def __complex__(self):
        import cmath
        w = cmath.exp(2j * cmath.pi / self.e)
        return sum(complex(float(a)) * w ** i for i, a in enumerate(self.coeffs))

    def root_exponent(self) -> int | None:
        """k with self == E(e)^k, if self is a root of unity."""
        for k in range(self.e):
            if self == Cyclotomic.root(self.e, k):
                return k
        return None

    def __repr__(self):
        if not self.is_rational():
            for sign in (1, -1):
                k = (self * sign).root_exponent()
                if k is not None:
                    mono = f"E({self.e})" + (f"^{k}" if k > 1 else "")
                    return mono if sign == 1 else "-" + mono
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
                continue
            mono = f"E({self.e})" + (f"^{i}" if i > 1 else "")
            if a == 1:
                terms.append(mono)
            elif a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")
