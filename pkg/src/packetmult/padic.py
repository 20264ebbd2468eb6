"""Cardinalities attached to a finite extension F of Q_p.

Only the invariants (p, e, f, a) are used: ramification index, residue
degree and the exponent of the largest p-power root-of-unity group in F.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def p_valuation(p: int, n: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PAdicFieldData:
    p: int
    e: int = 1
    f: int = 1
    a: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.e < 1 or self.f < 1:
            raise ValueError("ramification index and residue degree must be >= 1")
        if self.a < 0:
            raise ValueError("wild root exponent must be >= 0")

    @property
    def q(self) -> int:
        """Cardinality of the residue field."""
        return self.p ** self.f

    @classmethod
    def parse(cls, text: str) -> "PAdicFieldData":
        """Parse ``"p=5,e=1,f=1,a=0"``; omitted keys take their defaults."""
        fields: dict[str, int] = {}
        for pos, part in _iter_parts(text):
            m = re.fullmatch(r"\s*([pefa])\s*=\s*(-?\d+)\s*", part)
            if m is None:
                raise ValueError(f"bad field descriptor at position {pos}: {part!r}")
            if m.group(1) in fields:
                raise ValueError(f"duplicate key {m.group(1)!r} at position {pos}")
            fields[m.group(1)] = int(m.group(2))
        if "p" not in fields:
            raise ValueError("field descriptor needs p")
        return cls(**fields)

    @classmethod
    def qp(cls, p: int) -> "PAdicFieldData":
        """The field Q_p itself."""
        return cls(p=p, e=1, f=1, a=1 if p == 2 else 0)

    def to_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "f": self.f, "a": self.a}

    def __str__(self) -> str:
        return f"p={self.p},e={self.e},f={self.f},a={self.a}"


def _iter_parts(text: str):
    pos = 0
    for part in text.split(","):
        yield pos, part
        pos += len(part) + 1


def field_valuation(field: PAdicFieldData, n: int) -> int:
    """v_F(n) = e * v_p(n), so |n|_F = q^(-v_F(n))."""
    return field.e * p_valuation(field.p, n)


def mu_card(field: PAdicFieldData, n: int) -> int:
    """Number of n-th roots of unity in F.

    Uses mu(F) = mu_{q-1} x mu_{p^a}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return gcd(n, field.q - 1) * field.p ** min(p_valuation(field.p, n), field.a)


def is_wild(field: PAdicFieldData, n: int) -> bool:
    """True for p | n over a ramified field, a regime with no worked example to compare against."""
    return n % field.p == 0 and field.e > 1


def coset_card(field: PAdicFieldData, n: int) -> int:
    """|F^x / (F^x)^n| = n * |mu_n(F)| * |n|_F^(-1)."""
    return n * mu_card(field, n) * field.q ** field_valuation(field, n)


def square_divisor_bound(c: int) -> int:
    """Largest A with A^2 dividing c."""
    if c < 1:
        raise ValueError("c must be positive")
    out = 1
    for prime, k in factorize(c).items():
        out *= prime ** (k // 2)
    return out


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
