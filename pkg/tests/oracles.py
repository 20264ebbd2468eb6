"""Brute-force reference computations, kept independent of the package code paths."""

from math import gcd

import numpy as np


def vp(p, n):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def units(p, k):
    mod = p ** k
    return [x for x in range(1, mod) if x % p]


def coset_index_qp(p, n):
    """|Q_p^x / (Q_p^x)^n| = n * [(Z/p^K)^x : n-th powers] for K past the stable range."""
    k = 2 * vp(p, n) + 3
    mod = p ** k
    us = units(p, k)
    powers = {pow(x, n, mod) for x in us}
    return n * len(us) // len(powers)


def roots_of_unity_qp(p, n):
    """Residues mod p^K of solutions of x^n = 1 mod p^(2K): the image of mu_n(Q_p)."""
    k = vp(p, n) + 2
    big = p ** (2 * k)
    small = p ** k
    return len({x % small for x in range(1, big) if x % p and pow(x, n, big) == 1})


def orbit_classes(mul):
    """Conjugacy classes by direct orbit computation on a nested-list table."""
    n = len(mul)
    inv = [next(y for y in range(n) if mul[x][y] == 0) for x in range(n)]
    seen, classes = set(), []
    for g in range(n):
        if g in seen:
            continue
        orbit = {mul[mul[x][g]][inv[x]] for x in range(n)}
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


def gf2_rank(rows):
    m = np.array(rows, dtype=np.uint8) % 2
    r = 0
    for c in range(m.shape[1]):
        piv = next((i for i in range(r, m.shape[0]) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        for i in range(m.shape[0]):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
    return r


def h2_dim_gf2(mul):
    """dim Z^2 - dim B^2 for unnormalized cochains with values in GF(2)."""
    k = len(mul)
    pairs = [(a, b) for a in range(k) for b in range(k)]
    pidx = {p: i for i, p in enumerate(pairs)}
    d2 = []
    for a in range(k):
        for b in range(k):
            for c in range(k):
                row = [0] * len(pairs)
                for pr, s in (((b, c), 1), ((mul[a][b], c), 1), ((a, mul[b][c]), 1), ((a, b), 1)):
                    row[pidx[pr]] ^= s
                d2.append(row)
    d1 = []
    for (a, b) in pairs:
        row = [0] * k
        for x in (a, b, mul[a][b]):
            row[x] ^= 1
        d1.append(row)
    dim_z2 = len(pairs) - gf2_rank(d2)
    dim_b2 = gf2_rank(np.array(d1).T.tolist())
    return dim_z2 - dim_b2


def h2_order_abelian(factors, n):
    """|H^2(prod Z/a_i, Z/n)| = prod gcd(a_i, n) * prod_{i<j} gcd(a_i, a_j, n)."""
    out = 1
    for i, a in enumerate(factors):
        out *= gcd(a, n)
        for b in factors[i + 1:]:
            out *= gcd(gcd(a, b), n)
    return out
