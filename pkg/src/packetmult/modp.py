"""Dense linear algebra over a prime field F_p on int64 arrays (p < 2**31)."""

from __future__ import annotations

import numpy as np

from .padic import factorize, is_prime


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m -= np.outer(col, m[r]) % p
        m %= p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : a x = 0}."""
    rows, cols = a.shape
    red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-red[r, f]) % p
    return basis


def charpoly(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial, highest degree first, via Hessenberg form."""
    h = np.array(a, dtype=np.int64) % p
    n = h.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(h[m:, m - 1])[0]
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            h[[i, m]] = h[[m, i]]
            h[:, [i, m]] = h[:, [m, i]]
        inv = pow(int(h[m, m - 1]), -1, p)
        u = (h[m + 1:, m - 1] * inv) % p
        if not u.any():
            continue
        # row_i -= u_i row_m ; col_m += sum_i u_i col_i
        h[m + 1:] = (h[m + 1:] - np.outer(u, h[m]) % p) % p
        h[:, m] = (h[:, m] + (h[:, m + 1:] @ u) % p) % p
    # recurrence on leading principal submatrices
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        cur = np.concatenate([polys[m - 1], [0]])
        cur[1:] = (cur[1:] - h[m - 1, m - 1] * polys[m - 1]) % p
        t = 1
        for i in range(m - 1, 0, -1):
            t = (t * int(h[i, i - 1])) % p
            coef = (t * int(h[i - 1, m - 1])) % p
            if coef:
                prev = polys[i - 1]
                cur[len(cur) - len(prev):] = (cur[len(cur) - len(prev):] - coef * prev) % p
        polys.append(cur % p)
    return polys[n]


def roots(poly: np.ndarray, p: int) -> list[int]:
    """All roots in F_p, by evaluation at every point."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in poly:
        acc = (acc * xs + int(c)) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def primitive_root(p: int) -> int:
    ps = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in ps):
            return g
    return 1


def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(order)."""
    p = exponent + 1
    while not (is_prime(p) and (p - 1) ** 2 > 4 * order - 1 and p * p > 4 * order):
        p += exponent
    return p
