"""Integer matrix diagonalization (Smith-style) with tracked transforms.

``diagonalize`` returns D, U, V with U @ M @ V == D, D diagonal with
nonnegative entries and U, V unimodular. The diagonal entries are not
forced into a divisibility chain; :func:`invariant_factors` does that
when it matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .padic import factorize

_SAFE = 1 << 28


@dataclass
class Diagonalization:
    diag: list[int]        # nonzero diagonal entries, in pivot order
    u: np.ndarray | None   # row transform (None when not tracked)
    v: np.ndarray | None   # column transform (None when not tracked)
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diag)


def diagonalize(m, track_rows: bool = True, track_cols: bool = True) -> Diagonalization:
    a = np.array(m, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = a.shape
    u = np.eye(rows, dtype=np.int64) if track_rows else None
    v = np.eye(cols, dtype=np.int64) if track_cols else None
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        sub = a[t:, t:]
        nz = np.nonzero(sub)
        if nz[0].size == 0:
            break
        vals = np.abs(sub[nz])
        k = int(np.argmin(vals))
        i, j = t + int(nz[0][k]), t + int(nz[1][k])
        a, u, v = _swap(a, u, v, t, i, j)
        while True:
            piv = a[t, t]
            a, u, v = _promote(a, u, v)
            q = a[t + 1:, t] // piv
            if q.any():
                a[t + 1:] -= np.outer(q, a[t])
                if u is not None:
                    u[t + 1:] -= np.outer(q, u[t])
            q = a[t, t + 1:] // piv
            if q.any():
                a[:, t + 1:] -= np.outer(a[:, t], q)
                if v is not None:
                    v[:, t + 1:] -= np.outer(v[:, t], q)
            col = a[t + 1:, t]
            row = a[t, t + 1:]
            if not col.any() and not row.any():
                break
            # a remainder is smaller than the pivot: bring it in and repeat
            cand = [(abs(x), t + 1 + idx, t) for idx, x in enumerate(col.tolist()) if x]
            cand += [(abs(x), t, t + 1 + idx) for idx, x in enumerate(row.tolist()) if x]
            _, i, j = min(cand)
            a, u, v = _swap(a, u, v, t, i, j)
        if a[t, t] < 0:
            a[t] = -a[t]
            if u is not None:
                u[t] = -u[t]
        diag.append(int(a[t, t]))
        t += 1
    return Diagonalization(diag, u, v, (rows, cols))


def _swap(a, u, v, t, i, j):
    if i != t:
        a[[t, i]] = a[[i, t]]
        if u is not None:
            u[[t, i]] = u[[i, t]]
    if j != t:
        a[:, [t, j]] = a[:, [j, t]]
        if v is not None:
            v[:, [t, j]] = v[:, [j, t]]
    return a, u, v


def _promote(a, u, v):
    """Switch to Python integers once entries could overflow int64 arithmetic."""
    if a.dtype == object:
        return a, u, v
    big = max(int(np.abs(x).max()) if x is not None and x.size else 0 for x in (a, u, v))
    if big < _SAFE:
        return a, u, v
    conv = lambda x: None if x is None else x.astype(object)
    return conv(a), conv(u), conv(v)


def invariant_factors(diag) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of the group sum Z/d_i (1s dropped)."""
    return primary_to_invariant(primary_parts(diag))


def primary_parts(diag) -> dict[int, list[int]]:
    parts: dict[int, list[int]] = {}
    for d in diag:
        if d in (0, 1):
            continue
        for p, k in factorize(int(d)).items():
            parts.setdefault(p, []).append(k)
    return parts


def primary_to_invariant(parts: dict[int, list[int]]) -> list[int]:
    width = max((len(v) for v in parts.values()), default=0)
    out = [1] * width
    for p, ks in parts.items():
        ks = sorted(ks)
        for idx, k in enumerate(ks):
            out[width - len(ks) + idx] *= p ** k
    return out


def elementary_divisors(m) -> list[int]:
    """Nonzero invariant factors of an integer matrix (1s included)."""
    d = diagonalize(m, track_rows=False, track_cols=False)
    inv = invariant_factors(d.diag)
    return [1] * (d.rank - len(inv)) + inv


def abelian_invariants_from_orders(orders: list[int]) -> list[int]:
    """Invariant factors of a finite abelian group from the multiset of its element orders."""
    n = len(orders)
    parts: dict[int, list[int]] = {}
    for p, k in factorize(n).items() if n > 1 else []:
        # a_j = log_p |A[p^j]|; the number of cyclic factors of order >= p^j is a_j - a_{j-1}
        logs = [0]
        j = 1
        while logs[-1] < k:
            cnt = sum(1 for o in orders if (p ** j) % o == 0)
            step = _log(cnt, p)
            if step == logs[-1]:
                raise ValueError("element orders do not describe an abelian group")
            logs.append(step)
            j += 1
        ge = [logs[i] - logs[i - 1] for i in range(1, len(logs))] + [0]
        ks = []
        for i in range(len(ge) - 1):
            ks += [i + 1] * (ge[i] - ge[i + 1])
        parts[p] = ks
    return primary_to_invariant(parts)


def _log(x: int, p: int) -> int:
    k = 0
    while x > 1:
        if x % p:
            raise ValueError("not a power")
        x //= p
        k += 1
    return k


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
