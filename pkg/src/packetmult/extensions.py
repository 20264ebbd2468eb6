"""Central extensions 1 -> Z/n -> A -> S -> 1 with trivial action.

H^2(S, Z/n) is computed from normalized cochains: cocycles are the kernel
of the second coboundary mod n, coboundaries the image of the first, both
read off from integer diagonalizations of the coboundary matrices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from . import groups as G
from .groups import FiniteGroup, GroupError
from .linalg import abelian_invariants_from_orders, diagonalize, lcm

MAX_QUOTIENT_ORDER = 16
MAX_MODULUS = 6


def _check_caps(s: FiniteGroup, n: int) -> None:
    if n < 1:
        raise GroupError("modulus must be positive")
    if s.order > MAX_QUOTIENT_ORDER:
        raise GroupError(f"|S| = {s.order} exceeds the cohomology cap {MAX_QUOTIENT_ORDER}")
    if n > MAX_MODULUS:
        raise GroupError(f"n = {n} exceeds the cohomology cap {MAX_MODULUS}")


@dataclass(frozen=True, eq=False)
class Cocycle2:
    s: FiniteGroup
    n: int
    table: np.ndarray           # table[a, b] in Z/n

    @property
    def normalized(self) -> bool:
        return not self.table[0].any() and not self.table[:, 0].any()

    def is_cocycle(self) -> bool:
        """c(a,b) + c(ab,c) == c(b,c) + c(a,bc) for all a, b, c."""
        m, c, n = self.s.mul, self.table, self.n
        for a in range(self.s.order):
            lhs = c[a][:, None] + c[m[a]]           # [b, x] -> c(a,b) + c(ab, x)
            rhs = c + c[a][m]                       # [b, x] -> c(b,x) + c(a, bx)
            if ((lhs - rhs) % n).any():
                return False
        return True

    def extension(self) -> "CentralExtension":
        return twisted_product(self)


@dataclass(frozen=True, eq=False)
class CentralExtension:
    total: FiniteGroup
    central_subgroup: tuple[int, ...]
    projection: tuple[int, ...]
    quotient: FiniteGroup
    generator: int                 # element of Z identified with exp(2 pi i / n)
    cocycle: Cocycle2 | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.central_subgroup)

    def check(self) -> None:
        a = self.total
        a.validate()
        z = set(self.central_subgroup)
        if not a.is_central(z):
            raise GroupError("distinguished subgroup is not central")
        if a.element_orders[self.generator] != len(z) or set(a.generated_subgroup([self.generator])) != z:
            raise GroupError("distinguished subgroup is not cyclic on its generator")
        proj = np.asarray(self.projection)
        s = self.quotient
        if set(proj.tolist()) != set(range(s.order)):
            raise GroupError("projection is not surjective")
        lhs = proj[a.mul]
        rhs = s.mul[proj[:, None], proj[None, :]]
        if not np.array_equal(lhs, rhs):
            raise GroupError("projection is not a homomorphism")
        if set(np.nonzero(proj == 0)[0].tolist()) != z:
            raise GroupError("kernel of projection differs from the central subgroup")

    def to_dict(self) -> dict:
        out = self.total.to_dict()
        out["central_subgroup"] = list(self.central_subgroup)
        out["projection"] = list(self.projection)
        out["generator"] = self.generator
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CentralExtension":
        total = FiniteGroup.from_dict(data)
        return extension_from_subgroup(total, data["central_subgroup"], data.get("generator"))


def twisted_product(c: Cocycle2) -> CentralExtension:
    """Z/n x S with (a, s)(b, t) = (a + b + c(s, t), st); element (a, s) is s*n + a."""
    if not c.normalized:
        raise GroupError("twisted product needs a normalized cocycle")
    s, n = c.s, c.n
    G.check_cap(s.order * n)
    k = s.order
    idx = np.arange(k * n)
    sv, av = idx // n, idx % n
    st = s.mul[np.ix_(sv, sv)]
    table = st * n + (av[:, None] + av[None, :] + c.table[np.ix_(sv, sv)]) % n
    total = FiniteGroup(table, label=f"E({s.label},{n})")
    return CentralExtension(total, tuple(range(n)), tuple(int(x) for x in sv), s,
                            generator=1 % n if n > 1 else 0, cocycle=c)


def extension_from_subgroup(total: FiniteGroup, central, generator: int | None = None) -> CentralExtension:
    """Wrap a group with a distinguished central cyclic subgroup as an extension of A/Z."""
    z = tuple(sorted(set(int(x) for x in central)))
    if not total.is_subgroup(z) or not total.is_central(z):
        raise GroupError("distinguished subgroup must be a central subgroup")
    if generator is None:
        generator = next((x for x in z if total.element_orders[x] == len(z)), None)
        if generator is None:
            raise GroupError("distinguished subgroup is not cyclic")
    elif int(generator) not in z or total.element_orders[int(generator)] != len(z):
        raise GroupError("generator does not generate the central subgroup")
    s, proj = G.quotient(total, z)
    return CentralExtension(total, z, tuple(int(x) for x in proj), s, int(generator))


# -- cochain complex ------------------------------------------------------

class _Complex:
    """Normalized cochains of S with values in Z/n (indices skip the identity)."""

    def __init__(self, s: FiniteGroup, n: int):
        self.s, self.n = s, n
        k = s.order
        self.nz = list(range(1, k))
        self.pair_index = {(a, b): i for i, (a, b) in
                           enumerate((a, b) for a in self.nz for b in self.nz)}

    @cached_property
    def delta1(self) -> np.ndarray:
        """(df)(a,b) = f(a) + f(b) - f(ab)."""
        m = self.s.mul
        rows, cols = len(self.pair_index), len(self.nz)
        d = np.zeros((rows, cols), dtype=np.int64)
        for (a, b), r in self.pair_index.items():
            d[r, a - 1] += 1
            d[r, b - 1] += 1
            ab = int(m[a, b])
            if ab:
                d[r, ab - 1] -= 1
        return d

    @cached_property
    def delta2(self) -> np.ndarray:
        """(dc)(a,b,x) = c(b,x) - c(ab,x) + c(a,bx) - c(a,b)."""
        m = self.s.mul
        nz = self.nz
        pi = self.pair_index
        rows = len(nz) ** 3
        d = np.zeros((rows, len(pi)), dtype=np.int64)
        r = 0
        for a in nz:
            for b in nz:
                ab = int(m[a, b])
                for x in nz:
                    bx = int(m[b, x])
                    d[r, pi[b, x]] += 1
                    if ab:
                        d[r, pi[ab, x]] -= 1
                    if bx:
                        d[r, pi[a, bx]] += 1
                    d[r, pi[a, b]] -= 1
                    r += 1
        return d

    @cached_property
    def _coboundary_form(self):
        dg = diagonalize(self.delta1, track_rows=True, track_cols=False)
        n = self.n
        mods = [gcd(d, n) for d in dg.diag] + [n] * (dg.shape[0] - dg.rank)
        return dg.u, np.array(mods, dtype=np.int64)

    def class_key(self, vec: np.ndarray) -> tuple[int, ...]:
        """Coordinates of a 2-cochain in C^2 / B^2; equal keys iff same class."""
        u, mods = self._coboundary_form
        y = (u @ (vec % self.n)) % mods if len(mods) else np.zeros(0, dtype=np.int64)
        return tuple(int(v) for v in y)

    def key_order(self, key) -> int:
        _, mods = self._coboundary_form
        out = 1
        for v, m in zip(key, mods.tolist()):
            out = lcm(out, m // gcd(v, m))
        return out

    @cached_property
    def cocycle_generators(self) -> list[np.ndarray]:
        n = self.n
        if not self.pair_index:
            return []
        dg = diagonalize(self.delta2, track_rows=False, track_cols=True)
        v = dg.v
        gens = []
        for i in range(v.shape[1]):
            scale = n // gcd(dg.diag[i], n) if i < dg.rank else 1
            col = (np.asarray(v[:, i], dtype=object) * scale) % n
            col = np.asarray(col, dtype=np.int64)
            if col.any():
                gens.append(col)
        return gens

    def cochain_table(self, vec: np.ndarray) -> np.ndarray:
        k = self.s.order
        t = np.zeros((k, k), dtype=np.int64)
        for (a, b), i in self.pair_index.items():
            t[a, b] = vec[i] % self.n
        return t

    @cached_property
    def classes(self) -> list[tuple[tuple[int, ...], np.ndarray]]:
        """One (key, representative cocycle) per cohomology class, in BFS order."""
        zero = np.zeros(len(self.pair_index), dtype=np.int64)
        reps = {self.class_key(zero): zero}
        order = [self.class_key(zero)]
        queue = deque([zero])
        gens = self.cocycle_generators
        while queue:
            c = queue.popleft()
            for g in gens:
                nxt = (c + g) % self.n
                key = self.class_key(nxt)
                if key not in reps:
                    reps[key] = nxt
                    order.append(key)
                    queue.append(nxt)
        return [(k, reps[k]) for k in order]


@dataclass(frozen=True)
class CohomologyGroup:
    invariants: tuple[int, ...]
    order: int

    def __str__(self) -> str:
        if self.order == 1:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.invariants)


def second_cohomology(s: FiniteGroup, n: int) -> CohomologyGroup:
    """H^2(S, Z/n), trivial action, as invariant factors and order."""
    _check_caps(s, n)
    cx = _Complex(s, n)
    classes = cx.classes
    orders = [cx.key_order(k) for k, _ in classes]
    inv = abelian_invariants_from_orders(orders)
    return CohomologyGroup(tuple(inv), len(classes))


def cohomology_representatives(s: FiniteGroup, n: int) -> list[Cocycle2]:
    _check_caps(s, n)
    cx = _Complex(s, n)
    return [Cocycle2(s, n, cx.cochain_table(vec)) for _, vec in cx.classes]


def same_extension_type(x: CentralExtension, y: CentralExtension) -> bool:
    """Isomorphic total groups by a map carrying one central subgroup onto the other."""
    return G.find_isomorphism(x.total, y.total, x.central_subgroup, y.central_subgroup) is not None


def enumerate_central_extensions(s: FiniteGroup, n: int) -> list[CentralExtension]:
    """One extension per isomorphism type of (total group, embedded Z/n)."""
    _check_caps(s, n)
    G.check_cap(s.order * n)
    found: list[CentralExtension] = []
    prints: list[tuple] = []
    for c in cohomology_representatives(s, n):
        ext = twisted_product(c)
        fp = (ext.total.fingerprint(),
              tuple(sorted(ext.total.element_orders[z] for z in ext.central_subgroup)))
        if any(fp == f and same_extension_type(ext, other) for f, other in zip(prints, found)):
            continue
        found.append(ext)
        prints.append(fp)
    return found


# -- finite subgroups of SL(2, C) ------------------------------------------

def _binary_polyhedral(order: int) -> list[FiniteGroup]:
    out = []
    if order % 4 == 0 and order >= 8:
        out.append(G.dicyclic(order // 4))
    if order == 24:
        out.append(G.binary_tetrahedral())
    elif order == 48:
        out.append(G.binary_octahedral())
    elif order == 120:
        out.append(G.binary_icosahedral())
    return out


def sl2_finite_subgroup_check(a: FiniteGroup) -> bool:
    """Is A isomorphic to a finite subgroup of SL(2, C)?

    Members: cyclic, binary dihedral of order 4k (k >= 2), binary
    tetrahedral, octahedral and icosahedral groups.
    """
    G.check_cap(a.order)
    if a.is_cyclic():
        return True
    if a.element_orders.count(2) != 1:
        return False
    return any(G.is_isomorphic(a, ref) for ref in _binary_polyhedral(a.order))


def extension_label(ext: CentralExtension) -> str:
    """Short name for small totals, for reports; falls back to the fingerprint."""
    a = ext.total
    for name in _NAMED:
        ref = G.parse_group(name)
        if ref.order == a.order and G.is_isomorphic(a, ref):
            return name
    return f"order{a.order}:{a.order_statistics}"


_NAMED = ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8",
          "C9", "C3xC3", "C12", "C6xC2", "Dic3", "D6", "C16", "C8xC2", "C4xC4", "C4xC2xC2",
          "heisenberg(3)", "extraspecial(3,exponent-l2)", "C27", "C9xC3", "C3xC3xC3"]
