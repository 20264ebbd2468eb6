"""Character tables by the Burnside-Dixon class-sum method.

Central characters omega_chi are the common eigenvectors of the class
multiplication matrices, computed over F_p with p = 1 mod exponent(G).
Values are lifted to exact cyclotomic numbers by recovering eigenvalue
multiplicities from a discrete Fourier transform mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import isqrt

import numpy as np

from . import modp
from .cyclotomic import Cyclotomic
from .groups import FiniteGroup, GroupError, check_cap


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    classes: tuple[tuple[int, int], ...]          # (representative, size)
    characters: tuple[tuple[Cyclotomic, ...], ...]
    degrees: tuple[int, ...]

    @property
    def exponent(self) -> int:
        return self.group.exponent

    def __len__(self) -> int:
        return len(self.characters)

    def value(self, i: int, g: int) -> Cyclotomic:
        return self.characters[i][int(self.group.class_of[g])]

    def inner_product(self, i: int, j: int):
        """<chi_i, chi_j> as an exact cyclotomic number."""
        total = Cyclotomic(self.exponent)
        for (rep, size), a, b in zip(self.classes, self.characters[i], self.characters[j]):
            total = total + a * b.conjugate() * size
        return total / self.group.order

    def check(self) -> None:
        """Assert the table invariants exactly."""
        n = len(self.classes)
        if len(self.characters) != n:
            raise AssertionError("number of characters differs from number of classes")
        if sum(d * d for d in self.degrees) != self.group.order:
            raise AssertionError("sum of squared degrees differs from |G|")
        for i in range(n):
            for j in range(i, n):
                if self.inner_product(i, j) != (1 if i == j else 0):
                    raise AssertionError(f"rows {i}, {j} are not orthonormal")

    def format(self) -> str:
        header = ["class"] + [str(rep) for rep, _ in self.classes]
        sizes = ["size"] + [str(s) for _, s in self.classes]
        rows = [[f"X.{i + 1}"] + [repr(v) for v in row] for i, row in enumerate(self.characters)]
        allrows = [header, sizes] + rows
        widths = [max(len(r[c]) for r in allrows) for c in range(len(header))]
        return "\n".join("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in allrows)

    def to_dict(self) -> dict:
        return {
            "label": self.group.label,
            "order": self.group.order,
            "exponent": self.exponent,
            "classes": [{"representative": r, "size": s} for r, s in self.classes],
            "degrees": list(self.degrees),
            "characters": [[_cyc_json(v) for v in row] for row in self.characters],
        }


def _cyc_json(v: Cyclotomic):
    if v.is_rational():
        return str(v.as_rational())
    return {"e": v.e, "coeffs": [str(c) for c in v.coeffs]}


def _class_matrices(g: FiniteGroup) -> list[np.ndarray]:
    """M_j[i, k] = #{x in C_j : x^-1 g_k in C_i}; omega is an eigenvector of each."""
    classes = g.conjugacy_classes
    r = len(classes)
    reps = [c[0] for c in classes]
    cls_of = g.class_of
    mats = []
    for cj in classes:
        m = np.zeros((r, r), dtype=np.int64)
        inv = g.inverse[list(cj)]
        for k, gk in enumerate(reps):
            ys = g.mul[inv, gk]
            np.add.at(m[:, k], cls_of[ys], 1)
        mats.append(m)
    return mats


def _split_spaces(mats: list[np.ndarray], p: int) -> list[np.ndarray]:
    """Common one-dimensional eigenspaces of the class matrices."""
    r = mats[0].shape[0]
    # fixed pseudo-random combination separates almost everything at once
    coeffs = [(7 * j * j + 3 * j + 1) % p for j in range(len(mats))]
    combo = sum(c * m for c, m in zip(coeffs, mats)) % p
    spaces = [np.eye(r, dtype=np.int64)]
    for m in [combo] + mats[1:]:
        nxt = []
        for basis in spaces:
            if basis.shape[0] == 1:
                nxt.append(basis)
                continue
            basis, piv = modp.rref(basis, p)
            restricted = ((m @ basis.T) % p)[piv, :]
            for lam in modp.roots(modp.charpoly(restricted, p), p):
                shifted = (restricted - lam * np.eye(len(piv), dtype=np.int64)) % p
                kern = modp.nullspace(shifted, p)
                nxt.append((kern @ basis) % p)
        spaces = nxt
        if all(s.shape[0] == 1 for s in spaces):
            break
    if len(spaces) != r or any(s.shape[0] != 1 for s in spaces):
        raise GroupError("class matrices failed to split into one-dimensional eigenspaces")
    return [s[0] for s in spaces]


def _abelian_values(g: FiniteGroup) -> list[list[int]]:
    """Characters of an abelian group as exponent vectors: chi(x) = E(e)^k[x]."""
    e = g.exponent
    gens = g.generators
    rows = []
    for ks in product(range(e), repeat=len(gens)):
        ok = True
        for s, k in zip(gens, ks):
            if (k * g.element_orders[s]) % e:
                ok = False
                break
        if not ok:
            continue
        expo = [-1] * g.order
        expo[0] = 0
        frontier = [0]
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, k in zip(gens, ks):
                    y = int(g.mul[x, s])
                    val = (expo[x] + k) % e
                    if expo[y] < 0:
                        expo[y] = val
                        nxt.append(y)
                    elif expo[y] != val:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if ok:
            rows.append(expo)
    if len(rows) != g.order:
        raise GroupError("abelian character enumeration did not find |G| characters")
    return rows


def character_table(g: FiniteGroup) -> CharacterTable:
    """Exact character table; degrees ascending, trivial character first."""
    cache = g._cache
    if "character_table" in cache:
        return cache["character_table"]
    check_cap(g.order)
    classes = g.conjugacy_classes
    e = g.exponent
    class_info = tuple((c[0], len(c)) for c in classes)
    if g.is_abelian():
        rows = [tuple(Cyclotomic.root(e, expo[c[0]]) for c in classes)
                for expo in _abelian_values(g)]
        degrees = [1] * len(rows)
    else:
        rows, degrees = _dixon(g)
    order = sorted(range(len(rows)), key=lambda i: (degrees[i], _sort_key(rows[i])))
    table = CharacterTable(g, class_info, tuple(tuple(rows[i]) for i in order),
                           tuple(degrees[i] for i in order))
    cache["character_table"] = table
    return table


def _sort_key(row):
    # trivial character sorts first among degree-1 characters
    return tuple((0, 0) if v == 1 else (1, tuple(str(c) for c in v.coeffs)) for v in row)


def _dixon(g: FiniteGroup):
    classes = g.conjugacy_classes
    r = len(classes)
    e = g.exponent
    n = g.order
    p = modp.dixon_prime(e, n)
    z = pow(modp.primitive_root(p), (p - 1) // e, p)
    sizes = np.array([len(c) for c in classes], dtype=np.int64)
    inv_class = g.class_of[g.inverse[[c[0] for c in classes]]]
    mats = _class_matrices(g)
    vectors = _split_spaces(mats, p)

    # power map: class of g_k^t for t in 0..e-1
    powers = np.zeros((r, e), dtype=np.int64)
    for k, c in enumerate(classes):
        x = 0
        for t in range(e):
            powers[k, t] = g.class_of[x]
            x = int(g.mul[x, c[0]])
    # dft[t, s] = z^(-s t) / e
    inv_e = pow(e, -1, p)
    zinv = pow(z, -1, p)
    dft = np.array([[pow(zinv, (s * t) % e, p) for s in range(e)] for t in range(e)],
                   dtype=np.int64) * inv_e % p

    rows, degrees = [], []
    inv_sizes = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    for w in vectors:
        w = (w * pow(int(w[0]), -1, p)) % p       # omega(identity class) = 1
        norm = int(np.sum(w * w[inv_class] % p * inv_sizes % p) % p)
        target = n * pow(norm, -1, p) % p
        deg = next((d for d in range(1, isqrt(n) + 1) if d * d % p == target), None)
        if deg is None:
            raise GroupError("could not recover a character degree")
        chi = w * deg % p * inv_sizes % p
        mult = (chi[powers] @ dft) % p              # mult[k, s] = multiplicity of E(e)^s
        mult = np.where(mult > p // 2, mult - p, mult)
        if mult.min() < 0 or mult.sum(axis=1).max() != deg:
            raise GroupError("eigenvalue multiplicities out of range during lifting")
        rows.append(tuple(Cyclotomic(e, [int(x) for x in mult[k]]) for k in range(r)))
        degrees.append(deg)
    return rows, degrees


def central_eigenvalue(table: CharacterTable, i: int, z: int) -> int | None:
    """The k with chi_i(z) = chi_i(1) E(e)^k, or None if z does not act by a scalar."""
    e = table.exponent
    val = table.value(i, z)
    d = table.degrees[i]
    for k in range(e):
        if val == Cyclotomic.root(e, k) * d:
            return k
    return None


@dataclass(frozen=True)
class CentralCharacterQuery:
    """A character of a central cyclic subgroup: generator -> E(|Z|)^k."""
    subgroup: tuple[int, ...]
    zeta: int = 0
    generator: int | None = None

    @cached_property
    def size(self) -> int:
        return len(set(self.subgroup))


def _resolve_generator(g: FiniteGroup, q: CentralCharacterQuery) -> int:
    sub = sorted(set(int(x) for x in q.subgroup))
    if not g.is_subgroup(sub):
        raise GroupError("central character query: elements do not form a subgroup")
    if not g.is_central(sub):
        raise GroupError("central character query: subgroup is not central")
    m = len(sub)
    if q.generator is not None:
        gen = int(q.generator)
        if gen not in sub or g.element_orders[gen] != m:
            raise GroupError("central character query: generator does not generate the subgroup")
        return gen
    gen = next((x for x in sub if g.element_orders[x] == m), None)
    if gen is None:
        raise GroupError("central character query: subgroup is not cyclic")
    return gen


def irr_with_central_character(g: FiniteGroup, query: CentralCharacterQuery) -> list[int]:
    """Degrees of the irreducibles whose restriction to Z is zeta-isotypic."""
    return [d for _, d in _matching(g, query)]


def irr_indices_with_central_character(g: FiniteGroup, query: CentralCharacterQuery) -> list[int]:
    return [i for i, _ in _matching(g, query)]


def _matching(g: FiniteGroup, query: CentralCharacterQuery):
    gen = _resolve_generator(g, query)
    m = query.size
    table = character_table(g)
    e = table.exponent
    step = e // m
    want = (query.zeta % m) * step
    out = []
    for i, d in enumerate(table.degrees):
        k = central_eigenvalue(table, i, gen)
        if k is None:
            raise AssertionError("central element did not act by a scalar")
        if k == want:
            out.append((i, d))
    return out
