"""Finite groups as explicit multiplication tables.

Elements are the integers ``0 .. order-1``; element 0 is always the
identity. Every construction goes through :func:`from_elements`, which
closes a generating set under a Python multiplication and numbers the
result in breadth-first order, so the labelling is deterministic.
"""

from __future__ import annotations

import os
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .padic import is_prime

DEFAULT_ORDER_CAP = 400


class GroupError(ValueError):
    """Invalid group data or a request outside the supported range."""


def order_cap() -> int:
    raw = os.environ.get("PACKETMULT_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        return int(raw)
    except ValueError:
        raise GroupError(f"PACKETMULT_ORDER_CAP must be an integer, got {raw!r}") from None


def check_cap(order: int, cap: int | None = None) -> None:
    cap = order_cap() if cap is None else cap
    if order > cap:
        raise GroupError(f"group order {order} exceeds the cap {cap}")


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: np.ndarray
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        table = np.asarray(self.mul, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise GroupError("table entries out of range")
        table.setflags(write=False)
        object.__setattr__(self, "mul", table)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, label={self.label!r})"

    def validate(self) -> None:
        """Check the group axioms by full enumeration."""
        m = self.mul
        n = self.order
        idx = np.arange(n)
        if not (np.array_equal(m[0], idx) and np.array_equal(m[:, 0], idx)):
            raise GroupError("element 0 is not a two-sided identity")
        for row in m:
            if len(set(row.tolist())) != n:
                raise GroupError("table is not a Latin square")
        # (ab)c == a(bc) for all triples, one a at a time
        for a in range(n):
            left = m[m[a]]          # left[b, c] = (ab)c
            right = m[a][m]         # right[b, c] = a(bc)
            if not np.array_equal(left, right):
                raise GroupError("multiplication is not associative")

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.mul, axis=1)  # the unique c with a*c == 0
        return inv

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out, base = 0, a
        while k:
            if k & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            k >>= 1
        return out

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = int(self.mul[x, a])
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        return reduce(lambda x, y: x * y // gcd(x, y), self.element_orders, 1)

    @cached_property
    def order_statistics(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(self.element_orders).items()))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders

    def commutes(self, a: int, b: int) -> bool:
        return self.mul[a, b] == self.mul[b, a]

    def conjugate(self, g: int, x: int) -> int:
        """x g x^-1."""
        return int(self.mul[self.mul[x, g], self.inverse[x]])

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted tuples, ordered by their smallest element."""
        seen = np.full(self.order, -1)
        classes = []
        for g in range(self.order):
            if seen[g] >= 0:
                continue
            orbit = np.unique(self.mul[self.mul[:, g], self.inverse])
            seen[orbit] = len(classes)
            classes.append(tuple(int(x) for x in orbit))
        return tuple(classes)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for i, cls in enumerate(self.conjugacy_classes):
            out[list(cls)] = i
        return out

    @cached_property
    def center(self) -> tuple[int, ...]:
        return tuple(int(g) for g in range(self.order) if np.array_equal(self.mul[g], self.mul[:, g]))

    def is_central(self, elements: Iterable[int]) -> bool:
        z = set(self.center)
        return all(int(x) in z for x in elements)

    def generated_subgroup(self, gens: Iterable[int]) -> tuple[int, ...]:
        gens = [int(g) for g in gens]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = int(self.mul[x, s])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def is_subgroup(self, elements: Sequence[int]) -> bool:
        s = set(int(x) for x in elements)
        if 0 not in s:
            return False
        return all(int(self.mul[a, b]) in s for a in s for b in s)

    def is_normal(self, elements: Sequence[int]) -> bool:
        s = set(int(x) for x in elements)
        return all(self.conjugate(h, x) in s for h in s for x in range(self.order))

    @cached_property
    def derived_subgroup(self) -> tuple[int, ...]:
        comms = {int(self.mul[self.mul[a, b], self.inverse[self.mul[b, a]]])
                 for a in range(self.order) for b in range(self.order)}
        return self.generated_subgroup(sorted(comms))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by element order."""
        by_order = sorted(range(1, self.order), key=lambda g: (-self.element_orders[g], g))
        gens: list[int] = []
        current = {0}
        for g in by_order:
            if len(current) == self.order:
                break
            if g not in current:
                gens.append(g)
                current = set(self.generated_subgroup(gens))
        return tuple(gens)

    def fingerprint(self) -> tuple:
        return (self.order, self.order_statistics, len(self.center),
                len(self.conjugacy_classes), len(self.derived_subgroup))

    def to_dict(self) -> dict:
        return {"order": self.order, "mul": self.mul.reshape(-1).tolist(),
                "identity": 0, "label": self.label}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteGroup":
        return from_table(data["mul"], identity=data.get("identity", 0),
                          label=data.get("label", ""), order=data.get("order"))


def from_table(mul, identity: int = 0, label: str = "", order: int | None = None,
               validate: bool = True) -> FiniteGroup:
    """Build a group from a table (nested rows or a flat row-major list).

    If ``identity`` is not 0 the elements are relabelled by swapping it with 0.
    """
    arr = np.asarray(mul, dtype=np.int64)
    if arr.ndim == 1:
        n = order if order is not None else int(round(len(arr) ** 0.5))
        if n * n != arr.size:
            raise GroupError("flat table length is not a square")
        arr = arr.reshape(n, n)
    if order is not None and arr.shape[0] != order:
        raise GroupError(f"declared order {order} does not match table size {arr.shape[0]}")
    check_cap(arr.shape[0])
    if identity != 0:
        n = arr.shape[0]
        perm = np.arange(n)
        perm[0], perm[identity] = identity, 0
        # perm maps new label -> old label and is its own inverse
        arr = perm[arr[np.ix_(perm, perm)]]
    group = FiniteGroup(arr, label=label)
    if validate:
        group.validate()
    return group


def from_elements(generators: Sequence[Hashable], mul: Callable, identity: Hashable,
                  label: str = "", cap: int | None = None) -> tuple[FiniteGroup, list]:
    """Close ``generators`` under ``mul`` and return the table plus element list."""
    cap = order_cap() if cap is None else cap
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = mul(x, s)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                if len(elements) > cap:
                    raise GroupError(f"group order exceeds the cap {cap}")
                queue.append(y)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = index[mul(x, y)]
    return FiniteGroup(table, label=label), elements


# -- standard families ------------------------------------------------------

def cyclic(k: int) -> FiniteGroup:
    if k < 1:
        raise GroupError("cyclic group needs k >= 1")
    check_cap(k)
    idx = np.arange(k)
    return FiniteGroup((idx[:, None] + idx[None, :]) % k, label=f"C{k}")


def trivial() -> FiniteGroup:
    return cyclic(1)


def dihedral(k: int) -> FiniteGroup:
    """Dihedral group of order 2k (symmetries of a k-gon), labelled D{k}."""
    if k < 1:
        raise GroupError("dihedral group needs k >= 1")
    check_cap(2 * k)

    def mul(x, y):
        # (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % k, (b + d) % 2)

    gens = [(1 % k, 0), (0, 1)]
    return from_elements(gens, mul, (0, 0), label=f"D{k}")[0]


def _quat_mul_mod(p: int):
    def mul(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return ((a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2) % p,
                (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2) % p,
                (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2) % p,
                (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2) % p)
    return mul


def quaternion8() -> FiniteGroup:
    """{+-1, +-i, +-j, +-k}, realised with integer quaternion coordinates mod 3."""
    mul = _quat_mul_mod(3)
    return from_elements([(0, 1, 0, 0), (0, 0, 1, 0)], mul, (1, 0, 0, 0), label="Q8")[0]


def dicyclic(k: int) -> FiniteGroup:
    """Binary dihedral group <a, x | a^(2k) = 1, x^2 = a^k, x a x^-1 = a^-1> of order 4k."""
    if k < 1:
        raise GroupError("dicyclic group needs k >= 1")
    check_cap(4 * k)
    m = 2 * k

    def mul(x, y):
        # elements a^i x^j with j in {0,1}; x a^c = a^-c x, x^2 = a^k
        i, j = x
        c, d = y
        if j == 0:
            return ((i + c) % m, d)
        if d == 0:
            return ((i - c) % m, 1)
        return ((i - c + k) % m, 0)

    return from_elements([(1 % m, 0), (0, 1)], mul, (0, 0), label=f"Dic{k}")[0]


def _mat_mul_mod(p: int):
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p)
    return mul


def sl2(p: int) -> FiniteGroup:
    """SL(2, F_p) for a small prime p, generated by the two elementary matrices."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    return from_elements([(1, 1, 0, 1), (1, 0, 1, 1)], _mat_mul_mod(p), (1, 0, 0, 1),
                         label=f"SL(2,{p})")[0]


def binary_tetrahedral() -> FiniteGroup:
    g = sl2(3)
    return FiniteGroup(g.mul, label="2T")


def binary_octahedral() -> FiniteGroup:
    """Unit quaternions (1+i)/sqrt2 and (1+i+j+k)/2, reduced mod 7 (sqrt2 = 3)."""
    mul = _quat_mul_mod(7)
    inv_sqrt2 = 5   # 1/3 mod 7
    half = 4        # 1/2 mod 7
    gens = [(inv_sqrt2, inv_sqrt2, 0, 0), (half, half, half, half)]
    return from_elements(gens, mul, (1, 0, 0, 0), label="2O")[0]


def binary_icosahedral() -> FiniteGroup:
    g = sl2(5)
    return FiniteGroup(g.mul, label="2I")


def extraspecial(l: int, kind: str = "exponent-l") -> FiniteGroup:
    """The two non-abelian groups of order l^3.

    For odd l, ``exponent-l`` is the Heisenberg group of upper unitriangular
    3x3 matrices over F_l and ``exponent-l2`` is Z/l^2 x| Z/l acting by
    a -> a^(1+l). For l = 2 the two classes are D4 (``exponent-l``, "+")
    and Q8 (``exponent-l2``, "-").
    """
    if not is_prime(l):
        raise GroupError(f"l={l} is not prime")
    check_cap(l ** 3)
    kind = _EXTRASPECIAL_KINDS.get(kind.strip().lower())
    if kind is None:
        raise GroupError("extraspecial type must be exponent-l or exponent-l2")
    if l == 2:
        g = dihedral(4) if kind == "l" else quaternion8()
        return FiniteGroup(g.mul, label=f"extraspecial(2,{'+' if kind == 'l' else '-'})")
    if kind == "l":
        def mul(x, y):
            a, b, c = x
            d, e, f = y
            return ((a + d) % l, (b + e) % l, (c + f + a * e) % l)
        gens = [(1, 0, 0), (0, 1, 0)]
        return from_elements(gens, mul, (0, 0, 0), label=f"heisenberg({l})")[0]
    m = l * l

    def mul(x, y):
        # (a, s)(b, t) = (a + (1+l)^s b, s + t)
        a, s = x
        b, t = y
        return ((a + pow(1 + l, s, m) * b) % m, (s + t) % l)
    return from_elements([(1, 0), (0, 1)], mul, (0, 0), label=f"extraspecial({l},exponent-l2)")[0]


_EXTRASPECIAL_KINDS = {
    "exponent-l": "l", "l": "l", "+": "l", "plus": "l", "a": "l",
    "exponent-l2": "l2", "exponent-l^2": "l2", "l2": "l2", "-": "l2", "minus": "l2", "b": "l2",
}


def heisenberg(l: int) -> FiniteGroup:
    """Exponent-l extraspecial group of order l^3; Q8 stands in for l = 2."""
    if not is_prime(l):
        raise GroupError(f"l={l} is not prime")
    if l == 2:
        return FiniteGroup(quaternion8().mul, label="heisenberg(2)")
    return extraspecial(l, "exponent-l")


def direct_product(g: FiniteGroup, h: FiniteGroup, label: str | None = None) -> FiniteGroup:
    """G x H with element (a, b) numbered a * |H| + b."""
    check_cap(g.order * h.order)
    n, m = g.order, h.order
    a = np.repeat(np.arange(n), m)
    b = np.tile(np.arange(m), n)
    table = g.mul[np.ix_(a, a)] * m + h.mul[np.ix_(b, b)]
    name = label if label is not None else f"{g.label}x{h.label}"
    return FiniteGroup(table, label=name)


def quotient(g: FiniteGroup, normal: Sequence[int]) -> tuple[FiniteGroup, np.ndarray]:
    """G/N together with the projection as an array indexed by elements of G."""
    nset = sorted(set(int(x) for x in normal))
    if not g.is_subgroup(nset) or not g.is_normal(nset):
        raise GroupError("quotient needs a normal subgroup")
    proj = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if proj[x] >= 0:
            continue
        coset = g.mul[x, nset]
        proj[coset] = len(reps)
        reps.append(x)
    k = len(reps)
    table = np.empty((k, k), dtype=np.int64)
    for i, x in enumerate(reps):
        table[i] = proj[g.mul[x, reps]]
    return FiniteGroup(table, label=f"{g.label}/N" if g.label else ""), proj


def relabel(g: FiniteGroup, label: str) -> FiniteGroup:
    return FiniteGroup(g.mul, label=label)


# -- isomorphism -----------------------------------------------------------

def find_isomorphism(g: FiniteGroup, h: FiniteGroup,
                     sub_g: Sequence[int] | None = None,
                     sub_h: Sequence[int] | None = None) -> np.ndarray | None:
    """Brute-force isomorphism search over images of a generating set.

    If ``sub_g``/``sub_h`` are given the isomorphism must carry the first
    onto the second. Returns the map as an array, or None.
    """
    if g.order != h.order or g.order_statistics != h.order_statistics:
        return None
    if len(g.center) != len(h.center) or len(g.conjugacy_classes) != len(h.conjugacy_classes):
        return None
    if sub_g is not None:
        sub_g_set = set(int(x) for x in sub_g)
        sub_h_set = set(int(x) for x in sub_h)
        if len(sub_g_set) != len(sub_h_set):
            return None
        sg = Counter(g.element_orders[x] for x in sub_g_set)
        sh = Counter(h.element_orders[x] for x in sub_h_set)
        if sg != sh:
            return None
    gens = list(g.generators)
    if not gens:
        return np.zeros(1, dtype=np.int64)
    g_ord, h_ord = g.element_orders, h.element_orders
    in_sub_g = [sub_g is not None and s in sub_g_set for s in gens]
    candidates = []
    for s, ins in zip(gens, in_sub_g):
        cand = [t for t in range(h.order) if h_ord[t] == g_ord[s]]
        if sub_g is not None:
            cand = [t for t in cand if (t in sub_h_set) == ins]
        candidates.append(cand)

    images: list[int] = []

    def consistent(t: int) -> bool:
        # orders of pairwise products and commutation must match
        k = len(images)
        s = gens[k]
        for s0, t0 in zip(gens, images):
            if g_ord[int(g.mul[s0, s])] != h_ord[int(h.mul[t0, t])]:
                return False
            if g.commutes(s0, s) != h.commutes(t0, t):
                return False
        return True

    def extend() -> np.ndarray | None:
        phi = np.full(g.order, -1, dtype=np.int64)
        phi[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s, t in zip(gens, images):
                y = int(g.mul[x, s])
                img = int(h.mul[phi[x], t])
                if phi[y] < 0:
                    phi[y] = img
                    queue.append(y)
                elif phi[y] != img:
                    return None
        if len(set(phi.tolist())) != h.order:
            return None
        if sub_g is not None and set(int(phi[x]) for x in sub_g_set) != sub_h_set:
            return None
        return phi

    def search() -> np.ndarray | None:
        if len(images) == len(gens):
            return extend()
        for t in candidates[len(images)]:
            if consistent(t):
                images.append(t)
                found = search()
                if found is not None:
                    return found
                images.pop()
        return None

    return search()


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None


# -- text grammar -----------------------------------------------------------

_ALIASES = {
    "q8": quaternion8, "quaternion8": quaternion8, "quaternion": quaternion8,
    "trivial": trivial, "1": trivial,
    "2t": binary_tetrahedral, "binary_tetrahedral": binary_tetrahedral,
    "2o": binary_octahedral, "binary_octahedral": binary_octahedral,
    "2i": binary_icosahedral, "binary_icosahedral": binary_icosahedral,
}


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(sep, i):
            parts.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return parts


def _split_product(text: str) -> list[str]:
    """Split "C4xC2", "C4 x C2" or "C4×C2" on top-level product signs."""
    parts, depth, cur = [], 0, ""
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        is_sep = ch == "×" or (
            ch == "x" and depth == 0 and cur.strip() and
            (cur.rstrip()[-1].isdigit() or cur.rstrip()[-1] == ")" or cur.endswith(" ")) and
            i + 1 < len(text) and (text[i + 1].isalpha() or text[i + 1] in " ("))
        if depth == 0 and is_sep:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_group(text: str) -> FiniteGroup:
    """Build a group from the compact grammar.

    Accepted atoms: ``C4``/``Z4``/``cyclic(4)``, ``D4``/``dihedral(4)``
    (order 8), ``Q8``, ``Dic3``/``dicyclic(3)``, ``heisenberg(3)``,
    ``extraspecial(3,exponent-l2)``, ``SL(2,3)``, ``2T``/``2O``/``2I``,
    products ``C4xC2`` and ``direct_product(A,B)``.
    """
    src = text.strip()
    if not src:
        raise GroupError("empty group spec")
    parts = _split_product(src)
    if len(parts) > 1:
        groups = [parse_group(p) for p in parts]
        out = groups[0]
        for g in groups[1:]:
            out = direct_product(out, g)
        return out
    m = re.fullmatch(r"(\w+)\s*\((.*)\)", src, flags=re.S)
    if m:
        name, inner = m.group(1).lower(), m.group(2)
        args = [a.strip() for a in _split_top(inner, ",")]
        if name == "direct_product":
            if len(args) < 2:
                raise GroupError("direct_product needs two arguments")
            return reduce(direct_product, (parse_group(a) for a in args))
        if name in {"cyclic", "dihedral", "dicyclic", "heisenberg"}:
            if len(args) != 1:
                raise GroupError(f"{name} takes one integer argument")
            k = _int_arg(args[0], src)
            return {"cyclic": cyclic, "dihedral": dihedral, "dicyclic": dicyclic,
                    "heisenberg": heisenberg}[name](k)
        if name == "extraspecial":
            if len(args) != 2:
                raise GroupError("extraspecial takes (l, type)")
            return extraspecial(_int_arg(args[0], src), args[1])
        if name == "sl" and len(args) == 2 and args[0] == "2":
            return sl2(_int_arg(args[1], src))
        raise GroupError(f"unknown group constructor {m.group(1)!r}")
    if src.startswith("(") and src.endswith(")"):
        return parse_group(src[1:-1])
    low = src.lower()
    if low in _ALIASES:
        return _ALIASES[low]()
    m = re.fullmatch(r"([czdq]|dic)(\d+)", low)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind in "cz":
            return cyclic(k)
        if kind == "d":
            return dihedral(k)
        if kind == "dic":
            return dicyclic(k)
        if kind == "q" and k % 4 == 0 and k >= 8:
            return relabel(dicyclic(k // 4), f"Q{k}")
    raise GroupError(f"cannot parse group spec {text!r}")


def _int_arg(s: str, src: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise GroupError(f"expected an integer in {src!r}, got {s!r}") from None
