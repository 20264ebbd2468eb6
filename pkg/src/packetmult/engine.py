"""Packet cardinalities and restriction multiplicities for SL(m, D).

A scenario is the finite shadow of an elliptic parameter: the group
A_phi with its distinguished central mu_n = Z/n, the quotient S_phi and
an exponent k fixing zeta_G on Z (generator -> exp(2 pi i k / n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from fractions import Fraction
from math import isqrt

from . import groups as G
from .characters import CentralCharacterQuery, irr_with_central_character
from .extensions import CentralExtension, extension_from_subgroup
from .padic import (PAdicFieldData, coset_card, factorize, is_prime, is_wild,
                    square_divisor_bound)


class PreconditionError(ValueError):
    """The caller passed inputs outside an operation's domain."""


class InconsistencyError(ArithmeticError):
    """Valid inputs contradict one of the packet identities."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


DIVERGENCE_FLAG = "packet-count-divergence"
DIVERGENCE_TEXT = (
    "a count of |Pi_phi(G)| = 1 with multiplicity 1 and |Pi_phi(G*)| = 2, "
    "which violates the square-root ratio theorem <sigma,pi> = sqrt(|Pi_phi(G*)|/|Pi_phi(G)|) "
    "(sqrt 2 is not an integer); reporting |Pi_phi(G)| = 2 = |Irr(Z/2 x Z/2, sign)| instead"
)
WILD_NOTE = "wild case (p | n, e > 1): coset formula not checked against a worked example"


@dataclass(frozen=True)
class ParameterScenario:
    m: int
    d: int
    extension: CentralExtension
    zeta_exponent: int = 0
    field: PAdicFieldData | None = None
    label: str = ""

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise PreconditionError("m and d must be positive")
        if self.extension.n != self.n:
            raise PreconditionError(
                f"central subgroup has order {self.extension.n}, expected n = m*d = {self.n}")
        if self.d == 1 and self.zeta_exponent % self.n != 0:
            raise PreconditionError("the split form (d = 1) has trivial zeta_G")

    @property
    def n(self) -> int:
        return self.m * self.d


@dataclass(frozen=True)
class DivisibilityAudit:
    coset: int
    bound: int
    mult_divides_bound: bool
    tame_mult_divides_n: bool      # vacuous (True) when p | n
    card_g_divides_coset: bool
    card_star_divides_coset: bool
    wild: bool = False

    @property
    def all_pass(self) -> bool:
        return (self.mult_divides_bound and self.tame_mult_divides_n
                and self.card_g_divides_coset and self.card_star_divides_coset)


@dataclass(frozen=True)
class PacketReport:
    card_star: int
    card_g: int
    multiplicity: int
    s_card: int
    common_dim_ok: bool
    kottwitz_sign: int
    endoscopic_coefficient: int
    degree_ratio: Fraction
    divisibility: DivisibilityAudit | None = None
    depth_zero_flag: bool | None = None
    label: str = ""
    m: int = 0
    d: int = 0
    flags: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = asdict(self)
        out["degree_ratio"] = str(self.degree_ratio)
        out["flags"] = list(self.flags)
        out["notes"] = list(self.notes)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PacketReport":
        data = dict(data)
        data["degree_ratio"] = Fraction(data["degree_ratio"])
        if data.get("divisibility") is not None:
            data["divisibility"] = DivisibilityAudit(**data["divisibility"])
        data["flags"] = tuple(data.get("flags", ()))
        data["notes"] = tuple(data.get("notes", ()))
        return cls(**data)


def multiplicity_from_packet_cards(card_star: int, card_g: int) -> int:
    """<sigma, pi> = sqrt(|Pi(G*)| / |Pi(G)|)."""
    if card_star < 1 or card_g < 1:
        raise PreconditionError("packet cardinalities must be positive")
    if card_g > card_star:
        raise InconsistencyError("packet of inner form exceeds split packet",
                                 {"card_star": card_star, "card_g": card_g})
    if card_star % card_g:
        raise InconsistencyError("inconsistent packet data: |Pi(G)| does not divide |Pi(G*)|",
                                 {"card_star": card_star, "card_g": card_g})
    ratio = card_star // card_g
    root = isqrt(ratio)
    if root * root != ratio:
        raise InconsistencyError("ratio violates the |X| identity: not a perfect square",
                                 {"card_star": card_star, "card_g": card_g, "ratio": ratio})
    return root


def kottwitz_sign(m: int, d: int) -> int:
    """(-1)^(rk SL(n) - rk SL(m, D)) = (-1)^(m(d-1))."""
    if m < 1 or d < 1:
        raise PreconditionError("m and d must be positive")
    return -1 if (m * (d - 1)) % 2 else 1


def formal_degree_ratio(s_card: int, multiplicity: int) -> Fraction:
    """Deg(sigma)/Deg(pi) from <sigma, pi> = |S_phi| Deg(sigma)/Deg(pi)."""
    if s_card < 1 or multiplicity < 1:
        raise PreconditionError("inputs must be positive")
    return Fraction(multiplicity, s_card)


def endoscopic_coefficient(scenario: ParameterScenario, report: PacketReport) -> int:
    return kottwitz_sign(scenario.m, scenario.d) * report.multiplicity


@dataclass(frozen=True)
class SteinbergReport:
    multiplicity: int
    degree_factor: int

    def __iter__(self):
        return iter((self.multiplicity, self.degree_factor))


def steinberg_report(n: int) -> SteinbergReport:
    """Steinberg restricts with multiplicity one; deg(St_G) = n deg(St_G~)."""
    if n < 1:
        raise PreconditionError("n must be positive")
    return SteinbergReport(1, n)


def divisibility_report(field: PAdicFieldData, n: int, report: PacketReport) -> DivisibilityAudit:
    """Check the divisibility constraints; never raises on a failed check."""
    coset = coset_card(field, n)
    bound = square_divisor_bound(coset)
    tame = n % field.p != 0
    return DivisibilityAudit(
        coset=coset,
        bound=bound,
        mult_divides_bound=bound % report.multiplicity == 0,
        tame_mult_divides_n=(not tame) or n % report.multiplicity == 0,
        card_g_divides_coset=coset % report.card_g == 0,
        card_star_divides_coset=coset % report.card_star == 0,
        wild=is_wild(field, n),
    )


def analyze_parameter(scenario: ParameterScenario) -> PacketReport:
    ext = scenario.extension
    a, s = ext.total, ext.quotient
    if not s.is_abelian():
        raise InconsistencyError("not a valid SL-type parameter: S_phi is non-abelian",
                                 {"label": scenario.label})
    z = ext.central_subgroup
    split = irr_with_central_character(a, CentralCharacterQuery(z, 0, ext.generator))
    card_star = len(split)
    if card_star != s.order:
        raise InconsistencyError("|Irr(A, 1)| differs from |S_phi|",
                                 {"card_star": card_star, "s_card": s.order})
    degrees = irr_with_central_character(a, CentralCharacterQuery(z, scenario.zeta_exponent,
                                                                   ext.generator))
    if len(set(degrees)) != 1:
        raise InconsistencyError("no common multiplicity: degrees in Irr(A, zeta_G) differ",
                                 {"degrees": sorted(degrees), "label": scenario.label})
    mult = degrees[0]
    card_g = len(degrees)
    if card_star != card_g * mult * mult:
        raise InconsistencyError("|X| identity fails: card_star != card_g * mult^2",
                                 {"card_star": card_star, "card_g": card_g, "mult": mult})
    sign = kottwitz_sign(scenario.m, scenario.d)
    report = PacketReport(
        card_star=card_star,
        card_g=card_g,
        multiplicity=mult,
        s_card=s.order,
        common_dim_ok=True,
        kottwitz_sign=sign,
        endoscopic_coefficient=sign * mult,
        degree_ratio=formal_degree_ratio(s.order, mult),
        label=scenario.label,
        m=scenario.m,
        d=scenario.d,
    )
    if scenario.field is not None:
        audit = divisibility_report(scenario.field, scenario.n, report)
        notes = (WILD_NOTE,) if audit.wild else ()
        report = _replace(report, divisibility=audit, notes=report.notes + notes)
    return report


def _replace(report: PacketReport, **changes) -> PacketReport:
    from dataclasses import replace
    return replace(report, **changes)


# -- worked cases -----------------------------------------------------------

def quaternion_scenario(field: PAdicFieldData | None = None, label: str = "SL(1,D2) Q8") -> ParameterScenario:
    q8 = G.quaternion8()
    ext = extension_from_subgroup(q8, q8.center)
    return ParameterScenario(1, 2, ext, zeta_exponent=1, field=field, label=label)


def klein_scenario(field: PAdicFieldData | None = None, label: str = "SL(1,D2) C2xC2") -> ParameterScenario:
    """A = Z/2 x Z/2 with Z the first factor, S = Z/2."""
    v4 = G.parse_group("C2xC2")
    z = (0, 2)  # element 2 is (1, 0) in the product numbering
    ext = extension_from_subgroup(v4, z, generator=2)
    return ParameterScenario(1, 2, ext, zeta_exponent=1, field=field, label=label)


def sl2_case(r: int, field: PAdicFieldData) -> PacketReport:
    """Dihedral image D_{2r} in PGL(2, C) for the quaternion inner form of SL(2)."""
    if field.p == 2:
        raise PreconditionError("this case assumes p != 2")
    if r < 1:
        raise PreconditionError("r must be >= 1")
    if r == 1:
        report = analyze_parameter(quaternion_scenario(field, label="sl2 r=1"))
        return _replace(report, depth_zero_flag=True)
    report = analyze_parameter(klein_scenario(field, label=f"sl2 r={r}"))
    return _replace(report, flags=report.flags + (DIVERGENCE_FLAG,),
                    notes=report.notes + (DIVERGENCE_TEXT,))


def _prime_of(q: int) -> tuple[int, int]:
    fac = factorize(q) if q > 1 else {}
    if len(fac) != 1:
        raise PreconditionError(f"q={q} is not a prime power")
    (p, f), = fac.items()
    return p, f


def sl_prime_case(l: int, q: int, nonabelian: bool) -> PacketReport:
    """Inner form SL(1, D) of SL(l), index-l division algebra D, residue field of size q.

    The abelian branch uses A = Z/l x Z/l over S = Z/l.
    """
    if not is_prime(l):
        raise PreconditionError(f"l={l} is not prime")
    p, f = _prime_of(q)
    if p == l:
        raise PreconditionError("this case assumes p does not divide l")
    field = PAdicFieldData(p, 1, f, 1 if p == 2 else 0)
    if nonabelian:
        if (q - 1) % l:
            raise InconsistencyError(
                "scenario violates the numerical bound: multiplicity l needs A(G,F) >= l, "
                f"but |F^x/(F^x)^{l}| = {coset_card(field, l)}",
                {"l": l, "q": q})
        a = G.heisenberg(l)
        ext = extension_from_subgroup(a, a.center)
        scen = ParameterScenario(1, l, ext, zeta_exponent=1, field=field,
                                 label=f"SL({l}) q={q} non-abelian")
    else:
        a = G.parse_group(f"C{l}xC{l}")
        gen = l  # (1, 0) in the product numbering
        ext = extension_from_subgroup(a, a.generated_subgroup([gen]), generator=gen)
        scen = ParameterScenario(1, l, ext, zeta_exponent=1, field=field,
                                 label=f"SL({l}) q={q} abelian")
    return analyze_parameter(scen)


def sl4_enumerate(coset: int) -> list[tuple[int, int, int]]:
    """All (|Pi(G*)|, |Pi(G)|, mult) allowed for an inner form of SL(4), p != 2."""
    if coset not in (8, 16):
        raise PreconditionError("|F^x/(F^x)^4| is 8 or 16 when p != 2")
    bound = square_divisor_bound(coset)
    out = []
    for card_star in range(1, coset + 1):
        if coset % card_star:
            continue
        for card_g in range(1, card_star + 1):
            if coset % card_g or card_star % card_g:
                continue
            ratio = card_star // card_g
            mult = isqrt(ratio)
            if mult * mult == ratio and bound % mult == 0:
                out.append((card_star, card_g, mult))
    return out
