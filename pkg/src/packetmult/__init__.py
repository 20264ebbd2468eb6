"""Exact restriction multiplicities for discrete series of GL(m, D) restricted to SL(m, D)."""

from .characters import (CentralCharacterQuery, CharacterTable, character_table,
                         irr_with_central_character)
from .cyclotomic import Cyclotomic
from .engine import (DivisibilityAudit, InconsistencyError, PacketReport, ParameterScenario,
                     PreconditionError, analyze_parameter, divisibility_report,
                     endoscopic_coefficient, formal_degree_ratio, kottwitz_sign,
                     multiplicity_from_packet_cards, sl2_case, sl4_enumerate, sl_prime_case,
                     steinberg_report)
from .extensions import (Cocycle2, CentralExtension, enumerate_central_extensions,
                         extension_from_subgroup, second_cohomology, sl2_finite_subgroup_check)
from .groups import FiniteGroup, GroupError, parse_group
from .padic import PAdicFieldData, coset_card, field_valuation, mu_card, square_divisor_bound

__version__ = "0.1.0"


def build_group(spec) -> FiniteGroup:
    """Alias of :func:`parse_group` that also accepts a JSON table object."""
    if isinstance(spec, dict):
        return FiniteGroup.from_dict(spec)
    return parse_group(spec)


def conjugacy_classes(g: FiniteGroup):
    return g.conjugacy_classes


def center(g: FiniteGroup):
    return g.center
