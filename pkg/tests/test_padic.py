import pytest
from hypothesis import given, strategies as st

from packetmult.padic import (PAdicFieldData, coset_card, field_valuation, is_wild, mu_card,
                              square_divisor_bound)

from oracles import coset_index_qp, roots_of_unity_qp


def F(p, e=1, f=1, a=0):
    return PAdicFieldData(p, e, f, a)


def test_field_valuation_examples():
    assert field_valuation(F(2, a=1), 8) == 3
    assert field_valuation(F(2, e=2, a=1), 2) == 2
    assert field_valuation(F(2, a=1), 3) == 0


def test_field_valuation_zero():
    with pytest.raises(ValueError):
        field_valuation(F(5), 0)


def test_mu_card_examples():
    assert mu_card(F(5), 2) == 2
    assert mu_card(F(3), 4) == 2
    assert mu_card(F(7), 1) == 1


def test_coset_card_examples():
    assert coset_card(F(5), 2) == 4
    assert coset_card(F(2, a=1), 2) == 8
    assert coset_card(F(11), 1) == 1


@pytest.mark.parametrize("q_field,expected", [
    (F(5), 16), (F(13), 16), (F(3, f=2), 16),     # q = 1 mod 4
    (F(3), 8), (F(7), 8), (F(11), 8), (F(3, f=3), 8),  # q = 3 mod 4
])
def test_coset_card_n4_by_q_mod_4(q_field, expected):
    assert coset_card(q_field, 4) == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("n", range(1, 13))
def test_qp_against_unit_group_enumeration(p, n):
    field = PAdicFieldData.qp(p)
    assert coset_card(field, n) == coset_index_qp(p, n)
    assert mu_card(field, n) == roots_of_unity_qp(p, n)


def test_square_divisor_bound_examples():
    assert square_divisor_bound(8) == 2
    assert square_divisor_bound(16) == 4
    assert square_divisor_bound(1) == 1
    assert square_divisor_bound(72) == 6


@given(st.integers(1, 10 ** 6))
def test_square_divisor_bound_is_maximal(c):
    a = square_divisor_bound(c)
    assert c % (a * a) == 0
    # every k with k^2 | c divides a, so no larger k works
    assert all(c % (k * k) for k in range(a + 1, min(a * 3, 2000)))


fields = st.builds(PAdicFieldData, p=st.sampled_from([2, 3, 5, 7, 11, 13]),
                   e=st.integers(1, 4), f=st.integers(1, 3), a=st.integers(0, 2))


@given(fields, st.integers(1, 60))
def test_mu_and_coset_divisibility(field, n):
    mu = mu_card(field, n)
    assert n % mu == 0
    c = coset_card(field, n)
    assert c % mu == 0
    assert c == n * mu * field.q ** field_valuation(field, n)


def test_parse_descriptor():
    assert PAdicFieldData.parse("p=5,e=1,f=1,a=0") == F(5)
    assert PAdicFieldData.parse(" p=2, a=1 ") == F(2, a=1)
    with pytest.raises(ValueError, match="position 4"):
        PAdicFieldData.parse("p=5,x=1")
    with pytest.raises(ValueError):
        PAdicFieldData.parse("p=6")


def test_wild_flag():
    assert is_wild(F(2, e=2, a=1), 4)
    assert not is_wild(F(2, a=1), 4)
    assert not is_wild(F(3, e=2), 4)
