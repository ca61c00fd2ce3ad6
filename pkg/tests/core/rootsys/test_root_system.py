from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.rootsys.domain.cartan import CartanType, group_order, positive_root_count
from core.rootsys.domain.exceptions import CartanTypeError, CoweightError, RootSystemMismatchError
from core.rootsys.domain.root_system import (
    CoweightQ,
    build_root_system,
    depth,
    dominance_le,
    is_k_regular,
    pairing,
    rho_pairing,
)

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


def system(text: str):
    return build_root_system(CartanType.parse(text))


@pytest.mark.parametrize("text", ALL_TYPES)
def test_positive_root_count_matches_closure(text: str) -> None:
    cartan_type = CartanType.parse(text)
    assert system(text).n_positive == positive_root_count(cartan_type)


def test_a2_roots() -> None:
    a2 = system("A2")
    assert set(a2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert a2.highest_root.coords == (1, 1)


def test_g2_highest_root() -> None:
    g2 = system("G2")
    assert g2.n_positive == 6
    assert g2.highest_root.coords == (3, 2)


def test_e8_highest_root() -> None:
    assert system("E8").highest_root.coords == (2, 3, 4, 6, 5, 4, 3, 2)


def test_group_orders() -> None:
    assert group_order(CartanType.parse("A3")) == 24
    assert group_order(CartanType.parse("E6")) == 51_840
    assert group_order(CartanType.parse("F4")) == 1_152


@pytest.mark.parametrize("text", ["D3", "E9", "G3", "X2", "A0", "B1"])
def test_invalid_cartan_type_rejected(text: str) -> None:
    with pytest.raises(CartanTypeError):
        CartanType.parse(text)


def test_affine_suffix_accepted() -> None:
    assert CartanType.parse("c2aff") == CartanType("C", 2)
    assert str(CartanType.parse(" a3 ")) == "A3"


def test_pairing_with_fundamental_coweights() -> None:
    a2 = system("A2")
    assert pairing(a2.simple_root(1), a2.fundamental_coweight(1)) == 1
    assert pairing(a2.simple_root(2), a2.fundamental_coweight(1)) == 0
    assert pairing(a2.highest_root, a2.rho_check) == 2


def test_pairing_rejects_mismatched_systems() -> None:
    with pytest.raises(RootSystemMismatchError):
        pairing(system("A2").simple_root(1), system("B2").rho_check)


def test_rho_pairing_of_rho_check() -> None:
    assert rho_pairing(system("A2").rho_check) == 2


def test_depth_and_regularity() -> None:
    a2, g2 = system("A2"), system("G2")
    assert depth(a2.rho_check * 3) == 3
    assert is_k_regular(a2.rho_check * 3, 2)
    assert depth(a2.fundamental_coweight(1)) == 0
    assert not is_k_regular(a2.fundamental_coweight(1), 0)
    assert depth(g2.rho_check * 2) == 2
    assert not is_k_regular(g2.rho_check * 2, 2)


def test_depth_of_non_dominant_rejected() -> None:
    a2 = system("A2")
    with pytest.raises(CoweightError):
        depth(-a2.rho_check)


def test_dominance_order() -> None:
    a2 = system("A2")
    assert dominance_le(a2.zero, CoweightQ(a2, (Fraction(1), Fraction(1))))
    first, second = a2.fundamental_coweight(1), a2.fundamental_coweight(2)
    assert not dominance_le(first, second)
    assert not dominance_le(second, first)


def test_parse_coweight_bases() -> None:
    a2 = system("A2")
    assert CoweightQ.parse(a2, "3,3", "fundamental").coords == (3, 3)
    assert CoweightQ.parse(a2, "1,0", "fundamental").coords == (Fraction(2, 3), Fraction(1, 3))
    assert CoweightQ.parse(a2, "1/2, 1").coords == (Fraction(1, 2), Fraction(1))


@pytest.mark.parametrize("text", ["1", "1,2,3", "a,b", "1/0,1"])
def test_parse_coweight_rejects_malformed(text: str) -> None:
    with pytest.raises(CoweightError):
        CoweightQ.parse(system("A2"), text)


def test_integrality_depends_on_lattice() -> None:
    a2 = system("A2")
    first = a2.fundamental_coweight(1)
    assert first.is_integral("adjoint")
    assert not first.is_integral("sc")
    assert a2.rho_check.is_integral("sc")


@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4))
def test_fundamental_coordinates_round_trip(values: list[int]) -> None:
    d4 = system("D4")
    coweight = CoweightQ.from_fundamental(d4, values)
    assert coweight.fundamental == tuple(values)
    assert rho_pairing(coweight * 2) == 2 * rho_pairing(coweight)
