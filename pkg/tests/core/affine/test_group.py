import pytest

from core.affine.domain.admissible import two_rho_pairing
from core.affine.domain.exceptions import AffineElemError, NonIntegralCoweightError
from core.shared_kernel.units_of_work.workspace import Workspace


def test_translation_length_a1(a1: Workspace) -> None:
    affine = a1.affine_engine
    t = affine.translation((2,))
    assert t.length == 2
    assert t == affine.parse_word("0.1")
    assert affine.translation((-2,)) == affine.parse_word("1.0")


@pytest.mark.parametrize("fundamental", [(1, 1), (2, 1), (3, 0), (4, 2)])
def test_dominant_translation_length(a2: Workspace, fundamental: tuple[int, int]) -> None:
    affine = a2.affine_engine
    assert affine.translation(fundamental).length == two_rho_pairing(a2.roots_engine, fundamental)


def test_product_law(b2: Workspace) -> None:
    affine = b2.affine_engine
    weyl = b2.weyl_engine
    u, v = weyl.parse("1.2"), weyl.parse("2")
    left = affine.translation((2, 0)) * affine.finite(u)
    right = affine.translation((0, 2)) * affine.finite(v)
    moved = u.act_fundamental((0, 2))
    product = left * right
    assert product.finite == u * v
    assert product.translation == tuple(a + int(b) for a, b in zip((2, 0), moved, strict=True))


def test_length_parity_and_subadditivity(a2: Workspace) -> None:
    affine = a2.affine_engine
    words = ["0", "1.0", "2.1.0", "0.1.2.0", "1.2.1.0.2"]
    elements = [affine.parse_word(word) for word in words]
    for x in elements:
        for y in elements:
            product = x * y
            assert product.length <= x.length + y.length
            assert product.length % 2 == (x.length + y.length) % 2


def test_simple_reflections_have_length_one(g2: Workspace) -> None:
    affine = g2.affine_engine
    assert [affine.simple(k).length for k in affine.nodes] == [1, 1, 1]
    assert all((affine.simple(k) * affine.simple(k)) == affine.identity for k in affine.nodes)


def test_inverse(c2: Workspace) -> None:
    affine = c2.affine_engine
    x = affine.parse_word("0.1.2.1")
    assert x * x.inverse == affine.identity
    assert x.inverse.length == x.length


def test_word_round_trip(a2: Workspace) -> None:
    affine = a2.affine_engine
    x = affine.translation((1, 1))
    letters, tau = affine.word(x)
    assert len(letters) == x.length
    assert affine.from_word(letters, tau) == x


def test_bruhat_order_a1(a1: Workspace) -> None:
    affine = a1.affine_engine
    t, t_minus = affine.translation((2,)), affine.translation((-2,))
    assert affine.bruhat_le(affine.identity, t)
    assert affine.bruhat_le(affine.simple(0), t)
    assert not affine.bruhat_le(t, t_minus)
    assert not affine.bruhat_le(t_minus, t)


def test_bruhat_order_across_components(a1: Workspace) -> None:
    affine = a1.affine_engine
    verdict = affine.bruhat_le(affine.identity, affine.translation((1,)))
    assert not verdict
    assert not verdict.same_component


def test_translation_lattice(open_workspace) -> None:
    sc = open_workspace("A1", lattice="sc").affine_engine
    with pytest.raises(NonIntegralCoweightError):
        sc.translation((1,))
    assert sc.translation((2,)).length == 2


@pytest.mark.parametrize("word", ["0.x", "3", "0.1.4"])
def test_parse_word_rejects(a2: Workspace, word: str) -> None:
    with pytest.raises(AffineElemError):
        a2.affine_engine.parse_word(word)


def test_min_coset_rep(a1: Workspace) -> None:
    affine = a1.affine_engine
    assert affine.is_min_coset_rep(affine.parse_word("0.1"), [1])
    assert not affine.is_min_coset_rep(affine.parse_word("1.0"), [1])
