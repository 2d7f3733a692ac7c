from math import comb

import pytest

from torusbundle.abelian import FgAbGroup
from torusbundle.errors import DomainError, UnsupportedDecoration
from torusbundle.groups import compute_r
from torusbundle.ltheory import (
    Decoration,
    Ring,
    l_of_Z,
    l_of_Zn,
    l_of_Zp_decorated,
    l_sum,
    l_table,
    ls_of_ZGamma,
    reduced_ls_of_ZP,
    rep_ring_rank,
    whitehead,
)

from conftest import block_action

Z, Z2, ZERO = FgAbGroup.free(1), FgAbGroup.cyclic(2), FgAbGroup()


def expand(m, multiplicities, extra_free=0):
    """Count Z and Z/2 summands of sum_i L_{m-i}(Z)^c_i term by term."""
    free, twos = extra_free, 0
    for i, c in enumerate(multiplicities):
        residue = (m - i) % 4
        if residue == 0:
            free += c
        elif residue == 2:
            twos += c
    return FgAbGroup(free, (2,) * twos)


@pytest.mark.parametrize("m, expected", [
    (0, Z), (1, ZERO), (2, Z2), (3, ZERO), (-1, ZERO), (-2, Z2), (4, Z), (-4, Z),
])
def test_l_of_Z(m, expected):
    assert l_of_Z(m) == expected


@pytest.mark.parametrize("m, n, expected", [
    (0, 0, Z),
    (0, 2, Z + Z2),
    (1, 1, Z),
    (3, 2, Z2 * 2),
])
def test_l_of_Zn(m, n, expected):
    assert l_of_Zn(m, n) == expected


@pytest.mark.parametrize("m", range(-8, 8))
@pytest.mark.parametrize("n", range(0, 7))
def test_l_of_Zn_matches_expansion(m, n):
    assert l_of_Zn(m, n) == expand(m, [comb(n, i) for i in range(n + 1)])


def test_l_of_Zp_decorated():
    assert l_of_Zp_decorated(0, 3, "p") == FgAbGroup.free(2)
    assert l_of_Zp_decorated(1, 3, Decoration.MINUS_INFINITY) == ZERO
    assert l_of_Zp_decorated(2, 5, Decoration.MINUS_I) == FgAbGroup(2, (2,))
    for deco in ("s", "h"):
        with pytest.raises(UnsupportedDecoration):
            l_of_Zp_decorated(0, 3, deco)


def test_reduced_ls_of_ZP():
    assert reduced_ls_of_ZP(0, 3) == Z
    assert reduced_ls_of_ZP(2, 7) == FgAbGroup.free(3)
    for p in (3, 5, 7, 11):
        assert reduced_ls_of_ZP(1, p) == ZERO
        assert reduced_ls_of_ZP(-3, p) == ZERO


def test_ls_of_ZGamma_example(example):
    assert ls_of_ZGamma(example, 0) == FgAbGroup(4, (2,))
    assert ls_of_ZGamma(example, 1) == ZERO
    assert ls_of_ZGamma(example, 2) == FgAbGroup(4, (2,))
    assert ls_of_ZGamma(example, 3) == ZERO


@pytest.mark.parametrize("p, k", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_ls_of_ZGamma_matches_expansion(p, k):
    a = block_action(p, k)
    r = compute_r(a).values
    for m in range(-8, 8):
        extra = p ** k * (p - 1) // 2 if m % 2 == 0 else 0
        assert ls_of_ZGamma(a, m) == expand(m, r, extra)


def test_whitehead(example, p5, p3k2):
    assert whitehead(example, 1) == ZERO
    assert whitehead(p5, 1) == FgAbGroup.free(5)
    assert whitehead(p3k2, 1) == ZERO
    assert whitehead(p5, 0) == FgAbGroup(symbolic_summands=("C(Z[zeta_5])",) * 5)
    assert str(whitehead(example, 0)) == "C(Z[zeta_3])^3"
    for m in (-1, -2, -7):
        assert whitehead(p5, m) == ZERO
    with pytest.raises(DomainError):
        whitehead(p5, 2)


def test_whitehead_p7_k1(p7):
    assert whitehead(p7, 1) == FgAbGroup.free(7 * 2)


@pytest.mark.parametrize("p, rank", [(3, 1), (5, 2), (7, 3)])
def test_rep_ring_rank(p, rank):
    assert rep_ring_rank(p, 1) == rep_ring_rank(p, -1) == rank


def test_rep_ring_rank_guards():
    with pytest.raises(DomainError):
        rep_ring_rank(3, 0)
    with pytest.raises(DomainError):
        rep_ring_rank(9, 1)


@pytest.mark.parametrize("p, k", [(3, 1), (5, 1), (3, 2)])
def test_four_periodicity(p, k):
    a = block_action(p, k)
    for m in range(-8, 8):
        assert l_of_Z(m) == l_of_Z(m + 4)
        assert l_of_Zn(m, a.n) == l_of_Zn(m + 4, a.n)
        assert l_of_Zp_decorated(m, p, "minus_infinity") == l_of_Zp_decorated(m + 4, p, "minus_infinity")
        assert reduced_ls_of_ZP(m, p) == reduced_ls_of_ZP(m + 4, p)
        assert ls_of_ZGamma(a, m) == ls_of_ZGamma(a, m + 4)


@pytest.mark.parametrize("p, k", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_fixed_part_bounded_by_full_l_of_Zn(p, k):
    a = block_action(p, k)
    r = compute_r(a).values
    assert sum(r) <= 2 ** a.n
    for m in range(0, 4):
        assert l_sum(m, r).free_rank <= l_of_Zn(m, a.n).free_rank


def test_reduced_rank_matches_rep_ring():
    for p in (3, 5, 7, 11):
        for m in (0, 2, -2, 4):
            assert reduced_ls_of_ZP(m, p).free_rank == rep_ring_rank(p, 1)


def test_l_table(example):
    rows = l_table(example, range(0, 4))
    assert len(rows) == 20
    gamma = [e for e in rows if e.ring_label is Ring.Z_OF_GAMMA and e.decoration is Decoration.S]
    assert [str(e.value) for e in gamma] == ["Z^4 + Z/2", "0", "Z^4 + Z/2", "0"]
