import pytest

from torusbundle.abelian import FgAbGroup
from torusbundle.action import validate_action
from torusbundle.errors import DomainError
from torusbundle.groups import (
    abelianization,
    check_palindrome,
    commutator_rank_check,
    compute_r,
    conjugacy_classes,
    fixed_rank_exact,
    h1,
    r_closed_form_k1,
)
from torusbundle.linalg import IntMatrix, cokernel

from conftest import block_action, random_valid_action

Z3, Z5 = FgAbGroup.cyclic(3), FgAbGroup.cyclic(5)


def test_h1(example, p5, p3k2):
    assert h1(example) == Z3
    assert h1(p5) == Z5
    assert h1(p3k2) == Z3 * 2


def test_abelianization(example, p5, p3k2):
    assert abelianization(example) == Z3 * 2
    assert abelianization(p5) == Z5 * 2
    assert abelianization(p3k2) == Z3 * 3


def test_commutator_full_rank(example, p5, p7):
    assert commutator_rank_check(example)
    assert commutator_rank_check(p5)
    assert commutator_rank_check(p7)


def test_conjugacy_classes_example(example):
    reps = conjugacy_classes(example)
    assert len(reps) == 3
    assert reps[0].u == (0, 0)
    assert [c.label for c in reps] == [0, 1, 2]


def test_conjugacy_reps_pairwise_inequivalent(p3k2, rng):
    for a in (p3k2, random_valid_action(3, 2, rng)):
        reps = conjugacy_classes(a)
        assert len(reps) == 9
        assert any(all(x == 0 for x in c.u) for c in reps)
        # u ~ w iff u - w lies in (rho - I) Z^n iff appending it as a column
        # leaves the cokernel order unchanged
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                diff = [x - y for x, y in zip(reps[i].u, reps[j].u)]
                cols = a.rho_minus_id.tolist()
                extended = IntMatrix.from_rows([r + [d] for r, d in zip(cols, diff)])
                assert cokernel(extended).torsion_order < 9, "two reps in one class"


def test_conjugacy_reps_deterministic(example):
    assert conjugacy_classes(example) == conjugacy_classes(example)


@pytest.mark.parametrize("p, j, expected", [
    (3, 0, 1), (3, 1, 0), (3, 2, 1), (5, 2, 2), (5, 5, 0), (7, 9, 0),
])
def test_r_closed_form(p, j, expected):
    assert r_closed_form_k1(p, j) == expected


def test_r_closed_form_guards():
    with pytest.raises(DomainError):
        r_closed_form_k1(4, 1)
    with pytest.raises(DomainError):
        r_closed_form_k1(3, -1)


def test_compute_r_examples(example, p5, p3k2):
    assert compute_r(example).values == (1, 0, 1)
    assert compute_r(p5).values == (1, 0, 2, 0, 1)
    # (C(4,j) + 2 (-1)^j c_j) / 3 with c = (1,2,3,2,1)
    assert compute_r(p3k2).values == (1, 0, 4, 0, 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_compute_r_matches_closed_form_k1(p):
    a = block_action(p, 1)
    assert compute_r(a).values == tuple(r_closed_form_k1(p, j) for j in range(p))


def test_fast_r_equals_literal_kernel_rank(rng):
    actions = [block_action(3, 1), block_action(5, 1), block_action(3, 2),
               random_valid_action(3, 2, rng), random_valid_action(5, 1, rng)]
    for a in actions:
        assert compute_r(a).values == tuple(fixed_rank_exact(a, j) for j in range(a.n + 1))


def test_r_palindrome_and_ends(rng):
    for a in [block_action(3, 1), block_action(5, 1), block_action(7, 1),
              block_action(3, 2), random_valid_action(3, 2, rng)]:
        r = compute_r(a)
        assert check_palindrome(r, a)
        assert r[0] == r[a.n] == 1
        assert sum(r) >= 2


def test_r_vanishes_past_p_for_k1():
    for p in (3, 5, 7):
        assert all(r_closed_form_k1(p, j) == 0 for j in range(p, p + 5))


def test_r_invariant_under_conjugation(rng):
    base = block_action(3, 2)
    for _ in range(3):
        assert compute_r(random_valid_action(3, 2, rng)) == compute_r(base)


def test_palindrome_skip_warns_when_det_not_one():
    a = block_action(3, 1)
    fake = type(a)(a.p, a.n, a.k, IntMatrix.from_rows([[0, 1], [1, 0]]), a.rho_minus_id,
                   a.snf_of_rho_minus_id)
    with pytest.warns(UserWarning):
        assert check_palindrome(compute_r(a), fake)


def test_invariants_of_k3():
    a = validate_action(3, IntMatrix.block_diagonal(*[block_action(3, 1).rho] * 3))
    assert h1(a) == Z3 * 3
    assert len(conjugacy_classes(a)) == 27
