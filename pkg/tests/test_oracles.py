import time

import pytest

from torusbundle.errors import DomainError, OracleRefusal
from torusbundle.oracles import (
    oracle_closed_form_vs_exterior,
    oracle_conjugacy_by_orbits,
    oracle_fixed_point_count,
    oracle_r_by_characters,
    run_all,
)

from conftest import block_action, random_valid_action


def test_orbits_example(example):
    assert oracle_conjugacy_by_orbits(example, 9) == 3
    assert oracle_conjugacy_by_orbits(example, 3) == 3
    assert oracle_conjugacy_by_orbits(example, 6) == 3


def test_orbits_p3k2(p3k2):
    assert oracle_conjugacy_by_orbits(p3k2, 9) == 9


def test_orbits_p5(p5):
    assert oracle_conjugacy_by_orbits(p5, 25) == 5


def test_orbits_random_conjugate(rng):
    a = random_valid_action(3, 2, rng)
    assert oracle_conjugacy_by_orbits(a, 9, method="enumerate") == 9


def test_orbit_methods_agree(p5, example):
    for a in (p5, example):
        assert oracle_conjugacy_by_orbits(a, method="snf") == oracle_conjugacy_by_orbits(a, method="enumerate")


def test_orbit_oracle_guards(example, p7):
    with pytest.raises(DomainError):
        oracle_conjugacy_by_orbits(example, 4)
    with pytest.raises(OracleRefusal):
        oracle_conjugacy_by_orbits(p7, 49, method="enumerate")
    with pytest.raises(DomainError):
        oracle_conjugacy_by_orbits(example, 9, method="guess")
    assert oracle_conjugacy_by_orbits(p7) == 7


def test_characters(example, p5, p3k2):
    assert oracle_r_by_characters(example).values == (1, 0, 1)
    assert oracle_r_by_characters(p5).values == (1, 0, 2, 0, 1)
    assert oracle_r_by_characters(p3k2).values == (1, 0, 4, 0, 1)


def test_fixed_point_count(example, p5, p3k2):
    assert oracle_fixed_point_count(example) == 3
    assert oracle_fixed_point_count(p5) == 5
    assert oracle_fixed_point_count(p3k2) == 9


def test_closed_form_vs_exterior(example, p7, p3k2):
    out = oracle_closed_form_vs_exterior(example)
    assert all(o.agree for o in out)
    assert [o.actual for o in out if "closed" in o.name] == [1, 0, 1]
    out7 = oracle_closed_form_vs_exterior(p7)
    assert len(out7) == 14 and all(o.agree for o in out7)
    out32 = oracle_closed_form_vs_exterior(p3k2)
    assert len(out32) == 5 and not any("closed" in o.name for o in out32)
    assert all(o.agree for o in out32)


@pytest.mark.parametrize("p, k", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1)])
def test_run_all_agrees(p, k):
    assert all(o.agree for o in run_all(block_action(p, k)))


def test_oracles_within_budget_at_n12(rng):
    a = random_valid_action(7, 2, rng)
    start = time.perf_counter()
    outcomes = run_all(a)
    elapsed = time.perf_counter() - start
    assert all(o.agree for o in outcomes)
    assert elapsed < 10.0, f"oracles took {elapsed:.1f} s"
