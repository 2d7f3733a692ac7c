import random

import pytest

from torusbundle.action import regular_representation_action, validate_action
from torusbundle.linalg import IntMatrix, inverse_unimodular

EXAMPLE_RHO = IntMatrix.from_rows([[0, -1], [1, -1]])


def random_unimodular(n, rng, steps=12):
    g = IntMatrix.identity(n).tolist()
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            g[r][j] += c * g[r][i]
    return IntMatrix.from_rows(g)


def conjugate(rho, g):
    return g @ rho @ inverse_unimodular(g)


def block_action(p, k):
    c = regular_representation_action(p)
    return validate_action(p, IntMatrix.block_diagonal(*[c] * k))


def random_valid_action(p, k, rng):
    base = IntMatrix.block_diagonal(*[regular_representation_action(p)] * k)
    return validate_action(p, conjugate(base, random_unimodular(base.rows, rng)))


@pytest.fixture
def example():
    return validate_action(3, EXAMPLE_RHO)


@pytest.fixture
def p5():
    return validate_action(5, regular_representation_action(5))


@pytest.fixture
def p7():
    return validate_action(7, regular_representation_action(7))


@pytest.fixture
def p3k2():
    return validate_action(3, IntMatrix.block_diagonal(EXAMPLE_RHO, EXAMPLE_RHO))


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
