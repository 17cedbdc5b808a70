import pytest

from hydra_groups.expressions import parse_word
from hydra_groups.groups import GroupSpec, validate_spec
from hydra_groups.membership import SubgroupSpec
from hydra_groups.utils import Limits, use_limits
from hydra_groups.words import EMPTY


@pytest.fixture
def hydra2():
    return GroupSpec.hydra(2)


@pytest.fixture
def hydra3():
    return GroupSpec.hydra(3)


@pytest.fixture
def classic2():
    return SubgroupSpec((1, 1))


@pytest.fixture
def bent2():
    """H_2(1, 0)"""
    return SubgroupSpec((1, 0))


@pytest.fixture
def squared2():
    """G_2 with a_2^t = a_2 a_1^2"""
    return validate_spec(2, [EMPTY, parse_word("a1^2")])


@pytest.fixture
def small_limits():
    with use_limits(Limits(max_length=50, max_exponent=1000, window=4)) as limits:
        yield limits


def w(text):
    return parse_word(text)
