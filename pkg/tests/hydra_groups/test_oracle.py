import random

import pytest

from hydra_groups.groups import NormalForm, normalize
from hydra_groups.membership import SubgroupSpec, Verdict, member
from hydra_groups.oracle import distortion_table, enumerate_subgroup, oracle_member
from hydra_groups.utils import Limits, ResourceLimitError, use_limits
from hydra_groups.words import EMPTY, invert, random_word

from .conftest import w


def test_ball_of_radius_one(hydra2, classic2):
    table = enumerate_subgroup(hydra2, classic2, 1)
    assert len(table) == 5
    assert table.entries[NormalForm(0, EMPTY)] == EMPTY
    assert table.entries[normalize(hydra2, w("a2 t"))] == w("h2")
    assert table.entries[normalize(hydra2, w("t^-1 a1^-1"))] == w("h1^-1")


def test_distortion_rows(hydra2, classic2):
    rows = distortion_table(enumerate_subgroup(hydra2, classic2, 2))
    assert [row.length for row in rows] == [0, 1, 2]
    assert (rows[0].count, rows[0].min_ambient, rows[0].max_ambient) == (1, 0, 0)
    first = rows[1]
    assert (first.count, first.min_ambient, first.max_ambient) == (4, 2, 3)
    assert first.mean_ambient == pytest.approx(2.25)
    assert str(first) == "l=1 count=4 min=2 max=3 mean=2.250"


def test_certificates_are_shortest(hydra2, classic2):
    table = enumerate_subgroup(hydra2, classic2, 3)
    for depth, certificate, nf in table.records():
        assert len(certificate) == depth
        assert normalize(hydra2, classic2.expand(certificate)) == nf


@pytest.mark.parametrize("powers,bound", [((1, 1), 6), ((1, 0), 6)])
def test_oracle_agrees_with_membership(hydra2, powers, bound):
    sub = SubgroupSpec(powers)
    table = enumerate_subgroup(hydra2, sub, bound)
    for nf in table.entries:
        assert member(hydra2, sub, nf.word()).verdict is Verdict.MEMBER

    rng = random.Random(6)
    for _ in range(300):
        certificate = random_word(rng, ["h1", "h2"], rng.randint(0, bound))
        answer = oracle_member(table, sub.expand(certificate))
        assert answer.found
        assert str(answer).startswith("yes: ")

    for _ in range(300):
        g = random_word(rng, ["a1", "a2", "t"], rng.randint(0, 8))
        result = member(hydra2, sub, g)
        answer = oracle_member(table, g)
        if answer.found:
            assert result.verdict is Verdict.MEMBER
        elif result.is_member:
            assert len(result.certificate) > bound
        else:
            assert str(answer) == "unknown"


@pytest.mark.parametrize("r", [1, 2, 3])
def test_no_nontrivial_t_power_in_the_ball(hydra2, r):
    table = enumerate_subgroup(hydra2, SubgroupSpec((r, 0)), 8)
    assert len(table) == 13121
    for nf in table.entries:
        assert nf.u or nf.t_exp == 0


@pytest.mark.parametrize("powers", [(1, 1), (1, 0), (2, 1)])
def test_ball_is_closed_under_inverses(hydra2, powers):
    table = enumerate_subgroup(hydra2, SubgroupSpec(powers), 5)
    for depth, certificate, nf in table.records():
        inverse = normalize(hydra2, invert(nf.word()))
        assert inverse in table
        assert table.depths[inverse] == depth
        assert table.entries[inverse] == invert(certificate)


def test_entry_cap(hydra2, classic2):
    with use_limits(Limits(max_entries=10)):
        with pytest.raises(ResourceLimitError):
            enumerate_subgroup(hydra2, classic2, 3)
    with pytest.raises(ValueError):
        enumerate_subgroup(hydra2, classic2, -1)
