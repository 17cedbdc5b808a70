import pytest
from sympy.combinatorics import Permutation

from hydra_groups.const import WITNESS_KIND_AMALGAM, WITNESS_KIND_HNN
from hydra_groups.membership import SubgroupSpec, notinh_witness, pullback_witness
from hydra_groups.quotients import PermHom, closure, enumerate_homs, scan, scan_extension, separates
from hydra_groups.utils import ConsistencyError, Limits, ResourceLimitError, use_limits

from .conftest import w


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 24), (4, 240), (5, 2160)])
def test_hydra2_hom_counts(hydra2, n, count):
    assert sum(1 for _ in enumerate_homs(hydra2, n)) == count


def test_homs_satisfy_relations(hydra2, squared2):
    for spec in (hydra2, squared2):
        homs = list(enumerate_homs(spec, 3))
        assert homs
        assert all(hom.satisfies(spec) for hom in homs)


def test_hydra3_homs_restrict_to_hydra2(hydra2, hydra3):
    def key(hom):
        return tuple(tuple(hom.images[name].array_form) for name in ("a1", "a2", "t"))

    small = {key(hom) for hom in enumerate_homs(hydra2, 3)}
    large = list(enumerate_homs(hydra3, 3))
    assert all(hom.satisfies(hydra3) for hom in large)
    assert {key(hom) for hom in large} <= small


def test_hom_image_follows_word_order(hydra2):
    hom = next(h for h in enumerate_homs(hydra2, 3) if not h.images["a2"].is_Identity)
    x, y = hom.images["a2"], hom.images["t"]
    assert hom.image(w("a2 t")) == x * y
    assert hom.image(w("(a2 t)^-1")) == ~y * ~x


def test_a1_is_separated_in_s3(hydra2, classic2):
    report = scan(hydra2, classic2, w("a1"), 3)
    assert [len(degree.separating) for degree in report.degrees[:2]] == [0, 0]
    assert report.degrees[2].separating
    hom = report.degrees[2].separating[0]
    assert separates(hom, classic2, w("a1"))
    assert report.lines()[-1].startswith("degree=3 homs=24 separating=")


@pytest.mark.parametrize("witness,powers", [
    (pullback_witness(), (1, 1)),
    (notinh_witness(), (1, 0)),
])
def test_witnesses_are_never_separated(hydra2, witness, powers):
    report = scan(hydra2, SubgroupSpec(powers), witness, 5)
    assert report.separating == []
    assert [degree.homs for degree in report.degrees] == [1, 4, 24, 240, 2160]


@pytest.mark.slow
def test_witness_not_separated_in_s6(hydra2, classic2):
    report = scan(hydra2, classic2, pullback_witness(), 6)
    assert report.degrees[-1].degree == 6
    assert report.separating == []


def test_member_is_never_separated(hydra2, classic2):
    assert scan(hydra2, classic2, w("a2 t a1 t"), 3).separating == []


def test_scan_cross_checks_membership(hydra2, classic2, monkeypatch):
    # a separating hom for a certified member can only mean a bug somewhere
    monkeypatch.setattr("hydra_groups.quotients._outside", lambda generators, target: True)
    with pytest.raises(ConsistencyError):
        scan(hydra2, classic2, w("a1 t"), 1)


def test_closure():
    group = closure([Permutation([1, 0, 2]), Permutation([1, 2, 0])])
    assert len(group) == 6
    assert len(closure([Permutation([1, 2, 0])])) == 3
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(ValueError):
        closure([Permutation([1, 0]), Permutation([1, 2, 0])])


def test_degree_guards(hydra2):
    with use_limits(Limits(max_degree=3)):
        with pytest.raises(ResourceLimitError):
            list(enumerate_homs(hydra2, 4))
    with use_limits(Limits(max_candidates=100)):
        with pytest.raises(ResourceLimitError):
            list(enumerate_homs(hydra2, 3))
    with pytest.raises(ValueError):
        list(enumerate_homs(hydra2, 0))


@pytest.mark.parametrize("kind", [WITNESS_KIND_HNN, WITNESS_KIND_AMALGAM])
def test_extension_witness_survives_nowhere(hydra2, classic2, kind):
    report = scan_extension(kind, hydra2, classic2, pullback_witness(), 3)
    assert report.survivals == 0
    assert all(degree.quotients > 0 for degree in report.degrees)


@pytest.mark.parametrize("kind", [WITNESS_KIND_HNN, WITNESS_KIND_AMALGAM])
def test_extension_non_member_survives(hydra2, classic2, kind):
    report = scan_extension(kind, hydra2, classic2, w("a1"), 3)
    assert report.survivals > 0
    assert report.lines()[0] == f"{kind} witness"


def test_extension_kind(hydra2, classic2):
    with pytest.raises(ValueError):
        scan_extension("free", hydra2, classic2, w("a1"), 2)


def test_reported_homs_are_rechecked(hydra2, classic2, monkeypatch):
    monkeypatch.setattr(PermHom, "satisfies", lambda self, spec: False)
    with pytest.raises(ConsistencyError):
        scan(hydra2, classic2, w("a1"), 3)
