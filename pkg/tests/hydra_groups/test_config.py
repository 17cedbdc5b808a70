from pathlib import Path

import pytest

from hydra_groups.config import (
    dump_spec_text,
    limits_from_options,
    load_spec_file,
    parse_spec_text,
    resolve_group,
    resolve_subgroup,
)
from hydra_groups.groups import GroupSpec
from hydra_groups.membership import SubgroupSpec
from hydra_groups.utils import SpecError

from .conftest import w

HYDRA3_TEXT = 'k = 3\nw2 = "a1"\nw3 = "a2"\nr = [1, 1, 1]\n'


def test_canonical_text(hydra3):
    assert dump_spec_text(hydra3, SubgroupSpec((1, 1, 1))) == HYDRA3_TEXT
    assert parse_spec_text(HYDRA3_TEXT) == (hydra3, SubgroupSpec((1, 1, 1)))


def test_comments_and_commutator_keys(squared2):
    text = """
    # G_2 with a doubled twist
    k = 2
    c2 = "a1^2"   # [a2, t] = a1^2
    """
    spec, sub = parse_spec_text(text)
    assert spec == squared2
    assert sub is None
    assert dump_spec_text(spec) == 'k = 2\nw2 = "a1^2"\n'


def test_twist_must_use_lower_letters():
    with pytest.raises(SpecError):
        parse_spec_text('k = 2\nw2 = "a2"')
    with pytest.raises(SpecError):
        parse_spec_text('k = 2\nw1 = "a1"')


@pytest.mark.parametrize("text", [
    "k = 2\nr = [1, -1]",
    "k = 2\nr = [1]",
    "k = 0",
    "k = 2\nfoo = 1",
    'k = 2\nw3 = "a1"',
    'k = 2\nw2 = "a1"\nc2 = "a1"',
    "k = 2\nk = 2",
    "k = 2\nw2 = a1",
    "k 2",
    "r = [1, 1]",
])
def test_invalid_spec_text(text):
    with pytest.raises(SpecError):
        parse_spec_text(text)


def test_load_and_resolve(tmp_path, hydra3):
    path = tmp_path / "hydra3.conf"
    path.write_text(HYDRA3_TEXT)
    assert load_spec_file(str(path)) == (hydra3, SubgroupSpec((1, 1, 1)))

    spec, default = resolve_group(str(path))
    assert spec == hydra3
    assert resolve_subgroup(spec, None, default) == default
    assert resolve_subgroup(spec, "r=2,0,2") == SubgroupSpec((2, 0, 2))
    assert resolve_subgroup(spec, str(path)) == SubgroupSpec((1, 1, 1))

    with pytest.raises(SpecError):
        resolve_subgroup(GroupSpec.hydra(2), str(path))
    with pytest.raises(SpecError):
        resolve_subgroup(spec, "r=1,x")


def test_resolve_presets(hydra2):
    assert resolve_group("hydra2") == (hydra2, None)
    assert resolve_subgroup(hydra2, None) == SubgroupSpec((1, 1))
    assert resolve_subgroup(hydra2, "r = [1, 0]") == SubgroupSpec((1, 0))
    with pytest.raises(SpecError):
        resolve_group("lamplighter")


def test_options():
    limits = limits_from_options({"window": "8", "max_length": 100})
    assert limits.window == 8
    assert limits.max_length == 100
    assert limits.max_degree == 6
    with pytest.raises(SpecError):
        limits_from_options({"window": -1})
    with pytest.raises(SpecError):
        limits_from_options({"colour": "blue"})


def test_twist_words_parse_with_the_expression_grammar():
    spec, _ = parse_spec_text('k = 3\nw2 = "a1^2"\nw3 = "(a1 a2)^2"')
    assert spec.twist(3) == w("a1 a2 a1 a2")
    assert spec.name == "G3(1, a1^2, a1 a2 a1 a2)"
    with pytest.raises(SpecError):
        parse_spec_text('k = 3\nw3 = "[a1, a2]"')


@pytest.mark.parametrize("name", ["hydra3.conf", "squared2.conf", "open3.conf"])
def test_shipped_spec_files(name):
    path = Path(__file__).parents[2] / "data" / "specs" / name
    spec, sub = load_spec_file(str(path))
    assert sub is not None
    assert parse_spec_text(dump_spec_text(spec, sub)) == (spec, sub)
