from unittest.mock import patch

from hydra_groups import identities
from hydra_groups.groups import a, t
from hydra_groups.words import Substitution


def test_all_items_pass():
    report = identities.run_suite()
    failing = [result.line() for result in report.results if not result.passed]
    assert failing == []
    assert len(report.results) == 16
    assert report.lines()[-1] == "16/16 items passed"


def test_select_by_tag_and_key():
    assert [item.id for item in identities.select_items("phi")] == [1, 2, 3, 4, 5]
    assert [item.id for item in identities.select_items("witness")] == [14, 16]
    assert [item.id for item in identities.select_items("t-powers-outside")] == [15]
    assert identities.select_items("nothing") == []


def test_broken_automorphism_is_reported(caplog):
    broken = Substitution({"a1": a(1), "a2": a(2, -2) * t() * a(2), "t": a(1) * t()})
    with patch.object(identities, "PHI", broken):
        report = identities.run_suite("phi-surjective")
    assert not report.passed
    assert report.lines()[0].startswith("FAIL  2 phi-surjective")
    assert "identity checks failed" in caplog.text


def test_broken_automorphism_fails_the_relator_check():
    broken = Substitution({"a1": a(1), "a2": a(2, -2) * t() * a(2), "t": a(1) * t()})
    with patch.object(identities, "PHI", broken):
        report = identities.run_suite("phi-endomorphism")
    (result,) = report.results
    assert not result.passed
    assert result.failures[0].startswith("[phi(a2), phi(t)] = phi(a1)")
    assert report.lines()[-1] == "0/1 items passed"
