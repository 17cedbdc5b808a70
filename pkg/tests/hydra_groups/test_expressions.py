import random

import pytest

from hydra_groups.expressions import parse, parse_word
from hydra_groups.utils import ExpressionSyntaxError
from hydra_groups.words import EMPTY, Word, format_word, random_word


def test_power_expands_before_reduction():
    letters = list(parse("(a1 t)^3").letters())
    assert letters == [("a1", 1), ("t", 1)] * 3


def test_negative_power():
    assert parse_word("(a1 t)^-2") == parse_word("t^-1 a1^-1 t^-1 a1^-1")


def test_conjugate_and_commutator():
    assert parse_word("a1^t") == parse_word("t^-1 a1 t")
    assert parse_word("[a2, t]") == parse_word("a2^-1 t^-1 a2 t")
    assert parse_word("[t^-1,a2^-2 t^-1 a2^2]") == parse_word("t a2^-2 t a2^2 t^-1 a2^-2 t^-1 a2^2")


def test_identity_and_empty():
    assert parse_word("1") == EMPTY
    assert parse_word("") == EMPTY
    assert parse_word("a1 a1^-1") == EMPTY


def test_extension_letters():
    assert parse_word("p ~a1 h2^-1") == Word((("p", 1), ("~a1", 1), ("h2", -1)))


def test_format_parses_back():
    for text in ["a1^3 t^-1 ~a2", "t a2^-2 t", "1", "h1 h2^-1 h1^5"]:
        assert format_word(parse_word(text)) == text


@pytest.mark.parametrize("text", ["a1^", "(a1", "[a1 a2]", "x1", "a1 ^ ^ 2"])
def test_syntax_errors(text):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse(text)
    assert err.value.position >= 0


def test_format_parses_back_on_random_words():
    rng = random.Random(41)
    names = ["a1", "a2", "a3", "t", "p", "~a1", "~t", "h1", "h2"]
    for _ in range(1000):
        word = random_word(rng, names, rng.randint(0, 20))
        assert parse_word(format_word(word)) == word
