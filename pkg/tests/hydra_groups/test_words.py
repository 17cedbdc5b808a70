import random

import pytest

from hydra_groups.utils import AlphabetError, ResourceLimitError
from hydra_groups.words import (
    EMPTY,
    Alphabet,
    Substitution,
    Word,
    apply,
    commutator,
    exponent_sum,
    format_word,
    invert,
    mirror,
    random_word,
    reduce,
    unmirror,
)

from .conftest import w


def test_reduce_cancels_adjacent_pairs():
    assert reduce([("a1", 1), ("a2", 1), ("a2", -1), ("a1", -1)]) == EMPTY
    assert reduce([("a1", 1), ("t", 1), ("t", -1), ("a1", 1)]) == Word((("a1", 1), ("a1", 1)))


def test_reduce_is_idempotent_on_random_words():
    rng = random.Random(7)
    for _ in range(200):
        word = random_word(rng, ["a1", "a2", "t"], rng.randint(0, 30))
        assert reduce(word.letters) == word
        for left, right in zip(word.letters, word.letters[1:]):
            assert not (left[0] == right[0] and left[1] == -right[1])


def test_reduce_guard(small_limits):
    with pytest.raises(ResourceLimitError):
        reduce([("a1", 1)] * 51)
    # cancellation keeps the result under the guard
    assert len(reduce([("a1", 1)] * 50 + [("a1", -1)] * 50)) == 0


def test_invert_and_multiply():
    x = w("a1 t a2^-1")
    assert invert(x) == w("a2 t^-1 a1^-1")
    assert x * invert(x) == EMPTY
    assert invert(invert(x)) == x


def test_commutator_convention():
    assert commutator(w("a2"), w("t")) == w("a2^-1 t^-1 a2 t")


def test_conjugate_convention():
    assert w("a1").conjugate(w("t")) == w("t^-1 a1 t")


def test_exponent_sum():
    assert exponent_sum(w("a1^3 t a1^-1 t^-2"), "a1") == 2
    assert exponent_sum(w("a1^3 t a1^-1 t^-2"), "t") == -1


def test_apply_substitution():
    s = Substitution({"a1": w("a1"), "a2": w("a2 a1"), "t": w("t")})
    assert apply(s, w("a2^-1 a1")) == w("a1^-1 a2^-1 a1")
    assert s(EMPTY) == EMPTY


def test_apply_undefined_letter():
    s = Substitution({"a1": w("a1")})
    with pytest.raises(AlphabetError):
        s(w("a1 t"))


def test_substitution_composition():
    s = Substitution({"a1": w("a1"), "a2": w("a2 a1")})
    double = s.then(s)
    assert double(w("a2")) == w("a2 a1^2")


def test_format_word():
    assert format_word(EMPTY) == "1"
    assert format_word(w("a1 a1 a1 t^-1 ~a2")) == "a1^3 t^-1 ~a2"


def test_mirror_round_trip():
    x = w("a1 t^2 a2^-1")
    assert mirror(x) == w("~a1 ~t^2 ~a2^-1")
    assert unmirror(mirror(x)) == x
    with pytest.raises(AlphabetError):
        unmirror(x)


def test_alphabet_letters():
    alphabet = Alphabet(2, stable_letter=True, mirrored=True)
    assert alphabet.letters() == ["a1", "a2", "t", "p", "~a1", "~a2", "~t"]
    assert "p" in alphabet
    assert "h1" not in alphabet
    with pytest.raises(AlphabetError):
        Alphabet(2).check(w("a3"))


def test_inverse_laws_on_random_words():
    rng = random.Random(31)
    names = ["a1", "a2", "a3", "t"]
    for _ in range(1000):
        x = random_word(rng, names, rng.randint(0, 25))
        assert reduce(x.letters + invert(x).letters) == EMPTY
        assert reduce(invert(x).letters + x.letters) == EMPTY
        assert invert(invert(x)) == x


def test_apply_is_a_homomorphism():
    rng = random.Random(32)
    names = ["a1", "a2", "t"]
    for _ in range(300):
        images = {name: random_word(rng, names, rng.randint(0, 5)) for name in names}
        s = Substitution(images)
        x = random_word(rng, names, rng.randint(0, 12))
        y = random_word(rng, names, rng.randint(0, 12))
        assert apply(s, x * y) == apply(s, x) * apply(s, y)
        assert apply(s, invert(x)) == invert(apply(s, x))


def test_exponent_sum_is_additive():
    rng = random.Random(33)
    names = ["a1", "a2", "t"]
    for _ in range(500):
        raw = [(rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, 20))]
        other = random_word(rng, names, rng.randint(0, 20))
        for name in names:
            # free cancellation never changes exponent sums
            assert exponent_sum(reduce(raw), name) == sum(sign for letter, sign in raw if letter == name)
            assert exponent_sum(reduce(raw) * other, name) == exponent_sum(reduce(raw), name) + exponent_sum(
                other, name
            )
