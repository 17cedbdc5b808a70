"""Freely reduced words and letter substitutions."""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .const import (
    GENERATOR_PREFIX,
    SUBGROUP_PREFIX,
    MIRROR_PREFIX,
    LETTER_T,
    LETTER_P,
)
from .utils import AlphabetError, SpecError, current_limits, checked_length

_LOGGER = logging.getLogger(__name__)

Letter = tuple[str, int]


def generator_name(i: int) -> str:
    return f"{GENERATOR_PREFIX}{i}"


def subgroup_letter(i: int) -> str:
    return f"{SUBGROUP_PREFIX}{i}"


def generator_index(name: str) -> int | None:
    """Index i for a letter named a<i>, None for anything else"""
    if name.startswith(GENERATOR_PREFIX) and name[len(GENERATOR_PREFIX):].isdigit():
        return int(name[len(GENERATOR_PREFIX):])
    return None


def is_mirrored(name: str) -> bool:
    return name.startswith(MIRROR_PREFIX)


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word; build instances with `reduce` or the helpers below"""
    letters: tuple[Letter, ...] = ()

    @classmethod
    def generator(cls, name: str, exponent: int = 1) -> Word:
        checked_length(abs(exponent))
        sign = 1 if exponent > 0 else -1
        return cls(((name, sign),) * abs(exponent))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __mul__(self, other: Word) -> Word:
        return reduce(itertools.chain(self.letters, other.letters))

    def __pow__(self, exponent: int) -> Word:
        return power(self, exponent)

    def __str__(self) -> str:
        return format_word(self)

    def inverse(self) -> Word:
        return invert(self)

    def conjugate(self, by: Word) -> Word:
        """by^-1 self by"""
        return reduce(itertools.chain(invert(by).letters, self.letters, by.letters))

    def names(self) -> set[str]:
        return {name for name, _ in self.letters}


EMPTY = Word()


def reduce(raw: Iterable[Letter]) -> Word:
    """Freely reduce a raw letter sequence"""
    limit = current_limits().max_length
    stack: list[Letter] = []
    for name, sign in raw:
        if sign not in (1, -1):
            raise ValueError(f"letter {name} has sign {sign}")
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
            continue
        stack.append((name, sign))
        if len(stack) > limit:
            checked_length(len(stack))
    return Word(tuple(stack))


def invert(w: Word) -> Word:
    return Word(tuple((name, -sign) for name, sign in reversed(w.letters)))


def power(w: Word, exponent: int) -> Word:
    if exponent < 0:
        w, exponent = invert(w), -exponent
    checked_length(len(w) * exponent)
    return reduce(itertools.chain.from_iterable(itertools.repeat(w.letters, exponent)))


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x^-1 y^-1 x y"""
    return reduce(itertools.chain(invert(x).letters, invert(y).letters, x.letters, y.letters))


def exponent_sum(w: Word, name: str) -> int:
    return sum(sign for letter, sign in w.letters if letter == name)


def mirror(w: Word) -> Word:
    for name, _ in w.letters:
        if is_mirrored(name):
            raise AlphabetError(name)
    return Word(tuple((MIRROR_PREFIX + name, sign) for name, sign in w.letters))


def unmirror(w: Word) -> Word:
    result = []
    for name, sign in w.letters:
        if not is_mirrored(name):
            raise AlphabetError(name)
        result.append((name[len(MIRROR_PREFIX):], sign))
    return Word(tuple(result))


def format_word(w: Word) -> str:
    """Exponent-folded text such as 'a1^2 t^-1 ~a2'; the identity prints as '1'"""
    if not w:
        return "1"
    parts = []
    for (name, sign), run in itertools.groupby(w.letters):
        exponent = sign * len(list(run))
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return " ".join(parts)


def random_word(rng: random.Random, names: list[str], length: int) -> Word:
    raw = [(rng.choice(names), rng.choice((1, -1))) for _ in range(length)]
    return reduce(raw)


@dataclass(frozen=True)
class Alphabet:
    rank: int
    stable_letter: bool = False
    mirrored: bool = False

    def __post_init__(self):
        if self.rank < 1:
            raise SpecError(f"alphabet rank must be at least 1, got {self.rank}")

    @property
    def base_letters(self) -> list[str]:
        return [generator_name(i) for i in range(1, self.rank + 1)] + [LETTER_T]

    def letters(self) -> list[str]:
        result = self.base_letters
        if self.stable_letter:
            result = result + [LETTER_P]
        if self.mirrored:
            result = result + [MIRROR_PREFIX + name for name in self.base_letters]
        return result

    def __contains__(self, name: str) -> bool:
        return name in self.letters()

    def check(self, w: Word) -> Word:
        allowed = set(self.letters())
        for name in w.names():
            if name not in allowed:
                raise AlphabetError(name, self.letters())
        return w


class Substitution:
    """A map from letter names to words, extended to words as a homomorphism"""

    def __init__(self, images: Mapping[str, Word]):
        self._images = MappingProxyType(dict(images))
        self._inverses = MappingProxyType({name: invert(image) for name, image in self._images.items()})

    @property
    def images(self) -> Mapping[str, Word]:
        return self._images

    def __getitem__(self, name: str) -> Word:
        return self._images[name]

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def then(self, other: Substitution) -> Substitution:
        """The substitution x -> other(self(x))"""
        return Substitution({name: other(image) for name, image in self._images.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Substitution) and dict(self._images) == dict(other._images)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._images.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{name} -> {format_word(image)}" for name, image in self._images.items())
        return f"Substitution({body})"


def apply(s: Substitution, w: Word) -> Word:
    def _letters():
        for name, sign in w.letters:
            try:
                image = s._images[name] if sign > 0 else s._inverses[name]
            except KeyError:
                raise AlphabetError(name, sorted(s._images)) from None
            yield from image.letters

    return reduce(_letters())
