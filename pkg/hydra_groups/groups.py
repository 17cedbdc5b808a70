"""Free-by-cyclic groups G_k(w) = F(a_1..a_k) x| <t> and their normal forms.

The action is x^t = t^-1 x t with a_i^t = a_i w_i, where w_i is a positive word
in a_1..a_{i-1}. Every element has a unique normal form t^r u with u reduced in
the fiber letters; composition is (r1, u1)(r2, u2) = (r1 + r2, theta^r2(u1) u2).
"""
from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass
from functools import lru_cache

import voluptuous as vol

from .const import LETTER_T, PRESET_PREFIX
from .utils import SpecError, AlphabetError, checked_exponent, checked_length, current_limits, ResourceLimitError
from .words import (
    Alphabet,
    EMPTY,
    Substitution,
    Word,
    apply,
    exponent_sum,
    format_word,
    generator_index,
    generator_name,
    invert,
    reduce,
)

_LOGGER = logging.getLogger(__name__)

RANK_SCHEMA = vol.Schema(vol.All(int, vol.Range(min=1)))


def a(i: int, exponent: int = 1) -> Word:
    return Word.generator(generator_name(i), exponent)


def t(exponent: int = 1) -> Word:
    return Word.generator(LETTER_T, exponent)


@dataclass(frozen=True)
class GroupSpec:
    twists: tuple[Word, ...]

    @property
    def k(self) -> int:
        return len(self.twists)

    def twist(self, i: int) -> Word:
        """w_i, 1-indexed"""
        return self.twists[i - 1]

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.k)

    @property
    def is_hydra(self) -> bool:
        return all(self.twist(i) == a(i - 1) for i in range(2, self.k + 1))

    @property
    def name(self) -> str:
        if self.is_hydra:
            return f"{PRESET_PREFIX}{self.k}"
        twists = ", ".join(format_word(w) for w in self.twists)
        return f"G{self.k}({twists})"

    @classmethod
    def hydra(cls, k: int) -> GroupSpec:
        return validate_spec(k, [EMPTY] + [a(i - 1) for i in range(2, k + 1)])

    def __str__(self) -> str:
        return self.name


def validate_spec(k: int, twists: list[Word]) -> GroupSpec:
    try:
        k = RANK_SCHEMA(k)
    except vol.Invalid as err:
        raise SpecError(f"rank k must be a positive integer: {err}") from err

    twists = list(twists)
    if len(twists) != k:
        raise SpecError(f"expected {k} twisting words, got {len(twists)}")
    if twists[0]:
        raise SpecError("w1 must be the empty word")
    for i, w in enumerate(twists, start=1):
        for name, sign in w:
            index = generator_index(name)
            if index is None or index >= i:
                raise AlphabetError(name, [generator_name(j) for j in range(1, i)])
            if sign != 1:
                raise SpecError(f"w{i} = {format_word(w)} must be a positive word")
    return GroupSpec(tuple(twists))


def preset(name: str) -> GroupSpec:
    if not name.startswith(PRESET_PREFIX) or not name[len(PRESET_PREFIX):].isdigit():
        raise SpecError(f"unknown preset '{name}'")
    return GroupSpec.hydra(int(name[len(PRESET_PREFIX):]))


@dataclass(frozen=True, order=True)
class NormalForm:
    t_exp: int
    u: Word

    @property
    def is_identity(self) -> bool:
        return self.t_exp == 0 and not self.u

    @property
    def length(self) -> int:
        """Length of the word t^r u in the ambient generators"""
        return abs(self.t_exp) + len(self.u)

    def word(self) -> Word:
        return t(self.t_exp) * self.u

    def __str__(self) -> str:
        return f"t^{self.t_exp} . {format_word(self.u)}"


@lru_cache(maxsize=None)
def _theta(spec: GroupSpec) -> Substitution:
    return Substitution({generator_name(i): a(i) * spec.twist(i) for i in range(1, spec.k + 1)})


@lru_cache(maxsize=None)
def _theta_inverse(spec: GroupSpec) -> Substitution:
    # theta^-1(a_i) = a_i theta^-1(w_i)^-1, built bottom-up since w_i only uses lower letters
    images: dict[str, Word] = {}
    for i in range(1, spec.k + 1):
        lower = apply(Substitution(images), spec.twist(i)) if spec.twist(i) else EMPTY
        images[generator_name(i)] = a(i) * invert(lower)
    return Substitution(images)


class _PhiTable:
    """phi(j, m) with theta^m(a_j) = a_j phi(j, m), extended one step at a time"""

    def __init__(self):
        self._lock = threading.Lock()
        self._rows: dict[tuple[GroupSpec, int], dict[int, Word]] = {}

    def get(self, spec: GroupSpec, j: int, m: int) -> Word:
        if m == 0 or not spec.twist(j):
            return EMPTY
        limit = current_limits().max_length
        if abs(m) > limit:
            raise ResourceLimitError(f"phi({j}, {m}) length", limit)

        with self._lock:
            row = self._rows.setdefault((spec, j), {0: EMPTY})
            if m in row:
                # rows outlive the limits they were built under
                checked_length(len(row[m]), f"phi({j}, {m}) length")
                return row[m]
            step = 1 if m > 0 else -1
            current = step
            while current in row:
                current += step
            while True:
                previous = row[current - step]
                if step > 0:
                    value = spec.twist(j) * _theta(spec)(previous)
                else:
                    inverse = _theta_inverse(spec)
                    value = invert(inverse(spec.twist(j))) * inverse(previous)
                row[current] = value
                if current == m:
                    return value
                current += step

    def clear(self):
        with self._lock:
            self._rows.clear()


_PHI = _PhiTable()


def phi_rel(spec: GroupSpec, j: int, m: int) -> Word:
    if not 1 <= j <= spec.k:
        raise SpecError(f"generator index {j} outside 1..{spec.k}")
    return _PHI.get(spec, j, m)


@lru_cache(maxsize=1024)
def _theta_power(spec: GroupSpec, m: int) -> Substitution:
    if m == 1:
        return _theta(spec)
    if m == -1:
        return _theta_inverse(spec)
    return Substitution({generator_name(i): a(i) * phi_rel(spec, i, m) for i in range(1, spec.k + 1)})


def theta_pow(spec: GroupSpec, m: int, w: Word) -> Word:
    """t^-m w t^m for a word w in the fiber letters"""
    if m == 0 or not w:
        return w
    return _theta_power(spec, m)(w)


def normalize(spec: GroupSpec, w: Word) -> NormalForm:
    spec.alphabet.check(w)
    r = 0
    u = EMPTY
    for is_t, run in itertools.groupby(w.letters, key=lambda letter: letter[0] == LETTER_T):
        run = tuple(run)
        if is_t:
            m = sum(sign for _, sign in run)
            u = theta_pow(spec, m, u)
            r = checked_exponent(r + m, "t-exponent")
        else:
            u = reduce(itertools.chain(u.letters, run))
    return NormalForm(r, u)


def compose(spec: GroupSpec, first: NormalForm, second: NormalForm) -> NormalForm:
    t_exp = checked_exponent(first.t_exp + second.t_exp, "t-exponent")
    return NormalForm(t_exp, theta_pow(spec, second.t_exp, first.u) * second.u)


def equal(spec: GroupSpec, w1: Word, w2: Word) -> bool:
    return normalize(spec, w1) == normalize(spec, w2)


def is_trivial(spec: GroupSpec, w: Word) -> bool:
    return normalize(spec, w).is_identity


def abelianize(spec: GroupSpec, w: Word) -> tuple[int, int]:
    """Image in Z^2 = <a_k> x <t>; the relations kill a_1..a_{k-1} in a hydra group"""
    if not spec.is_hydra:
        raise SpecError(f"abelianize needs a hydra group, got {spec.name}")
    spec.alphabet.check(w)
    return exponent_sum(w, generator_name(spec.k)), exponent_sum(w, LETTER_T)


def t_word(i: int) -> Word:
    """t_i = a_2^-i t a_2^i"""
    return t().conjugate(a(2, i))


def embedding(spec: GroupSpec, c: int) -> Substitution:
    """G_2 -> G_k(w) sending a_1 -> w_c, a_2 -> a_c, t -> t"""
    if not 2 <= c <= spec.k:
        raise SpecError(f"embedding index {c} outside 2..{spec.k}")
    return Substitution({generator_name(1): spec.twist(c), generator_name(2): a(c), LETTER_T: t()})


# automorphisms of the hydra group G_2
PHI = Substitution({"a1": a(1), "a2": a(2, -2) * t() * a(2), "t": a(1) * t(-1)})
PHI_INVERSE = Substitution({"a1": a(1), "a2": t(-1) * a(2, -1), "t": a(1) * t(-1)})
# the one-relator presentation <alpha, beta, y | alpha^y = alpha beta, beta^y = beta>
BKS_RELABEL = Substitution({"alpha": a(2), "beta": a(1), "y": t()})


def eta(s: int) -> Substitution:
    """a_2 -> a_2 t^(s-1), t -> t; eta(s + 1) carries H_2(r, 0) onto H_2(r, s)"""
    return Substitution({"a1": a(1), "a2": a(2) * t(s - 1), "t": t()})

