"""Word problems in the HNN extension and the amalgamated double along H.

HNN:     <G, p | p^-1 h p = h for h in H>, solved by pinching p^e g p^-e with g in H.
Amalgam: G *_H G, the second copy written with '~' letters; a syllable lying in H
         is rewritten into the other factor and merged with its neighbours.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum

from .const import LETTER_P, PINCH_ORDER_LEFT, PINCH_ORDER_RIGHT, WITNESS_KIND_HNN, WITNESS_KIND_AMALGAM
from .groups import GroupSpec, is_trivial
from .membership import (
    SubgroupSpec,
    Verdict,
    member,
    notinh_witness,
    pullback_witness,
    transport_witness,
)
from .utils import NoWitnessError, UnsupportedCaseError
from .words import (
    Alphabet,
    Word,
    commutator,
    format_word,
    invert,
    is_mirrored,
    mirror,
    reduce,
    unmirror,
)

_LOGGER = logging.getLogger(__name__)


class Triviality(Enum):
    TRIVIAL = "Trivial"
    NON_TRIVIAL = "NonTrivial"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class PinchStep:
    position: int
    inner: Word
    certificate: Word


@dataclass
class ExtensionResult:
    verdict: Triviality
    word: Word
    steps: list[PinchStep] = field(default_factory=list)
    detail: str | None = None

    def __str__(self) -> str:
        text = self.verdict.value
        if self.detail:
            text += f": {self.detail}"
        return text


def hnn_commutator(g: Word) -> Word:
    """[p, g]"""
    return commutator(Word.generator(LETTER_P), g)


def _check_hnn_word(spec: GroupSpec, w: Word):
    Alphabet(spec.k, stable_letter=True).check(w)


def _innermost_pairs(w: Word, order: str):
    positions = [i for i, (name, _) in enumerate(w.letters) if name == LETTER_P]
    pairs = [(i, j) for i, j in itertools.pairwise(positions) if w.letters[i][1] == -w.letters[j][1]]
    return pairs if order == PINCH_ORDER_LEFT else list(reversed(pairs))


def hnn_decide(spec: GroupSpec, sub: SubgroupSpec, w: Word, order: str = PINCH_ORDER_LEFT) -> ExtensionResult:
    if order not in (PINCH_ORDER_LEFT, PINCH_ORDER_RIGHT):
        raise ValueError(f"unknown pinch order {order}")
    _check_hnn_word(spec, w)
    w = reduce(w.letters)
    steps: list[PinchStep] = []

    while True:
        pinched = False
        for i, j in _innermost_pairs(w, order):
            inner = w[i + 1:j]
            result = member(spec, sub, inner)
            if result.verdict is Verdict.UNDECIDED:
                return ExtensionResult(Triviality.UNDECIDED, w, steps,
                                       f"membership of {format_word(inner)} undecided: {result.obstruction}")
            if result.verdict is Verdict.NON_MEMBER:
                continue
            _LOGGER.debug(f"pinching p-pair at {i}..{j} around {format_word(inner)}")
            steps.append(PinchStep(i, inner, result.certificate))
            w = reduce(itertools.chain(w.letters[:i], inner.letters, w.letters[j + 1:]))
            pinched = True
            break
        if not pinched:
            break

    if any(name == LETTER_P for name, _ in w):
        return ExtensionResult(Triviality.NON_TRIVIAL, w, steps, f"p-reduced form {format_word(w)}")
    if is_trivial(spec, w):
        return ExtensionResult(Triviality.TRIVIAL, w, steps)
    return ExtensionResult(Triviality.NON_TRIVIAL, w, steps, f"{format_word(w)} is nontrivial in {spec.name}")


@dataclass(frozen=True)
class Syllable:
    factor: int
    word: Word

    def base_word(self) -> Word:
        """The syllable written over the unmirrored letters"""
        return unmirror(self.word) if self.factor else self.word


@dataclass(frozen=True)
class AmalgamWord:
    syllables: tuple[Syllable, ...]

    @classmethod
    def from_word(cls, w: Word) -> AmalgamWord:
        w = reduce(w.letters)
        syllables = []
        for factor, run in itertools.groupby(w.letters, key=lambda letter: int(is_mirrored(letter[0]))):
            syllables.append(Syllable(factor, Word(tuple(run))))
        return cls(tuple(syllables))

    def to_word(self) -> Word:
        return reduce(letter for syllable in self.syllables for letter in syllable.word)

    def __len__(self) -> int:
        return len(self.syllables)


def amalgam_pair(g: Word) -> Word:
    """g^-1 ~g, trivial in every finite quotient when g is in the profinite closure of H"""
    return invert(g) * mirror(g)


def _check_amalgam_word(spec: GroupSpec, w: Word):
    Alphabet(spec.k, mirrored=True).check(w)


def amalgam_decide(spec: GroupSpec, sub: SubgroupSpec, w: Word) -> ExtensionResult:
    _check_amalgam_word(spec, w)
    current = AmalgamWord.from_word(w)
    steps: list[PinchStep] = []

    while len(current) > 1:
        rewritten = False
        for index, syllable in enumerate(current.syllables):
            result = member(spec, sub, syllable.base_word())
            if result.verdict is Verdict.UNDECIDED:
                return ExtensionResult(Triviality.UNDECIDED, current.to_word(), steps,
                                       f"membership of {format_word(syllable.base_word())} undecided")
            if result.verdict is Verdict.NON_MEMBER:
                continue
            # the same subgroup element written in the other factor
            image = sub.expand(result.certificate)
            if not syllable.factor:
                image = mirror(image)
            steps.append(PinchStep(index, syllable.word, result.certificate))
            syllables = list(current.syllables)
            syllables[index] = Syllable(1 - syllable.factor, image)
            current = AmalgamWord.from_word(AmalgamWord(tuple(syllables)).to_word())
            rewritten = True
            break
        if not rewritten:
            return ExtensionResult(Triviality.NON_TRIVIAL, current.to_word(), steps,
                                   f"{len(current)} alternating syllables outside H")

    if not current.syllables:
        return ExtensionResult(Triviality.TRIVIAL, Word(), steps)
    last = current.syllables[0]
    if is_trivial(spec, last.base_word()):
        return ExtensionResult(Triviality.TRIVIAL, Word(), steps)
    return ExtensionResult(Triviality.NON_TRIVIAL, last.word, steps,
                           f"{format_word(last.word)} is nontrivial in its factor")


def _stored_witness(spec: GroupSpec, sub: SubgroupSpec) -> Word | None:
    if spec != GroupSpec.hydra(2):
        return None
    if sub.r == (1, 1):
        return pullback_witness()
    if sub.power(1) >= 1 and sub.power(2) == 0:
        return notinh_witness()
    return None


def rf_witness(kind: str, spec: GroupSpec, sub: SubgroupSpec) -> Word:
    """A nontrivial element of the extension that dies in every finite quotient"""
    g = _stored_witness(spec, sub)
    if g is None:
        try:
            transport = transport_witness(spec, sub)
        except UnsupportedCaseError as err:
            raise NoWitnessError(f"no witness for {sub.name} in {spec.name}: {err}") from err
        if transport.result.verdict is not Verdict.NON_MEMBER:
            raise NoWitnessError(f"transported witness for {sub.name} is {transport.result.verdict.value}")
        g = transport.witness

    if kind == WITNESS_KIND_HNN:
        return hnn_commutator(g)
    if kind == WITNESS_KIND_AMALGAM:
        return amalgam_pair(g)
    raise ValueError(f"unknown extension kind {kind}")
