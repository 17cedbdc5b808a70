"""Text syntax for words.

    word  := term*
    term  := atom ('^' (int | atom))?        x^n is a power, x^y the conjugate y^-1 x y
    atom  := gen | '1' | '(' word ')' | '[' word ',' word ']'
    gen   := '~'? (a<i> | h<i> | t | p)
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator

import pyparsing as pp

from .utils import ExpressionSyntaxError, checked_length
from .words import Letter, Word, format_word, invert, reduce

_LOGGER = logging.getLogger(__name__)


class Expression:
    def letters(self) -> Iterator[Letter]:
        raise NotImplementedError()

    def evaluate(self) -> Word:
        return reduce(self.letters())


@dataclass(frozen=True)
class Generator(Expression):
    name: str

    def letters(self):
        yield (self.name, 1)


@dataclass(frozen=True)
class Identity(Expression):
    def letters(self):
        return iter(())


@dataclass(frozen=True)
class Product(Expression):
    factors: tuple[Expression, ...]

    def letters(self):
        for factor in self.factors:
            yield from factor.letters()


@dataclass(frozen=True)
class Power(Expression):
    base: Expression
    exponent: int

    def letters(self):
        raw = list(self.base.letters())
        checked_length(len(raw) * abs(self.exponent))
        if self.exponent < 0:
            raw = [(name, -sign) for name, sign in reversed(raw)]
        return itertools.chain.from_iterable(itertools.repeat(raw, abs(self.exponent)))


@dataclass(frozen=True)
class Conjugate(Expression):
    base: Expression
    by: Expression

    def letters(self):
        by = list(self.by.letters())
        yield from ((name, -sign) for name, sign in reversed(by))
        yield from self.base.letters()
        yield from by


@dataclass(frozen=True)
class Commutator(Expression):
    left: Expression
    right: Expression

    def letters(self):
        x = self.left.evaluate()
        y = self.right.evaluate()
        return itertools.chain(invert(x), invert(y), x, y)


def _term(tokens):
    if len(tokens) == 1:
        return tokens[0]
    if isinstance(tokens[1], int):
        return Power(tokens[0], tokens[1])
    return Conjugate(tokens[0], tokens[1])


def _build_grammar() -> pp.ParserElement:
    word = pp.Forward()
    integer = pp.Regex(r"-?\d+").set_parse_action(lambda t: int(t[0]))
    gen = pp.Regex(r"~?(?:[ah]\d+|t|p)").set_parse_action(lambda t: Generator(t[0]))
    identity = pp.Regex(r"1(?!\d)").set_parse_action(lambda t: Identity())
    group = pp.Suppress("(") + word + pp.Suppress(")")
    bracket = (pp.Suppress("[") + word + pp.Suppress(",") + word + pp.Suppress("]")).set_parse_action(
        lambda t: Commutator(t[0], t[1])
    )
    atom = gen | identity | group | bracket
    term = (atom + pp.Optional(pp.Suppress("^") + (integer | atom))).set_parse_action(_term)
    word <<= pp.ZeroOrMore(term).set_parse_action(lambda t: Product(tuple(t)))
    return word


_GRAMMAR = _build_grammar()


def parse(text: str) -> Expression:
    try:
        result = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as err:
        raise ExpressionSyntaxError(f"cannot parse '{text}': {err.msg}", err.loc) from err
    return result[0] if result else Identity()


def parse_word(text: str) -> Word:
    return parse(text).evaluate()


__all__ = ["parse", "parse_word", "format_word", "Expression"]
