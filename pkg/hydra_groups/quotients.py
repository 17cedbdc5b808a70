"""Finite quotients G_k(w) -> S_n and the search for separating homomorphisms."""
from __future__ import annotations

import itertools
import logging
import math
import time
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from sympy.combinatorics import Permutation, PermutationGroup
from tqdm import tqdm

from .const import LETTER_T, WITNESS_KIND_HNN, WITNESS_KIND_AMALGAM
from .groups import GroupSpec
from .membership import SubgroupSpec, member
from .utils import ConsistencyError, ResourceLimitError, current_limits
from .words import Word, format_word, generator_name

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermHom:
    """Images of a_1..a_k and t; sympy multiplies left to right, matching word order"""
    degree: int
    images: Mapping[str, Permutation]

    def image(self, w: Word) -> Permutation:
        return _evaluate(self.images, w, self.degree)

    def sort_key(self) -> tuple:
        return tuple(tuple(self.images[name].array_form) for name in sorted(self.images))

    def satisfies(self, spec: GroupSpec) -> bool:
        return all(_relation_holds(spec, self.images, i, self.degree) for i in range(1, spec.k + 1))

    def __str__(self) -> str:
        return " ".join(f"{name}={self.images[name].array_form}" for name in sorted(self.images))


def _evaluate(images: Mapping[str, Permutation], w: Word, degree: int) -> Permutation:
    result = Permutation(list(range(degree)))
    for name, sign in w:
        result = result * (images[name] if sign > 0 else ~images[name])
    return result


def _relation_holds(spec: GroupSpec, images: Mapping[str, Permutation], i: int, degree: int) -> bool:
    # t^-1 a_i t = a_i w_i
    x = images[generator_name(i)]
    y = images[LETTER_T]
    return ~y * x * y == x * _evaluate(images, spec.twist(i), degree)


def _check_degree(spec: GroupSpec, n: int):
    limits = current_limits()
    if n > limits.max_degree:
        raise ResourceLimitError(f"permutation degree {n}", limits.max_degree)
    candidates = math.factorial(n) ** (spec.k + 1)
    if candidates > limits.max_candidates:
        raise ResourceLimitError(f"{candidates} candidate images for {spec.name} at degree {n}",
                                 limits.max_candidates)


def _freeze(n: int, images: dict[str, Permutation]) -> PermHom:
    return PermHom(n, MappingProxyType(dict(images)))


def enumerate_homs(spec: GroupSpec, n: int) -> Iterator[PermHom]:
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    _check_degree(spec, n)
    elements = [Permutation(list(perm)) for perm in itertools.permutations(range(n))]

    if spec.is_hydra and spec.k == 2:
        # a_1 = [a_2, t] is forced; the only remaining relation is [a_1, t] = 1
        for x in elements:
            for y in elements:
                c = ~x * ~y * x * y
                if c * y == y * c:
                    yield _freeze(n, {"a1": c, "a2": x, LETTER_T: y})
        return

    def _extend(images: dict[str, Permutation], i: int) -> Iterator[PermHom]:
        if i > spec.k:
            yield _freeze(n, images)
            return
        name = generator_name(i)
        for x in elements:
            images[name] = x
            if _relation_holds(spec, images, i, n):
                yield from _extend(images, i + 1)
        del images[name]

    for y in elements:
        yield from _extend({LETTER_T: y}, 1)


def closure(generators: Iterable[Permutation]) -> frozenset[Permutation]:
    generators = list(generators)
    if not generators:
        raise ValueError("closure needs at least one generator")
    if len({g.size for g in generators}) > 1:
        raise ValueError("generators act on different degrees")
    return frozenset(PermutationGroup(generators).generate())


def _subgroup_images(hom: PermHom, sub: SubgroupSpec) -> tuple[Permutation, ...]:
    return tuple(hom.image(sub.generator(i)) for i in range(1, sub.k + 1))


def _outside(generators: tuple[Permutation, ...], target: Permutation) -> bool:
    if target.is_Identity:
        return False
    return not PermutationGroup(list(generators)).contains(target)


def separates(hom: PermHom, sub: SubgroupSpec, g: Word) -> bool:
    return _outside(_subgroup_images(hom, sub), hom.image(g))


@dataclass(frozen=True)
class DegreeScan:
    degree: int
    homs: int
    separating: tuple[PermHom, ...]
    elapsed: float

    def summary(self) -> str:
        return f"degree={self.degree} homs={self.homs} separating={len(self.separating)}"


@dataclass
class ScanReport:
    spec: GroupSpec
    sub: SubgroupSpec
    g: Word
    degrees: list[DegreeScan] = field(default_factory=list)

    @property
    def separating(self) -> list[PermHom]:
        return [hom for scan in self.degrees for hom in scan.separating]

    def lines(self) -> list[str]:
        header = f"scan {format_word(self.g)} against {self.sub.name} in {self.spec.name}"
        return [header] + [scan.summary() for scan in self.degrees]


def scan(spec: GroupSpec, sub: SubgroupSpec, g: Word, n_max: int, progress: bool = False) -> ScanReport:
    report = ScanReport(spec, sub, g)
    verified = False
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        homs = 0
        separating = []
        cache: dict[tuple, bool] = {}
        for hom in tqdm(enumerate_homs(spec, n), desc=f"S{n}", disable=not progress):
            homs += 1
            key = (_subgroup_images(hom, sub), hom.image(g))
            if key not in cache:
                cache[key] = _outside(*key)
            if cache[key]:
                separating.append(hom)
        separating.sort(key=PermHom.sort_key)
        for hom in separating:
            if not (hom.satisfies(spec) and separates(hom, sub, g)):
                raise ConsistencyError(f"reported hom {hom} does not separate {format_word(g)} at degree {n}")

        if separating and not verified:
            result = member(spec, sub, g)
            if result.is_member:
                raise ConsistencyError(f"{format_word(g)} is certified in {sub.name} but separated at degree {n}")
            verified = True

        elapsed = time.perf_counter() - start
        _LOGGER.info(f"degree {n}: {homs} homs, {len(separating)} separating in {elapsed:.2f}s")
        report.degrees.append(DegreeScan(n, homs, tuple(separating), elapsed))
    return report


@dataclass(frozen=True)
class ExtensionDegreeScan:
    degree: int
    quotients: int
    survivals: int

    def summary(self) -> str:
        return f"degree={self.degree} quotients={self.quotients} survivals={self.survivals}"


@dataclass
class ExtensionScanReport:
    kind: str
    degrees: list[ExtensionDegreeScan] = field(default_factory=list)

    @property
    def survivals(self) -> int:
        return sum(scan.survivals for scan in self.degrees)

    def lines(self) -> list[str]:
        return [f"{self.kind} witness"] + [scan.summary() for scan in self.degrees]


def scan_extension(kind: str, spec: GroupSpec, sub: SubgroupSpec, g: Word, n_max: int,
                   progress: bool = False) -> ExtensionScanReport:
    """Count finite quotients of the extension where the witness built from g survives.

    hnn:     a quotient is a hom phi of G plus an image P of p centralizing phi(H);
             the witness [p, g] survives when P fails to commute with phi(g).
    amalgam: a quotient is a pair of homs agreeing on the generators of H;
             the witness g^-1 ~g survives when the two images of g differ.
    """
    if kind not in (WITNESS_KIND_HNN, WITNESS_KIND_AMALGAM):
        raise ValueError(f"unknown extension kind {kind}")
    report = ExtensionScanReport(kind)

    for n in range(1, n_max + 1):
        quotients = 0
        survivals = 0
        homs = tqdm(enumerate_homs(spec, n), desc=f"{kind} S{n}", disable=not progress)
        if kind == WITNESS_KIND_HNN:
            elements = [Permutation(list(perm)) for perm in itertools.permutations(range(n))]
            for hom in homs:
                target = hom.image(g)
                generators = _subgroup_images(hom, sub)
                centralizer = [p for p in elements if all(p * h == h * p for h in generators)]
                quotients += len(centralizer)
                survivals += sum(1 for p in centralizer if p * target != target * p)
        else:
            buckets: dict[tuple, dict[Permutation, int]] = {}
            for hom in homs:
                bucket = buckets.setdefault(_subgroup_images(hom, sub), {})
                target = hom.image(g)
                bucket[target] = bucket.get(target, 0) + 1
            for bucket in buckets.values():
                total = sum(bucket.values())
                quotients += total * total
                survivals += total * total - sum(count * count for count in bucket.values())

        _LOGGER.info(f"{kind} degree {n}: {quotients} quotients, {survivals} survivals")
        report.degrees.append(ExtensionDegreeScan(n, quotients, survivals))
    return report
