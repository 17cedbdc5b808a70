"""Brute-force enumeration of a subgroup ball, used to cross-check membership."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import pandas as pd
from tqdm import tqdm

from .groups import GroupSpec, NormalForm, compose, normalize
from .membership import SubgroupSpec
from .utils import ResourceLimitError, current_limits
from .words import EMPTY, Word, subgroup_letter

_LOGGER = logging.getLogger(__name__)


@dataclass
class OracleTable:
    """Every element of H with a certificate of length <= bound, keyed by normal form.

    Certificates are the shortest ones, lexicographically least for the generator
    order h1, h1^-1, h2, h2^-1, ...
    """
    spec: GroupSpec
    sub: SubgroupSpec
    bound: int
    entries: dict[NormalForm, Word] = field(default_factory=dict)
    depths: dict[NormalForm, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, nf: NormalForm) -> bool:
        return nf in self.entries

    def records(self) -> list[tuple[int, Word, NormalForm]]:
        return [(self.depths[nf], certificate, nf) for nf, certificate in self.entries.items()]


@dataclass(frozen=True)
class OracleAnswer:
    found: bool
    certificate: Word | None = None

    def __str__(self) -> str:
        return f"yes: {self.certificate}" if self.found else "unknown"


def enumerate_subgroup(spec: GroupSpec, sub: SubgroupSpec, bound: int, progress: bool = False) -> OracleTable:
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    limit = current_limits().max_entries
    letters = [(subgroup_letter(i), sign) for i in range(1, sub.k + 1) for sign in (1, -1)]
    steps = {letter: normalize(spec, sub.expand(Word((letter,)))) for letter in letters}

    identity = NormalForm(0, EMPTY)
    table = OracleTable(spec, sub, bound, {identity: EMPTY}, {identity: 0})
    frontier = [identity]
    for depth in tqdm(range(1, bound + 1), desc="oracle", disable=not progress):
        next_frontier = []
        for nf in frontier:
            certificate = table.entries[nf]
            for name, sign in letters:
                if certificate and certificate.letters[-1] == (name, -sign):
                    continue
                child = compose(spec, nf, steps[(name, sign)])
                if child in table.entries:
                    continue
                table.entries[child] = Word(certificate.letters + ((name, sign),))
                table.depths[child] = depth
                next_frontier.append(child)
                if len(table.entries) > limit:
                    raise ResourceLimitError("oracle entries", limit)
        frontier = next_frontier
        _LOGGER.debug(f"oracle depth {depth}: {len(frontier)} new elements")
    return table


def oracle_member(table: OracleTable, g: Word) -> OracleAnswer:
    nf = normalize(table.spec, g)
    certificate = table.entries.get(nf)
    if certificate is None:
        return OracleAnswer(False)
    return OracleAnswer(True, certificate)


@dataclass(frozen=True)
class DistortionRow:
    length: int
    count: int
    min_ambient: int
    max_ambient: int
    mean_ambient: float

    def __str__(self) -> str:
        return (f"l={self.length} count={self.count} min={self.min_ambient} "
                f"max={self.max_ambient} mean={self.mean_ambient:.3f}")


def distortion_table(table: OracleTable) -> list[DistortionRow]:
    """Ambient length |t^r u| = |r| + |u| of the elements first reached at each certificate length"""
    frame = pd.DataFrame(
        {
            "length": [table.depths[nf] for nf in table.entries],
            "ambient": [nf.length for nf in table.entries],
        }
    )
    stats = frame.groupby("length")["ambient"].agg(["count", "min", "max", "mean"]).sort_index()
    return [
        DistortionRow(int(length), int(row["count"]), int(row["min"]), int(row["max"]), float(row["mean"]))
        for length, row in stats.iterrows()
    ]
