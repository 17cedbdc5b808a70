"""Membership in the subgroups H = <a_i t^(r_i)> of G_k(w), with certificates.

reach(p, u, j) answers: for which q does t^p u t^-q lie in H, where u only uses
a_1..a_j. The word is cut into pieces at level j and the pieces are folded left
to right; each piece is reduced to a question one level down. At level 2 every
step has a closed integer form; above that the suffix cases search a window.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .groups import (
    GroupSpec,
    a,
    embedding,
    equal,
    eta,
    normalize,
    phi_rel,
    t,
    t_word,
    PHI_INVERSE,
)
from .utils import (
    NotAMemberError,
    CertificateError,
    ResourceLimitError,
    SpecError,
    UnsupportedCaseError,
    checked_exponent,
    current_limits,
)
from .words import (
    EMPTY,
    Substitution,
    Word,
    apply,
    commutator,
    exponent_sum,
    format_word,
    generator_name,
    invert,
    reduce,
    subgroup_letter,
)

_LOGGER = logging.getLogger(__name__)

_WARNED_CONFIGS: set[tuple[GroupSpec, tuple[int, ...]]] = set()
_WARNED_LOCK = threading.Lock()


@dataclass(frozen=True)
class SubgroupSpec:
    r: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.r)

    def power(self, i: int) -> int:
        return self.r[i - 1]

    def generator(self, i: int) -> Word:
        """h_i = a_i t^(r_i)"""
        return a(i) * t(self.power(i))

    def expand(self, certificate: Word) -> Word:
        images = {subgroup_letter(i): self.generator(i) for i in range(1, self.k + 1)}
        return apply(Substitution(images), certificate)

    @property
    def name(self) -> str:
        return f"H{self.k}({','.join(str(r) for r in self.r)})"

    @classmethod
    def classic(cls, k: int) -> SubgroupSpec:
        return cls((1,) * k)

    def __str__(self) -> str:
        return self.name


def is_validated(spec: GroupSpec, sub: SubgroupSpec) -> bool:
    """Configurations where each reach step is known to be exact"""
    if all(r > 0 for r in sub.r) or all(r == 0 for r in sub.r):
        return True
    return spec.k == 2 and sub.power(1) > 0


def validate_subgroup(spec: GroupSpec, r) -> SubgroupSpec:
    r = tuple(r)
    if len(r) != spec.k:
        raise SpecError(f"expected {spec.k} powers for {spec.name}, got {len(r)}")
    for value in r:
        if not isinstance(value, int) or isinstance(value, bool):
            raise SpecError(f"power {value!r} is not an integer")
        if value < 0:
            raise SpecError(f"negative power {value} is not supported")
    sub = SubgroupSpec(r)
    if not is_validated(spec, sub):
        with _WARNED_LOCK:
            first = (spec, r) not in _WARNED_CONFIGS
            _WARNED_CONFIGS.add((spec, r))
        if first:
            _LOGGER.warning(f"{sub.name} in {spec.name} is outside the validated configurations; "
                            "NonMember answers rely on uniqueness of each coset step")
    return sub


@dataclass(frozen=True)
class Piece:
    level: int
    has_prefix: bool
    core: Word
    has_suffix: bool

    @property
    def word(self) -> Word:
        top = generator_name(self.level)
        letters = ((top, 1),) if self.has_prefix else ()
        letters += self.core.letters
        if self.has_suffix:
            letters += ((top, -1),)
        return Word(letters)

    def __str__(self) -> str:
        return f"({format_word(self.word)})"


def pieces(u: Word, level: int) -> list[Piece]:
    """Cut u before every a_level and after every a_level^-1"""
    top = generator_name(level)
    chunks: list[list] = []
    current: list = []
    for letter in u:
        if letter == (top, 1) and current:
            chunks.append(current)
            current = []
        current.append(letter)
        if letter == (top, -1):
            chunks.append(current)
            current = []
    if current:
        chunks.append(current)

    result = []
    for chunk in chunks:
        has_prefix = chunk[0] == (top, 1)
        has_suffix = chunk[-1] == (top, -1)
        core = chunk[1 if has_prefix else 0:len(chunk) - 1 if has_suffix else len(chunk)]
        result.append(Piece(level, has_prefix, Word(tuple(core)), has_suffix))
    return result


@dataclass(frozen=True)
class Coset:
    q: int
    certificate: Word | None = None


@dataclass(frozen=True)
class NoCoset:
    obstruction: str


@dataclass(frozen=True)
class Undecided:
    bound: int
    detail: str


Reach = Coset | NoCoset | Undecided


def _h(i: int, exponent: int = 1) -> Word:
    return Word.generator(subgroup_letter(i), exponent)


def _window(p: int, width: int):
    yield p
    for d in range(1, width + 1):
        yield p - d
        yield p + d


class _Walker:
    def __init__(self, spec: GroupSpec, sub: SubgroupSpec, certify: bool):
        self.spec = spec
        self.sub = sub
        self.certify = certify
        self.window = current_limits().window

    def reach(self, p: int, u: Word, level: int) -> Reach:
        while level > 1 and not any(name == generator_name(level) for name, _ in u):
            level -= 1
        if level <= 1:
            n = exponent_sum(u, generator_name(1))
            q = checked_exponent(p - n * self.sub.power(1), "t-exponent")
            return Coset(q, _h(1, n) if self.certify else None)

        q = p
        parts: list[Word] = []
        for piece in pieces(u, level):
            step = self.step(q, piece)
            if not isinstance(step, Coset):
                return step
            q = step.q
            if self.certify:
                parts.append(step.certificate)
        certificate = reduce(letter for part in parts for letter in part) if self.certify else None
        return Coset(q, certificate)

    def step(self, p: int, piece: Piece) -> Reach:
        j = piece.level
        if not piece.has_prefix and not piece.has_suffix:
            return self.reach(p, piece.core, j - 1)
        if j == 2:
            return self._level_two(p, piece)

        r_j = self.sub.power(j)
        if piece.has_prefix and not piece.has_suffix:
            lower = invert(phi_rel(self.spec, j, p)) * piece.core
            inner = self.reach(checked_exponent(p - r_j), lower, j - 1)
            if isinstance(inner, Coset) and self.certify:
                return Coset(inner.q, _h(j) * inner.certificate)
            return inner
        return self._search(p, piece)

    def _level_two(self, p: int, piece: Piece) -> Reach:
        # w_2 = a_1^e, so phi(2, m) = a_1^(e m) and every case is integer arithmetic
        e = exponent_sum(self.spec.twist(2), generator_name(1))
        n = exponent_sum(piece.core, generator_name(1))
        r1, r2 = self.sub.power(1), self.sub.power(2)
        denominator = 1 + e * r1

        if piece.has_prefix and not piece.has_suffix:
            m = checked_exponent(n - e * p)
            q = checked_exponent(p - r2 - m * r1, "t-exponent")
            return Coset(q, _h(2) * _h(1, m) if self.certify else None)

        if piece.has_suffix and not piece.has_prefix:
            numerator = checked_exponent(p + r2 - n * r1)
            if numerator % denominator:
                return NoCoset(f"piece {piece} at level 2: q = {Fraction(numerator, denominator)} not integral")
            q = numerator // denominator
            m = checked_exponent(n + e * q)
            return Coset(q, _h(1, m) * _h(2, -1) if self.certify else None)

        # (p - q)(1 + e r1) = n r1
        shift = checked_exponent(n * r1)
        if shift % denominator:
            q = Fraction(p) - Fraction(shift, denominator)
            return NoCoset(f"piece {piece} at level 2: q = {q} not integral")
        q = p - shift // denominator
        m = checked_exponent(n + e * (q - p))
        return Coset(q, _h(2) * _h(1, m) * _h(2, -1) if self.certify else None)

    def _search(self, p: int, piece: Piece) -> Reach:
        j = piece.level
        r_j = self.sub.power(j)
        start = p - r_j if piece.has_prefix else p
        left = invert(phi_rel(self.spec, j, p)) if piece.has_prefix else EMPTY
        walker = _Walker(self.spec, self.sub, certify=False)
        skipped = 0

        for q in _window(p, self.window):
            try:
                lower = left * piece.core * phi_rel(self.spec, j, q)
                inner = walker.reach(start, lower, j - 1)
            except ResourceLimitError:
                skipped += 1
                continue
            if not (isinstance(inner, Coset) and inner.q == q - r_j):
                continue

            _LOGGER.debug(f"piece {piece} at level {j}: coset step {p} -> {q}")
            if not self.certify:
                return Coset(q)
            inner = self.reach(start, lower, j - 1)
            certificate = inner.certificate * _h(j, -1)
            if piece.has_prefix:
                certificate = _h(j) * certificate
            return Coset(q, certificate)

        detail = f"no coset step for piece {piece} at level {j} with q in [{p - self.window}, {p + self.window}]"
        if skipped:
            detail += f" ({skipped} candidates hit resource limits)"
        return Undecided(self.window, detail)


def reach(spec: GroupSpec, sub: SubgroupSpec, p: int, u: Word, level: int | None = None,
          certify: bool = False) -> Reach:
    return _Walker(spec, sub, certify).reach(p, u, spec.k if level is None else level)


class Verdict(Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class MembershipResult:
    verdict: Verdict
    certificate: Word | None = None
    obstruction: str | None = None
    bound: int | None = None

    @classmethod
    def member(cls, spec: GroupSpec, sub: SubgroupSpec, g: Word, certificate: Word) -> MembershipResult:
        if not equal(spec, sub.expand(certificate), g):
            raise CertificateError(f"certificate {format_word(certificate)} does not expand to {format_word(g)}")
        return cls(Verdict.MEMBER, certificate=certificate)

    @classmethod
    def non_member(cls, obstruction: str) -> MembershipResult:
        return cls(Verdict.NON_MEMBER, obstruction=obstruction)

    @classmethod
    def undecided(cls, bound: int, detail: str) -> MembershipResult:
        return cls(Verdict.UNDECIDED, obstruction=detail, bound=bound)

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    def __str__(self) -> str:
        if self.verdict is Verdict.MEMBER:
            return f"member: {format_word(self.certificate)}"
        return f"{self.verdict.value}: {self.obstruction}"


def member(spec: GroupSpec, sub: SubgroupSpec, g: Word) -> MembershipResult:
    if sub.k != spec.k:
        raise SpecError(f"{sub.name} does not match {spec.name}")
    nf = normalize(spec, g)
    result = reach(spec, sub, nf.t_exp, nf.u)
    if isinstance(result, NoCoset):
        return MembershipResult.non_member(result.obstruction)
    if isinstance(result, Undecided):
        return MembershipResult.undecided(result.bound, result.detail)
    if result.q != 0:
        return MembershipResult.non_member(f"element lies in the coset H t^{result.q}, and <t> meets H trivially")

    certified = reach(spec, sub, nf.t_exp, nf.u, certify=True)
    return MembershipResult.member(spec, sub, g, certified.certificate)


def express(spec: GroupSpec, sub: SubgroupSpec, g: Word) -> Word:
    result = member(spec, sub, g)
    if not result.is_member:
        raise NotAMemberError(result)
    return result.certificate


def notinh_witness() -> Word:
    """[t^-1, a_2^-2 t^-1 a_2^2], outside H_2(r, 0) but in its profinite closure"""
    return commutator(t(-1), t(-1).conjugate(a(2, 2)))


def bks_witness() -> Word:
    """[t_1^-1, t_-1^-1], the witness for the image of H_2 under PHI"""
    return commutator(invert(t_word(1)), invert(t_word(-1)))


def pullback_witness() -> Word:
    """Witness for the classic H_2 in G_2"""
    return apply(PHI_INVERSE, bks_witness())


@dataclass(frozen=True)
class TransportResult:
    witness: Word
    index: int
    embedded_witness: Word
    embedded_powers: tuple[int, int]
    result: MembershipResult


def transport_witness(spec: GroupSpec, sub: SubgroupSpec) -> TransportResult:
    """Move a G_2 witness into G_k(w) through the copy <w_c, a_c, t>"""
    c = next((i for i in range(2, spec.k + 1) if spec.twist(i)), None)
    if c is None:
        raise UnsupportedCaseError(f"{spec.name} is F_{spec.k} x Z, every subgroup of it is separable")

    w_c = spec.twist(c)
    sigma = sum(exponent_sum(w_c, generator_name(i)) * sub.power(i) for i in range(1, c))
    if sigma == 0:
        raise UnsupportedCaseError(f"{sub.name} in {spec.name}: the exponent sum along w{c} vanishes, "
                                   "no embedded copy of a non-separable hydra subgroup")

    s = sub.power(c)
    if (sigma, s) == (1, 1):
        embedded = pullback_witness()
    else:
        embedded = apply(eta(s + 1), notinh_witness())

    hydra = GroupSpec.hydra(2)
    result = member(hydra, SubgroupSpec((sigma, s)), embedded)
    _LOGGER.debug(f"transported witness via w{c} into {spec.name}: embedded {result.verdict.value} in H2({sigma},{s})")
    return TransportResult(
        witness=apply(embedding(spec, c), embedded),
        index=c,
        embedded_witness=embedded,
        embedded_powers=(sigma, s),
        result=result,
    )


class Separability(Enum):
    SEPARABLE = "separable"
    NON_SEPARABLE = "non-separable"
    OPEN = "open"


@dataclass(frozen=True)
class SeparabilityVerdict:
    status: Separability
    reason: str
    transport: TransportResult | None = field(default=None)


def classify_separability(spec: GroupSpec, sub: SubgroupSpec) -> SeparabilityVerdict:
    if all(r == 0 for r in sub.r):
        return SeparabilityVerdict(Separability.SEPARABLE, "H is the fiber, a normal subgroup with quotient Z")
    if not any(spec.twist(i) for i in range(1, spec.k + 1)):
        return SeparabilityVerdict(Separability.SEPARABLE, f"{spec.name} is F_{spec.k} x Z")
    try:
        transport = transport_witness(spec, sub)
    except UnsupportedCaseError as err:
        return SeparabilityVerdict(Separability.OPEN, str(err))
    if transport.result.verdict is not Verdict.NON_MEMBER:
        return SeparabilityVerdict(Separability.OPEN, f"embedded witness is {transport.result.verdict.value}")
    sigma, s = transport.embedded_powers
    return SeparabilityVerdict(
        Separability.NON_SEPARABLE,
        f"contains a copy of H2({sigma},{s}) through w{transport.index}",
        transport,
    )
