"""Table of named identities and memberships in the hydra groups, checked on demand."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .expressions import parse_word
from .groups import (
    BKS_RELABEL,
    PHI,
    GroupSpec,
    NormalForm,
    a,
    abelianize,
    equal,
    eta,
    is_trivial,
    normalize,
    t,
    t_word,
    validate_spec,
)
from .membership import (
    SubgroupSpec,
    Verdict,
    bks_witness,
    member,
    notinh_witness,
    pullback_witness,
    transport_witness,
)
from .words import EMPTY, Word, commutator, format_word, invert

_LOGGER = logging.getLogger(__name__)

Check = Callable[[], list[str]]


@dataclass(frozen=True)
class CheckItem:
    id: int
    key: str
    tags: tuple[str, ...]
    anchor: str
    check: Check


@dataclass(frozen=True)
class ItemResult:
    item: CheckItem
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.item.id:>2} {self.item.key}: {self.item.anchor}"
        if self.failures:
            text += f" -- {self.failures[0]}"
        return text


@dataclass
class SuiteReport:
    results: list[ItemResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def lines(self) -> list[str]:
        total = len(self.results)
        passed = sum(1 for result in self.results if result.passed)
        return [result.line() for result in self.results] + [f"{passed}/{total} items passed"]


def _hydra2() -> GroupSpec:
    return GroupSpec.hydra(2)


def _expect_equal(spec: GroupSpec, lhs: Word, rhs: Word, label: str) -> list[str]:
    if equal(spec, lhs, rhs):
        return []
    return [f"{label}: {normalize(spec, lhs)} != {normalize(spec, rhs)}"]


def _expect_verdict(spec: GroupSpec, sub: SubgroupSpec, g: Word, verdict: Verdict, label: str) -> list[str]:
    result = member(spec, sub, g)
    if result.verdict is verdict:
        return []
    return [f"{label}: expected {verdict.value} in {sub.name}, got {result}"]


def _phi_endomorphism() -> list[str]:
    g = _hydra2()
    a1, a2, t1 = PHI["a1"], PHI["a2"], PHI["t"]
    failures = []
    if not is_trivial(g, commutator(a1, t1)):
        failures.append(f"[phi(a1), phi(t)] = {normalize(g, commutator(a1, t1))}")
    failures += _expect_equal(g, commutator(a2, t1), a1, "[phi(a2), phi(t)] = phi(a1)")
    return failures


def _phi_surjective() -> list[str]:
    g = _hydra2()
    return (
        _expect_equal(g, PHI(a(1)), a(1), "phi(a1) = a1")
        + _expect_equal(g, PHI(invert(a(2) * t())), a(2), "phi((a2 t)^-1) = a2")
        + _expect_equal(g, PHI(t(-1) * a(1)), t(), "phi(t^-1 a1) = t")
    )


def _phi_subgroup_images() -> list[str]:
    g = _hydra2()
    return (
        _expect_equal(g, PHI(a(1) * t()), parse_word("t a2^-1 t^-2 a2"), "phi(a1 t)")
        + _expect_equal(g, PHI(a(2) * t()), a(2, -1), "phi(a2 t)")
    )


def _t_commutes_with_t1() -> list[str]:
    g = _hydra2()
    w = commutator(t(), parse_word("a2^-1 t^-1 a2"))
    return [] if is_trivial(g, w) else [f"[t, t_1^-1] = {normalize(g, w)}"]


def _bks_relabel() -> list[str]:
    g = _hydra2()
    alpha, beta, y = (Word.generator(name) for name in ("alpha", "beta", "y"))
    failures = []
    # generators of the image of H_2 under PHI, in one-relator letters
    failures += _expect_equal(g, BKS_RELABEL(invert(alpha)), PHI(a(2) * t()), "alpha^-1 = phi(a2 t)")
    generator = y * invert(alpha) * y ** -2 * alpha
    failures += _expect_equal(g, BKS_RELABEL(generator), PHI(a(1) * t()), "y alpha^-1 y^-2 alpha = phi(a1 t)")
    failures += _expect_equal(g, BKS_RELABEL(alpha.conjugate(y)), BKS_RELABEL(alpha * beta), "alpha^y = alpha beta")
    failures += _expect_equal(g, BKS_RELABEL(beta.conjugate(y)), BKS_RELABEL(beta), "beta^y = beta")
    return failures


def _eta_family() -> list[str]:
    g = _hydra2()
    failures = []
    for s in range(-2, 4):
        e = eta(s)
        failures += _expect_equal(g, commutator(e["a2"], e["t"]), e["a1"], f"eta({s}) respects [a2, t] = a1")
        failures += _expect_equal(g, e(a(2) * t()), a(2) * t(s), f"eta({s})(a2 t)")
        for r in range(1, 4):
            failures += _expect_equal(g, e(a(1) * t(r)), a(1) * t(r), f"eta({s})(a1 t^{r})")
    return failures


def _t_family() -> list[str]:
    g = _hydra2()
    failures = _expect_equal(g, invert(t_word(1)) * t_word(0), a(1), "t_1^-1 t_0 = a1")
    rewritten = commutator(invert(t_word(0)), invert(t_word(2)))
    if rewritten != notinh_witness():
        failures.append(f"[t_0^-1, t_2^-1] = {format_word(rewritten)} differs from the witness word")
    return failures


def _intersection_generators() -> list[str]:
    g = _hydra2()
    failures = []
    for r in range(1, 4):
        sub = SubgroupSpec((r, 0))
        for i in range(-2, 4):
            generator = invert(t_word(i)) * t_word(i - 1) ** (r + 1)
            label = f"t_{i}^-1 t_{i - 1}^{r + 1}"
            failures += _expect_equal(g, (a(1) * t(r)).conjugate(a(2, i - 1)), generator, label)
            failures += _expect_verdict(g, sub, generator, Verdict.MEMBER, label)
    return failures


def _telescoping() -> list[str]:
    g = _hydra2()
    failures = []
    for r in (1, 2):
        sub = SubgroupSpec((r, 0))
        for i in (-1, -2):
            e = (r + 1) ** abs(i)
            s = invert(t_word(0)) * t_word(i) ** e
            product = invert(t_word(0)) * t_word(-1) ** (r + 1)
            for m in range(1, abs(i)):
                product = product * (invert(t_word(-m)) * t_word(-m - 1) ** (r + 1)) ** ((r + 1) ** m)
            failures += _expect_equal(g, s, product, f"telescoping r={r} i={i}")

            generator = invert(t_word(i)) * t_word(i - 1) ** (r + 1)
            failures += _expect_equal(g, generator.conjugate(t_word(0)), s * generator * invert(s),
                                      f"t_0-conjugate r={r} i={i}")
            shifted = t_word(i) ** e * invert(t_word(0))
            failures += _expect_equal(g, generator.conjugate(invert(t_word(0))), generator.conjugate(shifted),
                                      f"t_0^-1-conjugate r={r} i={i}")
            failures += _expect_verdict(g, sub, s, Verdict.MEMBER, f"t_0^-1 t_{i}^{e}")
            failures += _expect_verdict(g, sub, generator.conjugate(t_word(0)), Verdict.MEMBER,
                                        f"t_0-conjugate r={r} i={i}")
    return failures


def _t_family_commutes() -> list[str]:
    g = _hydra2()
    failures = []
    for m in range(-3, 4):
        w = commutator(t_word(m), t_word(m + 1))
        if not is_trivial(g, w):
            failures.append(f"[t_{m}, t_{m + 1}] = {normalize(g, w)}")
    return failures


def _witness_outside() -> list[str]:
    g = _hydra2()
    w = notinh_witness()
    expected = NormalForm(0, parse_word("a1 a2^-1 a1^-1 a2 a1^-1 a2^-1 a1 a2"))
    failures = [] if normalize(g, w) == expected else [f"normal form {normalize(g, w)}"]
    for r in range(1, 4):
        result = member(g, SubgroupSpec((r, 0)), w)
        if result.verdict is not Verdict.NON_MEMBER:
            failures.append(f"witness in H2({r},0): {result}")
        elif str(Fraction(-r, r + 1)) not in result.obstruction:
            failures.append(f"obstruction for r={r} is '{result.obstruction}'")
    return failures


def _t_powers_outside() -> list[str]:
    g = _hydra2()
    failures = []
    for sub in (SubgroupSpec((1, 1)), SubgroupSpec((1, 0)), SubgroupSpec((2, 0)), SubgroupSpec((3, 0))):
        for m in (-5, -3, -1, 1, 2, 5):
            failures += _expect_verdict(g, sub, t(m), Verdict.NON_MEMBER, f"t^{m}")
    return failures


def _embedding_relations() -> list[str]:
    failures = []
    cases = [
        (validate_spec(2, [EMPTY, parse_word("a1^2")]), 2, (1, 1), 2),
        (validate_spec(3, [EMPTY, EMPTY, parse_word("a1 a2")]), 3, (1, 1, 1), 2),
    ]
    for spec, c, powers, sigma in cases:
        w_c = spec.twist(c)
        failures += _expect_equal(spec, w_c.conjugate(t()), w_c, f"{spec.name}: t fixes w{c}")
        failures += _expect_equal(spec, a(c).conjugate(t()), a(c) * w_c, f"{spec.name}: a{c}^t = a{c} w{c}")
        sub = SubgroupSpec(powers)
        failures += _expect_verdict(spec, sub, w_c * t(sigma), Verdict.MEMBER, f"{spec.name}: w{c} t^{sigma}")
        failures += _expect_verdict(spec, sub, a(c) * t(powers[c - 1]), Verdict.MEMBER, f"{spec.name}: a{c} t^r")
    return failures


def _abelianization() -> list[str]:
    g = _hydra2()
    failures = []
    if abelianize(g, a(2)) != (1, 0):
        failures.append(f"a2 -> {abelianize(g, a(2))}")
    for r in range(1, 4):
        if abelianize(g, a(1) * t(r)) != (0, r):
            failures.append(f"a1 t^{r} -> {abelianize(g, a(1) * t(r))}")
    return failures


def _pullback_witness() -> list[str]:
    g = _hydra2()
    failures = _expect_equal(g, PHI(pullback_witness()), bks_witness(), "PHI(g0) = [t_1^-1, t_-1^-1]")
    failures += _expect_verdict(g, SubgroupSpec((1, 1)), pullback_witness(), Verdict.NON_MEMBER, "g0")
    return failures


def _transported_witness() -> list[str]:
    spec = validate_spec(2, [EMPTY, parse_word("a1^2")])
    sub = SubgroupSpec((1, 1))
    transport = transport_witness(spec, sub)
    failures = []
    if transport.embedded_powers != (2, 1):
        failures.append(f"embedded subgroup H2{transport.embedded_powers}")
    if transport.result.verdict is not Verdict.NON_MEMBER:
        failures.append(f"embedded witness is {transport.result}")
    failures += _expect_verdict(spec, sub, transport.witness, Verdict.NON_MEMBER, "transported witness")
    return failures


ITEMS: list[CheckItem] = [
    CheckItem(1, "phi-endomorphism", ("phi",), "PHI respects [a1, t] = 1 and [a2, t] = a1", _phi_endomorphism),
    CheckItem(2, "phi-surjective", ("phi",), "a1, a2, t lie in the image of PHI", _phi_surjective),
    CheckItem(3, "phi-subgroup-images", ("phi",), "PHI(a1 t) = t a2^-1 t^-2 a2, PHI(a2 t) = a2^-1",
              _phi_subgroup_images),
    CheckItem(4, "t-commutes-t1", ("phi",), "t commutes with a2^-1 t^-1 a2", _t_commutes_with_t1),
    CheckItem(5, "bks-relabel", ("phi",), "one-relator presentation matches PHI(H2)", _bks_relabel),
    CheckItem(6, "eta-family", ("eta",), "eta(s) fixes a1 t^r and sends a2 t to a2 t^s", _eta_family),
    CheckItem(7, "t-family", ("t-family",), "t_1^-1 t_0 = a1 and the witness is [t_0^-1, t_2^-1]", _t_family),
    CheckItem(8, "intersection-generators", ("t-family",), "(a1 t^r)^(a2^(i-1)) = t_i^-1 t_(i-1)^(r+1) in H",
              _intersection_generators),
    CheckItem(9, "telescoping", ("t-family",), "t_0^-1 t_i^((r+1)^|i|) telescopes into H", _telescoping),
    CheckItem(10, "t-family-commutes", ("t-family",), "[t_m, t_(m+1)] = 1", _t_family_commutes),
    CheckItem(11, "witness-outside", ("notinh",), "[t^-1, a2^-2 t^-1 a2^2] is not in H2(r,0)", _witness_outside),
    CheckItem(12, "embedding-relations", ("embedding",), "<w_c, a_c, t> is a copy of G2", _embedding_relations),
    CheckItem(13, "abelianization", ("abelian",), "H2(r,0) maps onto <(0,r), (1,0)>", _abelianization),
    CheckItem(14, "pullback-witness", ("witness",), "PHI^-1 of [t_1^-1, t_-1^-1] is outside H2",
              _pullback_witness),
    CheckItem(15, "t-powers-outside", ("notinh",), "<t> meets H trivially", _t_powers_outside),
    CheckItem(16, "transported-witness", ("embedding", "witness"), "witness for H2(1,1) in G2(a1^2)",
              _transported_witness),
]


def select_items(selector: str | None = None) -> list[CheckItem]:
    if selector is None:
        return list(ITEMS)
    return [item for item in ITEMS if selector in item.tags or selector == item.key]


def run_suite(selector: str | None = None) -> SuiteReport:
    results = []
    for item in select_items(selector):
        _LOGGER.debug(f"checking item {item.id} {item.key}")
        results.append(ItemResult(item, item.check()))
    report = SuiteReport(results)
    if not report.passed:
        _LOGGER.warning(f"{sum(not r.passed for r in results)} identity checks failed")
    return report
