"""Command line front end; results go to stdout, diagnostics to stderr."""
from __future__ import annotations

import argparse
import logging
import sys

from .config import dump_spec_text, limits_from_options, resolve_group, resolve_subgroup
from .const import (
    CONF_MAX_LENGTH,
    CONF_WINDOW,
    CONF_MAX_DEGREE,
    CONF_MAX_ENTRIES,
    DEFAULT_ORACLE_LENGTH,
    DEFAULT_SCAN_DEGREE,
    EXIT_OK,
    EXIT_NEGATIVE,
    EXIT_INPUT_ERROR,
    EXIT_RESOURCE,
    EXIT_UNDECIDED,
    PACKAGE_VERSION,
    PINCH_ORDER_LEFT,
    PINCH_ORDER_RIGHT,
    WITNESS_KINDS,
)
from .expressions import parse_word
from .extensions import Triviality, amalgam_decide, hnn_decide, rf_witness
from .groups import equal, normalize
from .identities import run_suite
from .membership import Separability, Verdict, classify_separability, member, pieces, transport_witness
from .oracle import distortion_table, enumerate_subgroup
from .quotients import scan
from .utils import (
    NoWitnessError,
    ResourceLimitError,
    SpecError,
    UnsupportedCaseError,
    use_limits,
)
from .words import format_word

_LOGGER = logging.getLogger(__name__)

_MEMBERSHIP_EXIT = {
    Verdict.MEMBER: EXIT_OK,
    Verdict.NON_MEMBER: EXIT_NEGATIVE,
    Verdict.UNDECIDED: EXIT_UNDECIDED,
}

_TRIVIALITY_EXIT = {
    Triviality.TRIVIAL: EXIT_OK,
    Triviality.NON_TRIVIAL: EXIT_NEGATIVE,
    Triviality.UNDECIDED: EXIT_UNDECIDED,
}


def _context(args):
    spec, file_sub = resolve_group(args.group)
    sub = resolve_subgroup(spec, args.subgroup, file_sub)
    return spec, sub


def cmd_normalize(args) -> int:
    spec, _ = _context(args)
    print(normalize(spec, parse_word(args.expr)))
    return EXIT_OK


def cmd_equal(args) -> int:
    spec, _ = _context(args)
    same = equal(spec, parse_word(args.left), parse_word(args.right))
    print("true" if same else "false")
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_pieces(args) -> int:
    spec, _ = _context(args)
    nf = normalize(spec, parse_word(args.expr))
    level = args.level or spec.k
    print(f"t^{nf.t_exp} " + "".join(str(piece) for piece in pieces(nf.u, level)))
    return EXIT_OK


def cmd_member(args) -> int:
    spec, sub = _context(args)
    result = member(spec, sub, parse_word(args.expr))
    print(result)
    return _MEMBERSHIP_EXIT[result.verdict]


def cmd_express(args) -> int:
    spec, sub = _context(args)
    result = member(spec, sub, parse_word(args.expr))
    if result.is_member:
        print(format_word(result.certificate))
    else:
        print(result)
    return _MEMBERSHIP_EXIT[result.verdict]


def cmd_hnn_decide(args) -> int:
    spec, sub = _context(args)
    result = hnn_decide(spec, sub, parse_word(args.expr), order=args.order)
    for step in result.steps:
        _LOGGER.info(f"pinched {format_word(step.inner)} = {format_word(step.certificate)} at {step.position}")
    print(result)
    return _TRIVIALITY_EXIT[result.verdict]


def cmd_amalgam_decide(args) -> int:
    spec, sub = _context(args)
    result = amalgam_decide(spec, sub, parse_word(args.expr))
    print(result)
    return _TRIVIALITY_EXIT[result.verdict]


def cmd_scan_quotients(args) -> int:
    spec, sub = _context(args)
    report = scan(spec, sub, parse_word(args.expr), args.degree, progress=args.progress)
    for line in report.lines():
        print(line)
    for hom in report.separating:
        print(f"separating n={hom.degree}: {hom}")
    return EXIT_OK


def cmd_oracle_dump(args) -> int:
    spec, sub = _context(args)
    table = enumerate_subgroup(spec, sub, args.length, progress=args.progress)
    for depth, certificate, nf in sorted(table.records(), key=lambda record: (record[0], record[1])):
        print(f"{depth}\t{format_word(certificate)}\t{nf.t_exp}\t{format_word(nf.u)}")
    return EXIT_OK


def cmd_distortion_table(args) -> int:
    spec, sub = _context(args)
    table = enumerate_subgroup(spec, sub, args.length, progress=args.progress)
    for row in distortion_table(table):
        print(row)
    return EXIT_OK


def cmd_verify_identities(args) -> int:
    report = run_suite(args.filter)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_spec_validate(args) -> int:
    spec, sub = _context(args)
    sys.stdout.write(dump_spec_text(spec, sub))
    return EXIT_OK


def cmd_witness(args) -> int:
    spec, sub = _context(args)
    print(format_word(rf_witness(args.kind, spec, sub)))
    return EXIT_OK


def cmd_transport(args) -> int:
    spec, sub = _context(args)
    transport = transport_witness(spec, sub)
    sigma, s = transport.embedded_powers
    print(f"index={transport.index} embedded=H2({sigma},{s}) {transport.result.verdict.value}")
    print(format_word(transport.witness))
    return _MEMBERSHIP_EXIT[transport.result.verdict]


def cmd_classify(args) -> int:
    spec, sub = _context(args)
    verdict = classify_separability(spec, sub)
    print(f"{verdict.status.value}: {verdict.reason}")
    if verdict.status is Separability.OPEN:
        return EXIT_UNDECIDED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="hydra2", help="preset such as hydra3, or a spec file")
    common.add_argument("--subgroup", default=None, help="inline powers such as r=1,0, or a spec file")
    common.add_argument("--window", type=int, default=None, help="coset search window above level 2")
    common.add_argument("--max-length", type=int, default=None, help="word length guard")
    common.add_argument("--max-degree", type=int, default=None, help="largest permutation degree allowed")
    common.add_argument("--max-entries", type=int, default=None, help="oracle entry cap")
    common.add_argument("--progress", action="store_true", help="show progress bars")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="hydra", description="Membership and separability tools for hydra groups")
    parser.add_argument("--version", action="version", version=f"%(prog)s {PACKAGE_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, summary):
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.set_defaults(handler=handler)
        return sub

    add("normalize", cmd_normalize, "print the normal form t^r u").add_argument("expr")
    equal_parser = add("equal", cmd_equal, "compare two words in the group")
    equal_parser.add_argument("left")
    equal_parser.add_argument("right")
    pieces_parser = add("pieces", cmd_pieces, "split the normal form into pieces")
    pieces_parser.add_argument("expr")
    pieces_parser.add_argument("--level", type=int, default=None)
    add("member", cmd_member, "decide membership in the subgroup").add_argument("expr")
    add("express", cmd_express, "write a member as a word in h1..hk").add_argument("expr")
    hnn_parser = add("hnn-decide", cmd_hnn_decide, "word problem in the HNN extension along H")
    hnn_parser.add_argument("expr")
    hnn_parser.add_argument("--order", choices=[PINCH_ORDER_LEFT, PINCH_ORDER_RIGHT], default=PINCH_ORDER_LEFT)
    add("amalgam-decide", cmd_amalgam_decide, "word problem in the double along H").add_argument("expr")
    scan_parser = add("scan-quotients", cmd_scan_quotients, "look for homs to S_n separating g from H")
    scan_parser.add_argument("expr")
    scan_parser.add_argument("--degree", type=int, default=DEFAULT_SCAN_DEGREE)
    add("oracle-dump", cmd_oracle_dump, "list subgroup elements by certificate length").add_argument(
        "--length", type=int, default=DEFAULT_ORACLE_LENGTH)
    add("distortion-table", cmd_distortion_table, "ambient length statistics per certificate length").add_argument(
        "--length", type=int, default=DEFAULT_ORACLE_LENGTH)
    add("verify-paper", cmd_verify_identities, "check the identity suite").add_argument("--filter", default=None)
    add("spec-validate", cmd_spec_validate, "validate and print the canonical spec")
    add("witness", cmd_witness, "print a witness against residual finiteness").add_argument(
        "--kind", choices=WITNESS_KINDS, required=True)
    add("transport", cmd_transport, "transport a G2 witness into the group")
    add("classify", cmd_classify, "decide separability of H where known")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        limits = limits_from_options(
            {
                key: value
                for key, value in {
                    CONF_WINDOW: args.window,
                    CONF_MAX_LENGTH: args.max_length,
                    CONF_MAX_DEGREE: args.max_degree,
                    CONF_MAX_ENTRIES: args.max_entries,
                }.items()
                if value is not None
            }
        )
        with use_limits(limits):
            return args.handler(args)
    except (SpecError, NoWitnessError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except UnsupportedCaseError as err:
        print(f"unsupported: {err}", file=sys.stderr)
        return EXIT_UNDECIDED
