"""Command-line interface.

Every command writes one JSON document to stdout.  Exit codes: 0 success,
1 usage error, 2 unparsable input, 3 domain or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alexpoly import collapse, hosokawa, link_alexander
from .braid import closure_components, parse_braid
from .errors import DomainError, LetterOutOfRange, ParseError, SWToriError
from .obstruct import braided_torus_obstruction
from .surgeryfam import SurgeryBasisTriple, family_equal, mms_evaluate
from .swring import ManifoldBlock, adjunction_check, fibersum_relative, knot_surgery, link_surgery

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _braid(text: str):
    # out-of-range letters violate the braid grammar, so they exit as parse errors
    try:
        return parse_braid(text)
    except LetterOutOfRange as exc:
        raise ParseError(str(exc)) from exc


def _cmd_alexander(args):
    delta = link_alexander(_braid(args.braid), axis=args.axis)
    return delta.poly.to_dict()


def _cmd_hosokawa(args):
    b = _braid(args.braid)
    k, _ = closure_components(b)
    if k < 2:
        raise DomainError(f"closure of {args.braid!r} has {k} component; Hosokawa needs at least 2")
    delta = link_alexander(b).poly
    return hosokawa(collapse(delta), k).poly.to_dict()


def _cmd_knot_surgery(args):
    block = ManifoldBlock.from_json(_read(args.block))
    b = _braid(args.braid)
    k, _ = closure_components(b)
    if k != 1:
        raise DomainError(f"closure of {args.braid!r} is a {k}-component link, not a knot")
    return knot_surgery(block, link_alexander(b), args.class_name).to_dict()


def _cmd_link_surgery(args):
    blocks = [ManifoldBlock.from_json(_read(p)) for p in args.blocks]
    b = _braid(args.link_braid)
    return link_surgery(blocks, link_alexander(b)).to_dict()


def _cmd_fibersum(args):
    block = ManifoldBlock.from_json(_read(args.block))
    return fibersum_relative(block, _braid(args.braid), torus=args.class_name).to_dict()


def _cmd_mms(args):
    tr = SurgeryBasisTriple.from_json(_read(args.triple))
    return mms_evaluate(tr, args.p, args.q, args.r).to_dict()


def _cmd_family_equal(args):
    t1 = SurgeryBasisTriple.from_json(_read(args.t1))
    t2 = SurgeryBasisTriple.from_json(_read(args.t2))
    return family_equal(t1, t2).to_dict()


def _cmd_distinguish(args):
    return braided_torus_obstruction(_braid(args.braid1), _braid(args.braid2)).to_dict()


def _cmd_adjunction(args):
    return adjunction_check(args.g, args.s, args.pairings)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent the JSON output")

    parser = _Parser(prog="swtori", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a closed braid")
    p.add_argument("braid", help='braid word, e.g. "2: 1 1 1"')
    p.add_argument("--axis", action="store_true", help="include the braid axis")
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser("hosokawa", parents=[common], help="Hosokawa polynomial of a closed braid")
    p.add_argument("braid")
    p.set_defaults(func=_cmd_hosokawa)

    p = sub.add_parser("knot-surgery", parents=[common], help="knot surgery on a block")
    p.add_argument("--block", required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--class", dest="class_name", default=None, help="torus class (default: first)")
    p.set_defaults(func=_cmd_knot_surgery)

    p = sub.add_parser("link-surgery", parents=[common], help="link surgery on several blocks")
    p.add_argument("--blocks", nargs="+", required=True)
    p.add_argument("--link-braid", required=True)
    p.set_defaults(func=_cmd_link_surgery)

    p = sub.add_parser("fibersum", parents=[common], help="relative invariant of a braided torus")
    p.add_argument("--block", required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--class", dest="class_name", default=None)
    p.set_defaults(func=_cmd_fibersum)

    p = sub.add_parser("mms", parents=[common], help="evaluate the surgery formula at (p, q, r)")
    p.add_argument("--triple", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=_cmd_mms)

    p = sub.add_parser("family-equal", parents=[common], help="compare two surgery families")
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.set_defaults(func=_cmd_family_equal)

    p = sub.add_parser("distinguish", parents=[common], help="fiber-sum obstruction for two braids")
    p.add_argument("braid1")
    p.add_argument("braid2")
    p.set_defaults(func=_cmd_distinguish)

    p = sub.add_parser("adjunction", parents=[common], help="check the adjunction inequality")
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--pairings", type=int, nargs="*", default=[])
    p.set_defaults(func=_cmd_adjunction)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except ParseError as exc:
        print(f"swtori: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, SWToriError, ValueError) as exc:
        print(f"swtori: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if getattr(args, "pretty", False):
        text = json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    sys.stdout.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
