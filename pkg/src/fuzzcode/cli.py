"""Command-line front end.

Exit codes: 0 success, 1 verification or decoding failure, 2 usage or
parse error.  Set ``FUZZCODE_CAP`` to change the enumeration cap.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction
from typing import Sequence

from . import oracle
from .catalog import FUZZY_CATALOG
from .code import LinearCode
from .decoder import classic_decode, decode
from .duality import (
    HALF,
    fuzzy_dual,
    is_fuzzy_self_dual,
    is_fuzzy_self_orthogonal,
    self_dual_levels,
)
from .errors import (
    DualDoesNotExist,
    EmptyCut,
    FieldError,
    FuzzCodeError,
    InvariantError,
    MembershipZeroOutsideChain,
    NotNested,
    ParseError,
    TooLarge,
)
from .fileio import dumps, read_code
from .fuzzy import FuzzyLinearCode, as_level, direct_sum, ext_sum, format_level, from_level_map, meet
from .gf import format_vector, parse_vector
from .simulate import simulate
from .zoo import ext_hamming_8_4, fuzzy_reed_muller, golay_24_12, hamming_7_4, reed_muller, simplex_7_3

LINEAR_ZOO = {
    "hamming": hamming_7_4,
    "ext-hamming": ext_hamming_8_4,
    "simplex": simplex_7_3,
    "golay": golay_24_12,
}

VISIBLE = "construct,info,verify,encode,decode,simulate,meet,directsum,extsum,dual,fuzzy-dual"


class UsageError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _level(text: str) -> Fraction:
    try:
        return as_level(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _load(path: str):
    return read_code(path)


def _load_fuzzy(path: str) -> FuzzyLinearCode:
    code = _load(path)
    if not isinstance(code, FuzzyLinearCode):
        raise UsageError(f"{path} holds a linear code; a fuzzy code is required")
    return code


def _distance_text(C: LinearCode) -> str:
    try:
        d = C.min_distance()
    except TooLarge:
        return "?"
    return "-" if d is None else str(d)


# -- commands ------------------------------------------------------------------

def cmd_construct(args) -> int:
    name = args.name
    if name in LINEAR_ZOO:
        code = LINEAR_ZOO[name]()
    elif name == "rm":
        if args.r is None or args.m is None:
            raise UsageError("rm needs --r and --m")
        code = reed_muller(args.r, args.m)
    elif name == "fuzzy-rm":
        if args.m is None:
            raise UsageError("fuzzy-rm needs --m")
        alphas = [_level(a) for a in args.alphas.split()] if args.alphas else None
        code = fuzzy_reed_muller(args.m, alphas)
    elif name in FUZZY_CATALOG:
        code = FUZZY_CATALOG[name]()
    else:
        raise UsageError(f"unknown code {name!r}")
    _emit(dumps(code), args.output)
    return 0


def _info_fuzzy(A: FuzzyLinearCode) -> list[str]:
    lines = [f"fuzzy code over GF({A.field.p}), length {A.n}, {A.m} levels"]
    lines.append("image: " + " ".join(format_level(a) for a in A.image()))
    for a, c in zip(A.alphas, A.cuts):
        lines.append(f"level {format_level(a)}: k={c.k} d={_distance_text(c)}")
    lines.append(f"fuzzy self-orthogonal: {_yes(is_fuzzy_self_orthogonal(A))}")
    lines.append(f"fuzzy self-dual: {_yes(is_fuzzy_self_dual(A))}")
    return lines


def cmd_info(args) -> int:
    code = _load(args.code)
    if isinstance(code, FuzzyLinearCode):
        lines = _info_fuzzy(code)
    else:
        try:
            s = code.summary()
            lines = [s.line()]
            if s.t is not None:
                lines.append(f"corrects {s.t} errors")
        except TooLarge:
            tag = "self-dual" if code.is_self_dual() else "self-orthogonal" if code.is_self_orthogonal() else "plain"
            lines = [f"{code.n} {code.k} ? {tag}"]
    print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    try:
        code = _load(args.code)
    except InvariantError as exc:
        print(f"invariant violated: {exc}")
        return 1
    failed = False
    if isinstance(code, FuzzyLinearCode):
        print(f"invariants: ok ({code.m} nested levels)")
        so, sd = is_fuzzy_self_orthogonal(code), is_fuzzy_self_dual(code)
        print(f"fuzzy self-orthogonal: {_yes(so)}")
        print(f"fuzzy self-dual: {_yes(sd)}")
        if so:
            stray = [a for a in self_dual_levels(code) if a != HALF]
            if stray:
                print("self-dual cut away from 1/2: " + " ".join(format_level(a) for a in stray))
                failed = True
        if args.expect == "self-dual":
            failed |= not sd
        elif args.expect == "self-orthogonal":
            failed |= not so
    else:
        print(f"invariants: ok ([{code.n},{code.k}] basis in reduced form)")
        so, sd = code.is_self_orthogonal(), code.is_self_dual()
        print(f"self-orthogonal: {_yes(so)}")
        print(f"self-dual: {_yes(sd)}")
        if args.expect == "self-dual":
            failed |= not sd
        elif args.expect == "self-orthogonal":
            failed |= not so
    return 1 if failed else 0


def cmd_encode(args) -> int:
    code = _load(args.code)
    if isinstance(code, FuzzyLinearCode):
        if args.alpha is None:
            raise UsageError("fuzzy codes need --alpha to pick a cut")
        C = code.cut(_level(args.alpha))
        if C is None:
            raise EmptyCut(f"cut at {args.alpha} is empty")
    else:
        C = code
    msg = parse_vector(args.message, C.field, C.k)
    x = C.encode(msg)
    print(format_vector(x, C.field))
    if isinstance(code, FuzzyLinearCode):
        print(f"membership: {format_level(code.membership(x))}")
    return 0


def cmd_decode(args) -> int:
    code = _load(args.code)
    f = code.field
    y = parse_vector(args.word, f, code.n)
    report = sys.stderr if args.dump_table else sys.stdout
    if isinstance(code, LinearCode):
        r = classic_decode(code, y)
        if not r.corrected:
            print("no correction needed", file=report)
        print(f"corrected: {format_vector(r.codeword, f)}", file=report)
        print(f"error: {format_vector(r.error_vector, f)}", file=report)
        print(f"reliable: {_yes(r.reliable)}", file=report)
        if args.dump_table:
            print("\n".join(r.table.dump_lines()))
        return 0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", MembershipZeroOutsideChain)
        r = decode(code, _level(args.alpha1), y)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print(f"received: {format_vector(y, f)}", file=report)
    print(f"received membership: {format_level(r.received_membership)}", file=report)
    if r.table is None:
        print("no correction needed", file=report)
        return 0
    t = r.table
    print(f"syndrome: {format_vector(r.syndrome, f)}", file=report)
    print(f"error: {format_vector(r.error_vector, f)}", file=report)
    print(f"corrected: {format_vector(r.codeword, f)}", file=report)
    print(f"corrected membership: {format_level(r.corrected_membership)}", file=report)
    print(f"reliable: {_yes(r.reliable)}", file=report)
    print(f"table entries: {len(t)}", file=report)
    print(f"full table entries: {t.full_table_size}", file=report)
    print(f"reduction ratio: {t.reduction_ratio}", file=report)
    if args.dump_table:
        print("\n".join(t.dump_lines()))
    return 0


def cmd_simulate(args) -> int:
    A = _load_fuzzy(args.code)
    if not 0 <= args.channel_p < 1:
        raise UsageError("--channel-p must lie in [0, 1)")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    rep = simulate(A, _level(args.alpha1), args.channel_p, args.trials, args.seed)
    sys.stdout.write(rep.text())
    return 0


def cmd_meet(args) -> int:
    _emit(dumps(meet(_load_fuzzy(args.a), _load_fuzzy(args.b))), args.output)
    return 0


def cmd_directsum(args) -> int:
    _emit(dumps(direct_sum(_load_fuzzy(args.a), _load_fuzzy(args.b))), args.output)
    return 0


def cmd_extsum(args) -> int:
    A, B = _load_fuzzy(args.a), _load_fuzzy(args.b)
    L, linear = ext_sum(A, B)
    for x in L.vectors():
        print(f"{format_vector(x, A.field)} {format_level(L(x))}")
    print(f"linear: {_yes(linear)}")
    if linear and args.output:
        _emit(dumps(from_level_map(L)), args.output)
    return 0


def cmd_dual(args) -> int:
    code = _load(args.code)
    if isinstance(code, FuzzyLinearCode):
        raise UsageError("use fuzzy-dual for fuzzy codes")
    _emit(dumps(code.dual()), args.output)
    return 0


def cmd_fuzzy_dual(args) -> int:
    _emit(dumps(fuzzy_dual(_load_fuzzy(args.code))), args.output)
    return 0


def cmd_oracle(args) -> int:
    code = _load(args.code)
    if isinstance(code, FuzzyLinearCode):
        if args.query == "membership":
            print(format_level(oracle.brute_membership(code, parse_vector(args.word, code.field, code.n))))
            return 0
        code = code.cuts[-1] if code.cuts else LinearCode.zero(code.field, code.n)
    words = oracle.brute_span(code.basis.rows, code.field, code.n)
    if args.query == "span":
        for w in sorted(words):
            print(format_vector(w, code.field))
    elif args.query == "dual":
        for w in sorted(oracle.brute_dual(words, code.field, code.n)):
            print(format_vector(w, code.field))
    elif args.query == "mindist":
        print(oracle.brute_min_distance(words))
    elif args.query == "nearest":
        if args.word is None:
            raise UsageError("nearest needs --word")
        for w in oracle.brute_nearest(words, parse_vector(args.word, code.field, code.n)):
            print(format_vector(w, code.field))
    else:
        raise UsageError(f"query {args.query!r} needs a fuzzy code")
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzcode",
        description="Linear and fuzzy linear codes over prime fields.",
        epilog="Exit codes: 0 ok, 1 verification/decoding failure, 2 usage/parse error. "
        "FUZZCODE_CAP overrides the enumeration cap.",
    )
    sub = parser.add_subparsers(dest="command", metavar="{" + VISIBLE + "}")
    sub.required = True

    p = sub.add_parser("construct", help="write a named code to a file")
    names = sorted([*LINEAR_ZOO, "rm", "fuzzy-rm", *FUZZY_CATALOG])
    p.add_argument("name", choices=names, help="code name")
    p.add_argument("--r", type=int, help="Reed-Muller order")
    p.add_argument("--m", type=int, help="Reed-Muller log2 length")
    p.add_argument("--alphas", help="fuzzy-rm levels, space separated fractions above 1/2")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("info", help="print parameters and duality verdicts")
    p.add_argument("code", help="LINEARCODE or FUZZYCODE file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", help="re-check invariants and duality predicates")
    p.add_argument("code")
    p.add_argument("--expect", choices=["self-dual", "self-orthogonal"],
                   help="exit 1 unless the code has this property")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode a message with a code or a fuzzy cut")
    p.add_argument("--code", required=True)
    p.add_argument("--message", required=True, help="k residues")
    p.add_argument("--alpha", help="cut level for fuzzy codes")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="fuzzy syndrome decoding (classical for linear codes)")
    p.add_argument("--code", required=True)
    p.add_argument("--alpha1", default="1", help="sending level, e.g. 1/2")
    p.add_argument("--word", required=True, help="received word")
    p.add_argument("--dump-table", action="store_true",
                   help="print the table to stdout as 'syndrome leader weight unique'; report goes to stderr")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="seeded q-ary symmetric channel simulation")
    p.add_argument("--code", required=True)
    p.add_argument("--alpha1", required=True)
    p.add_argument("--channel-p", type=float, required=True, help="symbol error probability in [0, 1)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    for name, func, doc in [("meet", cmd_meet, "pointwise minimum"), ("directsum", cmd_directsum, "direct sum")]:
        p = sub.add_parser(name, help=doc)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("extsum", help="extension-principle sum with a linearity verdict")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output", help="write the sum as a FUZZYCODE when it is linear")
    p.set_defaults(func=cmd_extsum)

    p = sub.add_parser("dual", help="dual of a linear code")
    p.add_argument("code")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("fuzzy-dual", help="fuzzy dual of a fuzzy code")
    p.add_argument("code")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fuzzy_dual)

    p = sub.add_parser("oracle")
    p.add_argument("query", choices=["span", "dual", "mindist", "nearest", "membership"])
    p.add_argument("--code", required=True)
    p.add_argument("--word")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantError, DualDoesNotExist, EmptyCut, NotNested, TooLarge, FuzzCodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
