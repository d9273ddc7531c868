"""Command-line front end: word-expression parser and subcommand dispatch.

Composition convention, stated once and prominently: in a word expression
the LEFTMOST token applies LAST, mirroring the customary right-to-left
notation for composing functors.  "F * E" therefore means "E first, then
F".  Weights printed with a word are always its SOURCE weight.

Grammar (ASCII):  token := ("E" | "F") ["^(" INT ")"] ["<" INT ">"]
with tokens separated by whitespace or "*"; a shift "<k>" contributes the
monomial q^k to the multiplicity of the word.

Exit codes: 0 on success or PASS, 1 on a verification FAIL (the report is
still printed), 2 on usage or parse errors.  With --json a single JSON
object {"command", "params", "result", "ledger", "verdict"} is emitted
with fixed key order, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Dict, List, Optional, Tuple

from . import homdim, ktheory, nilhecke
from .corpus import corpus_words
from .qcoeff import BigradedLaurent
from .report import Report
from .rewrite import normalize
from .selftest import run_selftest
from .words import (E, F, FormalSum, Generator, WeightConfig, Word, WordOrZero,
                    Zero, make_word)


class WordParseError(ValueError):
    """Parse failure, carrying the byte offset of the offending input."""

    def __init__(self, message: str, offset: int):
        super().__init__("%s (at byte %d)" % (message, offset))
        self.offset = offset


_INT = re.compile(r"[-+]?\d+")


def tokenize_word(text: str) -> List[Tuple[str, int, int]]:
    """Scan a word expression into (kind, power, shift) triples, leftmost first."""
    tokens: List[Tuple[str, int, int]] = []
    i, n = 0, len(text)

    def skip_sep(i: int) -> int:
        while i < n and (text[i].isspace() or text[i] == "*"):
            i += 1
        return i

    def read_int(i: int, what: str) -> Tuple[int, int]:
        m = _INT.match(text, i)
        if not m:
            raise WordParseError("expected an integer %s" % what, i)
        return int(m.group()), m.end()

    i = skip_sep(i)
    while i < n:
        c = text[i]
        if c not in (E, F):
            raise WordParseError("expected 'E' or 'F'", i)
        kind, power, shift = c, 1, 0
        i += 1
        if text.startswith("^(", i):
            power, i = read_int(i + 2, "power after '^('")
            if i >= n or text[i] != ")":
                raise WordParseError("expected ')' closing the power", i)
            if power < 1:
                raise WordParseError("divided power must be >= 1", i)
            i += 1
        if i < n and text[i] == "<":
            shift, i = read_int(i + 1, "shift after '<'")
            if i >= n or text[i] != ">":
                raise WordParseError("expected '>' closing the shift", i)
            i += 1
        tokens.append((kind, power, shift))
        j = skip_sep(i)
        if j == i and i < n:
            raise WordParseError("expected a separator between tokens", i)
        i = j
    if not tokens and text.strip():
        raise WordParseError("empty word expression", 0)
    return tokens


def parse_word(text: str, config: WeightConfig, source: int) -> FormalSum:
    """Parse a word expression into a one-term formal sum (empty if zero).

    The leftmost token applies last; shifts accumulate multiplicatively
    into the q-power multiplying the word.
    """
    tokens = tokenize_word(text)
    letters = tuple(Generator(kind, power) for kind, power, _ in reversed(tokens))
    total_shift = sum(shift for _, _, shift in tokens)
    word = make_word(config, source, letters)
    return FormalSum.of(word, BigradedLaurent.q_power(total_shift))


def print_word_expr(word: Word) -> str:
    """Render a word so that parsing it back yields the identical word."""
    return " * ".join(str(g) for g in reversed(word.letters)) or "1"


def _emit_json(payload: Dict[str, object]):
    print(json.dumps(payload, separators=(", ", ": ")))


def _report_payload(command: str, params: Dict[str, object], report: Report):
    return {
        "command": command,
        "params": params,
        "result": {"checked": len(report.lines), "failed": len(report.failures())},
        "ledger": [line.to_dict() for line in report.lines],
        "verdict": report.verdict,
    }


def _finish_report(command: str, params: Dict[str, object], report: Report,
                   as_json: bool, verbose: bool = False) -> int:
    if as_json:
        _emit_json(_report_payload(command, params, report))
    else:
        print(report.render(verbose=verbose))
    return 0 if report.passed else 1


# -- subcommand handlers -----------------------------------------------------

def _cmd_normalize(args) -> int:
    config = WeightConfig(args.N)
    total = parse_word(args.word, config, args.weight)
    result = normalize(total)
    if args.json:
        terms = [{"word": str(w), "multiplicity": str(c)}
                 for w, c in result.sorted_items()]
        _emit_json({
            "command": "normalize",
            "params": {"N": args.N, "weight": args.weight, "word": args.word},
            "result": {"terms": terms},
            "ledger": [],
            "verdict": "OK",
        })
    else:
        print(str(result))
    return 0


def _cmd_ktheory_verify(args) -> int:
    convention = ktheory.CONVENTION_NAMES[args.convention]
    report = ktheory.verify_relations(args.N, args.relation, convention=convention)
    params = {"N": args.N, "relation": args.relation, "convention": args.convention}
    return _finish_report("ktheory verify", params, report, args.json)


def _cmd_ktheory_matrix(args) -> int:
    config = WeightConfig(args.N)
    tokens = tokenize_word(args.word)
    steps = sum(2 * p if k == E else -2 * p for k, p, _ in tokens)
    target = args.weight + steps
    total = parse_word(args.word, config, args.weight)
    mat = ktheory.formalsum_matrix(total, config, args.weight, target)
    params = {"N": args.N, "weight": args.weight, "word": args.word}
    if args.json:
        entries = [[str(mat.entry(i, j)) for j in range(mat.cols)]
                   for i in range(mat.rows)]
        _emit_json({
            "command": "ktheory matrix",
            "params": params,
            "result": {"rows": mat.rows, "cols": mat.cols,
                       "source": args.weight, "target": target,
                       "entries": entries},
            "ledger": [],
            "verdict": "OK",
        })
    else:
        print("matrix %dx%d from weight %d to %d" % (mat.rows, mat.cols,
                                                     args.weight, target))
        print(str(mat))
    return 0


def _cmd_nilhecke_verify(args) -> int:
    report = nilhecke.verify_nilhecke(args.n, args.max_degree, args.trials, args.seed)
    params = {"n": args.n, "max_degree": args.max_degree,
              "trials": args.trials, "seed": args.seed}
    return _finish_report("nilhecke verify", params, report, args.json)


_NH_TOKEN = re.compile(r"\s*([XDxd])\s*_?(\d+)\s*\*?")
_POLY_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:\*?\s*x\d+(?:\^\d+)?\s*)*)")
_POLY_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_nh_word(text: str, n: int):
    """Parse generators like "X1 * D1"; the leftmost factor applies last."""
    ops = []
    i = 0
    while i < len(text):
        m = _NH_TOKEN.match(text, i)
        if not m:
            if text[i:].strip():
                raise WordParseError("expected X<i> or D<i>", i)
            break
        op, idx = m.group(1).upper(), int(m.group(2))
        hi = n if op == "X" else n - 1
        if not 1 <= idx <= hi:
            raise WordParseError("index %d out of range (1..%d)" % (idx, hi), i)
        ops.append((op, idx))
        i = m.end()
    if not ops:
        raise WordParseError("empty generator word", 0)
    return list(reversed(ops))


def parse_poly(text: str, n: int) -> nilhecke.MPoly:
    """Parse integer polynomials like "x1^2*x2 - 3*x1 + 2"."""
    out = nilhecke.MPoly.zero(n)
    i = 0
    seen = False
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _POLY_TERM.match(text, i)
        if not m or m.end() == i or (m.group(1) is None and m.group(2) is None
                                     and not m.group(3).strip()):
            raise WordParseError("expected a polynomial term", i)
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        exps = [0] * n
        for fm in _POLY_FACTOR.finditer(m.group(3)):
            idx, e = int(fm.group(1)), int(fm.group(2) or 1)
            if not 1 <= idx <= n:
                raise WordParseError("variable x%d out of range (1..%d)" % (idx, n),
                                     i + fm.start())
            exps[idx - 1] += e
        out = out + nilhecke.MPoly.monomial(tuple(exps), sign * coeff)
        seen = True
        i = m.end()
    if not seen:
        raise WordParseError("empty polynomial", 0)
    return out


def _cmd_nilhecke_apply(args) -> int:
    word = parse_nh_word(args.word, args.n)
    poly = parse_poly(args.poly, args.n)
    result = nilhecke.apply_nh_word(word, poly)
    params = {"n": args.n, "word": args.word, "poly": args.poly}
    if args.json:
        _emit_json({
            "command": "nilhecke apply",
            "params": params,
            "result": {"polynomial": str(result)},
            "ledger": [],
            "verdict": "OK",
        })
    else:
        print(str(result))
    return 0


def _cmd_homdim(args) -> int:
    params = {"N": args.N, "weight": args.weight, "r": args.r, "claim": args.claim}
    if args.claim == "end-simple":
        cert = homdim.certify_end_simple(args.N, args.weight, args.r)
    elif args.claim == "ef-end":
        cert = homdim.certify_ef_end(args.N, args.weight)
    else:
        summary = homdim.classify_e2_degree2(args.N, args.weight)
        if args.json:
            _emit_json({
                "command": "homdim certify",
                "params": params,
                "result": summary.to_dict(),
                "ledger": [line.to_dict() for line in summary.lines],
                "verdict": "OK",
            })
        else:
            print(summary.render())
        return 0
    if args.json:
        d = cert.to_dict()
        _emit_json({
            "command": "homdim certify",
            "params": params,
            "result": {"claim": d["claim"], "instance": d["params"],
                       "dependencies": d["dependencies"], "witness": d["witness"]},
            "ledger": d["ledger"],
            "verdict": cert.verdict,
        })
    else:
        print(cert.render())
    return 0 if cert.passed else 1


def _cmd_selftest(args) -> int:
    lines: List[str] = []
    ok, reports = run_selftest(quick=args.quick, emit=lines.append)
    if args.json:
        _emit_json({
            "command": "selftest",
            "params": {"quick": args.quick},
            "result": [{"name": r.name, "checked": len(r.lines),
                        "verdict": r.verdict} for r in reports],
            "ledger": [line.to_dict() for r in reports for line in r.failures()],
            "verdict": "PASS" if ok else "FAIL",
        })
    else:
        print("\n".join(lines))
    return 0 if ok else 1


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catsl2",
        description="Symbolic verification engine for the divided-power "
                    "word calculus on an sl2-string of weights.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="rewrite a word into canonical form")
    p.add_argument("--N", type=int, required=True, help="highest weight")
    p.add_argument("--weight", type=int, required=True, help="source weight")
    p.add_argument("--word", required=True,
                   help="word expression; the leftmost token applies last")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_normalize)

    kt = sub.add_parser("ktheory", help="matrix oracle commands")
    ktsub = kt.add_subparsers(dest="subcommand", required=True)
    p = ktsub.add_parser("verify", help="check decomposition identities as matrices")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--relation", choices=("merge", "commute", "casimir", "all"),
                   default="all")
    p.add_argument("--convention", choices=sorted(ktheory.CONVENTION_NAMES),
                   default=ktheory.DEFAULT_CONVENTION_NAME,
                   help="coproduct convention; non-default choices are for "
                        "the convention-selection test and fail on purpose")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_ktheory_verify)
    p = ktsub.add_parser("matrix", help="matrix of a word on the weight spaces")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_ktheory_matrix)

    nh = sub.add_parser("nilhecke", help="nil affine Hecke polynomial representation")
    nhsub = nh.add_subparsers(dest="subcommand", required=True)
    p = nhsub.add_parser("verify", help="check the algebra relations")
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_nilhecke_verify)
    p = nhsub.add_parser("apply", help="apply a generator word to a polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True,
                   help="for example 'X1 * D1'; the leftmost factor applies last")
    p.add_argument("--poly", required=True, help="for example 'x1^2*x2 - 3'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_nilhecke_apply)

    p = sub.add_parser("homdim", help="graded Hom certificates")
    hdsub = p.add_subparsers(dest="subcommand", required=True)
    p = hdsub.add_parser("certify", help="produce a vanishing/simplicity certificate")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--weight", type=int, required=True,
                   help="midpoint weight for end-simple/e2-classify, anchor "
                        "weight for ef-end")
    p.add_argument("--r", type=int, default=1, help="divided power (end-simple)")
    p.add_argument("--claim", choices=("end-simple", "ef-end", "e2-classify"),
                   default="end-simple")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_homdim)

    p = sub.add_parser("selftest", help="run the full verification battery")
    p.add_argument("--quick", action="store_true", help="smaller sweep bounds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_selftest)
    return parser


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Parse argv and run; returns the exit code (0 ok, 1 FAIL, 2 usage)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except WordParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
