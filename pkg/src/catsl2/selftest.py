"""The end-to-end verification battery behind the `selftest` subcommand.

Nine numbered checks cover the whole engine: the like-kind merge and
mixed-pair commutation decompositions against the matrix oracle, the
quantum Casimir commutation, weight-space dimensions, rewrite soundness
and strategy independence over the seeded corpus, divided-power
integrality, the nil affine Hecke relations, the splitting idempotents,
and the graded Hom certificates.  Every check is exact; there are no
tolerances anywhere.  The quick variant shrinks the sweep bounds but runs
the same code paths.
"""

from __future__ import annotations

import time
from typing import Callable, List, Tuple

from . import homdim, ktheory, nilhecke
from .corpus import corpus_words
from .qcoeff import qfact
from .report import Report
from .rewrite import normalize
from .words import E, F, FormalSum, Generator, WeightConfig, Zero, make_word


def check_merge(quick: bool = False) -> Report:
    report = Report("merge decomposition", {"max_N": 4 if quick else 6})
    for n in range(1, (4 if quick else 6) + 1):
        sub = ktheory.verify_relations(n, "merge", max_power=n)
        report.lines.extend(sub.lines)
    return report


def check_commute(quick: bool = False) -> Report:
    report = Report("commutation decomposition", {"max_N": 4 if quick else 6})
    for n in range(1, (4 if quick else 6) + 1):
        sub = ktheory.verify_relations(n, "commute", max_power=2 if quick else 3)
        report.lines.extend(sub.lines)
    return report


def check_casimir(quick: bool = False) -> Report:
    report = Report("casimir commutation", {"max_N": 5 if quick else 8})
    for n in range(1, (5 if quick else 8) + 1):
        sub = ktheory.verify_relations(n, "casimir")
        report.lines.extend(sub.lines)
    return report


def check_dims(quick: bool = False) -> Report:
    report = Report("weight-space dimensions", {"max_N": 8})
    for n in range(1, 9):
        sub = ktheory.verify_relations(n, "dims")
        report.lines.extend(sub.lines)
    return report


def check_rewrite_oracle(quick: bool = False) -> Report:
    count = 100 if quick else 500
    report = Report("rewrite soundness + confluence", {"corpus": count, "seed": 7})
    for idx, word in enumerate(corpus_words(count)):
        left = normalize(word, "leftmost")
        right = normalize(word, "rightmost")
        key = "word %d: %s" % (idx, word)
        if left != right:
            report.check(key, False, "strategies disagree")
            continue
        direct = ktheory.word_matrix(word)
        via_normal = ktheory.formalsum_matrix(left, word.config, word.source,
                                              word.target)
        report.check(key, direct == via_normal,
                     "" if direct == via_normal else "oracle mismatch")
    return report


def check_divided_powers(quick: bool = False) -> Report:
    max_n = 4 if quick else 6
    report = Report("divided-power integrality", {"max_N": max_n, "max_r": 3})
    for n in range(1, max_n + 1):
        config = WeightConfig(n)
        for kind in (E, F):
            for r in range(1, min(3, n) + 1):
                for w in config.weights():
                    word = make_word(config, w, (Generator(kind, r),))
                    if isinstance(word, Zero):
                        continue
                    mat = ktheory.generator_matrix(n, w, kind, r)
                    ok = mat.nonneg_coeffs()
                    report.check("%s^(%d) at w=%d, N=%d" % (kind, r, w, n), ok,
                                 "" if ok else "negative coefficient after /[r]!")
    return report


def check_nilhecke(quick: bool = False) -> Report:
    report = Report("nil affine Hecke relations",
                    {"max_n": 3 if quick else 4, "max_degree": 5, "trials": 50})
    for n in range(2, (3 if quick else 4) + 1):
        sub = nilhecke.verify_nilhecke(n, max_degree=3 if quick else 5,
                                       trials=10 if quick else 50, seed=7)
        report.lines.extend(sub.lines)
    return report


def check_idempotents(quick: bool = False) -> Report:
    report = Report("splitting idempotents", {"max_degree": 6})
    for n in (2, 3):
        sub = nilhecke.idempotent_check(n, max_degree=4 if quick else 6)
        report.lines.extend(sub.lines)
    return report


def check_hom_certificates(quick: bool = False) -> Report:
    max_n = 4 if quick else 6
    report = Report("graded Hom certificates", {"max_N": max_n})
    for n in range(1, max_n + 1):
        config = WeightConfig(n)
        for source in config.weights():
            for r in range(0, (n - source) // 2 + 1):
                if source + 2 * r > n:
                    continue
                cert = homdim.certify_end_simple(n, source + r, r)
                report.check("end-simple N=%d midpoint=%d r=%d" % (n, source + r, r),
                             cert.passed, cert.witness or "")
        for w in config.weights():
            cert = homdim.certify_ef_end(n, w)
            report.check("ef-end N=%d weight=%d" % (n, w),
                         cert.passed, cert.witness or "")
        for mid in range(-n + 2, 1, 2) if n % 2 == 0 else range(-n + 2, 0, 2):
            if mid - 2 < -n or mid + 2 > n:
                continue
            summary = homdim.classify_e2_degree2(n, mid)
            if mid < 0:
                ok = summary.shape == "End(1) (+) Hom(1, 1<2>)"
                detail = "" if ok else "unexpected shape %r" % summary.shape
            else:
                # variant at weight 0: the degree-0 line arrives through the
                # rank-1 tower when the string is long enough
                if n >= 4:
                    ok = ("End(E^(1))" in summary.shape
                          and "Hom(1, 1<2>)" in summary.shape)
                else:
                    ok = summary.shape == "Hom(1, 1<2>)"
                detail = "" if ok else "unexpected shape %r" % summary.shape
            report.check("e2-classify N=%d midpoint=%d" % (n, mid), ok, detail)
    return report


CRITERIA: List[Tuple[str, Callable[[bool], Report]]] = [
    ("merge decomposition", check_merge),
    ("commutation decomposition", check_commute),
    ("casimir commutation", check_casimir),
    ("weight-space dimensions", check_dims),
    ("rewrite soundness + confluence", check_rewrite_oracle),
    ("divided-power integrality", check_divided_powers),
    ("nil affine Hecke relations", check_nilhecke),
    ("splitting idempotents", check_idempotents),
    ("graded Hom certificates", check_hom_certificates),
]


def run_selftest(quick: bool = False, emit=print):
    """Run all checks, emitting one line per criterion; returns the reports."""
    reports = []
    all_ok = True
    for idx, (name, fn) in enumerate(CRITERIA, start=1):
        t0 = time.monotonic()
        report = fn(quick)
        dt = time.monotonic() - t0
        reports.append(report)
        all_ok = all_ok and report.passed
        emit("[%d/%d] %-34s %s (%d checked, %.1fs)" % (
            idx, len(CRITERIA), name, report.verdict, len(report.lines), dt))
        if not report.passed:
            bad = report.counterexample()
            emit("        counterexample: %s %s" % (bad.key, bad.detail))
    emit("selftest: %s" % ("PASS" if all_ok else "FAIL"))
    return all_ok, reports
