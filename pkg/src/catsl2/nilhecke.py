"""The nil affine Hecke algebra in its polynomial representation.

The algebra acts faithfully on integer polynomials in x_1..x_n: the degree
+2 generators act as multiplication by x_i, and the degree -2 generators as
Demazure (divided-difference) operators

    D_i f = (f - s_i f) / (x_i - x_{i+1})

where s_i swaps x_i and x_{i+1}.  The numerator is antisymmetric in the
two variables so the division is always exact; an inexact division here is
a fatal arithmetic bug, not a user-facing case.

Relations verified (exact, on monomial bases and seeded random polynomials):

    (i)    D_i^2 = 0
    (ii)   D_i D_{i+1} D_i = D_{i+1} D_i D_{i+1}
    (iii)  x_i D_i - D_i x_{i+1} = 1 = D_i x_i - x_{i+1} D_i
           (writing operator composition right to left)
    plus the distant commutations D_i D_j = D_j D_i, x_i x_j = x_j x_i and
    D_i x_j = x_j D_i for j outside {i, i+1}.

Index convention: the tensor slot on which the left horizontal factor acts
corresponds to the LOWER variable index.  This is the unique assignment
under which relation (iii) holds with the Demazure denominator written as
x_i - x_{i+1}; the mirrored assignment would need the opposite denominator.

The splitting idempotent e_n = x^delta * D_w0 (delta = (n-1, ..., 1, 0),
D_w0 the Demazure operator of the longest permutation) realizes the
divided-power projection; e_n is checked to be idempotent and D_w0 to be
independent of the chosen reduced word.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Sequence, Tuple

from .qcoeff import ExactDivisionError
from .report import Report

Exponents = Tuple[int, ...]
NHLetter = Tuple[str, int]          # ("X", i) with 1 <= i <= n, or ("D", i) with i <= n-1
NHWord = Sequence[NHLetter]


class MPoly:
    """Sparse exact multivariate polynomial over the integers.

    Keys are full exponent tuples of length n; zero coefficients are never
    stored.  The grading gives each variable degree 2.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Exponents, int] | None = None):
        self.n = n
        self.terms: Dict[Exponents, int] = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    self.terms[e] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "MPoly":
        return MPoly(n)

    @staticmethod
    def const(n: int, c: int) -> "MPoly":
        return MPoly(n, {(0,) * n: c})

    @staticmethod
    def x(i: int, n: int) -> "MPoly":
        """The variable x_i, 1-indexed."""
        if not 1 <= i <= n:
            raise ValueError("variable index %d out of range for n=%d" % (i, n))
        e = [0] * n
        e[i - 1] = 1
        return MPoly(n, {tuple(e): 1})

    @staticmethod
    def monomial(exponents: Exponents, coeff: int = 1) -> "MPoly":
        return MPoly(len(exponents), {tuple(exponents): coeff})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Top total degree in the x-grading (each variable has degree 2); -1 for 0."""
        if not self.terms:
            return -1
        return max(2 * sum(e) for e in self.terms)

    def swap(self, i: int) -> "MPoly":
        """Apply s_i, exchanging x_i and x_{i+1}."""
        out: Dict[Exponents, int] = {}
        a, b = i - 1, i
        for e, c in self.terms.items():
            le = list(e)
            le[a], le[b] = le[b], le[a]
            key = tuple(le)
            out[key] = out.get(key, 0) + c
        return MPoly(self.n, out)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        assert self.n == other.n
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(self.n, terms)

    def __neg__(self) -> "MPoly":
        return MPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        assert self.n == other.n
        terms: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.n, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join("x%d%s" % (i + 1, "" if p == 1 else "^%d" % p)
                           for i, p in enumerate(e) if p)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append("%d*%s" % (c, mon))
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def __repr__(self) -> str:
        return "MPoly(%s)" % str(self)


def _div_by_root_difference(g: MPoly, i: int) -> MPoly:
    """Exact division of g by (x_i - x_{i+1}); raises ExactDivisionError."""
    a, b = i - 1, i
    quot: Dict[Exponents, int] = {}
    rem = dict(g.terms)
    # long division with the leading term x_i, ordering terms by the
    # exponent of x_i first; strictly decreases, so this terminates
    while rem:
        e = max(rem, key=lambda t: (t[a], t))
        c = rem[e]
        if e[a] == 0:
            raise ExactDivisionError(
                "inexact division by x%d - x%d" % (i, i + 1))
        qe = list(e)
        qe[a] -= 1
        qe_t = tuple(qe)
        quot[qe_t] = quot.get(qe_t, 0) + c
        # subtract c * x^qe * (x_i - x_{i+1})
        for sign, idx in ((1, a), (-1, b)):
            te = list(qe)
            te[idx] += 1
            te_t = tuple(te)
            nv = rem.get(te_t, 0) - sign * c
            if nv:
                rem[te_t] = nv
            else:
                rem.pop(te_t, None)
    return MPoly(g.n, quot)


def demazure(i: int, f: MPoly) -> MPoly:
    """Divided-difference operator (f - s_i f)/(x_i - x_{i+1}).

    Requires 1 <= i <= n-1.  Lowers the x-degree by exactly 2 (or gives 0)
    and produces an s_i-invariant polynomial.
    """
    if not 1 <= i <= f.n - 1:
        raise ValueError("Demazure index %d out of range for n=%d" % (i, f.n))
    num = f - f.swap(i)
    if num.is_zero():
        return MPoly.zero(f.n)
    return _div_by_root_difference(num, i)


def apply_nh_word(word: NHWord, f: MPoly) -> MPoly:
    """Apply a sequence of generators; index 0 of the sequence applies first."""
    out = f
    for op, i in word:
        if op == "X":
            out = MPoly.x(i, f.n) * out
        elif op == "D":
            out = demazure(i, out)
        else:
            raise ValueError("unknown generator %r" % ((op, i),))
    return out


def monomials_up_to(n: int, max_degree: int) -> List[MPoly]:
    """All monomials in n variables of total x-exponent <= max_degree."""
    out: List[MPoly] = []

    def rec(prefix: List[int], remaining: int, pos: int):
        if pos == n:
            out.append(MPoly.monomial(tuple(prefix)))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], max_degree, 0)
    return out


def random_mpoly(rng: random.Random, n: int, max_degree: int,
                 max_terms: int = 6) -> MPoly:
    """Uniform sparse polynomial with coefficients in [-9, 9] minus {0}."""
    terms: Dict[Exponents, int] = {}
    for _ in range(rng.randint(1, max_terms)):
        total = rng.randint(0, max_degree)
        e = [0] * n
        for _ in range(total):
            e[rng.randrange(n)] += 1
        c = rng.choice([c for c in range(-9, 10) if c != 0])
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
    return MPoly(n, terms)


def _test_polys(n: int, max_degree: int, trials: int, seed: int) -> List[MPoly]:
    rng = random.Random(seed)
    polys = monomials_up_to(n, max_degree)
    polys.extend(random_mpoly(rng, n, max_degree) for _ in range(trials))
    return polys


def verify_nilhecke(n: int, max_degree: int = 5, trials: int = 50,
                    seed: int = 7) -> Report:
    """Exact check of all relation families applicable at the given n.

    Needs n >= 2; the braid relation starts at n >= 3 and the distant
    commutations at n >= 4 (n >= 3 for the polynomial ones).  Every failure
    line carries a witness polynomial.
    """
    if n < 2:
        raise ValueError("the relations need n >= 2")
    report = Report("nilhecke.verify",
                    {"n": n, "max_degree": max_degree, "trials": trials, "seed": seed})
    polys = _test_polys(n, max_degree, trials, seed)

    def equal_on_all(key: str, lhs_words, rhs_words, extra=None):
        for f in polys:
            lhs = sum((apply_nh_word(w, f) for w in lhs_words), MPoly.zero(n))
            rhs = sum((apply_nh_word(w, f) for w in rhs_words), MPoly.zero(n))
            if extra is not None:
                rhs = rhs + extra(f)
            if lhs != rhs:
                report.check(key, False, "witness f = %s" % f)
                return
        report.check(key, True)

    for i in range(1, n):
        equal_on_all("square D%d^2 = 0" % i, [[("D", i), ("D", i)]], [])
    for i in range(1, n - 1):
        equal_on_all("braid D%d D%d D%d" % (i, i + 1, i),
                     [[("D", i), ("D", i + 1), ("D", i)]],
                     [[("D", i + 1), ("D", i), ("D", i + 1)]])
    for i in range(1, n):
        # x_i D_i - D_i x_{i+1} = 1 (first equality of the mixed relation)
        equal_on_all("mixed x%d·D%d - D%d·x%d = 1" % (i, i, i, i + 1),
                     [[("D", i), ("X", i)]],
                     [[("X", i + 1), ("D", i)]],
                     extra=lambda f: f)
        # D_i x_i - x_{i+1} D_i = 1 (second equality, opposite composition)
        equal_on_all("mixed D%d·x%d - x%d·D%d = 1" % (i, i, i + 1, i),
                     [[("X", i), ("D", i)]],
                     [[("D", i), ("X", i + 1)]],
                     extra=lambda f: f)
    for i in range(1, n):
        for j in range(i + 2, n):
            equal_on_all("distant D%d D%d" % (i, j),
                         [[("D", i), ("D", j)]], [[("D", j), ("D", i)]])
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            equal_on_all("distant D%d x%d" % (i, j),
                         [[("X", j), ("D", i)]], [[("D", i), ("X", j)]])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            equal_on_all("commute x%d x%d" % (i, j),
                         [[("X", i), ("X", j)]], [[("X", j), ("X", i)]])
    return report


_REDUCED_W0 = {2: [(1,)], 3: [(1, 2, 1), (2, 1, 2)]}


def longest_demazure(n: int, reduced_word: Iterable[int]) -> NHWord:
    """The Demazure word of the longest permutation, applied first-to-last."""
    return [("D", i) for i in reduced_word]


def staircase_word(n: int) -> NHWord:
    """Multiplication by x^delta with delta = (n-1, ..., 1, 0)."""
    out: List[NHLetter] = []
    for i in range(1, n + 1):
        out.extend([("X", i)] * (n - i))
    return out


def idempotent_word(n: int, reduced_word: Sequence[int] | None = None) -> NHWord:
    """e_n = x^delta composed after the longest Demazure operator."""
    if reduced_word is None:
        reduced_word = _REDUCED_W0[n][0]
    return list(longest_demazure(n, reduced_word)) + list(staircase_word(n))


def idempotent_check(n: int, max_degree: int = 6) -> Report:
    """Check e_n·e_n = e_n on all monomials of degree <= max_degree, n in {2, 3}.

    Reduced-word independence of the longest Demazure operator is asserted
    first (for n = 3 it is a consequence of the braid relation).
    """
    if n not in (2, 3):
        raise ValueError("idempotent check is wired for n in {2, 3}")
    report = Report("nilhecke.idempotent", {"n": n, "max_degree": max_degree})
    words = _REDUCED_W0[n]
    polys = monomials_up_to(n, max_degree)
    if len(words) > 1:
        base = longest_demazure(n, words[0])
        for other in words[1:]:
            alt = longest_demazure(n, other)
            bad = next((f for f in polys
                        if apply_nh_word(base, f) != apply_nh_word(alt, f)), None)
            report.check("reduced-word independence %s vs %s" % (words[0], other),
                         bad is None, "" if bad is None else "witness f = %s" % bad)
    e = idempotent_word(n)
    bad = next((f for f in polys
                if apply_nh_word(e, apply_nh_word(e, f)) != apply_nh_word(e, f)),
               None)
    report.check("e_%d idempotent" % n, bad is None,
                 "" if bad is None else "witness f = %s" % bad)
    return report
