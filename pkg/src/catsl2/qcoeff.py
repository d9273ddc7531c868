"""Exact arithmetic for graded multiplicities.

Everything in this package is graded by two formal variables: ``s`` tracks
the homological degree and ``t`` the equivariant one.  A multiplicity is a
Laurent polynomial in (s, t) with integer coefficients.  The single grading
shift used by the word calculus is the composite q = s*t^-1, so "lies in the
q-line" means every term has i + j = 0 and the element is really a Laurent
polynomial in q.

Quantum integers, factorials and binomials live on the q-line:

    [n]   = q^(n-1) + q^(n-3) + ... + q^(1-n)      (graded dim of P^(n-1))
    [n]!  = [1][2]...[n]
    [m k] = [m]!/([k]![m-k]!)                       (graded dim of G(k,m))

All arithmetic is exact over arbitrary-precision integers; division is only
provided where it is guaranteed exact, and a failed exact division raises
ExactDivisionError (an internal-consistency tripwire, never a user case).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Tuple

ExpPair = Tuple[int, int]


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class BigradedLaurent:
    """Exact Laurent polynomial in the two grading variables (s, t).

    Instances are immutable value objects: all operations return new ones.
    Internally a sparse map {(i, j): coeff} with no zero coefficients, where
    i is the homological exponent and j the equivariant one.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[ExpPair, int] | None = None):
        cleaned = {}
        if terms:
            for ij, c in terms.items():
                if c != 0:
                    cleaned[ij] = c
        self._terms = cleaned
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "BigradedLaurent":
        return _ZERO

    @staticmethod
    def one() -> "BigradedLaurent":
        return _ONE

    @staticmethod
    def integer(n: int) -> "BigradedLaurent":
        return BigradedLaurent({(0, 0): n})

    @staticmethod
    def monomial(i: int, j: int, coeff: int = 1) -> "BigradedLaurent":
        """The single term coeff * s^i t^j."""
        return BigradedLaurent({(i, j): coeff})

    @staticmethod
    def q_power(k: int, coeff: int = 1) -> "BigradedLaurent":
        """coeff * q^k on the q-line, i.e. coeff * s^k t^(-k).

        A grading shift by k is recorded as the multiplicity q^k.
        """
        return BigradedLaurent({(k, -k): coeff})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterable[Tuple[ExpPair, int]]:
        return self._terms.items()

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def in_q_line(self) -> bool:
        """True iff every term satisfies i + j = 0 (a polynomial in q)."""
        return all(i + j == 0 for (i, j) in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def q_coefficients(self) -> Dict[int, int]:
        """The map {k: coeff of q^k}; requires the element to lie in the q-line."""
        if not self.in_q_line():
            raise ValueError("element does not lie in the q-line: %r" % self)
        return {i: c for (i, _j), c in self._terms.items()}

    def q_support(self) -> Tuple[int, ...]:
        """Sorted q-exponents with nonzero coefficient (q-line elements only)."""
        return tuple(sorted(self.q_coefficients()))

    def nonneg_coeffs(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def specialize_q1(self) -> int:
        """Sum of all coefficients (evaluation at q = 1 on the q-line)."""
        return sum(self._terms.values())

    def bar(self) -> "BigradedLaurent":
        """The bar involution: negate all exponents (q <-> q^-1 on the q-line)."""
        return BigradedLaurent({(-i, -j): c for (i, j), c in self._terms.items()})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "BigradedLaurent") -> "BigradedLaurent":
        terms = dict(self._terms)
        for ij, c in other._terms.items():
            terms[ij] = terms.get(ij, 0) + c
        return BigradedLaurent(terms)

    def __neg__(self) -> "BigradedLaurent":
        return BigradedLaurent({ij: -c for ij, c in self._terms.items()})

    def __sub__(self, other: "BigradedLaurent") -> "BigradedLaurent":
        return self + (-other)

    def __mul__(self, other: "BigradedLaurent") -> "BigradedLaurent":
        terms: Dict[ExpPair, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                ij = (i1 + i2, j1 + j2)
                terms[ij] = terms.get(ij, 0) + c1 * c2
        return BigradedLaurent(terms)

    def scale(self, n: int) -> "BigradedLaurent":
        return BigradedLaurent({ij: n * c for ij, c in self._terms.items()})

    def exact_div(self, other: "BigradedLaurent") -> "BigradedLaurent":
        """Exact division restricted to the q-line.

        Both operands must lie in the q-line and the division must be exact;
        anything else raises ExactDivisionError.  This covers every division
        the package performs (q-binomials, divided powers of matrices).
        """
        if other.is_zero():
            raise ExactDivisionError("division by zero")
        if not (self.in_q_line() and other.in_q_line()):
            raise ExactDivisionError("exact division is only defined on the q-line")
        if self.is_zero():
            return _ZERO
        num = self.q_coefficients()
        den = other.q_coefficients()
        lead = max(den)
        lead_c = den[lead]
        quot: Dict[int, int] = {}
        # classic long division by the leading q-term; terminates because the
        # top exponent of the remainder strictly decreases
        guard = len(num) * (max(num) - min(num) + 1) + len(den) + 8
        while num:
            top = max(num)
            c, rem = divmod(num[top], lead_c)
            if rem != 0:
                raise ExactDivisionError(
                    "inexact division: %r / %r" % (self, other))
            e = top - lead
            quot[e] = quot.get(e, 0) + c
            for k, dk in den.items():
                nk = num.get(k + e, 0) - c * dk
                if nk:
                    num[k + e] = nk
                else:
                    num.pop(k + e, None)
            guard -= 1
            if guard < 0:  # cannot happen for exact divisions; safety net
                raise ExactDivisionError(
                    "division does not terminate: %r / %r" % (self, other))
        return BigradedLaurent({(k, -k): c for k, c in quot.items()})

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- printing -------------------------------------------------------------

    def sorted_terms(self) -> Tuple[Tuple[ExpPair, int], ...]:
        """Terms ordered by decreasing i then decreasing j (canonical print order)."""
        return tuple(sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.in_q_line():
            return self._str_qline()
        parts = []
        for (i, j), c in self.sorted_terms():
            mon = "*".join(p for p in (_pow("s", i), _pow("t", j)) if p)
            parts.append(_join_coeff(c, mon))
        return _assemble(parts)

    def _str_qline(self) -> str:
        parts = []
        for k in sorted(self.q_coefficients(), reverse=True):
            parts.append(_join_coeff(self.q_coefficients()[k], _pow("q", k)))
        return _assemble(parts)

    def __repr__(self) -> str:
        return "BigradedLaurent(%s)" % str(self)


def _pow(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return "%s^%d" % (var, e)


def _join_coeff(c: int, mon: str) -> str:
    if not mon:
        return str(c)
    if c == 1:
        return mon
    if c == -1:
        return "-" + mon
    return "%d*%s" % (c, mon)


def _assemble(parts: list) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


_ZERO = BigradedLaurent({})
_ONE = BigradedLaurent({(0, 0): 1})


@lru_cache(maxsize=None)
def qint(n: int) -> BigradedLaurent:
    """Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    [0] = 0 and [-n] = -[n].  For n > 0 this is the graded dimension of the
    cohomology of projective (n-1)-space, symmetric about degree zero.
    """
    if n == 0:
        return BigradedLaurent.zero()
    if n < 0:
        return -qint(-n)
    return BigradedLaurent({(k, -k): 1 for k in range(n - 1, -n - 1, -2)})


@lru_cache(maxsize=None)
def qfact(n: int) -> BigradedLaurent:
    """Quantum factorial [n]! = [1][2]...[n]; requires n >= 0."""
    if n < 0:
        raise ValueError("qfact requires n >= 0, got %d" % n)
    if n == 0:
        return BigradedLaurent.one()
    return qfact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(m: int, k: int) -> BigradedLaurent:
    """Gaussian binomial [m]!/([k]![m-k]!), zero outside 0 <= k <= m.

    The zero convention encodes that a Grassmannian of k-planes in m-space
    is empty when k is out of range (and projective (-1)-space is empty).
    Computed by exact division of factorial products; a remainder would
    signal an arithmetic bug and raises ExactDivisionError.
    """
    if k < 0 or m < 0 or k > m:
        return BigradedLaurent.zero()
    return qfact(m).exact_div(qfact(k) * qfact(m - k))


def poincare_proj(n: int) -> BigradedLaurent:
    """Graded dimension of the cohomology of P^n: [n+1], zero for n = -1."""
    return qint(n + 1)
