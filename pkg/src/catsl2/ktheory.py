"""The decategorified oracle: exact matrices on the tensor-power module.

The quantum group of sl2 acts on the N-th tensor power of its 2-dimensional
representation.  The weight-lambda subspace has a basis indexed by the
k-element subsets S of {1..N} (the positions of lowered tensor factors),
with k = (N - lambda)/2, ordered lexicographically.  Every word of the
calculus becomes an exact matrix over Laurent polynomials in q, and every
decomposition identity of the rewrite engine is checked against matrix
equality here.

Coproduct convention (frozen; see the conventions section of the README):
acting on the basis vector v_S,

    E v_S = sum over i in S     of q^(+wt of positions left of i)  v_(S minus i)
    F v_S = sum over i not in S of q^(-wt of positions right of i) v_(S plus i)

where a position carries weight +1 if raised (not in S) and -1 if lowered.
This is the variant selected by requiring all decomposition identities to
hold with the exact q-binomial multiplicities; the residual q <-> q^-1
symmetry is invisible to those checks and fixed by this document.

Divided powers are r-fold products divided exactly by [r]!; a failed exact
division signals a wrong convention and raises ExactDivisionError.

Decategorification of multiplicities: a homological shift contributes a
sign and an equivariant shift contributes -q, so the monomial s^i t^j
evaluates to (-1)^(i+j) q^j and the composite shift q^k (= s^k t^(-k))
evaluates to q^(-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from .qcoeff import BigradedLaurent, qbinom, qfact, qint
from .report import Report
from .rewrite import straighten_step
from .words import E, F, FormalSum, Generator, WeightConfig, Word, WordOrZero, Zero, make_word

# (E counting side, E sign, F counting side, F sign); the frozen convention
# pairs E-left/+ with F-right/-, which is a genuine comultiplication.
Convention = Tuple[str, int, str, int]
FROZEN_CONVENTION: Convention = ("left", +1, "right", -1)

CONVENTION_NAMES: Dict[str, Convention] = {
    "Eleft+.Fright-": ("left", +1, "right", -1),
    "Eleft-.Fright+": ("left", -1, "right", +1),
    "Eright-.Fleft+": ("right", -1, "left", +1),
    "Eright+.Fleft-": ("right", +1, "left", -1),
    # deliberately broken pairings, kept selectable for the convention test
    "Eleft+.Fleft-": ("left", +1, "left", -1),
    "Eright+.Fright-": ("right", +1, "right", -1),
}
DEFAULT_CONVENTION_NAME = "Eleft+.Fright-"


@dataclass(frozen=True)
class WeightBasis:
    """Ordered subset basis of the weight-lambda space of the N-th tensor power."""

    N: int
    weight: int

    def __post_init__(self):
        if (self.N - self.weight) % 2 != 0:
            raise ValueError("weight %d has wrong parity for N=%d" % (self.weight, self.N))

    @property
    def k(self) -> int:
        return (self.N - self.weight) // 2

    @property
    def dim(self) -> int:
        if self.k < 0 or self.k > self.N:
            return 0
        return _binom(self.N, self.k)

    def subsets(self) -> List[Tuple[int, ...]]:
        if self.k < 0 or self.k > self.N:
            return []
        return list(combinations(range(1, self.N + 1), self.k))

    def index(self) -> Dict[Tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.subsets())}


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def space_dim(N: int, weight: int) -> int:
    """Dimension of the weight space; 0 for out-of-range or wrong parity."""
    if (N - weight) % 2 != 0 or abs(weight) > N:
        return 0
    return _binom(N, (N - weight) // 2)


class KMatrix:
    """Exact matrix over q-line Laurent polynomials, with sparse products."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int,
                 entries: Dict[Tuple[int, int], BigradedLaurent] | None = None):
        self.rows = rows
        self.cols = cols
        self.entries: Dict[Tuple[int, int], BigradedLaurent] = {}
        if entries:
            for rc, v in entries.items():
                if not v.is_zero():
                    self.entries[rc] = v

    @staticmethod
    def identity(n: int) -> "KMatrix":
        return KMatrix(n, n, {(i, i): BigradedLaurent.one() for i in range(n)})

    @staticmethod
    def zeros(rows: int, cols: int) -> "KMatrix":
        return KMatrix(rows, cols)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __add__(self, other: "KMatrix") -> "KMatrix":
        assert (self.rows, self.cols) == (other.rows, other.cols), "shape mismatch"
        entries = dict(self.entries)
        for rc, v in other.entries.items():
            entries[rc] = entries[rc] + v if rc in entries else v
        return KMatrix(self.rows, self.cols, entries)

    def __sub__(self, other: "KMatrix") -> "KMatrix":
        return self + other.scaled(BigradedLaurent.integer(-1))

    def scaled(self, c: BigradedLaurent) -> "KMatrix":
        return KMatrix(self.rows, self.cols,
                       {rc: v * c for rc, v in self.entries.items()})

    def __matmul__(self, other: "KMatrix") -> "KMatrix":
        """self @ other, applying other first."""
        assert self.cols == other.rows, "shape mismatch in product"
        by_col: Dict[int, List[Tuple[int, BigradedLaurent]]] = {}
        for (k, j), v in other.entries.items():
            by_col.setdefault(j, []).append((k, v))
        left_by_col: Dict[int, List[Tuple[int, BigradedLaurent]]] = {}
        for (i, k), v in self.entries.items():
            left_by_col.setdefault(k, []).append((i, v))
        entries: Dict[Tuple[int, int], BigradedLaurent] = {}
        for j, col in by_col.items():
            for k, bv in col:
                for i, av in left_by_col.get(k, ()):
                    rc = (i, j)
                    prod = av * bv
                    entries[rc] = entries[rc] + prod if rc in entries else prod
        return KMatrix(self.rows, other.cols, entries)

    def exact_div(self, c: BigradedLaurent) -> "KMatrix":
        return KMatrix(self.rows, self.cols,
                       {rc: v.exact_div(c) for rc, v in self.entries.items()})

    def entry(self, i: int, j: int) -> BigradedLaurent:
        return self.entries.get((i, j), BigradedLaurent.zero())

    def nonneg_coeffs(self) -> bool:
        return all(v.nonneg_coeffs() for v in self.entries.values())

    def __str__(self) -> str:
        out = []
        for i in range(self.rows):
            out.append("[" + ", ".join(str(self.entry(i, j)) for j in range(self.cols)) + "]")
        return "\n".join(out)


def _tensor_weight(subset: frozenset, lo: int, hi: int) -> int:
    """Total weight of positions in [lo, hi]: +1 raised, -1 lowered."""
    total = 0
    for p in range(lo, hi + 1):
        total += -1 if p in subset else 1
    return total


@lru_cache(maxsize=None)
def _single_matrix(N: int, source: int, kind: str,
                   convention: Convention) -> KMatrix:
    """Matrix of E or F (power 1) acting from the given source weight."""
    side_e, sign_e, side_f, sign_f = convention
    src = WeightBasis(N, source)
    tgt = WeightBasis(N, source + (2 if kind == E else -2))
    out: Dict[Tuple[int, int], BigradedLaurent] = {}
    tgt_index = tgt.index()
    for j, s in enumerate(src.subsets()):
        sset = frozenset(s)
        if kind == E:
            for i in s:
                exp = _tensor_weight(sset, 1, i - 1) if side_e == "left" \
                    else _tensor_weight(sset, i + 1, N)
                row = tgt_index[tuple(sorted(sset - {i}))]
                key = (row, j)
                add = BigradedLaurent.q_power(sign_e * exp)
                out[key] = out[key] + add if key in out else add
        else:
            for i in range(1, N + 1):
                if i in sset:
                    continue
                exp = _tensor_weight(sset, i + 1, N) if side_f == "right" \
                    else _tensor_weight(sset, 1, i - 1)
                row = tgt_index[tuple(sorted(sset | {i}))]
                key = (row, j)
                add = BigradedLaurent.q_power(sign_f * exp)
                out[key] = out[key] + add if key in out else add
    return KMatrix(tgt.dim, src.dim, out)


def generator_matrix(N: int, source: int, kind: str, power: int,
                     convention: Convention = FROZEN_CONVENTION) -> KMatrix:
    """Matrix of the divided power E^(r) or F^(r) from the source weight.

    Zero-dimensional when source or target is uninhabited.  For r > 1 the
    r-fold product is divided exactly by [r]!; inexactness is a fatal
    internal error (it would mean the convention is wrong).
    """
    config = WeightConfig(N)
    target = source + (2 * power if kind == E else -2 * power)
    if not (config.inhabited(source) and config.inhabited(target)):
        return KMatrix.zeros(space_dim(N, target), space_dim(N, source))
    step = 2 if kind == E else -2
    mat = KMatrix.identity(WeightBasis(N, source).dim)
    w = source
    for _ in range(power):
        mat = _single_matrix(N, w, kind, convention) @ mat
        w += step
    return mat.exact_div(qfact(power))


def word_matrix(word: WordOrZero,
                convention: Convention = FROZEN_CONVENTION) -> KMatrix:
    """Matrix of a word: generator matrices multiplied in application order."""
    if isinstance(word, Zero):
        return KMatrix.zeros(0, 0)
    N = word.config.N
    mat = KMatrix.identity(WeightBasis(N, word.source).dim)
    w = word.source
    for g in word.letters:
        mat = generator_matrix(N, w, g.kind, g.power, convention) @ mat
        w += g.step
    return mat


def decategorify(mult: BigradedLaurent) -> BigradedLaurent:
    """Evaluate a multiplicity: s^i t^j maps to (-1)^(i+j) q^j."""
    out = BigradedLaurent.zero()
    for (i, j), c in mult.items():
        sign = -1 if (i + j) % 2 else 1
        out = out + BigradedLaurent.q_power(j, sign * c)
    return out


def formalsum_matrix(s: FormalSum, config: WeightConfig, source: int, target: int,
                     convention: Convention = FROZEN_CONVENTION) -> KMatrix:
    """Matrix of a formal sum; needs declared weights so the empty sum has a shape."""
    rows = space_dim(config.N, target)
    cols = space_dim(config.N, source)
    out = KMatrix.zeros(rows, cols)
    for w, c in s.items():
        assert w.source == source and w.target == target, \
            "formal sum mixes sources/targets"
        out = out + word_matrix(w, convention).scaled(decategorify(c))
    return out


# -- relation sweeps ---------------------------------------------------------

def verify_relations(N: int, which: str = "all",
                     convention: Convention = FROZEN_CONVENTION,
                     max_power: int = 3) -> Report:
    """Check decomposition identities as exact matrix equalities.

    which: 'merge' (like-kind composition), 'commute' (mixed-pair
    straightening, both branches), 'casimir' (EF - FE = [w] id), 'dims'
    (weight-space dimensions), or 'all'.  Never raises on a mathematical
    failure; returns a failing report instead.
    """
    if which not in ("merge", "commute", "casimir", "dims", "all"):
        raise ValueError("unknown relation selector: %s" % which)
    report = Report("ktheory.verify", {"N": N, "relation": which})
    config = WeightConfig(N)
    if which in ("merge", "all"):
        _verify_merge(report, config, convention, max_power)
    if which in ("commute", "all"):
        _verify_commute(report, config, convention, max_power)
    if which in ("casimir", "all"):
        _verify_casimir(report, config, convention)
    if which in ("dims", "all"):
        _verify_dims(report, config)
    return report


def _verify_merge(report: Report, config: WeightConfig,
                  convention: Convention, max_power: int):
    N = config.N
    for kind in (E, F):
        for r1 in range(1, max_power + 1):
            for r2 in range(1, max_power + 1):
                if r1 + r2 > N:
                    continue
                for w in config.weights():
                    pair = make_word(config, w, (Generator(kind, r1), Generator(kind, r2)))
                    if isinstance(pair, Zero):
                        continue
                    merged = make_word(config, w, (Generator(kind, r1 + r2),))
                    lhs = word_matrix(pair, convention)
                    rhs = word_matrix(merged, convention).scaled(
                        decategorify(qbinom(r1 + r2, r1)))
                    key = "merge %s r1=%d r2=%d at w=%d" % (kind, r1, r2, w)
                    report.check(key, lhs == rhs,
                                 "" if lhs == rhs else "matrix mismatch")


def _verify_commute(report: Report, config: WeightConfig,
                    convention: Convention, max_power: int):
    for first_kind in (E, F):
        second_kind = F if first_kind == E else E
        for a in range(1, max_power + 1):
            for b in range(1, max_power + 1):
                for w in config.weights():
                    word = make_word(config, w, (Generator(first_kind, a),
                                                 Generator(second_kind, b)))
                    if isinstance(word, Zero):
                        continue
                    applied, straightened = straighten_step(word, 0)
                    if not applied:
                        continue
                    lhs = word_matrix(word, convention)
                    rhs = formalsum_matrix(straightened, config, w, word.target,
                                           convention)
                    key = "commute %s^(%d) then %s^(%d) at w=%d" % (
                        first_kind, a, second_kind, b, w)
                    report.check(key, lhs == rhs,
                                 "" if lhs == rhs else "matrix mismatch")


def _verify_casimir(report: Report, config: WeightConfig, convention: Convention):
    for w in config.weights():
        dim = WeightBasis(config.N, w).dim
        ef = make_word(config, w, (Generator(F), Generator(E)))
        fe = make_word(config, w, (Generator(E), Generator(F)))
        m_ef = word_matrix(ef, convention) if not isinstance(ef, Zero) \
            else KMatrix.zeros(dim, dim)
        m_fe = word_matrix(fe, convention) if not isinstance(fe, Zero) \
            else KMatrix.zeros(dim, dim)
        rhs = KMatrix.identity(dim).scaled(decategorify(qint(w)))
        ok = (m_ef - m_fe) == rhs
        report.check("casimir at w=%d" % w, ok, "" if ok else "EF - FE != [w]·id")


def _verify_dims(report: Report, config: WeightConfig):
    for w in config.weights():
        basis = WeightBasis(config.N, w)
        expected = _binom(config.N, (config.N - w) // 2)
        report.check("dim at w=%d" % w, basis.dim == expected,
                     "dim=%d expected=%d" % (basis.dim, expected))
