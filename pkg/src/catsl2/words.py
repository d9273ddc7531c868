"""Weight bookkeeping and the formal 1-morphism language.

A word is a composable sequence of divided-power generators E^(r), F^(r)
anchored at a source weight.  Weights live in an sl2-string for a fixed
highest weight N: a weight is inhabited iff it lies in [-N, N] and has the
parity of N; every category outside that range is zero, so any word passing
through an uninhabited weight is the distinguished Zero value.

Conventions (fixed once, used everywhere):

* letters[0] applies first; the CLI maps the customary right-to-left
  composition notation onto this storage order.
* grading shifts are never stored on letters; a shift by k is absorbed into
  the multiplicity of the word as the monomial q^k.
* a generator applied at weight w has "midpoint" w + r (for E^(r)) or w - r
  (for F^(r)); adjunction shifts are computed from midpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple, Union

from .qcoeff import BigradedLaurent

E = "E"
F = "F"


@dataclass(frozen=True)
class WeightConfig:
    """The ambient sl2-string: highest weight N >= 0."""

    N: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("highest weight must be nonnegative")

    def inhabited(self, weight: int) -> bool:
        return -self.N <= weight <= self.N and (weight - self.N) % 2 == 0

    def weights(self) -> range:
        """All inhabited weights, increasing."""
        return range(-self.N, self.N + 1, 2)


@dataclass(frozen=True)
class Generator:
    """A divided-power generator E^(r) or F^(r), r >= 1.

    Power 0 would be the identity functor and is never stored.
    """

    kind: str
    power: int = 1

    def __post_init__(self):
        if self.kind not in (E, F):
            raise ValueError("generator kind must be 'E' or 'F'")
        if self.power < 1:
            raise ValueError("generator power must be >= 1")

    @property
    def step(self) -> int:
        """Change of weight when this generator is applied."""
        return 2 * self.power if self.kind == E else -2 * self.power

    def swapped(self) -> "Generator":
        return Generator(F if self.kind == E else E, self.power)

    def __str__(self) -> str:
        if self.power == 1:
            return self.kind
        return "%s^(%d)" % (self.kind, self.power)


class Zero:
    """The distinguished zero 1-morphism (a first-class value, not an error)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"

    def __bool__(self):
        return False


ZERO = Zero()


@dataclass(frozen=True)
class Word:
    """A nonzero composable word of generators anchored at a source weight.

    Construct through make_word, which validates every intermediate weight
    against the ambient WeightConfig.  The empty word is the identity 1_w.
    """

    config: WeightConfig
    source: int
    letters: Tuple[Generator, ...]

    @property
    def target(self) -> int:
        return self.source + sum(g.step for g in self.letters)

    def weight_at(self, position: int) -> int:
        """Weight at which letters[position] is applied (position == len is the target)."""
        return self.source + sum(g.step for g in self.letters[:position])

    def midpoint(self, position: int) -> int:
        """Midpoint weight of the letter at the given position."""
        g = self.letters[position]
        w = self.weight_at(position)
        return w + g.power if g.kind == E else w - g.power

    def is_identity(self) -> bool:
        return not self.letters

    def total_power(self) -> int:
        return sum(g.power for g in self.letters)

    def replace_pair(self, position: int, new: Sequence[Generator]) -> "WordOrZero":
        """The word with letters[position:position+2] replaced, revalidated."""
        letters = self.letters[:position] + tuple(new) + self.letters[position + 2:]
        return make_word(self.config, self.source, letters)

    def sort_key(self):
        """Deterministic ordering key: heavier words first, then lexicographic."""
        return (-self.total_power(), -len(self.letters),
                tuple((g.kind, g.power) for g in self.letters), self.source)

    def __str__(self) -> str:
        if self.is_identity():
            return "1_{%d}" % self.source
        # leftmost printed letter applies last
        return "%s|_{%d}" % ("*".join(str(g) for g in reversed(self.letters)), self.source)


WordOrZero = Union[Word, Zero]


def make_word(config: WeightConfig, source: int,
              letters: Iterable[Generator]) -> WordOrZero:
    """Build a word, returning ZERO if any intermediate weight is uninhabited.

    Total: wrong-parity sources also yield ZERO rather than an error, so
    sweeps over all (weight, word) instances can iterate uniformly.
    """
    letters = tuple(letters)
    w = source
    if not config.inhabited(w):
        return ZERO
    for g in letters:
        w += g.step
        if not config.inhabited(w):
            return ZERO
    return Word(config, source, letters)


def adjoint(word: WordOrZero, side: str) -> Tuple[WordOrZero, BigradedLaurent]:
    """Adjoint word and the accumulated grading shift, as a q-monomial.

    Reverses the word and swaps E <-> F; each letter of power r with midpoint
    m contributes a shift q^(r*m) (right adjoint of E / left adjoint of F) or
    q^(-r*m) (left adjoint of E / right adjoint of F).  Composites reverse
    order, so the adjoint of (A then B) is (adjoint B then adjoint A).

    Note the returned shift decorates the adjoint word itself; when the
    adjoint is taken again the old decoration flips sign, so the double
    adjoint carries net shift 1 even though both calls report equal shifts.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if isinstance(word, Zero):
        return ZERO, BigradedLaurent.one()
    exponent = 0
    for pos, g in enumerate(word.letters):
        m = word.midpoint(pos)
        sign = 1 if (g.kind == E) == (side == "right") else -1
        exponent += sign * g.power * m
    flipped = tuple(g.swapped() for g in reversed(word.letters))
    adj = make_word(word.config, word.target, flipped)
    # the adjoint of a nonzero word is nonzero: it traverses the same weights
    assert not isinstance(adj, Zero)
    return adj, BigradedLaurent.q_power(exponent)


class FormalSum:
    """A finite linear combination of words with BigradedLaurent multiplicities.

    Zero multiplicities and zero words are never stored.  Value semantics:
    all operations return new sums.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Word, BigradedLaurent] | None = None):
        cleaned: Dict[Word, BigradedLaurent] = {}
        if terms:
            for w, c in terms.items():
                if isinstance(w, Zero) or c.is_zero():
                    continue
                cleaned[w] = c
        self._terms = cleaned

    @staticmethod
    def zero() -> "FormalSum":
        return FormalSum()

    @staticmethod
    def of(word: WordOrZero,
           coeff: BigradedLaurent | None = None) -> "FormalSum":
        if isinstance(word, Zero):
            return FormalSum()
        return FormalSum({word: coeff if coeff is not None else BigradedLaurent.one()})

    def items(self) -> Iterable[Tuple[Word, BigradedLaurent]]:
        return self._terms.items()

    def sorted_items(self) -> Tuple[Tuple[Word, BigradedLaurent], ...]:
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def coefficient(self, word: WordOrZero) -> BigradedLaurent:
        if isinstance(word, Zero):
            return BigradedLaurent.zero()
        return self._terms.get(word, BigradedLaurent.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return FormalSum(terms)

    def scaled(self, coeff: BigradedLaurent) -> "FormalSum":
        return FormalSum({w: c * coeff for w, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for w, c in self.sorted_items():
            if c.is_one():
                parts.append(str(w))
            elif c.is_monomial():
                parts.append("%s·%s" % (c, w))
            else:
                parts.append("(%s)·%s" % (c, w))
        return "  +  ".join(parts)

    def __repr__(self) -> str:
        return "FormalSum(%s)" % str(self)
