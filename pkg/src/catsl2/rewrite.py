"""Normalization of words into canonical direct sums.

Two rewrite rules generate the calculus:

* merge: two adjacent like-kind letters X^(r1) then X^(r2) combine into
  X^(r1+r2) with multiplicity [r1+r2 choose r1]_q (the graded dimension of
  the Grassmannian G(r1, r1+r2)).

* straighten: an adjacent mixed pair re-orders with q-binomial lower terms.
  With mu the weight at which the first letter of the pair is applied:

    - E^(a) then F^(b) rewrites when b - a >= mu into
        sum_j [b-a-mu choose j]_q * (F^(b-j) then E^(a-j));
    - F^(a) then E^(b) rewrites when b - a > -mu (strict) into
        sum_j [mu-a+b choose j]_q * (E^(b-j) then F^(a-j)).

  Power-0 letters drop out, the q-binomial kills overlarge j, and every
  produced word is revalidated against the weight range (zeros drop).

A nonzero word is canonical iff it is an identity, a single letter, or a
two-block word whose order agrees with the weight-dependent tie-break: with
source weight w, "F^(b) first then E^(a)" is canonical iff b - a >= w and
"E^(a) first then F^(b)" iff b - a < w.  At b - a = w both orders coincide
up to the rewrite, and the strict rule prevents rewrite loops.

Termination of full normalization is enforced by a step budget and verified
empirically (strategy independence plus the decategorified matrix oracle);
it is a tested conjecture, not an axiom.
"""

from __future__ import annotations

from typing import List, Tuple, Union

from .qcoeff import BigradedLaurent, qbinom
from .words import E, F, FormalSum, Generator, Word, WordOrZero, Zero, make_word

DEFAULT_STEP_BUDGET = 10 ** 6


class NormalizationBudgetError(RuntimeError):
    """Step budget exhausted: signals a rule bug, never a legitimate input."""


def is_canonical(word: Word) -> bool:
    """Canonicality predicate (the complement of rule applicability)."""
    letters = word.letters
    if len(letters) == 0 or len(letters) == 1:
        return True
    if len(letters) != 2 or letters[0].kind == letters[1].kind:
        return False
    w = word.source
    if letters[0].kind == F:
        # E^(a) F^(b) with F applied first: a = E power, b = F power
        a, b = letters[1].power, letters[0].power
        return b - a >= w
    # F^(b) E^(a) with E applied first
    a, b = letters[0].power, letters[1].power
    return b - a < w


def merge_step(word: Word, position: int,
               strategy: str = "leftmost") -> FormalSum:
    """Merge the like-kind pair at (position, position+1) into one letter."""
    g1, g2 = word.letters[position], word.letters[position + 1]
    assert g1.kind == g2.kind, "merge_step requires a like-kind pair"
    r1, r2 = g1.power, g2.power
    merged = word.replace_pair(position, (Generator(g1.kind, r1 + r2),))
    return FormalSum.of(merged, qbinom(r1 + r2, r1))


def straighten_step(word: Word, position: int) -> Tuple[bool, FormalSum]:
    """Re-order the mixed pair at (position, position+1), if applicable.

    Returns (applied, sum); when the pair is already in canonical relative
    order the word is returned unchanged with applied = False.
    """
    g1, g2 = word.letters[position], word.letters[position + 1]
    assert g1.kind != g2.kind, "straighten_step requires a mixed pair"
    mu = word.weight_at(position)
    if g1.kind == E:
        a, b = g1.power, g2.power          # E^(a) then F^(b)
        if b - a < mu:
            return False, FormalSum.of(word)
        n = b - a - mu
        first_kind, second_kind = F, E     # output: F^(b-j) then E^(a-j)
        p_first, p_second = b, a
    else:
        a, b = g1.power, g2.power          # F^(a) then E^(b)
        if b - a <= -mu:                   # tie-break: strict
            return False, FormalSum.of(word)
        n = mu - a + b
        first_kind, second_kind = E, F     # output: E^(b-j) then F^(a-j)
        p_first, p_second = b, a
    out = FormalSum.zero()
    for j in range(0, min(p_first, p_second, n) + 1):
        coeff = qbinom(n, j)
        if coeff.is_zero():
            continue
        new: List[Generator] = []
        if p_first - j > 0:
            new.append(Generator(first_kind, p_first - j))
        if p_second - j > 0:
            new.append(Generator(second_kind, p_second - j))
        out = out + FormalSum.of(word.replace_pair(position, new), coeff)
    return True, out


def _next_rewrite(word: Word, strategy: str):
    """Position and kind ('merge' or 'straighten') of the next rule to fire."""
    n = len(word.letters)
    order = range(n - 1) if strategy == "leftmost" else range(n - 2, -1, -1)
    for pos in order:
        if word.letters[pos].kind == word.letters[pos + 1].kind:
            return pos, "merge"
    for pos in order:
        if word.letters[pos].kind != word.letters[pos + 1].kind:
            applied, _ = straighten_step(word, pos)
            if applied:
                return pos, "straighten"
    return None


def normalize(x: Union[WordOrZero, FormalSum], strategy: str = "leftmost",
              step_budget: int = DEFAULT_STEP_BUDGET) -> FormalSum:
    """Rewrite a word or formal sum into a canonical formal sum.

    Linear over input multiplicities; deterministic for a fixed strategy,
    and verified to be strategy independent on the test corpus.  Raises
    NormalizationBudgetError when more than step_budget elementary steps
    fire, which would indicate a rule bug.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    if isinstance(x, (Word, Zero)):
        x = FormalSum.of(x)
    steps = 0
    out: FormalSum = FormalSum.zero()
    stack = [(w, c) for w, c in x.sorted_items()]
    while stack:
        word, coeff = stack.pop()
        if is_canonical(word):
            out = out + FormalSum.of(word, coeff)
            continue
        nxt = _next_rewrite(word, strategy)
        if nxt is None:
            raise AssertionError("non-canonical word with no applicable rule: %s" % word)
        pos, kind = nxt
        if kind == "merge":
            produced = merge_step(word, pos)
        else:
            _, produced = straighten_step(word, pos)
        steps += 1
        if steps > step_budget:
            raise NormalizationBudgetError(
                "normalization exceeded %d steps on %s" % (step_budget, word))
        for w2, c2 in produced.sorted_items():
            stack.append((w2, c2 * coeff))
    return out
