"""Seeded random word corpus shared by the test suite and the self test.

The corpus drives the rewrite-engine soundness and confluence sweeps: 500
nonzero words of length at most 5 with powers at most 2 over highest
weights up to 5, drawn reproducibly from a fixed seed (default 7).
"""

from __future__ import annotations

import random
from typing import List

from .words import E, F, Generator, WeightConfig, Word, Zero, make_word

DEFAULT_SEED = 7


def corpus_words(count: int = 500, seed: int = DEFAULT_SEED, max_n: int = 5,
                 max_len: int = 5, max_power: int = 2) -> List[Word]:
    """Deterministic list of nonzero words; draws are rejected until nonzero."""
    rng = random.Random(seed)
    out: List[Word] = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        config = WeightConfig(n)
        source = rng.choice(list(config.weights()))
        length = rng.randint(1, max_len)
        letters = tuple(Generator(rng.choice((E, F)), rng.randint(1, max_power))
                        for _ in range(length))
        word = make_word(config, source, letters)
        if isinstance(word, Zero):
            continue
        out.append(word)
    return out
