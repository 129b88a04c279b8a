import random

from braidnc.ncp import NoncrossingPartition
from braidnc.words import BandGenerator, BraidWord


def partition(blocks, n):
    """Build a noncrossing partition from its nontrivial blocks only."""
    used = {i for b in blocks for i in b}
    full = [tuple(b) for b in blocks] + [(i,) for i in range(1, n + 1) if i not in used]
    return NoncrossingPartition.from_blocks(full, n)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = []
    for _ in range(length):
        i = rng.randrange(2, n + 1)
        j = rng.randrange(1, i)
        letters.append(BandGenerator(i, j, rng.choice((1, -1))))
    return BraidWord(n, tuple(letters))
