"""
Simple elements of the dual Garside structure of B_n, realized as
noncrossing partitions of {1..n}.

A simple element (a prefix of the Garside element delta) corresponds to a
noncrossing partition: each block T = {i_1 < ... < i_k} contributes the
descending-cycle subsimple [i_k,...,i_1].  The prefix order on simples is
partition refinement; meet is the common refinement and join is the
noncrossing closure of the set-partition join.

The canonical representation lists blocks in increasing order of their
minimum, each block in decreasing order, matching the [i_k,...,i_1]
notation.  Singletons are kept.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .words import BandGenerator, BraidWord, Permutation

#: Largest strand count for which exhaustive enumeration is allowed.
ENUMERATION_BOUND = 14


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    descending = [tuple(sorted(b, reverse=True)) for b in blocks]
    return tuple(sorted(descending, key=lambda b: b[-1]))


def _is_noncrossing(blocks: tuple[tuple[int, ...], ...], n: int) -> bool:
    # Single left-to-right scan: a block may only continue while it is the
    # innermost open block.
    block_of = {}
    block_max = {}
    for idx, b in enumerate(blocks):
        for i in b:
            block_of[i] = idx
        block_max[idx] = b[0]
    stack: list[int] = []
    opened = set()
    for i in range(1, n + 1):
        idx = block_of[i]
        if idx in opened:
            if not stack or stack[-1] != idx:
                return False
        else:
            opened.add(idx)
            stack.append(idx)
        if i == block_max[idx]:
            if not stack or stack[-1] != idx:
                return False
            stack.pop()
    return True


@dataclass(frozen=True)
class NoncrossingPartition:
    """A noncrossing partition of {1..n} in canonical block order."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            object.__setattr__(self, "_hash", hash((self.n, self.blocks)))
            return self._hash

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "NoncrossingPartition":
        canon = _canonical_blocks(blocks)
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("empty block")
            if seen & set(b):
                raise ValueError(f"overlapping blocks: {canon}")
            seen.update(b)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}: {canon}")
        if not _is_noncrossing(canon, n):
            raise ValueError(f"crossing blocks: {canon}")
        return cls(n, canon)

    @classmethod
    def _trusted(cls, blocks: Iterable[Iterable[int]], n: int) -> "NoncrossingPartition":
        # Internal fast path for results of lattice operations.
        return cls(n, _canonical_blocks(blocks))

    @classmethod
    def identity(cls, n: int) -> "NoncrossingPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def delta(cls, n: int) -> "NoncrossingPartition":
        return cls(n, (tuple(range(n, 0, -1)),))

    @classmethod
    def generator(cls, g: BandGenerator, n: int) -> "NoncrossingPartition":
        """The simple element of a single (positive) band generator."""
        blocks = [(g.upper, g.lower)] + [(i,) for i in range(1, n + 1) if i not in (g.upper, g.lower)]
        return cls._trusted(blocks, n)

    def is_identity(self) -> bool:
        return len(self.blocks) == self.n

    def is_delta(self) -> bool:
        return len(self.blocks) == 1

    def nontrivial_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    def letter_count(self) -> int:
        """Exponent sum of the canonical generator word: n minus the number of blocks."""
        return self.n - len(self.blocks)

    def generator_word(self) -> BraidWord:
        """Canonical positive word: concatenated subsimples in canonical order."""
        letters = []
        for b in self.nontrivial_blocks():
            letters.extend(BandGenerator(x, y) for x, y in zip(b, b[1:]))
        return BraidWord(self.n, tuple(letters))

    def text(self) -> str:
        """Canonical text, e.g. "[12,10,1][9,8,2][7,6,4,3]"; the identity prints "1"."""
        nt = self.nontrivial_blocks()
        if not nt:
            return "1"
        return "".join("[" + ",".join(map(str, b)) + "]" for b in nt)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "NoncrossingPartition":
        return cls.from_blocks([tuple(b) for b in data["blocks"]], data["n"])


@lru_cache(maxsize=None)
def permutation(a: NoncrossingPartition) -> Permutation:
    """Each block steps downward: i_m -> i_{m-1}, and the minimum wraps to the maximum."""
    images = list(range(1, a.n + 1))
    for b in a.blocks:
        if len(b) == 1:
            continue
        asc = b[::-1]
        for lo, hi in zip(asc, asc[1:]):
            images[hi - 1] = lo
        images[asc[0] - 1] = asc[-1]
    return Permutation(a.n, tuple(images))


def from_permutation(perm: Permutation) -> NoncrossingPartition:
    """
    Reconstruct the simple element whose permutation is `perm`, reading
    cycles as blocks.  Raises ValueError if `perm` is not the permutation
    of a simple element.
    """
    n = perm.n
    images = perm.images
    seen = [False] * (n + 1)
    blocks = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        # A simple's cycle, traversed from its minimum, visits the maximum
        # and then steps downward; the canonical descending block is the
        # cycle rotated by one.
        cycle = [start]
        seen[start] = True
        i = images[start - 1]
        while i != start:
            cycle.append(i)
            seen[i] = True
            i = images[i - 1]
        block = tuple(cycle[1:]) + (start,)
        if any(x <= y for x, y in zip(block, block[1:])):
            raise ValueError(f"not the permutation of a simple element: {images}")
        blocks.append(block)
    blocks_t = tuple(blocks)
    if not _is_noncrossing(blocks_t, n):
        raise ValueError(f"not the permutation of a simple element: {images}")
    return NoncrossingPartition(n, blocks_t)


def pair_is_simple(g1: BandGenerator, g2: BandGenerator) -> bool:
    """
    Whether the positive product a(p,q) a(i,j) is a simple element: with the
    first arc's endpoints shifted right by a small lambda, the two arcs in the
    upper half plane must nest or be disjoint.
    """
    p, q = g1.upper, g1.lower
    i, j = g2.upper, g2.lower
    return (p < j) or (i <= q) or (q < j and i <= p) or (j <= q and p < i)


@lru_cache(maxsize=None)
def _owners(a: NoncrossingPartition) -> list[int]:
    owner = [0] * (a.n + 1)
    for idx, blk in enumerate(a.blocks):
        for i in blk:
            owner[i] = idx
    return owner


def refines(a: NoncrossingPartition, b: NoncrossingPartition) -> bool:
    """Whether every block of a is contained in some block of b (the prefix order a <= b)."""
    if a.n != b.n:
        raise ValueError("strand counts differ")
    owner = _owners(b)
    return all(all(owner[i] == owner[blk[0]] for i in blk) for blk in a.blocks)


@lru_cache(maxsize=None)
def meet(a: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition:
    """Gcd in the prefix order: the blockwise common refinement."""
    if a.n != b.n:
        raise ValueError("strand counts differ")
    owner_a = _owners(a)
    owner_b = _owners(b)
    # Scanning 1..n creates groups in ascending-minimum order with ascending
    # members, so reversing each group is already canonical.
    groups: dict[int, list[int]] = {}
    width = len(b.blocks)
    for i in range(1, a.n + 1):
        groups.setdefault(owner_a[i] * width + owner_b[i], []).append(i)
    return NoncrossingPartition(a.n, tuple(tuple(reversed(g)) for g in groups.values()))


@lru_cache(maxsize=None)
def join(a: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition:
    """
    Lcm in the prefix order: the set-partition join (transitive closure of
    block unions), then crossing blocks merged until noncrossing.
    """
    if a.n != b.n:
        raise ValueError("strand counts differ")
    parent = list(range(a.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        parent[find(x)] = find(y)

    for part in (a, b):
        for blk in part.blocks:
            for i in blk[1:]:
                union(blk[0], i)

    def current_blocks() -> list[tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for i in range(1, a.n + 1):
            groups.setdefault(find(i), []).append(i)
        return [tuple(g) for g in groups.values()]

    blocks = current_blocks()
    merged = True
    while merged:
        merged = False
        for x, y in itertools.combinations(blocks, 2):
            if _blocks_cross(x, y):
                union(x[0], y[0])
                blocks = current_blocks()
                merged = True
                break
    return NoncrossingPartition._trusted(blocks, a.n)


def _blocks_cross(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    # Crossing iff the merged label sequence, run-length collapsed, has >= 4 runs.
    labeled = sorted([(i, 0) for i in x] + [(j, 1) for j in y])
    runs = 1
    for (_, u), (_, v) in zip(labeled, labeled[1:]):
        if u != v:
            runs += 1
    return runs >= 4


@lru_cache(maxsize=None)
def tau(a: NoncrossingPartition, power: int = 1) -> NoncrossingPartition:
    """Conjugation by delta^power on simples: every index shifts by +power mod n."""
    n = a.n
    return NoncrossingPartition._trusted(
        [tuple((i - 1 + power) % n + 1 for i in b) for b in a.blocks], n
    )


@lru_cache(maxsize=None)
def right_complement(a: NoncrossingPartition) -> NoncrossingPartition:
    """The unique simple d(a) with a * d(a) = delta."""
    rot = Permutation.rotation(a.n, -1)
    return from_permutation(permutation(a).inverse() * rot)


def left_complement(a: NoncrossingPartition) -> NoncrossingPartition:
    """The unique simple y with y * a = delta; equals tau^{-1}(right_complement(a))."""
    return tau(right_complement(a), -1)


@lru_cache(maxsize=None)
def simple_product(a: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition | None:
    """
    The group product a * b if it is simple, else None.  Simplicity holds
    exactly when b refines the right complement of a.
    """
    if a.n != b.n:
        raise ValueError("strand counts differ")
    if not refines(b, right_complement(a)):
        return None
    return from_permutation(permutation(a) * permutation(b))


@lru_cache(maxsize=None)
def left_quotient(a: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition:
    """The simple a^{-1} b for a <= b."""
    if not refines(a, b):
        raise ValueError(f"{a.text()} is not a prefix of {b.text()}")
    return from_permutation(permutation(a).inverse() * permutation(b))


def _nc_partitions(elems: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All noncrossing partitions of an ordered ground set, blocks ascending."""
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    m = len(rest)
    for k in range(m + 1):
        for idxs in itertools.combinations(range(m), k):
            block = (first,) + tuple(rest[i] for i in idxs)
            # Elements strictly between consecutive block members (and after
            # the last) must be partitioned among themselves.
            segments = []
            prev = -1
            for i in idxs:
                segments.append(rest[prev + 1:i])
                prev = i
            segments.append(rest[prev + 1:])
            subparts = [list(_nc_partitions(seg)) for seg in segments if seg]
            for combo in itertools.product(*subparts):
                yield (block,) + tuple(itertools.chain.from_iterable(combo))


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def enumerate_simples(n: int, bound: int = ENUMERATION_BOUND) -> list[NoncrossingPartition]:
    """All Catalan(n) simple elements of B_n, canonically ordered."""
    if n > bound:
        raise ValueError(f"n={n} exceeds enumeration bound {bound}")
    out = [
        NoncrossingPartition._trusted(blocks, n)
        for blocks in _nc_partitions(tuple(range(1, n + 1)))
    ]
    out.sort(key=lambda a: a.blocks)
    return out


def refinements(target: NoncrossingPartition) -> list[NoncrossingPartition]:
    """All simples below `target` in the prefix order."""
    per_block = [list(_nc_partitions(b[::-1])) for b in target.blocks]
    out = []
    for combo in itertools.product(*per_block):
        out.append(
            NoncrossingPartition._trusted(itertools.chain.from_iterable(combo), target.n)
        )
    out.sort(key=lambda a: a.blocks)
    return out


def zeta(d: int, r: int) -> int:
    """Number of length-(r-1) multi-chains in the noncrossing partition lattice of {1..d}."""
    if d < 1 or r < 1:
        raise ValueError("need d >= 1 and r >= 1")
    return math.comb(d * r, d - 1) // d


def enumerate_compositions(
    target: NoncrossingPartition, r: int
) -> list[tuple[NoncrossingPartition, ...]]:
    """
    All r-tuples (c_0,...,c_{r-1}) of simples with c_0 ... c_{r-1} = target and
    every partial product simple, via the bijection with multi-chains
    1 <= a_1 <= ... <= a_{r-1} <= target given by c_k = a_k^{-1} a_{k+1}.
    """
    if r < 1:
        raise ValueError("need r >= 1")

    lower: dict[NoncrossingPartition, list[NoncrossingPartition]] = {}

    def below(top: NoncrossingPartition) -> list[NoncrossingPartition]:
        if top not in lower:
            lower[top] = refinements(top)
        return lower[top]

    def chains(top: NoncrossingPartition, length: int) -> Iterator[list[NoncrossingPartition]]:
        if length == 0:
            yield []
            return
        for a in below(top):
            for ch in chains(a, length - 1):
                yield ch + [a]

    out = []
    ident = NoncrossingPartition.identity(target.n)
    for chain in chains(target, r - 1):
        full = [ident] + chain + [target]
        out.append(tuple(left_quotient(full[k], full[k + 1]) for k in range(r)))
    return out
