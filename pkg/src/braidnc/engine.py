"""
Left normal forms over the dual Garside structure, group operations,
cycling/decycling/partial cycling with conjugator certificates, and a
brute-force super summit oracle.

A normal form is delta^r a_1 ... a_l with every a_i strictly between the
identity and delta and every consecutive pair left-weighted:
meet(right_complement(a_i), a_{i+1}) = identity.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import ncp
from .ncp import NoncrossingPartition
from .words import BraidWord, Permutation

#: Iteration cap guarding the orbit-closure termination rule against
#: non-periodic misuse of the summit search.
MAX_CYCLING_STEPS = 20000

#: Largest strand count accepted by the brute-force super summit closure.
BRUTE_FORCE_BOUND = 9


@dataclass(frozen=True)
class NormalForm:
    """delta^inf a_1 ... a_l, left-weighted, factors strictly in (1, delta)."""

    n: int
    inf: int
    factors: tuple[NoncrossingPartition, ...]

    def __post_init__(self):
        for f in self.factors:
            if f.is_identity() or f.is_delta():
                raise ValueError("normal form factors must lie strictly between 1 and delta")

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def validate(self):
        """Check the left-weighted invariant; raises AssertionError on violation."""
        for a, b in zip(self.factors, self.factors[1:]):
            assert ncp.meet(ncp.right_complement(a), b).is_identity(), (
                f"not left-weighted: {a.text()} | {b.text()}"
            )

    def permutation(self) -> Permutation:
        perm = Permutation.rotation(self.n, -self.inf)
        for f in self.factors:
            perm = perm * ncp.permutation(f)
        return perm

    def exponent_sum(self) -> int:
        return self.inf * (self.n - 1) + sum(f.letter_count() for f in self.factors)

    def text(self) -> str:
        parts = [f"d^{self.inf}"] + [f.text() for f in self.factors]
        return " · ".join(parts)

    def sort_key(self) -> tuple:
        return (self.inf, tuple(f.blocks for f in self.factors))

    def to_json(self) -> dict:
        return {"n": self.n, "inf": self.inf, "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "NormalForm":
        return cls(
            data["n"], data["inf"],
            tuple(NoncrossingPartition.from_json(f) for f in data["factors"]),
        )

    @classmethod
    def identity(cls, n: int) -> "NormalForm":
        return cls(n, 0, ())

    @classmethod
    def delta_power(cls, n: int, r: int) -> "NormalForm":
        return cls(n, r, ())

    @classmethod
    def from_simple(cls, a: NoncrossingPartition, inf: int = 0) -> "NormalForm":
        if a.is_delta():
            return cls(a.n, inf + 1, ())
        if a.is_identity():
            return cls(a.n, inf, ())
        return cls(a.n, inf, (a,))


def _left_weight(n: int, simples: list[NoncrossingPartition]) -> tuple[int, tuple[NoncrossingPartition, ...]]:
    """Enforce left-weighting by local sliding; absorb deltas, drop identities."""
    inf = 0
    fs = list(simples)
    changed = True
    while changed:
        changed = False
        j = 0
        while j < len(fs):
            if fs[j].is_delta():
                inf += 1
                fs = [ncp.tau(f, 1) for f in fs[:j]] + fs[j + 1:]
                changed = True
            elif fs[j].is_identity():
                fs.pop(j)
                changed = True
            else:
                j += 1
        for j in range(len(fs) - 1):
            a, b = fs[j], fs[j + 1]
            t = ncp.meet(ncp.right_complement(a), b)
            if not t.is_identity():
                prod = ncp.simple_product(a, t)
                assert prod is not None
                fs[j] = prod
                fs[j + 1] = ncp.left_quotient(t, b)
                changed = True
    return inf, tuple(fs)


def _from_pairs(n: int, pairs: list[tuple[int, NoncrossingPartition]]) -> NormalForm:
    """Normal form of the product delta^{e_1} s_1 delta^{e_2} s_2 ... ."""
    total = sum(e for e, _ in pairs)
    shift = 0
    simples = []
    # s_i delta^e = delta^e tau^e(s_i): factor i picks up the deltas to its right.
    for e, s in reversed(pairs):
        simples.append(ncp.tau(s, shift))
        shift += e
    simples.reverse()
    extra, fs = _left_weight(n, simples)
    return NormalForm(n, total + extra, fs)


def normalize(w: BraidWord) -> NormalForm:
    """
    Unique left normal form of the braid word.  A negative letter x^{-1}
    enters as delta^{-1} tau^{-1}(right_complement(x)).
    """
    pairs: list[tuple[int, NoncrossingPartition]] = []
    for g in w.letters:
        s = NoncrossingPartition.generator(g, w.n)
        if g.sign > 0:
            pairs.append((0, s))
        else:
            pairs.append((-1, ncp.tau(ncp.right_complement(s), -1)))
    return _from_pairs(w.n, pairs)


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    if x.n != y.n:
        raise ValueError("strand counts differ")
    pairs = [(x.inf, NoncrossingPartition.identity(x.n))]
    pairs += [(0, f) for f in x.factors]
    pairs.append((y.inf, NoncrossingPartition.identity(x.n)))
    pairs += [(0, f) for f in y.factors]
    return _from_pairs(x.n, pairs)


def invert(x: NormalForm) -> NormalForm:
    pairs: list[tuple[int, NoncrossingPartition]] = []
    for f in reversed(x.factors):
        pairs.append((-1, ncp.tau(ncp.right_complement(f), -1)))
    pairs.append((-x.inf, NoncrossingPartition.identity(x.n)))
    return _from_pairs(x.n, pairs)


def equals(x: NormalForm, y: NormalForm) -> bool:
    """Structural equality of canonical normal forms."""
    return x == y


def power(x: NormalForm, m: int) -> NormalForm:
    if m < 0:
        return power(invert(x), -m)
    result = NormalForm.identity(x.n)
    base = x
    while m:
        if m & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        m >>= 1
    return result


def conjugate(x: NormalForm, g: NormalForm) -> NormalForm:
    """g^{-1} x g."""
    return multiply(invert(g), multiply(x, g))


def tau_nf(x: NormalForm, p: int) -> NormalForm:
    """delta^{-p} x delta^p: applies tau^p to every factor, infimum unchanged."""
    return NormalForm(x.n, x.inf, tuple(ncp.tau(f, p) for f in x.factors))


def cycling(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """
    delta^r a_1 ... a_l  ->  delta^r a_2 ... a_l tau^{-r}(a_1), conjugating by
    tau^{-r}(a_1).  Returns (result, conjugator); a length-0 input is returned
    unchanged with the identity conjugator.
    """
    if not x.factors:
        return x, NormalForm.identity(x.n)
    moved = ncp.tau(x.factors[0], -x.inf)
    pairs = [(x.inf, NoncrossingPartition.identity(x.n))]
    pairs += [(0, f) for f in x.factors[1:]]
    pairs.append((0, moved))
    return _from_pairs(x.n, pairs), NormalForm.from_simple(moved)


def decycling(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """
    Conjugate by the inverse of the final factor:
    delta^r a_1 ... a_l  ->  delta^r tau^r(a_l) a_1 ... a_{l-1},
    so that conjugator^{-1} x conjugator = result with conjugator = a_l^{-1}.
    """
    if not x.factors:
        return x, NormalForm.identity(x.n)
    last = x.factors[-1]
    pairs = [(x.inf, ncp.tau(last, x.inf))]
    pairs += [(0, f) for f in x.factors[:-1]]
    return _from_pairs(x.n, pairs), invert(NormalForm.from_simple(last))


def partial_cycling(x: NormalForm, prefix: NoncrossingPartition) -> tuple[NormalForm, NormalForm]:
    """
    Conjugate by tau^{-inf}(prefix) where prefix is a prefix of the first
    factor a_1 = prefix * rest:  result = delta^inf rest a_2 ... a_l tau^{-inf}(prefix).
    """
    if not x.factors:
        raise ValueError("partial cycling needs canonical length >= 1")
    if not ncp.refines(prefix, x.factors[0]):
        raise ValueError(f"{prefix.text()} is not a prefix of {x.factors[0].text()}")
    rest = ncp.left_quotient(prefix, x.factors[0])
    moved = ncp.tau(prefix, -x.inf)
    pairs = [(x.inf, rest)]
    pairs += [(0, f) for f in x.factors[1:]]
    pairs.append((0, moved))
    return _from_pairs(x.n, pairs), NormalForm.from_simple(moved)


@dataclass(frozen=True)
class ConjugatorTrace:
    """An ordered sequence of conjugators together with their product."""

    steps: tuple[NormalForm, ...]
    product: NormalForm


def sss_representative(x: NormalForm, max_steps: int = MAX_CYCLING_STEPS) -> tuple[NormalForm, ConjugatorTrace]:
    """
    An element of the super summit set of x plus the accumulated conjugator:
    iterate cycling until the infimum stops increasing (orbit closure), then
    decycling until the supremum stops decreasing, repeating both phases until
    neither improves.  Correct whenever the orbit-closure rule is (in
    particular for periodic braids); the step cap guards other inputs.
    """
    cur = x
    steps: list[NormalForm] = []
    budget = max_steps

    def run_phase(move, improves):
        nonlocal cur, budget
        seen = {cur}
        while cur.factors:
            nxt, c = move(cur)
            if improves(nxt, cur):
                steps.append(c)
                cur = nxt
                seen = {cur}
            elif nxt in seen:
                break
            else:
                steps.append(c)
                cur = nxt
                seen.add(cur)
            budget -= 1
            if budget <= 0:
                raise RuntimeError(f"summit search exceeded {max_steps} steps")

    while True:
        before = (cur.inf, cur.sup)
        run_phase(cycling, lambda nxt, old: nxt.inf > old.inf)
        run_phase(decycling, lambda nxt, old: nxt.sup < old.sup)
        if (cur.inf, cur.sup) == before:
            break

    product = NormalForm.identity(x.n)
    for c in steps:
        product = multiply(product, c)
    return cur, ConjugatorTrace(tuple(steps), product)


def sss_brute_force(x: NormalForm, max_n: int = BRUTE_FORCE_BOUND) -> set[NormalForm]:
    """
    The full super summit set of x: breadth-first closure of a representative
    under conjugation by all simple elements, keeping conjugates that realize
    the representative's inf and sup.
    """
    if x.n > max_n:
        raise ValueError(f"n={x.n} exceeds brute force bound {max_n}")
    rep, _ = sss_representative(x)
    target = (rep.inf, rep.sup)
    simples = [s for s in ncp.enumerate_simples(x.n) if not s.is_identity()]
    # Precompute the delta^{-1}-twisted complements used to invert each simple.
    pre = [(s, ncp.tau(ncp.right_complement(s), -1)) for s in simples]

    found = {rep}
    frontier = [rep]
    ident = NoncrossingPartition.identity(x.n)
    while frontier:
        nxt_frontier = []
        for y in frontier:
            for s, s_inv_part in pre:
                pairs = [(-1, s_inv_part), (y.inf, y.factors[0] if y.factors else ident)]
                pairs += [(0, f) for f in y.factors[1:]]
                pairs.append((0, s))
                z = _from_pairs(x.n, pairs)
                if (z.inf, z.sup) == target and z not in found:
                    found.add(z)
                    nxt_frontier.append(z)
        frontier = nxt_frontier
    return found
