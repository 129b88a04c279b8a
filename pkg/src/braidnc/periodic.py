"""
Conjugacy decision and search for periodic braids.

A braid is periodic when some power is central; every periodic braid is
conjugate to a power of delta or of epsilon = delta s1.  Conjugates of
delta-powers are trivial (their super summit set is a singleton); for
epsilon-powers the pipeline is: reduce the exponent to d = gcd(k, n-1),
transport into a conjugate of epsilon^d, find a super summit element,
rotate it 1-pure, read off the block decomposition, and assemble the
explicit simple conjugator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import engine, ncp
from .engine import ConjugatorTrace, NormalForm
from .ncp import NoncrossingPartition
from .words import BraidWord

from .words import epsilon_letters


class CharacterizationError(ValueError):
    """Input fails a structural requirement of the super summit characterization."""


@dataclass(frozen=True)
class PeriodicClass:
    """kind is one of "delta", "epsilon", "central", "non-periodic"."""

    kind: str
    m: int = 0

    def is_periodic(self) -> bool:
        return self.kind != "non-periodic"


@dataclass(frozen=True)
class Decomposition:
    """
    The block decomposition delta^d a(d+1,1) b_0 ... b_{r-1} of a 1-pure
    super summit element of epsilon^d in B_n, n = rd + 1.  Each b_k is
    supported on S_k = kd + {2,...,d+1}.
    """

    n: int
    d: int
    r: int
    b: tuple[NoncrossingPartition, ...]

    def rebuild(self) -> NormalForm:
        """The element delta^d a(d+1,1) b_0 ... b_{r-1} this decomposition describes."""
        a = NoncrossingPartition.from_blocks(
            [(1, self.d + 1)] + [(i,) for i in range(2, self.n + 1) if i != self.d + 1],
            self.n,
        )
        for bk in self.b:
            prod = ncp.simple_product(a, bk)
            if prod is None:
                raise RuntimeError("decomposition blocks do not assemble into a simple element")
            a = prod
        return NormalForm.from_simple(a, inf=self.d)


@dataclass(frozen=True)
class ConjugacyCertificate:
    """A conjugator gamma with gamma^{-1} x gamma equal to the periodic target."""

    n: int
    k: int
    target: str  # "epsilon" | "delta" | "central"
    gamma: NormalForm
    verified: bool
    #: The simple characterization conjugator, when the pipeline produced one.
    c: NoncrossingPartition | None = None

    def to_json(self) -> dict:
        data = {
            "n": self.n,
            "k": self.k,
            "target": self.target,
            "gamma": self.gamma.to_json(),
            "verified": self.verified,
        }
        if self.c is not None:
            data["c"] = self.c.to_json()
        return data


@dataclass(frozen=True)
class NonConjugate:
    """Verdict that the input is not conjugate to the requested target."""

    reason: str

    def to_json(self) -> dict:
        return {"conjugate": False, "reason": self.reason}


def epsilon_nf(n: int, k: int = 1) -> NormalForm:
    """Normal form of epsilon^k in B_n."""
    return engine.power(engine.normalize(BraidWord(n, tuple(epsilon_letters(n)))), k)


def classify_periodic(x: NormalForm) -> PeriodicClass:
    """
    Periodicity test: x is periodic iff x^n or x^{n-1} is the matching
    central delta-power predicted by the exponent sum.
    """
    n = x.n
    e = x.exponent_sum()
    if e % (n * (n - 1)) == 0:
        m = e // (n - 1)  # x would be delta^m with n | m, i.e. central
        if engine.equals(x, NormalForm.delta_power(n, m)):
            return PeriodicClass("central", m)
    if e % (n - 1) == 0:
        m = e // (n - 1)
        if engine.equals(engine.power(x, n), NormalForm.delta_power(n, m * n)):
            return PeriodicClass("delta", m)
    if e % n == 0:
        m = e // n
        if engine.equals(engine.power(x, n - 1), NormalForm.delta_power(n, m * n)):
            return PeriodicClass("epsilon", m)
    return PeriodicClass("non-periodic")


def reduce_exponent(k: int, n: int) -> tuple[int, int, int]:
    """
    d = gcd(k, n-1) together with Bezout coefficients (n-1)p + kq = d,
    tie-broken to the smallest |q|, then the smallest |p|.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    d = math.gcd(k, n - 1)
    g, q0, _ = _extended_gcd(k, n - 1)
    assert g == d
    step = (n - 1) // d
    base = q0 % step
    best = None
    for q in (base - step, base, base + step):
        p = (d - k * q) // (n - 1)
        key = (abs(q), abs(p), q, p)
        if best is None or key < best[0]:
            best = (key, p, q)
    _, p, q = best
    assert (n - 1) * p + k * q == d
    return d, p, q


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def transport(x: NormalForm, p: int, q: int) -> NormalForm:
    """
    delta^{np} x^q.  If x is conjugate to epsilon^k with (n-1)p + kq = d,
    the result is conjugate to epsilon^d by exactly the same conjugators.
    """
    return engine.multiply(NormalForm.delta_power(x.n, x.n * p), engine.power(x, q))


def purify(x: NormalForm) -> tuple[int, NormalForm]:
    """
    Rotate a super summit element of a noncentral epsilon-power to its 1-pure
    conjugate: with f the unique fixed point of the induced permutation,
    returns (u, tau^u(x)) where u = 1 - f mod n, so delta^{-u} x delta^u
    fixes strand 1.
    """
    fixed = x.permutation().fixed_points()
    if len(fixed) != 1:
        raise CharacterizationError(
            f"expected a unique fixed strand, found {fixed}; "
            "input is not conjugate to a noncentral epsilon power"
        )
    u = (1 - fixed[0]) % x.n
    return u, engine.tau_nf(x, u)


def characterize(x: NormalForm, d: int) -> Decomposition:
    """
    Decompose a 1-pure super summit element of epsilon^d as
    delta^d a(d+1,1) b_0 ... b_{r-1}.  Raises CharacterizationError naming
    the first failed requirement when x is not such an element.
    """
    n = x.n
    if d < 1 or (n - 1) % d != 0:
        raise ValueError(f"d={d} must be a divisor of n-1={n - 1}")
    r = (n - 1) // d
    if r < 2:
        raise ValueError(f"need r >= 2, got n={n}, d={d}")
    if d == 1:
        if not engine.equals(x, epsilon_nf(n)):
            raise CharacterizationError("for d=1 the only 1-pure super summit element is epsilon")
        return Decomposition(n, 1, r, tuple(NoncrossingPartition.identity(n) for _ in range(r)))
    if x.inf != d or x.canonical_length != 1:
        raise CharacterizationError(
            f"expected inf={d} and canonical length 1, got inf={x.inf}, len={x.canonical_length}"
        )
    a = x.factors[0]
    block1 = next(b for b in a.blocks if b[-1] == 1)
    if d + 1 not in block1 or block1[0] != d + 1:
        raise CharacterizationError(
            "the block containing strand 1 must reach exactly to strand d+1 (Claim 1)"
        )
    # Split off the bond a(d+1,1): strand 1 becomes a singleton.
    rest_blocks = [b for b in a.blocks if b is not block1] + [(1,)]
    remainder = block1[:-1]
    if len(remainder) > 1:
        rest_blocks.append(remainder)
    else:
        rest_blocks.append((d + 1,))
    # Sort the remaining blocks into the supports S_k = kd + {2,...,d+1}.
    segments: list[list[tuple[int, ...]]] = [[] for _ in range(r)]
    for b in rest_blocks:
        if len(b) == 1:
            continue
        k = (b[-1] - 2) // d
        if not all(k * d + 2 <= i <= k * d + d + 1 for i in b):
            raise CharacterizationError(
                f"block {list(b)} straddles the round supports S_k (Claim 3)"
            )
        segments[k].append(b)
    bs = []
    for k in range(r):
        blocks = segments[k] + [(i,) for i in range(1, n + 1) if not any(i in b for b in segments[k])]
        bs.append(NoncrossingPartition.from_blocks(blocks, n))
    # Condition (2): b_0 tau^{-d}(b_1) ... tau^{-(r-1)d}(b_{r-1}) = [d+1,...,2].
    chain = NoncrossingPartition.identity(n)
    for k in range(r):
        prod = ncp.simple_product(chain, ncp.tau(bs[k], -k * d))
        if prod is None:
            raise CharacterizationError("the twisted block product is not simple (condition 2)")
        chain = prod
    expected = NoncrossingPartition.from_blocks(
        [tuple(range(d + 1, 1, -1))] + [(1,)] + [(i,) for i in range(d + 2, n + 1)], n
    )
    if chain != expected:
        raise CharacterizationError(
            f"twisted block product is {chain.text()}, expected {expected.text()} (condition 2)"
        )
    return Decomposition(n, d, r, tuple(bs))


def conjugator_from_decomposition(dec: Decomposition) -> NoncrossingPartition:
    """
    The simple conjugator
    c = tau^{-d}(b_1 ... b_{r-1}) tau^{-2d}(b_2 ... b_{r-1}) ... tau^{-(r-1)d}(b_{r-1})
    with c^{-1} x c = epsilon^d for the characterized element x.  The result
    is verified before being returned.
    """
    n, d, r = dec.n, dec.d, dec.r
    c = NoncrossingPartition.identity(n)
    for k in range(1, r):
        suffix = NoncrossingPartition.identity(n)
        for j in range(k, r):
            prod = ncp.simple_product(suffix, dec.b[j])
            if prod is None:
                raise RuntimeError("block suffix product is not simple")
            suffix = prod
        prod = ncp.simple_product(c, ncp.tau(suffix, -k * d))
        if prod is None:
            raise RuntimeError("conjugator assembly left the simple elements")
        c = prod
    x = dec.rebuild()
    c_nf = NormalForm.from_simple(c)
    if not engine.equals(engine.conjugate(x, c_nf), epsilon_nf(n, d)):
        raise RuntimeError("assembled conjugator fails to conjugate to epsilon^d")
    return c


def solve_csp(x: NormalForm, k: int) -> ConjugacyCertificate | NonConjugate:
    """
    Full conjugacy search for the target epsilon^k: returns a verified
    certificate gamma with gamma^{-1} x gamma = epsilon^k, or a
    non-conjugacy verdict.
    """
    n = x.n
    if k == 0:
        if x.is_identity():
            return ConjugacyCertificate(n, 0, "epsilon", NormalForm.identity(n), True)
        return NonConjugate("target is the identity but the input is not")
    if x.exponent_sum() != k * n:
        return NonConjugate(
            f"exponent sum {x.exponent_sum()} differs from that of epsilon^{k} ({k * n})"
        )
    cls = classify_periodic(x)
    if not cls.is_periodic():
        return NonConjugate("input is not periodic")

    d, p, q = reduce_exponent(k, n)
    moved = transport(x, p, q)
    rep, trace = sss_representative_checked(moved)
    target_kind = "central" if (n - 1) % d == 0 and d == n - 1 else "epsilon"

    c = None
    if d == n - 1:
        # epsilon^{n-1} = delta^n: the transported target is central.
        if not engine.equals(rep, NormalForm.delta_power(n, n)):
            return NonConjugate("transported element is not conjugate to the central delta^n")
        gamma = trace.product
    else:
        if (rep.inf, rep.canonical_length) != (d, 1):
            return NonConjugate(
                f"super summit invariants ({rep.inf}, {rep.canonical_length}) "
                f"differ from those of epsilon^{d} ({d}, 1)"
            )
        try:
            u, pure = purify(rep)
            dec = characterize(pure, d)
        except CharacterizationError as exc:
            return NonConjugate(str(exc))
        c = conjugator_from_decomposition(dec)
        gamma = engine.multiply(
            trace.product,
            engine.multiply(NormalForm.delta_power(n, u), NormalForm.from_simple(c)),
        )
    verified = engine.equals(engine.conjugate(x, gamma), epsilon_nf(n, k))
    return ConjugacyCertificate(n, k, target_kind, gamma, verified, c)


def sss_representative_checked(x: NormalForm) -> tuple[NormalForm, ConjugatorTrace]:
    rep, trace = engine.sss_representative(x)
    assert engine.equals(engine.conjugate(x, trace.product), rep)
    return rep, trace


def solve_csp_delta(x: NormalForm, m: int) -> ConjugacyCertificate | NonConjugate:
    """Conjugacy search for the target delta^m, whose super summit set is {delta^m}."""
    n = x.n
    if x.exponent_sum() != m * (n - 1):
        return NonConjugate(
            f"exponent sum {x.exponent_sum()} differs from that of delta^{m} ({m * (n - 1)})"
        )
    rep, trace = sss_representative_checked(x)
    if not engine.equals(rep, NormalForm.delta_power(n, m)):
        return NonConjugate(f"super summit representative is not delta^{m}")
    target = "central" if m % n == 0 else "delta"
    verified = engine.equals(engine.conjugate(x, trace.product), NormalForm.delta_power(n, m))
    return ConjugacyCertificate(n, m, target, trace.product, verified)


def stable_map_f(x: NormalForm, k: int, d: int) -> NormalForm:
    """f(x) = x^{k/d}, carrying conjugates of epsilon^d to conjugates of epsilon^k."""
    if k % d != 0:
        raise ValueError(f"d={d} must divide k={k}")
    return engine.power(x, k // d)


def stable_map_g(x: NormalForm, p: int, q: int) -> NormalForm:
    """g(x) = delta^{np} x^q, the inverse of f on the stable super summit sets."""
    return transport(x, p, q)


def is_stable_sss(x: NormalForm, d: int) -> bool:
    """
    Whether x lies in the stable super summit set of epsilon^d: every power
    x^m for m = 1..(n-1)/gcd(d, n-1) realizes the summit inf/sup of
    epsilon^{dm}.  The range suffices because that last power is a central
    delta-power and central shifts preserve summit membership.
    """
    n = x.n
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    for m in range(1, (n - 1) // math.gcd(d, n - 1) + 1):
        target, _ = engine.sss_representative(epsilon_nf(n, d * m))
        xm = engine.power(x, m)
        if (xm.inf, xm.sup) != (target.inf, target.sup):
            return False
    return True


def round_reduction_blocks(n: int, d: int) -> list[set[int]]:
    """
    The supports S_k = kd + {2,...,d+1} of the round reduction system common
    to all 1-pure stable super summit elements, for d >= 2 dividing n-1.
    """
    if d < 2:
        raise ValueError("round reduction needs d >= 2")
    if (n - 1) % d != 0:
        raise ValueError(f"d={d} does not divide n-1={n - 1}")
    r = (n - 1) // d
    return [set(range(k * d + 2, k * d + d + 2)) for k in range(r)]
