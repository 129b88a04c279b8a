"""
Closed-form generation and exact counting of the super summit set of
epsilon^d in B_n, for d a divisor of n-1 with n = rd + 1, r >= 2.

Every 1-pure element arises from an r-composition (c_0,...,c_{r-1}) of
[d+1,...,2] as delta^d a(d+1,1) b_0 ... b_{r-1} with b_k = tau^{kd}(c_k);
the full set is the n tau-shifts of these.  The cardinality is
n * binom(n-1, d-1) / d.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator

from . import engine, ncp, periodic
from .engine import NormalForm
from .ncp import NoncrossingPartition

#: Refuse to materialize tables larger than this (configurable per call).
DEFAULT_MAX_COUNT = 500_000


def _check_parameters(n: int, d: int) -> int:
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if (n - 1) % d != 0:
        raise ValueError(f"d={d} does not divide n-1={n - 1}")
    r = (n - 1) // d
    if r < 2:
        raise ValueError(f"need n = rd+1 with r >= 2, got n={n}, d={d}")
    return r


def count_sss(n: int, d: int) -> int:
    """Exact cardinality of the super summit set of epsilon^d: n*C(n-1, d-1)/d."""
    _check_parameters(n, d)
    return n * math.comb(n - 1, d - 1) // d


@dataclass(frozen=True)
class SssTable:
    """The full super summit set of epsilon^d in B_n, canonically sorted."""

    n: int
    d: int
    r: int
    elements: tuple[NormalForm, ...]

    def __contains__(self, x: NormalForm) -> bool:
        return x in set(self.elements)

    def one_pure_elements(self) -> list[NormalForm]:
        return [x for x in self.elements if x.permutation()(1) == 1]

    def json_lines(self) -> Iterator[str]:
        yield json.dumps({"n": self.n, "d": self.d, "count": len(self.elements)})
        for x in self.elements:
            yield json.dumps(x.to_json())


def enumerate_sss(n: int, d: int, max_count: int = DEFAULT_MAX_COUNT) -> SssTable:
    """
    Generate the whole super summit set of epsilon^d.  A duplicate element or
    a count differing from count_sss is an internal error, not a soft result.
    """
    r = _check_parameters(n, d)
    expected = count_sss(n, d)
    if expected > max_count:
        raise ValueError(f"table of size {expected} exceeds the bound {max_count}")

    pure: list[NormalForm] = []
    if d == 1:
        pure.append(periodic.epsilon_nf(n))
    else:
        target = NoncrossingPartition.from_blocks(
            [tuple(range(d + 1, 1, -1))] + [(1,)] + [(i,) for i in range(d + 2, n + 1)], n
        )
        bond = NoncrossingPartition.from_blocks(
            [(1, d + 1)] + [(i,) for i in range(2, n + 1) if i != d + 1], n
        )
        for comp in ncp.enumerate_compositions(target, r):
            a = bond
            for k, ck in enumerate(comp):
                prod = ncp.simple_product(a, ncp.tau(ck, k * d))
                if prod is None:
                    raise RuntimeError("composition blocks did not assemble into a simple element")
                a = prod
            pure.append(NormalForm.from_simple(a, inf=d))

    seen: set[NormalForm] = set()
    for x in pure:
        for u in range(n):
            y = engine.tau_nf(x, u)
            if y in seen:
                raise RuntimeError(f"duplicate super summit element {y.text()}")
            seen.add(y)
    if len(seen) != expected:
        raise RuntimeError(f"generated {len(seen)} elements, expected {expected}")
    elements = tuple(sorted(seen, key=NormalForm.sort_key))
    return SssTable(n, d, r, elements)


def verify_membership(x: NormalForm, n: int, d: int) -> bool:
    """Decision procedure for membership in the super summit set of epsilon^d."""
    _check_parameters(n, d)
    if x.n != n:
        return False
    try:
        _, pure = periodic.purify(x)
        periodic.characterize(pure, d)
        return True
    except (periodic.CharacterizationError, ValueError):
        return False
