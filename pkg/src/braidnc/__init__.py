"""
braidnc: braid groups under the dual (band-generator) Garside structure.

Simple elements are noncrossing partitions; normal forms are delta-powers
followed by left-weighted simple factors.  The periodic module solves the
conjugacy decision and search problems for periodic braids with explicit,
self-verifying conjugator certificates, and the sss module enumerates and
counts super summit sets of epsilon^d exactly.
"""
from .words import BandGenerator, BraidWord, ParseError, Permutation, parse_word, permutation_of, exponent_sum
from .ncp import (
    NoncrossingPartition,
    catalan,
    enumerate_compositions,
    enumerate_simples,
    join,
    left_complement,
    left_quotient,
    meet,
    pair_is_simple,
    refines,
    right_complement,
    simple_product,
    tau,
    zeta,
)
from .engine import (
    ConjugatorTrace,
    NormalForm,
    conjugate,
    cycling,
    decycling,
    equals,
    invert,
    multiply,
    normalize,
    partial_cycling,
    power,
    sss_brute_force,
    sss_representative,
    tau_nf,
)
from .periodic import (
    CharacterizationError,
    ConjugacyCertificate,
    Decomposition,
    NonConjugate,
    PeriodicClass,
    characterize,
    classify_periodic,
    conjugator_from_decomposition,
    epsilon_nf,
    is_stable_sss,
    purify,
    reduce_exponent,
    round_reduction_blocks,
    solve_csp,
    solve_csp_delta,
    stable_map_f,
    stable_map_g,
    transport,
)
from .sss import SssTable, count_sss, enumerate_sss, verify_membership

__version__ = "0.1.0"
