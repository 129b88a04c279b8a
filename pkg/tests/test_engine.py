import random

import pytest

from braidnc import engine, ncp
from braidnc.engine import NormalForm
from braidnc.ncp import NoncrossingPartition
from braidnc.words import parse_word, permutation_of

from helpers import partition, random_word


def nf(text, n):
    return engine.normalize(parse_word(text, n))


def test_identity_and_delta_powers():
    ident = NormalForm.identity(4)
    assert ident.is_identity()
    assert engine.equals(nf("", 4), ident)
    assert engine.equals(nf("d", 4), NormalForm.delta_power(4, 1))
    assert engine.equals(nf("d^-3", 4), NormalForm.delta_power(4, -3))


def test_factors_must_be_proper():
    with pytest.raises(ValueError):
        NormalForm(4, 0, (NoncrossingPartition.identity(4),))
    with pytest.raises(ValueError):
        NormalForm(4, 0, (NoncrossingPartition.delta(4),))


def test_band_relations_normalize_equal():
    # a(t,s) a(s,r) = a(t,r) a(t,s) = a(s,r) a(t,r) for t > s > r.
    n = 6
    for t in range(3, n + 1):
        for s in range(2, t):
            for r in range(1, s):
                w1 = nf(f"a({t},{s}) a({s},{r})", n)
                w2 = nf(f"a({t},{r}) a({t},{s})", n)
                w3 = nf(f"a({s},{r}) a({t},{r})", n)
                assert engine.equals(w1, w2) and engine.equals(w2, w3)


def test_artin_braid_relations():
    assert engine.equals(nf("s1 s2 s1", 3), nf("s2 s1 s2", 3))
    assert engine.equals(nf("s1 s3", 4), nf("s3 s1", 4))


def test_normalize_cancels_inverses():
    rng = random.Random(10)
    for n in (3, 5, 8):
        for _ in range(50):
            w = random_word(rng, n, 10)
            x = engine.normalize(w * w.inverse())
            assert x.is_identity()


def test_normal_forms_are_left_weighted():
    rng = random.Random(11)
    for n in (4, 6, 9):
        for _ in range(100):
            x = engine.normalize(random_word(rng, n, 12))
            x.validate()


def test_normalize_preserves_permutation_and_exponent_sum():
    rng = random.Random(12)
    for _ in range(100):
        w = random_word(rng, 7, 10)
        x = engine.normalize(w)
        assert x.permutation() == permutation_of(w)
        assert x.exponent_sum() == sum(g.sign for g in w.letters)


def test_worked_normal_forms():
    assert nf("e^3", 13).text() == "d^3 · [4,3,2,1]"
    assert nf("e^4", 5).text() == "d^5"
    alpha = nf("d^2 [5,3] [2,1]", 6)
    assert (alpha.inf, alpha.canonical_length) == (2, 1)
    assert alpha.factors[0] == partition([(5, 3), (2, 1)], 6)
    sq = engine.power(alpha, 2)
    assert sq.text() == "d^4 · [5,4,3,1] · [2,1]"


def test_multiply_matches_word_concatenation():
    rng = random.Random(13)
    for _ in range(50):
        w1 = random_word(rng, 6, 8)
        w2 = random_word(rng, 6, 8)
        lhs = engine.multiply(engine.normalize(w1), engine.normalize(w2))
        assert engine.equals(lhs, engine.normalize(w1 * w2))


def test_invert():
    rng = random.Random(14)
    for _ in range(50):
        x = engine.normalize(random_word(rng, 6, 8))
        assert engine.multiply(x, engine.invert(x)).is_identity()
        assert engine.multiply(engine.invert(x), x).is_identity()


def test_power():
    rng = random.Random(15)
    for _ in range(20):
        x = engine.normalize(random_word(rng, 5, 6))
        acc = NormalForm.identity(5)
        for m in range(4):
            assert engine.equals(engine.power(x, m), acc)
            assert engine.equals(engine.power(x, -m), engine.invert(acc))
            acc = engine.multiply(acc, x)


def test_delta_n_is_central():
    rng = random.Random(16)
    for n in (3, 5, 7):
        center = NormalForm.delta_power(n, n)
        for _ in range(20):
            x = engine.normalize(random_word(rng, n, 8))
            assert engine.equals(engine.conjugate(x, center), x)


def test_tau_nf_is_conjugation_by_delta():
    rng = random.Random(17)
    for _ in range(30):
        x = engine.normalize(random_word(rng, 6, 8))
        for p in (-2, 1, 3):
            assert engine.equals(
                engine.tau_nf(x, p), engine.conjugate(x, NormalForm.delta_power(6, p))
            )


def test_cycling_certificate():
    rng = random.Random(18)
    for _ in range(40):
        x = engine.normalize(random_word(rng, 6, 10))
        for move in (engine.cycling, engine.decycling):
            y, c = move(x)
            assert engine.equals(y, engine.conjugate(x, c))


def test_partial_cycling_certificate():
    rng = random.Random(19)
    done = 0
    while done < 30:
        x = engine.normalize(random_word(rng, 6, 10))
        if not x.factors:
            continue
        for prefix in ncp.refinements(x.factors[0]):
            y, c = engine.partial_cycling(x, prefix)
            assert engine.equals(y, engine.conjugate(x, c))
        done += 1
    with pytest.raises(ValueError):
        engine.partial_cycling(
            nf("d [2,1]", 4), partition([(3, 2)], 4)
        )


def test_full_partial_cycling_is_cycling():
    x = nf("[4,1] [3,2] s1", 5)
    assert x.factors
    y1, _ = engine.cycling(x)
    y2, _ = engine.partial_cycling(x, x.factors[0])
    assert engine.equals(y1, y2)


def test_sss_representative_certificate():
    rng = random.Random(20)
    for _ in range(25):
        x = engine.normalize(random_word(rng, 5, 8))
        rep, trace = engine.sss_representative(x)
        assert engine.equals(rep, engine.conjugate(x, trace.product))
        assert rep.inf >= x.inf
        assert rep.sup <= x.sup


def test_sss_representative_of_delta_power_conjugates():
    rng = random.Random(21)
    for n, k in ((4, 2), (6, 3), (7, -2)):
        target = NormalForm.delta_power(n, k)
        for _ in range(10):
            g = engine.normalize(random_word(rng, n, 10))
            rep, _ = engine.sss_representative(engine.conjugate(target, g))
            assert engine.equals(rep, target)


def test_sss_brute_force_small():
    from braidnc.periodic import epsilon_nf

    found = engine.sss_brute_force(epsilon_nf(5, 2))
    assert len(found) == 10
    for y in found:
        assert (y.inf, y.sup) == (2, 3)
    with pytest.raises(ValueError):
        engine.sss_brute_force(NormalForm.identity(10))


def test_json_round_trip():
    rng = random.Random(22)
    for _ in range(20):
        x = engine.normalize(random_word(rng, 6, 8))
        assert NormalForm.from_json(x.to_json()) == x
