import random

import pytest

from braidnc.words import (
    BandGenerator,
    BraidWord,
    ParseError,
    Permutation,
    delta_letters,
    epsilon_letters,
    exponent_sum,
    half_twist_letters,
    parse_word,
    permutation_of,
)

from helpers import random_word


def test_permutation_composition_right_first():
    # (1 2) then (2 3): 1 -> 2 -> 3.
    t12 = Permutation.transposition(3, 1, 2)
    t23 = Permutation.transposition(3, 2, 3)
    prod = t23 * t12
    assert prod.images == (3, 1, 2)


def test_permutation_inverse_and_identity():
    rng = random.Random(0)
    for _ in range(50):
        images = list(range(1, 8))
        rng.shuffle(images)
        p = Permutation(7, tuple(images))
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_permutation_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation(3, (1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(3, (1, 2, 4))
    with pytest.raises(ValueError):
        Permutation(3, (1, 2))


def test_rotation():
    rot = Permutation.rotation(5, -1)
    assert rot.images == (5, 1, 2, 3, 4)
    assert rot(1) == 5
    assert rot(2) == 1


def test_delta_permutation_steps_down():
    for n in (2, 3, 4, 7):
        w = BraidWord(n, tuple(delta_letters(n)))
        perm = permutation_of(w)
        assert all(perm(i) == (i - 2) % n + 1 for i in range(1, n + 1))


def test_band_generator_validation():
    with pytest.raises(ValueError):
        BandGenerator(2, 2)
    with pytest.raises(ValueError):
        BandGenerator(1, 2)
    with pytest.raises(ValueError):
        BandGenerator(3, 1, 0)


def test_word_inverse_cancels():
    rng = random.Random(1)
    for _ in range(20):
        w = random_word(rng, 6, 8)
        perm = permutation_of(w) * permutation_of(w.inverse())
        assert perm.is_identity()
        assert exponent_sum(w) + exponent_sum(w.inverse()) == 0


def test_parse_single_generator():
    w = parse_word("a(5,2)", 6)
    assert w.letters == (BandGenerator(5, 2),)
    # Indices may come in either order.
    assert parse_word("a(2,5)", 6) == w


def test_parse_sigma_delta_epsilon():
    assert parse_word("s3", 5).letters == (BandGenerator(4, 3),)
    assert parse_word("d", 4).letters == tuple(delta_letters(4))
    assert parse_word("e", 4).letters == tuple(epsilon_letters(4))
    assert parse_word("D", 4).letters == tuple(half_twist_letters(4))


def test_parse_powers_and_grouping():
    w = parse_word("(s1 s2)^-1", 4)
    assert w.letters == (BandGenerator(3, 2, -1), BandGenerator(2, 1, -1))
    assert parse_word("s1^3", 3).letters == (BandGenerator(2, 1),) * 3
    assert parse_word("s1^0", 3).letters == ()


def test_parse_subsimple_literal():
    w = parse_word("[5,3,2]", 6)
    assert w.letters == (BandGenerator(5, 3), BandGenerator(3, 2))
    with pytest.raises(ParseError):
        parse_word("[2,3]", 6)


def test_parse_star_separator_and_whitespace():
    assert parse_word("s1 * s2", 4) == parse_word("s1 s2", 4) == parse_word("s1s2", 4)


def test_parse_errors():
    for bad in ("a(7,2)", "a(2,2)", "s0", "s9", "(s1", "s1)", "x", "[3,", "^2"):
        with pytest.raises(ParseError):
            parse_word(bad, 6)


def test_parse_round_trip_of_text():
    rng = random.Random(2)
    for _ in range(25):
        w = random_word(rng, 7, 10)
        assert parse_word(w.text(), 7) == w


def test_half_twist_squared_is_central_permutation():
    # The permutation of D is the order-reversing involution.
    for n in (3, 5, 6):
        perm = permutation_of(BraidWord(n, tuple(half_twist_letters(n))))
        assert all(perm(i) == n + 1 - i for i in range(1, n + 1))


def test_epsilon_exponent_sum():
    for n in (3, 5, 8):
        assert exponent_sum(BraidWord(n, tuple(epsilon_letters(n)))) == n
        assert exponent_sum(BraidWord(n, tuple(delta_letters(n)))) == n - 1
