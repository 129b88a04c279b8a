import json
import random

import pytest

from braidnc import engine, periodic, sss
from braidnc.engine import NormalForm
from braidnc.periodic import epsilon_nf
from braidnc.sss import count_sss, enumerate_sss, verify_membership

from helpers import random_word


def test_count_values():
    assert count_sss(5, 2) == 10
    assert count_sss(7, 2) == 21
    assert count_sss(7, 3) == 35
    assert count_sss(9, 2) == 36
    assert count_sss(9, 4) == 126
    assert count_sss(13, 3) == 286
    assert count_sss(13, 4) == 715
    assert count_sss(13, 6) == 1716
    for n in (3, 5, 9, 13):
        assert count_sss(n, 1) == n


def test_parameter_validation():
    with pytest.raises(ValueError):
        count_sss(13, 5)  # not a divisor of 12
    with pytest.raises(ValueError):
        count_sss(5, 4)  # r = 1
    with pytest.raises(ValueError):
        count_sss(5, 0)
    with pytest.raises(ValueError):
        enumerate_sss(13, 6, max_count=100)


def test_enumerate_matches_count():
    for n, d in ((5, 2), (7, 2), (7, 3), (5, 1), (9, 2)):
        table = enumerate_sss(n, d)
        assert len(table.elements) == count_sss(n, d)
        assert len(set(table.elements)) == len(table.elements)


def test_elements_are_summit_conjugates_of_epsilon_power():
    for n, d in ((5, 2), (7, 3)):
        table = enumerate_sss(n, d)
        for x in table.elements:
            assert (x.inf, x.canonical_length) == (d, 1)
            cert = periodic.solve_csp(x, d)
            assert cert.verified


def test_table_closed_under_tau():
    table = enumerate_sss(7, 2)
    elements = set(table.elements)
    for x in elements:
        assert engine.tau_nf(x, 1) in elements


def test_one_pure_elements():
    for n, d in ((5, 2), (9, 2), (7, 3)):
        table = enumerate_sss(n, d)
        assert len(table.one_pure_elements()) == count_sss(n, d) // n


def test_matches_brute_force_small():
    table = enumerate_sss(5, 2)
    assert set(table.elements) == engine.sss_brute_force(epsilon_nf(5, 2))


def test_contains_epsilon_power():
    for n, d in ((5, 2), (7, 3), (5, 1)):
        assert epsilon_nf(n, d) in enumerate_sss(n, d)


def test_verify_membership():
    table = enumerate_sss(7, 2)
    for x in table.elements:
        assert verify_membership(x, 7, 2)
    # A generic conjugate is periodic but not summit.
    rng = random.Random(40)
    g = engine.normalize(random_word(rng, 7, 12))
    y = engine.conjugate(epsilon_nf(7, 2), g)
    if y not in set(table.elements):
        assert not verify_membership(y, 7, 2)
    assert not verify_membership(NormalForm.delta_power(7, 2), 7, 2)
    assert not verify_membership(epsilon_nf(5, 2), 7, 2)


def test_json_lines():
    table = enumerate_sss(5, 2)
    lines = list(table.json_lines())
    header = json.loads(lines[0])
    assert header == {"n": 5, "d": 2, "count": 10}
    parsed = [NormalForm.from_json(json.loads(line)) for line in lines[1:]]
    assert parsed == list(table.elements)
