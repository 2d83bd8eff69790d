from fractions import Fraction

import pytest

import zpgamma as z


def test_idempotents():
    e = z.idempotents("3", 2)
    assert len(e) == 2
    assert sorted(x["Q"] for x in e) == [2, 4]
    assert len(z.idempotents("3", 7)) == 3


def test_counts():
    assert z.aut_count(2, [1, 1]) == 6
    assert z.sur_count(3, [2], [1]) == 2
    assert z.hom_count(2, [1, 1], [1]) == 4
    assert z.weight(2, [2, 1], [2], 1) == 4
    big = z.aut_count(2, [1] * 12)
    assert big > 2**63


def test_oracle_matches_formula():
    hom, sur = z.oracle_counts("4", 2, 2, [2, 1], [2])
    assert hom == z.hom_count(2, [2, 1], [2])
    assert sur == z.sur_count(2, [2, 1], [2])


def test_schur_layer():
    assert z.moment_ratio([4, 4], 1) == Fraction(1, 4)
    assert z.moment_ratio([4, 4], 2) == Fraction(1, 2)
    assert z.b_exact([4, 4], 5, 12) == z.b_closed([4, 4], 2, 12) == 238
    assert z.b_exact([2], 3, 4) == 3


def test_measure_and_moment():
    b = z.moment(2, [1], 12)
    assert b["lo"] <= Fraction(1, 2) <= b["hi"]
    assert b["hi"] - b["lo"] < Fraction(1, 100)
    m = z.measure(2, [])
    assert 0 < m["lo"] < m["hi"] < 1
    assert z.cokernel_law(2, 1, []) == Fraction(3, 4)


def test_sampler_deterministic():
    a = z.sample(2, 4, 3, 2000, 7, 1)
    b = z.sample(2, 4, 3, 2000, 7, 4)
    assert a == b
    assert sum(a.values()) == 2000


def test_errors():
    with pytest.raises(ValueError):
        z.aut_count(6, [1])
    with pytest.raises(ValueError):
        z.idempotents("2,x", 2)


def test_verify_suite():
    res = z.verify("rings")
    assert res and all(r["pass"] for r in res)
