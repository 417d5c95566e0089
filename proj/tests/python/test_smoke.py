from fractions import Fraction
from math import comb, factorial

import pytest

import hollowgh

GAMMAS = ["1,1:1,1:0,0", "1,1:2,1:1,0", "2,1:1,1:0,0", "1,2:1,2:0,1"]


def parse(g):
    m, k, p = (tuple(int(v) for v in part.split(",")) for part in g.split(":"))
    return m, k, p


@pytest.mark.parametrize("g", GAMMAS)
def test_closed_series_matches_harmonic_span(g):
    assert hollowgh.hilbert_closed(g) == hollowgh.harmonic_series(g)


@pytest.mark.parametrize("g", GAMMAS)
def test_total_is_product_formula(g):
    (m1, m2), (k1, k2), (p1, p2) = parse(g)
    n = m1 + m2 + p1 + p2 + 1
    want = factorial(n) * comb(p1 + k1, p1 + 1) * comb(p2 + k2, p2 + 1)
    assert sum(hollowgh.hilbert_closed(g).values()) == want
    assert hollowgh.expected_total(g) == want


def test_smallest_series():
    assert hollowgh.hilbert_closed("1,1:1,1:0,0") == {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 1}
    assert hollowgh.hollow_cells("1,1:1,1:0,0") == [(0, 1), (0, 0), (1, 0)]


def test_independence_report():
    report = hollowgh.verify_independence("1,1:2,1:1,0")
    assert report["pass"] is True
    assert report["rank"] == 72


def test_straightening_example():
    terms = hollowgh.straighten("det", "2 1 / 3", "-1 1 / 2")
    assert sorted(c for _, _, c in terms) == [Fraction(-1), Fraction(-1), Fraction(1)]
    assert hollowgh.bitableau("det", "2 1 / 3", "-1 1 / 2") == "-x1*x2^2*y3 + x1*x3^2*y2"


def test_domino_count():
    assert hollowgh.domino_count([9, 9, 9, 8, 7, 7], [3] * 15 + [2, 1, 1]) == 27


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        hollowgh.delta("1,1;1,1:0,0")
    with pytest.raises(RuntimeError):
        hollowgh.verify_independence("1,2:1,2:0,1", cap_basis=10)


def test_cli_entry():
    code, out, _ = hollowgh.run_cli(["--gamma", "1,1:1,1:0,0", "delta"])
    assert code == 0
    assert "terms 6" in out
