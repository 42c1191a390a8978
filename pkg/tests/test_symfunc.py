from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from grothres import _kernels
from grothres.errors import DimensionError, NotInSpan, NotSymmetric, ZeroPolynomial
from grothres.symfunc import (
    XPolynomial,
    expand_in_g_basis,
    expand_in_schur_basis,
    g_poly,
    h_i_poly,
    h_poly,
    lowest_degree_component,
    schur_poly,
)


def P(M, terms):
    return XPolynomial(M, terms)


def x(M, i):
    return XPolynomial.variable(M, i)


def all_partitions(w):
    def rec(n, top):
        if n == 0:
            yield ()
            return
        for k in range(min(n, top), 0, -1):
            for r in rec(n - k, k):
                yield (k,) + r

    return [p for n in range(w + 1) for p in rec(n, n)]


SMALL = [(lam, M) for lam in all_partitions(5) for M in range(max(1, len(lam)), 5)]


@st.composite
def polys(draw, M=3, max_terms=6, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.lists(st.integers(0, max_exp), min_size=M, max_size=M)))
        terms[e] = draw(st.integers(-5, 5))
    return XPolynomial(M, terms)


def test_h_examples():
    assert h_poly(0, 3) == 1
    assert h_poly(2, 2) == P(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert not h_poly(-1, 2)
    assert h_poly(2, 2).render() == "x1^2 + x1 x2 + x2^2"


def test_h_i_examples():
    assert h_i_poly(0, 2, 2) == h_poly(2, 2)
    assert h_i_poly(1, 1, 2) == x(2, 1) + x(2, 2) - 1
    assert h_i_poly(2, 0, 3) == 1


@pytest.mark.parametrize("i", range(4))
def test_h_i_generating_function(i):
    # Truncated series division of (1-u)^i by prod (1 - x_j u), degree by degree.
    M, R = 2, 6
    num = [XPolynomial.constant(M, 0) for _ in range(R + 1)]
    from math import comb

    for j in range(min(i, R) + 1):
        num[j] = XPolynomial.constant(M, (-1) ** j * comb(i, j))
    den = [XPolynomial.constant(M, 1)] + [XPolynomial.constant(M, 0) for _ in range(R)]
    for v in range(1, M + 1):
        new = list(den)
        for r in range(1, R + 1):
            new[r] = new[r] - den[r - 1] * x(M, v)
        den = new
    series = []
    for r in range(R + 1):
        acc = num[r]
        for k in range(1, r + 1):
            acc = acc - den[k] * series[r - k]
        series.append(acc)
    for r in range(R + 1):
        assert series[r] == h_i_poly(i, r, M)


def test_schur_examples():
    assert schur_poly((1,), 2) == x(2, 1) + x(2, 2)
    assert not schur_poly((1, 1), 1)
    assert schur_poly((2, 1), 2) == P(2, {(2, 1): 1, (1, 2): 1})


def test_g_examples():
    assert g_poly((), 2) == 1
    assert g_poly((2,), 3) == schur_poly((2,), 3) - schur_poly((2, 1), 3) + schur_poly((2, 1, 1), 3)
    assert g_poly((1,), 1) == x(1, 1)
    with pytest.raises(DimensionError):
        g_poly((1, 1), 1)


def test_lowest_degree_examples():
    assert lowest_degree_component(x(2, 1) + x(2, 1) * x(2, 2)) == x(2, 1)
    assert lowest_degree_component(g_poly((2,), 3)) == schur_poly((2,), 3)
    assert lowest_degree_component(XPolynomial.constant(2, 1)) == 1
    with pytest.raises(ZeroPolynomial):
        lowest_degree_component(XPolynomial.constant(2, 0))


def test_expand_in_schur_examples():
    assert expand_in_schur_basis(schur_poly((2, 1), 2)) == {(2, 1): 1}
    assert expand_in_schur_basis(h_poly(1, 2) * h_poly(1, 2)) == {(2,): 1, (1, 1): 1}
    assert expand_in_schur_basis(XPolynomial.constant(2, 0)) == {}
    with pytest.raises(NotSymmetric):
        expand_in_schur_basis(x(2, 2))


def test_expand_in_g_examples():
    assert expand_in_g_basis(g_poly((3, 1), 4)) == {(3, 1): 1}
    assert expand_in_g_basis(g_poly((1,), 2) * g_poly((1,), 2)) == {(1, 1): 1, (2,): 1, (2, 1): -1}
    assert expand_in_g_basis(XPolynomial.constant(3, 1)) == {(): 1}
    with pytest.raises(NotInSpan):
        expand_in_g_basis(x(2, 1))


@pytest.mark.parametrize("lam, M", SMALL)
def test_symmetry_under_adjacent_transpositions(lam, M):
    for i in range(M - 1):
        perm = list(range(M))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        assert g_poly(lam, M).permute(perm) == g_poly(lam, M)
        assert schur_poly(lam, M).permute(perm) == schur_poly(lam, M)


@pytest.mark.parametrize("lam, M", SMALL)
def test_round_trips(lam, M):
    assert expand_in_schur_basis(schur_poly(lam, M)) == {lam: 1}
    assert expand_in_g_basis(g_poly(lam, M)) == {lam: 1}


def test_schur_by_monomial_count():
    # s_lam(x1..xM) at x = 1 counts semistandard tableaux; compare with the hook-content formula.
    from fractions import Fraction

    for lam, M in SMALL:
        val = sum(schur_poly(lam, M).as_dict().values())
        expected = Fraction(1)
        conj = [sum(1 for r in lam if r > j) for j in range(lam[0] if lam else 0)]
        for i, row in enumerate(lam):
            for j in range(row):
                hook = row - j + conj[j] - i - 1
                expected *= Fraction(M + j - i, hook)
        assert val == expected


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_packed_product_matches_dict_product(backend):
    from grothres.symfunc import _mul_dict, _mul_packed

    old = _kernels.BACKEND
    try:
        _kernels.set_backend(backend)
        a = g_poly((2, 1), 4)
        b = g_poly((3, 1, 1), 4)
        packed = _mul_packed(a, b)
        assert packed is not None
        assert packed == _mul_dict(a, b)
    finally:
        _kernels.set_backend(old)


def test_packed_product_declines_on_overflow_risk():
    from grothres.symfunc import _mul_packed

    big = XPolynomial(2, {(i, 0): 2**40 for i in range(20)})
    assert _mul_packed(big, big) is None
    square = big * big
    assert square.as_dict()[(19, 0)] == 20 * 2**80


def test_serialization():
    p = x(2, 1) * x(2, 1) - XPolynomial.constant(2, 3)
    assert p.to_json() == {"vars": 2, "terms": [{"exps": [2, 0], "coeff": 1}, {"exps": [0, 0], "coeff": -3}]}
    assert p.render() == "x1^2 - 3"


def test_all_permutations_of_g_221():
    g = g_poly((2, 2, 1), 3)
    for perm in permutations(range(3)):
        assert g.permute(list(perm)) == g
