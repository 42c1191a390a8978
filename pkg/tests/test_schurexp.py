import pytest
from hypothesis import given, strategies as st

from grothres.core import Partition, contains
from grothres.errors import DimensionError, HypothesisViolation
from grothres.schurexp import RewriteState, g_to_schur, hat_lambda, k_sequence, rewrite_step
from grothres.symfunc import expand_in_schur_basis, g_poly


@st.composite
def partition_and_vars(draw):
    parts = sorted(draw(st.lists(st.integers(1, 5), max_size=4)), reverse=True)
    while sum(parts) > 5:
        parts.pop()
    lam = Partition(parts)
    M = draw(st.integers(max(1, len(lam)), 4))
    return lam, M


def test_hat_lambda_examples():
    assert hat_lambda((2,), 3) == (2, 1, 1)
    assert hat_lambda((1,), 1) == (1,)
    assert hat_lambda((3, 1), 2) == (3, 2)
    assert max(g_to_schur((3, 1), 2), key=lambda mu: (sum(mu), mu)) == (3, 2)
    with pytest.raises(DimensionError):
        hat_lambda((1, 1), 1)


def test_k_sequence_examples():
    assert k_sequence(3) == [3, 2, 3]
    assert k_sequence(2) == [2]
    assert k_sequence(4) == [4, 3, 4, 2, 3, 4]
    assert k_sequence(1) == []
    for M in range(1, 7):
        assert len(k_sequence(M)) == M * (M - 1) // 2


def test_rewrite_steps_for_g2_in_three_vars():
    s = RewriteState.of([(1, (2, 0, 0), (0, 1, 2))])
    s = rewrite_step(s, 3)
    assert s.terms == ((1, (2, 0, 0), (0, 1, 1)),)
    s = rewrite_step(s, 2)
    assert s.terms == ((1, (2, 0, 0), (0, 0, 1)), (-1, (2, 1, 0), (0, 0, 1)))
    flat = RewriteState.of([(1, (2, 0, 0), (0, 0, 1))])
    assert rewrite_step(flat, 2) == flat


def test_gap_violation():
    with pytest.raises(HypothesisViolation):
        rewrite_step(RewriteState.of([(1, (1, 0), (0, 2))]), 2)


def test_g_to_schur_examples():
    assert g_to_schur((2,), 3) == {(2,): 1, (2, 1): -1, (2, 1, 1): 1}
    assert g_to_schur((1,), 1) == {(1,): 1}
    e = g_to_schur((1, 1), 3)
    assert e == expand_in_schur_basis(g_poly((1, 1), 3))
    for mu, c in e.items():
        assert contains(Partition((1, 1, 1)), mu) and contains(mu, Partition((1, 1)))
        assert (-1) ** (sum(mu) - 2) * c > 0
    assert g_to_schur((1, 1), 1) == {}


def test_trace_output():
    lines = []
    g_to_schur((2,), 3, trace=lines.append)
    assert lines[0] == "start + t1^2 d2^1 d3^2"
    assert lines[1] == "k=3 ~> + t1^2 d2^1 d3^1"
    assert lines[-1] == "k=3 ~> + t1^2 - t1^2 t2^1 + t1^2 t2^1 t3^1"


@given(partition_and_vars())
def test_schur_expansion_properties(case):
    lam, M = case
    e = g_to_schur(lam, M)
    assert e == expand_in_schur_basis(g_poly(lam, M))
    top = hat_lambda(lam, M)
    for mu, c in e.items():
        assert (-1) ** (sum(mu) - sum(lam)) * c > 0
        assert contains(mu, lam) and contains(top, mu)
    assert e[lam] == 1
