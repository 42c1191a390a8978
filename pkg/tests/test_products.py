import pytest
from hypothesis import given, settings, strategies as st

from grothres.core import Partition, TensorGExpansion
from grothres.errors import DecompositionError
from grothres.oracle import verify_mult
from grothres.products import (
    comult_kernel,
    comultiply_g,
    comultiply_via_rectangle,
    mult_kernel,
    multiply_g,
    rectangle_decompose,
)
from grothres.residue import FIRST, SECOND, TVar
from grothres.core import GExpansion


@st.composite
def small_partitions(draw, max_weight=4, max_len=3):
    parts = sorted(draw(st.lists(st.integers(1, max_weight), max_size=max_len)), reverse=True)
    while sum(parts) > max_weight:
        parts.pop()
    return Partition(parts)


def test_mult_kernel_shape():
    k = mult_kernel((2, 1), (3,))
    assert dict(k.mono) == {TVar(FIRST, 1): 2, TVar(FIRST, 2): 1, TVar(FIRST, 3): 3}
    assert dict(k.dnum) == {TVar(FIRST, 1): 1, TVar(FIRST, 2): 1}
    assert k.dden == ((TVar(FIRST, 1), TVar(FIRST, 3)), (TVar(FIRST, 2), TVar(FIRST, 3)))
    empty = mult_kernel((), (2,))
    assert dict(empty.mono) == {TVar(FIRST, 1): 2} and not empty.dnum and not empty.dden


def test_comult_kernel_shape():
    k = comult_kernel((2, 1))
    assert dict(k.mono) == {TVar(SECOND, 1): 2, TVar(SECOND, 2): 1}
    assert dict(k.dnum) == {TVar(FIRST, 1): 2, TVar(FIRST, 2): 2}
    assert len(k.dden) == 4
    with pytest.raises(ValueError):
        comult_kernel(())


def test_multiply_examples():
    assert multiply_g((1,), (1,)) == {(1, 1): 1, (2,): 1, (2, 1): -1}
    assert multiply_g((), (2, 1)) == {(2, 1): 1}
    assert multiply_g((2, 1), ()) == {(2, 1): 1}


def test_comultiply_examples():
    assert comultiply_g(()) == {((), ()): 1}
    assert comultiply_g((1,)) == {((1,), ()): 1, ((), (1,)): 1, ((1,), (1,)): -1}
    d21 = comultiply_g((2, 1))
    assert d21[((), (2, 1))] == 1 and d21[((2, 1), ())] == 1
    assert comultiply_via_rectangle((1,)) == comultiply_g((1,))
    assert comultiply_via_rectangle(()) == {((), ()): 1}


def test_rectangle_decomposition_rejects_bad_shapes():
    with pytest.raises(DecompositionError):
        rectangle_decompose((2, 1), GExpansion({(2, 1): 1}))
    with pytest.raises(DecompositionError):
        rectangle_decompose((1,), GExpansion({(1, 1, 1): 1, (2, 2): 1}))


@given(small_partitions(), small_partitions())
def test_commutativity(lam, mu):
    assert multiply_g(lam, mu) == multiply_g(mu, lam)


@settings(max_examples=25)
@given(small_partitions(max_weight=2), small_partitions(max_weight=2), small_partitions(max_weight=2))
def test_associativity(a, b, c):
    def times(e, p):
        out = GExpansion()
        for nu, k in e.items():
            out = out + multiply_g(nu, p).scale(k)
        return out

    ab_c = times(multiply_g(a, b), c)
    a_bc = GExpansion()
    for nu, k in multiply_g(b, c).items():
        a_bc = a_bc + multiply_g(a, nu).scale(k)
    assert ab_c == a_bc


@settings(max_examples=30)
@given(small_partitions(), small_partitions())
def test_mult_against_oracle(lam, mu):
    e = multiply_g(lam, mu)
    assert verify_mult(lam, mu, e).ok
    for nu, c in e.items():
        assert (-1) ** (sum(nu) - sum(lam) - sum(mu)) * c > 0
        assert nu.contains(lam) and nu.contains(mu)


@settings(max_examples=30)
@given(small_partitions(max_weight=4))
def test_comult_signs_containment_cocommutativity(nu):
    e = comultiply_g(nu)
    for (lam, mu), d in e.items():
        assert (-1) ** (sum(lam) + sum(mu) - sum(nu)) * d > 0
        assert nu.contains(lam) and nu.contains(mu)
        assert e[(mu, lam)] == d


@pytest.mark.parametrize("nu", [(2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1), (3, 2), (2, 2, 1)])
def test_paths_agree(nu):
    assert comultiply_g(nu) == comultiply_via_rectangle(nu)


def test_counit():
    # Setting the right factor to its constant part recovers G_nu.
    for nu in [(1,), (2, 1), (3, 1), (2, 2)]:
        e = comultiply_g(nu)
        assert {lam: d for (lam, mu), d in e.items() if not mu} == {Partition(nu): 1}


def test_tensor_result_type():
    assert isinstance(comultiply_g((2,)), TensorGExpansion)
