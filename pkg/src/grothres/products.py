"""Structure constants: products via the multiplication kernel, coproducts via the
comultiplication kernel or via a product with a containing rectangle."""

from __future__ import annotations

from typing import Iterable

from .core import GExpansion, IntSeq, Partition, TensorGExpansion, contains
from .errors import DecompositionError
from .residue import FIRST, SECOND, KernelTerm, TVar, expand_kernel, g_operation, g_operation_tensor


def mult_kernel(I: Iterable[int], J: Iterable[int]) -> KernelTerm:
    """t^(I,J) prod_{i<=p} (1-t_i)^q / prod_{i<=p<j} (1 - t_i/t_j), p = len(I), q = len(J)."""
    I, J = IntSeq(I), IntSeq(J)
    p, q = len(I), len(J)
    mono = {TVar(FIRST, i + 1): e for i, e in enumerate(tuple(I) + tuple(J))}
    dnum = {TVar(FIRST, i): q for i in range(1, p + 1)}
    dden = [(TVar(FIRST, i), TVar(FIRST, p + j)) for i in range(1, p + 1) for j in range(1, q + 1)]
    return KernelTerm.make(1, mono, dnum, dden)


def multiply_g(lam, mu) -> GExpansion:
    """G_lam * G_mu in the G basis."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam:
        return GExpansion({mu: 1})
    if not mu:
        return GExpansion({lam: 1})
    return g_operation(expand_kernel(mult_kernel(lam, mu)))


def comult_kernel(I: Iterable[int]) -> KernelTerm:
    """t^I prod_i (1-s_i)^n / prod_{i,j} (1 - s_i/t_j); the s_i form the first alphabet."""
    I = IntSeq(I)
    n = len(I)
    if n < 1:
        raise ValueError("the comultiplication kernel needs at least one part")
    mono = {TVar(SECOND, j + 1): e for j, e in enumerate(I)}
    dnum = {TVar(FIRST, i): n for i in range(1, n + 1)}
    dden = [(TVar(FIRST, i), TVar(SECOND, j)) for i in range(1, n + 1) for j in range(1, n + 1)]
    return KernelTerm.make(1, mono, dnum, dden)


def comultiply_g(nu) -> TensorGExpansion:
    """Coproduct of G_nu as a combination of G_lam (x) G_mu."""
    nu = Partition(nu)
    if not nu:
        return TensorGExpansion({((), ()): 1})
    return g_operation_tensor(expand_kernel(comult_kernel(nu)))


def rectangle_decompose(nu, product: GExpansion) -> TensorGExpansion:
    """Read coproduct coefficients off G_nu * G_R, R the minimal rectangle around nu."""
    nu = Partition(nu)
    m, n = nu[0], len(nu)
    rect = Partition([m] * n)
    acc: dict = {}
    for tau, c in product.items():
        if not contains(tau, rect):
            raise DecompositionError(f"{list(tau)} does not contain the rectangle {list(rect)}")
        below = tau[n:]
        if below and below[0] > m:
            raise DecompositionError(f"{list(tau)} has row {n + 1} longer than {m}")
        left = Partition(x - m for x in tau[:n] if x > m)
        right = Partition(below)
        acc[(left, right)] = acc.get((left, right), 0) + c
    return TensorGExpansion(acc)


def comultiply_via_rectangle(nu) -> TensorGExpansion:
    nu = Partition(nu)
    if not nu:
        return TensorGExpansion({((), ()): 1})
    rect = Partition([nu[0]] * len(nu))
    return rectangle_decompose(nu, multiply_g(nu, rect))
