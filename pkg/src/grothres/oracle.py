"""Brute-force checks of expansion claims by exact polynomial arithmetic in x_1..x_M.

Only symfunc and core are used for the ground truth. The coproduct check goes
through the rectangle product, whose product expansion is verified here first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import GExpansion, Partition, SExpansion, TensorGExpansion
from .symfunc import XPolynomial, g_poly, schur_poly


@dataclass(frozen=True)
class Report:
    ok: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "witness": self.witness}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _compare(lhs: XPolynomial, rhs: XPolynomial, **context) -> Report:
    diff = lhs - rhs
    if not diff:
        return Report(True, {})
    exps, _ = diff.items()[0]
    a, b = lhs.as_dict().get(exps, 0), rhs.as_dict().get(exps, 0)
    return Report(False, {**context, "monomial": list(exps), "expected": a, "claimed": b})


def verify_mult(lam, mu, e: GExpansion) -> Report:
    """Check g_lam * g_mu == sum c * g_nu in enough variables to separate the basis."""
    lam, mu = Partition(lam), Partition(mu)
    M = max([len(lam) + len(mu), 1] + [len(nu) for nu in e])
    lhs = g_poly(lam, M) * g_poly(mu, M)
    rhs = XPolynomial.constant(M, 0)
    for nu, c in e.items():
        rhs = rhs + g_poly(nu, M).scale(c)
    return _compare(lhs, rhs, M=M)


def verify_schur_expansion(lam, M: int, e: SExpansion) -> Report:
    lam = Partition(lam)
    lhs = g_poly(lam, M)
    rhs = XPolynomial.constant(M, 0)
    for mu, c in e.items():
        rhs = rhs + schur_poly(mu, M).scale(c)
    return _compare(lhs, rhs, M=M)


def verify_comult(nu, e: TensorGExpansion) -> Report:
    """Recompute the coproduct from a verified rectangle product and compare exactly."""
    from .products import multiply_g, rectangle_decompose

    nu = Partition(nu)
    if not nu:
        expected = TensorGExpansion({((), ()): 1})
    else:
        rect = Partition([nu[0]] * len(nu))
        prod = multiply_g(nu, rect)
        check = verify_mult(nu, rect, prod)
        if not check.ok:
            return Report(False, {"stage": "rectangle product", **check.witness})
        expected = rectangle_decompose(nu, prod)
    if expected == e:
        return Report(True, {})
    for key in list(expected) + list(e):
        a, b = expected.get(key, 0), e.get(key, 0)
        if a != b:
            left, right = key
            return Report(False, {"left": list(left), "right": list(right), "expected": a, "claimed": b})
    return Report(False, {})  # pragma: no cover

