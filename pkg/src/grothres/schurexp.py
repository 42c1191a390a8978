"""Schur expansion of G_lam(x_1..x_M) by rewriting t^lam prod d_i^(i-1) one index at a time."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import Partition, SExpansion
from .errors import DimensionError, HypothesisViolation


@dataclass(frozen=True)
class RewriteState:
    """Signed terms (lam, dI); lam and dI both have length M, coefficients merged."""

    terms: tuple  # ((coeff, lam, dI), ...) sorted on (lam, dI)

    @classmethod
    def of(cls, items) -> "RewriteState":
        acc: dict = {}
        for c, lam, dI in items:
            key = (tuple(lam), tuple(dI))
            acc[key] = acc.get(key, 0) + c
        return cls(tuple((c, lam, dI) for (lam, dI), c in sorted(acc.items()) if c))

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for c, lam, dI in self.terms:
            mono = " ".join(f"t{i + 1}^{e}" for i, e in enumerate(lam) if e) or "1"
            ds = " ".join(f"d{i + 1}^{e}" for i, e in enumerate(dI) if e)
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            out.append(f"{sign} {mag}{mono}{' ' + ds if ds else ''}")
        return " ".join(out)


def hat_lambda(lam, M: int) -> Partition:
    """Largest partition with at most M rows obtained by adding at most j-1 boxes to row j."""
    lam = Partition(lam)
    if M < len(lam):
        raise DimensionError(f"M={M} is smaller than the length {len(lam)}")
    parts = list(lam) + [0] * (M - len(lam))
    out: list[int] = []
    for j, x in enumerate(parts):
        out.append(x if j == 0 else min(x + j, out[-1]))
    return Partition(out)


def k_sequence(M: int) -> list[int]:
    """k_M k_(M-1) ... k_2 with k_j = (j, j+1, ..., M)."""
    return [k for j in range(M, 1, -1) for k in range(j, M + 1)]


def rewrite_step(state: RewriteState, k: int) -> RewriteState:
    """Remove one factor d_k from every term whose d-exponents jump by one at k."""
    out = []
    for c, lam, dI in state.terms:
        gap = dI[k - 1] - dI[k - 2]
        if gap == 0:
            out.append((c, lam, dI))
            continue
        if gap != 1:
            raise HypothesisViolation(f"d-exponent gap {gap} at k={k} in {list(dI)}")
        d2 = list(dI)
        d2[k - 1] -= 1
        d2 = tuple(d2)
        out.append((c, lam, d2))
        if lam[k - 2] > lam[k - 1]:
            l2 = list(lam)
            l2[k - 1] += 1
            out.append((-c, tuple(l2), d2))
        elif lam[k - 2] < lam[k - 1]:
            raise HypothesisViolation(f"exponents {list(lam)} are not weakly decreasing")
    return RewriteState.of(out)


def g_to_schur(lam, M: int, trace: Optional[Callable[[str], None]] = None) -> SExpansion:
    """Schur expansion of G_lam in M variables."""
    lam = Partition(lam)
    if M < 1:
        raise DimensionError("need at least one variable")
    if M < len(lam):
        return SExpansion()
    start = tuple(lam) + (0,) * (M - len(lam))
    state = RewriteState.of([(1, start, tuple(range(M)))])
    if trace:
        trace(f"start {state.render()}")
    for k in k_sequence(M):
        state = rewrite_step(state, k)
        if trace:
            trace(f"k={k} ~> {state.render()}")
    acc: dict = {}
    for c, mu, dI in state.terms:
        if any(dI):
            raise HypothesisViolation(f"d factors {list(dI)} left after the full k-sequence")
        acc[Partition(mu)] = acc.get(Partition(mu), 0) + c
    return SExpansion(acc)
