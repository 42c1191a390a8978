"""Explicit symmetric polynomials in x_1..x_M: h_r, h^(i)_r, Schur and Grothendieck determinants."""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb, prod
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .core import GExpansion, Partition, SExpansion
from .errors import DimensionError, NotInSpan, NotSymmetric, RecursionBudgetExceeded, ZeroPolynomial

# Below this many pairwise products the plain dict loop beats array packing.
_KERNEL_THRESHOLD = 256
_ELIMINATION_BUDGET = 10**6


def _grlex(exps):
    return (sum(exps), exps)


class XPolynomial:
    """Sparse polynomial with integer coefficients in M variables (immutable)."""

    __slots__ = ("M", "_terms")

    def __init__(self, M: int, terms: Mapping[tuple, int] | Iterable = ()):
        self.M = int(M)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, int] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != self.M or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for M={self.M}")
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _raw(cls, M, terms):
        obj = object.__new__(cls)
        obj.M = M
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, M: int, c: int = 1) -> "XPolynomial":
        return cls._raw(M, {(0,) * M: c} if c else {})

    @classmethod
    def variable(cls, M: int, i: int) -> "XPolynomial":
        e = [0] * M
        e[i - 1] = 1
        return cls._raw(M, {tuple(e): 1})

    def items(self):
        """Terms in graded-lex order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def as_dict(self) -> dict[tuple, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.M == other.M and self._terms == other._terms
        if isinstance(other, int):
            return self == XPolynomial.constant(self.M, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.M, frozenset(self._terms.items())))

    def _check(self, other):
        if other.M != self.M:
            raise DimensionError(f"variable counts differ: {self.M} vs {other.M}")

    def __add__(self, other):
        if isinstance(other, int):
            other = XPolynomial.constant(self.M, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return XPolynomial._raw(self.M, out)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial._raw(self.M, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "XPolynomial":
        if not c:
            return XPolynomial._raw(self.M, {})
        return XPolynomial._raw(self.M, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        if not self._terms or not other._terms:
            return XPolynomial._raw(self.M, {})
        if len(self._terms) * len(other._terms) >= _KERNEL_THRESHOLD:
            out = _mul_packed(self, other)
            if out is not None:
                return out
        return _mul_dict(self, other)

    __rmul__ = __mul__

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def component(self, d: int) -> "XPolynomial":
        return XPolynomial._raw(self.M, {e: c for e, c in self._terms.items() if sum(e) == d})

    def permute(self, perm) -> "XPolynomial":
        """Substitute x_i -> x_perm[i] (0-based permutation)."""
        out = {}
        for e, c in self._terms.items():
            f = [0] * self.M
            for i, x in enumerate(e):
                f[perm[i]] = x
            out[tuple(f)] = c
        return XPolynomial._raw(self.M, out)

    def to_json(self) -> dict:
        return {"vars": self.M, "terms": [{"exps": list(e), "coeff": c} for e, c in self.items()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def render(self) -> str:
        parts = []
        for e, c in self.items():
            mono = " ".join(f"x{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x)
            mag = abs(c)
            if not mono:
                body = str(mag)
            else:
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"XPolynomial(M={self.M}: {self.render()})"


def _mul_dict(a: XPolynomial, b: XPolynomial) -> XPolynomial:
    out: dict[tuple, int] = {}
    for e1, c1 in a._terms.items():
        for e2, c2 in b._terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return XPolynomial._raw(a.M, {e: c for e, c in out.items() if c})


def _mul_packed(a: XPolynomial, b: XPolynomial):
    """Kernel-backed product, or None when int64 packing could overflow."""
    M = a.M
    ea = np.array(list(a._terms), dtype=np.int64).reshape(len(a._terms), M)
    eb = np.array(list(b._terms), dtype=np.int64).reshape(len(b._terms), M)
    base = ea.max(axis=0) + eb.max(axis=0) + 1
    if prod(int(x) for x in base) >= 2**62:
        return None
    ca_py = list(a._terms.values())
    cb_py = list(b._terms.values())
    if not _kernels.fits_int64(max(map(abs, ca_py)), max(map(abs, cb_py)), min(len(ca_py), len(cb_py))):
        return None
    stride = np.ones(M, dtype=np.int64)
    for i in range(M - 2, -1, -1):
        stride[i] = stride[i + 1] * base[i + 1]
    keys, vals = _kernels.sparse_mul(ea @ stride, np.array(ca_py, dtype=np.int64), eb @ stride, np.array(cb_py, dtype=np.int64))
    exps = (keys[:, None] // stride[None, :]) % base[None, :]
    return XPolynomial._raw(M, {tuple(row): int(c) for row, c in zip(exps.tolist(), vals.tolist())})


@lru_cache(maxsize=None)
def h_poly(r: int, M: int) -> XPolynomial:
    """Complete homogeneous symmetric polynomial h_r(x_1..x_M)."""
    if M < 1:
        raise DimensionError("need at least one variable")
    if r < 0:
        return XPolynomial._raw(M, {})
    out = {}

    def rec(i, left, acc):
        if i == M - 1:
            out[tuple(acc + [left])] = 1
            return
        for k in range(left, -1, -1):
            rec(i + 1, left - k, acc + [k])

    rec(0, r, [])
    return XPolynomial._raw(M, out)


@lru_cache(maxsize=None)
def h_i_poly(i: int, r: int, M: int) -> XPolynomial:
    """Coefficient of u^r in (1-u)^i / prod_j (1 - x_j u)."""
    if i < 0:
        raise ValueError("i must be non-negative")
    out = XPolynomial._raw(M, {})
    for j in range(i + 1):
        out = out + h_poly(r - j, M).scale((-1) ** j * comb(i, j))
    return out


def det(matrix: list[list[XPolynomial]], M: int) -> XPolynomial:
    """Cofactor expansion along rows, memoized on the set of used columns."""
    n = len(matrix)
    if n == 0:
        return XPolynomial.constant(M, 1)
    memo: dict[int, XPolynomial] = {}

    def minor(row, cols):
        if row == n:
            return XPolynomial.constant(M, 1)
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = XPolynomial._raw(M, {})
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                continue
            entry = matrix[row][c]
            if entry:
                sub = minor(row + 1, cols | (1 << c))
                if sub:
                    term = entry * sub
                    acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[cols] = acc
        return acc

    return minor(0, 0)


@lru_cache(maxsize=None)
def _schur(lam: tuple, M: int) -> XPolynomial:
    n = len(lam)
    if n > M:
        return XPolynomial._raw(M, {})
    return det([[h_poly(lam[i] + j - i, M) for j in range(n)] for i in range(n)], M)


def schur_poly(lam, M: int) -> XPolynomial:
    """Jacobi-Trudi determinant det(h_{lam_i + j - i}); zero when l(lam) > M."""
    return _schur(tuple(Partition(lam)), int(M))


@lru_cache(maxsize=None)
def _g(lam: tuple, M: int) -> XPolynomial:
    parts = list(lam) + [0] * (M - len(lam))
    matrix = [[h_i_poly(i, parts[i] + j, M) for j in range(M)] for i in range(M)]
    d = det(matrix, M)
    return d if (M * (M - 1) // 2) % 2 == 0 else -d


def g_poly(lam, M: int) -> XPolynomial:
    """G_lam(x_1..x_M) as the signed determinant of h^(i-1)_{lam_i + j - 1}."""
    lam = Partition(lam)
    if M < max(len(lam), 1):
        raise DimensionError(f"need M >= max(1, l(lam)) = {max(len(lam), 1)}, got {M}")
    return _g(tuple(lam), int(M))


def lowest_degree_component(p: XPolynomial) -> XPolynomial:
    if not p:
        raise ZeroPolynomial("zero polynomial has no lowest component")
    return p.component(min(sum(e) for e in p.as_dict()))


def expand_in_schur_basis(p: XPolynomial) -> SExpansion:
    """Peel off Schur polynomials by lex-leading monomial."""
    rest = p.as_dict()
    out: dict[tuple, int] = {}
    steps = 0
    while rest:
        steps += 1
        if steps > _ELIMINATION_BUDGET:
            raise RecursionBudgetExceeded("Schur elimination did not terminate")
        lead = max(rest)
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise NotSymmetric(f"leading exponent {lead} is not a partition")
        c = rest[lead]
        mu = Partition(lead)
        out[mu] = out.get(mu, 0) + c
        for e, v in schur_poly(mu, p.M).as_dict().items():
            w = rest.get(e, 0) - c * v
            if w:
                rest[e] = w
            else:
                rest.pop(e, None)
    return SExpansion(out)


def expand_in_g_basis(p: XPolynomial) -> GExpansion:
    """Peel off g_poly(nu, M) by lowest-degree Schur content."""
    out: dict[tuple, int] = {}
    rest = p
    steps = 0
    while rest:
        steps += 1
        if steps > _ELIMINATION_BUDGET:
            raise NotInSpan("G-basis elimination did not terminate")
        low = lowest_degree_component(rest)
        try:
            sexp = expand_in_schur_basis(low)
        except NotSymmetric as exc:
            raise NotInSpan(str(exc)) from exc
        for nu, c in sexp.items():
            if len(nu) > p.M:
                raise NotInSpan(f"Schur key {list(nu)} needs more than {p.M} variables")
            out[nu] = out.get(nu, 0) + c
            rest = rest - g_poly(nu, p.M).scale(c)
        if rest and lowest_degree_component(rest).degree() <= low.degree():
            raise NotInSpan("elimination failed to raise the lowest degree")
    return GExpansion(out)
