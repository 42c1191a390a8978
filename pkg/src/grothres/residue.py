"""Kernel terms over ordered alphabets, their finite expansion, and the G-, S-, H-operations.

Expansion works one second-element variable v at a time, from the greatest
down. With E = exponent of t_v and U the multiset of u paired with v:

* E > 0: split one geometric factor exactly, sum_{k<E} (t_u/t_v)^k plus a
  remainder with t_v^0 that keeps the pair.
* E <= 0: the pairs at v expand to sum_n h_n(t_U) t_v^(E-n). For g <= 0 the
  class of t_v^g times the monomial tail after v is a polynomial in -g; this
  comes from telescoping the ascent rule at (v, v+1) and stripping a
  non-positive tail. Summing h_n(t_U) against binomials in n gives closed
  forms prod t_u^(i_u) (1-t_u)^-(i_u+1). When v is the last position this is
  exactly the substitution t_v = 1.

Intermediate d-powers may go negative (formal series in t_u). After each
level the tail from v on is straightened, and at the end the tail after the
last d-carrying variable is straightened too. Any negative power that then
survives is reported as NegativeDPower.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping, NamedTuple, Optional, Sequence

from .core import GExpansion, SExpansion, TensorGExpansion, straighten_groth_raw, straighten_schur
from .errors import ExpansionBudgetExceeded, NegativeDPower
from .symfunc import XPolynomial, h_poly

FIRST = 0
SECOND = 1
DEFAULT_EXPANSION_BUDGET = 10**7


class TVar(NamedTuple):
    """A kernel variable. Tuple order puts the whole first alphabet before the second."""

    alphabet: int
    index: int


def t(i: int, alphabet: int = FIRST) -> TVar:
    return TVar(alphabet, i)


def _clean(m: Mapping[TVar, int]) -> tuple:
    return tuple(sorted((TVar(*v), int(e)) for v, e in m.items() if e))


def _name(v: TVar, two_alphabets: bool) -> str:
    if two_alphabets:
        return ("s" if v.alphabet == FIRST else "t") + str(v.index)
    return str(v.index)


@dataclass(frozen=True)
class KernelTerm:
    """coeff * t^mono * prod (1 - t_v)^dnum[v] / prod over dden of (1 - t_u/t_v)."""

    coeff: int
    mono: tuple
    dnum: tuple = ()
    dden: tuple = ()

    @classmethod
    def make(cls, coeff: int, mono: Mapping[TVar, int], dnum: Mapping[TVar, int] | None = None, dden: Iterable = ()) -> "KernelTerm":
        pairs = tuple(sorted((TVar(*u), TVar(*v)) for u, v in dden))
        term = cls(int(coeff), _clean(mono), _clean(dnum or {}), pairs)
        term.validate()
        return term

    def validate(self) -> None:
        if self.coeff == 0:
            raise ValueError("kernel term with zero coefficient")
        d = dict(self.dnum)
        for u, v in self.dden:
            if not u < v:
                raise ValueError(f"denominator pair {u},{v} is not ordered")
            if d.get(v, 0):
                raise ValueError(f"expansion variable {v} carries a numerator d factor")
        if any(e < 0 for e in d.values()):
            raise ValueError("negative d power in a kernel term")

    @property
    def mono_map(self) -> dict:
        return dict(self.mono)

    @property
    def dnum_map(self) -> dict:
        return dict(self.dnum)

    def variables(self) -> set:
        out = {v for v, _ in self.mono} | {v for v, _ in self.dnum}
        for u, v in self.dden:
            out.update((u, v))
        return out

    def __str__(self):
        two = any(v.alphabet == SECOND for v in self.variables())
        t_ = "s" if two else "t"
        parts = []
        for v, e in self.mono:
            parts.append(f"{'t' if v.alphabet == SECOND else t_}{v.index}^{e}")
        for v, e in self.dnum:
            parts.append(f"d{_name(v, two)}^{e}")
        head = f"{self.coeff}·" + (" ".join(parts) if parts else "1")
        if not self.dden:
            return head
        den = " ".join(f"d({_name(u, two)},{_name(v, two)})" for u, v in self.dden)
        return f"{head} / {den}"


class DPolynomial:
    """Finite sum of denominator-free kernel terms, merged on (mono, dnum)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[KernelTerm] | Mapping = ()):
        acc: dict = {}
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = []
            for k in terms:
                if k.dden:
                    raise ValueError("DPolynomial terms must be denominator-free")
                items.append(((k.mono, k.dnum), k.coeff))
        for key, c in items:
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1, d: Sequence[int] | Mapping = (), alphabet: int = FIRST) -> "DPolynomial":
        """coeff * prod t_i^exps[i] * prod (1 - t_i)^d[i], 1-based positions."""
        mono = {TVar(alphabet, i + 1): e for i, e in enumerate(exps)}
        if isinstance(d, Mapping):
            dn = {TVar(*v) if isinstance(v, tuple) else TVar(alphabet, v): e for v, e in d.items()}
        else:
            dn = {TVar(alphabet, i + 1): e for i, e in enumerate(d)}
        return cls({(_clean(mono), _clean(dn)): coeff} if coeff else {})

    @property
    def terms(self) -> list[KernelTerm]:
        return [KernelTerm(c, m, d, ()) for (m, d), c in self._terms.items()]

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, DPolynomial) and self._terms == other._terms

    def __add__(self, other):
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return DPolynomial(acc)

    def __neg__(self):
        return DPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DPolynomial({k: other * c for k, c in self._terms.items()})
        acc: dict = {}
        for (m1, d1), c1 in self._terms.items():
            for (m2, d2), c2 in other._terms.items():
                m = dict(m1)
                for v, e in m2:
                    m[v] = m.get(v, 0) + e
                d = dict(d1)
                for v, e in d2:
                    d[v] = d.get(v, 0) + e
                key = (_clean(m), _clean(d))
                acc[key] = acc.get(key, 0) + c1 * c2
        return DPolynomial(acc)

    __rmul__ = __mul__

    def __str__(self):
        return " + ".join(str(k) for k in self.terms) if self._terms else "0"

    def __repr__(self):
        return f"DPolynomial({self})"


# ---------------------------------------------------------------------------
# kernel expansion


@lru_cache(maxsize=None)
def _tail_poly(rest: tuple) -> dict:
    """Class of t_v^g * t^rest for g <= 0, as {sequence from v on: coeffs in binomial basis C(-g, k)}."""
    if not rest:
        return {(): (1,)}
    c1 = rest[0]
    acc: dict[tuple, list] = {(0,) + rest: [1]}
    for key, poly in _tail_poly(rest[1:]).items():
        for head, sign in ((c1, 1), (c1 - 1, -1)):
            arr = acc.setdefault((head,) + key, [])
            need = len(poly) + 1
            if len(arr) < need:
                arr.extend([0] * (need - len(arr)))
            for k, a in enumerate(poly):
                arr[k + 1] += sign * a
    out = {}
    for key, arr in acc.items():
        while arr and arr[-1] == 0:
            arr.pop()
        if arr:
            out[key] = tuple(arr)
    return out


@lru_cache(maxsize=None)
def _shifted(poly: tuple, s: int) -> tuple:
    """Re-express P(n + s) in the basis C(n, i)."""
    return tuple(sum(a * comb(s, k - i) for k, a in enumerate(poly) if k >= i) for i in range(len(poly)))


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple:
    if parts == 1:
        return ((total,),)
    return tuple((a,) + rest for a in range(total + 1) for rest in _compositions(total - a, parts - 1))


class _Expander:
    def __init__(self, k: KernelTerm, choose, budget):
        self.budget = budget
        self.work = 0
        tops: dict[int, int] = {}
        for v in k.variables():
            tops[v.alphabet] = max(tops.get(v.alphabet, 0), v.index)
        self.slots = [TVar(a, i) for a in sorted(tops) for i in range(1, tops[a] + 1)]
        self.pos = {v: n for n, v in enumerate(self.slots)}
        self.block_end = {}
        for n, v in enumerate(self.slots):
            self.block_end[v.alphabet] = n + 1
        self.choose = choose
        self.pairs = [(self.pos[u], self.pos[v]) for u, v in k.dden]
        V = len(self.slots)
        mono = [0] * V
        for v, e in k.mono:
            mono[self.pos[v]] = e
        dnum = [0] * V
        for v, e in k.dnum:
            dnum[self.pos[v]] = e
        self.start = (tuple(mono), tuple(dnum))
        self.coeff = k.coeff

    def tick(self):
        self.work += 1
        if self.work > self.budget:
            raise ExpansionBudgetExceeded(f"kernel expansion exceeded {self.budget} steps")

    def run(self) -> dict:
        states = {self.start: self.coeff}
        for v in sorted({b for _, b in self.pairs}, reverse=True):
            U = sorted(a for a, b in self.pairs if b == v)
            end = self.block_end[self.slots[v].alphabet]
            new: dict = {}
            for (mono, dnum), c in states.items():
                for m2, d2, c2 in self._expand_tail_d(mono, dnum, v, end, c):
                    self._level(c2, list(m2), d2, U, v, end, new)
            states = self._straighten_tail(new, v, end)
        return self._finish(states)

    def _expand_tail_d(self, mono, dnum, v, end, c):
        """Binomially expand any d factor sitting at v or later in v's alphabet."""
        out = [(mono, dnum, c)]
        for w in range(v, end):
            if dnum[w]:
                nxt = []
                for m, d, cc in out:
                    e = d[w]
                    d2 = list(d)
                    d2[w] = 0
                    d2 = tuple(d2)
                    for j in range(e + 1):
                        m2 = list(m)
                        m2[w] += j
                        nxt.append((tuple(m2), d2, cc * comb(e, j) * (-1) ** j))
                out = nxt
        return out

    def _push(self, new, c, mono, dnum):
        self.tick()
        key = (tuple(mono), tuple(dnum))
        val = new.get(key, 0) + c
        if val:
            new[key] = val
        else:
            new.pop(key, None)

    def _level(self, c, mono, dnum, U, v, end, new):
        E = mono[v]
        if E > 0:
            if self.choose is None:
                u = U[0]
            else:
                u = self.pos[self.choose([self.slots[x] for x in U])]
            rest = list(U)
            rest.remove(u)
            for k in range(E):
                m = list(mono)
                m[u] += k
                m[v] = E - k
                if rest:
                    self._level(c, m, dnum, rest, v, end, new)
                else:
                    self._push(new, c, m, dnum)
            m = list(mono)
            m[u] += E
            m[v] = 0
            self._level(c, m, dnum, U, v, end, new)
            return
        tail = list(mono[v + 1 : end])
        while tail and tail[-1] == 0:
            tail.pop()
        for key, poly in _tail_poly(tuple(tail)).items():
            for i, b in enumerate(_shifted(poly, -E)):
                if not b:
                    continue
                for comp in _compositions(i, len(U)):
                    m = list(mono)
                    d = list(dnum)
                    for u, x in zip(U, comp):
                        m[u] += x
                        d[u] -= x + 1
                    for j in range(v, end):
                        m[j] = 0
                    for j, e in enumerate(key):
                        m[v + j] = e
                    self._push(new, c * b, m, d)

    def _straighten_tail(self, states, v, end):
        out: dict = {}
        for (mono, dnum), c in states.items():
            for key, x in straighten_groth_raw(mono[v:end]).items():
                m = list(mono[:v]) + list(key) + [0] * (end - v - len(key))
                self._push(out, c * x, m, dnum)
        return out

    def _finish(self, states) -> dict:
        out: dict = {}
        for (mono, dnum), c in states.items():
            if min(dnum, default=0) >= 0:
                self._push(out, c, mono, dnum)
                continue
            # Straighten each alphabet's tail past its last d-carrying slot.
            pieces = [((), c)]
            lo = 0
            for a in sorted(self.block_end):
                hi = self.block_end[a]
                cut = lo
                for w in range(lo, hi):
                    if dnum[w]:
                        cut = w + 1
                head = tuple(mono[lo:cut])
                tails = straighten_groth_raw(mono[cut:hi]).items()
                pieces = [
                    (acc + head + key + (0,) * (hi - cut - len(key)), cc * x) for acc, cc in pieces for key, x in tails
                ]
                lo = hi
            for m, cc in pieces:
                self._push(out, cc, m, dnum)
        bad = [(m, d) for (m, d) in out if min(d, default=0) < 0]
        if bad:
            m, d = bad[0]
            raise NegativeDPower(f"{len(bad)} terms keep a negative d power, e.g. mono={m} d={d}")
        return {
            (
                tuple((self.slots[i], e) for i, e in enumerate(m) if e),
                tuple((self.slots[i], e) for i, e in enumerate(d) if e),
            ): c
            for (m, d), c in out.items()
        }


def expand_kernel(
    k: KernelTerm,
    choose: Optional[Callable[[list], TVar]] = None,
    budget: int = DEFAULT_EXPANSION_BUDGET,
) -> DPolynomial:
    """Expand every denominator pair of k, giving a G-equivalent DPolynomial.

    ``choose`` picks which paired first-element variable to split on; the
    default takes the least one.
    """
    k.validate()
    if not k.dden:
        return DPolynomial([k])
    return DPolynomial(_Expander(k, choose, budget).run())


# ---------------------------------------------------------------------------
# G-, S-, H-operations


def _monomials(p: DPolynomial) -> dict:
    """Binomially expand the d powers; returns {((alphabet, index), e)...: coeff}."""
    acc: dict = {}
    for (mono, dnum), c in p.items():
        pieces = [(dict(mono), c)]
        for v, e in dnum:
            nxt = []
            for m, cc in pieces:
                for j in range(e + 1):
                    m2 = dict(m)
                    m2[v] = m2.get(v, 0) + j
                    nxt.append((m2, cc * comb(e, j) * (-1) ** j))
            pieces = nxt
        for m, cc in pieces:
            key = tuple(sorted((v, x) for v, x in m.items() if x))
            acc[key] = acc.get(key, 0) + cc
    return {k: v for k, v in acc.items() if v}


def _split(mono, dnum, alphabet: int) -> tuple:
    e = {v.index: x for v, x in mono if v.alphabet == alphabet}
    d = {v.index: x for v, x in dnum if v.alphabet == alphabet}
    top = max(list(e) + list(d), default=0)
    seq = tuple(e.get(i, 0) for i in range(1, top + 1))
    dv = tuple(d.get(i, 0) for i in range(1, top + 1))
    while dv and dv[-1] == 0:
        dv = dv[:-1]
    return seq, dv


@lru_cache(maxsize=200_000)
def _g_class(seq: tuple, dv: tuple) -> tuple:
    """G-class of t^seq prod (1-t_i)^dv[i] as ((partition, coeff), ...).

    Expands the last d-carrying position, straightens everything from there
    on (no d factors remain in that tail), and recurses on the shorter d.
    """
    if not dv:
        return tuple(straighten_groth_raw(seq).items())
    k = len(dv) - 1
    rest = dv[:k]
    while rest and rest[-1] == 0:
        rest = rest[:-1]
    e = dv[k]
    seq = seq + (0,) * max(0, k + 1 - len(seq))
    acc: dict = {}
    for j in range(e + 1):
        tail = (seq[k] + j,) + seq[k + 1 :]
        for key, x in straighten_groth_raw(tail).items():
            c = (-1) ** j * comb(e, j) * x
            for lam, y in _g_class(seq[:k] + key, rest):
                acc[lam] = acc.get(lam, 0) + c * y
    return tuple((lam, c) for lam, c in acc.items() if c)


def _first_only(p: DPolynomial, what: str):
    for (mono, dnum), _ in p.items():
        if any(v.alphabet != FIRST for v, _ in mono + dnum):
            raise ValueError(f"{what} expects variables from the first alphabet only")


def _sequence(mono, alphabet: int) -> tuple:
    idx = {v.index: e for v, e in mono if v.alphabet == alphabet}
    top = max(idx, default=0)
    return tuple(idx.get(i, 0) for i in range(1, top + 1))


def g_operation(p: DPolynomial) -> GExpansion:
    """Send t^I to G_I, linearly."""
    _first_only(p, "g_operation")
    acc: dict = {}
    for (mono, dnum), c in p.items():
        for lam, x in _g_class(*_split(mono, dnum, FIRST)):
            acc[lam] = acc.get(lam, 0) + c * x
    return GExpansion(acc)


def g_operation_tensor(p: DPolynomial) -> TensorGExpansion:
    """Send t^I s^J to G_I (x) G_J: the second alphabet (t) gives the left factor."""
    grouped: dict = {}
    for (mono, dnum), c in p.items():
        key = (_split(mono, dnum, SECOND), _split(mono, dnum, FIRST))
        grouped[key] = grouped.get(key, 0) + c
    acc: dict = {}
    for (lkey, rkey), c in grouped.items():
        if not c:
            continue
        right = _g_class(*rkey)
        for lam, x in _g_class(*lkey):
            for mu, y in right:
                acc[(lam, mu)] = acc.get((lam, mu), 0) + c * x * y
    return TensorGExpansion(acc)


def s_operation(p: DPolynomial) -> SExpansion:
    _first_only(p, "s_operation")
    acc: dict = {}
    for mono, c in _monomials(p).items():
        hit = straighten_schur(_sequence(mono, FIRST))
        if hit is not None:
            sign, nu = hit
            acc[nu] = acc.get(nu, 0) + sign * c
    return SExpansion(acc)


def h_operation(p: DPolynomial, M: int) -> XPolynomial:
    """Send t^I to prod_i h_{I_i}(x_1..x_M)."""
    _first_only(p, "h_operation")
    out = XPolynomial.constant(M, 0)
    for mono, c in _monomials(p).items():
        term = XPolynomial.constant(M, c)
        for _, e in mono:
            term = term * h_poly(e, M)
            if not term:
                break
        out = out + term
    return out


def vandermonde_factor(n: int) -> DPolynomial:
    """prod_{i<j<=n} (1 - t_i/t_j) as a Laurent DPolynomial."""
    out = DPolynomial.monomial(())
    for j in range(2, n + 1):
        for i in range(1, j):
            exps = [0] * j
            exps[i - 1] = 1
            exps[j - 1] = -1
            out = out * (DPolynomial.monomial(()) - DPolynomial.monomial(exps))
    return out
