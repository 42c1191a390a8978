"""Pieri products G_lam * G_n through canceling segments on the simplex of lattice points."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Callable, Optional

from .core import GExpansion, Partition
from .errors import SegmentIntegrityError
from .residue import DPolynomial, g_operation


@dataclass(frozen=True)
class PieriTerm:
    """t^mono * prod_{i in dset} (1 - t_i), attached to a lattice point I of the simplex."""

    point: tuple
    mono: tuple
    dset: frozenset

    def to_dpolynomial(self) -> DPolynomial:
        d = [1 if i + 1 in self.dset else 0 for i in range(len(self.mono))]
        return DPolynomial.monomial(self.mono, d=d)

    def __str__(self):
        mono = "".join(f"t{i + 1}^{e}" for i, e in enumerate(self.mono) if e)
        ds = "".join(f"d{i}" for i in sorted(self.dset))
        return f"{mono or '1'}{'*' + ds if ds else ''}"


def _simplex(p: int, n: int):
    for point in _cartesian(range(n + 1), repeat=p):
        if sum(point) <= n:
            yield point


def _make(lam: tuple, n: int, point: tuple, dset) -> PieriTerm:
    mono = tuple(l + i for l, i in zip(lam, point)) + (n - sum(point),)
    return PieriTerm(tuple(point), mono, frozenset(dset))


def _fresh_dset(point: tuple, n: int) -> range:
    if sum(point) < n:
        return range(1, len(point) + 1)
    length = max((i + 1 for i, x in enumerate(point) if x), default=0)
    return range(1, length)


def pieri_terms(lam, n: int) -> list[PieriTerm]:
    """One summand per lattice point I >= 0 with |I| <= n, in lex order of I."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("pieri_terms needs a non-empty partition")
    if n < 1:
        raise ValueError("n must be positive")
    return [_make(lam, n, pt, _fresh_dset(pt, n)) for pt in _simplex(len(lam), n)]


def is_good(term: PieriTerm, j: int) -> bool:
    """(j, j+1)-goodness of one term."""
    a, b = term.mono[j - 1], term.mono[j]
    if j + 1 in term.dset:
        return a > b
    return a >= b


def _grid(terms: dict, p: int, n: int) -> str:
    if p == 2:
        width = max((len(str(t)) for t in terms.values()), default=1)
        rows = []
        for i2 in range(n, -1, -1):
            cells = []
            for i1 in range(0, n - i2 + 1):
                t = terms.get((i1, i2))
                cells.append((str(t) if t else ".").ljust(width))
            rows.append(f"I2={i2} | " + "  ".join(cells))
        return "\n".join(rows)
    return "\n".join(f"I={list(pt)}: {t}" for pt, t in sorted(terms.items()))


def cancel_segments(
    terms: list[PieriTerm], lam, n: int, trace: Optional[Callable[[str], None]] = None
) -> list[PieriTerm]:
    """Replace every canceling segment by its survivor, for r = p down to 1."""
    lam = Partition(lam)
    p = len(lam)
    ext = tuple(lam) + (0,)
    live = {t.point: t for t in terms}
    if len(live) != len(terms):
        raise SegmentIntegrityError("two terms share a lattice point")
    if trace:
        trace(f"initial terms\n{_grid(live, p, n)}")
    for r in range(p, 0, -1):
        consumed: set = set()
        for start in sorted(pt for pt in live if pt[r - 1] == 0):
            if start in consumed:
                continue
            term = live[start]
            if is_good(term, r):
                continue
            delta = term.mono[r] - ext[r - 1]
            typeb = r + 1 in term.dset
            if r not in term.dset:
                raise SegmentIntegrityError(f"segment start {list(start)} lacks d{r}")
            span = delta + 1 if typeb else delta
            members = []
            for j in range(span):
                pt = list(start)
                pt[r - 1] += j
                if r < p:
                    pt[r] -= j
                pt = tuple(pt)
                other = live.get(pt)
                if other is None or pt in consumed:
                    raise SegmentIntegrityError(f"segment from {list(start)} misses member {list(pt)}")
                if other.dset != term.dset:
                    raise SegmentIntegrityError(f"segment member {list(pt)} has a different d-factor set")
                members.append(pt)
            for pt in members:
                consumed.add(pt)
                del live[pt]
            if typeb:
                end = list(start)
                end[r - 1] += delta
                if r < p:
                    end[r] -= delta
                end = tuple(end)
                mono = list(term.mono)
                mono[r - 1] = ext[r - 1] + delta
                mono[r] = ext[r - 1]
                live[end] = PieriTerm(end, tuple(mono), term.dset - {r + 1})
                consumed.add(end)
        if trace:
            trace(f"after r={r}\n{_grid(live, p, n)}")
    return [live[pt] for pt in sorted(live)]


def pieri_expand(lam, n: int, trace: Optional[Callable[[str], None]] = None) -> GExpansion:
    """G_lam * G_n, summed over the good terms left after cancellation."""
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if not lam:
        return GExpansion({(n,): 1})
    good = cancel_segments(pieri_terms(lam, n), lam, n, trace)
    total = DPolynomial()
    for t in good:
        total = total + t.to_dpolynomial()
    return g_operation(total)
