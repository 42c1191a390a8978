"""Integer sequences, partitions, basis expansions and the two straightening engines."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from typing import Optional

from .errors import RecursionBudgetExceeded

DEFAULT_STEP_BUDGET = 10**7


class IntSeq(tuple):
    """A finite integer sequence; entries may be negative or zero."""

    def __new__(cls, parts: Iterable[int] = ()):
        return super().__new__(cls, (int(x) for x in parts))

    def length(self) -> int:
        for i in range(len(self) - 1, -1, -1):
            if self[i] != 0:
                return i + 1
        return 0

    def weight(self) -> int:
        return sum(self)

    @classmethod
    def parse(cls, text: str) -> "IntSeq":
        text = text.strip()
        if text in ("", "empty"):
            return cls()
        return cls(int(x) for x in text.split(","))

    def __repr__(self):
        return f"IntSeq({list(self)})"


class Partition(IntSeq):
    """Weakly decreasing positive parts. Trailing zeros are dropped on construction."""

    def __new__(cls, parts: Iterable[int] = ()):
        vals = [int(x) for x in parts]
        while vals and vals[-1] == 0:
            vals.pop()
        for i, x in enumerate(vals):
            if x <= 0 or (i and vals[i - 1] < x):
                raise ValueError(f"not a partition: {vals}")
        return tuple.__new__(cls, vals)

    def length(self) -> int:
        return len(self)

    def contains(self, other: "Partition") -> bool:
        return contains(self, other)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "empty"):
            return cls()
        return cls(int(x) for x in text.split(","))

    def __repr__(self):
        return f"Partition({list(self)})"


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of mu sits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def _render_sum(pairs: Iterable[tuple[str, int]]) -> str:
    out = []
    for body, c in pairs:
        mag = abs(c)
        term = body if mag == 1 else f"{mag}*{body}"
        if not out:
            out.append(term if c > 0 else "-" + term)
        else:
            out.append((" + " if c > 0 else " - ") + term)
    return "".join(out) if out else "0"


class _Expansion(Mapping):
    """Immutable, finitely supported integer combination with a canonical order."""

    __slots__ = ("_terms",)
    symbol = "?"

    def __init__(self, terms=None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                k = self._coerce(k)
                acc[k] = acc.get(k, 0) + int(c)
        ordered = sorted((k for k, c in acc.items() if c), key=self._order)
        self._terms = {k: acc[k] for k in ordered}

    @staticmethod
    def _coerce(key):
        return Partition(key)

    @staticmethod
    def _order(key):
        return (sum(key), tuple(key))

    def __getitem__(self, key):
        return self._terms[self._coerce(key)]

    def get(self, key, default=None):
        try:
            return self[key]
        except (KeyError, ValueError):
            return default

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._terms == {self._coerce(k): v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        return type(self)(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)((k, -c) for k, c in self.items())

    def scale(self, c: int):
        return type(self)((k, c * v) for k, v in self.items())

    def _label(self, key) -> str:
        return f"{self.symbol}[{','.join(map(str, key))}]"

    def render(self) -> str:
        return _render_sum((self._label(k), c) for k, c in self.items())

    def to_json(self) -> list:
        return [{"partition": list(k), "coeff": c} for k, c in self.items()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self):
        return f"{type(self).__name__}({self.render()})"


class GExpansion(_Expansion):
    """Combination of stable Grothendieck polynomials G_lambda."""

    symbol = "G"


class SExpansion(_Expansion):
    symbol = "s"


class TensorGExpansion(_Expansion):
    """Combination of G_lambda (x) G_mu indexed by pairs of partitions."""

    @staticmethod
    def _coerce(key):
        left, right = key
        return (Partition(left), Partition(right))

    @staticmethod
    def _order(key):
        left, right = key
        return (sum(left) + sum(right), sum(left), tuple(left), sum(right), tuple(right))

    def _label(self, key) -> str:
        left, right = key
        return f"G[{','.join(map(str, left))}] (x) G[{','.join(map(str, right))}]"

    def to_json(self) -> list:
        return [{"left": list(l), "right": list(r), "coeff": c} for (l, r), c in self.items()]


def _strip(seq: tuple) -> tuple:
    n = len(seq)
    while n and seq[n - 1] <= 0:
        n -= 1
    return seq[:n]


def straighten_schur(seq: Iterable[int]) -> Optional[tuple[int, Partition]]:
    """Return (sign, nu) with s_I = sign * s_nu, or None when s_I = 0."""
    I = tuple(seq)
    shifted = [x - i for i, x in enumerate(I)]
    if len(set(shifted)) != len(shifted):
        return None
    order = sorted(range(len(I)), key=lambda i: -shifted[i])
    inversions = sum(1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b])
    parts = [shifted[j] + i for i, j in enumerate(order)]
    if any(x < 0 for x in parts):
        return None
    return (-1 if inversions % 2 else 1), Partition(parts)


# Shared memo for Grothendieck straightening. Entries are deterministic, so
# concurrent writers can only ever store identical values.
_GCACHE: dict[tuple, dict[tuple, int]] = {}


def _rewrite(s: tuple):
    for i in range(len(s) - 1):
        a, b = s[i], s[i + 1]
        if a < b:
            pre, post = s[:i], s[i + 2 :]
            if b == a + 1:
                return ((1, _strip(pre + (b, b) + post)),)
            return (
                (1, _strip(pre + (a + 1, b) + post)),
                (1, _strip(pre + (b, a + 1) + post)),
                (-1, _strip(pre + (b - 1, a + 1) + post)),
            )
    return None


def straighten_groth_raw(seq: Iterable[int], budget: int = DEFAULT_STEP_BUDGET) -> dict[tuple, int]:
    """Plain-dict variant of :func:`straighten_groth`. The result is shared; do not mutate it."""
    key = _strip(tuple(seq))
    hit = _GCACHE.get(key)
    if hit is not None:
        return hit
    stack = [key]
    steps = 0
    while stack:
        steps += 1
        if steps > budget:
            raise RecursionBudgetExceeded(f"straightening {key} exceeded {budget} steps")
        s = stack[-1]
        if s in _GCACHE:
            stack.pop()
            continue
        rules = _rewrite(s)
        if rules is None:
            _GCACHE[s] = {s: 1}
            stack.pop()
            continue
        pending = [child for _, child in rules if child not in _GCACHE]
        if pending:
            stack.extend(pending)
            continue
        out: dict[tuple, int] = {}
        for coeff, child in rules:
            for lam, c in _GCACHE[child].items():
                out[lam] = out.get(lam, 0) + coeff * c
        _GCACHE[s] = {k: v for k, v in out.items() if v}
        stack.pop()
    return _GCACHE[key]


def straighten_groth(seq: Iterable[int], budget: int = DEFAULT_STEP_BUDGET) -> GExpansion:
    """Expand the fake Grothendieck polynomial G_I in the partition basis."""
    return GExpansion(straighten_groth_raw(seq, budget))


def clear_caches() -> None:
    _GCACHE.clear()
