"""Explicit finite posets and lattices, with Hasse-diagram export."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Sequence

from .fintop import members


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A finite poset on ``elements`` with order ``leq``.

    ``leq`` is evaluated once into a boolean table at construction.  Nothing
    is assumed about the order; use :meth:`is_partial_order` and
    :meth:`is_lattice` to check.
    """

    elements: tuple[Hashable, ...]
    leq: Callable[[Any, Any], bool] = field(repr=False)
    labels: tuple[str, ...] | None = field(default=None, repr=False)

    @cached_property
    def table(self) -> tuple[tuple[bool, ...], ...]:
        els = self.elements
        return tuple(tuple(bool(self.leq(a, b)) for b in els) for a in els)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, e: Hashable) -> int:
        return self._pos[e]

    @cached_property
    def _pos(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def le(self, a: Hashable, b: Hashable) -> bool:
        return self.table[self._pos[a]][self._pos[b]]

    def is_partial_order(self) -> bool:
        t = self.table
        r = range(len(t))
        if not all(t[i][i] for i in r):
            return False
        for i in r:
            for j in r:
                if i != j and t[i][j] and t[j][i]:
                    return False
                if t[i][j]:
                    if any(t[j][k] and not t[i][k] for k in r):
                        return False
        return True

    def _bound(self, i: int, j: int, upper: bool) -> int | None:
        t = self.table
        r = range(len(t))
        if upper:
            cands = [k for k in r if t[i][k] and t[j][k]]
            best = [k for k in cands if all(t[k][c] for c in cands)]
        else:
            cands = [k for k in r if t[k][i] and t[k][j]]
            best = [k for k in cands if all(t[c][k] for c in cands)]
        return best[0] if len(best) == 1 else None

    def join(self, a: Hashable, b: Hashable) -> Hashable | None:
        k = self._bound(self._pos[a], self._pos[b], upper=True)
        return None if k is None else self.elements[k]

    def meet(self, a: Hashable, b: Hashable) -> Hashable | None:
        k = self._bound(self._pos[a], self._pos[b], upper=False)
        return None if k is None else self.elements[k]

    @cached_property
    def top(self) -> Hashable | None:
        t = self.table
        for i, row in enumerate(t):
            if all(t[j][i] for j in range(len(t))):
                return self.elements[i]
        return None

    @cached_property
    def bottom(self) -> Hashable | None:
        for i, row in enumerate(self.table):
            if all(row):
                return self.elements[i]
        return None

    def is_lattice(self) -> bool:
        """Every pair has a meet and a join.

        A finite nonempty lattice is automatically complete.
        """
        n = len(self.elements)
        if n == 0:
            return False
        return all(
            self._bound(i, j, True) is not None and self._bound(i, j, False) is not None
            for i in range(n)
            for j in range(i, n)
        )

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges ``(i, j)``: ``j`` covers ``i``."""
        t = self.table
        r = range(len(t))
        out = []
        for i in r:
            for j in r:
                if i != j and t[i][j] and not any(
                    k != i and k != j and t[i][k] and t[k][j] for k in r
                ):
                    out.append((i, j))
        return tuple(out)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(self.elements[i])

    def to_json(self) -> dict:
        top, bottom = self.top, self.bottom
        return {
            "elements": [self.label(i) for i in range(len(self))],
            "covers": [list(c) for c in self.covers],
            "top": None if top is None else self._pos[top],
            "bottom": None if bottom is None else self._pos[bottom],
        }

    def to_dot(self, name: str = "lattice") -> str:
        lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
        for i in range(len(self)):
            lines.append(f"  n{i} [label={json.dumps(self.label(i))}];")
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def powerset_lattice(mask: int) -> FiniteLattice:
    """Subsets of ``mask`` ordered by inclusion."""
    from .fintop import subsets

    els = tuple(subsets(mask))
    return FiniteLattice(els, lambda a, b: a & ~b == 0, tuple(set_label(s) for s in els))


def set_label(s: int, names: Sequence[str] | None = None) -> str:
    pts = members(s)
    if names is not None:
        pts = [names[p] for p in pts]
    return "{" + ",".join(map(str, pts)) + "}"


def find_order_isomorphism(A: FiniteLattice, B: FiniteLattice) -> tuple[int, ...] | None:
    """Index bijection ``A -> B`` preserving and reflecting order, or ``None``."""
    n = len(A)
    if n != len(B):
        return None
    ta, tb = A.table, B.table

    def sig(t, i):
        return (sum(t[i]), sum(row[i] for row in t))

    sa = [sig(ta, i) for i in range(n)]
    sb = [sig(tb, j) for j in range(n)]
    if sorted(sa) != sorted(sb):
        return None
    order = sorted(range(n), key=lambda i: sa[i])
    f = [-1] * n
    used = [False] * n

    def rec(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or sb[j] != sa[i]:
                continue
            if all(
                f[i2] < 0 or (ta[i][i2] == tb[j][f[i2]] and ta[i2][i] == tb[f[i2]][j])
                for i2 in range(n)
            ):
                f[i] = j
                used[j] = True
                if rec(k + 1):
                    return True
                f[i] = -1
                used[j] = False
        return False

    return tuple(f) if rec(0) else None


def is_order_isomorphism(A: FiniteLattice, B: FiniteLattice, mapping: Callable) -> bool:
    """Whether ``mapping`` (on elements) is a bijection ``A -> B`` with
    ``a <= a'`` iff ``mapping(a) <= mapping(a')``."""
    try:
        img = [B.index(mapping(a)) for a in A.elements]
    except KeyError:
        return False
    if len(set(img)) != len(B) or len(A) != len(B):
        return False
    ta, tb = A.table, B.table
    n = len(A)
    return all(ta[i][j] == tb[img[i]][img[j]] for i in range(n) for j in range(n))
