"""Classification predicates: density, isolated points, the alpha-topology,
Cantor-Bendixson derivatives, scatteredness and separation flags."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fintop import (
    FinSpace,
    clopens,
    closure,
    components,
    interior,
    members,
    subspace,
)


def isolated_points(X: FinSpace) -> int:
    """Points whose singleton is open."""
    out = 0
    for x in range(X.n):
        if X.is_open(1 << x):
            out |= 1 << x
    return out


def is_dense(X: FinSpace, s: int) -> bool:
    return closure(X, s) == X.full


def is_nowhere_dense(X: FinSpace, s: int) -> bool:
    return interior(X, closure(X, s)) == 0


def is_somewhere_dense(X: FinSpace, s: int) -> bool:
    return not is_nowhere_dense(X, s)


def nowhere_dense_sets(X: FinSpace) -> list[int]:
    return [s for s in range(1 << X.n) if is_nowhere_dense(X, s)]


# ---------------------------------------------------------------------------
# alpha-topology


@dataclass(frozen=True)
class AlphaResult:
    alpha_space: FinSpace
    added: tuple[int, ...]  # opens of the alpha-topology that were not open before


def alpha_topology(X: FinSpace) -> AlphaResult:
    """Alpha-topology via ``S <= int(cl(int(S)))``."""
    opens = [
        s for s in range(1 << X.n)
        if s & ~interior(X, closure(X, interior(X, s))) == 0
    ]
    A = FinSpace(X.n, tuple(opens))
    return AlphaResult(A, tuple(s for s in opens if not X.is_open(s)))


def alpha_topology_oracle(X: FinSpace) -> FinSpace:
    """Alpha-topology as the family of all ``U - N`` with ``U`` open and
    ``N`` nowhere dense, collected by brute force."""
    if X.n == 0:
        return FinSpace(0, (0,))
    opens = np.array(X.opens, dtype=np.int64)
    nd = np.array(nowhere_dense_sets(X), dtype=np.int64)
    diffs = opens[:, None] & ~nd[None, :]
    return FinSpace(X.n, tuple(int(v) for v in np.unique(diffs)))


def alpha_is_idempotent(X: FinSpace) -> bool:
    A = alpha_topology(X).alpha_space
    return alpha_topology(A).alpha_space == A


# ---------------------------------------------------------------------------
# Cantor-Bendixson


@dataclass(frozen=True)
class CBRecord:
    derivatives: tuple[int, ...]  # X, X', X'', ... up to the first repeat
    rank: int
    scattered: bool


def cb_derivative(X: FinSpace) -> CBRecord:
    """Iterate ``S -> S minus the isolated points of the subspace S``."""
    current = X.full
    chain = [current]
    while True:
        sub, index = subspace(X, current)
        iso = isolated_points(sub)
        if iso == 0:
            break
        for new in members(iso):
            current &= ~(1 << index[new])
        chain.append(current)
        if current == 0:
            break
    return CBRecord(tuple(chain), len(chain) - 1, current == 0)


def is_scattered(X: FinSpace) -> bool:
    return cb_derivative(X).scattered


def _subsets_with_isolated_point(X: FinSpace) -> np.ndarray:
    """Boolean array over all subsets ``S``: does ``S`` have a point isolated
    in the subspace topology ``{U & S}``?"""
    subs = np.arange(1 << X.n, dtype=np.int64)
    opens = np.array(X.opens, dtype=np.int64)
    traces = subs[:, None] & opens[None, :]
    singleton = (traces != 0) & ((traces & (traces - 1)) == 0)
    return singleton.any(axis=1)


def is_scattered_bruteforce(X: FinSpace) -> bool:
    """Every nonempty subspace has an isolated point."""
    has_iso = _subsets_with_isolated_point(X)
    return bool(has_iso[1:].all())


def somewhere_dense_condition(X: FinSpace) -> bool:
    """Every somewhere dense subspace has an isolated point (brute force)."""
    has_iso = _subsets_with_isolated_point(X)
    for s in range(1, 1 << X.n):
        if not has_iso[s] and is_somewhere_dense(X, s):
            return False
    return True


def is_alpha_scattered(X: FinSpace) -> bool:
    """Isolated points are dense."""
    return is_dense(X, isolated_points(X))


def is_alpha_scattered_by_definition(X: FinSpace) -> bool:
    """The alpha-space of ``X`` is scattered."""
    return is_scattered(alpha_topology(X).alpha_space)


# ---------------------------------------------------------------------------
# separation


@dataclass(frozen=True)
class Separation:
    T0: bool
    T1: bool
    T2: bool
    completely_hausdorff: bool
    zero_dimensional: bool
    extremally_disconnected: bool
    stonean: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


def separation(X: FinSpace) -> Separation:
    M = X.min_nbhd
    pairs = [(x, y) for x in range(X.n) for y in range(X.n) if x != y]
    # an open set separating x from y exists iff M(x) misses y
    t0 = all(not (M[x] >> y & 1) or not (M[y] >> x & 1) for x, y in pairs)
    t1 = all(not (M[x] >> y & 1) for x, y in pairs)
    t2 = all(M[x] & M[y] == 0 for x, y in pairs)
    # continuous real functions are constant on components, and component
    # indicators are continuous, so functions separate points iff every
    # component is a single point
    comp_hausdorff = components(X).num_blocks == X.n
    cl = clopens(X)
    zero_dim = all(
        any(c >> x & 1 and c & ~u == 0 for c in cl)
        for u in X.opens
        for x in members(u)
    )
    ed = all(X.is_open(closure(X, u)) for u in X.opens)
    return Separation(
        T0=t0,
        T1=t1,
        T2=t2,
        completely_hausdorff=comp_hausdorff,
        zero_dimensional=zero_dim,
        extremally_disconnected=ed,
        stonean=t2 and ed,  # finite spaces are compact
    )


def classification_report(X: FinSpace) -> dict:
    """Flat summary used by the CLI."""
    from .discretize import density

    sep = separation(X)
    cb = cb_derivative(X)
    alpha = alpha_topology(X)
    report: dict = dict(sep.as_dict())
    report.update(
        scattered=cb.scattered,
        alpha_scattered=is_alpha_scattered(X),
        isolated=members(isolated_points(X)),
        cb_rank=cb.rank,
        cb_derivatives=[members(s) for s in cb.derivatives],
        alpha_added=len(alpha.added),
        alpha_idempotent=alpha_is_idempotent(X),
        density=density(X),
    )
    return report

