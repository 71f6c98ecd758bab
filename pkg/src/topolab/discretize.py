"""Discretizations of finite spaces.

A discretization of ``X`` is a pair ``(f, Y)`` with ``Y`` discrete and
``f: Y -> X``.  It is *preweak* when ``f`` is injective, *weak* when ``f`` is
an embedding with open range, and *full* when ``f`` is an embedding with dense
range.  Every class of these has exactly one representative that is the
inclusion of a subset of ``X``, so a :class:`Discretization` just stores that
subset.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product as iproduct

from .classify import is_dense, isolated_points, separation
from .errors import HypothesisViolated, InternalInvariantViolation, InvalidMap, NotADiscretization, TooLarge
from .fintop import (
    FinSpace,
    PointMap,
    has_dense_range,
    inclusion,
    is_discrete,
    is_embedding,
    is_injective,
    members,
    popcount,
    product,
    subspace,
)
from .lattice import FiniteLattice, set_label

DISCRETIZATION_CAP = 12
PREWEAK_LATTICE_CAP = 8


class Level(enum.Enum):
    PREWEAK = "preweak"
    WEAK = "weak"
    FULL = "full"


@dataclass(frozen=True)
class Discretization:
    image: int
    level: Level = Level.FULL

    def __str__(self) -> str:
        return set_label(self.image)


@dataclass(frozen=True)
class PairClass:
    """Every discretization level a pair ``(f, Y)`` satisfies."""

    preweak: bool
    weak: bool
    full: bool

    @property
    def strongest(self) -> str:
        """``full`` and ``weak`` are incomparable; ``full`` is listed first."""
        if self.full:
            return "full"
        if self.weak:
            return "weak"
        if self.preweak:
            return "preweak"
        return "not_a_discretization"

    @property
    def levels(self) -> frozenset[Level]:
        out = set()
        if self.preweak:
            out.add(Level.PREWEAK)
        if self.weak:
            out.add(Level.WEAK)
        if self.full:
            out.add(Level.FULL)
        return frozenset(out)


def classify_pair(f: PointMap, X: FinSpace | None = None) -> PairClass:
    """Which of the three discretization notions ``(f, f.domain)`` satisfies."""
    if X is not None and f.codomain != X:
        raise InvalidMap("map does not land in the given space")
    if not is_discrete(f.domain):
        raise InvalidMap("domain of a discretization must be discrete")
    inj = is_injective(f)
    emb = is_embedding(f)
    return PairClass(
        preweak=inj,
        weak=emb and f.codomain.is_open(f.range),
        full=emb and has_dense_range(f),
    )


def canonical(f: PointMap, level: Level = Level.FULL) -> Discretization:
    """Subset representative of an injective pair."""
    if not is_injective(f):
        raise NotADiscretization("map is not injective")
    return Discretization(f.range, level)


def is_discrete_subspace(X: FinSpace, s: int) -> bool:
    return is_discrete(subspace(X, s)[0])


def all_discretizations(X: FinSpace, cap: int = DISCRETIZATION_CAP) -> list[Discretization]:
    """Every full discretization class, by brute force over subsets."""
    if X.n > cap:
        raise TooLarge(f"{X.n} points exceeds discretization cap {cap}")
    return [
        Discretization(s, Level.FULL)
        for s in range(1 << X.n)
        if is_dense(X, s) and is_discrete_subspace(X, s)
    ]


def weak_discretizations_bruteforce(X: FinSpace, cap: int = DISCRETIZATION_CAP) -> list[Discretization]:
    if X.n > cap:
        raise TooLarge(f"{X.n} points exceeds discretization cap {cap}")
    return [
        Discretization(s, Level.WEAK)
        for s in range(1 << X.n)
        if X.is_open(s) and is_discrete_subspace(X, s)
    ]


def _subset_lattice(mask: int, level: Level) -> FiniteLattice:
    from .fintop import subsets

    els = tuple(Discretization(s, level) for s in subsets(mask))
    return FiniteLattice(els, lambda a, b: a.image & ~b.image == 0, tuple(str(d) for d in els))


def weak_lattice(X: FinSpace, cap: int = DISCRETIZATION_CAP) -> FiniteLattice:
    """Weak discretizations: one per subset of the isolated points."""
    if X.n > cap:
        raise TooLarge(f"{X.n} points exceeds discretization cap {cap}")
    return _subset_lattice(isolated_points(X), Level.WEAK)


def preweak_lattice(X: FinSpace, cap: int = PREWEAK_LATTICE_CAP) -> FiniteLattice:
    if X.n > cap:
        raise TooLarge(f"{X.n} points exceeds preweak lattice cap {cap}")
    return _subset_lattice(X.full, Level.PREWEAK)


def has_discretization(X: FinSpace) -> tuple[bool, Discretization | None]:
    """Whether ``X`` has a full discretization, with a witness.

    For T1 spaces the answer is read off the isolated points.  Otherwise the
    shortcut is unsound (an anti-discrete space has no isolated points but
    every singleton is a discretization), so the subsets are searched.
    """
    if separation(X).T1:
        delta = isolated_points(X)
        if is_dense(X, delta):
            return True, Discretization(delta, Level.FULL)
        return False, None
    found = all_discretizations(X)
    return (True, found[0]) if found else (False, None)


def compare(d1: Discretization, d2: Discretization) -> str:
    """``lt``/``gt``/``eq``/``incomparable``.

    ``d1 <= d2`` iff some ``h`` with ``incl2 . h = incl1`` exists; for subset
    representatives ``h`` is forced pointwise, so it exists iff the first
    image lies in the second, and it is then unique and injective.
    """
    le = _connecting_map(d1.image, d2.image) is not None
    ge = _connecting_map(d2.image, d1.image) is not None
    if le and ge:
        return "eq"
    if le:
        return "lt"
    if ge:
        return "gt"
    return "incomparable"


def _connecting_map(a: int, b: int) -> tuple[int, ...] | None:
    pa, pb = members(a), members(b)
    pos = {p: i for i, p in enumerate(pb)}
    # every h: Y -> Z with g h = f must send y to the unique z with g(z) = f(y)
    h = []
    for p in pa:
        if p not in pos:
            return None
        h.append(pos[p])
    if len(set(h)) != len(h):
        raise InternalInvariantViolation("connecting map not injective")
    return tuple(h)


def density(X: FinSpace) -> int:
    """Least size of a dense subset, by brute force."""
    best = X.n
    for s in range(1 << X.n):
        if popcount(s) < best and is_dense(X, s):
            best = popcount(s)
    return best


def density_check(X: FinSpace) -> tuple[int, bool]:
    d = density(X)
    return d, all(popcount(disc.image) == d for disc in all_discretizations(X))


def product_discretization(
    X: FinSpace, dx: Discretization, Y: FinSpace, dy: Discretization
) -> tuple[FinSpace, Discretization]:
    """Image of the product pair inside ``X x Y``; asserted to be full."""
    for space, d in ((X, dx), (Y, dy)):
        if not classify_pair(inclusion(space, d.image)).full:
            raise NotADiscretization(f"{d} is not a full discretization")
    P, _ = product(X, Y)
    image = 0
    for i in members(dx.image):
        for j in members(dy.image):
            image |= 1 << (i * Y.n + j)
    if not classify_pair(inclusion(P, image)).full:
        raise InternalInvariantViolation("product of discretizations is not a discretization")
    return P, Discretization(image, Level.FULL)


def compactification_discretization_duality(f: PointMap) -> tuple[bool, bool]:
    """For ``f`` from a discrete space into a finite Hausdorff space, whether
    ``(f, codomain)`` is a compactification of the domain and whether
    ``(f, domain)`` is a discretization of the codomain."""
    if not is_discrete(f.domain):
        raise HypothesisViolated("domain must be discrete")
    if not separation(f.codomain).T2:
        raise HypothesisViolated("codomain must be Hausdorff")
    is_compactification = is_embedding(f) and has_dense_range(f)
    is_discretization = classify_pair(f).full
    return is_compactification, is_discretization


def all_maps(X: FinSpace, Y: FinSpace):
    for table in iproduct(range(Y.n), repeat=X.n):
        yield PointMap(X, Y, table)


def discretization_lattice_list(X: FinSpace) -> FiniteLattice:
    """Full discretizations ordered by image inclusion.

    Not a lattice in general; the classes are pairwise incomparable.
    """
    els = tuple(all_discretizations(X))
    return FiniteLattice(els, lambda a, b: a.image & ~b.image == 0, tuple(str(d) for d in els))

