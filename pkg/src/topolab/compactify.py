"""Compactifications of finite spaces and their function algebras.

A finite space is compact, and a finite Hausdorff space is discrete, so the
preweak compactifications of a finite ``X`` are its Hausdorff quotients.  The
continuous functions on ``X`` are the functions constant on each connected
component, and the unital *-subalgebras of that algebra are exactly the
algebras of functions constant on the blocks of a coarser partition.  The
algebra side is therefore modelled combinatorially by partitions; the exact
rational span-closure in :mod:`topolab.ratlin` serves as the oracle for that
identification.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .classify import separation
from .errors import InternalInvariantViolation, NotInAlgebra, TooLarge
from .fintop import (
    FinSpace,
    Partition,
    PointMap,
    components,
    discrete,
    enumerate_partitions,
    is_continuous,
    is_discrete,
    is_embedding,
    is_injective,
    members,
    quotient,
)
from .lattice import FiniteLattice
from .ratlin import Subspace, generated_algebra, indicator

QUOTIENT_CAP = 8
SUBALGEBRA_CAP = 6


@dataclass(frozen=True)
class FnAlgebra:
    """Functions on the points of a space constant on unions of components.

    ``base`` groups points into components; ``sub`` groups component indices
    into the blocks on which member functions must be constant.
    """

    base: Partition
    sub: Partition

    def __post_init__(self):
        if self.sub.n != self.base.num_blocks:
            raise InternalInvariantViolation("sub-partition must cover the components")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def dimension(self) -> int:
        return self.sub.num_blocks

    def point_partition(self) -> Partition:
        return Partition.from_labels([self.sub.block_of[c] for c in self.base.block_of])

    def issubalgebra(self, other: "FnAlgebra") -> bool:
        """``self <= other``: a coarser constancy partition means fewer functions."""
        return self.base == other.base and other.sub.refines(self.sub)

    def contains(self, element: Sequence) -> bool:
        if len(element) != self.n:
            return False
        seen: dict[int, Fraction] = {}
        for x, v in enumerate(element):
            b = self.sub.block_of[self.base.block_of[x]]
            if seen.setdefault(b, Fraction(v)) != Fraction(v):
                return False
        return True

    def as_subspace(self) -> Subspace:
        """The algebra as an explicit subspace of ``Q^n``."""
        return Subspace(self.n, [indicator(self.n, b) for b in self.point_partition().blocks])

    def unit(self) -> tuple[Fraction, ...]:
        return (Fraction(1),) * self.n


def full_algebra(X: FinSpace) -> FnAlgebra:
    """All continuous functions on ``X``."""
    base = components(X)
    return FnAlgebra(base, Partition.discrete(base.num_blocks))


def constants(X: FinSpace) -> FnAlgebra:
    base = components(X)
    return FnAlgebra(base, Partition.trivial(base.num_blocks))


# ---------------------------------------------------------------------------
# Hausdorff quotients


@dataclass(frozen=True)
class PreweakCompactification:
    partition: Partition
    quotient: FinSpace = field(repr=False)
    q: PointMap = field(repr=False)

    @property
    def is_weak(self) -> bool:
        return is_injective(self.q)

    @property
    def is_compactification(self) -> bool:
        return is_embedding(self.q)


def relation_is_closed(X: FinSpace, P: Partition) -> bool:
    """Whether the equivalence relation of ``P`` is closed in ``X x X``.

    Its complement is open iff each pair ``(x, y)`` outside it has a basic
    box ``M(x) x M(y)`` missing the relation.
    """
    M = X.min_nbhd
    hit = [0] * X.n
    for x in range(X.n):
        for a in members(M[x]):
            hit[x] |= 1 << P.block_of[a]
    return all(
        P.same_block(x, y) or hit[x] & hit[y] == 0
        for x in range(X.n)
        for y in range(X.n)
    )


def hausdorff_quotients(X: FinSpace, cap: int = QUOTIENT_CAP) -> list[PreweakCompactification]:
    """All partitions whose quotient is Hausdorff, in partition order.

    Three characterisations are computed for every partition and must agree:
    the quotient is T2, every block is open in ``X``, and the relation is
    closed in ``X x X``.
    """
    if X.n > cap:
        raise TooLarge(f"{X.n} points exceeds quotient cap {cap}")
    out = []
    for P in enumerate_partitions(X.n):
        Q, q = quotient(X, P)
        t2 = separation(Q).T2
        blocks_open = all(X.is_open(b) for b in P.blocks)
        closed = relation_is_closed(X, P)
        if not t2 == blocks_open == closed:
            raise InternalInvariantViolation(
                f"Hausdorff criteria disagree for {P.block_of}: T2={t2} open={blocks_open} closed={closed}"
            )
        if t2:
            out.append(PreweakCompactification(P, Q, q))
    return out


def compactification_maps(
    lower: PreweakCompactification, upper: PreweakCompactification
) -> list[tuple[int, ...]]:
    """All continuous ``h: upper.quotient -> lower.quotient`` with
    ``h . upper.q = lower.q``, by backtracking over point assignments."""
    Y, Z = upper.quotient, lower.quotient
    need: list[set[int]] = [set() for _ in range(Y.n)]
    for x in range(upper.q.domain.n):
        need[upper.q(x)].add(lower.q(x))
    found = []
    h = [0] * Y.n

    def rec(i: int):
        if i == Y.n:
            cand = PointMap(Y, Z, tuple(h))
            if is_continuous(cand):
                found.append(tuple(h))
            return
        for z in range(Z.n):
            if need[i] <= {z}:
                h[i] = z
                rec(i + 1)

    rec(0)
    return found


def compactification_le(lower: PreweakCompactification, upper: PreweakCompactification) -> bool:
    maps = compactification_maps(lower, upper)
    if len(maps) > 1:
        raise InternalInvariantViolation("connecting map is not unique")
    return bool(maps)


def compactification_lattice(X: FinSpace) -> FiniteLattice:
    els = tuple(hausdorff_quotients(X))
    return FiniteLattice(els, compactification_le, tuple(_partition_label(pc.partition) for pc in els))


def _partition_label(P: Partition) -> str:
    return "|".join(",".join(map(str, members(b))) for b in P.blocks)


# ---------------------------------------------------------------------------
# the map onto subalgebras


def F_map(X: FinSpace, pc: PreweakCompactification) -> FnAlgebra:
    """Range of precomposition with the quotient map: functions constant on
    the blocks of the quotient partition."""
    base = components(X)
    labels = [-1] * base.num_blocks
    for c, comp in enumerate(base.blocks):
        found = {pc.partition.block_of[x] for x in members(comp)}
        if len(found) != 1:
            raise InternalInvariantViolation("quotient block is not a union of components")
        labels[c] = found.pop()
    return FnAlgebra(base, Partition.from_labels(labels))


def subalgebra_lattice(X: FinSpace, cap: int = SUBALGEBRA_CAP) -> FiniteLattice:
    """Unital *-subalgebras of C(X) under inclusion."""
    base = components(X)
    k = base.num_blocks
    if k > cap:
        raise TooLarge(f"{k} components exceeds subalgebra cap {cap}")
    els = tuple(FnAlgebra(base, P) for P in enumerate_partitions(k))
    return FiniteLattice(els, FnAlgebra.issubalgebra, tuple(_partition_label(a.sub) for a in els))


def subalgebra_by_span_closure(k: int, generators: Sequence[Sequence]) -> Subspace:
    return generated_algebra(k, generators)


def joint_kernel_partition(k: int, generators: Sequence[Sequence]) -> Partition:
    """Points identified when every generator takes the same value on them."""
    return Partition.from_labels([tuple(Fraction(g[i]) for g in generators) for i in range(k)])


def partition_subspace(P: Partition) -> Subspace:
    return Subspace(P.n, [indicator(P.n, b) for b in P.blocks])


@dataclass
class ThrpreRecord:
    ok: bool
    quotients: int = 0
    subalgebras: int = 0
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_thrpre(X: FinSpace) -> ThrpreRecord:
    """Check that ``F`` is an order isomorphism from Hausdorff quotients
    (ordered by factorisation through continuous maps) onto subalgebras
    (ordered by inclusion)."""
    comps = compactification_lattice(X)
    subs = subalgebra_lattice(X)
    rec = ThrpreRecord(True, len(comps), len(subs))
    images = [F_map(X, pc) for pc in comps.elements]
    if len(set(images)) != len(images):
        rec.ok = False
        rec.counterexample = {"reason": "F not injective"}
        return rec
    if set(images) != set(subs.elements):
        rec.ok = False
        rec.counterexample = {"reason": "F not onto the subalgebras"}
        return rec
    for i, a in enumerate(comps.elements):
        for j, b in enumerate(comps.elements):
            if comps.table[i][j] != subs.le(images[i], images[j]):
                rec.ok = False
                rec.counterexample = {
                    "reason": "order mismatch",
                    "lower": list(a.partition.block_of),
                    "upper": list(b.partition.block_of),
                    "compactification_le": comps.table[i][j],
                    "subalgebra_le": subs.le(images[i], images[j]),
                }
                return rec
    if not (comps.is_partial_order() and subs.is_lattice()):
        rec.ok = False
        rec.counterexample = {"reason": "not a complete lattice"}
    return rec


@dataclass(frozen=True)
class SeparationVerdict:
    separates_points: bool
    separates_points_and_closed_sets: bool


def separation_predicates(X: FinSpace, A: FnAlgebra) -> SeparationVerdict:
    """Point and point/closed-set separation by algebra members.

    A member's level sets are unions of constancy blocks, so a separating
    member exists iff the indicator of some union of blocks separates; all
    such indicators are tried.
    """
    blocks = A.point_partition().blocks
    patterns = []
    for t in range(1 << len(blocks)):
        patterns.append(sum(b for i, b in enumerate(blocks) if t >> i & 1))
    sep_points = all(
        any((u >> x & 1) != (u >> y & 1) for u in patterns)
        for x in range(X.n)
        for y in range(x + 1, X.n)
    )
    sep_closed = all(
        any(u >> x & 1 and u & e == 0 for u in patterns)
        for e in X.closed_sets
        for x in range(X.n)
        if not e >> x & 1
    )
    return SeparationVerdict(sep_points, sep_points and sep_closed)


# ---------------------------------------------------------------------------
# characters and the Gelfand transform


@dataclass(frozen=True)
class CharacterSpace:
    """Characters of a partition algebra: evaluation on each constancy block."""

    algebra: FnAlgebra
    characters: tuple[int, ...]

    def evaluate(self, character: int, element: Sequence) -> Fraction:
        if not self.algebra.contains(element):
            raise NotInAlgebra("element is not constant on the algebra's blocks")
        block = self.algebra.point_partition().blocks[character]
        return Fraction(element[members(block)[0]])


def characters(A: FnAlgebra) -> CharacterSpace:
    return CharacterSpace(A, tuple(range(A.dimension)))


def gelfand(A: FnAlgebra, element: Sequence) -> tuple[Fraction, ...]:
    """Values of ``element`` at every character."""
    if not A.contains(element):
        raise NotInAlgebra("element is not constant on the algebra's blocks")
    phi = characters(A)
    return tuple(phi.evaluate(c, element) for c in phi.characters)


def check_gelfand(A: FnAlgebra, samples: Sequence[Sequence]) -> bool:
    """Unital, multiplicative on sample pairs, and bijective onto all
    functions on the characters."""
    d = A.dimension
    if gelfand(A, A.unit()) != (Fraction(1),) * d:
        return False
    for a in samples:
        for b in samples:
            ab = tuple(Fraction(x) * Fraction(y) for x, y in zip(a, b))
            ga, gb = gelfand(A, a), gelfand(A, b)
            if gelfand(A, ab) != tuple(x * y for x, y in zip(ga, gb)):
                return False
    images = [gelfand(A, indicator(A.n, b)) for b in A.point_partition().blocks]
    return Subspace(d, images).rank == d


def ev(X: FinSpace) -> PointMap:
    """Evaluation ``X -> characters of C(X)``; the character space of a
    finite-dimensional algebra carries the discrete topology."""
    A = full_algebra(X)
    k = A.dimension
    blocks = A.point_partition().blocks
    table = []
    for x in range(X.n):
        (c,) = [i for i, b in enumerate(blocks) if b >> x & 1]
        table.append(c)
    f = PointMap(X, discrete(k), tuple(table))
    if is_discrete(X) and not (is_embedding(f) and f.range == f.codomain.full):
        raise InternalInvariantViolation("evaluation is not a homeomorphism on a discrete space")
    return f


def _induced_on_characters(f: PointMap) -> tuple[int, ...]:
    """``Phi(C(f))``: send each character ``xi`` of C(X) to ``xi . C(f)``,
    identified among the characters of C(Y) by its values on the
    indicators of Y's components."""
    X, Y = f.domain, f.codomain
    AX, AY = full_algebra(X), full_algebra(Y)
    phiX = characters(AX)
    basisY = [indicator(Y.n, b) for b in AY.point_partition().blocks]
    eY = [tuple(Fraction(int(i == j)) for j in range(len(basisY))) for i in range(len(basisY))]
    out = []
    for xi in phiX.characters:
        pulled = [tuple(h[f(x)] for x in range(X.n)) for h in basisY]
        values = tuple(phiX.evaluate(xi, g) for g in pulled)
        matches = [i for i, e in enumerate(eY) if e == values]
        if len(matches) != 1:
            raise InternalInvariantViolation("pulled-back functional is not a character")
        out.append(matches[0])
    return tuple(out)


def induced_functor_check(Xs: Sequence[FinSpace], fs: Sequence[PointMap]) -> bool:
    """Naturality of evaluation for the functor induced by ``X -> C(X)``:
    ``Phi(C(f))(ev_X(x)) == ev_Y(f(x))`` for every listed map and point."""
    objects = set(Xs)
    for f in fs:
        if f.domain not in objects or f.codomain not in objects:
            return False
        if not is_continuous(f):
            return False
        Gf = _induced_on_characters(f)
        evX, evY = ev(f.domain), ev(f.codomain)
        if any(Gf[evX(x)] != evY(f(x)) for x in range(f.domain.n)):
            return False
    return True
