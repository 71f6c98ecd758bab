"""Finite topological spaces.

Points of an ``n``-point space are the integers ``0..n-1``.  Every subset of
points (a "point set") is a plain ``int`` bitmask: bit ``i`` set means point
``i`` is a member.  A :class:`FinSpace` stores its topology extensionally as
the ascending tuple of all open sets, so two spaces are equal exactly when
their canonical forms are equal.

Most computations go through the minimal open neighbourhood ``M(x)`` of a
point (the intersection of all opens containing it).  For a finite space
these determine everything: ``x`` lies in the closure of ``S`` iff ``M(x)``
meets ``S``, and ``x`` lies in the interior of ``S`` iff ``M(x) <= S``.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence

from .errors import (
    InvalidGenerator,
    InvalidMap,
    InvalidPartition,
    InvalidTopology,
    TooLarge,
)

DEFAULT_CAP = 20
ENUMERATION_CAP = 6
BRUTE_FORCE_ENUMERATION_CAP = 4


def point_cap() -> int:
    """Global cap on the number of points; ``TOPOLAB_CAP`` overrides it."""
    env = os.environ.get("TOPOLAB_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP


# ---------------------------------------------------------------------------
# bitmask helpers


def bits(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_set(n: int) -> int:
    return (1 << n) - 1


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, ascending."""
    pts = members(mask)
    for k in range(1 << len(pts)):
        yield bits(p for j, p in enumerate(pts) if k >> j & 1)


def _union_closure(nbhds: Sequence[int]) -> tuple[int, ...]:
    opens = {0}
    for m in nbhds:
        opens |= {o | m for o in opens}
    return tuple(sorted(opens))


def _compress(mask: int, index: Sequence[int]) -> int:
    """Re-express ``mask`` in the dense numbering given by ``index``."""
    out = 0
    for new, old in enumerate(index):
        if mask >> old & 1:
            out |= 1 << new
    return out


# ---------------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class FinSpace:
    """A finite topological space.

    Direct construction trusts the caller to pass a sorted, duplicate-free
    family satisfying the axioms; use :meth:`from_opens` or
    :func:`make_space` for untrusted input.
    """

    n: int
    opens: tuple[int, ...]

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[int]) -> "FinSpace":
        X = cls(n, tuple(sorted(set(opens))))
        problem = topology_violation(X.n, X.opens)
        if problem:
            raise InvalidTopology(problem)
        return X

    @property
    def full(self) -> int:
        return full_set(self.n)

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full & ~u for u in self.opens))

    @cached_property
    def min_nbhd(self) -> tuple[int, ...]:
        """``M(x)``: the smallest open set containing ``x``."""
        out = [self.full] * self.n
        for u in self.opens:
            for x in members(u):
                out[x] &= u
        return tuple(out)

    def is_open(self, s: int) -> bool:
        return s in self.open_set

    def is_closed(self, s: int) -> bool:
        return (self.full & ~s) in self.open_set

    def __repr__(self) -> str:
        shown = ", ".join("{" + ",".join(map(str, members(u))) + "}" for u in self.opens)
        return f"FinSpace(n={self.n}, opens=[{shown}])"


def topology_violation(n: int, opens: Sequence[int]) -> str | None:
    """Describe the first topology-axiom failure, or return ``None``.

    Checks every pair exhaustively; intended for validation, not hot paths.
    """
    full = full_set(n)
    fam = set(opens)
    if len(fam) != len(opens):
        return "duplicate open sets"
    for u in opens:
        if u < 0 or u & ~full:
            return f"open set {members(u)} not within {n} points"
    if 0 not in fam:
        return "empty set missing"
    if full not in fam:
        return "full set missing"
    for u in opens:
        for v in opens:
            if u | v not in fam:
                return f"union of {members(u)} and {members(v)} missing"
            if u & v not in fam:
                return f"intersection of {members(u)} and {members(v)} missing"
    return None


def make_space(n: int, generators: Iterable[int] = ()) -> FinSpace:
    """Smallest topology on ``n`` points containing every generator.

    The minimal neighbourhood of ``x`` in the generated topology is the
    intersection of the generators containing ``x``; the opens are all
    unions of those neighbourhoods.
    """
    if n < 0:
        raise InvalidGenerator("negative point count")
    full = full_set(n)
    gens = list(generators)
    for g in gens:
        if g < 0 or g & ~full:
            raise InvalidGenerator(f"generator {g:#b} not within {n} points")
    nbhd = [full] * n
    for g in gens:
        for x in members(g):
            nbhd[x] &= g
    return FinSpace(n, _union_closure(nbhd))


def space_from_nbhds(n: int, nbhds: Sequence[int]) -> FinSpace:
    """Topology whose opens are the unions of the given point neighbourhoods.

    ``nbhds[x]`` must contain ``x`` and be closed under the preorder it
    induces (as minimal neighbourhoods always are).
    """
    return FinSpace(n, _union_closure(nbhds))


def discrete(n: int) -> FinSpace:
    return FinSpace(n, tuple(range(1 << n)))


def antidiscrete(n: int) -> FinSpace:
    if n == 0:
        return FinSpace(0, (0,))
    return FinSpace(n, (0, full_set(n)))


def sierpinski() -> FinSpace:
    """Two points, ``0`` open and ``1`` closed."""
    return FinSpace(2, (0b00, 0b01, 0b11))


def is_discrete(X: FinSpace) -> bool:
    return all(m == 1 << x for x, m in enumerate(X.min_nbhd))


# ---------------------------------------------------------------------------
# closure / interior


def closure(X: FinSpace, s: int) -> int:
    out = 0
    for x, m in enumerate(X.min_nbhd):
        if m & s:
            out |= 1 << x
    return out


def interior(X: FinSpace, s: int) -> int:
    out = 0
    for x, m in enumerate(X.min_nbhd):
        if m & ~s == 0:
            out |= 1 << x
    return out


def closure_by_opens(X: FinSpace, s: int) -> int:
    """Complement of the largest open set missing ``s`` (definitional route)."""
    comp = X.full & ~s
    biggest = 0
    for u in X.opens:
        if u & ~comp == 0:
            biggest |= u
    return X.full & ~biggest


def interior_by_opens(X: FinSpace, s: int) -> int:
    out = 0
    for u in X.opens:
        if u & ~s == 0:
            out |= u
    return out


# ---------------------------------------------------------------------------
# constructions


def subspace(X: FinSpace, s: int) -> tuple[FinSpace, tuple[int, ...]]:
    """Subspace on the points of ``s``, densely renumbered.

    Returns the space together with ``index`` where ``index[new] = old``.
    """
    s &= X.full
    index = tuple(members(s))
    traces = {_compress(u & s, index) for u in X.opens}
    return FinSpace(len(index), tuple(sorted(traces))), index


def product(X: FinSpace, Y: FinSpace) -> tuple[FinSpace, tuple[tuple[int, int], ...]]:
    """Binary product; point ``(i, j)`` gets index ``i * Y.n + j``.

    Returns the space and the pairing table ``pairs[k] = (i, j)``.
    """
    n = X.n * Y.n
    if n > point_cap():
        raise TooLarge(f"product has {n} points (cap {point_cap()})")
    pairs = tuple(iproduct(range(X.n), range(Y.n)))

    def box(u: int, v: int) -> int:
        out = 0
        for i in members(u):
            out |= v << (i * Y.n)
        return out

    # unions of boxes of minimal neighbourhoods = unions of all open boxes
    basis = [box(X.min_nbhd[i], Y.min_nbhd[j]) for i, j in pairs]
    return FinSpace(n, _union_closure(basis)), pairs


def disjoint_sum(X: FinSpace, Y: FinSpace) -> FinSpace:
    """``X`` on points ``0..X.n-1`` followed by ``Y``; opens are pairs of opens."""
    if X.n + Y.n > point_cap():
        raise TooLarge(f"sum has {X.n + Y.n} points (cap {point_cap()})")
    return FinSpace(X.n + Y.n, tuple(sorted(u | v << X.n for u in X.opens for v in Y.opens)))


def product_all(spaces: Sequence[FinSpace]) -> FinSpace:
    """Left fold of :func:`product`; the empty product is the one-point space."""
    acc = discrete(1)
    for Y in spaces:
        acc, _ = product(acc, Y)
    return acc


def projections(X: FinSpace, Y: FinSpace) -> tuple["PointMap", "PointMap"]:
    P, pairs = product(X, Y)
    return (
        PointMap(P, X, tuple(i for i, _ in pairs)),
        PointMap(P, Y, tuple(j for _, j in pairs)),
    )


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    """A set partition of ``0..n-1`` in restricted-growth canonical form.

    Block ``k`` is the ``k``-th block in order of least element, so equal
    partitions have equal ``block_of`` tuples.
    """

    n: int
    block_of: tuple[int, ...]

    def __post_init__(self):
        if len(self.block_of) != self.n:
            raise InvalidPartition("block_of has wrong length")
        seen = -1
        for b in self.block_of:
            if b > seen + 1 or b < 0:
                raise InvalidPartition("block_of not in canonical form; use from_labels")
            seen = max(seen, b)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        renum: dict = {}
        out = []
        for lab in labels:
            if lab not in renum:
                renum[lab] = len(renum)
            out.append(renum[lab])
        return cls(len(out), tuple(out))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[int]) -> "Partition":
        labels = [-1] * n
        for k, b in enumerate(blocks):
            if b == 0:
                raise InvalidPartition("empty block")
            for x in members(b):
                if x >= n:
                    raise InvalidPartition(f"point {x} out of range")
                if labels[x] != -1:
                    raise InvalidPartition(f"point {x} in two blocks")
                labels[x] = k
        if -1 in labels:
            raise InvalidPartition("blocks do not cover all points")
        return cls.from_labels(labels)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, tuple(range(n)))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls(n, (0,) * n)

    @cached_property
    def blocks(self) -> tuple[int, ...]:
        out = [0] * self.num_blocks
        for x, b in enumerate(self.block_of):
            out[b] |= 1 << x
        return tuple(out)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.n else 0

    def refines(self, other: "Partition") -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        return all(
            other.block_of[x] == other.block_of[members(b)[0]]
            for b in self.blocks
            for x in members(b)
        )

    def same_block(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``0..n-1`` via restricted growth strings."""
    if n == 0:
        yield Partition(0, ())
        return
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield Partition(n, tuple(rgs))
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class PointMap:
    """A map of point sets ``domain -> codomain`` given by an index table."""

    domain: FinSpace
    codomain: FinSpace
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.domain.n:
            raise InvalidMap(f"table has {len(self.table)} entries for {self.domain.n} points")
        for t in self.table:
            if not 0 <= t < self.codomain.n:
                raise InvalidMap(f"table entry {t} out of range for {self.codomain.n} points")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, s: int) -> int:
        out = 0
        for x in members(s):
            out |= 1 << self.table[x]
        return out

    def preimage(self, s: int) -> int:
        out = 0
        for x, t in enumerate(self.table):
            if s >> t & 1:
                out |= 1 << x
        return out

    @property
    def range(self) -> int:
        return self.image(self.domain.full)

    def then(self, g: "PointMap") -> "PointMap":
        """Composite ``g . self``."""
        if g.domain != self.codomain:
            raise InvalidMap("maps are not composable")
        return PointMap(self.domain, g.codomain, tuple(g.table[t] for t in self.table))


def identity_map(X: FinSpace) -> PointMap:
    return PointMap(X, X, tuple(range(X.n)))


def inclusion(X: FinSpace, s: int) -> PointMap:
    """Inclusion of the points of ``s``, carrying the discrete topology, into ``X``."""
    pts = members(s & X.full)
    return PointMap(discrete(len(pts)), X, tuple(pts))


def is_injective(f: PointMap) -> bool:
    return len(set(f.table)) == len(f.table)


def is_continuous(f: PointMap) -> bool:
    dom = f.domain.open_set
    return all(f.preimage(v) in dom for v in f.codomain.opens)


def is_embedding(f: PointMap) -> bool:
    """Injective, continuous, and a homeomorphism onto its image."""
    if not (is_injective(f) and is_continuous(f)):
        return False
    rng = f.range
    traces = {v & rng for v in f.codomain.opens}
    return all(f.image(u) in traces for u in f.domain.opens)


def has_dense_range(f: PointMap) -> bool:
    return closure(f.codomain, f.range) == f.codomain.full


def has_open_range(f: PointMap) -> bool:
    return f.codomain.is_open(f.range)


def quotient(X: FinSpace, P: Partition) -> tuple[FinSpace, PointMap]:
    """Quotient ``X/P``; points of the quotient are the blocks of ``P``."""
    if P.n != X.n:
        raise InvalidPartition("partition is for a different number of points")
    blocks = P.blocks
    opens = set()
    for u in X.opens:
        hit = 0
        covered = 0
        for x in members(u):
            b = P.block_of[x]
            if not hit >> b & 1:
                hit |= 1 << b
                covered |= blocks[b]
        if covered == u:
            opens.add(hit)
    Q = FinSpace(P.num_blocks, tuple(sorted(opens)))
    return Q, PointMap(X, Q, P.block_of)


# ---------------------------------------------------------------------------
# specialization and components


def specialization(X: FinSpace) -> tuple[int, ...]:
    """Rows of the specialization preorder.

    Bit ``y`` of ``rows[x]`` is set iff ``x <= y``, i.e. ``x`` lies in the
    closure of ``{y}``.
    """
    rows = [0] * X.n
    for y in range(X.n):
        for x in members(closure(X, 1 << y)):
            rows[x] |= 1 << y
    return tuple(rows)


def components(X: FinSpace) -> Partition:
    """Connected components, as components of the comparability graph."""
    parent = list(range(X.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x, row in enumerate(specialization(X)):
        for y in members(row):
            ra, rb = find(x), find(y)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return Partition.from_labels([find(x) for x in range(X.n)])


def clopens(X: FinSpace) -> tuple[int, ...]:
    return tuple(u for u in X.opens if X.is_closed(u))


def components_by_clopens(X: FinSpace) -> Partition:
    """Connected components, as the atoms of the Boolean algebra of clopens."""
    cl = [c for c in clopens(X) if c]
    atoms = [c for c in cl if not any(d != c and d & ~c == 0 for d in cl)]
    return Partition.from_blocks(X.n, sorted(atoms, key=lambda a: a & -a))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_topologies(n: int) -> Iterator[FinSpace]:
    """Every topology on ``n`` labelled points, in canonical order.

    Topologies on a finite set correspond to preorders.  Preorders are grown
    one point at a time: the new point ``k`` picks a down-closed set ``D`` of
    points below it and an up-closed set ``U`` above it with ``D x U``
    already inside the relation, which keeps the relation transitive and
    produces each labelled preorder once.
    """
    if n < 0:
        raise ValueError("negative point count")
    if n > ENUMERATION_CAP:
        raise TooLarge(f"enumeration capped at {ENUMERATION_CAP} points")
    spaces = []
    # up[x]: points y with x <= y (= minimal neighbourhood of x)
    up = [0] * n
    down = [0] * n

    def rec(k: int):
        if k == n:
            spaces.append(space_from_nbhds(n, up[:n]))
            return
        prev = full_set(k)
        for d in subsets(prev):
            if any(down[x] & ~d for x in members(d)):
                continue
            for u in subsets(prev):
                if any(up[x] & ~u for x in members(u)):
                    continue
                if any(up[x] & u != u for x in members(d)):
                    continue
                saved = (up[:], down[:])
                kbit = 1 << k
                up[k] = u | kbit
                down[k] = d | kbit
                for x in members(d):
                    up[x] |= kbit
                for x in members(u):
                    down[x] |= kbit
                rec(k + 1)
                up[:], down[:] = saved

    rec(0)
    spaces.sort(key=lambda X: X.opens)
    yield from spaces


def enumerate_topologies_bruteforce(n: int) -> Iterator[FinSpace]:
    """Filter all ``2**(2**n)`` families of subsets for the topology axioms."""
    if n > BRUTE_FORCE_ENUMERATION_CAP:
        raise TooLarge(f"brute-force enumeration capped at {BRUTE_FORCE_ENUMERATION_CAP} points")
    full = full_set(n)
    m = 1 << n
    found = []
    need = 1 | (1 << full)  # the empty set and the full set must be members
    for fam in range(1 << m):
        if fam & need != need:
            continue
        sets = [s for s in range(m) if fam >> s & 1]
        ok = True
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                if not (fam >> (a | b) & 1 and fam >> (a & b) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(FinSpace(n, tuple(sets)))
    found.sort(key=lambda X: X.opens)
    return iter(found)


def random_space(n: int, seed: int) -> FinSpace:
    """Close a seeded random family of subsets into a topology."""
    if n > point_cap():
        raise TooLarge(f"{n} points exceeds cap {point_cap()}")
    if n == 0:
        return FinSpace(0, (0,))
    rng = random.Random(seed)
    density = rng.random()
    count = rng.randint(0, n + 1)
    gens = [
        bits(x for x in range(n) if rng.random() < density)
        for _ in range(count)
    ]
    return make_space(n, gens)


# ---------------------------------------------------------------------------
# homeomorphism


def find_homeomorphism(X: FinSpace, Y: FinSpace) -> tuple[int, ...] | None:
    """A bijection ``X -> Y`` that is a homeomorphism, or ``None``.

    Backtracking over point bijections.  Candidates are pruned by the sizes
    of minimal neighbourhoods and of point closures, and partial maps must
    preserve the specialization preorder in both directions.
    """
    if X.n != Y.n or len(X.opens) != len(Y.opens):
        return None
    sx, sy = specialization(X), specialization(Y)
    degx = [(popcount(X.min_nbhd[x]), popcount(closure(X, 1 << x))) for x in range(X.n)]
    degy = [(popcount(Y.min_nbhd[y]), popcount(closure(Y, 1 << y))) for y in range(Y.n)]
    if sorted(degx) != sorted(degy):
        return None
    order = sorted(range(X.n), key=lambda x: degx[x])
    f = [-1] * X.n
    used = [False] * Y.n

    def consistent(x: int, y: int) -> bool:
        for x2 in range(X.n):
            y2 = f[x2]
            if y2 < 0:
                continue
            if bool(sx[x] >> x2 & 1) != bool(sy[y] >> y2 & 1):
                return False
            if bool(sx[x2] >> x & 1) != bool(sy[y2] >> y & 1):
                return False
        return True

    def rec(i: int) -> bool:
        if i == X.n:
            return True
        x = order[i]
        for y in range(Y.n):
            if used[y] or degy[y] != degx[x] or not consistent(x, y):
                continue
            f[x] = y
            used[y] = True
            if rec(i + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    if not rec(0):
        return None
    table = tuple(f)
    h = PointMap(X, Y, table)
    if not (is_continuous(h) and {h.image(u) for u in X.opens} == Y.open_set):
        return None
    return table


def homeomorphic(X: FinSpace, Y: FinSpace) -> bool:
    return find_homeomorphism(X, Y) is not None
