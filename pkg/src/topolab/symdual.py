"""Two symbolic countable spaces and the isolated-points / Stone-Cech duality.

The naturals here are ``0, 1, 2, ...``.  ``NAT_PLUS_INFINITY`` is the
one-point compactification of the discrete naturals (think of ``n`` as
``1/(n+1)`` and of infinity as ``0``).  Its subsets are described by
:class:`SymSet`: a periodic part given by residue classes modulo a common
period, corrected by finitely many added and removed naturals, plus a flag
for the point at infinity.  That family is a Boolean algebra containing all
finite and cofinite sets as well as the even numbers.

Stone-Cech compactifications of infinite discrete spaces are not modelled.
On finite discrete spaces ``beta`` is the identity, which is the slice where
the duality can be checked by computation.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .classify import is_alpha_scattered, isolated_points, separation
from .errors import InvalidSet, NotACMorphism, OutOfComputableSlice
from .fintop import FinSpace, PointMap, discrete, identity_map, is_continuous, is_discrete, subspace


class SymSpace(enum.Enum):
    NAT_DISCRETE = "N"
    NAT_PLUS_INFINITY = "N+inf"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class SymSet:
    """``{x : x mod period in residues, or x in plus} - minus``, plus
    optionally the point at infinity.

    Instances are kept in normal form (smallest period, ``plus`` disjoint
    from the periodic part, ``minus`` inside it), so equality of sets is
    equality of instances.  Build them with :meth:`make`.
    """

    period: int = 1
    residues: frozenset[int] = frozenset()
    plus: frozenset[int] = frozenset()
    minus: frozenset[int] = frozenset()
    inf: bool = False

    @classmethod
    def make(
        cls,
        residues: Iterable[tuple[int, int]] = (),
        plus: Iterable[int] = (),
        minus: Iterable[int] = (),
        inf: bool = False,
    ) -> "SymSet":
        """From ``(a, m)`` residue classes ``{x : x = a mod m}`` with finite
        corrections ``plus`` (added) and ``minus`` (removed afterwards)."""
        res = list(residues)
        period = 1
        for a, m in res:
            if m <= 0:
                raise InvalidSet(f"modulus {m} must be positive")
            period = _lcm(period, m)
        rs = {r for a, m in res for r in range(period) if r % m == a % m}
        plus, minus = set(plus), set(minus)
        for x in plus | minus:
            if not isinstance(x, int) or x < 0:
                raise InvalidSet(f"{x!r} is not a natural number")
        member = lambda x: (x % period in rs or x in plus) and x not in minus
        return cls._normal(period, rs, plus | minus, member, bool(inf))

    @classmethod
    def _normal(cls, period, rs, touched, member, inf) -> "SymSet":
        # shrink to the least period of the residue set
        for d in (d for d in range(1, period + 1) if period % d == 0):
            folded = {r % d for r in rs}
            if all((r % d in folded) == (r in rs) for r in range(period)):
                rs = folded
                period = d
                break
        plus = frozenset(x for x in touched if member(x) and x % period not in rs)
        minus = frozenset(x for x in touched if not member(x) and x % period in rs)
        return cls(period, frozenset(rs), plus, minus, inf)

    @classmethod
    def finite(cls, xs: Iterable[int], inf: bool = False) -> "SymSet":
        return cls.make(plus=xs, inf=inf)

    @classmethod
    def naturals(cls, inf: bool = False) -> "SymSet":
        return cls.make(residues=[(0, 1)], inf=inf)

    @classmethod
    def evens(cls) -> "SymSet":
        return cls.make(residues=[(0, 2)])

    @classmethod
    def cofinite(cls, missing: Iterable[int], inf: bool = False) -> "SymSet":
        return cls.make(residues=[(0, 1)], minus=missing, inf=inf)

    def __contains__(self, x) -> bool:
        if x == "inf":
            return self.inf
        return (x % self.period in self.residues or x in self.plus) and x not in self.minus

    @property
    def is_finite_trace(self) -> bool:
        return not self.residues

    @property
    def is_cofinite_trace(self) -> bool:
        return len(self.residues) == self.period

    def _binary(self, other: "SymSet", op) -> "SymSet":
        period = _lcm(self.period, other.period)
        rs = {
            r for r in range(period)
            if op(r % self.period in self.residues, r % other.period in other.residues)
        }
        touched = self.plus | self.minus | other.plus | other.minus
        member = lambda x: op(x in self, x in other)
        return SymSet._normal(period, rs, touched, member, op(self.inf, other.inf))

    def __or__(self, other: "SymSet") -> "SymSet":
        return self._binary(other, lambda a, b: a or b)

    def __and__(self, other: "SymSet") -> "SymSet":
        return self._binary(other, lambda a, b: a and b)

    def __sub__(self, other: "SymSet") -> "SymSet":
        return self._binary(other, lambda a, b: a and not b)

    def complement(self, space: SymSpace = SymSpace.NAT_PLUS_INFINITY) -> "SymSet":
        whole = SymSet.naturals(inf=space is SymSpace.NAT_PLUS_INFINITY)
        return whole - self

    def issubset(self, other: "SymSet") -> bool:
        return self - other == SymSet()

    def to_json(self) -> dict:
        return {
            "residues": [[r, self.period] for r in sorted(self.residues)],
            "plus": sorted(self.plus),
            "minus": sorted(self.minus),
            "inf": self.inf,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymSet":
        try:
            return cls.make(
                residues=[(int(a), int(m)) for a, m in data.get("residues", [])],
                plus=data.get("plus", []),
                minus=data.get("minus", []),
                inf=bool(data.get("inf", False)),
            )
        except (TypeError, ValueError) as exc:
            raise InvalidSet(str(exc)) from exc


def _check(X: SymSpace, S: SymSet) -> None:
    if not isinstance(S, SymSet):
        raise InvalidSet("not a SymSet")
    if X is SymSpace.NAT_DISCRETE and S.inf:
        raise InvalidSet("the discrete naturals have no point at infinity")


def sym_is_open(X: SymSpace, S: SymSet) -> bool:
    _check(X, S)
    if X is SymSpace.NAT_DISCRETE or not S.inf:
        return True
    return S.is_cofinite_trace


def sym_closure(X: SymSpace, S: SymSet) -> SymSet:
    """Naturals are isolated; infinity is a limit of every infinite set."""
    _check(X, S)
    if X is SymSpace.NAT_DISCRETE:
        return S
    return S | SymSet(inf=not S.is_finite_trace)


def sym_interior(X: SymSpace, S: SymSet) -> SymSet:
    return sym_closure(X, S.complement(X)).complement(X)


def sym_isolated(X: SymSpace) -> SymSet:
    return SymSet.naturals()


def sym_whole(X: SymSpace) -> SymSet:
    return SymSet.naturals(inf=X is SymSpace.NAT_PLUS_INFINITY)


def sym_is_dense(X: SymSpace, S: SymSet) -> bool:
    return sym_closure(X, S) == sym_whole(X)


def sym_is_alpha_scattered(X: SymSpace) -> bool:
    return sym_is_dense(X, sym_isolated(X))


@dataclass(frozen=True)
class StoneanWitness:
    U: SymSet
    closure: SymSet
    closure_is_open: bool
    alpha_scattered: bool
    verdict: str


def not_stonean_witness(U: SymSet | None = None) -> StoneanWitness:
    """An open set of the one-point compactification whose closure is not
    open; defaults to the even numbers."""
    X = SymSpace.NAT_PLUS_INFINITY
    if U is None:
        U = SymSet.evens()
    if not sym_is_open(X, U):
        raise InvalidSet("witness must be open")
    cl = sym_closure(X, U)
    cl_open = sym_is_open(X, cl)
    verdict = "closure is open; no conclusion" if cl_open else "not extremally disconnected, so not Stonean"
    return StoneanWitness(U, cl, cl_open, sym_is_alpha_scattered(X), verdict)


def sym_beta_delta_report(X: SymSpace) -> dict:
    """What can be said about ``beta(delta(X))`` without modelling ultrafilters."""
    w = not_stonean_witness()
    return {
        "isolated": sym_isolated(X).to_json(),
        "alpha_scattered": sym_is_alpha_scattered(X),
        "stonean": False,
        "representable": False,
        "reason": (
            "beta of an infinite discrete space is not modelled"
            if X is SymSpace.NAT_DISCRETE
            else "alpha-scattered but not Stonean (closure of the evens is not open), "
                 "so beta(delta(X)) is not X; " + w.verdict
        ),
    }


# ---------------------------------------------------------------------------
# the isolated-points functor and beta on finite discrete spaces


def is_c_morphism(f: PointMap) -> bool:
    """Continuous and sending isolated points to isolated points."""
    if not is_continuous(f):
        return False
    return f.image(isolated_points(f.domain)) & ~isolated_points(f.codomain) == 0


def delta_functor(X: FinSpace, f: PointMap) -> tuple[FinSpace, PointMap]:
    """``delta(X)`` as a discrete space and the restriction of ``f`` to it,
    renumbered into ``delta(f.codomain)``."""
    if f.domain != X:
        raise NotACMorphism("map does not start at the given space")
    if not is_c_morphism(f):
        raise NotACMorphism("map is not continuous or moves an isolated point off the isolated points")
    dX, ix = subspace(X, isolated_points(X))
    dY, iy = subspace(f.codomain, isolated_points(f.codomain))
    pos = {old: new for new, old in enumerate(iy)}
    return dX, PointMap(dX, dY, tuple(pos[f(old)] for old in ix))


def delta_object(X: FinSpace) -> FinSpace:
    return subspace(X, isolated_points(X))[0]


def in_computable_slice(X: FinSpace) -> bool:
    """Finite, Stonean and alpha-scattered; for finite spaces that is
    exactly discreteness."""
    sep = separation(X)
    return sep.stonean and is_alpha_scattered(X)


def beta_finite(X: FinSpace) -> FinSpace:
    """Stone-Cech compactification of a finite discrete space (itself)."""
    if not is_discrete(X):
        raise OutOfComputableSlice("beta is only computed on finite discrete spaces")
    return X


def beta_map(f: PointMap) -> PointMap:
    """The unique continuous extension of ``f`` to the compactifications;
    on finite discrete spaces that is ``f``."""
    beta_finite(f.domain)
    beta_finite(f.codomain)
    return f


@dataclass
class FunctorCheckRecord:
    objects: list[FinSpace]
    morphisms: list[PointMap]
    squares_ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.squares_ok


def duality_check(objects: Sequence[FinSpace], morphisms: Sequence[PointMap]) -> FunctorCheckRecord:
    """Check ``delta . beta = id`` and ``beta . delta = id`` on objects and
    the naturality squares of both comparison maps on every morphism."""
    for X in objects:
        if not is_discrete(X):
            raise OutOfComputableSlice("objects must be finite discrete spaces")
        if not in_computable_slice(X):
            raise OutOfComputableSlice("finite discrete space failed the Stonean/alpha-scattered flags")
    rec = FunctorCheckRecord(list(objects), list(morphisms), True)
    for X in objects:
        if delta_object(beta_finite(X)) != X:
            rec.failures.append(f"delta(beta(X)) != X for {X}")
        if beta_finite(delta_object(X)) != X:
            rec.failures.append(f"beta(delta(X)) != X for {X}")
    for f in morphisms:
        if not is_c_morphism(f):
            rec.failures.append(f"{f.table} is not a morphism")
            continue
        X, Y = f.domain, f.codomain
        # xi_X: X -> delta(beta(X)) is beta_X onto its range;
        # eta_X: X -> beta(delta(X)) extends the inclusion of delta(X)
        xi_X, xi_Y = identity_map(X), identity_map(Y)
        _, db_f = delta_functor(beta_finite(X), beta_map(f))
        if xi_X.then(db_f).table != f.then(xi_Y).table:
            rec.failures.append(f"xi square fails for {f.table}")
        eta_X, eta_Y = identity_map(X), identity_map(Y)
        _, d_f = delta_functor(X, f)
        bd_f = beta_map(d_f)
        if eta_X.then(bd_f).table != f.then(eta_Y).table:
            rec.failures.append(f"eta square fails for {f.table}")
    rec.squares_ok = not rec.failures
    return rec


def check_delta_functoriality(f: PointMap, g: PointMap) -> bool:
    """``delta(id) = id`` and ``delta(g . f) = delta(g) . delta(f)``."""
    X = f.domain
    dX, did = delta_functor(X, identity_map(X))
    if did != identity_map(dX):
        return False
    _, df = delta_functor(X, f)
    _, dg = delta_functor(f.codomain, g)
    _, dgf = delta_functor(X, f.then(g))
    return dgf == df.then(dg)


def random_discrete_maps(rng, n_max: int, count: int):
    """Seeded sample of maps between finite discrete spaces."""
    out = []
    for _ in range(count):
        a, b = rng.randint(1, n_max), rng.randint(1, n_max)
        X, Y = discrete(a), discrete(b)
        out.append(PointMap(X, Y, tuple(rng.randrange(b) for _ in range(a))))
    return out

