"""Closed ideals of C_0(X) through the open-set dictionary.

An open set ``U`` stands for the ideal of functions vanishing off ``U``.
The dictionary predicates (discreteness of ``U``, density of ``U``) are
evaluated on any finite space.  When ``X`` is discrete the ideals are also
built concretely as subspaces of ``Q^n`` and the algebraic definitions are
checked literally against the dictionary.

The algebraic statements this mirrors assume a locally compact Hausdorff
space, and a finite Hausdorff space is discrete.  On non-Hausdorff spaces
the dictionary verdicts are still reported, together with
:func:`hypothesis_report`, instead of being treated as errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classify import is_dense, isolated_points, separation
from .discretize import compare, has_discretization, weak_lattice
from .errors import InternalInvariantViolation, NotOpen
from .fintop import FinSpace, is_discrete, members, subspace
from .lattice import FiniteLattice, is_order_isomorphism, set_label
from .ratlin import Subspace, generated_algebra, indicator

CONCRETE_CAP = 8


@dataclass(frozen=True)
class IdealDescriptor:
    space: FinSpace = field(repr=False)
    support: int
    concrete: Subspace | None = field(default=None, repr=False, compare=False)

    def __str__(self) -> str:
        return f"I({set_label(self.support)})"


def _concrete_applies(X: FinSpace) -> bool:
    return is_discrete(X) and X.n <= CONCRETE_CAP


def vanishing_ideal(n: int, support: int) -> Subspace:
    """Vectors in ``Q^n`` that are zero at every point outside ``support``.

    Built as the solution space of the coordinate constraints ``v_x = 0``.
    """
    free = [x for x in range(n) if support >> x & 1]
    return Subspace(n, [indicator(n, 1 << x) for x in free])


def _require_open(X: FinSpace, U: int) -> None:
    if not X.is_open(U):
        raise NotOpen(f"{set_label(U)} is not open")


def ideal_of_open(X: FinSpace, U: int) -> IdealDescriptor:
    _require_open(X, U)
    concrete = vanishing_ideal(X.n, U) if _concrete_applies(X) else None
    return IdealDescriptor(X, U, concrete)


def open_of_ideal(d: IdealDescriptor) -> int:
    """Points where some member of the ideal is nonzero."""
    if d.concrete is None:
        return d.support
    out = 0
    for row in d.concrete.basis:
        for x, v in enumerate(row):
            if v != 0:
                out |= 1 << x
    return out


def ideal_le(a: IdealDescriptor, b: IdealDescriptor) -> bool:
    if a.concrete is not None and b.concrete is not None:
        return a.concrete.issubspace(b.concrete)
    return a.support & ~b.support == 0


# ---------------------------------------------------------------------------
# generated by minimal projections


def minimal_projections(J: Subspace) -> list[tuple]:
    """Minimal nonzero 0/1 vectors in ``J`` (ordered by support inclusion)."""
    n = J.dim
    projs = [m for m in range(1, 1 << n) if J.contains(indicator(n, m))]
    minimal = [p for p in projs if not any(q != p and q & ~p == 0 for q in projs)]
    return [indicator(n, p) for p in minimal]


def is_gmp_concrete(X: FinSpace, U: int) -> bool:
    """Whether the concrete ideal of ``U`` equals the *-algebra generated by
    its minimal projections (exact span/product closure)."""
    J = vanishing_ideal(X.n, U)
    gens = minimal_projections(J)
    return generated_algebra(X.n, gens, unital=False) == J


def is_gmp(X: FinSpace, U: int) -> bool:
    """The ideal of ``U`` is generated by its minimal projections.

    Dictionary form: ``U`` is a discrete subspace.
    """
    _require_open(X, U)
    verdict = is_discrete(subspace(X, U)[0])
    if _concrete_applies(X) and is_gmp_concrete(X, U) != verdict:
        raise InternalInvariantViolation(f"gmp verdicts disagree on {set_label(U)}")
    return verdict


def is_essential_by_opens(X: FinSpace, U: int) -> bool:
    return all(U & V for V in X.opens if V)


def is_essential_concrete(X: FinSpace, U: int) -> bool:
    """Literal check over all ideals ``K`` of ``Q^n``: ``K != 0`` implies
    ``J & K != 0``."""
    J = vanishing_ideal(X.n, U)
    for V in range(1, 1 << X.n):
        K = vanishing_ideal(X.n, V)
        if J.intersection_rank(K) == 0:
            return False
    return True


def is_essential(X: FinSpace, U: int) -> bool:
    """The ideal of ``U`` meets every nonzero ideal; dictionary form: ``U`` is dense."""
    _require_open(X, U)
    verdict = is_dense(X, U)
    if is_essential_by_opens(X, U) != verdict:
        raise InternalInvariantViolation(f"essential verdicts disagree on {set_label(U)}")
    if _concrete_applies(X) and is_essential_concrete(X, U) != verdict:
        raise InternalInvariantViolation(f"concrete essential verdict disagrees on {set_label(U)}")
    return verdict


def gmp_opens(X: FinSpace) -> list[int]:
    return [U for U in X.opens if is_gmp(X, U)]


def ideal_lattice(X: FinSpace) -> FiniteLattice:
    """Ideals generated by minimal projections, under inclusion."""
    els = tuple(ideal_of_open(X, U) for U in gmp_opens(X))
    return FiniteLattice(els, ideal_le, tuple(str(d) for d in els))


@dataclass
class IMapRecord:
    ok: bool
    weak: list[int]
    gmp: list[int]
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def I_map(X: FinSpace) -> IMapRecord:
    """Check that weak discretizations correspond, order-isomorphically, to
    the ideals generated by their minimal projections."""
    Dw = weak_lattice(X)
    ideals = ideal_lattice(X)
    rec = IMapRecord(True, sorted(d.image for d in Dw.elements), sorted(d.support for d in ideals.elements))
    if rec.weak != rec.gmp:
        rec.ok = False
        rec.counterexample = {"reason": "weak discretizations and gmp ideals differ"}
        return rec
    by_support = {d.support: d for d in ideals.elements}
    mapping = lambda d: by_support[ideal_of_open(X, d.image).support]
    for a in Dw.elements:
        for b in Dw.elements:
            le = compare(a, b) in ("lt", "eq")
            if le != ideal_le(mapping(a), mapping(b)):
                rec.ok = False
                rec.counterexample = {"reason": "order mismatch", "a": members(a.image), "b": members(b.image)}
                return rec
    if not is_order_isomorphism(Dw, ideals, mapping) or not ideals.is_lattice():
        rec.ok = False
        rec.counterexample = {"reason": "not a lattice isomorphism"}
    return rec


def essential_gmp_opens(X: FinSpace) -> list[int]:
    return [U for U in gmp_opens(X) if is_essential(X, U)]


def essential_gmp(X: FinSpace) -> IdealDescriptor | None:
    """The essential ideal generated by minimal projections, if any.

    It is unique whenever it exists, and then its support is the (dense) set
    of isolated points.
    """
    found = essential_gmp_opens(X)
    if len(found) > 1:
        raise InternalInvariantViolation("more than one essential gmp ideal")
    if separation(X).T1 and bool(found) != has_discretization(X)[0]:
        raise InternalInvariantViolation("essential gmp existence differs from having a discretization")
    if not found:
        return None
    U = found[0]
    if U != isolated_points(X) or not is_dense(X, U):
        raise InternalInvariantViolation("essential gmp ideal is not supported on the isolated points")
    return ideal_of_open(X, U)


def hypothesis_report(X: FinSpace) -> dict:
    """Compare the ideal-side verdict with the discretization side; the two
    are only guaranteed to match on Hausdorff spaces."""
    hausdorff = separation(X).T2
    ideal = essential_gmp(X)
    disc = has_discretization(X)[0]
    return {
        "hausdorff": hausdorff,
        "essential_gmp": None if ideal is None else members(ideal.support),
        "has_discretization": disc,
        "agree": (ideal is not None) == disc,
        "hypothesis_violated": not hausdorff,
    }


def generated_by_minimal_projections(X: FinSpace) -> bool:
    """Whether all of C_0(X) is generated by its minimal projections.

    Concrete on discrete ``X``; otherwise the dictionary verdict (``X``
    discrete), which is ``False``.
    """
    if _concrete_applies(X):
        return is_gmp_concrete(X, X.full)
    return is_discrete(X)


def generated_by_projections(X: FinSpace) -> bool:
    """Whether C_0(X) is generated by projections; dictionary form is
    zero-dimensionality, checked concretely on discrete ``X``."""
    if _concrete_applies(X):
        n = X.n
        full = Subspace(n, [indicator(n, 1 << x) for x in range(n)])
        projs = [indicator(n, m) for m in range(1, 1 << n)]
        return generated_algebra(n, projs, unital=False) == full
    return separation(X).zero_dimensional
