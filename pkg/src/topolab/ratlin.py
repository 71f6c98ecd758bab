"""Exact rational subspaces of ``Q^k`` and subalgebra closure.

Used as an independent oracle for the partition picture of function
algebras: everything here works with explicit vectors of ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def rref(rows: Iterable[Sequence]) -> tuple[Vector, ...]:
    """Reduced row echelon form with zero rows dropped; canonical per span."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(mat)) if mat[r][col] != 0), None)
        if pr is None:
            continue
        mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
        piv = mat[pivot_row][col]
        mat[pivot_row] = [v / piv for v in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pivot_row])


class Subspace:
    """A subspace of ``Q^k`` held as its RREF basis."""

    def __init__(self, dim: int, rows: Iterable[Sequence] = ()):
        self.dim = dim
        self.basis = rref(rows)
        for b in self.basis:
            if len(b) != dim:
                raise ValueError("vector length does not match ambient dimension")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, rank={self.rank})"

    def contains(self, v: Sequence) -> bool:
        return Subspace(self.dim, self.basis + (vec(v),)).rank == self.rank

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.dim, self.basis + other.basis)

    def intersection_rank(self, other: "Subspace") -> int:
        return self.rank + other.rank - (self + other).rank


def pointwise_product(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) * Fraction(y) for x, y in zip(a, b))


def generated_algebra(k: int, generators: Iterable[Sequence], unital: bool = True) -> Subspace:
    """Smallest subspace of ``Q^k`` containing the generators (and the unit
    when ``unital``) that is closed under pointwise products.

    Values are rational, so the involution (complex conjugation) acts
    trivially and closure under it is automatic.
    """
    rows = [vec(g) for g in generators]
    if unital:
        rows.append(vec([1] * k))
    space = Subspace(k, rows)
    while True:
        basis = space.basis
        prods = [pointwise_product(a, b) for i, a in enumerate(basis) for b in basis[i:]]
        bigger = Subspace(k, basis + tuple(prods))
        if bigger.rank == space.rank:
            return space
        space = bigger


def indicator(k: int, mask: int) -> Vector:
    return tuple(Fraction(1) if mask >> i & 1 else Fraction(0) for i in range(k))
