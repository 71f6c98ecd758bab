"""Property suites run over exhaustive and seeded random corpora.

Each suite returns a :class:`SuiteResult` listing every counterexample it
found.  Output is deterministic for a given corpus.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from . import classify as C
from . import compactify as K
from . import discretize as D
from . import ideals as I
from . import symdual as S
from .fintop import (
    FinSpace,
    antidiscrete,
    discrete,
    enumerate_partitions,
    enumerate_topologies,
    enumerate_topologies_bruteforce,
    inclusion,
    is_discrete,
    members,
    random_space,
    topology_violation,
)
from .io import space_to_json
from .lattice import find_order_isomorphism, powerset_lattice

THRPRE_N_MAX = 6
CONCRETE_N_MAX = 6


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, X: FinSpace | None = None, **witness) -> None:
        entry = {"check": check}
        if X is not None:
            entry["space"] = space_to_json(X)
        entry.update(witness)
        self.failures.append(entry)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.checked} checked, {len(self.failures)} failures)"


@dataclass(frozen=True)
class Corpus:
    spaces: tuple[FinSpace, ...]
    exhaustive: int
    random_count: int
    n_max: int
    seed: int


def build_corpus(exhaustive: int = 4, random_count: int = 0, n_max: int = 8, seed: int = 0) -> Corpus:
    """All topologies on ``0..exhaustive`` points, then ``random_count``
    seeded random spaces with ``1..n_max`` points."""
    spaces = []
    for n in range(exhaustive + 1):
        spaces.extend(enumerate_topologies(n))
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(1, n_max)
        spaces.append(random_space(n, rng.getrandbits(63)))
    return Corpus(tuple(spaces), exhaustive, random_count, n_max, seed)


# ---------------------------------------------------------------------------
# suites


def suite_enumeration(max_n: int = 4) -> SuiteResult:
    res = SuiteResult("enumeration")
    for n in range(max_n + 1):
        fast = list(enumerate_topologies(n))
        slow = list(enumerate_topologies_bruteforce(n))
        res.checked += 1
        if fast != slow:
            res.fail("optimized enumeration differs from brute force", n=n, fast=len(fast), brute=len(slow))
    return res


def suite_rose(spaces: Iterable[FinSpace]) -> SuiteResult:
    """Three characterisations of alpha-scatteredness, scatteredness by
    derivatives against brute force, and the alpha-topology against the
    ``U - N`` oracle."""
    res = SuiteResult("rose")
    for X in spaces:
        res.checked += 1
        fast = C.is_alpha_scattered(X)
        by_def = C.is_alpha_scattered_by_definition(X)
        somewhere = C.somewhere_dense_condition(X)
        if not fast == by_def == somewhere:
            res.fail("alpha-scattered characterisations disagree", X, dense_isolated=fast, definition=by_def, somewhere_dense=somewhere)
        scat = C.is_scattered(X)
        if scat != C.is_scattered_bruteforce(X):
            res.fail("derivative and brute-force scatteredness disagree", X)
        if scat and not fast:
            res.fail("scattered but not alpha-scattered", X)
        alpha = C.alpha_topology(X).alpha_space
        if alpha != C.alpha_topology_oracle(X):
            res.fail("alpha-topology fast path differs from U-N oracle", X)
        if topology_violation(alpha.n, alpha.opens):
            res.fail("alpha-topology is not a topology", X)
        if not X.open_set <= alpha.open_set:
            res.fail("topology not contained in its alpha-topology", X)
    return res


def suite_density(spaces: Iterable[FinSpace], antidiscrete_max: int = 6) -> SuiteResult:
    """Discretization properties: isolated points for T1 spaces, the density
    equation, weak discretizations as the powerset of isolated points, and
    the T1 characterisation of having a discretization."""
    res = SuiteResult("density")
    for X in spaces:
        res.checked += 1
        sep = C.separation(X)
        delta = C.isolated_points(X)
        found = D.all_discretizations(X)
        d = D.density(X)
        for disc in found:
            if sep.T1 and disc.image != delta:
                res.fail("full discretization of a T1 space is not the isolated points", X, image=members(disc.image))
            if sep.T1 and not D.classify_pair(inclusion(X, disc.image)).weak:
                res.fail("full discretization of a T1 space is not weak", X, image=members(disc.image))
            if bin(disc.image).count("1") != d:
                res.fail("discretization size differs from density", X, image=members(disc.image), density=d)
        if sep.T1:
            has = D.has_discretization(X)[0]
            if not has == C.is_alpha_scattered(X) == C.is_dense(X, delta) == bool(found):
                res.fail("T1 discretization characterisation fails", X)
            if len(found) > 1:
                res.fail("T1 space with more than one discretization", X)
        weak = D.weak_lattice(X)
        if sorted(w.image for w in weak.elements) != sorted(w.image for w in D.weak_discretizations_bruteforce(X)):
            res.fail("weak discretizations differ from subsets of isolated points", X)
        if find_order_isomorphism(weak, powerset_lattice(delta)) is None or not weak.is_lattice():
            res.fail("weak discretization lattice is not the powerset of isolated points", X)
    for n in range(2, antidiscrete_max + 1):
        res.checked += 1
        X = antidiscrete(n)
        found = D.all_discretizations(X)
        if sorted(f.image for f in found) != [1 << i for i in range(n)]:
            res.fail("anti-discrete space does not have one discretization per point", X, found=len(found))
    return res


def suite_thrpre(spaces: Iterable[FinSpace], n_max: int = THRPRE_N_MAX) -> SuiteResult:
    """Hausdorff quotients against subalgebras, separation of points, the
    upward closure of weak compactifications, and the span-closure oracle
    for partition algebras."""
    res = SuiteResult("thrpre")
    for X in spaces:
        if X.n > n_max:
            continue
        res.checked += 1
        rec = K.verify_thrpre(X)
        if not rec:
            res.fail("F is not an order isomorphism", X, detail=rec.counterexample)
            continue
        quots = K.hausdorff_quotients(X)
        for pc in quots:
            A = K.F_map(X, pc)
            sep = K.separation_predicates(X, A)
            if pc.is_weak != sep.separates_points:
                res.fail("injectivity differs from point separation", X, partition=list(pc.partition.block_of))
            if pc.is_compactification != sep.separates_points_and_closed_sets:
                res.fail("embedding differs from point/closed-set separation", X, partition=list(pc.partition.block_of))
        for a in quots:
            for b in quots:
                if K.compactification_le(b, a) and b.is_weak and not a.is_weak:
                    res.fail("weak compactifications not upward closed", X)
        if is_discrete(X):
            weak = [pc for pc in quots if pc.is_weak]
            if len(weak) != 1 or weak[0].partition.num_blocks != X.n:
                res.fail("finite discrete space without a unique weak compactification", X)
    for k in range(0, 5):
        res.checked += 1
        if not span_closure_matches(k):
            res.fail("span closure differs from partition algebras", k=k)
    return res


def span_closure_matches(k: int) -> bool:
    """For every partition of ``k`` points, the algebra generated by one
    generator taking a distinct value per block equals the algebra of
    functions constant on the blocks."""
    for P in enumerate_partitions(k):
        gen = [P.block_of[i] + 1 for i in range(k)]
        if K.subalgebra_by_span_closure(k, [gen]) != K.partition_subspace(P):
            return False
        inds = [[int(P.block_of[i] == b) for i in range(k)] for b in range(P.num_blocks)]
        if K.subalgebra_by_span_closure(k, inds) != K.partition_subspace(P):
            return False
    return True


def suite_ideals(spaces: Iterable[FinSpace], concrete_max: int = CONCRETE_N_MAX) -> SuiteResult:
    res = SuiteResult("ideals")
    extra = [discrete(n) for n in range(concrete_max + 1)]
    for X in list(spaces) + extra:
        res.checked += 1
        rec = I.I_map(X)
        if not rec:
            res.fail("weak discretizations not isomorphic to gmp ideals", X, detail=rec.counterexample)
        try:
            ess = I.essential_gmp_opens(X)
            I.essential_gmp(X)
        except Exception as exc:  # invariant violations carry the diagnosis
            res.fail(f"essential gmp: {exc}", X)
            continue
        if len(ess) > 1:
            res.fail("more than one essential gmp ideal", X)
        if C.separation(X).T1 and bool(ess) != C.is_dense(X, C.isolated_points(X)):
            res.fail("T1 essential gmp existence differs from density of isolated points", X)
        delta = C.isolated_points(X)
        for U in X.opens:
            if I.is_gmp(X, U) and U & ~delta:
                res.fail("gmp open set outside the isolated points", X, U=members(U))
        if I.generated_by_minimal_projections(X) != is_discrete(X):
            res.fail("generation by minimal projections differs from discreteness", X)
        if is_discrete(X):
            for U in X.opens:
                for V in X.opens:
                    a, b = I.ideal_of_open(X, U), I.ideal_of_open(X, V)
                    if (U & ~V == 0) != I.ideal_le(a, b):
                        res.fail("open-set dictionary is not an order isomorphism", X, U=members(U), V=members(V))
                if I.open_of_ideal(I.ideal_of_open(X, U)) != U:
                    res.fail("dictionary maps are not inverse", X, U=members(U))
    return res


def suite_duality(
    spaces: Iterable[FinSpace],
    exhaustive_max: int = 3,
    random_count: int = 100,
    random_max: int = 6,
    seed: int = 0,
) -> SuiteResult:
    res = SuiteResult("duality")
    objects = [discrete(n) for n in range(exhaustive_max + 1)]
    maps = [m for X in objects for Y in objects for m in D.all_maps(X, Y)]
    res.checked += len(maps)
    rec = S.duality_check(objects, maps)
    if not rec:
        res.fail("duality squares fail on exhaustive maps", failures=rec.failures[:5])
    rng = random.Random(seed)
    sample = S.random_discrete_maps(rng, random_max, random_count)
    objs = sorted({m.domain for m in sample} | {m.codomain for m in sample}, key=lambda X: X.n)
    res.checked += len(sample)
    rec = S.duality_check(objs, sample)
    if not rec:
        res.fail("duality squares fail on random maps", failures=rec.failures[:5])
    for X in spaces:
        res.checked += 1
        if C.separation(X).stonean != is_discrete(X):
            res.fail("finite Stonean differs from finite discrete", X)
    for X in objects:
        for Y in objects:
            if not C.separation(Y).T2:
                continue
            for f in D.all_maps(X, Y):
                res.checked += 1
                comp, disc = D.compactification_discretization_duality(f)
                if comp != disc:
                    res.fail("compactification and discretization verdicts differ", f=list(f.table), n=X.n, m=Y.n)
    return res


SUITES = ("rose", "density", "thrpre", "ideals", "duality")


def run_suites(names: Iterable[str], corpus: Corpus) -> list[SuiteResult]:
    names = list(names)
    if "all" in names:
        names = ["enumeration", *SUITES]
    out = []
    for name in names:
        if name == "enumeration":
            out.append(suite_enumeration(min(corpus.exhaustive, 4)))
        elif name == "rose":
            out.append(suite_rose(corpus.spaces))
        elif name == "density":
            out.append(suite_density(corpus.spaces))
        elif name == "thrpre":
            out.append(suite_thrpre(corpus.spaces))
        elif name == "ideals":
            out.append(suite_ideals(corpus.spaces))
        elif name == "duality":
            out.append(suite_duality(corpus.spaces, seed=corpus.seed))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
