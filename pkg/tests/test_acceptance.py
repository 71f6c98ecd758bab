"""The twelve acceptance criteria, one test each.

Each test records a ``PASS``/``FAIL`` line; the lines are printed at the end
of the pytest run (see ``conftest.py``) and when this file is executed
directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from topolab import classify as C  # noqa: E402
from topolab import compactify as K  # noqa: E402
from topolab import discretize as D  # noqa: E402
from topolab import ideals as I  # noqa: E402
from topolab import symdual as SD  # noqa: E402
from topolab.fintop import (  # noqa: E402
    antidiscrete,
    discrete,
    enumerate_partitions,
    enumerate_topologies,
    enumerate_topologies_bruteforce,
    is_discrete,
    topology_violation,
)
from topolab.lattice import find_order_isomorphism, powerset_lattice  # noqa: E402
from topolab.verify import build_corpus  # noqa: E402

RESULTS: dict[int, str] = {}
CORPUS_SEED = 20240601


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: {detail}"
    assert ok, RESULTS[number]


@lru_cache(maxsize=None)
def corpus():
    """All topologies on at most 4 points plus 1000 seeded random spaces on
    at most 8 points."""
    return build_corpus(exhaustive=4, random_count=1000, n_max=8, seed=CORPUS_SEED).spaces


@lru_cache(maxsize=None)
def exhaustive4():
    return tuple(X for n in range(5) for X in enumerate_topologies(n))


def test_01_enumeration_oracle():
    fast = [sum(1 for _ in enumerate_topologies(n)) for n in range(5)]
    slow, match = [], True
    t0 = time.perf_counter()
    for n in range(5):
        tn = time.perf_counter()
        brute = list(enumerate_topologies_bruteforce(n))
        if n == 4:
            t4 = time.perf_counter() - tn
        slow.append(len(brute))
        match &= brute == list(enumerate_topologies(n))
    total = time.perf_counter() - t0
    ok = fast == slow and match and t4 < 10
    record(1, "enumeration oracle", ok, f"counts {fast} vs brute force {slow}; n=4 filter {t4:.2f}s (limit 10s, all {total:.2f}s)")


def test_02_alpha_scattered_equivalence():
    spaces = corpus()
    t0 = time.perf_counter()
    bad = [
        X for X in spaces
        if not C.is_alpha_scattered(X) == C.is_alpha_scattered_by_definition(X) == C.somewhere_dense_condition(X)
    ]
    elapsed = time.perf_counter() - t0
    record(2, "alpha-scattered <=> somewhere-dense subspaces have isolated points <=> isolated points dense",
           not bad and elapsed < 60, f"{len(spaces)} spaces, {len(bad)} counterexamples, {elapsed:.2f}s (limit 60s)")


def test_03_scatteredness():
    spaces = corpus()
    bad = [X for X in spaces if C.is_scattered(X) != C.is_scattered_bruteforce(X)]
    record(3, "derivative scatteredness = brute force", not bad, f"{len(spaces)} spaces, {len(bad)} mismatches")


def test_04_alpha_topology():
    spaces = corpus()
    mismatch = axioms = 0
    for X in spaces:
        A = C.alpha_topology(X).alpha_space
        mismatch += A != C.alpha_topology_oracle(X)
        axioms += topology_violation(A.n, A.opens) is not None
    record(4, "alpha-topology fast path = {U - N} oracle, topology axioms",
           mismatch == 0 and axioms == 0, f"{len(spaces)} spaces, {mismatch} mismatches, {axioms} axiom failures")


def test_05_weak_discretizations_powerset():
    bad = 0
    for X in exhaustive4():
        L = D.weak_lattice(X)
        brute = sorted(d.image for d in D.weak_discretizations_bruteforce(X))
        ok = (
            sorted(d.image for d in L.elements) == brute
            and L.is_lattice()
            and find_order_isomorphism(L, powerset_lattice(C.isolated_points(X))) is not None
        )
        bad += not ok
    record(5, "weak discretizations = powerset of isolated points as lattices", bad == 0,
           f"{len(exhaustive4())} spaces, {bad} failures")


def test_06_discretizations_and_density():
    spaces = corpus()
    t1_bad = size_bad = t1_count = 0
    for X in spaces:
        found = D.all_discretizations(X)
        d = D.density(X)
        if C.separation(X).T1:
            t1_count += 1
            delta = C.isolated_points(X)
            t1_bad += any(f.image != delta for f in found)
        size_bad += any(bin(f.image).count("1") != d for f in found)
    classes = [len(D.all_discretizations(antidiscrete(n))) for n in range(2, 7)]
    ok = t1_bad == 0 and size_bad == 0 and classes == list(range(2, 7))
    record(6, "T1 discretizations are the isolated points, |image| = density", ok,
           f"{t1_count} T1 spaces with {t1_bad} failures; {size_bad} density failures over {len(spaces)}; "
           f"anti-discrete n=2..6 classes {classes}")


def test_07_quotients_and_subalgebras():
    # drop the single 0-point space the exhaustive part always contributes
    randoms = build_corpus(exhaustive=0, random_count=200, n_max=6, seed=CORPUS_SEED + 7).spaces[1:]
    spaces = exhaustive4() + randoms
    bad = sum(not K.verify_thrpre(X) for X in spaces)
    span_bad = checked = 0
    for k in range(5):
        for P in enumerate_partitions(k):
            checked += 1
            gens = [[P.block_of[i] + 1 for i in range(k)]]
            span_bad += K.subalgebra_by_span_closure(k, gens) != K.partition_subspace(P)
    record(7, "Hausdorff quotients ~ unital subalgebras; span closure = partition model",
           bad == 0 and span_bad == 0,
           f"{len(spaces)} spaces ({len(randoms)} random), {bad} failures; {checked} subalgebras, {span_bad} span mismatches")


def test_08_compactification_discretization_duality():
    maps = disagree = 0
    for a in range(4):
        for b in range(4):
            for f in D.all_maps(discrete(a), discrete(b)):
                maps += 1
                comp, disc = D.compactification_discretization_duality(f)
                disagree += comp != disc
    record(8, "compactification <=> discretization on discrete spaces", disagree == 0,
           f"{maps} maps, {disagree} disagreements")


def test_09_ideals():
    imap_bad = sum(not I.I_map(X) for X in exhaustive4())
    spaces = corpus()
    many = t1_bad = 0
    for X in spaces:
        ess = I.essential_gmp_opens(X)
        many += len(ess) > 1
        if C.separation(X).T1:
            t1_bad += bool(ess) != C.is_dense(X, C.isolated_points(X))
    concrete_bad = 0
    for n in range(7):
        Dn = discrete(n)
        for U in Dn.opens:
            concrete_bad += I.is_gmp_concrete(Dn, U) != I.is_gmp(Dn, U)
            concrete_bad += I.is_essential_concrete(Dn, U) != C.is_dense(Dn, U)
    ok = imap_bad == 0 and many == 0 and t1_bad == 0 and concrete_bad == 0
    record(9, "ideal dictionary", ok,
           f"I_map failures {imap_bad}/{len(exhaustive4())}; >1 essential gmp on {many}/{len(spaces)}; "
           f"T1 existence failures {t1_bad}; concrete mismatches {concrete_bad}")


def test_10_duality():
    objs = [discrete(n) for n in range(4)]
    maps = [f for X in objs for Y in objs for f in D.all_maps(X, Y)]
    ex = SD.duality_check(objs, maps)
    sample = SD.random_discrete_maps(random.Random(CORPUS_SEED), 6, 100)
    sobjs = sorted({m.domain for m in sample} | {m.codomain for m in sample}, key=lambda X: X.n)
    rnd = SD.duality_check(sobjs, sample)
    stonean_bad = sum(C.separation(X).stonean != is_discrete(X) for X in exhaustive4())
    record(10, "isolated points / Stone-Cech duality on finite discrete spaces",
           bool(ex) and bool(rnd) and stonean_bad == 0,
           f"{len(maps)} exhaustive maps ok={bool(ex)}, {len(sample)} random maps ok={bool(rnd)}, "
           f"Stonean != discrete on {stonean_bad}/{len(exhaustive4())}")


def test_11_symbolic():
    t0 = time.perf_counter()
    X = SD.SymSpace.NAT_PLUS_INFINITY
    iso = SD.sym_isolated(X)
    w = SD.not_stonean_witness()
    evens = SD.SymSet.evens()
    ok = (
        iso == SD.SymSet.naturals()
        and SD.sym_is_dense(X, iso)
        and w.U == evens
        and w.closure == evens | SD.SymSet(inf=True)
        and not w.closure_is_open
        and not SD.sym_is_open(X, w.closure)
    )
    ms = (time.perf_counter() - t0) * 1000
    record(11, "symbolic isolated points and the evens witness", ok and ms < 500,
           f"isolated = N dense, closure(evens) = evens + inf not open, {ms:.1f}ms")


def test_12_determinism():
    cmd = [sys.executable, "-m", "topolab.cli", "verify", "all", "--random", "1000", "--n", "8", "--seed", "7"]
    env = dict(os.environ)
    env.pop("TOPOLAB_CAP", None)
    runs = [subprocess.run(cmd, capture_output=True, env=env, timeout=600) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[0].returncode == runs[1].returncode
    last = runs[0].stdout.decode().strip().splitlines()[-1] if runs[0].stdout else "<no output>"
    record(12, "verify all --random 1000 --n 8 --seed 7 is byte-identical", same and bool(runs[0].stdout),
           f"{len(runs[0].stdout)} bytes, exit {runs[0].returncode}, {last}")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for k in sorted(RESULTS):
        print(RESULTS[k])
    sys.exit(0 if all(line.startswith("[PASS]") for line in RESULTS.values()) and len(RESULTS) == 12 else 1)
