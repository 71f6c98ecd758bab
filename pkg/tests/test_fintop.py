import pytest
from hypothesis import given, strategies as st

import oracles as O
from conftest import spaces
from topolab.errors import InvalidGenerator, InvalidMap, InvalidPartition, InvalidTopology, TooLarge
from topolab.fintop import (
    FinSpace,
    Partition,
    PointMap,
    antidiscrete,
    bell,
    closure,
    closure_by_opens,
    components,
    components_by_clopens,
    discrete,
    disjoint_sum,
    enumerate_partitions,
    enumerate_topologies,
    enumerate_topologies_bruteforce,
    find_homeomorphism,
    has_dense_range,
    has_open_range,
    homeomorphic,
    identity_map,
    inclusion,
    interior,
    interior_by_opens,
    is_continuous,
    is_discrete,
    is_embedding,
    make_space,
    members,
    product,
    product_all,
    projections,
    quotient,
    random_space,
    sierpinski,
    specialization,
    subspace,
    topology_violation,
)

S = sierpinski()
THREE = make_space(3, [0b001, 0b010])  # opens {}, {0}, {1}, {0,1}, X


# --- construction ----------------------------------------------------------

def test_make_space_examples():
    assert make_space(2, [0b01]).opens == (0, 0b01, 0b11)
    assert make_space(3, []).opens == (0, 0b111)
    assert THREE.opens == (0, 0b001, 0b010, 0b011, 0b111)


@given(st.integers(0, 5), st.lists(st.integers(0, 31), max_size=5))
def test_make_space_matches_fixpoint_oracle(n, gens):
    gens = [g & ((1 << n) - 1) for g in gens]
    assert list(make_space(n, gens).opens) == O.topology_by_fixpoint(n, gens)


def test_make_space_rejects_out_of_range_generator():
    with pytest.raises(InvalidGenerator):
        make_space(2, [0b100])


def test_from_opens_validates():
    with pytest.raises(InvalidTopology):
        FinSpace.from_opens(2, [0, 0b01])  # full set missing
    assert FinSpace.from_opens(2, [0, 1, 3]) == S


def test_from_opens_requires_union_closure():
    with pytest.raises(InvalidTopology):
        FinSpace.from_opens(3, [0, 0b001, 0b010, 0b111])


def test_topology_violation_reports_missing_sets():
    assert topology_violation(2, [0, 1, 3]) is None
    assert topology_violation(2, [1, 3]) is not None
    assert topology_violation(2, [0, 1, 2, 3]) is None


def test_empty_space():
    E = random_space(0, 5)
    assert E.n == 0 and E.opens == (0,)


# --- closure and interior --------------------------------------------------

def test_closure_examples():
    assert closure(S, 0b01) == 0b11
    assert closure(S, 0) == 0
    assert closure(antidiscrete(3), 0b010) == 0b111


@given(spaces(), st.integers(0, 2**6))
def test_closure_interior_against_oracles(X, s):
    s &= X.full
    assert closure(X, s) == closure_by_opens(X, s) == O.closure(X.opens, X.n, s)
    assert interior(X, s) == interior_by_opens(X, s) == O.interior(X.opens, s)
    # Galois duality
    assert interior(X, s) == X.full & ~closure(X, X.full & ~s)


# --- subspace, product, sum ------------------------------------------------

def test_subspace_examples():
    Y, idx = subspace(S, 0b10)
    assert Y.n == 1 and idx == (1,)
    Y, idx = subspace(THREE, 0b100)
    assert is_discrete(Y) and Y.n == 1
    assert subspace(THREE, THREE.full)[0] == THREE


@given(spaces(), st.integers(0, 63), st.integers(0, 63))
def test_subspace_of_subspace(X, a, b):
    a &= X.full
    b &= a
    A, ia = subspace(X, a)
    inner = sum(1 << k for k, old in enumerate(ia) if b >> old & 1)
    B, _ = subspace(A, inner)
    assert B == subspace(X, b)[0]
    assert list(subspace(X, a)[0].opens) == O.subspace_opens(X.opens, a)


def test_product_examples():
    P, _ = product(discrete(2), discrete(2))
    assert is_discrete(P) and P.n == 4
    P1, _ = product(S, discrete(1))
    assert homeomorphic(P1, S)


def test_sierpinski_square_has_six_opens():
    # the open sets of S x S are the up-sets of the 2x2 grid under the
    # product order; there are six of them, checked here by the fixpoint
    # oracle over all boxes of opens
    P, pairs = product(S, S)
    boxes = []
    for u in S.opens:
        for v in S.opens:
            boxes.append(sum(1 << k for k, (i, j) in enumerate(pairs) if u >> i & 1 and v >> j & 1))
    assert list(P.opens) == O.topology_by_fixpoint(4, boxes)
    assert len(P.opens) == 6


@given(spaces(3), spaces(3))
def test_product_projections_continuous(X, Y):
    p, q = projections(X, Y)
    assert is_continuous(p) and is_continuous(q)
    P, _ = product(X, discrete(1))
    assert homeomorphic(P, X)


def test_product_cap(monkeypatch):
    monkeypatch.setenv("TOPOLAB_CAP", "5")
    with pytest.raises(TooLarge):
        product(discrete(3), discrete(2))


def test_product_all_folds():
    assert product_all([]) == discrete(1)
    assert product_all([discrete(2), discrete(2), discrete(1)]).n == 4


def test_disjoint_sum():
    X = disjoint_sum(S, discrete(1))
    assert X == make_space(3, [0b001, 0b100, 0b011])
    assert components(X).blocks == (0b011, 0b100)


# --- quotient ---------------------------------------------------------------

def test_quotient_examples():
    Q, q = quotient(discrete(3), Partition.from_blocks(3, [0b011, 0b100]))
    assert Q == discrete(2)
    Q, _ = quotient(S, Partition.trivial(2))
    assert Q.n == 1
    X = make_space(3, [0b001])
    Q, _ = quotient(X, Partition.from_blocks(3, [0b001, 0b110]))
    assert Q == S


@given(spaces(), st.data())
def test_quotient_map_continuous_and_onto(X, data):
    labels = data.draw(st.lists(st.integers(0, 2), min_size=X.n, max_size=X.n))
    P = Partition.from_labels(labels)
    Q, q = quotient(X, P)
    assert is_continuous(q)
    assert q.range == Q.full


# --- specialization and components ----------------------------------------

def test_specialization_and_components_examples():
    D = discrete(3)
    assert specialization(D) == (0b001, 0b010, 0b100)
    assert components(D) == Partition.discrete(3)
    assert components(S) == Partition.trivial(2)
    assert components(THREE) == Partition.trivial(3)


def test_components_two_ways_on_all_small_spaces():
    for n in range(5):
        for X in enumerate_topologies(n):
            assert components(X) == components_by_clopens(X)
            assert sorted(components(X).blocks) == O.components(X.opens, X.n)


def test_specialization_matches_closures():
    for X in enumerate_topologies(3):
        rows = specialization(X)
        for x in range(X.n):
            for y in range(X.n):
                # x <= y iff x lies in the closure of y
                assert bool(rows[x] >> y & 1) == bool(O.closure(X.opens, X.n, 1 << y) >> x & 1)


# --- maps -------------------------------------------------------------------

def test_map_predicates_examples():
    i = identity_map(S)
    assert is_continuous(i) and is_embedding(i) and has_dense_range(i) and has_open_range(i)
    j = inclusion(antidiscrete(3), 0b001)
    assert is_embedding(j) and has_dense_range(j) and not has_open_range(j)
    f = PointMap(discrete(2), S, (0, 1))
    assert is_continuous(f) and not is_embedding(f)


def test_point_map_validation():
    with pytest.raises(InvalidMap):
        PointMap(discrete(2), S, (0,))
    with pytest.raises(InvalidMap):
        PointMap(discrete(1), S, (2,))


@given(spaces(3), spaces(3), st.data())
def test_continuity_against_oracle(X, Y, data):
    if Y.n == 0 and X.n:
        return
    table = tuple(data.draw(st.integers(0, Y.n - 1)) for _ in range(X.n))
    f = PointMap(X, Y, table)
    assert is_continuous(f) == O.continuous(X.opens, Y.opens, table)


# --- partitions ---------------------------------------------------------------

def test_partitions():
    assert [bell(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    for n in range(6):
        got = sorted(P.blocks for P in enumerate_partitions(n))
        want = sorted(
            tuple(sorted(sum(1 << i for i in b) for b in p)) for p in O.set_partitions(range(n))
        )
        assert sorted(tuple(sorted(b)) for b in got) == want
    with pytest.raises(InvalidPartition):
        Partition(3, (0, 2, 1))
    with pytest.raises(InvalidPartition):
        Partition.from_blocks(3, [0b011, 0b110])
    assert Partition.discrete(3).refines(Partition.trivial(3))
    assert not Partition.trivial(3).refines(Partition.discrete(3))


# --- enumeration and randomness ---------------------------------------------

def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]
    assert [O.count_topologies(n) for n in range(4)] == [1, 1, 4, 29]


def test_enumeration_paths_agree():
    for n in range(5):
        assert list(enumerate_topologies(n)) == list(enumerate_topologies_bruteforce(n))


def test_enumeration_caps():
    with pytest.raises(TooLarge):
        list(enumerate_topologies_bruteforce(5))
    with pytest.raises(TooLarge):
        list(enumerate_topologies(7))


def test_random_space_examples():
    X = random_space(5, 1)
    assert topology_violation(X.n, X.opens) is None
    assert O.is_topology(5, X.opens)
    assert random_space(5, 1) == X
    with pytest.raises(TooLarge):
        random_space(21, 0)


@given(spaces(6))
def test_random_spaces_are_topologies(X):
    assert O.is_topology(X.n, X.opens)
    assert len(set(X.opens)) == len(X.opens)
    assert list(X.opens) == sorted(X.opens)


# --- homeomorphism -------------------------------------------------------------

@given(spaces(5), st.randoms(use_true_random=False))
def test_relabelled_space_is_homeomorphic(X, rnd):
    perm = list(range(X.n))
    rnd.shuffle(perm)
    Y = FinSpace.from_opens(X.n, [sum(1 << perm[i] for i in members(u)) for u in X.opens])
    h = find_homeomorphism(X, Y)
    assert h is not None
    assert is_continuous(PointMap(X, Y, h))
    inv = [0] * X.n
    for i, j in enumerate(h):
        inv[j] = i
    assert is_continuous(PointMap(Y, X, tuple(inv)))


def test_homeomorphism_classes_of_two_points():
    spaces2 = list(enumerate_topologies(2))
    classes = []
    for X in spaces2:
        if not any(homeomorphic(X, c) for c in classes):
            classes.append(X)
    assert len(classes) == 3
