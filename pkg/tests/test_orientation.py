import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_orientations, every_hypergraph, hg
from hyperposet.errors import BudgetExceeded, InvalidSource, NotAPermutation
from hyperposet.hypergraph import GroundInterval, Hypergraph, complete_interval_hypergraph
from hyperposet.orientation import (
    Orientation,
    enumerate_acyclic,
    find_cycle,
    is_acyclic,
    orientation_from_permutation,
    permutation_for,
)


def k3():
    return Hypergraph.from_sets(GroundInterval(1, 3), [{1, 2}, {2, 3}, {1, 3}])


def acyclic_by_definition(H, A):
    """Arc p -> q iff A(q) lies in edge p minus A(p); acyclic iff no directed cycle."""
    sets = H.vertex_sets
    g = nx.DiGraph()
    g.add_nodes_from(range(len(sets)))
    g.add_edges_from((p, q) for p in range(len(sets)) for q in range(len(sets))
                     if A[q] in sets[p] - {A[p]})
    return nx.is_directed_acyclic_graph(g)


def test_three_edge_orientation_is_acyclic():
    H = hg(6, "1256", "123", "23456")
    assert is_acyclic(H, (6, 2, 4))


def test_k3_rotation_is_cyclic():
    cycle = find_cycle(k3(), (1, 2, 3))
    assert cycle is not None and sorted(cycle) == [0, 1, 2]
    # follow the witness: each next edge's source is a non-source vertex of the current edge
    sets, A = k3().vertex_sets, (1, 2, 3)
    for p, q in zip(cycle, cycle[1:] + cycle[:1]):
        assert A[q] in sets[p] - {A[p]}


def test_single_edge_is_acyclic():
    H = hg(2, "12")
    assert is_acyclic(H, (1,)) and is_acyclic(H, (2,))


def test_invalid_source():
    with pytest.raises(InvalidSource):
        is_acyclic(hg(4, "12"), (3,))
    with pytest.raises(InvalidSource):
        is_acyclic(hg(4, "12"), (1, 2))


def test_permutation_examples():
    H = hg(6, "1256", "123", "23456")
    assert orientation_from_permutation(H, (4, 6, 2, 1, 3, 5)) == Orientation((6, 2, 4))
    assert orientation_from_permutation(H, range(1, 7)).sources == tuple(min(vs) for vs in H.vertex_sets)
    assert orientation_from_permutation(H, range(6, 0, -1)).sources == tuple(max(vs) for vs in H.vertex_sets)
    with pytest.raises(NotAPermutation):
        orientation_from_permutation(H, (1, 2, 3))
    with pytest.raises(NotAPermutation):
        orientation_from_permutation(H, (1, 1, 2, 3, 4, 5))


@pytest.mark.parametrize("H,count", [
    (hg(2, "12"), 2),
    (k3(), 6),
    (complete_interval_hypergraph(4), 14),
])
def test_enumeration_counts(H, count):
    for strategy in ("backtrack", "permutations"):
        assert len(enumerate_acyclic(H, strategy=strategy)) == count


def test_single_edge_orientations():
    assert enumerate_acyclic(hg(2, "12")) == [Orientation((1,)), Orientation((2,))]


def test_no_edges_has_one_orientation():
    assert enumerate_acyclic(hg(3)) == [Orientation(())]


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_acyclic(hg(10, "12"))
    assert len(enumerate_acyclic(hg(10, "12"), budget=10)) == 2
    with pytest.raises(ValueError):
        enumerate_acyclic(hg(3, "12"), strategy="guess")


def test_every_permutation_image_is_acyclic_up_to_six():
    for n in range(2, 7):
        H = Hypergraph.from_sets(GroundInterval(1, n),
                                 [set(c) for r in range(2, n + 1)
                                  for c in itertools.combinations(range(1, n + 1), r)])
        for pi in itertools.permutations(range(1, n + 1)):
            assert is_acyclic(H, orientation_from_permutation(H, pi))


@pytest.mark.parametrize("n", [3, 4])
def test_strategies_and_surjectivity_exhaustive(n):
    for H in every_hypergraph(n):
        by_definition = sorted(Orientation(A) for A in all_orientations(H)
                               if acyclic_by_definition(H, A))
        assert enumerate_acyclic(H) == by_definition
        assert enumerate_acyclic(H, strategy="permutations") == by_definition
        for A in all_orientations(H):
            assert is_acyclic(H, A) == acyclic_by_definition(H, A)


def test_surjectivity_sampled_at_five():
    # the unpruned product of choices is only feasible on the sparser instances
    rng = random.Random(5)
    universe = [H for H in every_hypergraph(5)
                if math.prod(len(vs) for vs in H.vertex_sets) <= 5000]
    for H in rng.sample(universe, 200):
        image = set(enumerate_acyclic(H, strategy="permutations"))
        for A in all_orientations(H):
            if is_acyclic(H, A):
                assert Orientation(A) in image


def test_permutation_for_round_trips():
    for H in every_hypergraph(4):
        for A in enumerate_acyclic(H):
            assert orientation_from_permutation(H, permutation_for(H, A)) == A


edge_lists = st.lists(st.sampled_from(["12", "23", "34", "45", "123", "234", "345", "1234",
                                       "2345", "15", "125", "145", "1245", "1345", "12345"]),
                      min_size=1, max_size=7, unique=True)


@settings(max_examples=60, deadline=None)
@given(edge_lists, st.randoms(use_true_random=False))
def test_acyclicity_ignores_edge_order(edges, rnd):
    H = hg(5, *edges)
    order = list(range(len(edges)))
    rnd.shuffle(order)
    shuffled = hg(5, *[edges[i] for i in order])
    for A in all_orientations(H):
        B = tuple(A[i] for i in order)
        assert is_acyclic(H, A) == is_acyclic(shuffled, B)
    assert len(enumerate_acyclic(H)) == len(enumerate_acyclic(shuffled))
