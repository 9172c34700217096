import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import every_hypergraph, hg
from hyperposet.errors import EdgeShapeError, EmptyGroundError, InputError
from hyperposet.hypergraph import (
    GroundInterval,
    Kind,
    classify,
    complete_cyclic_interval_hypergraph,
    complete_interval_hypergraph,
    cyclic_interval_edges,
    find_fix,
    hugging_quadruples,
    intersection_gap,
    parse,
    reflect,
    regular_closed,
    restrict,
    satisfies_characterization,
)
from hyperposet.report import FixlessQuadruple, IntersectionGap

C, R = Kind.CYCLIC, Kind.REGULAR


def labels(H):
    return [str(e) for e in H.edges]


def test_parse_mixed_edges():
    H = parse(GroundInterval(1, 6), [{1, 2, 5, 6}, {1, 2, 3}, {2, 3, 4, 5, 6}])
    assert labels(H) == ["1256", "123", "23456"]
    assert [e.kind for e in H.edges] == [C, R, R]


def test_parse_rejects_non_interval():
    with pytest.raises(EdgeShapeError):
        parse(GroundInterval(1, 4), [{1, 3}])


def test_parse_drops_singletons_and_duplicates():
    H = parse(GroundInterval(1, 4), [{2}, {1, 2}, {2, 1}])
    assert labels(H) == ["12"]


@pytest.mark.parametrize("lo,hi", [(1, 1), (3, 2), (0, 4)])
def test_ground_must_have_two_vertices(lo, hi):
    with pytest.raises(EmptyGroundError):
        GroundInterval(lo, hi)


def test_vertex_out_of_range():
    with pytest.raises(InputError):
        parse(GroundInterval(1, 4), [{4, 5}])


@pytest.mark.parametrize("vs,kind", [
    ({1, 2}, R), ({2, 3, 4}, R), ({1, 2, 3, 4}, C), ({1, 4}, C), ({1, 2, 4}, C),
    ({1, 3}, None), ({2, 4}, None), ({1, 3, 4, 2}, C), ({1}, None),
])
def test_classify_on_1_4(vs, kind):
    assert classify(vs, GroundInterval(1, 4)) is kind


def test_cyclic_pieces():
    g = GroundInterval(1, 6)
    e = parse(g, [{1, 2, 5, 6}]).edges[0]
    assert e.minus == {1, 2} and e.plus == {5, 6}
    full = parse(g, [range(1, 7)]).edges[0]
    assert full.minus == set(range(1, 6)) and full.plus == {6}
    with pytest.raises(ValueError):
        parse(g, [{2, 3}]).edges[0].minus


def test_distinct_edge_counts():
    assert [len(cyclic_interval_edges(GroundInterval(1, n))) for n in (3, 4, 5)] == [4, 9, 16]


def test_restrict_examples():
    H = hg(5, "125", "345", "1245", "1345")
    assert labels(restrict(H, GroundInterval(1, 4))) == ["12", "34", "124", "134"]
    H2 = hg(5, "234", "1235", "1345")
    assert labels(restrict(H2, GroundInterval(1, 4))) == ["234", "123", "134"]
    H3 = hg(6, "1256", "123", "23456")
    R3 = restrict(H3, GroundInterval(2, 5))
    assert labels(R3) == ["25", "23", "2345"]
    assert [e.kind for e in R3.edges] == [C, R, C]


def test_restrict_rejects_outside_interval():
    with pytest.raises(ValueError):
        restrict(hg(4, "12"), GroundInterval(2, 6))


def test_regular_closed_examples():
    gap = intersection_gap(hg(4, "234", "123", "134"))
    assert (str(gap.first), str(gap.second), sorted(gap.missing)) == ("234", "123", [2, 3])
    assert regular_closed(complete_interval_hypergraph(4))
    assert regular_closed(hg(4, "12", "34"))


def test_quadruple_examples():
    (q,) = hugging_quadruples(hg(4, "12", "124", "34", "134"))
    assert [str(e) for e in q.members] == ["12", "124", "34", "134"]
    assert hugging_quadruples(hg(4, "12", "23", "34")) == []
    (q2,) = hugging_quadruples(hg(4, "12", "124", "23", "34", "134"))
    assert [str(e) for e in q2.members] == ["12", "124", "34", "134"]


def test_fix_examples():
    H = hg(4, "12", "124", "23", "34", "134")
    assert str(find_fix(H, hugging_quadruples(H)[0])) == "23"
    H = hg(4, "12", "124", "34", "134")
    assert find_fix(H, hugging_quadruples(H)[0]) is None
    H = hg(4, "12", "124", "34", "134", "1234")
    assert str(find_fix(H, hugging_quadruples(H)[0])) == "1234"


def brute_fixes(H, Q):
    """Scan every vertex subset for the fix condition, then keep the edges."""
    x, y = H.ground.lo, H.ground.hi
    union = Q.union
    out = []
    for r in range(2, H.ground.size + 1):
        for combo in itertools.combinations(H.ground.vertices, r):
            s = frozenset(combo)
            if {x + 1, y - 1} <= s <= union and s in H.vertex_sets:
                out.append(s)
    return out


def test_find_fix_matches_subset_scan():
    for H in every_hypergraph(4):
        for Q in hugging_quadruples(H):
            fix = find_fix(H, Q)
            assert (fix is not None) == bool(brute_fixes(H, Q))


def test_characterization_examples():
    rep = satisfies_characterization(hg(4, "12", "124", "34", "134"))
    assert not rep.verdict
    assert isinstance(rep.witness, FixlessQuadruple)
    assert rep.witness.interval == GroundInterval(1, 4)
    assert [str(e) for e in rep.witness.quadruple.members] == ["12", "124", "34", "134"]
    assert satisfies_characterization(complete_interval_hypergraph(4)).verdict
    rep = satisfies_characterization(hg(5, "125", "345", "1245", "1345"))
    assert not rep.verdict and rep.witness.interval == GroundInterval(1, 4)
    assert isinstance(rep.witness, FixlessQuadruple)
    rep = satisfies_characterization(hg(5, "234", "1235", "1345"))
    assert isinstance(rep.witness, IntersectionGap)


def test_two_vertex_ground_is_vacuous():
    for H in every_hypergraph(2):
        assert hugging_quadruples(H) == []
        assert satisfies_characterization(H).verdict


@pytest.mark.parametrize("n", [3, 4, 5])
def test_restriction_closure_and_partition(n):
    for H in every_hypergraph(n):
        for D in H.ground.subintervals():
            HD = restrict(H, D)  # parse re-validates every edge relative to D
            for e in HD.edges:
                assert classify(e.vertices, D) is e.kind
                assert e.kind in (C, R)
            full = [e for e in HD.edges if e.vertices == frozenset(D.vertices)]
            assert all(e.kind is C for e in full)


def test_restriction_composes():
    for H in every_hypergraph(4):
        for D in H.ground.subintervals():
            for D2 in D.subintervals():
                assert restrict(restrict(H, D), D2).vertex_sets == restrict(H, D2).vertex_sets


@pytest.mark.parametrize("n", [3, 4])
def test_characterization_is_hereditary(n):
    for H in every_hypergraph(n):
        if satisfies_characterization(H).verdict:
            for D in H.ground.subintervals():
                assert satisfies_characterization(restrict(H, D)).verdict


def test_reflection_preserves_class_and_verdict():
    for H in every_hypergraph(4):
        mirrored = reflect(H)
        assert reflect(mirrored).vertex_sets == H.vertex_sets
        assert satisfies_characterization(mirrored).verdict == satisfies_characterization(H).verdict


edges5 = cyclic_interval_edges(GroundInterval(1, 5))


@given(st.lists(st.sampled_from(edges5), max_size=10),
       st.sets(st.integers(1, 5)))
def test_singleton_neutrality(edges, singles):
    g = GroundInterval(1, 5)
    with_singles = list(edges) + [{v} for v in singles]
    assert parse(g, edges) == parse(g, with_singles)


def test_complete_cyclic_has_every_shape():
    H = complete_cyclic_interval_hypergraph(4)
    assert len(H) == 9
    assert sum(e.is_cyclic for e in H.edges) == 4
