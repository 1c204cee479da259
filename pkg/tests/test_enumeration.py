from itertools import product

import networkx as nx
import pytest

from minus_two import DomainError, EnumerationSpec, MinEigClass, enumerate_graphs, is_isomorphic, write_graph6
from minus_two.canon import canonical_form, canonical_graph
from minus_two.enumeration import NOT_BELOW
from minus_two.families import forbidden_f
from minus_two.graph import complement, is_bipartite, is_connected, regularity
from minus_two.spectral import min_eig_class
from oracles import atlas, brute_force_classes, dedup, labelled_regular_graphs, min_eigenvalue, to_nx

GT, EQ, LT = MinEigClass.GREATER_THAN_MINUS_2, MinEigClass.EQUALS_MINUS_2, MinEigClass.LESS_THAN_MINUS_2


def _count(**kw) -> int:
    return sum(1 for _ in enumerate_graphs(EnumerationSpec(**kw)))


@pytest.mark.parametrize("n", range(0, 7))
def test_counts_match_brute_force(n):
    expected = len(brute_force_classes(n)) if n else 1
    assert _count(n=n) == expected


def test_known_totals():
    assert [_count(n=n) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]
    assert _count(n=5, connected=True) == 21


def test_output_matches_atlas_classes():
    for n in range(0, 8):
        ours = {canonical_form(g) for g in enumerate_graphs(EnumerationSpec(n))}
        theirs = {canonical_form(g) for g in atlas(7) if g.n == n}
        assert ours == theirs


def test_connected_regular_counts():
    cubic = [_count(n=n, connected=True, regular_degree=3) for n in (4, 6, 8, 10)]
    quartic = [_count(n=n, connected=True, regular_degree=4) for n in (5, 6, 7, 8, 9, 10)]
    assert cubic == [1, 2, 5, 19]
    assert quartic == [1, 1, 2, 6, 16, 59]


def test_filtered_enumeration_equals_post_filtering():
    """Pruned searches must agree with filtering the unpruned stream."""
    allowed_sets = [None, NOT_BELOW, frozenset({GT}), frozenset({EQ}), frozenset({LT})]
    for n in range(1, 8):
        everything = list(enumerate_graphs(EnumerationSpec(n)))
        for conn, k, allowed, cb in product((None, True), [None] + list(range(n)), allowed_sets, (None, True)):
            spec = EnumerationSpec(n, connected=conn, regular_degree=k, min_eig_classes=allowed,
                                   complement_bipartite=cb)
            want = [g for g in everything
                    if (conn is None or is_connected(g))
                    and (k is None or regularity(g) == k)
                    and (allowed is None or min_eig_class(g) in allowed)
                    and (cb is None or is_bipartite(complement(g)) is not None)]
            got = list(enumerate_graphs(spec))
            assert [write_graph6(g) for g in got] == [write_graph6(g) for g in want], spec


def test_eight_vertex_quartic_pipeline_against_brute_force():
    # brute force: all labelled 4-regular graphs on 8 vertices, filtered, then deduplicated
    survivors = [g for g in labelled_regular_graphs(8, 4)
                 if is_connected(g) and is_bipartite(complement(g)) is not None and min_eigenvalue(g) >= -2 - 1e-9]
    classes = dedup(survivors)
    got = list(enumerate_graphs(EnumerationSpec(8, connected=True, regular_degree=4, min_eig_classes=NOT_BELOW,
                                                complement_bipartite=True)))
    assert len(classes) == len(got) == 1
    assert is_isomorphic(got[0], forbidden_f(4))
    assert nx.is_isomorphic(classes[0], to_nx(forbidden_f(4)))


def test_stream_is_deterministic_and_sorted():
    spec = EnumerationSpec(7)
    first = [write_graph6(g) for g in enumerate_graphs(spec)]
    assert first == [write_graph6(g) for g in enumerate_graphs(spec)]
    keys = [canonical_form(g) for g in enumerate_graphs(spec)]
    assert keys == sorted(keys)
    # outputs are canonically labelled
    assert all(g == canonical_graph(g) for g in enumerate_graphs(spec))


def test_parallel_matches_serial():
    for spec in (EnumerationSpec(7), EnumerationSpec(10, connected=True, regular_degree=3)):
        serial = [write_graph6(g) for g in enumerate_graphs(spec, jobs=1)]
        assert [write_graph6(g) for g in enumerate_graphs(spec, jobs=3)] == serial


def test_jobs_from_environment(monkeypatch):
    from minus_two.enumeration import default_jobs

    monkeypatch.setenv("MINUS_TWO_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.setenv("MINUS_TWO_JOBS", "x")
    with pytest.raises(DomainError):
        default_jobs()


@pytest.mark.parametrize("kw", [dict(n=11), dict(n=-1), dict(n=5, regular_degree=5), dict(n=4, min_eig_classes=frozenset())])
def test_spec_validation(kw):
    with pytest.raises(DomainError):
        EnumerationSpec(**kw)


def test_graph6_round_trip_on_all_graphs_up_to_seven():
    from minus_two import parse_graph6

    for n in range(8):
        for g in enumerate_graphs(EnumerationSpec(n)):
            assert parse_graph6(write_graph6(g)) == g
