import json

import pytest

from minus_two import Admissibility, DomainError, Graph, PSL2Params, delta_psl2, regular_chargraph_admissibility
from minus_two.families import (clebsch, cocktail_party, complete, complete_bipartite, cycle, forbidden_f,
                                line_graph, petersen, schlafli)
from minus_two.formats import parse_graph6, to_dot
from minus_two.graph import disjoint_union
from minus_two.numtheory import prime_set
from minus_two.suites import check_delta_psl2, prime_power


def _delta(q: int):
    return delta_psl2(PSL2Params(*prime_power(q)))


def test_q4():
    g = _delta(4)
    assert g.labels == (2, 3, 5) and g.graph.num_edges == 0


def test_q9():
    g = _delta(9)
    assert sorted(map(sorted, g.prime_components())) == [[2, 5], [3]]
    assert g.adjacent(2, 5)


def test_q11():
    g = _delta(11)
    assert g.labels == (2, 3, 5, 11)
    assert sorted(g.labelled_edges()) == [(2, 3), (2, 5)]


def test_q5_redirects_to_q4():
    assert _delta(5) == _delta(4)


@pytest.mark.parametrize("u,f", [(2, 1), (3, 1), (4, 1), (6, 2), (2, 0), (2, 63)])
def test_domain_errors(u, f):
    with pytest.raises(DomainError):
        PSL2Params(u, f)


@pytest.mark.parametrize("q", [4, 8, 16, 32, 64, 128, 256] + [7, 9, 11, 13, 25, 27, 49, 81, 121, 125]
                         + [2**20, 3**13, 1021, 1031, 7**7, 2**62])
def test_structure(q):
    u, f = prime_power(q)
    g = _delta(q)
    assert set(g.labels) == prime_set(u) | prime_set(q - 1) | prime_set(q + 1)
    assert check_delta_psl2(q) is None
    if q % 2 == 0:
        assert len(g.prime_components()) == 3


def test_odd_q_hand_check():
    # q = 13: M = {3}, P = {7}; q - 1 = 12 and q + 1 = 14 are not powers of 2
    g = _delta(13)
    assert g.labels == (2, 3, 7, 13)
    assert sorted(g.labelled_edges()) == [(2, 3), (2, 7)]


def test_json_and_dot():
    g = _delta(11)
    data = json.loads(json.dumps(g.to_json()))
    assert data == {"vertices": [2, 3, 5, 11], "edges": [[2, 3], [2, 5]]}
    assert "2 -- 3;" in to_dot(g.graph, labels=list(g.labels))


@pytest.mark.parametrize("m", range(3, 12))
def test_complete_and_cocktail_party_are_admissible(m):
    v = regular_chargraph_admissibility(complete(m))
    assert (v.kind, v.param) == (Admissibility.ADMISSIBLE_COMPLETE, m)
    v = regular_chargraph_admissibility(cocktail_party(m))
    assert (v.kind, v.param) == (Admissibility.ADMISSIBLE_COCKTAIL_PARTY, m)


def test_admissibility_examples():
    assert regular_chargraph_admissibility(complete(5)).to_json() == {"tag": "AdmissibleComplete", "param": 5}
    assert regular_chargraph_admissibility(forbidden_f(4)).to_json() == {"tag": "ExcludedForbiddenF", "param": 4}
    assert regular_chargraph_admissibility(petersen()).kind is Admissibility.EXCLUDED_NON_BIPARTITE_COMPLEMENT


@pytest.mark.parametrize("g,kind", [
    (Graph(2), Admissibility.OUT_OF_SCOPE),
    (Graph(3), Admissibility.OUT_OF_SCOPE),
    (Graph(4), Admissibility.EXCLUDED_DISCONNECTED),
    (disjoint_union(complete(3), complete(3)), Admissibility.EXCLUDED_DISCONNECTED),
    (Graph(4, [(0, 1), (1, 2)]), Admissibility.OUT_OF_SCOPE),
    (complete(2), Admissibility.OUT_OF_SCOPE),
    (cycle(7), Admissibility.EXCLUDED_NON_BIPARTITE_COMPLEMENT),
    (schlafli(), Admissibility.EXCLUDED_NON_BIPARTITE_COMPLEMENT),
    (clebsch(), Admissibility.EXCLUDED_NON_BIPARTITE_COMPLEMENT),
    (complete_bipartite(3, 3), Admissibility.EXCLUDED_NON_BIPARTITE_COMPLEMENT),
    # 5-regular on 8 vertices, complement bipartite, least eigenvalue below -2
    (parse_graph6("GLvnno"), Admissibility.EXCLUDED_BELOW_MINUS_TWO),
    (line_graph(complete_bipartite(2, 3)), Admissibility.EXCLUDED_FORBIDDEN_F),
])
def test_pipeline_order(g, kind):
    assert regular_chargraph_admissibility(g).kind is kind


def test_out_of_scope_reasons():
    assert regular_chargraph_admissibility(Graph(3)).reason == "degree < 2 regime"
    assert regular_chargraph_admissibility(Graph(4, [(0, 1)])).reason == "not regular"


def test_below_minus_two_witness_is_genuine():
    from oracles import min_eigenvalue
    from minus_two.graph import complement, is_bipartite, is_connected, regularity

    g = parse_graph6("GLvnno")
    assert regularity(g) == 5 and is_connected(g) and is_bipartite(complement(g)) is not None
    assert min_eigenvalue(g) < -2 - 1e-6
