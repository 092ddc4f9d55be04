import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdom.codes import (
    CodeKind,
    Verdict,
    admits_old,
    is_code,
    is_dominating,
    is_total_dominating,
    separates,
    total_separates,
)
from locdom.graph import make_cycle, make_path, make_star, mycielski

from conftest import graphs


def test_parse_kind():
    assert CodeKind.parse("ltd") is CodeKind.LTD
    assert CodeKind.parse(CodeKind.OLD) is CodeKind.OLD
    with pytest.raises(ValueError):
        CodeKind.parse("ID")
    assert CodeKind.TDOM.total and not CodeKind.TDOM.locating
    assert CodeKind.LD.locating and not CodeKind.LD.total


def test_verdict_consistency():
    assert not Verdict(False, (0, "undominated"))
    with pytest.raises(ValueError):
        Verdict(True, (0, "undominated"))
    with pytest.raises(ValueError):
        Verdict(False)


class TestDomination:
    def test_triangle(self):
        assert is_dominating(make_cycle(3), {0, 1})

    def test_empty_on_p4(self):
        assert is_dominating(make_path(4), set()).failure == (0, "undominated")

    def test_middle_of_p4(self):
        assert is_dominating(make_path(4), {1, 2}).ok

    def test_total_p2(self):
        assert is_total_dominating(make_path(2), {0, 1}).ok
        assert is_total_dominating(make_path(2), {0}).failure == (0, "undominated")

    def test_ld_witness_of_m_c3_not_total(self):
        M = mycielski(make_cycle(3))
        verdict = is_total_dominating(M, {0, 1, M.apex})
        assert not verdict.ok and verdict.failure[1] == "undominated"

    def test_bad_vertex(self):
        with pytest.raises(ValueError):
            is_dominating(make_path(3), {5})


class TestSeparation:
    def test_examples(self):
        assert separates(make_cycle(5), {0, 1}, 2, 4)
        assert not total_separates(make_cycle(4), {0}, 1, 3)
        assert not total_separates(make_path(5), {1, 4}, 0, 2)

    def test_same_vertex(self):
        with pytest.raises(ValueError):
            separates(make_path(3), {0}, 1, 1)
        with pytest.raises(ValueError):
            total_separates(make_path(3), {0}, 1, 1)


class TestIsCode:
    def test_examples(self):
        assert is_code(make_cycle(3), {0, 1}, "LD").ok
        assert is_code(mycielski(make_cycle(3)), {0, 1, 6}, CodeKind.LD).ok
        assert is_code(make_cycle(5), {0, 1, 2, 3}, CodeKind.OLD).ok

    def test_lowest_unseparated_pair(self):
        # domination is reported before separation
        assert is_code(make_cycle(5), {0}, "LD").failure == (2, "undominated")
        assert is_code(make_path(3), {1}, "LD").failure == ((0, 2), "unseparated")

    def test_old_checks_pairs_inside_code(self):
        # {0,1} on P_2 is OLD; on P_3 the code pair (0, 2) shares N(.)={1}
        assert is_code(make_path(2), {0, 1}, "OLD").ok
        assert is_code(make_path(3), {0, 1, 2}, "OLD").failure == ((0, 2), "unseparated")

    def test_whole_vertex_set(self):
        # V is an LD-set of any graph, and LTD exactly when there is no isolated vertex
        assert is_code(make_star(4), range(5), "LD").ok
        assert is_code(make_star(4), range(5), "LTD").ok


def test_admits_old():
    assert not admits_old(make_cycle(4))
    assert not admits_old(mycielski(make_star(3)))
    assert admits_old(make_cycle(5))
    assert not admits_old(make_path(1))


KINDS = list(CodeKind)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.data())
def test_monotone_under_supersets(G, data):
    C = data.draw(st.sets(st.integers(0, G.n - 1)))
    extra = data.draw(st.sets(st.integers(0, G.n - 1)))
    for kind in KINDS:
        if is_code(G, C, kind).ok:
            assert is_code(G, C | extra, kind).ok


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.data())
def test_kind_implications(G, data):
    C = data.draw(st.sets(st.integers(0, G.n - 1)))
    old, ltd, ld = (is_code(G, C, k).ok for k in ("OLD", "LTD", "LD"))
    tdom, dom = is_code(G, C, "TDOM").ok, is_code(G, C, "DOM").ok
    assert not old or ltd
    assert not ltd or (ld and tdom)
    assert not ld or dom
    assert not tdom or dom


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_whole_set_old_iff_admissible(G):
    assert is_code(G, range(G.n), "OLD").ok == admits_old(G)
