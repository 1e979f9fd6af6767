import pytest

import gisemi


@pytest.fixture
def loopx():
    return gisemi.Graph.fixture("loopx")


def test_multiply_bicyclic_pattern():
    g = gisemi.Graph.fixture("loop1")
    product = gisemi.multiply(g.element("(@x|a.a)"), g.element("(a|@x)"))
    assert g.format(product) == "(@x|a)"


def test_inverse_and_order(loopx):
    x = loopx.element("(e.f|a.e.f)")
    assert loopx.format(gisemi.inverse(x)) == "(a.e.f|e.f)"
    assert gisemi.natural_leq(loopx.element("(e.f|e.f)"), loopx.element("(f|f)"))
    assert not gisemi.natural_leq(loopx.element("(f|f)"), loopx.element("(e.f|e.f)"))
    ups = [loopx.format(u) for u in gisemi.up_set(loopx.element("(e.f|e.f)"))]
    assert ups == ["(e.f|e.f)", "(f|f)", "(@z|@z)"]


def test_index_of_cycle_type(loopx):
    L = loopx.subsemigroup("cycle a.a e.f")
    assert L.kind == "cycle"
    assert gisemi.index(loopx, L) == 12
    reps = gisemi.coset_representatives(loopx, L)
    assert len(reps) == 12
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert not gisemi.same_coset(L, a, b)


def test_infinite_index_is_none():
    g = gisemi.Graph.fixture("loopx_fprime")
    assert gisemi.index(g, g.subsemigroup("cycle a.a e.f")) is None


def test_generated_gcd():
    g = gisemi.Graph.fixture("loop1")
    L = gisemi.generated([g.element("(@x|a.a)"), g.element("(@x|a.a.a)")])
    assert g.format(L) == "cycle a @x"


def test_conjugacy_on_bouquet():
    g = gisemi.Graph.fixture("bouquet2")
    L = g.subsemigroup("cycle a.b @*")
    K = g.subsemigroup("cycle b.a @*")
    assert gisemi.are_conjugate(L, K)
    st = gisemi.conjugator(L, K)
    assert st is not None
    assert g.format(st) == "(b|@*)"


def test_oracle_profile_stabilises(loopx):
    L = loopx.subsemigroup("cycle a.a e.f")
    profile = gisemi.oracle_index_profile(loopx, L, 5)
    assert profile[-1] == (5, 12)


def test_graph_from_text():
    g = gisemi.Graph.parse("vertex p\nvertex q  # comment\nedge u p q\n")
    assert g.num_vertices == 2 and g.num_edges == 1
    assert str(g) == "vertex p\nvertex q\nedge u p q\n"


def test_errors_are_typed(loopx):
    with pytest.raises(gisemi.ParseError):
        loopx.element("(e.q|e)")
    with pytest.raises(gisemi.GisemiError):
        loopx.element("(e|f)")
    with pytest.raises(gisemi.GisemiError):
        gisemi.up_set(gisemi.Element.zero())
