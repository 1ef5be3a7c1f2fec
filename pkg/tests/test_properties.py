from hypothesis import given, settings
from hypothesis import strategies as st

from sierdom.domination import Parameter, brute_force, exact_gamma_dr, exact_gamma_r, is_drdf, is_rdf
from sierdom.graph import Graph
from sierdom.sierpinski import sierpinski

import oracles


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_exact_dr_equals_brute_force(g):
    res = exact_gamma_dr(g)
    assert res.weight == brute_force(g, Parameter.GAMMA_DR).weight
    assert is_drdf(g, res.witness) and not res.witness.part(1)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_exact_r_equals_brute_force(g):
    res = exact_gamma_r(g)
    assert res.weight == brute_force(g, Parameter.GAMMA_R).weight
    assert is_rdf(g, res.witness)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_brute_force_equals_itertools_oracle(g):
    assert brute_force(g, Parameter.GAMMA_DR).weight == oracles.gamma_dr(g.n, g.edges)
    assert brute_force(g, Parameter.GAMMA_R).weight == oracles.gamma_r(g.n, g.edges)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_label_one_never_needed(g):
    full = brute_force(g, Parameter.GAMMA_DR).weight
    assert full == brute_force(g, Parameter.GAMMA_DR, forbid_one=True).weight


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=4), st.integers(2, 3))
def test_sierpinski_solver_vs_brute_force(g, t):
    s = sierpinski(g, t).graph
    if s.n > 13:
        return
    assert exact_gamma_dr(s).weight == brute_force(s, Parameter.GAMMA_DR).weight


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.data())
def test_verifier_agrees_with_oracle(g, data):
    f = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    adj = oracles.adjacency(g.n, g.edges)
    assert bool(is_drdf(g, f)) == oracles.drdf_ok(adj, f)
    r = [min(x, 2) for x in f]
    assert bool(is_rdf(g, r)) == oracles.rdf_ok(adj, r)
