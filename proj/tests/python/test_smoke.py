import pytest

import lilyk


def test_graph_roundtrip():
    g = lilyk.grid(3, 2)
    assert g.n == 6 and g.m == 7
    text = lilyk.serialize_graph(g)
    assert lilyk.parse_graph(text) == g
    assert lilyk.bounded_distance(g, 0, 5, 5) == 3
    assert lilyk.bounded_distance(g, 0, 5, 2) is None


def test_bad_input_raises():
    with pytest.raises(ValueError):
        lilyk.parse_graph("p 2 1\ne 0 7\n")
    with pytest.raises(ValueError):
        lilyk.generate("blob:3")


def test_oracles_and_approximation():
    s = lilyk.star(6)
    assert lilyk.opt_rc_dom(s, 1, 1).optimum == 1
    assert lilyk.opt_total(s, 1).optimum == 2
    assert lilyk.opt_roman(s, 1).optimum == 2
    assert lilyk.max_scattered(s, 1, 1).optimum == 1
    assert lilyk.max_scattered(lilyk.cycle(9), 1, 1).optimum == 3
    res = lilyk.approx_dominating(lilyk.cycle(9), 1)
    assert len(res["witnesses"]) <= 3 <= len(res["dominators"])
    assert lilyk.approx_rc_dominating(lilyk.cycle(5), 1, 4) is None


@pytest.mark.parametrize("problem", ["rcdom", "total", "roman", "scatter", "lambdamu", "perfectcode"])
def test_pipeline_agrees(problem):
    g = lilyk.generate("spider:2,4,1", seed=5, relabel=True)
    rep = lilyk.verify_pipeline(g, problem, r=1, k_lo=0, k_hi=g.n)
    assert rep["ok"], rep["report"]


def test_bikernel_and_kernel():
    g = lilyk.star(12)
    bik = lilyk.bikernel(g, "rcdom", 1)
    assert bik.graph.n < g.n
    assert lilyk.annotated_optimum(bik) == 1
    assert lilyk.AnnotatedInstance.parse(bik.serialize()) == bik
    ker = lilyk.kernelize(g, "rcdom", 1)
    assert ker.offset == 1
    assert lilyk.opt_rc_dom(ker.graph, 1, 1).optimum == 1 + ker.offset


def test_multikernels():
    g = lilyk.grid(3, 3)
    fam = lilyk.multikernel_domination_family(g, 1)
    h = fam["graph"]
    base = lilyk.opt_rc_dom(g, 1, 1).optimum
    assert lilyk.opt_rc_dom(h, 1, 1).optimum == base + fam["dom_offset"]
    di = lilyk.multikernel_dom_ind(g, 1, 1)
    assert di["sigma"] == 3


def test_projection_kernel_and_lily():
    g = lilyk.random_degenerate(20, 2, 7)
    x = [0, 4, 9, 13]
    kept = lilyk.projection_kernel(g, x, 2, 2)
    assert set(x) <= set(kept)
    assert lilyk.verify_projection_kernel(g, x, kept, 2, 2)
    s = lilyk.star(8)
    lily = lilyk.find_uniform_lily(s, list(range(1, 9)), 1, 1, 1, 3)
    assert lily["verified"] and lily["roots"] == [0]
