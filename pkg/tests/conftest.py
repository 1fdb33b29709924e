from itertools import combinations

from hypothesis import strategies as st

from loop_energy import Graph, LoopedGraph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return Graph(n, frozenset(edges))


@st.composite
def looped_graphs(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    if g.n:
        loops = draw(st.sets(st.integers(0, g.n - 1)))
    else:
        loops = set()
    return LoopedGraph(g, frozenset(loops))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(range(n)))
