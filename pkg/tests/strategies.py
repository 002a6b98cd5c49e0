"""Hypothesis strategies for arrow presentations."""

from hypothesis import strategies as st

from tgp.arrow import ArrowPresentation


@st.composite
def presentations(draw, max_vertices=4, max_edges=5, min_edges=0):
    v = draw(st.integers(1, max_vertices))
    e = draw(st.integers(min_edges, max_edges))
    circles = [[] for _ in range(v)]
    for i in range(e):
        lab = "abcdefghij"[i]
        for _ in range(2):
            c = circles[draw(st.integers(0, v - 1))]
            c.insert(draw(st.integers(0, len(c))), (lab, draw(st.sampled_from((1, -1)))))
    return ArrowPresentation(tuple(tuple(c) for c in circles))
