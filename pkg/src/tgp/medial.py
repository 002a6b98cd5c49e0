"""
Canonically checkerboard-coloured medial graphs and their k-valuations.

The medial vertex of edge e has four ports, the endpoints tail/head of its
two arrows. Medial edges are the free circle arcs between consecutive
arrow endpoints; arrowless circles become free loops. With arrows a, b of
e, the port pairs are

    white:    {head a, tail b}, {head b, tail a}
    black:    {tail a, head a}, {tail b, head b}
    crossing: {head a, head b}, {tail a, tail b}
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arrow import ArrowPresentation
from .errors import NotAValuation, TooLarge
from .polynomial import MultiPoly, as_fraction

WHITE, BLACK, CROSSING, TOTAL = "white", "black", "crossing", "total"

CLASSES = {
    "all": frozenset({WHITE, BLACK, CROSSING, TOTAL}),
    "admissible": frozenset({WHITE, CROSSING}),
    "r_permissible": frozenset({WHITE, BLACK, TOTAL}),
    "p_permissible": frozenset({WHITE, CROSSING, TOTAL}),
}
CLASS_ALIASES = {"R-permissible": "r_permissible", "P-permissible": "p_permissible",
                 "r-permissible": "r_permissible", "p-permissible": "p_permissible"}

DEFAULT_LIMIT = 3 ** 8


@dataclass(frozen=True)
class MedialGraph:
    vertex_labels: tuple  # edge label of G per medial vertex
    ports: tuple  # per vertex: (tail a, head a, tail b, head b) as medial-edge indices
    edge_ends: tuple  # per medial edge: the two port node ids it joins
    free_loops: int

    @property
    def num_vertices(self):
        return len(self.vertex_labels)

    @property
    def num_edges(self):
        return len(self.edge_ends)

    def pairing(self, v: int, kind: str) -> tuple:
        ta, ha, tb, hb = self.ports[v]
        return {
            WHITE: ((ha, tb), (hb, ta)),
            BLACK: ((ta, ha), (tb, hb)),
            CROSSING: ((ha, hb), (ta, tb)),
        }[kind]


def medial_graph(ap: ArrowPresentation) -> MedialGraph:
    tr = ap.tracer
    node_edge = {}
    ends = []
    # free arcs: end of token k to start of the next token
    for k in range(len(tr.tokens)):
        a = 2 * k + 1
        b = tr.free[a]
        node_edge[a] = node_edge[b] = len(ends)
        ends.append((a, b))
    ports = []
    for ka, kb in tr.occurrences:
        ports.append(tuple(node_edge[x] for x in (tr.tail(ka), tr.head(ka), tr.tail(kb), tr.head(kb))))
    return MedialGraph(tuple(tr.edges), tuple(ports), tuple(ends), tr.bare_circles)


def classify(mg: MedialGraph, colours, v: int) -> str:
    """Type of a valuation at medial vertex ``v``; ``colours`` indexes medial edges."""
    ta, ha, tb, hb = (colours[i] for i in mg.ports[v])
    cnt = Counter((ta, ha, tb, hb))
    if any(n % 2 for n in cnt.values()):
        raise NotAValuation(f"odd colour count at vertex {mg.vertex_labels[v]!r}")
    if len(cnt) == 1:
        return TOTAL
    if ha == tb and hb == ta:
        return WHITE
    if ta == ha and tb == hb:
        return BLACK
    return CROSSING


@dataclass(frozen=True)
class KValuation:
    colours: tuple
    free: tuple
    types: tuple

    @property
    def white(self):
        return self.types.count(WHITE)

    @property
    def black(self):
        return self.types.count(BLACK)

    @property
    def crossing(self):
        return self.types.count(CROSSING)

    @property
    def total(self):
        return self.types.count(TOTAL)


def _resolve_class(cls: str) -> frozenset:
    cls = CLASS_ALIASES.get(cls, cls)
    if cls not in CLASSES:
        raise ValueError(f"unknown valuation class {cls!r}")
    return CLASSES[cls]


def _edge_colourings(mg: MedialGraph, k: int, allowed: frozenset) -> Iterator[tuple]:
    """Backtracking over medial-edge colours with pruning at completed vertices."""
    m = mg.num_edges
    last = {}
    for v, ports in enumerate(mg.ports):
        last.setdefault(max(ports), []).append(v)
    colours = [0] * m
    types = [None] * mg.num_vertices

    def rec(i):
        if i == m:
            yield tuple(colours), tuple(types)
            return
        for col in range(1, k + 1):
            colours[i] = col
            ok = True
            for v in last.get(i, ()):
                try:
                    kind = classify(mg, colours, v)
                except NotAValuation:
                    ok = False
                    break
                if kind not in allowed:
                    ok = False
                    break
                types[v] = kind
            if ok:
                yield from rec(i + 1)

    if m == 0:
        yield (), ()
        return
    yield from rec(0)


def _check_size(mg: MedialGraph, k: int, limit: int):
    if k ** mg.num_edges > limit:
        raise TooLarge(f"k^|E(G_m)| = {k}^{mg.num_edges} exceeds {limit}")


def enumerate_kvaluations(mg: MedialGraph, k: int, cls: str = "all", limit: int = DEFAULT_LIMIT
                          ) -> Iterator[KValuation]:
    import itertools

    allowed = _resolve_class(cls)
    _check_size(mg, k, limit)
    free_choices = list(itertools.product(range(1, k + 1), repeat=mg.free_loops))
    for colours, types in _edge_colourings(mg, k, allowed):
        for free in free_choices:
            yield KValuation(colours, free, types)


def type_histogram(mg: MedialGraph, k: int, cls: str = "all", limit: int = DEFAULT_LIMIT) -> Counter:
    """Counter over (white, black, crossing, total) including the free-loop factor."""
    allowed = _resolve_class(cls)
    _check_size(mg, k, limit)
    hist: Counter = Counter()
    for _, types in _edge_colourings(mg, k, allowed):
        hist[(types.count(WHITE), types.count(BLACK), types.count(CROSSING), types.count(TOTAL))] += 1
    factor = k ** mg.free_loops
    return Counter({key: n * factor for key, n in hist.items()})


WEIGHTS = ("count", "two_pow_total", "signed_crossing", "b_weighted", "general")


def valuation_sum(mg: MedialGraph, k: int, cls: str = "all", weight: str = "count", *, b=None,
                  alpha=None, beta=None, gamma=None, limit: int = DEFAULT_LIMIT):
    """Weighted sum over the k-valuations of a class.

    ``general`` with no numeric (alpha, beta, gamma) returns a polynomial in
    them; every other case returns an exact rational.
    """
    hist = type_histogram(mg, k, cls, limit)
    if weight == "general":
        if alpha is None and beta is None and gamma is None:
            vars = ("alpha", "beta", "gamma")
            a, bb, g = MultiPoly.gens(vars)
            s = a + bb + g
            total = MultiPoly(vars)
            for (wh, bl, cr, tot), n in hist.items():
                total = total + n * s ** tot * a ** wh * bb ** bl * g ** cr
            return total
        a, bb, g = as_fraction(alpha), as_fraction(beta), as_fraction(gamma)
        return sum((n * (a + bb + g) ** tot * a ** wh * bb ** bl * g ** cr
                    for (wh, bl, cr, tot), n in hist.items()), Fraction(0))
    if weight == "count":
        fn = lambda wh, bl, cr, tot: 1
    elif weight == "two_pow_total":
        fn = lambda wh, bl, cr, tot: 2 ** tot
    elif weight == "signed_crossing":
        fn = lambda wh, bl, cr, tot: (-1) ** cr
    elif weight == "b_weighted":
        if b is None:
            raise ValueError("weight 'b_weighted' needs b")
        bf = as_fraction(b)
        fn = lambda wh, bl, cr, tot: (bf + 1) ** tot * bf ** wh
    else:
        raise ValueError(f"unknown weight {weight!r}")
    return sum((n * Fraction(fn(*key)) for key, n in hist.items()), Fraction(0))
