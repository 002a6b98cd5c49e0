"""
Graph polynomial engines: transition (two routes), ribbon graph, Tutte,
Penrose, chromatic, and a brute-force edge-colouring counter.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .arrow import DELETED, KEPT, TWISTED, AbstractMultigraph, ArrowPresentation, num_components
from .errors import TooLarge
from .polynomial import LAMBDA_VARS, Q_VARS, R_VARS, T_VARS, MultiPoly, as_fraction

STATE_MAX_EDGES = 10  # 3^e states
SUBSET_MAX_EDGES = 16  # 2^e subsets


def _check(ap_or_g, bound: int, what: str):
    e = ap_or_g.num_edges
    if e > bound:
        raise TooLarge(f"{what} enumeration needs e <= {bound}, got {e}")


@dataclass(frozen=True)
class TransitionWeights:
    """Medial weights: white smoothing, black smoothing, crossing; plus t."""
    alpha: object
    beta: object
    gamma: object
    t: object

    def point(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma, "t": self.t}


# --------------------------------------------------------------------------
# transition polynomial

@lru_cache(maxsize=4096)
def _q_statesum_cached(ap: ArrowPresentation) -> MultiPoly:
    tr = ap.tracer
    e = len(tr.edges)
    hist: Counter = Counter()
    codes = (KEPT, DELETED, TWISTED)
    for states in itertools.product(codes, repeat=e):
        f = tr.count(states)
        hist[(states.count(KEPT), states.count(DELETED), states.count(TWISTED), f)] += 1
    return MultiPoly(Q_VARS, hist)


def q_statesum(ap: ArrowPresentation, max_edges: int = STATE_MAX_EDGES) -> MultiPoly:
    """Transition polynomial as a sum over (white, black, crossing) edge states.

    White keeps the edge, black deletes it, crossing keeps it half-twisted;
    the state's curve count is the number of boundary components.
    """
    _check(ap, max_edges, "state-sum")
    return _q_statesum_cached(ap)


def q_delcon(ap: ArrowPresentation, max_edges: int = STATE_MAX_EDGES, pivot: str = "min") -> MultiPoly:
    """Transition polynomial by deletion-contraction, independent of the state sum."""
    _check(ap, max_edges, "deletion-contraction")
    from .surgery import contract, delete, partial_petrial

    alpha, beta, gamma, t = MultiPoly.gens(Q_VARS)
    choose = min if pivot == "min" else max
    memo: dict = {}

    def rec(g: ArrowPresentation) -> MultiPoly:
        if g in memo:
            return memo[g]
        if not g.edges:
            res = t ** g.num_vertices
        else:
            e = choose(g.edges)
            res = (alpha * rec(contract(g, e))
                   + beta * rec(delete(g, [e]))
                   + gamma * rec(contract(partial_petrial(g, [e]), e)))
        memo[g] = res
        return res

    return rec(ap)


def q_eval(ap: ArrowPresentation, w: TransitionWeights | dict, max_edges: int = STATE_MAX_EDGES) -> Fraction:
    point = w.point() if isinstance(w, TransitionWeights) else w
    return q_statesum(ap, max_edges).eval(point)


# --------------------------------------------------------------------------
# ribbon graph / Tutte / Penrose

def _subsets(e: int):
    return itertools.product((False, True), repeat=e)


@lru_cache(maxsize=4096)
def _br_cached(ap: ArrowPresentation) -> MultiPoly:
    tr = ap.tracer
    v = ap.num_vertices
    r_g = v - num_components(ap)
    hist: Counter = Counter()
    for kept in _subsets(len(tr.edges)):
        k = sum(kept)
        c = tr.components(kept)
        f = tr.count([KEPT if x else DELETED for x in kept])
        r = v - c
        n = k - r
        zexp = c - f + n
        gamma_a = 2 * c - v + k - f
        assert zexp == gamma_a and zexp >= 0, (ap, kept)
        hist[(r_g - r, n, zexp)] += 1
    out: dict = {}
    # expand (x-1)^d exactly
    for (d, n, z), mult in hist.items():
        for i in range(d + 1):
            key = (i, n, z)
            out[key] = out.get(key, 0) + mult * comb(d, i) * (-1) ** (d - i)
    return MultiPoly(R_VARS, out)


def br_poly(ap: ArrowPresentation, max_edges: int = SUBSET_MAX_EDGES) -> MultiPoly:
    """Ribbon graph polynomial R(G; x, y, z) by spanning-subgraph expansion."""
    _check(ap, max_edges, "subset")
    return _br_cached(ap)


def tutte_poly(ap: ArrowPresentation, max_edges: int = SUBSET_MAX_EDGES) -> MultiPoly:
    x, y = MultiPoly.gens(T_VARS)
    return br_poly(ap, max_edges).compose({"x": x, "y": y - 1, "z": MultiPoly.const(1, T_VARS)}, T_VARS)


@lru_cache(maxsize=4096)
def _penrose_cached(ap: ArrowPresentation) -> MultiPoly:
    tr = ap.tracer
    out: Counter = Counter()
    for twisted in _subsets(len(tr.edges)):
        f = tr.count([TWISTED if x else KEPT for x in twisted])
        out[(f,)] += -1 if sum(twisted) % 2 else 1
    return MultiPoly(LAMBDA_VARS, out)


def penrose_poly(ap: ArrowPresentation, max_edges: int = SUBSET_MAX_EDGES) -> MultiPoly:
    """Signed sum over partial Petrials of lambda^(faces)."""
    _check(ap, max_edges, "subset")
    return _penrose_cached(ap)


# --------------------------------------------------------------------------
# abstract graph engines

def chromatic_poly(g: AbstractMultigraph, max_edges: int = SUBSET_MAX_EDGES) -> MultiPoly:
    """Chromatic polynomial by the signed spanning-subgraph expansion."""
    _check(g, max_edges, "subset")
    out: Counter = Counter()
    m = g.num_edges
    for mask in range(1 << m):
        subset = {i for i in range(m) if mask >> i & 1}
        out[(g.components(subset),)] += -1 if len(subset) % 2 else 1
    return MultiPoly(LAMBDA_VARS, out)


def count_edge_k_colourings(g: AbstractMultigraph, k: int, limit: int = 3 ** 20) -> int:
    """Proper edge k-colourings; parallel edges are adjacent, loops make it 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    m = g.num_edges
    if m and k ** m > limit:
        raise TooLarge(f"k^e = {k}^{m} exceeds {limit}")
    if g.has_loop():
        return 0
    ends = [(u, v) for u, v, _ in g.edges]
    # earlier edges sharing an endpoint
    conflicts = [[j for j in range(i) if set(ends[i]) & set(ends[j])] for i in range(m)]
    colour = [0] * m

    def rec(i):
        if i == m:
            return 1
        total = 0
        for col in range(k):
            if all(colour[j] != col for j in conflicts[i]):
                colour[i] = col
                total += rec(i + 1)
        return total

    return rec(0)


def chromatic_dual(ap: ArrowPresentation, max_edges: int = SUBSET_MAX_EDGES) -> MultiPoly:
    from .arrow import underlying_graph
    from .surgery import geometric_dual

    return chromatic_poly(underlying_graph(geometric_dual(ap)), max_edges)


def eval_at(p: MultiPoly, **values) -> Fraction:
    return p.eval({k: as_fraction(v) for k, v in values.items()})
