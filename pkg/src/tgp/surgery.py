"""
Edge surgeries on arrow presentations.

Contraction and partial duality share one splice: the two arrows of the
edge and the arcs under them are removed, and head(a) is joined to tail(b),
head(b) to tail(a). Contraction leaves the new segments plain; partial
duality puts a fresh copy of the edge's arrows on them, directed
head(a)->tail(b) and head(b)->tail(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrow import ArrowPresentation, RibbonInvariants, invariants
from .errors import TooLarge, UnknownEdge
from .polynomial import MultiPoly

DEFAULT_FINGERPRINT_BOUND = 10


def delete(ap: ArrowPresentation, edges: Iterable[str]) -> ArrowPresentation:
    edges = ap.check_edges(edges)
    if not edges:
        return ap
    return ArrowPresentation(tuple(tuple(t for t in c if t[0] not in edges) for c in ap.circles))


def _splice(ap: ArrowPresentation, label: str, carry_arrows: bool) -> ArrowPresentation:
    ap.check_edges([label])
    tr = ap.tracer
    ka, kb = tr.occurrences[tr.edge_index[label]]
    n = tr.num_nodes
    # link[node] = (partner, token emitted when walking node -> partner, or None)
    link: list = [None] * n
    for k, (_, _, lab, s) in enumerate(tr.tokens):
        if lab == label:
            continue
        link[2 * k] = (2 * k + 1, (lab, s))
        link[2 * k + 1] = (2 * k, (lab, -s))
    ta, ha, tb, hb = tr.tail(ka), tr.head(ka), tr.tail(kb), tr.head(kb)
    for src, dst in ((ha, tb), (hb, ta)):
        fwd = (label, 1) if carry_arrows else None
        bwd = (label, -1) if carry_arrows else None
        link[src] = (dst, fwd)
        link[dst] = (src, bwd)

    seen = [False] * n
    circles = []
    node_base = 0
    for c in ap.circles:
        if not c:
            circles.append(())
            continue
        for start in range(node_base, node_base + 2 * len(c)):
            if seen[start]:
                continue
            out = []
            node = start
            while True:
                seen[node] = True
                nxt, tok = link[node]
                seen[nxt] = True
                if tok is not None:
                    out.append(tok)
                node = tr.free[nxt]
                if node == start:
                    break
            circles.append(tuple(out))
        node_base += 2 * len(c)
    return ArrowPresentation(tuple(circles))


def contract(ap: ArrowPresentation, edge: str) -> ArrowPresentation:
    return _splice(ap, edge, carry_arrows=False)


def partial_petrial(ap: ArrowPresentation, edges: Iterable[str]) -> ArrowPresentation:
    """Reverse the first-listed arrow of every edge in ``edges``."""
    edges = set(ap.check_edges(edges))
    if not edges:
        return ap
    circles = []
    for c in ap.circles:
        new = []
        for lab, s in c:
            if lab in edges:
                edges.discard(lab)
                s = -s
            new.append((lab, s))
        circles.append(tuple(new))
    return ArrowPresentation(tuple(circles))


def partial_dual(ap: ArrowPresentation, edges: Iterable[str]) -> ArrowPresentation:
    edges = ap.check_edges(edges)
    for lab in sorted(edges, key=ap.edges.index):
        ap = _splice(ap, lab, carry_arrows=True)
    return ap


def geometric_dual(ap: ArrowPresentation) -> ArrowPresentation:
    return partial_dual(ap, ap.edges)


def petrial(ap: ArrowPresentation) -> ArrowPresentation:
    return partial_petrial(ap, ap.edges)


DELTA, TAU = "delta", "tau"


@dataclass(frozen=True)
class Atom:
    op: str  # "delta" | "tau"
    edges: frozenset

    def __post_init__(self):
        if self.op not in (DELTA, TAU):
            raise ValueError(f"unknown twisted-dual operation {self.op!r}")
        object.__setattr__(self, "edges", frozenset(self.edges))


def twisted_dual(ap: ArrowPresentation, word: Sequence[Atom | tuple]) -> ArrowPresentation:
    """Apply the atoms of ``word`` left to right."""
    for atom in word:
        if not isinstance(atom, Atom):
            atom = Atom(*atom)
        if atom.op == DELTA:
            ap = partial_dual(ap, atom.edges)
        else:
            ap = partial_petrial(ap, atom.edges)
    return ap


@dataclass(frozen=True)
class Fingerprint:
    invariants: RibbonInvariants
    q: MultiPoly


def fingerprint(ap: ArrowPresentation, bound: int = DEFAULT_FINGERPRINT_BOUND) -> Fingerprint:
    if ap.num_edges > bound:
        raise TooLarge(f"fingerprint needs e <= {bound}, got {ap.num_edges}")
    from .engines import q_statesum

    return Fingerprint(invariants(ap), q_statesum(ap, max_edges=bound))


__all__ = [
    "Atom", "DELTA", "TAU", "Fingerprint", "UnknownEdge", "contract", "delete", "fingerprint",
    "geometric_dual", "partial_dual", "partial_petrial", "petrial", "twisted_dual",
]
