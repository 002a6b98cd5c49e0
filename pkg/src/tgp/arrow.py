"""
Arrow presentations of embedded (ribbon) graphs.

A presentation is a sequence of circles (vertices); each circle is a cyclic
sequence of signed arrow tokens. ``+`` means the arrow points along the
listed traversal of its circle, ``-`` against it. Every edge label occurs
exactly twice.

Boundary tracing works on arrow endpoints. Each token has a *start* and an
*end* endpoint in listing order; its tail is the start when the sign is
``+``. Consecutive tokens on a circle are joined by a free arc (end of one
to start of the next). A kept edge with arrows a, b contributes the edge
sides head(a)-tail(b) and head(b)-tail(a); an erased arrow is bridged by
its own arc. Every endpoint then has degree two and the cycles are the
boundary components.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import MalformedPresentation, ParseError, UnknownEdge

Token = tuple  # (label: str, sign: +1 | -1)

LABEL_RE = re.compile(r"[A-Za-z0-9_.]+")

# per-edge state codes used by the tracer
DELETED, KEPT, TWISTED = 0, 1, 2


def _min_rotation(circle: tuple) -> tuple:
    if not circle:
        return circle
    return min(circle[i:] + circle[:i] for i in range(len(circle)))


@dataclass(frozen=True, eq=False)
class ArrowPresentation:
    circles: tuple = ()

    def __post_init__(self):
        circles = tuple(tuple((str(lab), 1 if s > 0 else -1) for lab, s in c) for c in self.circles)
        object.__setattr__(self, "circles", circles)
        counts = Counter(lab for c in circles for lab, _ in c)
        bad = sorted(lab for lab, n in counts.items() if n != 2)
        if bad:
            raise MalformedPresentation(f"labels must occur exactly twice: {bad}")

    # equality is up to cyclic rotation of each circle
    @cached_property
    def _key(self):
        return tuple(_min_rotation(c) for c in self.circles)

    def __eq__(self, other):
        if not isinstance(other, ArrowPresentation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"ArrowPresentation({format_arrow(self)!r})"

    def __str__(self):
        return format_arrow(self)

    @cached_property
    def edges(self) -> tuple:
        """Edge labels in order of first occurrence."""
        seen = {}
        for c in self.circles:
            for lab, _ in c:
                seen.setdefault(lab, None)
        return tuple(seen)

    @property
    def num_vertices(self) -> int:
        return len(self.circles)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def tracer(self) -> "Tracer":
        return Tracer(self)

    def check_edges(self, labels: Iterable[str]) -> frozenset:
        labels = frozenset(labels)
        unknown = labels - set(self.edges)
        if unknown:
            raise UnknownEdge(f"unknown edge label(s): {sorted(unknown)}")
        return labels


# --------------------------------------------------------------------------
# text / JSON formats

def parse(text: str) -> ArrowPresentation:
    """Parse ``(a+ b- ...)(...)`` into a presentation.

    >>> parse("(a+ a-)").circles
    ((('a', 1), ('a', -1)),)
    """
    circles = []
    current = None
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "(":
            if current is not None:
                raise ParseError("nested '('", i)
            current = []
            i += 1
        elif ch == ")":
            if current is None:
                raise ParseError("unmatched ')'", i)
            circles.append(tuple(current))
            current = None
            i += 1
        else:
            if current is None:
                raise ParseError(f"token outside a circle: {ch!r}", i)
            m = LABEL_RE.match(text, i)
            if not m:
                raise ParseError(f"bad character {ch!r}", i)
            j = m.end()
            if j >= n or text[j] not in "+-":
                raise ParseError(f"label {m.group()!r} lacks a sign", j)
            current.append((m.group(), 1 if text[j] == "+" else -1))
            i = j + 1
            if i < n and not (text[i].isspace() or text[i] in "()"):
                raise ParseError("tokens must be separated by whitespace", i)
    if current is not None:
        raise ParseError("unterminated circle", n)
    return ArrowPresentation(tuple(circles))


def format_arrow(ap: ArrowPresentation) -> str:
    return "".join("(" + " ".join(f"{lab}{'+' if s > 0 else '-'}" for lab, s in c) + ")" for c in ap.circles)


def to_json(ap: ArrowPresentation) -> dict:
    return {"circles": [[{"edge": lab, "sign": s} for lab, s in c] for c in ap.circles]}


def from_json(data) -> ArrowPresentation:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return ArrowPresentation(tuple(tuple((t["edge"], int(t["sign"])) for t in c) for c in data["circles"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON presentation: {exc}") from exc


def load(text: str) -> ArrowPresentation:
    """Accept either the arrow text format or its JSON mirror."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse(text)


def relabel(ap: ArrowPresentation, mapping) -> ArrowPresentation:
    return ArrowPresentation(tuple(tuple((mapping.get(l, l), s) for l, s in c) for c in ap.circles))


def disjoint_union(*aps: ArrowPresentation) -> ArrowPresentation:
    circles = []
    used = set()
    for k, ap in enumerate(aps):
        clash = used & set(ap.edges)
        mapping = {l: f"{l}_{k}" for l in clash}
        ap = relabel(ap, mapping)
        used |= set(ap.edges)
        circles.extend(ap.circles)
    return ArrowPresentation(tuple(circles))


# --------------------------------------------------------------------------
# tracing engine

class Tracer:
    """Flattened endpoint structure of a presentation, reused by every engine.

    Token ``k`` owns nodes ``2k`` (start) and ``2k+1`` (end).
    """

    def __init__(self, ap: ArrowPresentation):
        self.ap = ap
        tokens = []
        free = []
        bare = 0
        for ci, c in enumerate(ap.circles):
            if not c:
                bare += 1
                continue
            base = len(tokens)
            for pos, (lab, s) in enumerate(c):
                tokens.append((ci, pos, lab, s))
            m = len(c)
            for pos in range(m):
                free.append((2 * (base + pos) + 1, 2 * (base + (pos + 1) % m)))
        self.tokens = tokens
        self.bare_circles = bare
        n = 2 * len(tokens)
        self.num_nodes = n
        self.free = [0] * n
        for a, b in free:
            self.free[a] = b
            self.free[b] = a
        self.edges = ap.edges
        self.edge_index = {lab: i for i, lab in enumerate(self.edges)}
        occ: dict[str, list[int]] = {}
        for k, (_, _, lab, _) in enumerate(tokens):
            occ.setdefault(lab, []).append(k)
        self.occurrences = [tuple(occ[lab]) for lab in self.edges]
        self.circle_of_token = [t[0] for t in tokens]

    def tail(self, k: int) -> int:
        return 2 * k if self.tokens[k][3] > 0 else 2 * k + 1

    def head(self, k: int) -> int:
        return 2 * k + 1 if self.tokens[k][3] > 0 else 2 * k

    def links(self, states: Sequence[int]) -> list[int]:
        """Non-free partner of every node for the given per-edge states."""
        link = [0] * self.num_nodes
        for (ka, kb), st in zip(self.occurrences, states):
            if st == DELETED:
                for k in (ka, kb):
                    link[2 * k] = 2 * k + 1
                    link[2 * k + 1] = 2 * k
                continue
            ta, ha, tb, hb = self.tail(ka), self.head(ka), self.tail(kb), self.head(kb)
            if st == TWISTED:
                tb, hb = hb, tb
            link[ha], link[tb] = tb, ha
            link[hb], link[ta] = ta, hb
        return link

    def cycles(self, states: Sequence[int]) -> list[list[int]]:
        """Node cycles of the boundary structure (bare circles excluded)."""
        link = self.links(states)
        free = self.free
        seen = [False] * self.num_nodes
        out = []
        for start in range(self.num_nodes):
            if seen[start]:
                continue
            cyc = []
            node = start
            while True:
                seen[node] = True
                cyc.append(node)
                nxt = link[node]
                seen[nxt] = True
                cyc.append(nxt)
                node = free[nxt]
                if node == start:
                    break
            out.append(cyc)
        return out

    def count(self, states: Sequence[int]) -> int:
        """Number of boundary components for the given per-edge states."""
        link = self.links(states)
        free = self.free
        seen = bytearray(self.num_nodes)
        total = self.bare_circles
        for start in range(self.num_nodes):
            if seen[start]:
                continue
            total += 1
            node = start
            while not seen[node]:
                seen[node] = 1
                nxt = link[node]
                seen[nxt] = 1
                node = free[nxt]
        return total

    def components(self, kept: Sequence[bool]) -> int:
        """Connected components of the spanning subgraph on the kept edges."""
        parent = list(range(len(self.ap.circles)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = len(parent)
        for (ka, kb), keep in zip(self.occurrences, kept):
            if keep:
                ra, rb = find(self.circle_of_token[ka]), find(self.circle_of_token[kb])
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        return comps

    def states_for(self, keep: Iterable[str], twist: Iterable[str] = ()) -> list[int]:
        keep, twist = set(keep), set(twist)
        return [(TWISTED if lab in twist else KEPT) if lab in keep else DELETED for lab in self.edges]


# --------------------------------------------------------------------------
# boundary walks and invariants

@dataclass(frozen=True)
class Endpoint:
    edge: str
    occurrence: int  # 0 for the first-listed arrow of the label, 1 for the second
    end: str  # "tail" | "head"


@dataclass(frozen=True)
class BoundaryWalk:
    """Cyclic endpoint sequence; bare walks record the circle they run around."""
    endpoints: tuple = ()
    circle: int | None = None

    def __len__(self):
        return len(self.endpoints)


def boundary_components(ap: ArrowPresentation, keep: Iterable[str] | None = None) -> list[BoundaryWalk]:
    keep = ap.check_edges(ap.edges if keep is None else keep)
    tr = ap.tracer
    states = tr.states_for(keep)
    occ_index = {}
    for ka, kb in tr.occurrences:
        occ_index[ka], occ_index[kb] = 0, 1

    def describe(node):
        k = node // 2
        lab = tr.tokens[k][2]
        return Endpoint(lab, occ_index[k], "tail" if node == tr.tail(k) else "head")

    walks = []
    for cyc in tr.cycles(states):
        kept_nodes = [n for n in cyc if tr.tokens[n // 2][2] in keep]
        if kept_nodes:
            walks.append(BoundaryWalk(tuple(describe(n) for n in kept_nodes)))
        else:
            walks.append(BoundaryWalk((), tr.tokens[cyc[0] // 2][0]))
    for ci, c in enumerate(ap.circles):
        if not c:
            walks.append(BoundaryWalk((), ci))
    return walks


@dataclass(frozen=True)
class RibbonInvariants:
    v: int
    e: int
    c: int
    f: int
    orientable: bool
    r: int = field(init=False)
    n: int = field(init=False)
    gamma: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "r", self.v - self.c)
        object.__setattr__(self, "n", self.e - (self.v - self.c))
        object.__setattr__(self, "gamma", 2 * self.c - self.v + self.e - self.f)

    @property
    def plane(self) -> bool:
        return self.c == 1 and self.gamma == 0

    def as_dict(self) -> dict:
        return {"v": self.v, "e": self.e, "c": self.c, "f": self.f, "r": self.r, "n": self.n,
                "gamma": self.gamma, "orientable": self.orientable}


def num_faces(ap: ArrowPresentation) -> int:
    tr = ap.tracer
    return tr.count([KEPT] * len(tr.edges))


def num_components(ap: ArrowPresentation) -> int:
    tr = ap.tracer
    return tr.components([True] * len(tr.edges))


def invariants(ap: ArrowPresentation) -> RibbonInvariants:
    return RibbonInvariants(ap.num_vertices, ap.num_edges, num_components(ap), num_faces(ap), is_orientable(ap))


def is_plane(ap: ArrowPresentation) -> bool:
    return invariants(ap).plane


def is_orientable(ap: ArrowPresentation) -> bool:
    """2-colour circles so that every edge has equal signs relative to them."""
    tr = ap.tracer
    nv = len(ap.circles)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for ka, kb in tr.occurrences:
        ca, cb = tr.circle_of_token[ka], tr.circle_of_token[kb]
        # parity 0: the two circle orientations must agree
        parity = 0 if tr.tokens[ka][3] == tr.tokens[kb][3] else 1
        adj[ca].append((cb, parity))
        adj[cb].append((ca, parity))
    colour = [None] * nv
    for root in range(nv):
        if colour[root] is not None:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w, p in adj[u]:
                want = colour[u] ^ p
                if colour[w] is None:
                    colour[w] = want
                    stack.append(w)
                elif colour[w] != want:
                    return False
    return True


@dataclass(frozen=True)
class AbstractMultigraph:
    vertices: tuple
    edges: tuple  # (u, v, label)

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def has_loop(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def components(self, edge_subset=None) -> int:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = len(parent)
        for i, (u, v, _) in enumerate(self.edges):
            if edge_subset is not None and i not in edge_subset:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return comps

    def is_bipartite(self) -> bool:
        adj = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            if u == v:
                return False
            adj[u].append(v)
            adj[v].append(u)
        colour = {}
        for root in self.vertices:
            if root in colour:
                continue
            colour[root] = 0
            stack = [root]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return False
        return True


def underlying_graph(ap: ArrowPresentation) -> AbstractMultigraph:
    tr = ap.tracer
    edges = tuple((tr.circle_of_token[ka], tr.circle_of_token[kb], lab)
                  for lab, (ka, kb) in zip(tr.edges, tr.occurrences))
    return AbstractMultigraph(tuple(range(len(ap.circles))), edges)


def is_checkerboard_colourable(ap: ArrowPresentation) -> bool:
    from .surgery import geometric_dual

    return underlying_graph(geometric_dual(ap)).is_bipartite()
