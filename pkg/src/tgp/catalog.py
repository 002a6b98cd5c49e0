"""Small embedded graphs for verification, plus a seeded random generator."""

from __future__ import annotations

import math
import random
import string
from dataclasses import dataclass
from functools import lru_cache

from .arrow import ArrowPresentation, RibbonInvariants, invariants, parse

MAX_CATALOG_EDGES = 6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    text: str
    expected: RibbonInvariants
    notes: str = ""

    @property
    def graph(self) -> ArrowPresentation:
        return parse(self.text)


def plane_embedding(coords: dict, edges) -> ArrowPresentation:
    """Rotation system of a straight-line drawing: half-edges sorted counterclockwise, all arrows +."""
    incident = {v: [] for v in coords}
    for u, w, lab in edges:
        for a, b in ((u, w), (w, u)):
            (x0, y0), (x1, y1) = coords[a], coords[b]
            incident[a].append((math.atan2(y1 - y0, x1 - x0), lab))
    return ArrowPresentation(tuple(tuple((lab, 1) for _, lab in sorted(incident[v])) for v in coords))


def k4_plane() -> ArrowPresentation:
    coords = {0: (0, 0), 1: (0, 3), 2: (-3, -2), 3: (3, -2)}
    edges = [(0, 1, "a"), (0, 2, "b"), (0, 3, "c"), (1, 2, "d"), (2, 3, "e"), (3, 1, "f")]
    return plane_embedding(coords, edges)


def cube_plane() -> ArrowPresentation:
    outer = [(-2, -2), (2, -2), (2, 2), (-2, 2)]
    inner = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    coords = {i: p for i, p in enumerate(outer + inner)}
    edges = []
    labels = iter(string.ascii_lowercase)
    for i in range(4):
        edges.append((i, (i + 1) % 4, next(labels)))
        edges.append((4 + i, 4 + (i + 1) % 4, next(labels)))
        edges.append((i, 4 + i, next(labels)))
    return plane_embedding(coords, edges)


# name, arrow text, (v, e, c, f, orientable), notes
# expected values frozen from the signed-rotation face walk in tests/oracles.py
_BASE = [
    ("point", "()", (1, 0, 1, 1, True), "isolated vertex"),
    ("two-points", "()()", (2, 0, 2, 2, True), ""),
    ("loop", "(a+ a+)", (1, 1, 1, 2, True), "orientable loop"),
    ("loop-twisted", "(a+ a-)", (1, 1, 1, 1, False), "non-orientable loop"),
    ("1-path", "(a+)(a+)", (2, 1, 1, 1, True), "single non-loop edge"),
    ("2-path", "(a+)(a+ b+)(b+)", (3, 2, 1, 1, True), ""),
    ("digon", "(a+ b+)(b+ a+)", (2, 2, 1, 2, True), ""),
    ("digon-twisted", "(a+ b+)(b+ a-)", (2, 2, 1, 1, False), ""),
    ("theta", "(a+ b+ c+)(c+ b+ a+)", (2, 3, 1, 3, True), ""),
    ("theta-torus", "(a+ b+ c+)(c+ a+ b+)", (2, 3, 1, 1, True), ""),
    ("C3", "(a+ c+)(b+ a+)(c+ b+)", (3, 3, 1, 2, True), ""),
    ("C4", "(a+ d+)(b+ a+)(c+ b+)(d+ c+)", (4, 4, 1, 2, True), ""),
    ("B2-plane", "(a+ a+ b+ b+)", (1, 2, 1, 3, True), "bouquet"),
    ("B2-twisted", "(a+ a- b+ b-)", (1, 2, 1, 1, False), "bouquet, both loops twisted"),
    ("B2-mixed", "(a+ a+ b+ b-)", (1, 2, 1, 2, False), "bouquet, one loop twisted"),
    ("torus-pair", "(a+ b+ a+ b+)", (1, 2, 1, 1, True), "interlaced loops on the torus"),
    ("B2-interlaced-twisted", "(a+ b+ a- b-)", (1, 2, 1, 2, False), ""),
    ("abcabc", "(a+ b+ c+ a- b- c-)", (1, 3, 1, 3, False), "three interlaced twisted loops"),
    ("loop-on-path", "(a+ a+ b+)(b+)", (2, 2, 1, 2, True), ""),
    ("loop+1-path", "(a+ a+)(b+)(b+)", (3, 2, 2, 3, True), "disjoint union"),
    ("point+loop", "()(a+ a+)", (2, 1, 2, 3, True), "disjoint union"),
    ("K4", None, (4, 6, 1, 4, True), "plane K4 from a straight-line drawing"),
]


def _inv(v, e, c, f, orientable) -> RibbonInvariants:
    return RibbonInvariants(v=v, e=e, c=c, f=f, orientable=orientable)


def _entry_text(name, text):
    from .arrow import format_arrow

    if text is None:
        return format_arrow(k4_plane())
    return text


@lru_cache(maxsize=None)
def _full_catalog() -> tuple:
    from .arrow import format_arrow
    from .tensor import double, subdivide

    entries = []
    for name, text, exp, notes in _BASE:
        entries.append(CatalogEntry(name, _entry_text(name, text), _inv(*exp), notes))
    derived = []
    for ent in entries:
        v, e, c, f = ent.expected.v, ent.expected.e, ent.expected.c, ent.expected.f
        ori = ent.expected.orientable
        if e == 0 or 2 * e > MAX_CATALOG_EDGES:
            continue
        # doubling adds one 2-gon face per edge; subdividing adds one vertex per edge
        derived.append(CatalogEntry(f"D({ent.name})", format_arrow(double(ent.graph)),
                                    _inv(v, 2 * e, c, f + e, ori), "every edge doubled"))
        derived.append(CatalogEntry(f"S({ent.name})", format_arrow(subdivide(ent.graph)),
                                    _inv(v + e, 2 * e, c, f, ori), "every edge subdivided"))
    for ent in entries + derived:
        got = invariants(ent.graph)
        if got != ent.expected:
            raise AssertionError(f"catalog entry {ent.name}: expected {ent.expected}, traced {got}")
    return tuple(entries + derived)


def catalog(max_edges: int = MAX_CATALOG_EDGES) -> tuple:
    if max_edges > MAX_CATALOG_EDGES:
        raise ValueError(f"catalog is bounded by e <= {MAX_CATALOG_EDGES}")
    return tuple(ent for ent in _full_catalog() if ent.expected.e <= max_edges)


def by_name(name: str) -> CatalogEntry:
    for ent in _full_catalog():
        if ent.name == name:
            return ent
    raise KeyError(name)


def _labels(n: int) -> list:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"e{i}" for i in range(n)]


def random_presentation(seed: int, v_max: int, e_max: int) -> ArrowPresentation:
    """Scatter two randomly signed arrows per edge over 1..v_max circles."""
    if v_max < 1 or e_max < 0:
        raise ValueError("need v_max >= 1 and e_max >= 0")
    rng = random.Random(seed)
    v = rng.randint(1, v_max)
    e = rng.randint(0, e_max)
    circles = [[] for _ in range(v)]
    for lab in _labels(e):
        for _ in range(2):
            circ = circles[rng.randrange(v)]
            circ.insert(rng.randint(0, len(circ)), (lab, rng.choice((1, -1))))
    return ArrowPresentation(tuple(tuple(c) for c in circles))


def random_sample(seed: int, count: int, v_max: int = 4, e_max: int = MAX_CATALOG_EDGES) -> list:
    rng = random.Random(seed)
    return [random_presentation(rng.randrange(2 ** 32), v_max, e_max) for _ in range(count)]
