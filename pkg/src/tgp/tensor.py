"""
Tensor products of embedded graphs and the transition-polynomial reduction.

``G (x) H`` replaces every edge f of G by a fresh copy of ``H - e``: the
vertex of G at each end of f is merged with the vertex of H at one end of
e. Per edge there are four identifications, encoded as a choice in 1..4:

    1: first arrow of f <-> first-listed arrow of e, orientation kept
    2: first arrow of f <-> first-listed arrow of e, orientation reversed
    3: first arrow of f <-> second arrow of e, orientation kept
    4: first arrow of f <-> second arrow of e, orientation reversed

Copies are labelled ``f.label``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .arrow import DELETED, KEPT, TWISTED, ArrowPresentation, parse
from .engines import q_eval, q_statesum
from .errors import LoopPattern, SingularSystem, UnknownEdge
from .polynomial import Q_VARS, MultiPoly, as_fraction
from .surgery import contract, delete, partial_petrial

THETA = parse("(a+ b+ c+)(c+ b+ a+)")
C3 = parse("(a+ c+)(b+ a+)(c+ b+)")

CHOICES = {1: (False, False), 2: (False, True), 3: (True, False), 4: (True, True)}

# det of [[t, t^2, t], [t^2, t, t], [t, t, t^2]] = -t^3 (t - 1)^2 (t + 2)
SINGULAR_T = frozenset({0, 1, -2})


@dataclass(frozen=True)
class TensorSpec:
    base: ArrowPresentation
    pattern: ArrowPresentation
    edge: str
    phi: Mapping[str, int] = field(default_factory=dict)

    def choice(self, f: str) -> int:
        return self.phi.get(f, 1)


def _check_pattern(pattern: ArrowPresentation, edge: str):
    pattern.check_edges([edge])
    tr = pattern.tracer
    ka, kb = tr.occurrences[tr.edge_index[edge]]
    if tr.circle_of_token[ka] == tr.circle_of_token[kb]:
        raise LoopPattern(f"distinguished edge {edge!r} is a loop")


def _find(circles, tag):
    for ci, c in enumerate(circles):
        for pos, tok in enumerate(c):
            if tok[2] == tag:
                return ci, pos
    raise KeyError(tag)


def _reverse(tokens):
    return [(lab, -s, tag) for lab, s, tag in reversed(tokens)]


def tensor_product(spec: TensorSpec) -> ArrowPresentation:
    G, H, e = spec.base, spec.pattern, spec.edge
    _check_pattern(H, e)
    unknown = set(spec.phi) - set(G.edges)
    if unknown:
        raise UnknownEdge(f"identifying map given for unknown edge(s) {sorted(unknown)}")
    for f, ch in spec.phi.items():
        if ch not in CHOICES:
            raise ValueError(f"choice for {f!r} must be in 1..4, got {ch}")

    circles = []
    occ: dict = {}
    for c in G.circles:
        row = []
        for lab, s in c:
            i = occ.get(lab, 0)
            occ[lab] = i + 1
            row.append((lab, s, ("G", lab, i)))
        circles.append(row)

    for f in G.edges:
        occ = {}
        for c in H.circles:
            row = []
            for lab, s in c:
                i = occ.get(lab, 0)
                occ[lab] = i + 1
                tag = ("E", f, i) if lab == e else ("H", f, lab, i)
                row.append((f"{f}.{lab}", s, tag))
            circles.append(row)
        swap, reverse = CHOICES[spec.choice(f)]
        for i in (0, 1):
            j = 1 - i if swap else i
            gi, gp = _find(circles, ("G", f, i))
            hi, hp = _find(circles, ("E", f, j))
            g_circ = circles[gi][gp:] + circles[gi][:gp]
            h_circ = circles[hi][hp:] + circles[hi][:hp]
            same_sign = g_circ[0][1] == h_circ[0][1]
            aligned = same_sign != reverse  # start of f's arrow glued to start of e's arrow
            rest_h = _reverse(h_circ[1:]) if aligned else h_circ[1:]
            circles[gi] = g_circ[1:] + rest_h
            del circles[hi]
    return ArrowPresentation(tuple(tuple((lab, s) for lab, s, _ in c) for c in circles))


def double(ap: ArrowPresentation) -> ArrowPresentation:
    """Add a parallel partner to every edge, the pair bounding a 2-gon."""
    return tensor_product(TensorSpec(ap, THETA, "a"))


def subdivide(ap: ArrowPresentation) -> ArrowPresentation:
    return tensor_product(TensorSpec(ap, C3, "a"))


# --------------------------------------------------------------------------
# weights

@dataclass(frozen=True)
class TensorWeights:
    kappa: Fraction
    lam: Fraction
    mu: Fraction

    def point(self, t) -> dict:
        return {"alpha": self.kappa, "beta": self.lam, "gamma": self.mu, "t": t}


def pattern_minors(H: ArrowPresentation, e: str) -> tuple:
    """(H - e, H / e, H^tau(e) / e)."""
    _check_pattern(H, e)
    return delete(H, [e]), contract(H, e), contract(partial_petrial(H, [e]), e)


def solve_weights(t, q_del, q_con, q_tw) -> TensorWeights:
    """Solve t k + t^2 l + t m = q_del, t^2 k + t l + t m = q_con, t k + t l + t^2 m = q_tw."""
    t = as_fraction(t)
    m = [[t, t * t, t], [t * t, t, t], [t, t, t * t]]
    rhs = [as_fraction(q_del), as_fraction(q_con), as_fraction(q_tw)]
    det = _det3(m)
    if det == 0:
        raise SingularSystem(f"tensor weight system is singular at t = {t}")
    sols = []
    for col in range(3):
        mc = [row[:col] + [rhs[i]] + row[col + 1:] for i, row in enumerate(m)]
        sols.append(_det3(mc) / det)
    return TensorWeights(*sols)


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def tensor_weights_at(H: ArrowPresentation, e: str, point: Mapping[str, object]) -> TensorWeights:
    minors = pattern_minors(H, e)
    if as_fraction(point["t"]) in SINGULAR_T:
        raise SingularSystem(f"t = {point['t']} is singular (excluded set {sorted(SINGULAR_T)})")
    vals = [q_eval(g, point) for g in minors]
    return solve_weights(point["t"], *vals)


def weight_system_determinant() -> MultiPoly:
    (t,) = MultiPoly.gens(("t",))
    return _det3([[t, t * t, t], [t * t, t, t], [t, t, t * t]])


@dataclass(frozen=True)
class RationalWeights:
    """Weights as numerators over the common denominator ``det`` (polynomials in t)."""
    kappa: MultiPoly
    lam: MultiPoly
    mu: MultiPoly
    det: MultiPoly

    def at(self, t) -> TensorWeights:
        pt = {"t": t}
        d = self.det.eval(pt)
        if d == 0:
            raise SingularSystem(f"t = {t}")
        return TensorWeights(self.kappa.eval(pt) / d, self.lam.eval(pt) / d, self.mu.eval(pt) / d)


def rational_weights(H: ArrowPresentation, e: str, alpha, beta, gamma) -> RationalWeights:
    """Exact Cramer numerators in t for fixed numeric (alpha, beta, gamma)."""
    vals = {"alpha": alpha, "beta": beta, "gamma": gamma}
    rhs = [q_statesum(g).substitute(vals).reorder(("t",)) for g in pattern_minors(H, e)]
    (t,) = MultiPoly.gens(("t",))
    m = [[t, t * t, t], [t * t, t, t], [t, t, t * t]]
    nums = []
    for col in range(3):
        mc = [row[:col] + [rhs[i]] + row[col + 1:] for i, row in enumerate(m)]
        nums.append(_det3(mc))
    return RationalWeights(*nums, _det3(m))


# --------------------------------------------------------------------------
# marked state sums

MARK_NAMES = "abcd"

# cycle pattern of the four marks -> term class, per minor of H at e
_PATTERNS = {
    "deleted": {"abcd": "eq", "ab|cd": "par", "abdc": "cross"},
    "contracted": {"ad|bc": "eq", "abcd": "par", "adbc": "cross"},
    "twisted": {"adbc": "eq", "abdc": "par", "ac|bd": "cross"},
}
_E_STATE = {"deleted": DELETED, "contracted": KEPT, "twisted": TWISTED}


def _canonical_cycle(seq: str) -> str:
    forms = []
    for s in (seq, seq[::-1]):
        for i in range(len(s)):
            forms.append(s[i:] + s[:i])
    return min(forms)


def _canonical_pattern(pattern: str) -> str:
    if "|" in pattern:
        return "|".join(sorted("".join(sorted(p)) for p in pattern.split("|")))
    return _canonical_cycle(pattern)


_CANON = {variant: {_canonical_pattern(p): cls for p, cls in table.items()} for variant, table in _PATTERNS.items()}


@dataclass(frozen=True)
class QSplit:
    eq: MultiPoly
    par: MultiPoly
    cross: MultiPoly

    @property
    def total(self) -> MultiPoly:
        return self.eq + self.par + self.cross


def mark_pattern(cycles, marks: Mapping[int, str]) -> str:
    """Pattern string of how the cycles visit the marked nodes."""
    parts = []
    for cyc in cycles:
        seq = "".join(marks[n] for n in cyc if n in marks)
        if seq:
            parts.append(seq)
    if len(parts) == 1:
        return _canonical_cycle(parts[0])
    return "|".join(sorted("".join(sorted(p)) for p in parts))


def q_split(H: ArrowPresentation, e: str, variant: str = "deleted") -> QSplit:
    """Split Q of H - e (or H/e, H^tau(e)/e) by how state curves meet the four marks.

    The marks are tail/head of the first-listed e-arrow (a, b) and of the
    second (c, d).
    """
    import itertools

    _check_pattern(H, e)
    if variant not in _PATTERNS:
        raise ValueError(f"unknown variant {variant!r}")
    tr = H.tracer
    idx = tr.edge_index[e]
    ka, kb = tr.occurrences[idx]
    marks = {tr.tail(ka): "a", tr.head(ka): "b", tr.tail(kb): "c", tr.head(kb): "d"}
    table = _CANON[variant]
    others = [i for i in range(len(tr.edges)) if i != idx]
    buckets = {"eq": {}, "par": {}, "cross": {}}
    codes = (KEPT, DELETED, TWISTED)
    for combo in itertools.product(codes, repeat=len(others)):
        states = [0] * len(tr.edges)
        for i, st in zip(others, combo):
            states[i] = st
        states[idx] = _E_STATE[variant]
        cycles = tr.cycles(states)
        pattern = mark_pattern(cycles, marks)
        cls = table.get(pattern)
        if cls is None:
            raise AssertionError(f"unexpected mark pattern {pattern!r} for {variant}")
        key = (combo.count(KEPT), combo.count(DELETED), combo.count(TWISTED), len(cycles) + tr.bare_circles)
        bucket = buckets[cls]
        bucket[key] = bucket.get(key, 0) + 1
    return QSplit(*(MultiPoly(Q_VARS, buckets[k]) for k in ("eq", "par", "cross")))


def tensor_q_via_split(G: ArrowPresentation, H: ArrowPresentation, e: str) -> MultiPoly:
    """t^(2 e(G)) Q(G (x) H) computed from Q(G) and the split of Q(H - e)."""
    split = q_split(H, e)
    _, _, _, t = MultiPoly.gens(Q_VARS)
    return q_statesum(G).compose({"alpha": t * split.eq, "beta": split.par, "gamma": t * split.cross, "t": t},
                                 Q_VARS)
