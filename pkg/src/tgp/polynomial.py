"""
Exact multivariate polynomials over named indeterminates.

Coefficients are Python ints (arbitrary precision) or ``fractions.Fraction``
when a rational substitution has been made. Rational numbers in general are
plain ``Fraction`` values.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InsufficientAdmissiblePoints, MissingVariable, VariableMismatch

Q_VARS = ("alpha", "beta", "gamma", "t")
R_VARS = ("x", "y", "z")
T_VARS = ("x", "y")
LAMBDA_VARS = ("lambda",)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or decimal/ratio string to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"not an exact rational: {value!r}")


class MultiPoly:
    """Sparse polynomial: exponent tuple -> nonzero exact coefficient."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            n = len(self.vars)
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise VariableMismatch(f"exponent {exp} does not fit variables {self.vars}")
                if c:
                    clean[exp] = _norm(c)
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise MissingVariable(f"{name!r} not among {vars}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {exp: 1})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(v, vars) for v in vars)

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Sequence[int], c=1) -> "MultiPoly":
        return cls(vars, {tuple(exp): c})

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise VariableMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ---------------------------------------------------------
    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), 0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    # -- evaluation ---------------------------------------------------------
    def eval(self, point: Mapping[str, object]) -> Fraction:
        """Exact value at ``point`` (must cover every variable)."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise MissingVariable(f"no value for {missing}")
        values = [as_fraction(point[v]) for v in self.vars]
        powers: list[dict[int, Fraction]] = [{0: Fraction(1)} for _ in values]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = Fraction(c)
            for i, k in enumerate(exp):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = values[i] ** k
                    term *= cache[k]
            total += term
        return total

    def substitute(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute numbers for some variables; result lives over the rest."""
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        new_vars = tuple(self.vars[i] for i in keep)
        vals = {i: as_fraction(values[v]) for i, v in enumerate(self.vars) if v in values}
        out: dict = {}
        for exp, c in self.terms.items():
            coeff = Fraction(c)
            for i, x in vals.items():
                if exp[i]:
                    coeff *= x ** exp[i]
            e = tuple(exp[i] for i in keep)
            out[e] = out.get(e, 0) + coeff
        return MultiPoly(new_vars, out)

    def compose(self, images: Mapping[str, "MultiPoly"], target_vars: Sequence[str]) -> "MultiPoly":
        """Replace each variable by a polynomial over ``target_vars``."""
        target_vars = tuple(target_vars)
        imgs = []
        for v in self.vars:
            if v not in images:
                raise MissingVariable(f"no image for {v!r}")
            img = images[v]
            if not isinstance(img, MultiPoly):
                img = MultiPoly.const(img, target_vars)
            if img.vars != target_vars:
                raise VariableMismatch(f"image of {v!r} is over {img.vars}")
            imgs.append(img)
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.const(1, target_vars)} for _ in imgs]
        total = MultiPoly(target_vars)
        for exp, c in self.terms.items():
            term = MultiPoly.const(c, target_vars)
            for i, k in enumerate(exp):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = imgs[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables without changing exponents; a pure permutation keeps the variable order."""
        renamed = MultiPoly(tuple(mapping.get(v, v) for v in self.vars), self.terms)
        if sorted(renamed.vars) == sorted(self.vars):
            return renamed.reorder(self.vars)
        return renamed

    def reorder(self, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        if sorted(vars) != sorted(self.vars):
            raise VariableMismatch(f"{self.vars} vs {vars}")
        idx = [self.vars.index(v) for v in vars]
        return MultiPoly(vars, {tuple(e[i] for i in idx): c for e, c in self.terms.items()})

    # -- serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["vars"], {tuple(t["exp"]): _norm(Fraction(t["coef"])) for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, exp) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self.vars}, {str(self)!r})"


def arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def eval_poly(p: MultiPoly, point: Mapping[str, object]) -> Fraction:
    return p.eval(point)


def integer_candidates(limit: int = 200) -> Iterable[int]:
    """0, 1, -1, 2, -2, ... up to ``limit`` in absolute value."""
    yield 0
    for k in range(1, limit + 1):
        yield k
        yield -k


def admissible_values(var: str, count: int, excluded: Callable[[dict], bool] | None = None,
                      limit: int = 200) -> list[int]:
    """First ``count`` integers (in the order 0, 1, -1, 2, ...) not excluded for ``var``."""
    out = []
    for v in integer_candidates(limit):
        if excluded is not None and excluded({var: v}):
            continue
        out.append(v)
        if len(out) == count:
            return out
    raise InsufficientAdmissiblePoints(f"only {len(out)} admissible values for {var!r} within |v| <= {limit}")


def identity_grid(degree_bounds: Mapping[str, int], excluded: Callable[[dict], bool] | None = None,
                  limit: int = 200) -> list[dict[str, int]]:
    names = list(degree_bounds)
    axes = [admissible_values(v, degree_bounds[v] + 1, excluded, limit) for v in names]
    return [dict(zip(names, combo)) for combo in itertools.product(*axes)]


def identity_check(lhs: Callable[[dict], object], rhs: Callable[[dict], object],
                   degree_bounds: Mapping[str, int], excluded: Callable[[dict], bool] | None = None,
                   limit: int = 200) -> bool:
    """Deterministic polynomial identity test on a product grid.

    Each variable gets ``degree_bounds[v] + 1`` distinct integer values. The
    ``excluded`` predicate is called with single-variable points such as
    ``{"t": 0}`` and must return True for inadmissible values.
    """
    for point in identity_grid(degree_bounds, excluded, limit):
        if as_fraction(lhs(point)) != as_fraction(rhs(point)):
            return False
    return True
