from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tgp.errors import InsufficientAdmissiblePoints, MissingVariable, VariableMismatch
from tgp.polynomial import MultiPoly, admissible_values, arith, as_fraction, identity_check

VARS = ("x", "y", "z")
x, y, z = MultiPoly.gens(VARS)


@st.composite
def polys(draw, vars=VARS, max_terms=4, max_deg=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exp = tuple(draw(st.integers(0, max_deg)) for _ in vars)
        terms[exp] = draw(st.integers(-5, 5))
    return MultiPoly(vars, terms)


points = st.fixed_dictionaries({v: st.fractions(min_value=-4, max_value=4, max_denominator=5) for v in VARS})


def to_sympy(p: MultiPoly):
    syms = sympy.symbols(p.vars)
    return sympy.expand(sum(sympy.Integer(c) * sympy.Mul(*(s ** k for s, k in zip(syms, e)))
                            for e, c in p.terms.items()))


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == MultiPoly(VARS)
    assert a * 1 == a and a + 0 == a


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), points)
def test_eval_is_a_ring_homomorphism(a, b, pt):
    assert (a * b).eval(pt) == a.eval(pt) * b.eval(pt)
    assert (a + b).eval(pt) == a.eval(pt) + b.eval(pt)


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@settings(max_examples=40, deadline=None)
@given(polys())
def test_json_roundtrip(p):
    assert MultiPoly.from_json(p.to_json()) == p


def test_no_zero_coefficients_stored():
    p = (1 + y) - (1 + y)
    assert p.terms == {} and p.is_zero()


def test_arith_examples():
    (t,) = MultiPoly.gens(("t",))
    assert arith(x, x, "mul") == x ** 2
    assert arith(1 + y, 1 + y, "sub").is_zero()
    assert arith(t + 1, t - 1, "mul") == t ** 2 - 1


def test_variable_mismatch():
    (t,) = MultiPoly.gens(("t",))
    with pytest.raises(VariableMismatch):
        t + x


def test_eval_examples():
    (lam,) = MultiPoly.gens(("lambda",))
    alpha, beta, gamma, t = MultiPoly.gens(("alpha", "beta", "gamma", "t"))
    assert (1 + y).eval({"x": 0, "y": 2, "z": 0}) == 3
    assert (lam ** 2 - lam).eval({"lambda": 3}) == 6
    q = alpha * t + beta * t ** 2 + gamma * t
    assert q.eval({"alpha": 1, "beta": 0, "gamma": -1, "t": 5}) == 0


def test_missing_variable():
    with pytest.raises(MissingVariable):
        (x + y).eval({"x": 1})


def test_rationals_stay_exact():
    p = x * Fraction(1, 3) + Fraction(2, 3)
    assert p.eval({"x": 1, "y": 0, "z": 0}) == 1
    assert as_fraction("-7/21") == Fraction(-1, 3)


def test_substitute_compose_rename():
    p = x ** 2 * y + z
    assert p.substitute({"z": 4}).vars == ("x", "y")
    assert p.substitute({"x": 2, "y": 3, "z": 4}).constant_term() == 16
    (u,) = MultiPoly.gens(("u",))
    composed = p.compose({"x": u + 1, "y": u, "z": MultiPoly.const(0, ("u",))}, ("u",))
    assert composed == (u + 1) ** 2 * u
    swapped = p.rename({"x": "y", "y": "x"})
    assert swapped.vars == VARS and swapped == y ** 2 * x + z


def test_identity_check():
    p = (x + y) ** 2
    f = lambda pt: p.eval({**pt, "z": 0})
    g = lambda pt: (x ** 2 + 2 * x * y + y ** 2).eval({**pt, "z": 0})
    assert identity_check(f, g, {"x": 2, "y": 2})
    assert not identity_check(f, lambda pt: g(pt) + 1, {"x": 2, "y": 2})


def test_identity_check_with_laurent_substitution():
    # a Laurent identity a^2 (b/a + 1) = a b + a^2, off a = 0
    lhs = lambda pt: Fraction(pt["a"]) ** 2 * (Fraction(pt["b"], pt["a"]) + 1)
    rhs = lambda pt: pt["a"] * pt["b"] + pt["a"] ** 2
    assert identity_check(lhs, rhs, {"a": 3, "b": 2}, excluded=lambda pt: pt.get("a") == 0)


def test_insufficient_admissible_points():
    with pytest.raises(InsufficientAdmissiblePoints):
        admissible_values("t", 5, excluded=lambda pt: True, limit=3)
