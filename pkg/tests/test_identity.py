import random
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ecsum.curve import random_curve, random_point
from ecsum.errors import ArityMismatch, BadPrime, ZeroDenominator
from ecsum.fields import FieldDescriptor
from ecsum.identity import (
    EXACT,
    SZ,
    IDENTITY_NAMES,
    PolyRing,
    RationalExpression,
    SparsePolynomial,
    check_identity,
    curve_normal_form,
    poly_arith,
    prove,
    prove_exact,
    sz_check,
)
from ecsum.identity.polynomial import pack, unpack
from ecsum.identity.prover import RING3, STATEMENTS, symbolic_coefficients
from ecsum.identity.rational import relation_reducer
from ecsum.identity.schwartz_zippel import MERSENNE61, detm_program, zero_program

R = RING3
x1, x2, x3 = R.x(1), R.x(2), R.x(3)
y1, y2, y3 = R.y(1), R.y(2), R.y(3)


def test_pack_roundtrip():
    e = (3, 0, 7, 1, 0, 2, 0, 9)
    assert unpack(pack(e), 8) == e
    with pytest.raises(OverflowError):
        pack([1 << 16])


def test_difference_of_squares():
    assert poly_arith("mul", x1 + y1, x1 - y1) == x1 * x1 - y1 * y1
    assert poly_arith("add", x1, R.zero) == x1
    assert poly_arith("sub", x1, x1).is_zero()
    with pytest.raises(ValueError):
        poly_arith("div", x1, x1)


def test_vandermonde_expansion():
    V = symbolic_coefficients()[0]
    prod = (x1 - x2) * (x2 - x3) * (x3 - x1)
    assert len(prod) == 6
    assert V == prod


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        SparsePolynomial.from_exponents(R, {(1, 0, 0): 1})
    with pytest.raises(ArityMismatch):
        poly_arith("add", x1, PolyRing(2).x(1))
    with pytest.raises(ArityMismatch):
        x1 + PolyRing(2).x(1)


def test_from_exponents_and_str():
    f = SparsePolynomial.from_exponents(R, {(2, 0, 0, 1, 0, 0, 0, 0): 3, (0,) * 8: -1})
    assert f == 3 * x1 * x1 * y1 - 1
    assert f.total_degree == 3
    assert str(f) == "3*x1^2*y1 - 1"
    assert f.y_degree() == 1


def test_normal_form_examples():
    rel = y1 * y1 - x1**3 - R.a * x1 - R.b
    assert curve_normal_form(rel).is_zero()
    assert curve_normal_form(y1**3) == y1 * R.curve_rhs(1)
    expr = (x3 - x2) * (y1 * y1 - y3 * y3) - (x1 - x3) * (y3 * y3 - y2 * y2)
    V = symbolic_coefficients()[0]
    assert curve_normal_form(expr) == V * (x1 + x2 + x3)


def _random_poly(rng, ring, terms=6, deg=4):
    out = {}
    for _ in range(terms):
        e = [0] * ring.arity
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(ring.arity)] += rng.randint(1, 3)
        out[tuple(e)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return SparsePolynomial.from_exponents(ring, out)


def test_normal_form_confluent_and_sound():
    F = FieldDescriptor.prime(10007)
    rng = random.Random(0)
    for _ in range(1000):
        f = _random_poly(rng, R)
        g = curve_normal_form(f)
        assert g.y_degree() <= 1
        assert curve_normal_form(f, order=[3, 1, 2]) == g
        assert curve_normal_form(g) == g
        E = random_curve(F, rng)
        pts = [random_point(E, rng) for _ in range(3)]
        values = [P.x for P in pts] + [P.y for P in pts] + [E.a, E.b]
        assert f.evaluate(values, F.one) == g.evaluate(values, F.one)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    f, g, h = (_random_poly(rng, R, terms=3, deg=3) for _ in range(3))
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
    assert f - f == R.zero


def test_rational_arithmetic():
    a = RationalExpression.lift(x1) / RationalExpression.lift(x2 - x1)
    b = RationalExpression.lift(x2) / RationalExpression.lift(x2 - x1)
    one = RationalExpression.lift(R.one)
    assert check_identity(b - a, one, False)
    assert check_identity(a * (x2 - x1), RationalExpression.lift(x1), False)
    # scaled factors normalize to the same monic factor
    c = RationalExpression.lift(x1) / RationalExpression.lift(2 * x1 - 2 * x2)
    assert check_identity(c, -a / 2, False)


def test_zero_denominators():
    with pytest.raises(ZeroDenominator):
        RationalExpression.lift(x1) / RationalExpression.lift(x2 - x2)
    rel = y1 * y1 - R.curve_rhs(1)
    red = relation_reducer(True)
    with pytest.raises(ZeroDenominator):
        RationalExpression.lift(x1, red) / RationalExpression.lift(rel, red)
    # built without relations, rejected once relations are switched on
    q = RationalExpression(R.one, {rel: 1})
    with pytest.raises(ZeroDenominator):
        check_identity(q, q, True)


@pytest.mark.parametrize("name", sorted(STATEMENTS))
def test_statements_hold(name):
    start = time.perf_counter()
    assert prove_exact(name)
    assert time.perf_counter() - start < 60


def test_eq2_without_relations():
    assert prove_exact("eq2", False)


def test_lemma_is_sharp():
    assert prove_exact("lemma", True)
    assert not prove_exact("lemma", False)


def test_coefficients_alternate():
    swap = {0: 1, 1: 0, 3: 4, 4: 3}  # x1 <-> x2, y1 <-> y2

    def permute(f):
        out = {}
        for e, c in f.items():
            e = list(e)
            e2 = list(e)
            for k, v in swap.items():
                e2[v] = e[k]
            out[tuple(e2)] = c
        return SparsePolynomial.from_exponents(R, out)

    for f in symbolic_coefficients():
        assert permute(f) == -f


def test_sz_controls():
    assert sz_check(zero_program, 20)
    assert sz_check(detm_program(4), 20)
    assert not sz_check(detm_program(4, perturb=True), 20)
    with pytest.raises(BadPrime):
        sz_check(zero_program, 5, prime=1 << 61)
    with pytest.raises(ValueError):
        sz_check(zero_program, 0)


@pytest.mark.parametrize("name", IDENTITY_NAMES)
def test_sz_agrees_with_exact(name):
    v = prove(name, mode=SZ, trials=10)
    assert v.result and v.mode == SZ and v.prime == MERSENNE61


@pytest.mark.parametrize("name", IDENTITY_NAMES)
def test_prove_auto_is_exact(name):
    v = prove(name)
    assert v.result
    assert v.mode == EXACT


def test_timeout_falls_back():
    v = prove("detm3", mode="auto", timeout=0.001, trials=5)
    assert v.mode == SZ and v.result and v.trials == 5


def test_detm_names():
    v = prove("detm:3", mode=SZ, trials=5)
    assert v.identity == "detm3"
    v = prove("detm:5", trials=5)
    assert v.mode == SZ and v.result
    with pytest.raises(ValueError):
        prove("detm:5", mode=EXACT)
    with pytest.raises(ValueError):
        prove("nonsense")
