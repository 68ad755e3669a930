import random

import pytest

from ffdescent.gf import gf
from ffdescent.poly import Poly
from ffdescent.ratfunc import (
    Place, RatFunc, XPoly, charpoly_in_quotient, divisor_of, insep_degree,
    norm_in_quotient, poly_height,
)

F5 = gf(5)
F7 = gf(7)


def rf(F, num, den=None):
    n = Poly(F, list(num))
    d = Poly(F, list(den)) if den is not None else None
    return RatFunc(n, d)


def test_degree_examples():
    # (t^2+1)/t -> 2
    z = rf(F5, [1, 0, 1], [0, 1])
    assert z.degree() == 2
    assert rf(F5, [3]).degree() == 0
    rng = random.Random(4)
    for _ in range(30):
        num = Poly.random(F7, rng.randrange(0, 5), rng)
        den = Poly.random(F7, rng.randrange(0, 5), rng, monic=True)
        if num.is_zero():
            continue
        z = RatFunc(num, den)
        assert (z * z).degree() == 2 * z.degree()


def test_valuations_and_product_formula():
    z = rf(F5, [0, 0, 0, 1], [1, 1])  # t^3/(t+1)
    vt = Place.finite(Poly(F5, [0, 1]))
    assert vt.valuation(z) == 3
    assert Place.infinite().valuation(z) == -2
    rng = random.Random(9)
    for _ in range(25):
        num = Poly.random(F5, rng.randrange(0, 6), rng)
        den = Poly.random(F5, rng.randrange(0, 6), rng, monic=True)
        if num.is_zero():
            continue
        z = RatFunc(num, den)
        total = sum(pl.degree() * v for pl, v in divisor_of(z).items())
        assert total == 0


def test_poly_height_examples():
    # X^3 + tX + t^2 -> 2
    f = XPoly(F5, [rf(F5, [0, 0, 1]), rf(F5, [0, 1]), RatFunc.zero(F5), RatFunc.one(F5)])
    assert poly_height(f) == 2
    # X + (t^2+1)/t -> 2
    g = XPoly(F5, [rf(F5, [1, 0, 1], [0, 1]), RatFunc.one(F5)])
    assert poly_height(g) == 2


def test_poly_height_additive_on_products():
    rng = random.Random(13)
    for _ in range(25):
        def rand_monic(F, dx):
            return XPoly(F, [RatFunc(Poly.random(F, rng.randrange(0, 4), rng))
                             for _ in range(dx)] + [RatFunc.one(F)])
        f = rand_monic(F7, rng.randrange(1, 4))
        g = rand_monic(F7, rng.randrange(1, 4))
        assert poly_height(f * g) == poly_height(f) + poly_height(g)


def test_insep_degree_examples():
    t5 = rf(F5, [0, 0, 0, 0, 0, 1])
    assert insep_degree(t5) == 5
    t5t = rf(F5, [0, 1, 0, 0, 0, 1])
    assert insep_degree(t5t) == 1
    # t^25 + t^5 = (t^5+t)^5
    z = rf(F5, [0] * 5 + [1] + [0] * 19 + [1])
    assert insep_degree(z) == 5
    with pytest.raises(ValueError):
        insep_degree(rf(F5, [2]))


def test_insep_degree_of_pth_power():
    rng = random.Random(21)
    for _ in range(10):
        num = Poly.random(F5, rng.randrange(1, 4), rng)
        den = Poly.random(F5, rng.randrange(0, 3), rng, monic=True)
        z = RatFunc(num, den)
        if z.is_constant():
            continue
        zp = z ** 5
        assert insep_degree(zp) == 5 * insep_degree(z)


def test_xpoly_division_and_gcd():
    f = XPoly(F7, [rf(F7, [1]), rf(F7, [0, 1]), RatFunc.one(F7)])
    g = XPoly(F7, [rf(F7, [3]), RatFunc.one(F7)])
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_xpoly_resultant_matches_evaluation():
    # Res(X - a, g) = g(a)
    a = rf(F7, [2, 1])
    g = XPoly(F7, [rf(F7, [1, 1]), rf(F7, [4]), RatFunc.one(F7)])
    lin = XPoly(F7, [-a, RatFunc.one(F7)])
    assert lin.resultant(g) == g.evaluate(a)


def test_discriminant_spec_examples():
    # X^3 + B -> -27 B^2
    B = rf(F7, [2, 0, 5])
    f = XPoly(F7, [B, RatFunc.zero(F7), RatFunc.zero(F7), RatFunc.one(F7)])
    expect = (B * B).scale(F7.neg(27 % 7))
    assert f.discriminant() == expect
    # X^3 + tX + 1 over F_7 -> -4t^3 - 27
    f = XPoly(F7, [rf(F7, [1]), rf(F7, [0, 1]), RatFunc.zero(F7), RatFunc.one(F7)])
    d = f.discriminant()
    expect = RatFunc(Poly(F7, [F7.neg(27 % 7), 0, 0, F7.neg(4)]))
    assert d == expect
    # repeated factor: X^3 - tX^2 has discriminant 0
    f = XPoly(F7, [RatFunc.zero(F7), RatFunc.zero(F7), -rf(F7, [0, 1]), RatFunc.one(F7)])
    assert f.discriminant() == RatFunc.zero(F7)


def test_charpoly_and_norm():
    # A = F_7(t)[X]/(X^3 + tX + 1); norm of (x0 - x) must equal f(x0)
    F = F7
    f = XPoly(F, [rf(F, [1]), rf(F, [0, 1]), RatFunc.zero(F), RatFunc.one(F)])
    rng = random.Random(6)
    for _ in range(10):
        x0 = RatFunc(Poly.random(F, rng.randrange(0, 3), rng))
        z = XPoly(F, [x0]) - XPoly.x(F)
        n = norm_in_quotient(f, z)
        assert n == f.evaluate(x0)
    # charpoly of x itself is f
    ch = charpoly_in_quotient(f, XPoly.x(F))
    assert ch == f
