import random

import pytest

from ffdescent.gf import gf
from ffdescent.poly import Poly, cube_adapted_decompose


F5 = gf(5)
F7 = gf(7)


def P(F, *coeffs):
    return Poly(F, list(coeffs))


def test_arith_basics():
    f = P(F5, 1, 2, 3)  # 3t^2+2t+1
    g = P(F5, 4, 1)     # t+4
    assert (f + g).c == [0, 3, 3]
    assert (f * g).degree == 3
    q, r = f.divmod(g)
    assert q * g + r == f


def test_gcd_xgcd():
    rng = random.Random(3)
    for _ in range(50):
        a = Poly.random(F7, rng.randrange(1, 6), rng)
        b = Poly.random(F7, rng.randrange(1, 6), rng)
        g, s, t = a.xgcd(b)
        assert s * a + t * b == g
        assert a.gcd(b) == g


def test_factor_spec_examples():
    # t^2 - 1 over F_5 -> (t-1)(t+1)
    f = P(F5, 4, 0, 1)
    fac = f.factor()
    assert sorted((g.c, e) for g, e in fac) == [([1, 1], 1), ([4, 1], 1)]
    # t^2 + 1 over F_5 -> (t-2)(t+2) since 2^2 = -1 mod 5
    f = P(F5, 1, 0, 1)
    fac = f.factor()
    assert sorted((g.c, e) for g, e in fac) == [([2, 1], 1), ([3, 1], 1)]


def test_factor_multiply_back_random():
    rng = random.Random(11)
    for q, F in [(5, F5), (7, F7)]:
        for _ in range(60):
            f = Poly.random(F, rng.randrange(1, 13), rng, monic=True)
            fac = f.factor()
            prod = Poly.one(F)
            for g, e in fac:
                assert g.lc() == 1
                assert g.is_irreducible()
                prod = prod * g ** e
            assert prod == f.monic()


def test_factor_deterministic_order():
    rng = random.Random(5)
    f = Poly.random(F7, 9, rng, monic=True)
    f1 = f.factor(random.Random(1))
    f2 = f.factor(random.Random(99))
    assert [(g.c, e) for g, e in f1] == [(g.c, e) for g, e in f2]


def test_squarefree_decomposition_with_p_powers():
    # f = (t+1)^5 (t+2)^2 over F_5 exercises the p-th root path
    f = (P(F5, 1, 1) ** 5) * (P(F5, 2, 1) ** 2)
    dec = f.squarefree_decomposition()
    assert sorted((g.c, e) for g, e in dec) == [([1, 1], 5), ([2, 1], 2)]


def test_resultant_spec_examples():
    # Res(t-1, t-2) over F_5 = g(1) = -1
    f = P(F5, 4, 1)
    g = P(F5, 3, 1)
    assert f.resultant(g) == F5.neg(1)
    assert f.resultant(f) == 0
    rng = random.Random(7)
    for _ in range(40):
        a = Poly.random(F7, rng.randrange(1, 6), rng)
        b = Poly.random(F7, rng.randrange(1, 6), rng)
        r = a.resultant(b)
        assert (r == 0) == (not a.gcd(b).is_one())


def test_resultant_multiplicativity():
    rng = random.Random(17)
    for _ in range(30):
        a = Poly.random(F7, rng.randrange(1, 4), rng)
        b = Poly.random(F7, rng.randrange(1, 4), rng)
        c = Poly.random(F7, rng.randrange(1, 4), rng)
        assert (a * b).resultant(c) == F7.mul(a.resultant(c), b.resultant(c))


def test_roots():
    # (t-1)(t-2)(t^2+2) over F_5; t^2+2 irreducible
    f = P(F5, 4, 1) * P(F5, 3, 1) * P(F5, 2, 0, 1)
    assert f.roots() == [1, 2]


def test_sqrt_exact():
    rng = random.Random(23)
    for _ in range(40):
        g = Poly.random(F7, rng.randrange(0, 6), rng)
        if g.is_zero():
            continue
        s = (g * g).sqrt_exact()
        assert s is not None
        assert s * s == g * g
    # non-squares rejected
    f = P(F7, 1, 1)  # t+1: odd degree
    assert f.sqrt_exact() is None
    h = P(F7, 0, 0, 3)  # 3t^2, 3 is not a QR mod 7
    assert h.sqrt_exact() is None


def test_pth_root():
    f = P(F5, 1, 0, 0, 0, 0, 2)  # 2t^5+1 = (2^(1/5) t + 1)^5? no: test via power
    g = P(F5, 3, 1)
    f5 = g ** 5
    r = f5.pth_root()
    assert r == g
    assert P(F5, 1, 1).pth_root() is None


def test_cube_adapted_decompose_spec_examples():
    t = Poly.x(F5)
    one = Poly.one(F5)
    # t^2 (t+1)^3 -> (1, t, t+1)
    B = (t ** 2) * (P(F5, 1, 1) ** 3)
    B1, B2, B3 = cube_adapted_decompose(B)
    assert (B1, B2, B3) == (one, t, P(F5, 1, 1))
    # t^4 -> (t, 1, t)
    B1, B2, B3 = cube_adapted_decompose(t ** 4)
    assert (B1, B2, B3) == (t, one, t)
    # squarefree B -> (B, 1, 1)
    B = P(F5, 1, 1) * P(F5, 2, 1) * t
    B1, B2, B3 = cube_adapted_decompose(B)
    assert B1 == B.monic() and B2.is_one() and B3.is_one()


def test_cube_adapted_reconstruction_random():
    rng = random.Random(31)
    for _ in range(40):
        B = Poly.random(F7, rng.randrange(1, 9), rng)
        B1, B2, B3 = cube_adapted_decompose(B)
        lead = Poly.const(F7, B.lc())
        assert lead * B1 * B2 ** 2 * B3 ** 3 == B
        assert B1.is_squarefree() or B1.is_one()
        assert B2.is_squarefree() or B2.is_one()
        assert B1.gcd(B2).is_one() or B1.is_one() or B2.is_one()


def test_interpolate():
    pts = [(0, 3), (1, 1), (2, 4), (3, 0)]
    f = Poly.interpolate(F5, pts)
    for x, y in pts:
        assert f(x) == y


def test_discriminant():
    # disc(x^2+bx+c) = b^2-4c
    f = P(F7, 3, 2, 1)
    assert f.content_free_discriminant() == F7.sub(F7.mul(2, 2), F7.mul(4, 3))
