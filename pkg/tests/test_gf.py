import random

import pytest

from ffdescent.gf import GF, gf, embed, lowest_irreducible


def test_prime_field_basics():
    F = gf(7)
    assert F.q == 7
    assert F.add(3, 5) == 1
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.pow(3, 6) == 1


def test_rejects_char_two_and_composites():
    with pytest.raises(ValueError):
        GF(2)
    with pytest.raises(ValueError):
        GF(9)


def test_extension_field_tables():
    F = gf(5, 2)
    assert F.q == 25
    # multiplicative group has order 24
    g = F.generator
    seen = set()
    x = 1
    for _ in range(24):
        seen.add(x)
        x = F.mul(x, g)
    assert len(seen) == 24
    assert x == 1


def test_frobenius_additivity():
    rng = random.Random(1)
    for (p, r) in [(5, 2), (7, 2), (5, 3)]:
        F = gf(p, r)
        for _ in range(50):
            a, b = F.random(rng), F.random(rng)
            lhs = F.frobenius(F.add(a, b))
            rhs = F.add(F.frobenius(a), F.frobenius(b))
            assert lhs == rhs
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_sqrt_prime_field():
    F = gf(5)
    assert F.sqrt(4) in (2, 3)
    assert F.sqrt(2) is None  # 2^2 = 4 = -1 mod 5
    F13 = gf(13)
    squares = {F13.mul(a, a) for a in range(13)}
    for a in range(13):
        s = F13.sqrt(a)
        if a in squares:
            assert s is not None and F13.mul(s, s) == a
        else:
            assert s is None


def test_sqrt_extension():
    F = gf(5, 2)
    for a in range(25):
        s = F.sqrt(a)
        if s is not None:
            assert F.mul(s, s) == a
    # exactly (q-1)/2 nonzero nonsquares
    assert sum(1 for a in range(1, 25) if F.sqrt(a) is None) == 12


def test_lowest_irreducible_deterministic():
    assert lowest_irreducible(5, 1) == (0, 1)
    m = lowest_irreducible(5, 2)
    assert len(m) == 3 and m[2] == 1
    # x^2 + 2 is the first irreducible over F_5 scanning c0 fastest:
    # c0=0,1 give reducible x^2, x^2+1=(x+2)(x+3); c0=2 works
    assert m == (2, 0, 1)


def test_embed_prime_into_extension():
    Fbig = gf(7, 2)
    e = embed(gf(7), Fbig)
    for a in range(7):
        assert e(a) == a
    # embedding respects multiplication
    assert Fbig.mul(e(3), e(5)) == e(1)


def test_embed_extension_into_bigger():
    F = gf(5, 2)
    big = gf(5, 4)
    e = embed(F, big)
    rng = random.Random(2)
    for _ in range(40):
        a, b = F.random(rng), F.random(rng)
        assert e(F.mul(a, b)) == big.mul(e(a), e(b))
        assert e(F.add(a, b)) == big.add(e(a), e(b))
