"""Finite fields F_{p^r} with odd characteristic.

Elements are plain python ints in [0, p^r), encoding the coefficient vector
(c_0, ..., c_{r-1}) of the residue class modulo a fixed irreducible modulus
as the base-p integer sum c_i p^i.  Keeping elements unboxed makes the
polynomial layer and the enumeration kernels fast; all structure lives on
the field object.

Multiplication, inversion, square roots and Frobenius go through exp/log
tables built from a fixed generator of the multiplicative group, so every
operation is O(1) (O(r) for addition when r > 1).
"""

import functools
import random


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _fp_poly_mulmod(a, b, mod, p):
    """Product of coefficient tuples a, b modulo the monic tuple mod, over F_p."""
    r = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, r - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(r):
                res[i - r + j] = (res[i - r + j] - c * mod[j]) % p
    res = res[:r]
    res += [0] * (r - len(res))
    return res

def _fp_poly_powmod(a, e, mod, p):
    r = len(mod) - 1
    res = [1] + [0] * (r - 1)
    base = list(a[:r]) + [0] * (r - len(a))
    while e:
        if e & 1:
            res = _fp_poly_mulmod(res, base, mod, p)
        base = _fp_poly_mulmod(base, base, mod, p)
        e >>= 1
    return res


def _fp_irreducible(coeffs, p):
    """Irreducibility of the monic polynomial given by coeffs over F_p."""
    r = len(coeffs) - 1
    if r == 1:
        return True
    # x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) trivial for prime l | r
    x = [0, 1] + [0] * (r - 2) if r >= 2 else [0, 1]
    xq = _fp_poly_powmod(x, p ** r, coeffs, p)
    if xq != list(x[:r]) + [0] * (r - len(x[:r])):
        return False
    for l in range(2, r + 1):
        if r % l == 0 and _is_prime(l):
            xql = _fp_poly_powmod(x, p ** (r // l), coeffs, p)
            diff = [(u - v) % p for u, v in zip(xql, x[:r] + [0] * (r - len(x[:r])))]
            if not _fp_gcd_is_one(diff, coeffs, p):
                return False
    return True

def _fp_gcd_is_one(a, f, p):
    a = list(a)
    b = list(f)
    def deg(u):
        d = len(u) - 1
        while d >= 0 and u[d] == 0:
            d -= 1
        return d
    while True:
        da, db = deg(a), deg(b)
        if db < 0:
            return da == 0
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[deg(b)], p - 2, p)
        while deg(a) >= deg(b) >= 0:
            da, db = deg(a), deg(b)
            c = a[da] * inv % p
            for j in range(db + 1):
                a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        a, b = b, a


def lowest_irreducible(p, r):
    """Lexicographically lowest monic irreducible of degree r over F_p.

    The non-leading coefficient vector (c_0, ..., c_{r-1}) is scanned as a
    base-p integer with c_0 the least significant digit; the first
    irreducible wins.  Recorded in serialized output for reproducibility.
    """
    if r == 1:
        return (0, 1)
    for m in range(p ** r):
        coeffs = []
        mm = m
        for _ in range(r):
            coeffs.append(mm % p)
            mm //= p
        cand = tuple(coeffs) + (1,)
        if _fp_irreducible(list(cand), p):
            return cand
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class GF:
    """The field F_q, q = p^r, p an odd prime.

    Elements are ints in [0, q).  For r = 1 the encoding is the residue
    itself; for r > 1 it packs the coefficient vector base p.
    """

    def __init__(self, p, r=1, modulus=None):
        if not _is_prime(p) or p == 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if r < 1:
            raise ValueError("r must be >= 1")
        self.p = p
        self.r = r
        self.q = p ** r
        if modulus is None:
            modulus = lowest_irreducible(p, r)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        if not _fp_irreducible(list(modulus), p):
            raise ValueError("modulus is not irreducible")
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        if r == 1:
            self._exp = None
            self._log = None
            self.generator = self._find_prime_field_generator()
            return
        # find a multiplicative generator by trial over packed elements
        for cand in range(2, q):
            if self._order_is_full(cand):
                self.generator = cand
                break
        else:
            raise RuntimeError("no generator found")
        exp = [1] * (2 * (q - 1))
        cur = 1
        for i in range(1, q - 1):
            cur = self._mul_raw(cur, self.generator)
            exp[i] = cur
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        log = [0] * q
        for i in range(q - 1):
            log[exp[i]] = i
        self._exp = exp
        self._log = log

    def _find_prime_field_generator(self):
        p = self.p
        fac = []
        n = p - 1
        d = 2
        while d * d <= n:
            if n % d == 0:
                fac.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            fac.append(n)
        for g in range(2, p):
            if all(pow(g, (p - 1) // f, p) != 1 for f in fac):
                return g
        raise RuntimeError("no generator")

    def _order_is_full(self, a):
        n = self.q - 1
        fac = []
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                fac.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fac.append(m)
        return all(self._pow_raw(a, n // f) != 1 for f in fac)

    # --- raw arithmetic on packed encodings (no tables) ---

    def _unpack(self, a):
        p = self.p
        out = []
        for _ in range(self.r):
            out.append(a % p)
            a //= p
        return out

    def _pack(self, coeffs):
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + (c % self.p)
        return a

    def _mul_raw(self, a, b):
        if self.r == 1:
            return a * b % self.p
        va, vb = self._unpack(a), self._unpack(b)
        return self._pack(_fp_poly_mulmod(va, vb, list(self.modulus), self.p))

    def _pow_raw(self, a, e):
        res = 1
        while e:
            if e & 1:
                res = self._mul_raw(res, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return res

    # --- public API: all elements are ints in [0, q) ---

    def add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.r):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.r == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.r):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def mul(self, a, b):
        if self.r == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        e = self._log[a] + self._log[b]
        return self._exp[e]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1) - self._log[a]] if self._log[a] else 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e else 1
        if self.r == 1:
            return pow(a, e % (self.p - 1), self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def is_square(self, a):
        if a == 0:
            return True
        if self.r == 1:
            return pow(a, (self.p - 1) // 2, self.p) == 1
        return self._log[a] % 2 == 0

    def sqrt(self, a):
        """A square root of a, or None if a is a non-square."""
        if a == 0:
            return 0
        if self.r == 1:
            p = self.p
            if pow(a, (p - 1) // 2, p) != 1:
                return None
            if p % 4 == 3:
                return pow(a, (p + 1) // 4, p)
            # Tonelli-Shanks
            qq, s = p - 1, 0
            while qq % 2 == 0:
                qq //= 2
                s += 1
            z = 2
            while pow(z, (p - 1) // 2, p) != p - 1:
                z += 1
            m, c, t, rr = s, pow(z, qq, p), pow(a, qq, p), pow(a, (qq + 1) // 2, p)
            while t != 1:
                t2, i = t, 0
                while t2 != 1:
                    t2 = t2 * t2 % p
                    i += 1
                b = pow(c, 1 << (m - i - 1), p)
                m, c = i, b * b % p
                t, rr = t * c % p, rr * b % p
            return rr
        lg = self._log[a]
        if lg % 2:
            return None
        return self._exp[lg // 2]

    def frobenius(self, a, k=1):
        """a^(p^k)."""
        return self.pow(a, self.p ** (k % self.r if self.r > 1 else 1))

    def elements(self):
        return range(self.q)

    def random(self, rng):
        return rng.randrange(self.q)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.q)

    def coeff_vector(self, a):
        """Coefficient vector (c_0, ..., c_{r-1}) of a over F_p."""
        return tuple(self._unpack(a))

    def from_coeff_vector(self, coeffs):
        return self._pack(list(coeffs))

    def __eq__(self, other):
        return (isinstance(other, GF) and self.p == other.p and self.r == other.r
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"

    def describe(self):
        return {"p": self.p, "r": self.r, "modulus": list(self.modulus)}


@functools.lru_cache(maxsize=None)
def gf(p, r=1, modulus=None):
    """Cached field constructor (tables are expensive to rebuild)."""
    return GF(p, r, modulus)


def embed(sub, big):
    """An embedding F_{p^r} -> F_{p^(rm)} as a dict-backed callable.

    Computed by sending the generator class of sub.modulus to a root of
    sub.modulus in big; the choice of root is fixed deterministically
    (smallest encoding) so embeddings are reproducible.
    """
    if sub.p != big.p or big.r % sub.r != 0:
        raise ValueError("no embedding")
    if sub.r == 1:
        return lambda a: a  # prime field sits as constants in any encoding
    from .poly import Poly
    mod_in_big = Poly(big, [c % big.p for c in sub.modulus])
    roots = mod_in_big.roots()
    if not roots:
        raise RuntimeError("modulus has no root in the big field")
    root = min(roots)
    table = {}
    for a in range(sub.q):
        coeffs = sub.coeff_vector(a)
        img = 0
        for c in reversed(coeffs):
            img = big.add(big.mul(img, root), c % big.p)
        table[a] = img
    return table.__getitem__
