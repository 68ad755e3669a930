"""The 2-descent map and squareness testing in A = F_q(t)[X]/(f).

delta sends a rational point (x0, y0) to the class of x0 - x modulo squares
(with the two-term formula on Weierstrass points y0 = 0).  Class equality is
squareness of the product, tested two ways:

  * a seeded Monte Carlo specialization test per irreducible component,
    sampling t = a in even-degree extensions F_{q^(2s)} so that constant
    non-squares (invisible geometrically) cannot produce false negatives;
    one-sided error <= 2^-T heuristically;

  * a deterministic oracle: factor the characteristic polynomial of the
    candidate square evaluated at T^2 and extract a square root by reducing
    a degree-d factor modulo T^2 - z.  Sound (witnesses are verified) and
    complete up to explicitly reported inconclusive cases.
"""

import random
from dataclasses import dataclass

from .gf import gf, embed
from .poly import Poly
from .ratfunc import RatFunc, XPoly, charpoly_in_quotient, norm_in_quotient
from .planecurve import factor_bivariate


class DescentError(ValueError):
    pass


SQUARE = "square"
NON_SQUARE = "non-square"
INCONCLUSIVE = "inconclusive"


@dataclass
class ClassRep:
    """An element of A = F_q(t)[X]/(f) representing a class modulo squares."""
    model: object
    z: XPoly  # reduced mod f


class DescentSystem:
    """Descent computations attached to one hyperelliptic model."""

    def __init__(self, model):
        self.model = model
        self.F = model.F
        self._components = None

    def components(self):
        if self._components is None:
            self._components = factor_bivariate(self.model.f)
        return self._components

    def nonsquare_constant(self):
        F = self.F
        for c in range(2, F.q):
            if not F.is_square(c):
                return c
        raise DescentError("no non-square constant (field of square order?)")

    # --- the descent map ---

    def delta(self, x0, y0):
        """Class representative of the point (x0, y0)."""
        model = self.model
        if not model.is_point(x0, y0):
            raise DescentError("point is not on the curve")
        F = self.F
        f = model.f
        xvar = XPoly.x(F)
        if not y0.is_zero():
            z = XPoly(F, [x0]) - xvar
            return ClassRep(model, z % f)
        # Weierstrass branch: (x0 - X) + f(X)/(X - x0)
        lin = xvar - XPoly(F, [x0])
        quot = f.exact_div(lin)
        z = (XPoly(F, [x0]) - xvar) + quot
        return ClassRep(model, z % f)

    def norm(self, rep):
        return norm_in_quotient(self.model.f, rep.z)

    def mul(self, rep1, rep2):
        return ClassRep(self.model, (rep1.z * rep2.z) % self.model.f)

    # --- Monte Carlo geometric squareness ---

    def is_square_geometric(self, rep, trials=40, seed=0, max_resample=200):
        """SQUARE / NON_SQUARE by specialization sampling over F_{q^(2s)}."""
        rng = random.Random(seed)
        comps = self.components()
        for comp in comps:
            zc = rep.z % comp
            if zc.is_zero():
                raise DescentError("element is not a unit modulo a component")
        good_trials = 0
        attempts = 0
        while good_trials < trials:
            if attempts > max_resample + trials:
                raise DescentError("could not find enough good specializations")
            attempts += 1
            s = rng.choice((1, 1, 1, 2))
            big = gf(self.F.p, self.F.r * 2 * s)
            a = big.random(rng)
            ok, all_square = self._trial(rep, big, a)
            if not ok:
                continue
            good_trials += 1
            if not all_square:
                return NON_SQUARE
        return SQUARE

    def _trial(self, rep, big, a):
        """One specialization t = a; returns (usable, all residues square)."""
        emb = embed(self.F, big)
        for comp in self.components():
            spec = _specialize_xpoly(comp, big, emb, a)
            if spec is None or spec.degree != comp.degree:
                return False, False
            if not spec.is_squarefree():
                return False, False
            zc = rep.z % comp
            zspec = _specialize_xpoly(zc, big, emb, a)
            if zspec is None:
                return False, False
            for h, _e in spec.factor():
                res = zspec % h
                if res.is_zero():
                    return False, False
                if not _residue_is_square(res, h, big):
                    return True, False
        return True, True

    # --- deterministic oracle ---

    def is_square_oracle(self, rep, degree_budget=60, geometric=True):
        """(status, witness) with status SQUARE / NON_SQUARE / INCONCLUSIVE.

        With geometric=True (the default) the test decides squareness up to
        constants, i.e. whether z or c0 z is a square with c0 a fixed
        non-square of F_q; this matches the geometric class group.
        """
        cands = [rep.z]
        if geometric:
            c0 = self.nonsquare_constant()
            cands.append(rep.z * RatFunc.const(self.F, c0))
        inconclusive = False
        for z in cands:
            status, wit = self._oracle_single(z, degree_budget)
            if status == SQUARE:
                return SQUARE, wit
            if status == INCONCLUSIVE:
                inconclusive = True
        return (INCONCLUSIVE, None) if inconclusive else (NON_SQUARE, None)

    def _oracle_single(self, z, degree_budget):
        f = self.model.f
        F = self.F
        witnesses = []
        for comp in self.components():
            zc = z % comp
            if zc.is_zero():
                raise DescentError("not a unit modulo a component")
            got = _sqrt_in_field(comp, zc, degree_budget)
            if got == "budget":
                return INCONCLUSIVE, None
            if got is None:
                return NON_SQUARE, None
            witnesses.append(got)
        return SQUARE, witnesses

    # --- class comparison and fiber grouping ---

    def same_class(self, rep1, rep2, trials=40, seed=0, oracle_budget=60,
                   require_oracle=False):
        """Whether the two representatives define the same class mod squares.

        The Monte Carlo verdict is cross-checked by the oracle whenever the
        oracle is conclusive; the oracle wins on (astronomically rare)
        disagreement."""
        prod = self.mul(rep1, rep2)
        mc = self.is_square_geometric(prod, trials=trials, seed=seed)
        status, _w = self.is_square_oracle(prod, degree_budget=oracle_budget)
        if status != INCONCLUSIVE:
            return status == SQUARE
        if require_oracle:
            raise DescentError("oracle inconclusive")
        return mc == SQUARE

    def group_fibers(self, points, trials=40, seed=0):
        """Partition points by delta-class; returns (groups, max fiber size).

        Points sharing the x-coordinate have identical representatives and
        are grouped for free; distinct representatives are merged by
        same_class.
        """
        buckets = {}
        for (x0, y0) in points:
            key = (tuple(x0.num.c), tuple(x0.den.c),
                   tuple((y0 * y0).num.c))
            buckets.setdefault(key, []).append((x0, y0))
        reps = []
        groups = []
        for key, pts in sorted(buckets.items()):
            x0, y0 = pts[0]
            rep = self.delta(x0, y0)
            placed = False
            for i, other in enumerate(reps):
                if self.same_class(rep, other, trials=trials, seed=seed):
                    groups[i].extend(pts)
                    placed = True
                    break
            if not placed:
                reps.append(rep)
                groups.append(list(pts))
        max_fiber = max((len(g) for g in groups), default=0)
        return groups, max_fiber


def h1_dim(genus_component, punctures):
    """dim_F2 H^1(C \\ D, mu_2) = 2g if D empty else 2g + #D - 1."""
    if genus_component < 0 or punctures < 0:
        raise ValueError("negative inputs")
    if punctures == 0:
        return 2 * genus_component
    return 2 * genus_component + punctures - 1


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------

def _specialize_xpoly(xp, big, emb, a):
    """Specialize t = a into big; None if a denominator vanishes."""
    out = []
    for c in xp.c:
        v = c.eval_in(big, emb, a)
        if v is None:
            return None
        out.append(v)
    return Poly(big, out)


def _residue_is_square(res, modulus, big):
    """Quadratic residuosity of res in big[X]/(modulus), modulus irreducible."""
    Q = big.q ** modulus.degree
    power = res.powmod((Q - 1) // 2, modulus)
    if power.is_one():
        return True
    if power.degree == 0 and power.c[0] == big.neg(1):
        return False
    raise DescentError("residuosity test returned a non-sign value")


def _sqrt_in_field(comp, z, degree_budget):
    """Square root of z in K = F_q(t)[X]/(comp), or None, or 'budget'.

    Factors charpoly(z)(T^2) over F_q(t) and pulls the root from a degree-d
    factor h via h mod (T^2 - z); verified before returning.  Random unit
    shifts break the rare symmetric degeneracies.
    """
    import itertools
    F = comp.F
    d = comp.degree
    rng = random.Random(0xACE)
    shifts = [XPoly.one(F)]
    x = XPoly.x(F)
    for c in (1, 2):
        shifts.append((x + XPoly.const(F, c)) % comp)
    for shift in shifts:
        zs = (z * shift * shift) % comp
        try:
            ch = charpoly_in_quotient(comp, zs)
        except ValueError:
            return "budget"
        if _coeff_degree(ch) > degree_budget:
            return "budget"
        big_poly, scale = _clear_to_polynomial_T2(ch)
        if big_poly is None:
            return "budget"
        try:
            factors = factor_bivariate(big_poly)
        except Exception:
            return "budget"
        # degree-d sub-products
        fac_list = list(factors)
        n = len(fac_list)
        for rsize in range(1, n + 1):
            for combo in itertools.combinations(range(n), rsize):
                degsum = sum(fac_list[i].degree for i in combo)
                if degsum != d:
                    continue
                h = XPoly.one(F)
                for i in combo:
                    h = h * fac_list[i]
                w = _extract_root(comp, h, zs, scale)
                if w is not None:
                    # w^2 = zs = z * shift^2, so z = (w/shift)^2
                    shinv = _invert_mod(shift, comp)
                    if shinv is None:
                        continue
                    wfinal = (w * shinv) % comp
                    if ((wfinal * wfinal) % comp) == (z % comp):
                        return wfinal
        # no factor worked for this shift; if charpoly(T^2) is separable the
        # answer is definitive, otherwise retry with the next shift
        disc = big_poly.discriminant()
        if not disc.is_zero():
            return None
    return "budget"


def _coeff_degree(xp):
    m = 0
    for c in xp.c:
        if not c.is_zero():
            m = max(m, c.num.degree + c.den.degree)
    return m


def _clear_to_polynomial_T2(ch):
    """From charpoly ch(T), build the monic polynomial-coefficient model of
    ch(T^2) after scaling T by a common denominator: returns (poly, scale)."""
    F = ch.F
    den = Poly.one(F)
    for c in ch.c:
        den = (den * c.den).exact_div(den.gcd(c.den)) if not c.is_zero() else den
    d = ch.degree
    # coefficients of ch(T^2): e_k at T^(2k); scale T -> Y/den
    coeffs = []
    for k in range(2 * d + 1):
        if k % 2:
            coeffs.append(RatFunc.zero(F))
        else:
            e = ch.coeff(k // 2)
            coeffs.append(e * RatFunc(den ** (2 * d - k)))
    out = XPoly(F, coeffs)
    if not out.has_polynomial_coeffs():
        return None, None
    return out, den


def _extract_root(comp, h, z, scale):
    """Try to read a root of T^2 - z from the candidate factor h(Y), where
    Y = scale * T."""
    F = comp.F
    # h(Y) with Y = scale T: reduce h(scale*T) modulo T^2 - z in K[T]
    alpha = XPoly.zero(F)  # constant term in K
    beta = XPoly.zero(F)   # coefficient of T
    Tpow_const = XPoly.one(F)   # T^k reduced: a + b*T with coefficients in K
    Tpow_lin = XPoly.zero(F)
    sc = RatFunc(scale)
    scale_pow = RatFunc.one(F)
    for k in range(h.degree + 1):
        ck = h.coeff(k)
        if not ck.is_zero():
            coef = ck * scale_pow
            alpha = (alpha + Tpow_const * coef) % comp
            beta = (beta + Tpow_lin * coef) % comp
        # multiply (Tpow_const + Tpow_lin T) by T: -> Tpow_lin z + Tpow_const T
        Tpow_const, Tpow_lin = (Tpow_lin * z) % comp, Tpow_const
        scale_pow = scale_pow * sc
    if beta.is_zero():
        return None
    binv = _invert_mod(beta, comp)
    if binv is None:
        return None
    w = ((-alpha) * binv) % comp
    if ((w * w) % comp) == (z % comp):
        return w
    return None


def _invert_mod(a, mod):
    g, s, _t = a.gcd(mod), None, None
    if g.degree != 0:
        return None
    # extended euclid on XPoly
    r0, r1 = mod, a % mod
    s0, s1 = XPoly.zero(mod.F), XPoly.one(mod.F)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        return None
    inv_lc = r0.coeff(0).inverse()
    return (s0 * inv_lc) % mod