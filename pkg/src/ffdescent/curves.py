"""Weierstrass models y^2 = f(x) over F_q(t) and the elliptic group law.

A HyperellipticModel wraps a monic separable f of odd degree d >= 3 with
RatFunc coefficients, and caches the invariants every later stage needs:
discriminant, height, bad places, and for d = 3 the depressed short form,
j-invariant and isotriviality classification.
"""

from .gf import GF
from .poly import Poly
from .ratfunc import Place, RatFunc, XPoly, divisor_of, insep_degree, poly_height


class ModelError(ValueError):
    pass


class HyperellipticModel:
    """y^2 = f(x), f monic separable of odd degree d >= 3 over F_q(t)."""

    def __init__(self, f):
        F = f.F
        if F.p == 2:
            raise ModelError("characteristic 2 is not supported")
        if not f.is_monic():
            raise ModelError("f must be monic in X")
        d = f.degree
        if d < 3 or d % 2 == 0:
            raise ModelError(f"f must have odd degree >= 3, got degree {d}")
        disc = f.discriminant()
        if disc.is_zero():
            raise ModelError("f is not separable (vanishing discriminant)")
        self.F = F
        self.f = f
        self.d = d
        self.genus = (d - 1) // 2
        self.disc = disc
        self.height = poly_height(f)
        self._short = None
        if d == 3:
            self._compute_elliptic_invariants()
        else:
            self.j = None
            self.isotrivial = "unknown"
            self.constant = "unknown"

    # --- d = 3 invariants ---

    def _compute_elliptic_invariants(self):
        F = self.F
        a2, a1, a0 = self.f.coeff(2), self.f.coeff(1), self.f.coeff(0)
        third = RatFunc.const(F, F.inv(3 % F.p))
        shift = a2 * third  # x -> x - a2/3
        A = a1 - a2 * a2 * third
        B = a0 - a1 * a2 * third + a2 * a2 * a2 * third * third * RatFunc.const(F, 2)
        self._short = (A, B, shift)
        num = A * A * A * RatFunc.const(F, 6912 % F.p)
        den = A * A * A * RatFunc.const(F, 4 % F.p) + B * B * RatFunc.const(F, 27 % F.p)
        self.j = num / den
        self.isotrivial = self.j.is_constant()
        self.constant = self.isotrivial and self._twist_class_constant(A, B)

    def _twist_class_constant(self, A, B):
        """Whether y^2 = x^3 + Ax + B is a constant curve over the algebraic
        closure: the twisting class must come from the constants, i.e. the
        relevant parameter has divisor divisible by 2 (resp. 6, 4 at j = 0,
        1728)."""
        if A.is_zero():  # j = 0
            return _divisor_divisible(B, 6)
        if B.is_zero():  # j = 1728
            return _divisor_divisible(A, 4)
        return _divisor_divisible(B / A, 2)

    def short_form(self):
        """(A, B, shift) with y^2 = x^3 + Ax + B after x -> x - shift; d = 3 only."""
        if self.d != 3:
            raise ModelError("short form requires d = 3")
        return self._short

    def is_short(self):
        return self.d == 3 and self.f.coeff(2).is_zero()

    def has_polynomial_coeffs(self):
        return self.f.has_polynomial_coeffs()

    def disc_poly(self):
        """The discriminant as a polynomial; requires polynomial coefficients."""
        if not self.disc.is_polynomial():
            raise ModelError("discriminant is not a polynomial; clear denominators first")
        return self.disc.num

    def evaluate_f(self, x0):
        return self.f.evaluate(x0)

    def is_point(self, x0, y0):
        return y0 * y0 == self.f.evaluate(x0)

    def insep_degree_rho(self):
        """rho of the height bound; for d = 3 the inseparable degree of j."""
        if self.d != 3:
            raise ModelError("rho is computed from j only for d = 3; supply it for d >= 5")
        if self.isotrivial:
            raise ModelError("rho undefined for isotrivial curves")
        return insep_degree(self.j)

    def describe(self):
        return {
            "field": self.F.describe(),
            "f": [[c.num.coeff_ints(), c.den.coeff_ints()] for c in
                  [self.f.coeff(i) for i in range(self.d + 1)]],
            "d": self.d,
            "genus": self.genus,
            "height": self.height,
            "isotrivial": self.isotrivial,
            "constant": self.constant,
        }


def _divisor_divisible(z, n):
    if z.is_zero():
        raise ModelError("degenerate twist parameter")
    return all(v % n == 0 for v in divisor_of(z).values())


def validate_model(f):
    """Build a HyperellipticModel, enforcing the standing hypotheses."""
    return HyperellipticModel(f)


def model_from_poly_coeffs(F, coeffs):
    """Model with polynomial coefficients, given a list of Poly (ascending)."""
    return validate_model(XPoly.from_polys(F, coeffs))


def bad_places(model):
    """Sigma = {finite places dividing Delta_f}; polynomial coefficients required."""
    if not model.has_polynomial_coeffs():
        raise ModelError("bad_places requires coefficients in F_q[t]")
    disc = model.disc_poly()
    if disc.is_constant():
        return set()
    return {Place.finite(g) for g, _ in disc.factor()}


def comparison_chi(model):
    """chi = max(ceil(deg A / 4), ceil(deg B / 6)) for a short-form model."""
    if model.d != 3:
        raise ModelError("chi requires d = 3")
    if not model.is_short():
        raise ModelError("chi requires short Weierstrass form y^2 = x^3 + Ax + B")
    A, B = model.f.coeff(1), model.f.coeff(0)
    if not (A.is_polynomial() and B.is_polynomial()):
        raise ModelError("chi requires polynomial coefficients")
    da = A.num.degree if not A.is_zero() else 0
    db = B.num.degree if not B.is_zero() else 0
    return max(-(-da // 4), -(-db // 6))


# --- elliptic group law on y^2 = x^3 + a2 x^2 + a1 x + a0 over F_q(t) ---

O = None  # the point at infinity


def ec_neg(P):
    if P is None:
        return None
    return (P[0], -P[1])


def ec_add(model, P, Q):
    """Addition on a d = 3 model; points are (RatFunc, RatFunc) or None for O."""
    if model.d != 3:
        raise ModelError("group law requires d = 3")
    if P is None:
        return Q
    if Q is None:
        return P
    F = model.F
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return None
        # doubling
        a2, a1 = model.f.coeff(2), model.f.coeff(1)
        num = (x1 * x1).scale(3 % F.p) + (a2 * x1).scale(2 % F.p) + a1
        lam = num / (y1.scale(2 % F.p))
    else:
        lam = (y2 - y1) / (x2 - x1)
    a2 = model.f.coeff(2)
    x3 = lam * lam - a2 - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def ec_double(model, P):
    return ec_add(model, P, P)


def ec_mul(model, n, P):
    if n < 0:
        return ec_mul(model, -n, ec_neg(P))
    R = None
    Q = P
    while n:
        if n & 1:
            R = ec_add(model, R, Q)
        Q = ec_add(model, Q, Q)
        n >>= 1
    return R
