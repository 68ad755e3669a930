"""Reduction data for elliptic models over F_q(t), tame case (p >= 5).

Kodaira type, geometric component-group order, and conductor exponent at
every bad place, from the valuations of (c4, c6, Delta) of a local minimal
short model.  The place at infinity is handled on the s = 1/t chart after
rescaling (x, y) -> (x/s^(2*chi), y/s^(3*chi)), the same coordinate change
as in the height-comparison argument.

Component-group orders are geometric (Neron model over the algebraic
closure of the constant field), which is what the even-order set Sigma_2
of the descent map needs.
"""

from dataclasses import dataclass

from .poly import Poly
from .ratfunc import Place, RatFunc
from .curves import ModelError, comparison_chi

# geometric component-group order and conductor exponent per additive type
ADDITIVE_TYPES = {
    "II": 1, "III": 2, "IV": 3, "I0*": 4, "IV*": 3, "III*": 2, "II*": 1,
}


@dataclass
class LocalReduction:
    place_label: str
    place_degree: int
    kodaira: str
    v_c4: int
    v_c6: int
    v_disc: int
    component_order: int
    conductor_exp: int

    @property
    def component_order_even(self):
        return self.component_order % 2 == 0


@dataclass
class EllipticLocalData:
    reductions: list
    conductor_degree: int
    sigma2: set
    j: RatFunc = None


def _vord(p, prime):
    """ord_prime(p) for a Poly p; large sentinel when p = 0."""
    if p.is_zero():
        return 10 ** 9
    n = 0
    while True:
        q, r = p.divmod(prime)
        if not r.is_zero():
            return n
        n += 1
        p = q
        if p.is_zero():
            return n


def kodaira_from_valuations(vc4, vc6, vdisc):
    """Type of a minimal model from (v(c4), v(c6), v(Delta)), p >= 5."""
    if vdisc == 0:
        return "I0"
    if vc4 == 0:
        return f"I{vdisc}"
    if vc4 == 2 and vdisc >= 7:
        return f"I{vdisc - 6}*"
    table = {2: "II", 3: "III", 4: "IV", 6: "I0*", 8: "IV*", 9: "III*", 10: "II*"}
    if vdisc not in table:
        raise ModelError(f"unclassifiable valuations (vc4={vc4}, vdisc={vdisc})")
    return table[vdisc]


def _classify_at(A, B, prime, label):
    """Local data at the finite place (prime) for y^2 = x^3 + Ax + B."""
    vA = _vord(A, prime)
    vB = _vord(B, prime)
    while vA >= 4 and vB >= 6:
        A = A.exact_div(prime ** 4)
        B = B.exact_div(prime ** 6)
        vA -= 4
        vB -= 6
    disc_local = (A * A * A).scale(4 % A.F.p) + (B * B).scale(27 % A.F.p)
    vdisc = _vord(disc_local, prime)
    kod = kodaira_from_valuations(vA, vB, vdisc)
    if kod == "I0":
        comp, cond = 1, 0
    elif kod[1:].isdigit():  # multiplicative I_n
        comp, cond = int(kod[1:]), 1
    elif kod.endswith("*") and kod[1:-1].isdigit() and kod != "I0*":  # I_n*
        comp, cond = 4, 2
    else:
        comp, cond = ADDITIVE_TYPES[kod], 2
    return LocalReduction(label, prime.degree, kod, vA, vB, vdisc, comp, cond)


def elliptic_local_data(model):
    """Kodaira data at all bad places (finite and infinite) of a d = 3 model.

    Requires p >= 5 and polynomial coefficients; rejects constant curves.
    """
    F = model.F
    if model.d != 3:
        raise ModelError("local reduction data requires d = 3")
    if F.p < 5:
        raise ModelError("tame reduction table requires p >= 5")
    if not model.has_polynomial_coeffs():
        raise ModelError("local data requires coefficients in F_q[t]")
    if model.constant is True:
        raise ModelError("constant curve has no nontrivial reduction data")
    A, B, _ = model.short_form()
    # depressed coefficients stay polynomial since 3 is invertible
    Ap, Bp = A.num, B.num
    if not (A.is_polynomial() and B.is_polynomial()):
        raise ModelError("short form must have polynomial coefficients")

    reductions = []
    disc = (A * A * A).scale(4 % F.p) + (B * B).scale(27 % F.p)
    for prime, _e in disc.num.factor():
        reductions.append(_classify_at(Ap, Bp, prime, repr(prime)))

    # infinite place: t = 1/s, (x,y) -> (x/s^(2chi), y/s^(3chi))
    chi = max(-(-(Ap.degree if not Ap.is_zero() else 0) // 4),
              -(-(Bp.degree if not Bp.is_zero() else 0) // 6))
    s = Poly.x(F)
    Ainf = Ap.reverse(4 * chi) if not Ap.is_zero() else Ap
    Binf = Bp.reverse(6 * chi) if not Bp.is_zero() else Bp
    red_inf = _classify_at(Ainf, Binf, s, "oo")
    reductions.append(red_inf)

    conductor_degree = sum(r.conductor_exp * r.place_degree for r in reductions)
    sigma2 = {r.place_label for r in reductions if r.component_order_even}
    return EllipticLocalData(reductions, conductor_degree, sigma2, model.j)
