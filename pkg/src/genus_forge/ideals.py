"""Two-generator fractional ideals of the elliptic coordinate ring.

Maximal ideals m_P, their inverses, the Bezout quadruple behind the
transition matrix, and a bounded principality oracle.  The quadruple is
chosen so that every entry of the matrix sandwich it feeds stays inside
the coordinate ring; the identity and all four memberships are re-verified
on every construction.
"""

from __future__ import annotations

import functools

from .coord_ring import KElem, curve_poly, is_integral
from .elliptic import CurvePoint, EllipticCurve
from .poly import Poly, gcd, xgcd


class FracIdeal:
    """O_S * g1 + O_S * g2, with optional point provenance for printing."""

    __slots__ = ("curve", "g1", "g2", "point", "kind")

    def __init__(self, curve: EllipticCurve, g1: KElem, g2: KElem, point=None, kind=None):
        if g1.is_zero() and g2.is_zero():
            raise ValueError("zero ideal")
        self.curve = curve
        self.g1 = g1
        self.g2 = g2
        self.point = point
        self.kind = kind

    def generators(self) -> tuple[KElem, KElem]:
        return self.g1, self.g2

    def to_json(self) -> dict:
        return {"g1": self.g1.to_json(), "g2": self.g2.to_json()}

    def render(self) -> str:
        if self.kind == "max" and self.point is not None:
            P = self.point
            if P.is_infinity:
                return "⟨1⟩"
            return f"⟨{_coord_gen('x', P.x.value)},{_coord_gen('y', P.y.value)}⟩"
        if self.kind == "inv" and self.point is not None:
            P = self.point
            if P.is_infinity:
                return "⟨1⟩"
            top = _coord_plus("y", P.y.value)
            bot = _coord_gen("x", P.x.value)
            if P.y.value == 0:
                return f"⟨1,y/({bot})⟩" if "-" in bot else f"⟨1,y/{bot}⟩"
            return f"⟨1,({top})/({bot})⟩"
        return f"⟨{self.g1.render()},{self.g2.render()}⟩"

    def __repr__(self):
        return self.render()


def _coord_gen(var: str, value: int) -> str:
    return var if value == 0 else f"{var}-{value}"


def _coord_plus(var: str, value: int) -> str:
    """var + value with the raw coordinate shown as written, e.g. y+1, x-2."""
    if value == 0:
        return var
    return f"{var}+{value}"


def maximal_ideal(P: CurvePoint) -> FracIdeal:
    """m_P = <x - x_P, y - y_P>; the unit ideal at infinity."""
    E = P.curve
    if P.is_infinity:
        one = KElem.from_poly(E, 1)
        return FracIdeal(E, one, KElem.from_poly(E, 0), point=P, kind="max")
    if not E.contains(P):
        raise ValueError(f"{P} is not on {E}")
    x = KElem.x(E)
    y = KElem.y(E)
    return FracIdeal(E, x - P.x, y - P.y, point=P, kind="max")


def inverse_ideal(P: CurvePoint) -> FracIdeal:
    """m_P^{-1} = <1, (y + y_P)/(x - x_P)>; the unit ideal at infinity."""
    E = P.curve
    if P.is_infinity:
        one = KElem.from_poly(E, 1)
        return FracIdeal(E, one, KElem.from_poly(E, 0), point=P, kind="inv")
    x = KElem.x(E)
    y = KElem.y(E)
    g2 = (y + P.y) / (x - P.x)
    return FracIdeal(E, KElem.from_poly(E, 1), g2, point=P, kind="inv")


class BezoutQuadruple:
    """a1, b2 in m_P and a2, b1 in m_P^{-1} with a1*b1 + a2*b2 = 1."""

    __slots__ = ("point", "a1", "a2", "b1", "b2")

    def __init__(self, point: CurvePoint, a1: KElem, a2: KElem, b1: KElem, b2: KElem):
        self.point = point
        self.a1 = a1
        self.a2 = a2
        self.b1 = b1
        self.b2 = b2

    def __iter__(self):
        return iter((self.a1, self.a2, self.b1, self.b2))

    def __repr__(self):
        return f"(a1={self.a1}, a2={self.a2}, b1={self.b1}, b2={self.b2})"


def bezout_quadruple(P: CurvePoint) -> BezoutQuadruple:
    """Construct and verify the quadruple for m_P.

    Both cases are arranged so that all four pairwise products a_i*b_j lie in
    the coordinate ring; that keeps the matrix sandwich built from them
    integral.  A verification failure here is a bug, not bad input.
    """
    E = P.curve
    field = E.field
    if P.is_infinity:
        one = KElem.from_poly(E, 1)
        zero = KElem.from_poly(E, 0)
        return BezoutQuadruple(P, one, zero, one, zero)
    if not E.contains(P):
        raise ValueError(f"{P} is not on {E}")
    x = KElem.x(E)
    y = KElem.y(E)
    if P.y.value == 0:
        # f = (x - x_P) * g with g(x_P) != 0 by smoothness; pick the Bezout
        # cofactor of x - x_P that vanishes at x_P so all cross products
        # stay integral
        lin = Poly(field, [-P.x, 1])
        g = (curve_poly(E)) // lin
        d0, c, dd = xgcd(lin, g)
        assert d0.is_one()
        h = c(P.x) / g(P.x)
        c = c - g * Poly.const(field, h)
        dd = dd + lin * Poly.const(field, h)
        a1 = x - P.x
        b1 = KElem.from_poly(E, c)
        a2 = KElem.from_poly(E, dd) * y / (x - P.x)
        b2 = y
    else:
        # a1 = y - y_P, b2 = x - x_P; the remaining pair solves the identity
        # with denominators only in the constant 4 y_P^2
        w = (field(4) * P.y * P.y).inverse()
        a1 = y - P.y
        b1 = (y - P.y) * w
        a2 = (3 * P.y - y) * (y + P.y) * w / (x - P.x)
        b2 = x - P.x
    quad = BezoutQuadruple(P, a1, a2, b1, b2)
    _verify_quadruple(quad)
    return quad


def _verify_quadruple(quad: BezoutQuadruple) -> None:
    P = quad.point
    E = P.curve
    if not (quad.a1 * quad.b1 + quad.a2 * quad.b2) == 1:
        raise RuntimeError(f"Bezout identity failed at {P}")
    m = maximal_ideal(P)
    minv = inverse_ideal(P)
    # u in m_P  iff  u * m_P^{-1} lies in O_S; dually for m_P^{-1}
    for u, dual, side in (
        (quad.a1, minv, "a1 in m_P"),
        (quad.b2, minv, "b2 in m_P"),
        (quad.a2, m, "a2 in inverse"),
        (quad.b1, m, "b1 in inverse"),
    ):
        for g in dual.generators():
            if not g.is_zero() and not is_integral(u * g):
                raise RuntimeError(f"membership {side} failed at {P}")


def transition_matrix_inverse(P: CurvePoint, normalization: str = "paper"):
    """A^{-1} for the basis change m_P + m_P^{-1} -> free; determinant 1.

    "raw" is [[a1, a2], [-b2, b1]]; "paper" flips the signs of a2 and b2.
    """
    quad = bezout_quadruple(P)
    a1, a2, b1, b2 = quad
    if normalization == "raw":
        return ((a1, a2), (-b2, b1))
    if normalization == "paper":
        return ((a1, -a2), (b2, b1))
    raise ValueError(f"unknown normalization {normalization!r}")


def _module_rows(I: FracIdeal) -> list[tuple[Poly, Poly]]:
    """I as a module over F_p[x] with basis (1, y): rows (A, B) = A + B*y."""
    f = curve_poly(I.curve)
    rows = []
    for g in I.generators():
        if g.is_zero():
            continue
        if not g.d.is_one():
            raise ValueError("ideal generators must lie in the coordinate ring")
        rows.append((g.a, g.b))
        rows.append((g.b * f, g.a))
    return rows


def _triangular_basis(curve: EllipticCurve, rows) -> tuple[Poly, Poly, Poly]:
    """Reduce rows to ((n1, 0), (s, n2)) spanning the same F_p[x]-module."""
    field = curve.field
    cur = None
    plain: list[Poly] = []
    for A, B in rows:
        if B.is_zero():
            if not A.is_zero():
                plain.append(A)
            continue
        if cur is None:
            cur = (A, B)
            continue
        A1, B1 = cur
        d, u, v = xgcd(B1, B)
        cur = (u * A1 + v * A, d)
        elim = (B // d) * A1 - (B1 // d) * A
        if not elim.is_zero():
            plain.append(elim)
    if cur is None:
        raise ValueError("ideal has no y-component rows")
    s, n2 = cur
    if not n2.is_monic():
        inv = pow(n2.lead, field.p - 2, field.p)
        s, n2 = s * inv, n2 * inv
    if not plain:
        raise ValueError("ideal module is not of full rank")
    n1 = functools.reduce(gcd, plain)
    s = s % n1
    return n1, s, n2


def ideal_product(I: FracIdeal, J: FracIdeal) -> FracIdeal:
    """Product ideal, reduced back to two generators via the module form."""
    if I.curve != J.curve:
        raise ValueError("mixed curves")
    prods = [g * h for g in I.generators() for h in J.generators() if not (g * h).is_zero()]
    rows = []
    f = curve_poly(I.curve)
    for g in prods:
        if not g.d.is_one():
            raise ValueError("product left the coordinate ring")
        rows.append((g.a, g.b))
        rows.append((g.b * f, g.a))
    n1, s, n2 = _triangular_basis(I.curve, rows)
    g1 = KElem.from_poly(I.curve, n1)
    g2 = KElem(I.curve, s, n2)
    return FracIdeal(I.curve, g1, g2)


def in_ideal_bounded(I: FracIdeal, u: KElem, deg_bound: int) -> bool:
    """Decide u in I by expressing u as an O_S-combination of the generators
    with coefficient polynomials of degree <= deg_bound + 3 (linear algebra
    over F_p)."""
    if not u.d.is_one():
        return False
    field = I.curve.field
    p = field.p
    f = curve_poly(I.curve)
    gens = [g for g in I.generators() if not g.is_zero()]
    for g in gens:
        if not g.d.is_one():
            raise ValueError("ideal generators must lie in the coordinate ring")
    B = deg_bound + 3
    # unknowns: alpha_i, beta_i of degree <= B per generator, q_i = alpha_i + beta_i y
    cols = []
    for g in gens:
        for k in range(B + 1):
            xk = Poly(field, [0] * k + [1])
            cols.append(((xk * g.a), (xk * g.b)))  # alpha_i x^k
        for k in range(B + 1):
            xk = Poly(field, [0] * k + [1])
            cols.append(((xk * g.b * f), (xk * g.a)))  # beta_i x^k
    deg_max = max(
        [u.a.deg, u.b.deg]
        + [c[0].deg for c in cols]
        + [c[1].deg for c in cols]
    )
    nrows = 2 * (deg_max + 1)
    mat = []
    for one_part, y_part in cols:
        col = [0] * nrows
        for k, c in enumerate(one_part.coeffs):
            col[k] = c
        for k, c in enumerate(y_part.coeffs):
            col[deg_max + 1 + k] = c
        mat.append(col)
    rhs = [0] * nrows
    for k, c in enumerate(u.a.coeffs):
        rhs[k] = c
    for k, c in enumerate(u.b.coeffs):
        rhs[deg_max + 1 + k] = c
    return _consistent_mod_p(mat, rhs, p)


def _consistent_mod_p(cols: list[list[int]], rhs: list[int], p: int) -> bool:
    """Does sum_j z_j * cols[j] = rhs have a solution over F_p?"""
    if not cols:
        return all(v % p == 0 for v in rhs)
    nrows = len(rhs)
    ncols = len(cols)
    aug = [[cols[j][i] % p for j in range(ncols)] + [rhs[i] % p] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                m = aug[i][c]
                aug[i] = [(a - m * b) % p for a, b in zip(aug[i], aug[r])]
        r += 1
        if r == nrows:
            break
    # consistency: no row reduces to 0 = nonzero
    for i in range(nrows):
        if aug[i][ncols] and not any(aug[i][:ncols]):
            return False
    return True


def is_principal(I: FracIdeal, deg_bound: int) -> KElem | None:
    """Search for g with <g> = I among g = a(x) + b(x)y, deg a, deg b <= deg_bound.

    The module form of I pins deg(norm g) = deg n1 + deg n2, which cuts the
    candidate degrees down to at most one profile; each surviving candidate is
    verified by bounded membership and integral division of both generators.
    """
    E = I.curve
    field = E.field
    f = curve_poly(E)
    n1, s, n2 = _triangular_basis(E, _module_rows(I))
    target = n1 * n2
    D = target.deg
    candidates = _candidate_degrees(D, deg_bound)
    for da, db in candidates:
        for a, b in _candidate_pairs(field, da, db, D):
            norm = a * a - f * b * b
            q, r = divmod(norm, target)
            if not r.is_zero() or q.deg != 0:
                continue
            g = KElem(E, a, b)
            if not in_ideal_bounded(I, g, deg_bound):
                continue
            q1 = I.g1 / g if not I.g1.is_zero() else None
            q2 = I.g2 / g if not I.g2.is_zero() else None
            if q1 is not None and not is_integral(q1):
                continue
            if q2 is not None and not is_integral(q2):
                continue
            return g
    return None


def _candidate_degrees(D: int, deg_bound: int) -> list[tuple[int, int]]:
    """Degree profiles (deg a, deg b) with max(2*deg a, 3 + 2*deg b) = D.

    The two branches have opposite parity, so exactly one applies; -1 marks
    an absent b (or a)."""
    if D % 2 == 0:
        da = D // 2
        if da > deg_bound:
            return []
        return [(da, min((D - 4) // 2, deg_bound))]
    db = (D - 3) // 2
    if db < 0 or db > deg_bound:
        return []
    return [(min((D - 1) // 2, deg_bound), db)]


def _candidate_pairs(field, da: int, db: int, D: int):
    """Candidates up to F_p scaling, deterministic lex order."""
    p = field.p
    if D % 2 == 0:
        # a monic of exact degree da; b any polynomial of degree <= db
        for a in _polys_exact_monic(field, da):
            for b in _polys_up_to(field, db):
                yield a, b
    else:
        for b in _polys_exact_monic(field, db):
            for a in _polys_up_to(field, da):
                yield a, b


def _polys_exact_monic(field, deg: int):
    p = field.p
    for k in range(p**deg):
        coeffs = []
        n = k
        for _ in range(deg):
            coeffs.append(n % p)
            n //= p
        coeffs.append(1)
        yield Poly(field, coeffs)


def _polys_up_to(field, deg: int):
    """All polynomials of degree <= deg; just the zero polynomial if deg < 0."""
    if deg < 0:
        yield Poly(field)
        return
    p = field.p
    for k in range(p ** (deg + 1)):
        coeffs = []
        n = k
        for _ in range(deg + 1):
            coeffs.append(n % p)
            n //= p
        yield Poly(field, coeffs)
