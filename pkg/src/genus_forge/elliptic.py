"""Short-Weierstrass elliptic curves over F_p: points, group law, 2-cosets."""

from __future__ import annotations

import math

from .field import FieldElem, PrimeField, is_square


class EllipticCurve:
    """y^2 = x^3 + a x + b over F_p, p an odd prime, smooth."""

    def __init__(self, field: PrimeField, a, b):
        self.field = field
        self.a = field(a)
        self.b = field(b)
        disc = 4 * self.a**3 + 27 * self.b**2
        if not disc:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0")
        self._points = None

    def rhs(self, x: FieldElem) -> FieldElem:
        return x**3 + self.a * x + self.b

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == self.rhs(P.x)

    def infinity(self) -> CurvePoint:
        return CurvePoint(self, None, None)

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(self, self.field(x), self.field(y))
        if not self.contains(P):
            raise ValueError(f"({P.x},{P.y}) is not on the curve")
        return P

    def __eq__(self, other):
        return (
            isinstance(other, EllipticCurve)
            and other.field == self.field
            and other.a == self.a
            and other.b == self.b
        )

    def __hash__(self):
        return hash((self.field.p, self.a.value, self.b.value))

    def __repr__(self):
        rhs = f"x^3+{self.a}*x+{self.b}"
        return f"y^2={rhs} over F_{self.field.p}"


class CurvePoint:
    """An affine point (x, y) or the point at infinity (x = y = None)."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: EllipticCurve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self):
        if self.is_infinity:
            return (0, 0, 0)
        return (1, self.x.value, self.y.value)

    def __neg__(self):
        if self.is_infinity:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint) or other.curve != self.curve:
            return False
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return other.x == self.x and other.y == self.y

    def __hash__(self):
        if self.is_infinity:
            return hash((self.curve.field.p, "inf"))
        return hash((self.curve.field.p, self.x.value, self.y.value))

    def __repr__(self):
        if self.is_infinity:
            return "inf"
        return f"({self.x},{self.y})"


def enumerate_points(E: EllipticCurve) -> list[CurvePoint]:
    """All F_p-points: infinity first, affine points by (x, y) ascending."""
    if E._points is not None:
        return list(E._points)
    pts = [E.infinity()]
    for x in E.field.elements():
        r = E.rhs(x)
        if not r:
            pts.append(CurvePoint(E, x, E.field.zero))
        elif is_square(r):
            roots = sorted(
                (y for y in E.field.elements() if y * y == r),
                key=lambda y: y.value,
            )
            pts.extend(CurvePoint(E, x, y) for y in roots)
    E._points = tuple(pts)
    return list(pts)


def add(E: EllipticCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent group law with identity at infinity."""
    for R in (P, Q):
        if not E.contains(R):
            raise ValueError(f"point {R} is not on {E}")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x and P.y == -Q.y:
        return E.infinity()
    if P == Q:
        # tangent slope
        s = (3 * P.x**2 + E.a) / (2 * P.y)
    else:
        # chord slope
        s = (Q.y - P.y) / (Q.x - P.x)
    x3 = s * s - P.x - Q.x
    y3 = s * (P.x - x3) - P.y
    return CurvePoint(E, x3, y3)


def scalar_mul(E: EllipticCurve, n: int, P: CurvePoint) -> CurvePoint:
    if n < 0:
        return scalar_mul(E, -n, -P)
    out = E.infinity()
    base = P
    while n:
        if n & 1:
            out = add(E, out, base)
        base = add(E, base, base)
        n >>= 1
    return out


def point_order(E: EllipticCurve, P: CurvePoint) -> int:
    n = 1
    Q = P
    while not Q.is_infinity:
        Q = add(E, Q, P)
        n += 1
    return n


def group_structure(E: EllipticCurve) -> tuple[int, int]:
    """Invariant factors (n1, n2) with n1 | n2 and C(F_p) = Z/n1 x Z/n2."""
    pts = enumerate_points(E)
    total = len(pts)
    exponent = 1
    for P in pts:
        exponent = math.lcm(exponent, point_order(E, P))
    n1, n2 = total // exponent, exponent
    assert n2 % n1 == 0 and n1 * n2 == total
    return n1, n2


def doubling_image(E: EllipticCurve) -> set[CurvePoint]:
    return {add(E, P, P) for P in enumerate_points(E)}


def cosets_mod_2(E: EllipticCurve) -> list[CurvePoint]:
    """Lex-least representatives of C(F_p)/2C(F_p), infinity first."""
    pts = enumerate_points(E)
    two_c = sorted(doubling_image(E), key=CurvePoint.sort_key)
    covered: set[CurvePoint] = set()
    reps = []
    for P in pts:
        if P in covered:
            continue
        reps.append(P)
        covered.update(add(E, P, Q) for Q in two_c)
    return reps
