"""Arithmetic in the function field of an elliptic coordinate ring and in
Laurent polynomial rings.

Elements of K = Frac(F_p[x,y]/(y^2 - f(x))) are kept as (a(x) + b(x)*y)/d(x)
with gcd(a,b,d) = 1 and d monic, so equality is structural.  Membership in
the coordinate ring is a polynomiality test on the monic quadratic
dependence Z^2 - T*Z + N of the element over F_p[x].
"""

from __future__ import annotations

import re

from .elliptic import EllipticCurve
from .field import ExtFieldElem, FieldElem, PrimeField
from .poly import Poly, RatFun, gcd


def curve_poly(E: EllipticCurve) -> Poly:
    """f(x) = x^3 + a x + b with y^2 = f(x)."""
    return Poly(E.field, [E.b, E.a, 0, 1])


class KElem:
    """(a(x) + b(x)*y)/d(x) in the function field of y^2 = f(x)."""

    __slots__ = ("curve", "a", "b", "d")

    def __init__(self, curve: EllipticCurve, a: Poly, b: Poly, d: Poly | None = None):
        field = curve.field
        if d is None:
            d = Poly.const(field, 1)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = gcd(gcd(a, b), d)
        if not g.is_one() and not g.is_zero():
            a, b, d = a // g, b // g, d // g
        if not d.is_monic():
            inv = pow(d.lead, field.p - 2, field.p)
            a, b, d = a * inv, b * inv, d * inv
        self.curve = curve
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def from_poly(cls, curve: EllipticCurve, a) -> KElem:
        if isinstance(a, (int, FieldElem)):
            a = Poly.const(curve.field, a)
        return cls(curve, a, Poly(curve.field))

    @classmethod
    def x(cls, curve: EllipticCurve) -> KElem:
        return cls.from_poly(curve, Poly.x(curve.field))

    @classmethod
    def y(cls, curve: EllipticCurve) -> KElem:
        f = curve.field
        return cls(curve, Poly(f), Poly.const(f, 1))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def conjugate(self) -> KElem:
        """y -> -y."""
        return KElem(self.curve, self.a, -self.b, self.d)

    def _coerce(self, other):
        if isinstance(other, KElem):
            if other.curve != self.curve:
                raise ValueError("mixed curves")
            return other
        if isinstance(other, (int, FieldElem, Poly)):
            return KElem.from_poly(self.curve, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KElem(
            self.curve,
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    __radd__ = __add__

    def __neg__(self):
        return KElem(self.curve, -self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = curve_poly(self.curve)
        # (a1 + b1 y)(a2 + b2 y) with y^2 = f
        a = self.a * other.a + self.b * other.b * f
        b = self.a * other.b + self.b * other.a
        return KElem(self.curve, a, b, self.d * other.d)

    __rmul__ = __mul__

    def inverse(self) -> KElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = curve_poly(self.curve)
        # 1/((a+by)/d) = d(a-by)/(a^2 - f b^2)
        norm_num = self.a * self.a - f * self.b * self.b
        return KElem(self.curve, self.d * self.a, -(self.d * self.b), norm_num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = KElem.from_poly(self.curve, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem, Poly)):
            other = self._coerce(other)
        return (
            isinstance(other, KElem)
            and other.curve == self.curve
            and other.a == self.a
            and other.b == self.b
            and other.d == self.d
        )

    def __hash__(self):
        return hash((self.curve, self.a, self.b, self.d))

    def __bool__(self):
        return not self.is_zero()

    def evaluate(self, P) -> FieldElem:
        """Value at an affine curve point."""
        if P.is_infinity:
            raise ValueError("evaluation at infinity is not defined here")
        den = self.d(P.x)
        if not den:
            raise ZeroDivisionError("pole at the evaluation point")
        return (self.a(P.x) + self.b(P.x) * P.y) / den

    def to_json(self) -> dict:
        return {
            "a": [c for c in self.a.coeffs],
            "b": [c for c in self.b.coeffs],
            "d": [c for c in self.d.coeffs],
        }

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if not self.a.is_zero():
            parts.append(self.a.render("x"))
        if not self.b.is_zero():
            ystr = _monomial_times_y(self.b)
            if parts and not ystr.startswith("-"):
                parts.append("+" + ystr)
            else:
                parts.append(ystr)
        num = "".join(parts)
        if self.d.is_one():
            return num
        if _multi_term(num):
            num = f"({num})"
        den = self.d.render("x")
        if _multi_term(den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return self.render()


def _multi_term(s: str) -> bool:
    return any(ch in "+-" for ch in s[1:])


def _monomial_times_y(b: Poly) -> str:
    if b.is_one():
        return "y"
    if b == Poly(b.field, [-1]):
        return "-y"
    s = b.render("x")
    if "+" in s[1:] or "-" in s[1:]:
        return f"({s})*y"
    return f"{s}*y"


def kelem_from_json(curve: EllipticCurve, data: dict) -> KElem:
    f = curve.field
    return KElem(
        curve,
        Poly(f, data.get("a", [])),
        Poly(f, data.get("b", [])),
        Poly(f, data.get("d", [1])),
    )


def kelem_arith(u: KElem, v: KElem, op: str) -> KElem:
    if op == "+":
        return u + v
    if op == "-":
        return u - v
    if op == "*":
        return u * v
    if op == "/":
        if v.is_zero():
            raise ZeroDivisionError("division by zero")
        return u / v
    raise ValueError(f"unknown operation {op!r}")


def norm_trace(u: KElem) -> tuple[RatFun, RatFun]:
    """(N, T) with u a root of Z^2 - T*Z + N over F_p(x)."""
    f = curve_poly(u.curve)
    n = RatFun(u.a * u.a - f * u.b * u.b, u.d * u.d)
    t = RatFun(2 * u.a, u.d)
    return n, t


def is_integral(u: KElem) -> bool:
    """Membership in the coordinate ring: norm and trace both polynomial."""
    n, t = norm_trace(u)
    return n.is_poly() and t.is_poly()


def is_unit(u: KElem) -> bool:
    return not u.is_zero() and is_integral(u) and is_integral(u.inverse())


class LaurentElem:
    """Sum of c_k t^k with finitely many nonzero coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: dict | None = None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                c = field(c)
                if c:
                    clean[int(k)] = c
        self.field = field
        self.coeffs = clean

    @classmethod
    def t(cls, field, k: int = 1) -> LaurentElem:
        return cls(field, {k: 1})

    @classmethod
    def const(cls, field, c) -> LaurentElem:
        return cls(field, {0: c})

    @classmethod
    def from_poly(cls, f: Poly) -> LaurentElem:
        return cls(f.field, {k: c for k, c in enumerate(f.coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, LaurentElem):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, int):
            return LaurentElem.const(self.field, other)
        if isinstance(other, (FieldElem, ExtFieldElem)) and other.field == self.field:
            return LaurentElem.const(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, self.field.zero) + c
        return LaurentElem(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElem(self.field, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                out[k] = out.get(k, self.field.zero) + a * b
        return LaurentElem(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if not laurent_is_unit(other):
            raise ValueError("can only divide by a unit monomial")
        ((k, c),) = other.coeffs.items()
        inv = c.inverse()
        return LaurentElem(
            self.field, {e - k: v * inv for e, v in self.coeffs.items()}
        )

    def __pow__(self, n: int):
        if n < 0:
            if not laurent_is_unit(self):
                raise ValueError("negative power of a non-unit")
            ((k, c),) = self.coeffs.items()
            return LaurentElem(self.field, {-k: c.inverse()}) ** (-n)
        out = LaurentElem.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        return (
            isinstance(other, LaurentElem)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def to_json(self) -> dict:
        return {"terms": {str(k): c.value for k, c in sorted(self.coeffs.items())}}

    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        p = self.field.char
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            v = c.value if isinstance(c, FieldElem) else None
            if v is None:
                # extension-field coefficient, no balanced form
                body = f"{c}*{var}^{k}" if k else str(c)
                parts.append(("+" + body) if parts else body)
                continue
            signed = v if v <= p // 2 else v - p
            sign = "-" if signed < 0 else "+"
            mag = abs(signed)
            if k == 0:
                body = str(mag)
            else:
                xpart = var if k == 1 else f"{var}^{k}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return self.render()


def laurent_is_unit(u: LaurentElem) -> bool:
    """Units of F_p[t, 1/t] are the nonzero monomials."""
    return len(u.coeffs) == 1


_LAURENT_TERM_RE = re.compile(r"^([0-9]+)?(?:\*)?([a-zA-Z])?(?:\^(-?[0-9]+))?$")


def parse_laurent(field: PrimeField, text: str, var: str | None = None) -> LaurentElem:
    """Parse forms like "2*t^-3", "1+t", "-t"."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element")
    # a sign directly after '^' belongs to the exponent, not a new term
    protected = s.replace("^-", "^~")
    chunks = re.findall(r"[+-]?[^+-]+", protected)
    if "".join(chunks) != protected:
        raise ValueError(f"cannot parse {text!r}")
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        sign = 1
        body = chunk.replace("^~", "^-")
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _LAURENT_TERM_RE.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        coef_s, var_s, exp_s = m.groups()
        if var_s is None and exp_s is not None:
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        if var_s is not None and var is not None and var_s != var:
            raise ValueError(f"unexpected variable {var_s!r} in {text!r}")
        coef = int(coef_s) if coef_s is not None else 1
        k = 0 if var_s is None else (int(exp_s) if exp_s is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + sign * coef
    return LaurentElem(field, coeffs)


def laurent_from_json(field: PrimeField, data: dict) -> LaurentElem:
    return LaurentElem(field, {int(k): v for k, v in data.get("terms", {}).items()})
