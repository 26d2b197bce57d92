"""Univariate polynomials and rational functions over F_p, and places of F_p(t).

Polynomials are stored as ascending coefficient tuples with no trailing
zeros, so structural equality is semantic equality.  Rational functions are
kept reduced with a monic denominator for the same reason.
"""

from __future__ import annotations

import functools
import re

from .field import FieldElem, PrimeField


class Poly:
    """A polynomial over F_p, coefficients ascending by degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.field != field:
                    raise ValueError("coefficient from a different field")
                vals.append(c.value)
            else:
                vals.append(int(c) % field.p)
        while vals and vals[-1] == 0:
            vals.pop()
        self.field = field
        self.coeffs = tuple(vals)

    @classmethod
    def const(cls, field: PrimeField, c) -> Poly:
        return cls(field, [c])

    @classmethod
    def x(cls, field: PrimeField) -> Poly:
        return cls(field, [0, 1])

    @property
    def deg(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, FieldElem)):
            return Poly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.field.p
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

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
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        inv_lead = pow(other.lead, p - 2, p)
        rem = list(self.coeffs)
        db = other.deg
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                q = (c * inv_lead) % p
                quot[k - db] = q
                for j, b in enumerate(other.coeffs):
                    rem[k - db + j] = (rem[k - db + j] - q * b) % p
        return Poly(self.field, quot), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = pow(self.lead, self.field.p - 2, self.field.p)
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __call__(self, x) -> FieldElem:
        v = x.value if isinstance(x, FieldElem) else int(x) % self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.field.p
        return FieldElem(self.field, acc)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self == Poly(self.field, [other])
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def render(self, var: str = "t") -> str:
        """Human form with balanced coefficients, e.g. "2*t^2+1" or "-t"."""
        if self.is_zero():
            return "0"
        p = self.field.p
        parts = []
        for d in range(self.deg, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            signed = c if c <= p // 2 else c - p
            sign = "-" if signed < 0 else "+"
            mag = abs(signed)
            if d == 0:
                body = str(mag)
            else:
                xpart = var if d == 1 else f"{var}^{d}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return self.render()


_TERM_RE = re.compile(r"^([0-9]+)?(?:\*)?([a-zA-Z])?(?:\^([0-9]+))?$")


def parse_poly(field: PrimeField, text: str, var: str | None = None) -> Poly:
    """Parse a human-form polynomial such as "2*t^2+1", "-t" or "4"."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        sign = 1
        body = chunk
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        coef_s, var_s, exp_s = m.groups()
        if var_s is None and exp_s is not None:
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        if var_s is not None and var is not None and var_s != var:
            raise ValueError(f"unexpected variable {var_s!r} in {text!r}")
        coef = int(coef_s) if coef_s is not None else 1
        d = 0 if var_s is None else (int(exp_s) if exp_s is not None else 1)
        coeffs[d] = coeffs.get(d, 0) + sign * coef
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return Poly(field, out)


class RatFun:
    """A rational function num/den over F_p, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(num.field, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = gcd(num, den)
        if not g.is_one():
            num = num // g
            den = den // g
        if not den.is_monic():
            p = num.field.p
            inv = pow(den.lead, p - 2, p)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def const(cls, field: PrimeField, c) -> RatFun:
        return cls(Poly.const(field, c))

    @property
    def field(self) -> PrimeField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def _coerce(self, other):
        if isinstance(other, RatFun):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, (int, FieldElem)):
            return RatFun(Poly.const(self.field, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

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
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return (RatFun.const(self.field, 1) / self) ** (-n)
        return RatFun(self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem, Poly)):
            other = self._coerce(other)
        return (
            isinstance(other, RatFun)
            and other.num == self.num
            and other.den == self.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def render(self, var: str = "t") -> str:
        top = self.num.render(var)
        if self.den.is_one():
            return top
        bot = self.den.render(var)
        # parenthesize only multi-term operands
        if any(ch in "+-" for ch in top[1:]):
            top = f"({top})"
        if any(ch in "+-" for ch in bot[1:]):
            bot = f"({bot})"
        return f"{top}/{bot}"

    def __repr__(self):
        return self.render()


def parse_ratfun(field: PrimeField, text: str, var: str | None = None) -> RatFun:
    """Parse "num", "num/den", or "(num)/(den)" in human polynomial form."""
    s = text.replace(" ", "")
    if s.count("/") > 1:
        raise ValueError(f"cannot parse rational function {text!r}")
    if "/" in s:
        top, bot = s.split("/")
    else:
        top, bot = s, None

    def strip_parens(u: str) -> str:
        if u.startswith("(") and u.endswith(")"):
            return u[1:-1]
        return u

    num = parse_poly(field, strip_parens(top), var)
    if bot is None:
        return RatFun(num)
    return RatFun(num, parse_poly(field, strip_parens(bot), var))


def gcd(f: Poly, g: Poly) -> Poly:
    if f.field != g.field:
        raise ValueError("mixed fields")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns (d, u, v) with d = uf + vg and d monic."""
    if f.field != g.field:
        raise ValueError("mixed fields")
    if f.is_zero() and g.is_zero():
        raise ValueError("xgcd of two zero polynomials")
    field = f.field
    r0, s0, t0 = f, Poly.const(field, 1), Poly(field)
    r1, s1, t1 = g, Poly(field), Poly.const(field, 1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, s0, t0, r1, s1, t1 = r1, s1, t1, r, s0 - q * s1, t0 - q * t1
    if r0.lead != 1:
        inv = pow(r0.lead, field.p - 2, field.p)
        r0, s0, t0 = r0 * inv, s0 * inv, t0 * inv
    return r0, s0, t0


def enumerate_monic(field: PrimeField, deg: int):
    """All monic polynomials of exactly the given degree."""
    p = field.p
    for k in range(p**deg):
        coeffs = []
        n = k
        for _ in range(deg):
            coeffs.append(n % p)
            n //= p
        coeffs.append(1)
        yield Poly(field, coeffs)


def is_irreducible(f: Poly) -> bool:
    """Trial division against all monic polynomials of degree <= deg f / 2."""
    if f.deg < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    for d in range(1, f.deg // 2 + 1):
        for g in enumerate_monic(f.field, d):
            if (f % g).is_zero():
                return False
    return True


@functools.cache
def _irreducibles(p: int, max_deg: int) -> tuple[Poly, ...]:
    field = PrimeField(p)
    out = []
    for d in range(1, max_deg + 1):
        for g in enumerate_monic(field, d):
            # sieve by the smaller irreducibles already found
            if not any((g % h).is_zero() for h in out if 2 * h.deg <= d):
                out.append(g)
    return tuple(out)


def irreducibles(field: PrimeField, max_deg: int) -> tuple[Poly, ...]:
    """All monic irreducibles of degree <= max_deg, by degree then lex on coefficients."""
    return _irreducibles(field.p, max_deg)


class Place:
    """A place of F_p(t): a monic irreducible polynomial, or the one at infinity."""

    __slots__ = ("field", "pi")

    def __init__(self, field: PrimeField, pi: Poly | None):
        if pi is not None:
            if pi.field != field:
                raise ValueError("mixed fields")
            if not pi.is_monic() or pi.deg < 1:
                raise ValueError("finite place needs a monic polynomial of degree >= 1")
        self.field = field
        self.pi = pi

    @classmethod
    def finite(cls, pi: Poly) -> Place:
        return cls(pi.field, pi)

    @classmethod
    def infinite(cls, field: PrimeField) -> Place:
        return cls(field, None)

    @property
    def is_infinite(self) -> bool:
        return self.pi is None

    @property
    def deg(self) -> int:
        """Degree of the residue field over F_p."""
        return 1 if self.pi is None else self.pi.deg

    def valuation(self, r: RatFun) -> int:
        """The normalized valuation v(r); raises on r = 0."""
        if r.is_zero():
            raise ValueError("valuation of zero")
        if self.pi is None:
            return r.den.deg - r.num.deg
        v = 0
        num = r.num
        while True:
            q, rem = divmod(num, self.pi)
            if not rem.is_zero():
                break
            num, v = q, v + 1
        den = r.den
        while True:
            q, rem = divmod(den, self.pi)
            if not rem.is_zero():
                break
            den, v = q, v - 1
        return v

    def unit_part(self, r: RatFun) -> RatFun:
        """r divided by the local uniformizer to the power v(r)."""
        v = self.valuation(r)
        if self.pi is None:
            t = RatFun(Poly.x(self.field))
            return r * t**v
        return r / RatFun(self.pi) ** v

    def reduce_unit(self, r: RatFun):
        """Image of a local unit in the residue field.

        Finite places of degree 1 and the infinite place land in F_p; a finite
        place of degree d > 1 lands in F_p[T]/(pi) with T the class of t.
        """
        if self.valuation(r) != 0:
            raise ValueError("not a local unit at this place")
        if self.pi is None:
            # value at infinity: ratio of leading coefficients (degrees agree)
            num, den = r.num, r.den
            lead = FieldElem(self.field, num.lead)
            return lead / FieldElem(self.field, den.lead)
        if self.pi.deg == 1:
            root = FieldElem(self.field, -self.pi.coeffs[0])
            return r.num(root) / r.den(root)
        from .field import ExtField

        ext = ExtField(self.field, self.pi.coeffs)
        num = ext(list((r.num % self.pi).coeffs))
        den = ext(list((r.den % self.pi).coeffs))
        return num / den

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and other.field == self.field
            and other.pi == self.pi
        )

    def __hash__(self):
        return hash((self.field.p, self.pi))

    def render(self, var: str = "t") -> str:
        return "inf" if self.pi is None else self.pi.render(var)

    def __repr__(self):
        return self.render()


def parse_place(field: PrimeField, text: str, var: str | None = None) -> Place:
    s = text.strip()
    if s in ("inf", "infty", "oo"):
        return Place.infinite(field)
    pi = parse_poly(field, s, var).monic()
    if pi.deg < 1 or not is_irreducible(pi):
        raise ValueError(f"{text!r} is not an irreducible polynomial")
    return Place.finite(pi)


def enumerate_places(p: int, max_deg: int) -> list[Place]:
    """All places of F_p(t) of degree <= max_deg, finite ones first, then infinity."""
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    field = PrimeField(p)
    out = [Place.finite(pi) for pi in irreducibles(field, max_deg)]
    out.append(Place.infinite(field))
    return out


def factor(f: Poly, bound: int = 6) -> dict[Poly, int]:
    """Factor into monic irreducibles of degree <= bound by trial division.

    Raises if a factor of larger degree remains, so callers never see a
    silently partial factorization.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rem = f.monic()
    out: dict[Poly, int] = {}
    for pi in irreducibles(f.field, min(bound, max(f.deg, 1))):
        while True:
            q, r = divmod(rem, pi)
            if not r.is_zero():
                break
            rem = q
            out[pi] = out.get(pi, 0) + 1
        if rem.deg == 0:
            break
    if rem.deg > 0:
        raise ValueError(f"irreducible factor of degree > {bound} remains")
    return out
