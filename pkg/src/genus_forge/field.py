"""Exact arithmetic in prime fields F_p (p odd) and extensions F_p[X]/(pi)."""

from __future__ import annotations

DEFAULT_PRIME_BOUND = 997


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field F_p for an odd prime p."""

    def __init__(self, p: int, bound: int = DEFAULT_PRIME_BOUND):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if p > bound:
            raise ValueError(f"prime {p} exceeds the supported bound {bound}")
        self.p = p

    @property
    def order(self) -> int:
        return self.p

    @property
    def char(self) -> int:
        return self.p

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        return FieldElem(self, int(value))

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    def elements(self):
        for v in range(self.p):
            yield FieldElem(self, v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class FieldElem:
    """A residue in F_p."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return FieldElem(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.field, -self.value)

    def inverse(self) -> FieldElem:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElem(self.field, pow(self.value, self.field.p - 2, self.field.p))

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
        return FieldElem(self.field, pow(self.value, n, self.field.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.p
        return (
            isinstance(other, FieldElem)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)


class ExtField:
    """F_p[X]/(pi) for monic irreducible pi, given by its ascending coefficients.

    Irreducibility of pi is the caller's responsibility above degree 3; up to
    degree 3 it is equivalent to having no root, which is checked here.
    """

    def __init__(self, base: PrimeField, modulus: tuple[int, ...]):
        mod = tuple(c % base.p for c in modulus)
        if len(mod) < 3 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 2")
        self.base = base
        self.modulus = mod
        self.deg = len(mod) - 1
        if self.deg <= 3:
            for r in range(base.p):
                if self._eval_mod(r) == 0:
                    raise ValueError("modulus has a root, not irreducible")
        self._squares = None

    def _eval_mod(self, r: int) -> int:
        acc = 0
        for c in reversed(self.modulus):
            acc = (acc * r + c) % self.base.p
        return acc

    @property
    def order(self) -> int:
        return self.base.p**self.deg

    @property
    def char(self) -> int:
        return self.base.p

    def __call__(self, coeffs) -> ExtFieldElem:
        if isinstance(coeffs, ExtFieldElem):
            if coeffs.field != self:
                raise ValueError("element from a different field")
            return coeffs
        if isinstance(coeffs, (int, FieldElem)):
            coeffs = [int(coeffs) if isinstance(coeffs, int) else coeffs.value]
        vals = [int(c) % self.base.p for c in coeffs]
        if len(vals) > self.deg:
            raise ValueError("too many coefficients")
        vals += [0] * (self.deg - len(vals))
        return ExtFieldElem(self, tuple(vals))

    @property
    def zero(self) -> ExtFieldElem:
        return self(0)

    @property
    def one(self) -> ExtFieldElem:
        return self(1)

    @property
    def gen(self) -> ExtFieldElem:
        """The class of X."""
        return self([0, 1])

    def elements(self):
        p, d = self.base.p, self.deg
        for k in range(p**d):
            coeffs = []
            for _ in range(d):
                coeffs.append(k % p)
                k //= p
            yield ExtFieldElem(self, tuple(coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.base.p, self.modulus))

    def __repr__(self):
        return f"F_{self.base.p}^{self.deg}"


class ExtFieldElem:
    """An element of F_p[X]/(pi), stored as a coefficient tuple of length deg(pi)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ExtFieldElem):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, FieldElem)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.base.p
        return ExtFieldElem(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.base.p
        return ExtFieldElem(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        p = self.field.base.p
        return ExtFieldElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.base.p
        mod = self.field.modulus
        d = self.field.deg
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        # reduce X^k for k >= d using the monic modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(d):
                    prod[k - d + j] = (prod[k - d + j] - c * mod[j]) % p
        return ExtFieldElem(self.field, tuple(prod[:d]))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> ExtFieldElem:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.order - 2)

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

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self == self.field(other)
        return (
            isinstance(other, ExtFieldElem)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.base.p, self.field.modulus, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def is_square(a) -> bool:
    """Quadratic-residue test: Euler criterion above 64 elements, exhaustive below."""
    field = a.field
    q = field.order
    if not a:
        return True
    if q <= 64:
        if isinstance(field, ExtField):
            if field._squares is None:
                field._squares = {x * x for x in field.elements()}
            return a in field._squares
        return any((v * v - a.value) % field.p == 0 for v in range(field.p))
    return a ** ((q - 1) // 2) == field.one


def GF(p: int) -> PrimeField:
    return PrimeField(p)
