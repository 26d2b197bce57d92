"""Quaternion symbols over F_p(t), tame residues at places, Witt invariants
of small diagonal forms, and the sum-zero vectors realizing 2-torsion Brauer
classes of the ring of S-integers.

A Brauer class is always represented extensionally: the vector of its local
Z/2 invariants, supported on finitely many places and summing to zero.
"""

from __future__ import annotations

import itertools

from .field import is_square
from .poly import Place, Poly, RatFun, factor

# Place lives with the polynomial layer; re-exported here because residues
# are its main consumer.
__all__ = [
    "Place",
    "QuaternionSymbol",
    "BrauerVector",
    "residue",
    "brauer_class",
    "witt_invariant",
    "enumerate_2Br",
    "genus_report",
]


class QuaternionSymbol:
    """(a, b): the algebra with i^2 = a, j^2 = b, ij = -ji."""

    __slots__ = ("a", "b")

    def __init__(self, a: RatFun, b: RatFun):
        if a.is_zero() or b.is_zero():
            raise ValueError("symbol entries must be nonzero")
        if a.field != b.field:
            raise ValueError("mixed fields")
        self.a = a
        self.b = b

    @property
    def field(self):
        return self.a.field

    def __eq__(self, other):
        return (
            isinstance(other, QuaternionSymbol)
            and other.a == self.a
            and other.b == self.b
        )

    def __repr__(self):
        return f"({self.a},{self.b})"


def _place_key(v: Place):
    if v.is_infinite:
        return (1, 0, ())
    return (0, v.pi.deg, v.pi.coeffs)


class BrauerVector:
    """Finitely supported map Place -> Z/2 with zero sum."""

    __slots__ = ("field", "support")

    def __init__(self, field, support=()):
        sup = frozenset(support)
        if len(sup) % 2 != 0:
            raise ValueError("local invariants must sum to zero")
        self.field = field
        self.support = sup

    def __getitem__(self, v: Place) -> int:
        return 1 if v in self.support else 0

    def is_zero(self) -> bool:
        return not self.support

    def places(self) -> list[Place]:
        return sorted(self.support, key=_place_key)

    def __add__(self, other: BrauerVector) -> BrauerVector:
        if other.field != self.field:
            raise ValueError("mixed fields")
        return BrauerVector(self.field, self.support ^ other.support)

    def supported_on(self, S) -> bool:
        return self.support <= set(S)

    def __eq__(self, other):
        return (
            isinstance(other, BrauerVector)
            and other.field == self.field
            and other.support == self.support
        )

    def __hash__(self):
        return hash((self.field, self.support))

    def to_json(self, S=None) -> dict:
        listed = sorted(set(S) | self.support, key=_place_key) if S else self.places()
        return {v.render(): self[v] for v in listed}

    def __repr__(self):
        if not self.support:
            return "{}"
        return "{" + ", ".join(f"{v}:1" for v in self.places()) + "}"


def residue(s: QuaternionSymbol, v: Place) -> int:
    """Tame residue of (a,b) at v: 1 iff the local unit
    (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} is a non-square in the residue field."""
    va = v.valuation(s.a)
    vb = v.valuation(s.b)
    sign = -1 if (va * vb) % 2 else 1
    u = RatFun.const(s.field, sign) * s.a**vb / s.b**va
    r = v.reduce_unit(u)
    return 0 if is_square(r) else 1


def brauer_class(s: QuaternionSymbol, max_deg: int = 6) -> BrauerVector:
    """Residues of s at every place dividing its entries, plus infinity.

    The tame symbol is a unit (so a square test of 1) wherever both entries
    are units, hence the support search is a factorization.  Reciprocity is
    asserted before returning.
    """
    places: set[Place] = {Place.infinite(s.field)}
    for part in (s.a.num, s.a.den, s.b.num, s.b.den):
        if part.deg >= 1:
            for pi in factor(part, max_deg):
                places.add(Place.finite(pi))
    support = {v for v in places if residue(s, v) == 1}
    if len(support) % 2 != 0:
        raise RuntimeError(f"reciprocity failed for {s}")
    return BrauerVector(s.field, support)


def witt_invariant(diag) -> QuaternionSymbol:
    """Witt invariant of a regular diagonal form of rank 2 or 3.

    Rank 2 <a,b>: the full Clifford algebra, symbol (a, b).  Rank 3 <a,b,c>:
    the even Clifford algebra on the generator pair (e1e2, e2e3), which
    square to -ab and -bc and anticommute, giving the symbol (-ab, -bc).
    """
    entries = list(diag)
    if any(not isinstance(e, RatFun) for e in entries):
        raise ValueError("diagonal entries must be rational functions")
    if any(e.is_zero() for e in entries):
        raise ValueError("diagonal form must be regular (no zero entries)")
    if len(entries) == 2:
        a, b = entries
        return QuaternionSymbol(a, b)
    if len(entries) == 3:
        a, b, c = entries
        return QuaternionSymbol(-(a * b), -(b * c))
    raise ValueError("Witt invariant implemented for ranks 2 and 3 only")


def enumerate_2Br(S) -> list[BrauerVector]:
    """All sum-zero Z/2 vectors supported on S; cardinality 2^(|S|-1)."""
    places = sorted(set(S), key=_place_key)
    if not places:
        raise ValueError("S must be nonempty")
    field = places[0].field
    if any(v.field != field for v in places):
        raise ValueError("mixed fields in S")
    out = []
    for size in range(0, len(places) + 1, 2):
        for sub in itertools.combinations(places, size):
            out.append(BrauerVector(field, sub))
    return out


def genus_report(S, rank: int, pic_order: int, pic_mod2: int | None = None,
                 isotropic: bool = False) -> dict:
    """Counting consequences for regular rank-n forms over O_S.

    Genus count is 2^(|S|-1) always.  Per-genus class counts equal |Pic/2|
    once the form is isotropic, which is automatic from rank 5 up; pic_mod2
    must be supplied in that regime because pic_order alone does not pin the
    2-quotient.  The Hasse principle holds exactly when |Pic| is odd.
    """
    if rank < 3:
        raise ValueError("genus counting needs rank >= 3")
    places = sorted(set(S), key=_place_key)
    if not places:
        raise ValueError("S must be nonempty")
    genera = 2 ** (len(places) - 1)
    sized = rank >= 5 or isotropic
    report = {
        "places": [v.render() for v in places],
        "rank": rank,
        "genera": genera,
        "hasse_principle": pic_order % 2 == 1,
    }
    if sized:
        if pic_mod2 is None:
            raise ValueError("per-genus counts need the order of Pic/2")
        report["classes_per_genus"] = pic_mod2
        report["total_classes"] = pic_mod2 * genera
    return report
