"""Picard groups of the supported rings.

The elliptic case is computed through the point group: P -> m_P identifies
C(F_p) with the ideal class group of the coordinate ring.  The Laurent ring
is a PID, so its group is trivial.  The principality oracle is only ever a
spot-check on top of this model.
"""

from __future__ import annotations

from .elliptic import EllipticCurve, cosets_mod_2, enumerate_points, group_structure
from .ideals import FracIdeal, maximal_ideal


class PicGroup:
    __slots__ = ("base", "curve", "order", "invariant_factors")

    def __init__(self, base: str, curve, order: int, invariant_factors: tuple[int, ...]):
        self.base = base
        self.curve = curve
        self.order = order
        self.invariant_factors = invariant_factors

    def elements(self):
        """Group elements: curve points for the elliptic case."""
        if self.base == "elliptic":
            return enumerate_points(self.curve)
        return [None]

    def phi(self, P) -> FracIdeal:
        """The class of P as a fractional ideal."""
        if self.base != "elliptic":
            raise ValueError("phi is defined for the elliptic case only")
        return maximal_ideal(P)

    def mod2_representatives(self):
        if self.base == "elliptic":
            return cosets_mod_2(self.curve)
        return [None]

    def __repr__(self):
        n1, n2 = (self.invariant_factors + (1, 1))[:2]
        return f"Pic of order {self.order} = Z/{n1} x Z/{n2}"


def pic_group(base) -> PicGroup:
    """PicGroup of an elliptic coordinate ring (base: EllipticCurve) or of the
    Laurent ring (base: "laurent")."""
    if isinstance(base, EllipticCurve):
        n1, n2 = group_structure(base)
        return PicGroup("elliptic", base, n1 * n2, (n1, n2))
    if base == "laurent":
        return PicGroup("laurent", None, 1, (1, 1))
    raise ValueError(f"unsupported base {base!r}")


def pic_mod2_order(base) -> int:
    """|Pic/2| = 2^(number of even invariant factors)."""
    group = base if isinstance(base, PicGroup) else pic_group(base)
    return 2 ** sum(1 for n in group.invariant_factors if n % 2 == 0)
