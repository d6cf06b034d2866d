"""Riemann-Hurwitz bookkeeping for good orbifolds X = X'/Gamma and the Chern
numbers of the Landau eigenspace bundles.

Cover data is given per Gamma-orbit of ramification points: the isotropy
order n_i of an orbit determines its point count |Gamma|/n_i, so inconsistent
per-point inputs cannot arise.  All arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class OrbifoldCoverData:
    """Cover genus g', group order N = |Gamma|, and one isotropy order per
    ramification orbit (each n_i >= 2 and dividing N)."""

    g_cover: int
    group_order: int
    orbit_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.g_cover, int) or self.g_cover < 0:
            raise ValueError("cover genus must be a non-negative integer")
        if not isinstance(self.group_order, int) or self.group_order < 1:
            raise ValueError("group order must be a positive integer")
        orders = tuple(int(n) for n in self.orbit_orders)
        for n in orders:
            if n < 2:
                raise ValueError(f"orbit order {n} must be >= 2")
            if self.group_order % n:
                raise ValueError(f"orbit order {n} does not divide |Gamma|={self.group_order}")
        object.__setattr__(self, "orbit_orders", orders)

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(
                g_cover=int(obj["g_cover"]),
                group_order=int(obj["group_order"]),
                orbit_orders=tuple(int(n) for n in obj.get("orbit_orders", [])),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"cover data JSON invalid: {exc}") from exc

    def to_json(self):
        return {
            "g_cover": self.g_cover,
            "group_order": self.group_order,
            "orbit_orders": list(self.orbit_orders),
        }


def riemann_hurwitz_base_genus(d: OrbifoldCoverData) -> int:
    """Base genus g solving 2g'-2 = N*(2g-2) + sum_i (N/n_i)*(n_i - 1).

    Raises when no non-negative integer genus exists (invalid cover data).
    """
    n = d.group_order
    ram = sum((n // order) * (order - 1) for order in d.orbit_orders)
    t = 2 * d.g_cover - 2 - ram
    if t % n:
        raise ValueError(f"invalid cover data: 2g-2 = {Fraction(t, n)} is not an integer")
    two_g_minus_2 = t // n
    if two_g_minus_2 % 2:
        raise ValueError(f"invalid cover data: 2g-2 = {two_g_minus_2} is odd")
    g = (two_g_minus_2 + 2) // 2
    if g < 0:
        raise ValueError(f"invalid cover data: base genus {g} is negative")
    return g


def total_ramification_points(d: OrbifoldCoverData) -> int:
    """n = |R|: each orbit of isotropy order n_i contributes N/n_i points."""
    return sum(d.group_order // order for order in d.orbit_orders)


def orbifold_chern_number(d: OrbifoldCoverData) -> Fraction:
    """Chern number 2g - 2 + #(R/Gamma) + (2 - n)/|Gamma| of an eigenspace
    bundle over a good orbifold; always equals 2g'/|Gamma|."""
    g = riemann_hurwitz_base_genus(d)
    n = total_ramification_points(d)
    chern = Fraction(2 * g - 2 + len(d.orbit_orders)) + Fraction(2 - n, d.group_order)
    assert chern == Fraction(2 * d.g_cover, d.group_order)
    return chern


def smooth_chern_number(g: int) -> int:
    """Smooth-surface Chern number of any Landau eigenspace bundle: 2g,
    independent of the level index."""
    if not isinstance(g, int) or g < 2:
        raise ValueError("genus must be an integer >= 2")
    return 2 * g


def orbifold_euler_characteristic(d: OrbifoldCoverData) -> Fraction:
    """chi_orb(X'/Gamma) = (2 - 2g')/|Gamma|; negative for hyperbolic orbifolds."""
    return Fraction(2 - 2 * d.g_cover, d.group_order)


def cover_report(d: OrbifoldCoverData) -> dict:
    """JSON-ready summary; 'hyperbolic' is a warning flag, not a validation."""
    chern = orbifold_chern_number(d)
    return {
        "base_genus": riemann_hurwitz_base_genus(d),
        "n_points": total_ramification_points(d),
        "n_orbits": len(d.orbit_orders),
        "chern": f"{chern.numerator}/{chern.denominator}",
        "cover_identity_check": chern == Fraction(2 * d.g_cover, d.group_order),
        "hyperbolic": orbifold_euler_characteristic(d) < 0,
    }
