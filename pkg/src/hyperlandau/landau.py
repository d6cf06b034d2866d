"""Closed-form spectral layer for the magnetic Laplacian on a hyperbolic
surface of genus g >= 2 (curvature normalised so the Gauss curvature is
2 - 2g and the volume is 2*pi).

For field strength theta > 0 the low-lying spectrum consists of the isolated
Landau levels

    mu_q = (2q+1)*theta - q(q+1)*(2g-2),   q = 0..m-1,

where m is the largest integer with theta - m*(2g-2) > 0.  Each level carries
a von Neumann dimension (2q+1)*(1-g) + theta, which coincides with the L2
Riemann-Roch index of the q-th negative power of the canonical bundle
twisted by theta.  All arithmetic is exact when theta is rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational


def _coerce_scalar(x):
    if isinstance(x, bool):
        raise ValueError("theta must be a number")
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        return x
    raise ValueError(f"not a scalar: {x!r}")


@dataclass(frozen=True)
class SurfaceField:
    """Genus g >= 2 plus the constant magnetic field strength theta."""

    g: int
    theta: Fraction | float

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 2:
            raise ValueError("genus must be an integer >= 2 (hyperbolic surface)")
        object.__setattr__(self, "theta", _coerce_scalar(self.theta))

    @property
    def curvature_step(self):
        """deg K = 2g - 2, the eigenvalue spacing unit."""
        return 2 * self.g - 2


@dataclass(frozen=True)
class BundleData:
    """Degree/rank data entering the L2 Riemann-Roch index."""

    deg: Fraction | float
    rank: int = 1

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError("bundle rank must be a positive integer")
        object.__setattr__(self, "deg", _coerce_scalar(self.deg))


@dataclass(frozen=True)
class LandauLevel:
    q: int
    mu: Fraction | float
    dolbeault: Fraction | float
    dim_tau: Fraction | float


@dataclass(frozen=True)
class LandauSpectrumReport:
    surface: SurfaceField
    m: int
    levels: tuple[LandauLevel, ...]
    boundary_mu: Fraction | float
    boundary_certified: bool = field(default=False)


def _require_spectral(s: SurfaceField):
    if s.theta <= 0:
        raise ValueError("theta must be positive for spectrum operations")


def max_landau_level(s: SurfaceField) -> int:
    """Largest integer m with theta - m*(2g-2) > 0 (strict); m = 0 means no
    isolated eigenvalue is certified."""
    _require_spectral(s)
    return math.ceil(s.theta / s.curvature_step) - 1


def landau_eigenvalue(s: SurfaceField, q: int):
    """mu_q = (2q+1)*theta - q(q+1)*(2g-2) for 0 <= q <= m."""
    _require_spectral(s)
    m = max_landau_level(s)
    if not 0 <= q <= m:
        raise ValueError(f"level index q={q} outside 0..{m}")
    return (2 * q + 1) * s.theta - q * (q + 1) * s.curvature_step


def dolbeault_eigenvalue(s: SurfaceField, q: int):
    """(mu_q - theta)/2, the eigenvalue of the (0,1)-Laplacian."""
    mu = landau_eigenvalue(s, q)
    return (mu - s.theta) / 2


def von_neumann_dimension(s: SurfaceField, q: int):
    """dim_tau of the q-th eigenspace: (2q+1)*(1-g) + theta, positive for q < m."""
    _require_spectral(s)
    m = max_landau_level(s)
    if not 0 <= q < m:
        raise ValueError(f"level index q={q} outside 0..{m - 1} (m={m})")
    dim = (2 * q + 1) * (1 - s.g) + s.theta
    if dim <= 0:
        raise ValueError("non-positive dimension: precondition violated")
    return dim


def l2_index(s: SurfaceField, e: BundleData):
    """L2 Riemann-Roch index deg(E) + rank(E)*theta + (1-g)*rank(E).

    Valid for any real theta; for E = K^{-q} it reproduces the von Neumann
    dimension of the q-th Landau level.
    """
    return e.deg + e.rank * s.theta + (1 - s.g) * e.rank


def canonical_power_bundle(s: SurfaceField, q: int) -> BundleData:
    """K^{-q}: the line bundle of degree -q*(2g-2)."""
    return BundleData(deg=-q * s.curvature_step, rank=1)


def vanishing_h1(s: SurfaceField, q: int) -> bool:
    """True iff (q+1)*(2g-2) - theta < 0, the first-cohomology vanishing gate."""
    if q < 0:
        raise ValueError("level index must be non-negative")
    return (q + 1) * s.curvature_step - s.theta < 0


def spectrum_report(s: SurfaceField) -> LandauSpectrumReport:
    """All certified levels q = 0..m-1 plus the boundary value mu_m.

    mu_m bounds the certified interval [0, mu_m); it is constructed as an
    eigenvalue but its isolation is not, hence boundary_certified=False.
    """
    m = max_landau_level(s)
    levels = []
    for q in range(m):
        levels.append(
            LandauLevel(
                q=q,
                mu=landau_eigenvalue(s, q),
                dolbeault=dolbeault_eigenvalue(s, q),
                dim_tau=von_neumann_dimension(s, q),
            )
        )
    boundary = landau_eigenvalue(s, m)
    return LandauSpectrumReport(surface=s, m=m, levels=tuple(levels), boundary_mu=boundary)


def schrodinger_eigenvalue(s: SurfaceField, q: int, scale=1):
    """Physical Hamiltonian level scale*(mu_q + R/6) with scalar curvature
    R = 2*(2-2g) (twice the Gauss curvature)."""
    scale = _coerce_scalar(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    mu = landau_eigenvalue(s, q)
    r_over_6 = Fraction(2 * (2 - 2 * s.g), 6)
    return scale * (mu + r_over_6)


def _scalar_json(x):
    if isinstance(x, Rational):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else str(f)
    return float(x)


def _scalar_csv(x):
    if isinstance(x, Rational):
        return str(Fraction(x))
    return repr(float(x))


def report_to_json(report: LandauSpectrumReport) -> dict:
    return {
        "g": report.surface.g,
        "theta": _scalar_json(report.surface.theta),
        "m": report.m,
        "levels": [
            {
                "q": lv.q,
                "mu": _scalar_json(lv.mu),
                "dolbeault": _scalar_json(lv.dolbeault),
                "dim_tau": _scalar_json(lv.dim_tau),
            }
            for lv in report.levels
        ],
        "boundary_mu": _scalar_json(report.boundary_mu),
        "boundary_certified": report.boundary_certified,
    }


def report_to_csv(report: LandauSpectrumReport) -> str:
    lines = ["q,mu,dolbeault,dim_tau"]
    for lv in report.levels:
        lines.append(
            f"{lv.q},{_scalar_csv(lv.mu)},{_scalar_csv(lv.dolbeault)},{_scalar_csv(lv.dim_tau)}"
        )
    return "\n".join(lines) + "\n"
