"""Landau levels on hyperbolic surfaces, the noncommutative-torus algebra and
its K-theory trace ranges, orbifold Chern numbers, and an independent radial
eigensolver cross-check."""

from .exact import Cyclotomic, cyclotomic_polynomial, format_scalar, parse_scalar
from .ktheory import (
    SubsetGenerator,
    even_subsets,
    higher_trace_range_generators,
    pfaffian,
    trace_range_generators,
)
from .landau import (
    BundleData,
    LandauLevel,
    LandauSpectrumReport,
    SurfaceField,
    canonical_power_bundle,
    dolbeault_eigenvalue,
    l2_index,
    landau_eigenvalue,
    max_landau_level,
    schrodinger_eigenvalue,
    spectrum_report,
    vanishing_h1,
    von_neumann_dimension,
)
from .nct import (
    NCTElement,
    SkewMatrix,
    adjoint,
    clock_shift_rep,
    cyclic_2cocycle,
    derivation,
    monomial,
    sigma,
    sigma_phase,
    star_product,
    trace,
    unit,
)
from .orbifold import (
    OrbifoldCoverData,
    orbifold_chern_number,
    orbifold_euler_characteristic,
    riemann_hurwitz_base_genus,
    smooth_chern_number,
    total_ramification_points,
)
from .oracle import (
    NumericSpectrumResult,
    RadialProblem,
    SectorMatch,
    Tridiagonal,
    analytic_level,
    continuum_edge,
    landau_levels_numeric,
    lowest_eigenvalues,
    radial_operator,
    rescale_to_unit_curvature,
)

__version__ = "0.1.0"
