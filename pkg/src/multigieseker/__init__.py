"""Exact rational computations for multi-Gieseker stability on nodal curves."""

from .census import Census, FlipEvent, FlipReport, census, enumeration_box, flip_report
from .curve import (
    DualGraph,
    RankOneSheaf,
    SheafClass,
    Subcurve,
    arithmetic_genus,
    connected_proper_subcurves,
    deg_omega_components,
    deg_on_subcurve,
    proper_subcurves,
    sheaf_chi_deg,
    subcurve_invariants,
    validate_graph,
)
from .errors import InvalidInput, UnsupportedDimension
from .polarization import (
    Polarization,
    StabilityParameter,
    combined_degrees,
    normalize,
    validate_polarization,
)
from .quiver import (
    DimensionVector,
    ThetaWeights,
    dimension_vector,
    regularity_bound,
    theta_of_subsheaf,
    theta_weights,
)
from .stability import (
    LinearPolynomial,
    StabilityVerdict,
    Status,
    check_rank_one,
    multi_hilbert,
    oracle_check_rank_one,
    slope,
)
from .walls import (
    Chamber,
    Wall,
    chi_interval,
    enumerate_chambers,
    enumerate_walls,
    is_proper_decomposition,
    locate,
)

__version__ = "0.1.0"
