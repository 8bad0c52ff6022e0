"""Two-point resistances and commute times on distance-regular networks.

The resistance between a vertex and any vertex in its m-th distance stratum
depends only on the intersection array; :func:`resistance_table` computes all
of them exactly. :mod:`drgresist.orthopoly` and :mod:`drgresist.oracle` give
two independent ways to check the result.
"""
from .core import IntersectionArray, Rational, order, validate_intersection_array
from .errors import DRGError
from .families import FamilySpec, catalog, cycle_closed_form, family_array, list_families
from .orthopoly import (
    JacobiData,
    SpectralData,
    eigenmatrix_P,
    eval_Q,
    eval_Q1,
    jacobi_coefficients,
    resistance_spectral,
    spectral_data,
    stieltjes_cf,
)
from .oracle import (
    ExplicitGraph,
    Stratification,
    build_graph,
    mc_commute_time,
    oracle_resistance,
    oracle_resistances_from,
    stratify,
    verify_distance_regular,
)
from .resistance import (
    ResistanceTable,
    commute_time,
    first_stratum_resistance,
    resistance_increment,
    resistance_table,
)

__version__ = "0.1.0"
