"""Peisert-like graphs G*(n) on Z_n, their clique counts, and the Jacobi
sums and hypergeometric values that express them."""

from .ring import NONUNIT, UnitGroup, ValidationError, build_unit_group, dlog
from .characters import (
    DirichletCharacter,
    DomainError,
    GaussianInt,
    I,
    char_from_exponent,
    chi4,
    dual_group,
    eval_exponent,
    eval_z4,
    quadratic,
    trivial,
)
from .charsums import (
    binomial_identities,
    corr_eval,
    corr_table,
    jacobi_exact,
    jacobi_general,
    lema1_eval,
    lemsec1_eval,
    point_expansion_residual,
    qbinom,
    rho_xi,
)
from .hypergeometric import (
    ConsistencyError,
    X_TUPLES,
    f21_charsum,
    f21_scaled,
    f32_charsum,
    f32_exact,
    fn_recursive,
    group_closure,
    in_X,
    m3,
    m5,
    orbit,
    orbit_report,
    orbits,
    transform,
    transformation_identity,
)
from .graph import (
    PeisertLikeGraph,
    build_graph,
    degree,
    edge_count,
    export_edgelist,
    k3_brute,
    k3_formula,
    k3_local,
    k3_local_formula,
    k4_brute,
    k4_formula,
)

__version__ = "0.1.0"
