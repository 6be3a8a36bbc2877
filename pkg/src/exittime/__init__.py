"""Expected exit times of planar Brownian motion from conformal images of the disc.

Four independent routes to the same quantity: the Taylor-coefficient
series (1/2) sum |a_n|^2 r^{2n}, closed forms from the domain catalog,
Green's-function quadrature, and Monte Carlo simulation.
"""

from .catalog import (
    DIVERGENT,
    DomainSpec,
    annulus_bproper,
    build_domain,
    cardioid,
    catenary,
    default_catalog,
    disc,
    DOMAIN_NAMES,
    half_plane,
    identity_disc,
    koebe,
    mgon,
    strip,
    wedge_inner,
    wedge_outer,
)
from .errors import (
    BasePointOutside,
    DegenerateMap,
    DivergentSeries,
    DomainError,
    ExitTimeError,
    IneligibleDomain,
    MissingDerivative,
    StartOutsideDomain,
    ToleranceUnreachable,
    UnsupportedParameter,
)
from .mc import MCConfig, MCEstimate, estimate_exit_time, estimate_wedge
from .quadrature import green_exit_time
from .series import (
    ExitTimeResult,
    exit_time_series,
    hardy_h2_norm_sq,
    parseval_discrepancy,
    suggest_parseval_terms,
)
from .special import (
    HyperGeomParams,
    beta,
    gamma,
    gauss_2f1_at_1,
    mgon_exit_time,
    pfq_at_1,
    pochhammer,
    wedge_bounds,
)
from .streams import (
    ArrayStream,
    BoundedByLinear,
    CallableStream,
    CoefficientStream,
    FiniteSupport,
    Geometric,
    Unknown,
    exp_compose,
    normalize_schlicht,
)

__version__ = "0.1.0"

__all__ = [
    "ArrayStream",
    "BasePointOutside",
    "BoundedByLinear",
    "CallableStream",
    "CoefficientStream",
    "DIVERGENT",
    "DOMAIN_NAMES",
    "DegenerateMap",
    "DivergentSeries",
    "DomainError",
    "DomainSpec",
    "ExitTimeError",
    "ExitTimeResult",
    "FiniteSupport",
    "Geometric",
    "HyperGeomParams",
    "IneligibleDomain",
    "MCConfig",
    "MCEstimate",
    "MissingDerivative",
    "StartOutsideDomain",
    "ToleranceUnreachable",
    "Unknown",
    "UnsupportedParameter",
    "annulus_bproper",
    "beta",
    "build_domain",
    "cardioid",
    "catenary",
    "default_catalog",
    "disc",
    "estimate_exit_time",
    "estimate_wedge",
    "exit_time_series",
    "exp_compose",
    "gamma",
    "gauss_2f1_at_1",
    "green_exit_time",
    "half_plane",
    "hardy_h2_norm_sq",
    "identity_disc",
    "koebe",
    "mgon",
    "mgon_exit_time",
    "normalize_schlicht",
    "parseval_discrepancy",
    "pfq_at_1",
    "pochhammer",
    "strip",
    "suggest_parseval_terms",
    "wedge_bounds",
    "wedge_inner",
    "wedge_outer",
]
