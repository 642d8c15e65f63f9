"""Exact local parts of type-D Weyl group multiple Dirichlet series.

The pipeline: build the D_r root system in the fork-first labeling,
enumerate the Littelmann patterns bounded by a highest weight, decorate
each pattern's graph, discard nonstrict patterns, and sum the Gauss-sum
valued contributions into the generating function N(x; l).  All
arithmetic is exact; nothing here uses floating point.
"""

from .coeff_ring import RingElem, gauss_symbol
from .decoration import (
    Component,
    DecoratedGraph,
    classify_components,
    component_structure,
    decorate,
    is_strict,
    render_decorated,
    row_chain_pairs,
)
from .local_part import (
    LocalPart,
    local_part,
    pattern_contribution,
    sigma_component,
    sigma_entry,
)
from .oracle import (
    VerificationReport,
    check_all,
    check_dimension,
    check_example2,
    check_rank2,
    check_tokuyama,
    kubota_local,
)
from .pattern import (
    LittelmannPattern,
    PartialSums,
    count_patterns,
    critical_positions,
    enumerate_decorated,
    enumerate_patterns,
    first_bound_violation,
    is_theta_admissible,
    partial_sums,
    upper_bound,
    weight_vector,
)
from .root_data import (
    HighestWeight,
    RootSystemD,
    bourbaki_permutation,
    build_root_system,
    tokuyama_product,
    weyl_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "Component",
    "DecoratedGraph",
    "HighestWeight",
    "LittelmannPattern",
    "LocalPart",
    "PartialSums",
    "RingElem",
    "RootSystemD",
    "VerificationReport",
    "bourbaki_permutation",
    "build_root_system",
    "check_all",
    "check_dimension",
    "check_example2",
    "check_rank2",
    "check_tokuyama",
    "classify_components",
    "component_structure",
    "count_patterns",
    "critical_positions",
    "decorate",
    "enumerate_decorated",
    "enumerate_patterns",
    "first_bound_violation",
    "gauss_symbol",
    "is_strict",
    "is_theta_admissible",
    "kubota_local",
    "local_part",
    "partial_sums",
    "pattern_contribution",
    "render_decorated",
    "row_chain_pairs",
    "sigma_component",
    "sigma_entry",
    "tokuyama_product",
    "upper_bound",
    "weight_vector",
    "weyl_dimension",
]
