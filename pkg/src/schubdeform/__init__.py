"""Exact Schubert calculus on G/P with the deformed cup product."""

from .cones import cone_contains, extreme_rays, primitive
from .deform import (
    DeformedClass,
    DeformedRing,
    DimensionError,
    MovabilityCertificate,
    deformed_ring,
)
from .eigencone import (
    Inequality,
    InequalitySystem,
    Verdict,
    dual_coweight,
    evaluate,
    generate_system,
    prune_redundant,
    systems_equivalent,
)
from .golden import GOLDEN_NAMES, GoldenResult, GoldenTable, verify_all, verify_table
from .horn import (
    HornCheck,
    HornReport,
    central_characters,
    check_character,
    check_dimension,
    check_refined,
    codim_difference_identity,
    converse_search,
    coset_codim,
    dimension_tuples,
)
from .invsets import (
    CrossCheckReport,
    crosscheck_gb,
    inversion_product,
    is_inversion_set,
    kostant_decomposition,
)
from .rootsystem import CartanType, Coweight, RootSystem, Weight, build_root_system, root_system
from .schubert import (
    CACHE_ENV_VAR,
    SchubertBasis,
    chevalley_oracle,
    default_cache_dir,
    schubert_basis,
)
from .weyl import BudgetError, Parabolic, WeylElement, WeylGroup, parabolic, weyl_group

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "RootSystem",
    "Weight",
    "Coweight",
    "build_root_system",
    "root_system",
    "WeylGroup",
    "WeylElement",
    "Parabolic",
    "weyl_group",
    "parabolic",
    "BudgetError",
    "SchubertBasis",
    "schubert_basis",
    "chevalley_oracle",
    "default_cache_dir",
    "CACHE_ENV_VAR",
    "DeformedRing",
    "DeformedClass",
    "MovabilityCertificate",
    "DimensionError",
    "deformed_ring",
    "inversion_product",
    "is_inversion_set",
    "kostant_decomposition",
    "crosscheck_gb",
    "CrossCheckReport",
    "HornCheck",
    "HornReport",
    "central_characters",
    "coset_codim",
    "dimension_tuples",
    "check_character",
    "check_refined",
    "check_dimension",
    "codim_difference_identity",
    "converse_search",
    "Inequality",
    "InequalitySystem",
    "Verdict",
    "generate_system",
    "evaluate",
    "prune_redundant",
    "systems_equivalent",
    "dual_coweight",
    "primitive",
    "cone_contains",
    "extreme_rays",
    "GoldenTable",
    "GoldenResult",
    "GOLDEN_NAMES",
    "verify_table",
    "verify_all",
    "__version__",
]
