"""Exact subgroup lattices and fuzzy-subgroup counts for the groups U_6n.

U_6n is the order-6n group generated by a and b with a^(2n) = b^3 = 1
and bab = a.  The package enumerates its subgroups from the divisor
structure of 2n, orders them by containment, counts subgroup chains by
dynamic programming, and derives from those chains the number of fuzzy
subgroups (and normal fuzzy subgroups) up to the grade-comparison
equivalence.  A brute-force oracle recomputes everything the slow way
for small n so the closed forms never go unchecked.
"""

from .chains import (
    ChainCounts,
    ChainTable,
    chain_counts,
    compute_chain_table,
    count_fuzzy_subgroups,
    count_normal_fuzzy_subgroups,
    murali_makamba_count,
)
from .group import (
    DEFAULT_ORACLE_LIMIT,
    Element,
    GroupParams,
    OracleLimitExceeded,
    all_elements,
    cayley_table,
    conjugate,
    format_element,
    identity,
    inverse,
    multiply,
    parse_element,
    power,
)
from .lattice import (
    Lattice,
    build_lattice,
    export_dot,
    export_json,
    hasse_edges,
    height,
)
from .oracle import (
    FuzzyMap,
    chain_to_representative,
    equivalent,
    equivalent_by_pairs,
    is_fuzzy_subgroup,
    is_normal_fuzzy,
    oracle_all_subgroups,
    oracle_count_chains,
    oracle_count_equivalence_classes,
    oracle_count_set_chains,
    oracle_is_normal,
    oracle_normal_subgroups,
    rank_signature,
    representative_from_sets,
)
from .subgroups import (
    Kind,
    SubgroupDescriptor,
    contains_element,
    cyclic,
    divisors,
    enumerate_normal_subgroups,
    enumerate_subgroups,
    factorize,
    format_descriptor,
    full,
    parse_descriptor,
    subgroup_elements,
    subgroup_leq,
    subgroup_order,
    twisted,
    twisted_exists,
)
from .verify import CheckResult, render_report, report_json, run_verification

__all__ = [
    "ChainCounts",
    "ChainTable",
    "CheckResult",
    "DEFAULT_ORACLE_LIMIT",
    "Element",
    "FuzzyMap",
    "GroupParams",
    "Kind",
    "Lattice",
    "OracleLimitExceeded",
    "SubgroupDescriptor",
    "all_elements",
    "build_lattice",
    "cayley_table",
    "chain_counts",
    "chain_to_representative",
    "compute_chain_table",
    "conjugate",
    "contains_element",
    "count_fuzzy_subgroups",
    "count_normal_fuzzy_subgroups",
    "cyclic",
    "divisors",
    "enumerate_normal_subgroups",
    "enumerate_subgroups",
    "equivalent",
    "equivalent_by_pairs",
    "export_dot",
    "export_json",
    "factorize",
    "format_descriptor",
    "format_element",
    "full",
    "hasse_edges",
    "height",
    "identity",
    "inverse",
    "is_fuzzy_subgroup",
    "is_normal_fuzzy",
    "multiply",
    "murali_makamba_count",
    "oracle_all_subgroups",
    "oracle_count_chains",
    "oracle_count_equivalence_classes",
    "oracle_count_set_chains",
    "oracle_is_normal",
    "oracle_normal_subgroups",
    "parse_descriptor",
    "parse_element",
    "power",
    "rank_signature",
    "render_report",
    "report_json",
    "representative_from_sets",
    "run_verification",
    "subgroup_elements",
    "subgroup_leq",
    "subgroup_order",
    "twisted",
    "twisted_exists",
]
