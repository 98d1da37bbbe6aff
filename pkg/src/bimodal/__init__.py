"""Bimodal collections of disjoint subsets of finite abelian groups."""

from .bimodal_check import (
    DifferenceProfile,
    Verdict,
    difference_profile,
    internal_difference_group,
    is_bimodal,
    is_bimodal_by_definition,
    is_bimodal_by_structure,
)
from .classify import ClassificationReport, canonicalize, classify
from .collection import SetCollection
from .construct import (
    StarSpec,
    construct_cosets,
    construct_group_partition,
    construct_mixed_partition,
    construct_r1,
    construct_star,
    shift,
    subdivide,
)
from .enumerate_oracle import EnumerationScope, cross_validate, enumerate_bimodal
from .group_core import (
    GroupSpec,
    Subgroup,
    coset_decompose,
    subgroup_generate,
    subgroup_intersect,
    subgroup_sum,
)

__version__ = "0.1.0"
