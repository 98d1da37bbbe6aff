"""The five worked examples, with their expected verdicts and structure."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bimodal_check import difference_profile, is_bimodal_by_definition, is_bimodal_by_structure
from .classify import classify
from .collection import SetCollection
from .group_core import GroupSpec


@dataclass(frozen=True)
class GoldenExample:
    name: str
    description: str
    collection: SetCollection
    expected: dict
    # set index -> {delta: N} entries the profile must reproduce
    expected_profile: dict = field(default_factory=dict)


def _z10() -> GoldenExample:
    G = GroupSpec.of(10)
    C = SetCollection.from_lists(G, [[1, 6], [3, 8], [4, 9]])
    row = {(d,): 2 for d in (1, 3, 6, 8)} | {(d,): 0 for d in (2, 4, 5, 7, 9)}
    return GoldenExample(
        "z10_cosets",
        "three cosets of {0,5} in Z_10",
        C,
        {"bimodal": True, "case": "r0", "r": 0, "kernel": None, "sum_group_order": 2},
        {2: row},
    )


def _z3xz3() -> GoldenExample:
    G = GroupSpec.of(3, 3)
    C = SetCollection.from_lists(
        G, [[(1, 1), (2, 2)], [(0, 1), (0, 2)], [(1, 2), (2, 1)], [(1, 0), (2, 0)]]
    )
    return GoldenExample(
        "z3xz3_partition",
        "nonzero parts of the group partition of Z_3 x Z_3 into its four lines",
        C,
        {"bimodal": True, "case": "r_ge2", "r": 4, "kernel": [(0, 0)], "sum_group_order": 9},
    )


def _z12() -> GoldenExample:
    G = GroupSpec.of(12)
    C = SetCollection.from_lists(G, [[4, 8], [3, 6, 9], [1], [2], [5], [7], [10], [11]])
    return GoldenExample(
        "z12_mixed",
        "mixed partition of Z_12 from {0,4,8} and {0,3,6,9}",
        C,
        {"bimodal": True, "case": "r_ge2", "r": 2, "kernel": [(0,)], "sum_group_order": 12},
    )


def _z2cubed() -> GoldenExample:
    G = GroupSpec.of(2, 2, 2)
    C = SetCollection.from_lists(
        G,
        [
            [(0, 0, 0), (0, 0, 1)],
            [(0, 1, 0), (1, 1, 0)],
            [(1, 0, 0), (1, 1, 1)],
            [(0, 1, 1), (1, 0, 1)],
        ],
    )
    return GoldenExample(
        "z2cubed_subdivision",
        "Z_2^3 subdivided into cosets of four different order-2 subgroups",
        C,
        {"bimodal": True, "case": "r0", "r": 0, "kernel": None, "sum_group_order": 8},
    )


def _z36() -> GoldenExample:
    G = GroupSpec.of(36)
    C = SetCollection.from_lists(
        G,
        [[12, 15, 30, 33], [1, 19], [4, 22], [7, 25], [10, 28], [13], [16], [31], [34]],
    )
    return GoldenExample(
        "z36_r1",
        "nine sets in Z_36 with exactly one non-full set",
        C,
        {"bimodal": True, "case": "r1", "r": 1, "kernel": [(0,), (18,)], "sum_group_order": 12},
    )


GOLDEN = {ex.name: ex for ex in (_z10(), _z3xz3(), _z12(), _z2cubed(), _z36())}


def replay(ex: GoldenExample) -> list[str]:
    """Re-derive everything about ``ex``; returns a list of mismatches (empty on success)."""
    C, exp = ex.collection, ex.expected
    problems = []
    for check in (is_bimodal_by_definition, is_bimodal_by_structure):
        v = check(C)
        if v.bimodal != exp["bimodal"]:
            problems.append(f"{check.__name__} gave {v.bimodal}")
    if ex.expected_profile:
        P = difference_profile(C)
        for i, row in ex.expected_profile.items():
            for d, n in row.items():
                if P.count(i, d) != n:
                    problems.append(f"N_{i}({d}) = {P.count(i, d)}, expected {n}")
    if exp["bimodal"]:
        R = classify(C)
        got = {
            "case": R.case,
            "r": R.r,
            "kernel": None if R.kernel is None else list(R.kernel),
            "sum_group_order": R.sum_group.order,
        }
        for k, v in got.items():
            if exp[k] != v:
                problems.append(f"{k} = {v}, expected {exp[k]}")
    return problems
