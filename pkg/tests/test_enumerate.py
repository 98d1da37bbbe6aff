import itertools

import pytest

import oracles
from bimodal import EnumerationScope, GroupSpec, SetCollection, enumerate_bimodal
from bimodal.classify import canonicalize, classify
from bimodal.enumerate_oracle import (
    cross_validate,
    is_shift_minimal,
    partition_count,
    partitions_of,
    restricted_growth_strings,
    shift_orbit,
)
from bimodal.errors import BudgetExceededError

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]

# Z_6, supports of size <= 4: counted by oracles.bimodal over oracles.set_partitions,
# with r from oracles.closure; both deciders agree on it (test below)
Z6_CENSUS = {(1, 0): 11, (1, 1): 45, (2, 0): 18, (3, 0): 26, (4, 0): 15}
Z6_COUNT = 115
Z6_CANDIDATES = 361


@pytest.mark.parametrize("n", range(9))
def test_rgs_counts_are_bell_numbers(n):
    rgs = list(restricted_growth_strings(n))
    assert len(rgs) == BELL[n] == partition_count(n)
    assert rgs == sorted(rgs)
    for a in rgs:
        assert all(a[j] <= 1 + max(a[:j], default=-1) for j in range(n))


def test_max_parts():
    assert partition_count(5, 2) == 16
    assert len(list(restricted_growth_strings(5, 2))) == 16
    assert all(max(a) < 2 for a in restricted_growth_strings(5, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_partitions_match_independent_enumeration(n):
    items = list(range(n))
    ours = {frozenset(frozenset(p) for p in parts) for parts in partitions_of(items)}
    assert ours == set(oracles.set_partitions(items))


def test_z5_all_singletons_survive():
    G = GroupSpec.of(5)
    scope = EnumerationScope(G, support=tuple((x,) for x in range(1, 5)))
    res = enumerate_bimodal(scope, materialize=True)
    singles = SetCollection.from_lists(G, [[1], [2], [3], [4]])
    assert singles in res.collections
    assert res.candidates == 15


def test_z10_example_is_a_survivor(z10):
    scope = EnumerationScope(z10.ambient, support=tuple(sorted(z10.support)))
    res = enumerate_bimodal(scope, materialize=True)
    assert z10 in res.collections
    assert res.count == len(res.collections)


def test_z6_census_matches_oracle():
    G = GroupSpec.of(6)
    res = enumerate_bimodal(EnumerationScope(G, max_support=4), materialize=True)
    assert res.candidates == Z6_CANDIDATES
    assert res.count == Z6_COUNT == len(res.collections)
    assert res.by_shape == Z6_CENSUS
    assert res.by_case == {"r0": 70, "r1": 45, "r_ge2": 0}
    assert sum(res.by_case.values()) == res.count == sum(res.by_shape.values())
    # recount with the oracle's own partition enumeration and decider
    n = 0
    for k in range(1, 5):
        for sup in itertools.combinations(G.elements, k):
            for p in oracles.set_partitions(sup):
                n += oracles.bimodal((6,), [sorted(b) for b in p])
    assert n == Z6_COUNT


def test_worker_count_does_not_change_results():
    scope = EnumerationScope(GroupSpec.of(6), max_support=4)
    one = enumerate_bimodal(scope, workers=1, materialize=True)
    many = enumerate_bimodal(scope, workers=3, materialize=True)
    assert one.collections == many.collections
    assert (one.count, one.by_case, one.by_shape) == (many.count, many.by_case, many.by_shape)


def test_output_order_is_canonical():
    res = enumerate_bimodal(EnumerationScope(GroupSpec.of(6), max_support=3), materialize=True)
    keys = [(len(C.support), sorted(C.support)) for C in res.collections]
    assert keys == sorted(keys)


@pytest.mark.parametrize("orders", [(6,), (2, 4)])
def test_shift_dedupe(orders):
    G = GroupSpec(orders)
    full = enumerate_bimodal(EnumerationScope(G, max_support=4))
    ded = enumerate_bimodal(EnumerationScope(G, max_support=4, dedupe="shift"), materialize=True)
    sizes = [len(shift_orbit(C)) for C in ded.collections]
    assert all(G.order % s == 0 for s in sizes)
    assert sum(sizes) == full.count
    assert len({min(shift_orbit(C)) for C in ded.collections}) == ded.count


def test_fixed_support_dedupe_uses_support_stabiliser():
    G = GroupSpec.of(6)
    scope = EnumerationScope(G, support=((0,), (3,)), dedupe="shift")
    res = enumerate_bimodal(scope, materialize=True)
    # {0},{3} and {0,3}: both are fixed by +3, so nothing is merged
    assert res.count == 2
    assert all(is_shift_minimal(scope, C) for C in res.collections)


def test_budget_refusal():
    scope = EnumerationScope(GroupSpec.of(12), max_support=12, budget=10**6)
    with pytest.raises(BudgetExceededError) as e:
        enumerate_bimodal(scope)
    assert e.value.cost == scope.cost() > 10**6
    assert EnumerationScope(GroupSpec.of(6), max_support=4).cost() == Z6_CANDIDATES


@pytest.mark.parametrize("orders", [(6,), (8,), (2, 4)])
def test_cross_validate_passes(orders):
    res = cross_validate(EnumerationScope(GroupSpec(orders), max_support=5))
    assert res.passed, res.counterexample
    assert res.candidates == EnumerationScope(GroupSpec(orders), max_support=5).cost()


def test_star_survivors_are_canonical_after_shift():
    res = enumerate_bimodal(EnumerationScope(GroupSpec.of(3, 3)), materialize=True)
    stars = 0
    for C in res.collections:
        R = classify(C)
        if R.r < 2:
            continue
        stars += 1
        Cc, _ = canonicalize(C, R)
        for i in R.reorder[: R.r]:
            H = R.per_set[i].group
            assert set(Cc.sets[i]) == H.members - R.kernel_group.members
    assert stars == res.by_case["r_ge2"] > 0
