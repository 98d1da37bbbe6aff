import itertools

import pytest

from bimodal import EnumerationScope, GroupSpec, SetCollection, enumerate_bimodal
from bimodal.bimodal_check import internal_difference_group
from bimodal.classify import canonicalize, classify
from bimodal.construct import shift
from bimodal.errors import ClassificationRefusedError
from bimodal.golden import GOLDEN
from bimodal.group_core import coset_decompose, intersect_all, subgroup_generate, subgroup_sum


def _all_bimodal(orders, max_support=None):
    scope = EnumerationScope(GroupSpec(orders), max_support=max_support)
    return enumerate_bimodal(scope, materialize=True).collections


@pytest.fixture(scope="module")
def z3xz3_all():
    return _all_bimodal((3, 3))


def test_z12_star_case(z12_mixed):
    R = classify(z12_mixed)
    assert (R.case, R.r) == ("r_ge2", 2)
    assert R.reorder[:2] == (0, 1)
    assert R.per_set[0].group.elements == ((0,), (4,), (8,))
    assert R.per_set[1].group.elements == ((0,), (3,), (6,), (9,))
    assert R.kernel == ((0,),)
    assert R.sum_group.order == 12
    assert sorted(R.interior_sets) == list(range(8))
    assert R.coset_tiling == ()


def test_z36_single_case(z36):
    R = classify(z36)
    assert (R.case, R.r) == ("r1", 1)
    H1 = R.per_set[0].group
    assert H1 == subgroup_generate(z36.ambient, [(3,)])
    assert R.kernel == ((0,), (18,))
    assert coset_decompose(R.kernel_group, z36.sets[0])
    assert R.coset_tiling == (((1,), tuple(range(1, 9))),)
    # H_1 minus A_1 is not a subgroup here
    rest = H1.members - set(z36.sets[0])
    assert subgroup_generate(z36.ambient, rest).members != rest


def test_z10_full_case(z10):
    R = classify(z10)
    assert (R.case, R.r) == ("r0", 0)
    assert R.sum_group.elements == ((0,), (5,))
    assert [idx for _, idx in R.coset_tiling] == [(0,), (1,), (2,)]
    assert R.kernel is None and R.canonical_shift == (0,)


def test_refuses_non_bimodal():
    bad = SetCollection.from_lists(GroupSpec.of(10), [[1, 2], [3, 8], [4, 9]])
    with pytest.raises(ClassificationRefusedError) as e:
        classify(bad)
    assert e.value.verdict.set_index == 0


def test_reorder_is_stable():
    # full, non-full, full, non-full
    G = GroupSpec.of(12)
    C = SetCollection.from_lists(G, [[1], [4, 8], [2], [3, 6, 9], [5], [7], [10], [11]])
    R = classify(C)
    assert R.reorder == (1, 3, 0, 2, 4, 5, 6, 7)


def test_canonicalize_examples(z12_mixed, z36):
    C, g = canonicalize(z12_mixed)
    assert g == (0,) and C == z12_mixed
    C, g = canonicalize(z36)
    assert g == (0,) and C == z36
    H1 = subgroup_generate(z36.ambient, [(3,)])
    assert set(C.sets[0]) <= H1.members
    assert not {(0,), (18,)} & set(C.sets[0])
    moved = shift(z36, (5,))
    C, g = canonicalize(moved)
    assert g == (5,) and C == z36


def test_canonicalize_r0_is_a_no_op(z10):
    C, g = canonicalize(z10)
    assert C is z10 and g == (0,)


def _check_star_consequences(C):
    R = classify(C)
    G = C.ambient
    nonfull = R.reorder[: R.r]
    groups = [internal_difference_group(C, i) for i in range(C.m)]
    cosets = {i: groups[i].coset(C.sets[i][0]) for i in nonfull}
    D = set(R.kernel)
    for i, j in itertools.combinations(nonfull, 2):
        assert cosets[i] & cosets[j] == D
    K = intersect_all([groups[i] for i in nonfull])
    assert K.coset(min(D)) == D
    Cc, d = canonicalize(C, R)
    for i in nonfull:
        assert set(Cc.sets[i]) == groups[i].members - K.members
    return R


def _check_single_consequences(C):
    R = classify(C)
    Cc, u = canonicalize(C, R)
    i1 = R.reorder[0]
    H1 = R.per_set[i1].group
    D = R.kernel_group
    A1 = set(Cc.sets[i1])
    assert A1 <= H1.members - D.members
    assert coset_decompose(D, A1)
    for i in R.reorder[1:]:
        assert R.per_set[i].group.is_subgroup_of(H1)
    return R


def test_star_consequences_exhaustive_z3xz3(z3xz3_all):
    stars = [C for C in z3xz3_all if classify(C).r >= 2]
    assert len(stars) == 99
    for C in stars:
        _check_star_consequences(C)


@pytest.mark.parametrize("orders", [(3, 3), (8,), (2, 2, 2)])
def test_single_consequences_exhaustive(orders, z3xz3_all):
    colls = z3xz3_all if orders == (3, 3) else _all_bimodal(orders)
    singles = [C for C in colls if classify(C).r == 1]
    assert singles
    for C in singles:
        _check_single_consequences(C)


def test_classify_shift_equivariance_on_golden():
    for ex in GOLDEN.values():
        C = ex.collection
        R = classify(C)
        G = C.ambient
        for g in G.elements:
            S = classify(shift(C, g))
            assert (S.case, S.r, S.sum_group, S.kernel_group) == (R.case, R.r, R.sum_group, R.kernel_group)
            if R.kernel is not None and R.r >= 2:
                assert set(S.kernel) == G.translate(R.kernel, g)


def test_classify_shift_equivariance_z3xz3(z3xz3_all):
    G = GroupSpec.of(3, 3)
    for C in z3xz3_all[::7]:
        R = classify(C)
        for g in G.elements:
            S = classify(shift(C, g))
            assert (S.case, S.r, len(S.kernel or ()), S.sum_group.order) == (
                R.case, R.r, len(R.kernel or ()), R.sum_group.order,
            )


def test_r1_valid_shift_count(z36):
    R = classify(z36)
    # every element of H_1 outside A_1 puts the collection in canonical position
    assert R.valid_shifts == 12 - 4
    H1 = R.per_set[0].group
    for u in sorted(H1.members - set(z36.sets[0])):
        A1 = z36.ambient.translate(z36.sets[0], z36.ambient.neg(u))
        assert A1 <= H1.members - R.kernel_group.members


def test_sum_group_for_r0_is_sum_of_all():
    C = GOLDEN["z2cubed_subdivision"].collection
    R = classify(C)
    assert R.sum_group == subgroup_sum([p.group for p in R.per_set])
    assert R.sum_group.order == 8


def test_z36_complement_in_h1_is_not_a_subgroup(z36):
    # an observation only: H_1 minus A_1 contains the kernel but is not closed
    R = classify(z36)
    H1 = R.per_set[0].group
    rest = set(H1.elements) - set(z36.sets[0])
    assert set(R.kernel) <= rest
    G = z36.ambient
    assert any(G.add(a, b) not in rest for a in rest for b in rest)
