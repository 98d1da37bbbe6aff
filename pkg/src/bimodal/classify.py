"""Structural classification of bimodal collections.

Sets whose size is below the order of their internal difference group are
"non-full"; their number r splits bimodal collections into three cases:

* ``r_ge2`` -- the cosets a_i + H_i of the non-full sets form a star whose
  kernel D is a coset of the intersection of the H_i. Shifting by an
  element of D puts the collection in canonical position, where
  A_i = H_i minus D, every full set has H_i inside D, H minus D is covered
  by sets and A outside H is a union of H-cosets.
* ``r1`` -- every other H_i lies in H_1, A_1 is a union of cosets of
  D = H_2 + ... + H_m, and the remaining sets tile whole H_1-cosets.
* ``r0`` -- every set fills its coset and A is a union of cosets of
  H = H_1 + ... + H_m.

Each of these facts is re-checked on every call. A failure raises
:class:`TheoremViolationError`, which can only mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bimodal_check import internal_difference_group, is_bimodal_by_definition
from .collection import SetCollection
from .errors import ClassificationRefusedError, TheoremViolationError
from .group_core import (
    GroupElement,
    Subgroup,
    coset_decompose,
    intersect_all,
    subgroup_sum,
    trivial_subgroup,
)

CASES = ("r0", "r1", "r_ge2")


@dataclass(frozen=True)
class SetStructure:
    size: int
    group: Subgroup
    full: bool


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the classifier learned about one collection.

    Element sets (``kernel``, tiling representatives) are given in the
    coordinates of the input collection; subtract ``canonical_shift`` to
    move to canonical position.

    ``kernel`` is D_A (a coset) when r >= 2 and the subgroup
    D = H_2 + ... + H_m when r = 1; ``kernel_group`` is the subgroup D_A is
    a coset of, respectively D itself. ``sum_group`` is the sum of the H_i
    of the non-full sets when r >= 2, H_1 when r = 1 and the sum of all H_i
    when r = 0.

    ``interior_sets`` lists the sets partitioning H minus D (r >= 2) or the
    single non-full set (r = 1). ``coset_tiling`` pairs each further coset
    of ``sum_group`` met by the support with the sets that tile it.
    """

    collection: SetCollection
    case: str
    r: int
    reorder: tuple[int, ...]
    per_set: tuple[SetStructure, ...]
    kernel: tuple[GroupElement, ...] | None
    kernel_group: Subgroup | None
    sum_group: Subgroup
    canonical_shift: GroupElement
    valid_shifts: int
    interior_sets: tuple[int, ...]
    coset_tiling: tuple[tuple[GroupElement, tuple[int, ...]], ...]

    def summary(self) -> dict:
        return {
            "case": self.case,
            "r": self.r,
            "kernel_order": None if self.kernel is None else len(self.kernel),
            "sum_group_order": self.sum_group.order,
        }


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise TheoremViolationError(msg)


def classify(C: SetCollection) -> ClassificationReport:
    verdict = is_bimodal_by_definition(C)
    if not verdict:
        raise ClassificationRefusedError(verdict)
    G = C.ambient
    groups = [internal_difference_group(C, i) for i in range(C.m)]
    per_set = []
    for i, (s, H) in enumerate(zip(C.sets, groups)):
        _require(len(s) <= H.order, f"|A_{i}| = {len(s)} exceeds |H_{i}| = {H.order}")
        per_set.append(SetStructure(len(s), H, len(s) == H.order))
    nonfull = [i for i, p in enumerate(per_set) if not p.full]
    full = [i for i, p in enumerate(per_set) if p.full]
    cosets = [H.coset(s[0]) for s, H in zip(C.sets, groups)]

    # no set meets the H_j-coset holding another set A_j
    for j in range(C.m):
        for k in range(C.m):
            if k != j:
                _require(
                    not cosets[j].intersection(C.sets[k]),
                    f"A_{k} meets the coset of H_{j} containing A_{j}",
                )

    r = len(nonfull)
    ctx = _Context(C, groups, cosets, nonfull, full)
    if r >= 2:
        parts = _star_case(ctx)
    elif r == 1:
        parts = _single_case(ctx)
    else:
        parts = _full_case(ctx)
    return ClassificationReport(
        collection=C,
        case="r_ge2" if r >= 2 else f"r{r}",
        r=r,
        reorder=tuple(nonfull + full),
        per_set=tuple(per_set),
        **parts,
    )


@dataclass
class _Context:
    C: SetCollection
    groups: list[Subgroup]
    cosets: list[frozenset]
    nonfull: list[int]
    full: list[int]


def _tiling(C: SetCollection, H: Subgroup, reps, candidates) -> tuple:
    """Group ``candidates`` by the H-coset (given by ``reps``) containing them."""
    out = []
    for rep in reps:
        coset = H.coset(rep)
        inside = tuple(i for i in candidates if coset.issuperset(C.sets[i]))
        covered = frozenset(x for i in inside for x in C.sets[i])
        _require(covered == coset, f"sets inside the coset {rep} + H do not tile it")
        out.append((rep, inside))
    return tuple(out)


def _star_case(ctx: _Context) -> dict:
    C, groups, nonfull, full = ctx.C, ctx.groups, ctx.nonfull, ctx.full
    G = C.ambient
    first = nonfull[0]
    D = ctx.cosets[first] - frozenset(C.sets[first])
    _require(bool(D), "kernel D_A is empty")
    for i in nonfull:
        _require(ctx.cosets[i] - frozenset(C.sets[i]) == D, f"(a_{i} + H_{i}) minus A_{i} differs from D_A")
    for x, i in enumerate(nonfull):
        for j in nonfull[x + 1 :]:
            _require(ctx.cosets[i] & ctx.cosets[j] == D, f"cosets of sets {i}, {j} do not meet in D_A")
            _require(
                not groups[i].is_subgroup_of(groups[j]) and not groups[j].is_subgroup_of(groups[i]),
                f"H_{i} and H_{j} are nested",
            )
    K = intersect_all([groups[i] for i in nonfull])
    d = min(D)
    _require(K.coset(d) == D, "D_A is not a coset of the intersection of the H_i")

    # canonical position
    shifted = [G.translate(s, G.neg(d)) for s in C.sets]
    for i in nonfull:
        _require(shifted[i] == groups[i].members - K.members, f"A_{i} is not H_{i} minus D_A")
    for i in full:
        _require(groups[i].is_subgroup_of(K), f"H_{i} is not inside D_A")
    H = subgroup_sum([groups[i] for i in nonfull])
    support = frozenset().union(*shifted)
    _require(H.members - K.members <= support, "H minus D_A is not covered by A")
    inside = []
    for i, s in enumerate(shifted):
        if s <= H.members:
            inside.append(i)
        else:
            _require(not s & H.members, f"A_{i} straddles H")
    covered = frozenset().union(*(shifted[i] for i in inside))
    _require(covered == H.members - K.members, "sets inside H do not partition H minus D_A")
    outer = coset_decompose(H, support - H.members)
    _require(bool(outer), "A outside H is not a union of H-cosets")
    shifted_C = SetCollection(G, tuple(tuple(s) for s in shifted))
    tiling = _tiling(shifted_C, H, outer.representatives, [i for i in range(C.m) if i not in inside])
    # report in input coordinates
    tiling = tuple((min(H.coset(G.add(rep, d))), idx) for rep, idx in tiling)
    return dict(
        kernel=tuple(sorted(D)),
        kernel_group=K,
        sum_group=H,
        canonical_shift=d,
        valid_shifts=len(D),
        interior_sets=tuple(inside),
        coset_tiling=tiling,
    )


def _single_case(ctx: _Context) -> dict:
    C, groups, full = ctx.C, ctx.groups, ctx.full
    G = C.ambient
    i1 = ctx.nonfull[0]
    H1, A1 = groups[i1], frozenset(C.sets[i1])
    for i in full:
        _require(groups[i].is_subgroup_of(H1), f"H_{i} is not inside H_{i1}")
    D = subgroup_sum([groups[i] for i in full]) if full else trivial_subgroup(G)
    _require(bool(coset_decompose(D, A1)), f"A_{i1} is not a union of cosets of D")
    free = ctx.cosets[i1] - A1
    _require(bool(free), f"A_{i1} fills its coset")
    u = min(free)
    A1c = G.translate(A1, G.neg(u))
    _require(A1c <= H1.members - D.members, "shifted A_1 is not inside H_1 minus D")
    rest = C.complement(i1)
    dec = coset_decompose(H1, rest)
    _require(bool(dec), "the full sets do not tile whole H_1-cosets")
    return dict(
        kernel=D.elements,
        kernel_group=D,
        sum_group=H1,
        canonical_shift=u,
        valid_shifts=len(free),
        interior_sets=(i1,),
        coset_tiling=_tiling(C, H1, dec.representatives, full),
    )


def _full_case(ctx: _Context) -> dict:
    C = ctx.C
    H = subgroup_sum(ctx.groups)
    dec = coset_decompose(H, C.support)
    _require(bool(dec), "A is not a union of cosets of H")
    return dict(
        kernel=None,
        kernel_group=None,
        sum_group=H,
        canonical_shift=C.ambient.identity,
        valid_shifts=0,
        interior_sets=(),
        coset_tiling=_tiling(C, H, dec.representatives, range(C.m)),
    )


def canonicalize(
    C: SetCollection, report: ClassificationReport | None = None
) -> tuple[SetCollection, GroupElement]:
    """Shift ``C`` into canonical position; returns the shifted copy and the shift.

    With r = 0 there is nothing to do and the collection comes back unchanged
    with the identity as shift.
    """
    report = report or classify(C)
    g = report.canonical_shift
    G = C.ambient
    if report.r == 0:
        return C, g
    neg = G.neg(g)
    return SetCollection(G, tuple(tuple(G.add(x, neg) for x in s) for s in C.sets)), g
