"""Constructions of bimodal collections.

Each builder validates its hypotheses and raises a
:class:`~bimodal.errors.ConstructionError` subclass naming the one that
failed. Outputs are not re-checked for bimodality here; the test suite
does that against both deciders.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .bimodal_check import internal_group_of, is_bimodal_by_definition
from .collection import SetCollection
from .errors import (
    DisjointnessError,
    DuplicateCosetError,
    EmptySetError,
    GenerationError,
    IndexConditionError,
    InteriorTilingError,
    NotAPartitionError,
    NotAStarError,
    PartitionError,
    SubdivisionHypothesisError,
    TilingError,
    TilingSubgroupError,
)
from .group_core import (
    GroupElement,
    GroupSpec,
    Subgroup,
    _same_ambient,
    all_subgroups,
    coset_decompose,
    is_union_of_cosets,
    subgroup_intersect,
    subgroup_sum,
)


def _as_collection(G: GroupSpec, sets: Iterable[Iterable[GroupElement]]) -> SetCollection:
    return SetCollection(G, tuple(tuple(s) for s in sets))


def construct_cosets(H: Subgroup, reps: Sequence) -> SetCollection:
    """The family {rep + H : rep in reps}."""
    G = H.ambient
    cosets = []
    seen: dict[frozenset, int] = {}
    for n, rep in enumerate(reps):
        c = H.coset(G.element(rep))
        if c in seen:
            raise DuplicateCosetError(f"reps {seen[c]} and {n} give the same coset of H")
        seen[c] = n
        cosets.append(c)
    return _as_collection(G, cosets)


def construct_group_partition(G: GroupSpec, subgroups: Sequence[Subgroup]) -> SetCollection:
    """{S_1*, ..., S_m*} for a group partition whose parts all have order > 2."""
    if subgroups:
        _same_ambient(*subgroups)
    for S in subgroups:
        if S.ambient != G:
            raise NotAPartitionError(f"subgroup {S} does not live in {G}")
    covered: dict[GroupElement, int] = {}
    for i, S in enumerate(subgroups):
        for x in S.nonzero():
            if x in covered:
                raise NotAPartitionError(f"{x} lies in subgroups {covered[x]} and {i}")
            covered[x] = i
    missing = [x for x in G.nonzero_elements() if x not in covered]
    if missing:
        raise NotAPartitionError(f"{len(missing)} nonzero elements are uncovered, e.g. {missing[0]}")
    for i, S in enumerate(subgroups):
        if S.order <= 2:
            raise IndexConditionError(f"subgroup {i} has order {S.order}; every part needs order > 2")
    return _as_collection(G, [S.nonzero() for S in subgroups])


def construct_mixed_partition(G: GroupSpec, subgroups: Sequence[Subgroup]) -> SetCollection:
    """The S_i* followed by a singleton for every other nonzero element."""
    used: dict[GroupElement, int] = {}
    sets = []
    for i, S in enumerate(subgroups):
        if S.ambient != G:
            raise DisjointnessError(f"subgroup {i} does not live in {G}")
        star = S.nonzero()
        if not star:
            raise EmptySetError(f"subgroup {i} is trivial, so S* is empty")
        for x in star:
            if x in used:
                raise DisjointnessError(f"S_{used[x]}* and S_{i}* share {x}")
            used[x] = i
        sets.append(star)
    sets.extend((x,) for x in G.nonzero_elements() if x not in used)
    return _as_collection(G, sets)


def shift(C: SetCollection, g) -> SetCollection:
    G = C.ambient
    g = G.element(g)
    return _as_collection(G, ([G.add(x, g) for x in s] for s in C.sets))


def _is_full_coset(G: GroupSpec, s) -> bool:
    return len(s) == internal_group_of(G, s).order


def subdivide(C: SetCollection, i: int, parts: Sequence[Iterable]) -> SetCollection:
    """Replace the full coset A_i by ``parts``, each a coset of its own internal group."""
    G = C.ambient
    C._check_index(i)
    parts = [tuple(G.element(x) for x in p) for p in parts]
    Ai = frozenset(C.sets[i])
    seen: set[GroupElement] = set()
    for n, p in enumerate(parts):
        if not p:
            raise PartitionError(f"part {n} is empty")
        if seen.intersection(p) or len(set(p)) != len(p):
            raise PartitionError(f"part {n} overlaps an earlier part")
        seen.update(p)
    if seen != Ai:
        raise PartitionError(f"parts do not partition A_{i}")
    if not _is_full_coset(G, C.sets[i]):
        raise SubdivisionHypothesisError(f"A_{i} is not a coset of its internal difference group")
    for n, p in enumerate(parts):
        if not _is_full_coset(G, p):
            raise SubdivisionHypothesisError(f"part {n} is not a coset of its internal difference group")
    if not is_bimodal_by_definition(C):
        raise SubdivisionHypothesisError("the collection being subdivided is not bimodal")
    return _as_collection(G, C.sets[:i] + tuple(parts) + C.sets[i + 1 :])


@dataclass(frozen=True)
class StarSpec:
    """Input to :func:`construct_star`.

    ``interior_coset_reps`` must list one element from every coset of the
    kernel that lies inside H = sum of the subgroups but outside their union;
    ``outer_h_coset_reps`` picks the further H-cosets to fill with kernel cosets.
    """

    ambient: GroupSpec
    subgroups: tuple[Subgroup, ...]
    kernel: Subgroup
    interior_coset_reps: tuple[GroupElement, ...] = ()
    outer_h_coset_reps: tuple[GroupElement, ...] = field(default=())

    @property
    def sum_group(self) -> Subgroup:
        return subgroup_sum(list(self.subgroups))

    def interior_cosets(self) -> list[frozenset]:
        """Kernel cosets inside H but outside every H_i, by least element."""
        H = self.sum_group
        union = frozenset().union(*(S.members for S in self.subgroups))
        out, seen = [], set()
        for x in H.elements:
            if x in union or x in seen:
                continue
            c = self.kernel.coset(x)
            seen |= c
            out.append(c)
        return out

    def validate(self) -> None:
        G, D, Hs = self.ambient, self.kernel, self.subgroups
        if len(Hs) < 2:
            raise NotAStarError(f"a star needs at least 2 subgroups, got {len(Hs)}")
        for S in (*Hs, D):
            if S.ambient != G:
                raise NotAStarError(f"subgroup {S} does not live in {G}")
        for a in range(len(Hs)):
            for b in range(a + 1, len(Hs)):
                if Hs[a] == Hs[b]:
                    raise NotAStarError(f"subgroups {a} and {b} coincide")
                if subgroup_intersect(Hs[a], Hs[b]) != D:
                    raise NotAStarError(f"subgroups {a} and {b} do not intersect in the kernel")
        for a, S in enumerate(Hs):
            if S.order <= 2 * D.order:
                raise IndexConditionError(f"subgroup {a} has index {S.order // D.order} over the kernel; need > 2")


def construct_star(spec: StarSpec) -> SetCollection:
    """H_i minus D, then the interior kernel cosets, then the outer H-cosets cut into kernel cosets."""
    spec.validate()
    G, D = spec.ambient, spec.kernel
    H = spec.sum_group
    sets = [tuple(x for x in S.elements if x not in D) for S in spec.subgroups]

    expected = set(spec.interior_cosets())
    given = []
    for rep in spec.interior_coset_reps:
        c = D.coset(G.element(rep))
        if c in given:
            raise InteriorTilingError(f"interior rep {rep} repeats a kernel coset")
        if c not in expected:
            raise InteriorTilingError(f"interior rep {rep} is not in H outside the union of the H_i")
        given.append(c)
    if len(given) != len(expected):
        raise InteriorTilingError(
            f"interior reps cover {len(given)} of the {len(expected)} kernel cosets in H outside the H_i"
        )
    sets.extend(given)

    outer_seen: list[frozenset] = []
    for rep in spec.outer_h_coset_reps:
        rep = G.element(rep)
        c = H.coset(rep)
        if rep in H:
            raise DuplicateCosetError(f"outer rep {rep} lies in H itself")
        if c in outer_seen:
            raise DuplicateCosetError(f"outer rep {rep} repeats an H-coset")
        outer_seen.append(c)
        pieces = coset_decompose(D, c)
        sets.extend(D.coset(r) for r in pieces.representatives)
    return _as_collection(G, sets)


def admissible_tiling_subgroups(G: GroupSpec, A1: Iterable[GroupElement]) -> list[Subgroup]:
    """All J <= G such that A1 is a union of cosets of J."""
    A1 = frozenset(A1)
    return [J for J in all_subgroups(G) if is_union_of_cosets(J, A1)]


def construct_r1(
    G: GroupSpec,
    H1: Subgroup,
    A1: Iterable,
    tiling: Sequence[tuple[Subgroup, GroupElement]],
) -> SetCollection:
    """A_1 plus the cosets rep + J listed in ``tiling``.

    A_1 must be a proper subset of H_1 whose internal differences generate
    H_1; the tiling cosets must exactly fill whole H_1-cosets other than H_1,
    and each J must have A_1 as a union of its cosets. Different tiling
    entries may use different subgroups.
    """
    A1 = tuple(G.element(x) for x in A1)
    A1s = frozenset(A1)
    if not A1:
        raise EmptySetError("A_1 is empty")
    if not A1s <= H1.members or len(A1s) >= H1.order:
        raise GenerationError("A_1 must be a proper subset of H_1")
    if internal_group_of(G, A1) != H1:
        raise GenerationError("the internal differences of A_1 do not generate H_1")
    admissible: dict[Subgroup, bool] = {}
    pieces = []
    covered: set[GroupElement] = set()
    for n, (J, rep) in enumerate(tiling):
        if J not in admissible:
            admissible[J] = J.ambient == G and is_union_of_cosets(J, A1s)
        if not admissible[J]:
            raise TilingSubgroupError(f"tiling entry {n}: A_1 is not a union of cosets of {J}")
        c = J.coset(G.element(rep))
        if c & covered:
            raise TilingError(f"tiling entry {n} overlaps an earlier entry")
        if c & H1.members:
            raise TilingError(f"tiling entry {n} meets H_1")
        covered |= c
        pieces.append(c)
    if not coset_decompose(H1, covered):
        raise TilingError("the tiling does not cover whole cosets of H_1")
    return _as_collection(G, [A1, *pieces])
