"""Difference profiles and the two bimodality deciders.

``is_bimodal_by_definition`` counts external differences directly;
``is_bimodal_by_structure`` instead asks whether every complement B_i is a
union of cosets of the internal difference group H_i. The two share no code
beyond group arithmetic, so each one is an oracle for the other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .collection import SetCollection, format_element
from .group_core import GroupElement, Subgroup, coset_decompose, subgroup_generate


@dataclass(frozen=True)
class DifferenceProfile:
    """N_i(delta) for every set index i and every non-identity delta."""

    collection: SetCollection
    set_sizes: tuple[int, ...]
    table: tuple[dict[GroupElement, int], ...]

    def count(self, i: int, delta: GroupElement) -> int:
        return self.table[i][delta]

    def row(self, i: int) -> dict[GroupElement, int]:
        return self.table[i]

    def external_pairs(self, i: int) -> int:
        """k_i * (|A| - k_i), the number of ordered external pairs out of A_i."""
        k = self.set_sizes[i]
        return k * (sum(self.set_sizes) - k)


def difference_profile(C: SetCollection) -> DifferenceProfile:
    G = C.ambient
    deltas = G.nonzero_elements()
    table = []
    for i, Ai in enumerate(C.sets):
        counts = dict.fromkeys(deltas, 0)
        Bi = C.complement(i)
        for a in Ai:
            for b in Bi:
                counts[G.sub(a, b)] += 1
        table.append(counts)
    return DifferenceProfile(C, C.sizes, tuple(table))


def internal_difference_group(C: SetCollection, i: int) -> Subgroup:
    C._check_index(i)
    return internal_group_of(C.ambient, C.sets[i])


def internal_group_of(G, s) -> Subgroup:
    # differences from one fixed element generate all pairwise differences
    s = sorted(s)
    base = s[0]
    return subgroup_generate(G, [G.sub(x, base) for x in s[1:]])


@dataclass(frozen=True)
class Verdict:
    """Bimodality verdict with a witness on failure.

    The definition check fills ``set_index``, ``delta`` and ``count``; the
    structure check fills ``set_index`` and ``element`` (an element of B_i
    whose H_i-coset is not contained in B_i).
    """

    bimodal: bool
    method: str
    set_index: int | None = None
    delta: GroupElement | None = None
    count: int | None = None
    element: GroupElement | None = None
    set_size: int | None = None

    def __bool__(self) -> bool:
        return self.bimodal

    def describe(self, G=None) -> str:
        if self.bimodal:
            return f"bimodal ({self.method})"
        fmt = (lambda x: format_element(G, x)) if G is not None else repr
        if self.method == "definition":
            return (
                f"not bimodal ({self.method}): N_{self.set_index}({fmt(self.delta)}) = "
                f"{self.count}, expected 0 or {self.set_size}"
            )
        return (
            f"not bimodal ({self.method}): B_{self.set_index} contains {fmt(self.element)} "
            f"but not its whole coset of H_{self.set_index}"
        )


def is_bimodal_by_definition(C: SetCollection) -> Verdict:
    G = C.ambient
    for i, Ai in enumerate(C.sets):
        k = len(Ai)
        Bi = C.complement(i)
        counts = Counter(G.sub(a, b) for a in Ai for b in Bi)
        bad = [d for d, n in counts.items() if n != k]
        if bad:
            d = min(bad)
            return Verdict(False, "definition", i, d, counts[d], set_size=k)
    return Verdict(True, "definition")


def is_bimodal_by_structure(C: SetCollection) -> Verdict:
    for i in range(C.m):
        H = internal_difference_group(C, i)
        dec = coset_decompose(H, C.complement(i))
        if not dec:
            return Verdict(False, "structure", i, element=dec.witness, set_size=C.sizes[i])
    return Verdict(True, "structure")


def is_bimodal(C: SetCollection) -> bool:
    return bool(is_bimodal_by_definition(C))
