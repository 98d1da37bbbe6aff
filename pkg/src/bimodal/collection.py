from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import DisjointnessError, EmptySetError, InvalidElementError, SetIndexError
from .group_core import GroupElement, GroupSpec


@dataclass(frozen=True)
class SetCollection:
    """Ordered family of pairwise disjoint, non-empty subsets of a group.

    Sets are stored as sorted tuples; the position of a set is its label.
    Validation happens on construction; use :meth:`from_lists` to accept
    bare integers for cyclic groups.
    """

    ambient: GroupSpec
    sets: tuple[tuple[GroupElement, ...], ...]

    def __post_init__(self):
        G = self.ambient
        if not self.sets:
            raise EmptySetError("a collection needs at least one set")
        clean = []
        owner: dict[GroupElement, int] = {}
        for i, s in enumerate(self.sets):
            s = tuple(s)
            if not s:
                raise EmptySetError(f"set {i} is empty")
            for x in s:
                if x not in G:
                    raise InvalidElementError(f"set {i}: {x!r} is not a reduced element of {G}")
                if x in owner:
                    if owner[x] == i:
                        raise DisjointnessError(f"set {i} lists {x!r} twice")
                    raise DisjointnessError(f"sets {owner[x]} and {i} both contain {x!r}")
                owner[x] = i
            clean.append(tuple(sorted(s)))
        object.__setattr__(self, "sets", tuple(clean))

    @classmethod
    def from_lists(cls, G: GroupSpec, sets: Iterable[Iterable]) -> SetCollection:
        out = []
        for i, s in enumerate(sets):
            try:
                out.append(tuple(G.element(x) for x in s))
            except InvalidElementError as e:
                raise InvalidElementError(f"set {i}: {e}") from None
        return cls(G, tuple(out))

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    @cached_property
    def support(self) -> frozenset[GroupElement]:
        """A, the union of all sets."""
        return frozenset(x for s in self.sets for x in s)

    def complement(self, i: int) -> frozenset[GroupElement]:
        """B_i = A minus A_i."""
        self._check_index(i)
        return self.support - frozenset(self.sets[i])

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.m:
            raise SetIndexError(f"set index {i} out of range for {self.m} sets")

    def canonical_order(self) -> SetCollection:
        """The same family with sets sorted lexicographically."""
        return SetCollection(self.ambient, tuple(sorted(self.sets)))

    def as_family(self) -> frozenset[frozenset[GroupElement]]:
        """Label-free view, for comparing collections as sets of sets."""
        return frozenset(frozenset(s) for s in self.sets)

    def permuted(self, order: Sequence[int]) -> SetCollection:
        return SetCollection(self.ambient, tuple(self.sets[i] for i in order))

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __str__(self) -> str:
        return "[" + ", ".join(format_set(self.ambient, s) for s in self.sets) + "]"


def format_element(G: GroupSpec, x: GroupElement) -> str:
    if G.rank == 1:
        return str(x[0])
    return "(" + ",".join(map(str, x)) + ")"


def format_set(G: GroupSpec, s: Iterable[GroupElement]) -> str:
    return "{" + ",".join(format_element(G, x) for x in sorted(s)) + "}"
