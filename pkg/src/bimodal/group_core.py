"""Finite abelian groups given as direct products of cyclic groups.

Elements are plain tuples of residues, one per cyclic factor, always fully
reduced. Everything that needs an order uses lexicographic order on those
tuples, which is just Python's tuple order.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, reduce

from .errors import AmbientMismatchError, InvalidElementError, OrderCapError

GroupElement = tuple[int, ...]

#: refuse to enumerate the subgroup lattice of groups larger than this
DEFAULT_ORDER_CAP = 4096


@dataclass(frozen=True)
class GroupSpec:
    """Z_{n_1} x ... x Z_{n_k}."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.cyclic_orders)
        for n in orders:
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise InvalidElementError(f"cyclic orders must be integers >= 1, got {n!r}")
        object.__setattr__(self, "cyclic_orders", orders)

    @classmethod
    def of(cls, *orders: int) -> GroupSpec:
        return cls(tuple(orders))

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in lexicographic order."""
        return tuple(itertools.product(*(range(n) for n in self.cyclic_orders)))

    def nonzero_elements(self) -> tuple[GroupElement, ...]:
        return self.elements[1:]

    def __contains__(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.rank
            and all(isinstance(r, int) and 0 <= r < n for r, n in zip(x, self.cyclic_orders))
        )

    def element(self, x) -> GroupElement:
        """Validate ``x`` and return it as a reduced tuple.

        Bare integers are accepted for rank-1 groups. Residues must already be
        in range; out-of-range values are an error rather than silently reduced.
        """
        if isinstance(x, int) and not isinstance(x, bool):
            if self.rank != 1:
                raise InvalidElementError(
                    f"bare integer {x} is only valid in a cyclic group, not in {self}"
                )
            x = (x,)
        try:
            t = tuple(x)
        except TypeError:
            raise InvalidElementError(f"{x!r} is not a group element") from None
        if len(t) != self.rank:
            raise InvalidElementError(f"{list(t)} has {len(t)} residues, {self} needs {self.rank}")
        for r, n in zip(t, self.cyclic_orders):
            if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r < n:
                raise InvalidElementError(f"residue {r!r} of {list(t)} is not in [0, {n})")
        return t

    # unchecked arithmetic; callers validate at the boundary
    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.cyclic_orders))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x - y) % n for x, y, n in zip(a, b, self.cyclic_orders))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple(-x % n for x, n in zip(a, self.cyclic_orders))

    def translate(self, s: Iterable[GroupElement], g: GroupElement) -> frozenset[GroupElement]:
        return frozenset(self.add(x, g) for x in s)

    def __str__(self) -> str:
        if not self.cyclic_orders:
            return "1"
        return " x ".join(f"Z_{n}" for n in self.cyclic_orders)


def _check(G: GroupSpec, *elts) -> None:
    for e in elts:
        if e not in G:
            raise InvalidElementError(f"{e!r} is not a reduced element of {G}")


def element_add(G: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    _check(G, a, b)
    return G.add(a, b)


def element_sub(G: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    _check(G, a, b)
    return G.sub(a, b)


def element_neg(G: GroupSpec, a: GroupElement) -> GroupElement:
    _check(G, a)
    return G.neg(a)


@dataclass(frozen=True)
class Subgroup:
    """An explicit subgroup. Equality ignores the generators it was built from."""

    ambient: GroupSpec
    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...] = field(default=(), compare=False)
    _members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elts = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elts)
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "_members", frozenset(elts))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def members(self) -> frozenset[GroupElement]:
        return self._members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def is_subgroup_of(self, other: Subgroup) -> bool:
        _same_ambient(self, other)
        return self._members <= other._members

    def index_in(self, other: Subgroup) -> int:
        return other.order // self.order

    def coset(self, rep: GroupElement) -> frozenset[GroupElement]:
        return self.ambient.translate(self.elements, rep)

    def cosets(self) -> list[frozenset[GroupElement]]:
        """All cosets in the ambient group, ordered by their least element."""
        seen: set[GroupElement] = set()
        out = []
        for g in self.ambient.elements:
            if g not in seen:
                c = self.coset(g)
                seen |= c
                out.append(c)
        return out

    def nonzero(self) -> tuple[GroupElement, ...]:
        """S* = S minus the identity."""
        zero = self.ambient.identity
        return tuple(e for e in self.elements if e != zero)

    def __str__(self) -> str:
        if self.ambient.rank == 1:
            body = ",".join(str(e[0]) for e in self.elements)
        else:
            body = ",".join("(" + ",".join(map(str, e)) + ")" for e in self.elements)
        return "{" + body + "}"


def _same_ambient(*subgroups: Subgroup) -> GroupSpec:
    G = subgroups[0].ambient
    for H in subgroups[1:]:
        if H.ambient != G:
            raise AmbientMismatchError(f"subgroups live in {G} and {H.ambient}")
    return G


def _closure(G: GroupSpec, gens: Sequence[GroupElement]) -> set[GroupElement]:
    # in a finite group, closing under addition by the generators is enough
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.add(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return members


def subgroup_generate(G: GroupSpec, gens: Iterable) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``gens``."""
    gens = tuple(G.element(g) for g in gens)
    return Subgroup(G, tuple(_closure(G, gens)), gens)


def trivial_subgroup(G: GroupSpec) -> Subgroup:
    return Subgroup(G, (G.identity,))


def whole_group(G: GroupSpec) -> Subgroup:
    return Subgroup(G, G.elements, tuple(_unit_vectors(G)))


def _unit_vectors(G: GroupSpec):
    for i in range(G.rank):
        e = [0] * G.rank
        e[i] = 1 % G.cyclic_orders[i]
        yield tuple(e)


def subgroup_sum(subgroups: Sequence[Subgroup]) -> Subgroup:
    """H_1 + ... + H_t."""
    if not subgroups:
        raise ValueError("subgroup_sum needs at least one subgroup")
    G = _same_ambient(*subgroups)
    gens: list[GroupElement] = []
    for H in subgroups:
        gens.extend(H.generators or H.elements)
    # generators are sufficient provenance; keep them deduplicated
    gens = sorted(set(gens))
    return Subgroup(G, tuple(_closure(G, gens)), tuple(gens))


def subgroup_intersect(H1: Subgroup, H2: Subgroup) -> Subgroup:
    G = _same_ambient(H1, H2)
    return Subgroup(G, tuple(H1.members & H2.members))


def intersect_all(subgroups: Sequence[Subgroup]) -> Subgroup:
    if not subgroups:
        raise ValueError("intersect_all needs at least one subgroup")
    return reduce(subgroup_intersect, subgroups)


@dataclass(frozen=True)
class CosetDecomposition:
    """Outcome of :func:`coset_decompose`.

    Truthy iff the set was a union of cosets; then ``representatives`` holds
    the least element of each coset. Otherwise ``witness`` is the least
    element whose coset is only partly covered.
    """

    representatives: tuple[GroupElement, ...] | None
    witness: GroupElement | None = None

    def __bool__(self) -> bool:
        return self.representatives is not None


def coset_decompose(H: Subgroup, S: Iterable[GroupElement]) -> CosetDecomposition:
    G = H.ambient
    S = set(S)
    for s in S:
        if s not in G:
            raise AmbientMismatchError(f"{s!r} is not an element of {G}")
    seen: set[GroupElement] = set()
    reps = []
    for s in sorted(S):
        if s in seen:
            continue
        c = H.coset(s)
        if not c <= S:
            return CosetDecomposition(None, s)
        seen |= c
        # s is the least element of its coset: anything smaller would be seen
        reps.append(s)
    return CosetDecomposition(tuple(reps))


def is_union_of_cosets(H: Subgroup, S: Iterable[GroupElement]) -> bool:
    S = set(S)
    return all(H.coset(s) <= S for s in S)


def all_subgroups(G: GroupSpec, order_cap: int = DEFAULT_ORDER_CAP) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by (order, elements).

    Built by joining cyclic subgroups onto known subgroups until no new
    element set appears.
    """
    if G.order > order_cap:
        raise OrderCapError(f"{G} has order {G.order}, above the cap {order_cap}")
    cyclic = {}
    for g in G.elements:
        H = subgroup_generate(G, [g])
        cyclic.setdefault(H.members, H)
    found = {trivial_subgroup(G).members: trivial_subgroup(G)}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyclic.values():
                if C.members <= S.members:
                    continue
                J = subgroup_sum([S, C])
                if J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (H.order, H.elements))
