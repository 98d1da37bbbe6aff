"""Exhaustive enumeration of bimodal collections in small groups.

Candidates are all set partitions (as restricted growth strings) of every
admissible support set. Partitions are unordered: parts are labelled by
their least element, so each family is seen once.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .bimodal_check import (
    internal_difference_group,
    is_bimodal_by_definition,
    is_bimodal_by_structure,
)
from .classify import CASES, classify
from .collection import SetCollection, format_set
from .errors import BimodalError, BudgetExceededError, InvalidElementError, TheoremViolationError
from .group_core import GroupElement, GroupSpec

DEFAULT_BUDGET = 10**7


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k blocks."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def partition_count(n: int, max_parts: int | None = None) -> int:
    """Bell number B_n, or the count with at most ``max_parts`` blocks."""
    top = n if max_parts is None else min(n, max_parts)
    return sum(stirling2(n, k) for k in range(top + 1))


def restricted_growth_strings(n: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """RGS of length n in lexicographic order: a[0] = 0, a[j] <= 1 + max(a[:j])."""
    if n == 0:
        yield ()
        return
    limit = n if max_parts is None else max_parts
    a = [0] * n

    def rec(j: int, top: int):
        if j == n:
            yield tuple(a)
            return
        for v in range(min(top + 2, limit)):
            a[j] = v
            yield from rec(j + 1, max(top, v))

    yield from rec(1, 0)


def partitions_of(support: Sequence, max_parts: int | None = None) -> Iterator[list[tuple]]:
    for rgs in restricted_growth_strings(len(support), max_parts):
        parts: list[list] = [[] for _ in range(max(rgs) + 1)]
        for x, b in zip(support, rgs):
            parts[b].append(x)
        yield [tuple(p) for p in parts]


@dataclass(frozen=True)
class EnumerationScope:
    """Which candidates to examine.

    With ``support`` given, only partitions of that one set are examined;
    otherwise every subset of size ``min_support`` .. ``max_support``.
    ``dedupe="shift"`` keeps one collection per orbit under translation
    (among translates that are themselves in scope).
    """

    group: GroupSpec
    max_support: int | None = None
    support: tuple[GroupElement, ...] | None = None
    min_support: int = 1
    max_parts: int | None = None
    dedupe: str = "none"
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        G = self.group
        if self.support is not None:
            sup = tuple(sorted({G.element(x) for x in self.support}))
            object.__setattr__(self, "support", sup)
            if not sup:
                raise InvalidElementError("fixed support set is empty")
        elif self.max_support is None:
            object.__setattr__(self, "max_support", G.order)
        if self.max_support is not None and not 0 <= self.max_support <= G.order:
            raise InvalidElementError(f"max_support {self.max_support} exceeds |G| = {G.order}")
        if self.dedupe not in ("none", "shift"):
            raise ValueError(f"dedupe must be 'none' or 'shift', not {self.dedupe!r}")

    @property
    def sizes(self) -> range:
        if self.support is not None:
            return range(len(self.support), len(self.support) + 1)
        return range(max(self.min_support, 1), self.max_support + 1)

    def supports(self) -> Iterator[tuple[GroupElement, ...]]:
        """Support sets in canonical order: by size, then lexicographically."""
        if self.support is not None:
            yield self.support
            return
        for k in self.sizes:
            yield from itertools.combinations(self.group.elements, k)

    def cost(self) -> int:
        if self.support is not None:
            return partition_count(len(self.support), self.max_parts)
        n = self.group.order
        return sum(comb(n, k) * partition_count(k, self.max_parts) for k in self.sizes)

    def check_budget(self) -> int:
        c = self.cost()
        if c > self.budget:
            raise BudgetExceededError(c, self.budget)
        return c

    def in_scope(self, support: frozenset) -> bool:
        if self.support is not None:
            return support == frozenset(self.support)
        return len(support) in self.sizes


@dataclass
class EnumerationResult:
    scope: EnumerationScope
    candidates: int
    count: int
    by_case: dict[str, int]
    by_shape: dict[tuple[int, int], int]
    collections: list[SetCollection] | None = field(default=None, repr=False)

    def census_rows(self) -> list[tuple[int, int, int]]:
        """(m, r, count) rows sorted by m then r."""
        return [(m, r, n) for (m, r), n in sorted(self.by_shape.items())]


def _family_key(G: GroupSpec, sets, g=None) -> tuple:
    if g is None:
        return tuple(sorted(tuple(sorted(s)) for s in sets))
    return tuple(sorted(tuple(sorted(G.add(x, g) for x in s)) for s in sets))


def is_shift_minimal(scope: EnumerationScope, C: SetCollection) -> bool:
    """True if no in-scope translate of C has a smaller canonical key."""
    G = C.ambient
    key = _family_key(G, C.sets)
    for g in G.elements[1:]:
        if not scope.in_scope(G.translate(C.support, g)):
            continue
        if _family_key(G, C.sets, g) < key:
            return False
    return True


def shift_orbit(C: SetCollection) -> set[tuple]:
    G = C.ambient
    return {_family_key(G, C.sets, g) for g in G.elements}


def _scan(scope: EnumerationScope, supports: list, materialize: bool):
    G = scope.group
    candidates = count = 0
    by_case: Counter = Counter()
    by_shape: Counter = Counter()
    found = [] if materialize else None
    for sup in supports:
        for parts in partitions_of(sup, scope.max_parts):
            candidates += 1
            C = SetCollection(G, tuple(parts))
            if not is_bimodal_by_definition(C):
                continue
            if scope.dedupe == "shift" and not is_shift_minimal(scope, C):
                continue
            report = classify(C)
            count += 1
            by_case[report.case] += 1
            by_shape[(C.m, report.r)] += 1
            if found is not None:
                found.append(C)
    return candidates, count, by_case, by_shape, found


def _chunks(items: list, n: int) -> list[list]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def enumerate_bimodal(
    scope: EnumerationScope, workers: int = 1, materialize: bool = False
) -> EnumerationResult:
    """Every bimodal collection in ``scope``, judged by the counting definition.

    Output is identical for any ``workers``: supports are split into
    contiguous chunks and merged back in order.
    """
    scope.check_budget()
    supports = list(scope.supports())
    if workers <= 1:
        parts = [_scan(scope, supports, materialize)]
    else:
        # finer chunks than workers keep the load balanced
        chunks = _chunks(supports, workers * 4)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(_scan, [scope] * len(chunks), chunks, [materialize] * len(chunks))
            )
    candidates = count = 0
    by_case: Counter = Counter({c: 0 for c in CASES})
    by_shape: Counter = Counter()
    found: list | None = [] if materialize else None
    for cand, n, cases, shapes, coll in parts:
        candidates += cand
        count += n
        by_case.update(cases)
        by_shape.update(shapes)
        if found is not None:
            found.extend(coll)
    return EnumerationResult(
        scope, candidates, count, dict(by_case), dict(sorted(by_shape.items())), found
    )


@dataclass
class CrossValidation:
    passed: bool
    candidates: int
    bimodal: int
    counterexample: str | None = None


def _lemma_disjoint(C: SetCollection) -> str | None:
    """A_k misses the whole H_j-coset containing A_j, for k != j."""
    G = C.ambient
    for j in range(C.m):
        coset = internal_difference_group(C, j).coset(C.sets[j][0])
        for k in range(C.m):
            if k != j and coset.intersection(C.sets[k]):
                return f"A_{k} meets the H_{j}-coset of A_{j}"
    return None


def cross_validate(scope: EnumerationScope) -> CrossValidation:
    """Run both deciders on every candidate and classify every bimodal one."""
    scope.check_budget()
    G = scope.group
    candidates = bimodal = 0
    for sup in scope.supports():
        for parts in partitions_of(sup, scope.max_parts):
            candidates += 1
            C = SetCollection(G, tuple(parts))
            d = is_bimodal_by_definition(C)
            s = is_bimodal_by_structure(C)
            where = " ".join(format_set(G, p) for p in C.sets)
            if d.bimodal != s.bimodal:
                return CrossValidation(
                    False, candidates, bimodal,
                    f"{where}: definition says {d.bimodal}, structure says {s.bimodal}",
                )
            if not d:
                continue
            bimodal += 1
            msg = _lemma_disjoint(C)
            if msg is None:
                try:
                    classify(C)
                except (TheoremViolationError, BimodalError) as e:
                    msg = f"classify failed: {e}"
            if msg is not None:
                return CrossValidation(False, candidates, bimodal, f"{where}: {msg}")
    return CrossValidation(True, candidates, bimodal)
