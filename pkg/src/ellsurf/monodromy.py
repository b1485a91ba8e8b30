"""Realizability of three-point branched covers by exhaustive permutation
search.

A degree-n cover of the projective line branched over 0, 1728 and infinity
with prescribed cycle types exists precisely when there are permutations
sigma0, sigma1 of the prescribed types whose product has the third type and
which generate a transitive subgroup.  The search fixes sigma1 to the
canonical representative of its class and enumerates the full conjugacy
class of sigma0: simultaneous conjugation preserves all three conditions,
so exhausting this slice decides existence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Sequence

Perm = tuple[int, ...]  # one-line notation on 1..n: p[i-1] is the image of i
CycleType = tuple[int, ...]  # weakly decreasing positive parts


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def product(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    return tuple(q[x - 1] for x in p)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, ordered by minimum.
    Fixed points are kept as singleton cycles."""
    seen = [False] * len(p)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        x = p[start - 1]
        while x != start:
            cycle.append(x)
            seen[x - 1] = True
            x = p[x - 1]
        out.append(tuple(cycle))
    return out


def cycle_type(p: Perm) -> CycleType:
    """Sorted multiset of cycle lengths, fixed points included as 1s."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(cycle_list: Sequence[Sequence[int]], n: int) -> Perm:
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycle_list:
        for x in cycle:
            if not 1 <= x <= n:
                raise ValueError(f"entry {x} outside 1..{n}")
            if x in seen:
                raise ValueError(f"entry {x} repeated across cycles")
            seen.add(x)
        for i, x in enumerate(cycle):
            images[x - 1] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def parse_permutation(text: str, n: int) -> Perm:
    """Parse cycle notation like ``(1 2 3)(4 5)``; separators may be spaces
    or commas.  Elements not mentioned are fixed."""
    s = text.strip()
    if not s:
        return identity(n)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"cycle notation must be parenthesized: {text!r}")
    cycle_list = []
    for chunk in s[1:-1].split(")("):
        entries = chunk.replace(",", " ").split()
        if not entries:
            raise ValueError(f"empty cycle in {text!r}")
        cycle_list.append([int(x) for x in entries])
    return from_cycles(cycle_list, n)


def format_permutation(p: Perm) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(p))


def is_transitive(perms: Sequence[Perm], n: int) -> bool:
    """Orbit closure of 1 under the given generators covers 1..n."""
    if n <= 1:
        return True
    if not perms:
        return False
    reached = [False] * n
    reached[0] = True
    stack = [1]
    count = 1
    while stack:
        x = stack.pop()
        for p in perms:
            y = p[x - 1]
            if not reached[y - 1]:
                reached[y - 1] = True
                count += 1
                stack.append(y)
    return count == n


def conjugate(p: Perm, g: Perm) -> Perm:
    """g^-1 p g in the left-to-right convention."""
    n = len(p)
    out = [0] * n
    for x in range(1, n + 1):
        out[g[x - 1] - 1] = g[p[x - 1] - 1]
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[CycleType]:
    """All partitions of n in decreasing lexicographic order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugacy_class_size(n: int, ctype: CycleType) -> int:
    """n! / prod(l^m_l * m_l!) over the distinct cycle lengths l."""
    if sum(ctype) != n:
        raise ValueError("cycle type does not sum to the degree")
    denom = 1
    for length, mult in Counter(ctype).items():
        denom *= length ** mult * math.factorial(mult)
    return math.factorial(n) // denom


def canonical_of_type(n: int, ctype: CycleType) -> Perm:
    """Consecutive-blocks representative: (1..k1)(k1+1..k1+k2)..."""
    if sum(ctype) != n:
        raise ValueError("cycle type does not sum to the degree")
    cycle_list = []
    start = 1
    for part in ctype:
        cycle_list.append(list(range(start, start + part)))
        start += part
    return from_cycles(cycle_list, n)


def permutations_with_cycle_type(n: int, ctype: CycleType) -> Iterator[Perm]:
    """Every permutation of the given cycle type, in a fixed deterministic
    order.

    Each recursion step anchors a new cycle at the smallest unused element,
    so each permutation appears exactly once; the remaining cycle members
    run through ``itertools.permutations`` of the sorted unused elements.
    """
    if sum(ctype) != n:
        raise ValueError("cycle type does not sum to the degree")

    def rec(unused: tuple[int, ...], remaining: tuple[int, ...], acc: list[list[int]]):
        if not unused:
            yield from_cycles(acc, n)
            return
        anchor = unused[0]
        rest = unused[1:]
        tried: set[int] = set()
        for idx, length in enumerate(remaining):
            if length in tried:
                continue
            tried.add(length)
            next_remaining = remaining[:idx] + remaining[idx + 1:]
            for members in _itertools_permutations(rest, length - 1):
                member_set = set(members)
                acc.append([anchor, *members])
                yield from rec(
                    tuple(x for x in rest if x not in member_set),
                    next_remaining,
                    acc,
                )
                acc.pop()

    yield from rec(tuple(range(1, n + 1)), tuple(ctype), [])


def genus_of_cover(degree: int, profiles: Sequence[CycleType]) -> int:
    """Genus of a cover of the projective line from its ramification.

    Hurwitz: 2 - 2g = 2*degree - sum over all parts p of (p - 1).  A
    negative result means no such cover exists; an odd total violates the
    parity of the formula and is rejected.
    """
    for prof in profiles:
        if sum(prof) != degree:
            raise ValueError("each profile must sum to the degree")
    branch = sum(part - 1 for prof in profiles for part in prof)
    two_minus_2g = 2 * degree - branch
    if two_minus_2g % 2 != 0:
        raise ValueError("ramification parity violates the Hurwitz formula")
    return (2 - two_minus_2g) // 2


@dataclass(frozen=True)
class SearchProblem:
    """Degree plus the cycle types over 1728, 0 and infinity."""

    degree: int
    over0: CycleType
    over1728: CycleType
    over_inf: CycleType

    def __post_init__(self):
        for name, prof in (("over0", self.over0), ("over1728", self.over1728),
                           ("over_inf", self.over_inf)):
            if any(p < 1 for p in prof):
                raise ValueError(f"{name} has a non-positive part")
            if tuple(sorted(prof, reverse=True)) != tuple(prof):
                raise ValueError(f"{name} must be weakly decreasing")
            if sum(prof) != self.degree:
                raise ValueError(f"{name} does not sum to the degree")


@dataclass(frozen=True)
class Witness:
    """A pair realizing a search problem: sigma0 over 1728, sigma1 over 0."""

    sigma0: Perm
    sigma1: Perm


@dataclass(frozen=True)
class SearchResult:
    witness: Witness | None
    candidates_scanned: int

    @property
    def exists(self) -> bool:
        return self.witness is not None


def verify_witness(problem: SearchProblem, witness: Witness) -> bool:
    """Independent check of a witness (not shared with the searcher):
    cycle types, type of the product sigma0*sigma1 (sigma0 applied first),
    and transitivity."""
    s0, s1 = witness.sigma0, witness.sigma1
    n = problem.degree
    if len(s0) != n or len(s1) != n:
        return False
    if not (is_permutation(s0) and is_permutation(s1)):
        return False
    if cycle_type(s1) != problem.over0:
        return False
    if cycle_type(s0) != problem.over1728:
        return False
    if cycle_type(product(s0, s1)) != problem.over_inf:
        return False
    return is_transitive([s0, s1], n)


DEFAULT_DEGREE_BOUND = 16


def search(problem: SearchProblem, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SearchResult:
    """Exhaustive search over the canonical slice.

    sigma1 is fixed to the consecutive-blocks representative of its type
    and every sigma0 of the prescribed type is tried; the number scanned
    always equals the conjugacy class size.  The full class is scanned even
    after a hit so the returned witness is the one with lexicographically
    least sigma0, independent of any work partitioning.
    """
    n = problem.degree
    if n > degree_bound:
        raise ValueError(f"degree {n} exceeds the configured bound {degree_bound}")
    sigma1 = canonical_of_type(n, problem.over0)
    target = problem.over_inf
    scanned = 0
    best: Perm | None = None
    for sigma0 in permutations_with_cycle_type(n, problem.over1728):
        scanned += 1
        if cycle_type(product(sigma0, sigma1)) != target:
            continue
        if not is_transitive([sigma0, sigma1], n):
            continue
        if best is None or sigma0 < best:
            best = sigma0
    expected = conjugacy_class_size(n, problem.over1728)
    if scanned != expected:
        raise AssertionError(
            f"enumerated {scanned} candidates, class size is {expected}"
        )
    if best is None:
        return SearchResult(None, scanned)
    witness = Witness(best, sigma1)
    if not verify_witness(problem, witness):
        raise AssertionError("search produced a witness the verifier rejects")
    return SearchResult(witness, scanned)


def default_problem(degree: int, over_inf: CycleType) -> SearchProblem:
    """The fully ramified three-point shape: all indices 3 over 0 and all
    indices 2 over 1728."""
    if degree % 6 != 0:
        raise ValueError("default profiles need a degree divisible by 6")
    return SearchProblem(
        degree,
        over0=(3,) * (degree // 3),
        over1728=(2,) * (degree // 2),
        over_inf=tuple(sorted(over_inf, reverse=True)),
    )


def survey_partitions(degree: int = 12,
                      degree_bound: int = DEFAULT_DEGREE_BOUND) -> dict[CycleType, bool]:
    """Realizability of every partition of ``degree`` with at least two
    parts as the infinity profile of the fully ramified three-point shape.

    Keys iterate in decreasing lexicographic order.
    """
    out: dict[CycleType, bool] = {}
    for part in partitions_of(degree):
        if len(part) < 2:
            continue
        result = search(default_problem(degree, part), degree_bound)
        out[part] = result.exists
    return out
