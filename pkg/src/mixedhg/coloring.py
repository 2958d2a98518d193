"""Exhaustive strict-coloring enumeration, chromatic spectra, and gap queries.

Colorings are counted as partitions of the vertex set (color names do not
matter), encoded canonically as restricted-growth strings: vertex 0 is in
block 0 and every later vertex uses either an existing block index or the
next unused one.  Enumeration is depth-first over vertices in id order, so
results always come out in lexicographic restricted-growth order.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from .core import MixedHypergraph

FeasibleSet = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """A partition of ``0..n-1`` in restricted-growth form."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(self.assignment)
        object.__setattr__(self, "assignment", a)
        if not a:
            raise ValueError("partition of an empty vertex set")
        top = -1
        for v, b in enumerate(a):
            if not isinstance(b, int) or b < 0 or b > top + 1:
                raise ValueError(f"assignment {a} is not a restricted-growth string (vertex {v})")
            top = max(top, b)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        """Canonicalize explicit blocks (any order) into a partition."""
        groups = [sorted(b) for b in blocks]
        if any(not g for g in groups):
            raise ValueError("blocks must be nonempty")
        groups.sort(key=lambda g: g[0])
        assignment: dict[int, int] = {}
        for i, g in enumerate(groups):
            for v in g:
                if v in assignment:
                    raise ValueError(f"vertex {v} appears in two blocks")
                assignment[v] = i
        n = len(assignment)
        if set(assignment) != set(range(n)):
            raise ValueError("blocks must cover exactly 0..n-1")
        return cls(tuple(assignment[v] for v in range(n)))

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks ordered by smallest member."""
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for v, b in enumerate(self.assignment):
            out[b].append(v)
        return tuple(tuple(b) for b in out)

    @property
    def num_blocks(self) -> int:
        return max(self.assignment) + 1

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class Spectrum:
    """Counts of feasible partitions per block count.

    ``counts[k-1]`` is the number of feasible partitions with exactly ``k``
    blocks; trailing zeros are trimmed, so the length is the upper chromatic
    number.  An uncolorable hypergraph has the empty spectrum and undefined
    chromatic numbers (reported as ``None``).
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.counts)
        object.__setattr__(self, "counts", c)
        if any(x < 0 for x in c):
            raise ValueError("spectrum entries must be non-negative")
        if c and c[-1] == 0:
            raise ValueError("spectrum must not carry trailing zeros")

    @property
    def is_colorable(self) -> bool:
        return bool(self.counts)

    def entry(self, k: int) -> int:
        """Number of feasible partitions with exactly ``k`` blocks."""
        if k < 1:
            raise ValueError("block counts start at 1")
        return self.counts[k - 1] if k <= len(self.counts) else 0

    @property
    def lower_chromatic_number(self) -> Optional[int]:
        for k, c in enumerate(self.counts, start=1):
            if c:
                return k
        return None

    @property
    def upper_chromatic_number(self) -> Optional[int]:
        return len(self.counts) if self.counts else None

    def feasible_values(self) -> FeasibleSet:
        return tuple(k for k, c in enumerate(self.counts, start=1) if c)


def is_proper(h: MixedHypergraph, p: Partition) -> bool:
    """Every C-edge has a repeated block, no D-edge is monochromatic."""
    if len(p.assignment) != h.n:
        raise ValueError(f"partition covers {len(p.assignment)} vertices, hypergraph has {h.n}")
    a = p.assignment
    for e in h.c_edges:
        if len({a[v] for v in e}) == len(e):
            return False
    for e in h.d_edges:
        if len({a[v] for v in e}) == 1:
            return False
    return True


# --- search engine ---------------------------------------------------------
#
# Each edge is checked exactly when its highest vertex gets a block: at that
# moment all members are assigned, so a monochromatic D-edge or a rainbow
# C-edge kills the branch.  For exactly-k enumeration two more prunes apply:
# block indices stay below k, and a branch dies when the unassigned vertices
# cannot open enough new blocks to reach k.


def _edge_plan(h: MixedHypergraph) -> list[list[tuple[bool, tuple[int, ...]]]]:
    plan: list[list[tuple[bool, tuple[int, ...]]]] = [[] for _ in range(h.n)]
    for is_c, edges in ((True, h.c_edges), (False, h.d_edges)):
        for e in edges:
            plan[e[-1]].append((is_c, e))
    return plan


def _walk(
    plan: list[list[tuple[bool, tuple[int, ...]]]],
    n: int,
    k: Optional[int],
    prefix: tuple[int, ...],
    depth: int,
    visit: Callable[[list[int], int], None],
) -> None:
    """DFS over proper restricted-growth assignments extending ``prefix``.

    ``visit(colors, used)`` fires at ``depth`` (block indices valid up to
    ``depth``).  With ``k`` set, branches that cannot hit exactly ``k`` blocks
    by vertex ``n`` are cut.
    """
    colors = list(prefix) + [-1] * (n - len(prefix))
    start = len(prefix)
    used0 = (max(prefix) + 1) if prefix else 0

    def rec(v: int, used: int) -> None:
        if k is not None and used + (n - v) < k:
            return
        if v == depth:
            visit(colors, used)
            return
        limit = used + 1 if (k is None or used < k) else used
        for b in range(limit):
            colors[v] = b
            ok = True
            for is_c, members in plan[v]:
                distinct = len({colors[w] for w in members})
                if (distinct == len(members)) if is_c else (distinct == 1):
                    ok = False
                    break
            if ok:
                rec(v + 1, used + (1 if b == used else 0))
        colors[v] = -1

    rec(start, used0)


def _assignments_from(plan, n, k, prefix) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    _walk(plan, n, k, prefix, n, lambda colors, used: out.append(tuple(colors)))
    return out


def _counts_from(plan, n, prefix, counts: list[int]) -> None:
    _walk(plan, n, None, prefix, n, lambda colors, used: counts.__setitem__(used, counts[used] + 1))


def _prefix_list(plan, n, k, depth) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    _walk(plan, n, k, (), depth, lambda colors, used: out.append(tuple(colors[:depth])))
    return out


def _split_prefixes(plan, n, k, jobs) -> list[tuple[int, ...]]:
    depth = 1
    prefixes = _prefix_list(plan, n, k, depth)
    while depth < n and len(prefixes) < 4 * jobs:
        depth += 1
        prefixes = _prefix_list(plan, n, k, depth)
    return prefixes


def _chunk(items: list, pieces: int) -> list[list]:
    pieces = max(1, min(pieces, len(items)))
    size, extra = divmod(len(items), pieces)
    chunks, at = [], 0
    for i in range(pieces):
        step = size + (1 if i < extra else 0)
        chunks.append(items[at : at + step])
        at += step
    return chunks


def _pool(jobs: int) -> ProcessPoolExecutor:
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:  # platforms without fork
        ctx = multiprocessing.get_context()
    return ProcessPoolExecutor(max_workers=jobs, mp_context=ctx)


def _collect_worker(args) -> list[tuple[int, ...]]:
    h, k, prefixes = args
    plan = _edge_plan(h)
    out: list[tuple[int, ...]] = []
    for prefix in prefixes:
        out.extend(_assignments_from(plan, h.n, k, prefix))
    return out


def _count_worker(args) -> list[int]:
    h, prefixes = args
    plan = _edge_plan(h)
    counts = [0] * (h.n + 1)
    for prefix in prefixes:
        _counts_from(plan, h.n, prefix, counts)
    return counts


def _gather_assignments(h: MixedHypergraph, k: Optional[int], jobs: int) -> list[tuple[int, ...]]:
    plan = _edge_plan(h)
    if jobs <= 1:
        return _assignments_from(plan, h.n, k, ())
    prefixes = _split_prefixes(plan, h.n, k, jobs)
    if len(prefixes) <= 1:
        out: list[tuple[int, ...]] = []
        for prefix in prefixes:
            out.extend(_assignments_from(plan, h.n, k, prefix))
        return out
    # Contiguous chunks of the lexicographic prefix list keep the merged
    # output identical to a sequential run for any worker count.
    tasks = [(h, k, chunk) for chunk in _chunk(prefixes, jobs * 4)]
    merged: list[tuple[int, ...]] = []
    with _pool(jobs) as ex:
        for part in ex.map(_collect_worker, tasks):
            merged.extend(part)
    return merged


def _gather_counts(h: MixedHypergraph, jobs: int) -> list[int]:
    plan = _edge_plan(h)
    counts = [0] * (h.n + 1)
    if jobs <= 1:
        _counts_from(plan, h.n, (), counts)
        return counts
    prefixes = _split_prefixes(plan, h.n, None, jobs)
    if len(prefixes) <= 1:
        for prefix in prefixes:
            _counts_from(plan, h.n, prefix, counts)
        return counts
    tasks = [(h, chunk) for chunk in _chunk(prefixes, jobs * 4)]
    with _pool(jobs) as ex:
        for part in ex.map(_count_worker, tasks):
            for i, c in enumerate(part):
                counts[i] += c
    return counts


# --- public operations ------------------------------------------------------


def enumerate_strict(h: MixedHypergraph, k: int, jobs: int = 1) -> list[Partition]:
    """All feasible partitions of ``h`` into exactly ``k`` blocks, in
    lexicographic restricted-growth order."""
    if not 1 <= k <= h.n:
        raise ValueError(f"k={k} out of range 1..{h.n}")
    return [Partition(a) for a in _gather_assignments(h, k, jobs)]


def all_feasible_partitions(h: MixedHypergraph, jobs: int = 1) -> list[Partition]:
    """Every feasible partition of ``h`` (any block count), in lexicographic
    restricted-growth order."""
    return [Partition(a) for a in _gather_assignments(h, None, jobs)]


def chromatic_spectrum(h: MixedHypergraph, jobs: int = 1) -> Spectrum:
    """Count feasible partitions per block count; empty if uncolorable."""
    counts = _gather_counts(h, jobs)
    top = 0
    for k in range(h.n, 0, -1):
        if counts[k]:
            top = k
            break
    return Spectrum(tuple(counts[1 : top + 1]))


def feasible_set(h: MixedHypergraph, jobs: int = 1) -> FeasibleSet:
    """The sorted set of block counts that admit a feasible partition."""
    return chromatic_spectrum(h, jobs=jobs).feasible_values()


def has_gap_at(values: Iterable[int], k: int) -> bool:
    """True when the set has members on both sides of ``k`` but not ``k``."""
    vs = set(values)
    return bool(vs) and min(vs) < k < max(vs) and k not in vs


def is_gap_free(values: Iterable[int]) -> bool:
    """True when the set is an interval of integers (empty counts as gap-free)."""
    vs = set(values)
    return not vs or max(vs) - min(vs) + 1 == len(vs)


def gaps(values: Iterable[int]) -> tuple[int, ...]:
    """All interior values missing from the set, ascending."""
    vs = set(values)
    if not vs:
        return ()
    return tuple(k for k in range(min(vs) + 1, max(vs)) if k not in vs)
