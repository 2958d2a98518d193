"""Generators for minimum-size one-realizations of a target feasible set.

For a target set ``n_1 > n_2 > ... > n_s >= 2`` the variant-one hypergraph
lives on ``2*n_1 - n_s`` vertices labeled by s-coordinate tuples; grouping
vertices by any one coordinate is a feasible partition, and those coordinate
partitions are the only ones.  When ``n_1 == n_2 + 1`` the variant-two
hypergraph drops one vertex and achieves the same with ``2*n_1 - n_s - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .core import Label, MixedHypergraph
from .coloring import Partition, is_gap_free


@dataclass(frozen=True)
class TargetSet:
    """A strictly decreasing tuple of part counts, all at least 2.

    Input values may come in any order and are normalized to decreasing
    order; duplicates are rejected, as are sets with fewer than two values
    (the constructions need at least two distinct part counts).
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            vals = tuple(sorted(self.values, reverse=True))
        except TypeError as exc:
            raise ValueError(f"target set {self.values!r} must be integers") from exc
        if len(set(vals)) != len(vals):
            raise ValueError(f"target set {sorted(self.values)} has duplicate values")
        if len(vals) < 2:
            raise ValueError("target set needs at least two values")
        if not all(isinstance(v, int) for v in vals) or vals[-1] < 2:
            raise ValueError(f"target set values must be integers >= 2, got {sorted(vals)}")
        object.__setattr__(self, "values", vals)

    @property
    def size(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __contains__(self, k: int) -> bool:
        return k in self.values

    def __len__(self) -> int:
        return len(self.values)


def construction_labels(ts: TargetSet) -> list[Label]:
    """Vertex labels of the variant-one hypergraph, in canonical id order.

    Constant tuples ``(i,...,i)`` for ``i < n_s`` come first, then for every
    coordinate position ``t >= 2`` and every ``j`` with ``n_t <= j < n_t-1``
    the pair ``(j,..,j,n_t,n_t+1,..,n_s)`` and ``(j,..,j,1,..,1)``, and the
    tuple ``(n_1,...,n_s)`` last.
    """
    vals = ts.values
    s = len(vals)
    labels: list[Label] = [(i,) * s for i in range(1, vals[-1])]
    for t in range(2, s + 1):
        lo, hi = vals[t - 1], vals[t - 2]
        for j in range(lo, hi):
            labels.append((j,) * (t - 1) + vals[t - 1 :])
            labels.append((j,) * (t - 1) + (1,) * (s - t + 1))
    labels.append(vals)
    return labels


def _differs_everywhere(a: Label, b: Label) -> bool:
    return all(x != y for x, y in zip(a, b))


def _two_values_per_coordinate(a: Label, b: Label, c: Label) -> bool:
    return all(len({x, y, z}) == 2 for x, y, z in zip(a, b, c))


def construct_one(ts: TargetSet) -> MixedHypergraph:
    """The variant-one realization on ``2*n_1 - n_s`` labeled vertices.

    D-edges are the vertex pairs whose labels differ in every coordinate;
    C-edges are the triples whose labels take exactly two distinct values in
    every coordinate.  Both families are found by filtering all pairs and
    triples, which is cheap at this scale and hard to get wrong.
    """
    labels = construction_labels(ts)
    d_edges = [
        (i, j) for i, j in combinations(range(len(labels)), 2)
        if _differs_everywhere(labels[i], labels[j])
    ]
    c_edges = [
        (i, j, k) for i, j, k in combinations(range(len(labels)), 3)
        if _two_values_per_coordinate(labels[i], labels[j], labels[k])
    ]
    return MixedHypergraph(len(labels), c_edges, d_edges, labels)


def construct_two(ts: TargetSet) -> MixedHypergraph:
    """The variant-two realization: variant one minus the vertex labeled
    ``(n_2, 1, ..., 1)``.  Only defined when ``n_1 == n_2 + 1``."""
    vals = ts.values
    if vals[0] != vals[1] + 1:
        raise ValueError(
            f"variant two needs the two largest values consecutive, got {vals[0]} and {vals[1]}"
        )
    h = construct_one(ts)
    return h.delete_vertex(h.label_index((vals[1],) + (1,) * (len(vals) - 1)))


def canonical_coloring(ts: TargetSet, i: int, which: str = "one") -> Partition:
    """The feasible partition grouping vertices by coordinate ``i`` (1-based).

    Valid for both variants; the result has exactly ``n_i`` blocks.
    """
    if not 1 <= i <= ts.size:
        raise ValueError(f"coordinate index {i} out of range 1..{ts.size}")
    if which not in ("one", "two"):
        raise ValueError(f"variant must be 'one' or 'two', got {which!r}")
    h = construct_one(ts) if which == "one" else construct_two(ts)
    assert h.labels is not None
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(h.labels):
        groups.setdefault(lab[i - 1], []).append(v)
    if len(groups) != ts.values[i - 1]:
        raise AssertionError(
            f"coordinate {i} spans {len(groups)} values, expected {ts.values[i - 1]}"
        )
    return Partition.from_blocks(groups.values())


def minimum_size(ts: TargetSet) -> int:
    """Vertex count of the smallest one-realization of the target set."""
    vals = ts.values
    n = 2 * vals[0] - vals[-1]
    return n - 1 if vals[0] == vals[1] + 1 else n


def smallest_one_realization(ts: TargetSet) -> MixedHypergraph:
    """The minimum-size one-realization: variant two when the two largest
    values are consecutive, variant one otherwise."""
    if ts.values[0] == ts.values[1] + 1:
        return construct_two(ts)
    return construct_one(ts)


def is_realizable_set(values: Iterable[int]) -> bool:
    """Whether a set of positive integers is the feasible set of some mixed
    hypergraph: it must avoid 1 or be an interval."""
    vs = set(values)
    if not vs:
        raise ValueError("the empty set is not a candidate feasible set")
    if any(not isinstance(v, int) or v < 1 for v in vs):
        raise ValueError(f"feasible-set values must be positive integers, got {sorted(vs)}")
    return 1 not in vs or is_gap_free(vs)
