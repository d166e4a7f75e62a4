"""Arc diagrams on [n]: crossings, nestings, and the staircase correspondence.

An arc (i, j) with i < j becomes the 1 in row i of ``delta(n)`` at column
label j (normalized column j - 1). Under this map nestings become NE chains
and crossings become SE chains.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .fill import Filling01
from .qpoly import ONE, ZERO, BivarPoly, pq_gaussian
from .shape import delta

CLASSES = ("linked", "partitions", "matchings")


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ArcGraph:
    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for i, j in arcs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"arc ({i},{j}) is not a pair 1 <= i < j <= {self.n}")

    @classmethod
    def of(cls, n: int, arcs: Iterable[tuple[int, int]]) -> ArcGraph:
        arcs = list(arcs)
        if len(set(arcs)) != len(arcs):
            raise ValueError("repeated arc; graphs must be simple")
        return cls(n, frozenset(arcs))

    @property
    def left(self) -> tuple[int, ...]:
        return tuple(sorted(i for i, _ in self.arcs))

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(sorted(j for _, j in self.arcs))

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in sorted(self.arcs)]}

    @classmethod
    def from_json(cls, obj: dict) -> ArcGraph:
        return cls.of(obj["n"], [tuple(a) for a in obj["arcs"]])


def cros2_nest2(G: ArcGraph) -> tuple[int, int]:
    cros = nest = 0
    for (i1, j1), (i2, j2) in itertools.combinations(sorted(G.arcs), 2):
        # sorted, so i1 <= i2
        if i1 < i2 < j1 < j2:
            cros += 1
        elif i1 < i2 and j2 < j1:
            nest += 1
    return cros, nest


def graph_to_filling(G: ArcGraph) -> Filling01:
    if G.n < 2:
        raise ValueError("the staircase needs n >= 2")
    return Filling01(delta(G.n), frozenset((i, j - 1) for i, j in G.arcs))


def filling_to_graph(F: Filling01) -> ArcGraph:
    n = F.shape.s + 1
    if n < 2 or F.shape.rows != delta(n).rows:
        raise ShapeMismatch("filling is not on a staircase delta(n)")
    return ArcGraph(n, frozenset((r, c + 1) for r, c in F.ones))


# generators


def linked_graphs(n: int) -> Iterator[ArcGraph]:
    """Graphs whose right endpoints are distinct: each j picks nothing or one i < j."""
    choices = [[None] + list(range(1, j)) for j in range(2, n + 1)]
    for pick in itertools.product(*choices):
        yield ArcGraph(n, frozenset((i, j) for j, i in enumerate(pick, start=2) if i is not None))


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            yield from rec(prefix + [b], max(top, b))

    yield from rec([0], 0)


def rgs_to_blocks(rgs: Sequence[int]) -> list[list[int]]:
    blocks: dict[int, list[int]] = {}
    for v, b in enumerate(rgs, start=1):
        blocks.setdefault(b, []).append(v)
    return [blocks[k] for k in sorted(blocks)]


def standard_representation(n: int, blocks: Iterable[Sequence[int]]) -> ArcGraph:
    arcs = []
    for B in blocks:
        B = sorted(B)
        arcs.extend(zip(B, B[1:]))
    return ArcGraph(n, frozenset(arcs))


def partition_graphs(n: int) -> Iterator[ArcGraph]:
    for rgs in restricted_growth_strings(n):
        yield standard_representation(n, rgs_to_blocks(rgs))


def perfect_matchings(vertices: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not vertices:
        yield []
        return
    if len(vertices) % 2:
        return
    a, rest = vertices[0], vertices[1:]
    for k, b in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(a, b)] + m


def matching_graphs(n: int) -> Iterator[ArcGraph]:
    for m in perfect_matchings(list(range(1, n + 1))):
        yield ArcGraph(n, frozenset(m))


def enumerate_class(n: int, cls: str, O: Sequence[int] | None = None,
                    C: Sequence[int] | None = None) -> Iterator[ArcGraph]:
    gen = {"linked": linked_graphs, "partitions": partition_graphs, "matchings": matching_graphs}
    if cls not in gen:
        raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")
    O = tuple(sorted(O)) if O is not None else None
    C = tuple(sorted(C)) if C is not None else None
    if O is not None and C is not None and len(O) != len(C):
        return
    for G in gen[cls](n):
        if O is not None and G.left != O:
            continue
        if C is not None and G.right != C:
            continue
        yield G


def class_distribution_brute(n: int, cls: str, O: Sequence[int] | None = None,
                             C: Sequence[int] | None = None) -> BivarPoly:
    """Sum of p^cros2 q^nest2 over the class."""
    return BivarPoly.from_pairs(cros2_nest2(G) for G in enumerate_class(n, cls, O, C))


def class_distribution_closed(n: int, cls: str, O: Sequence[int], C: Sequence[int]) -> BivarPoly:
    """Product of p,q-Gaussians over the distinct left endpoints.

    For i in O with multiplicity m_i the factor is [h_i choose m_i] where
    h_i counts right endpoints above i minus left endpoints above i. Pairs
    (O, C) that the class cannot realise give the zero polynomial.
    """
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")
    O, C = sorted(O), sorted(C)
    mult = Counter(O)
    if len(O) != len(C) or len(set(C)) != len(C):
        return ZERO
    if any(not 1 <= v <= n for v in itertools.chain(O, C)):
        return ZERO
    if cls in ("partitions", "matchings") and any(k > 1 for k in mult.values()):
        return ZERO
    if cls == "matchings" and (set(O) & set(C) or len(O) + len(C) != n):
        return ZERO
    out = ONE
    for i in sorted(mult):
        h = sum(1 for j in C if j > i) - sum(1 for j in O if j > i)
        out = out * pq_gaussian(h, mult[i])
    return out


# linked partitions as block systems


def nearly_disjoint(E: frozenset[int], F: frozenset[int]) -> bool:
    for i in E & F:
        a = i == min(E) and len(E) > 1 and i != min(F)
        b = i == min(F) and len(F) > 1 and i != min(E)
        if not (a or b):
            return False
    return True


def is_linked_partition(n: int, blocks: Iterable[Iterable[int]]) -> bool:
    blocks = [frozenset(B) for B in blocks]
    if any(not B for B in blocks):
        return False
    if frozenset().union(*blocks) != frozenset(range(1, n + 1)):
        return False
    return all(nearly_disjoint(E, F) for E, F in itertools.combinations(blocks, 2))


def linear_representation(n: int, blocks: Iterable[Iterable[int]]) -> ArcGraph:
    """Arc i -> j whenever j lies in a block whose minimum is i."""
    arcs = set()
    for B in blocks:
        lo = min(B)
        arcs.update((lo, j) for j in B if j != lo)
    return ArcGraph(n, frozenset(arcs))


def linked_blocks(G: ArcGraph) -> list[frozenset[int]]:
    """Inverse of :func:`linear_representation` on graphs with distinct right ends."""
    by_left: dict[int, set[int]] = {}
    for i, j in G.arcs:
        by_left.setdefault(i, {i}).add(j)
    covered = set().union(*by_left.values()) if by_left else set()
    blocks = [frozenset(B) for B in by_left.values()]
    blocks += [frozenset({v}) for v in range(1, G.n + 1) if v not in covered]
    return sorted(blocks, key=lambda B: (min(B), sorted(B)))


def linked_partitions_by_blocks(n: int) -> Iterator[list[frozenset[int]]]:
    """Every linked partition, found by searching all set systems (tiny n only)."""
    subsets = [frozenset(c) for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)]

    def rec(k, chosen, covered):
        if k == len(subsets):
            if covered == n_set:
                yield list(chosen)
            return
        S = subsets[k]
        if all(nearly_disjoint(S, E) for E in chosen):
            yield from rec(k + 1, chosen + [S], covered | S)
        yield from rec(k + 1, chosen, covered)

    n_set = frozenset(range(1, n + 1))
    yield from rec(0, [], frozenset())
