"""Brute-force enumerators used to check the algebraic counts.

Each oracle has an :class:`OracleLimit` and refuses larger inputs with
:class:`~zeongraph.errors.SizeLimitError` instead of running for an
unbounded time. Cycle covers are oriented: both directions of a cycle
of length three or more are counted, which is how they appear as
permutations in a permanent.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import networkx as nx
from networkx.utils import UnionFind

from .algebra import MultiIndex
from .algebra import set_bit_indices
from .errors import DimensionError
from .errors import SizeLimitError
from .graphs import Graph


@dataclass(frozen=True)
class OracleLimit:
    """The largest input an oracle accepts.

    :param name: What the oracle counts, used in error messages.
    :param max_n: Cap on the measured size.
    :param unit: What is measured, such as ``"vertices"``.
    """

    name: str
    max_n: int
    unit: str = "vertices"

    def check(self, size: int) -> None:
        if size > self.max_n:
            raise SizeLimitError(
                f"The {self.name} oracle is limited to {self.max_n} {self.unit},"
                f" got {size}."
            )


SPANNING_TREES = OracleLimit("spanning tree", 24, "edges")
HAMILTONIAN_CYCLES = OracleLimit("Hamiltonian cycle", 14)
PERFECT_MATCHINGS = OracleLimit("perfect matching", 16)
CYCLE_COVERS = OracleLimit("cycle cover", 10)
CYCLE_MATCHING_COVERS = OracleLimit("cycle-matching cover", 10)
K_CYCLES = OracleLimit("k-cycle", 12)


def _mask(graph: Graph, index: MultiIndex | None) -> int:
    if index is None:
        return (1 << graph.n) - 1

    if index.n != graph.n:
        raise DimensionError(
            f"Vertex set {index} belongs to n={index.n}, the graph has n={graph.n}."
        )

    return index.bits


def count_spanning_trees_bruteforce(graph: Graph) -> int:
    """Count the ``n - 1`` edge subsets that contain no cycle. Such a
    subset connects all ``n`` vertices, so it is a spanning tree.
    """
    SPANNING_TREES.check(graph.m)

    if graph.n <= 1:
        return graph.n

    if not nx.is_connected(graph.to_networkx()):
        return 0

    edges = sorted(graph.edges)
    count = 0

    for subset in itertools.combinations(edges, graph.n - 1):
        forest = UnionFind(range(graph.n))

        for u, v in subset:
            if forest[u] == forest[v]:
                break

            forest.union(u, v)
        else:
            count += 1

    return count


def count_hamiltonian_cycles_bruteforce(graph: Graph) -> int:
    """Count undirected Hamiltonian cycles by extending paths from
    vertex 0. Each cycle is found once per direction.
    """
    n = graph.n
    HAMILTONIAN_CYCLES.check(n)

    if n < 3:
        return 0

    used = [False] * n

    def extend(vertex: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if graph.has_edge(vertex, 0) else 0

        count = 0
        used[vertex] = True

        for neighbor in graph.neighbors(vertex):
            if not used[neighbor]:
                count += extend(neighbor, remaining - 1)

        used[vertex] = False
        return count

    return extend(0, n - 1) // 2


@functools.lru_cache(maxsize=16384)
def _perfect_matchings(graph: Graph, mask: int) -> int:
    if not mask:
        return 1

    if mask.bit_count() & 1:
        return 0

    low = (mask & -mask).bit_length() - 1
    rest = mask ^ (1 << low)
    return sum(
        _perfect_matchings(graph, rest ^ (1 << partner))
        for partner in graph.neighbors(low)
        if rest >> partner & 1
    )


def count_perfect_matchings(graph: Graph, index: MultiIndex | None = None) -> int:
    """``M_I``, the number of perfect matchings of the subgraph induced
    by ``index`` (all vertices by default). The lowest unmatched vertex
    is paired with each available neighbor in turn.
    """
    mask = _mask(graph, index)
    PERFECT_MATCHINGS.check(mask.bit_count())
    return _perfect_matchings(graph, mask)


@functools.lru_cache(maxsize=16384)
def _cycle_covers(graph: Graph, mask: int) -> int:
    vertices = list(set_bit_indices(mask))
    image: dict[int, int] = {}
    taken = 0

    def assign(position: int) -> int:
        nonlocal taken

        if position == len(vertices):
            return 1

        vertex = vertices[position]
        count = 0

        for target in graph.neighbors(vertex):
            bit = 1 << target

            if not mask & bit or taken & bit or image.get(target) == vertex:
                continue

            image[vertex] = target
            taken |= bit
            count += assign(position + 1)
            taken ^= bit
            del image[vertex]

        return count

    return assign(0)


def count_cycle_covers(graph: Graph, index: MultiIndex | None = None) -> int:
    """``X_I``, the number of permutations of ``index`` that follow edges
    of the graph and have no cycle shorter than three. These are the
    covers of ``index`` by disjoint oriented cycles. ``X`` of the empty
    set is one.
    """
    mask = _mask(graph, index)
    CYCLE_COVERS.check(mask.bit_count())
    return _cycle_covers(graph, mask)


def cycle_matching_covers(graph: Graph, index: MultiIndex | None = None) -> int:
    """The number of covers of ``index`` by oriented cycles on one part
    and a perfect matching on the rest, summed over all splits. This is
    the permanent of the adjacency minor on ``index``.
    """
    mask = _mask(graph, index)
    CYCLE_MATCHING_COVERS.check(mask.bit_count())
    total = 0
    sub = mask

    while True:
        total += _cycle_covers(graph, mask ^ sub) * _perfect_matchings(graph, sub)

        if not sub:
            break

        sub = (sub - 1) & mask

    return total


def enumerate_k_cycles(graph: Graph, k: int) -> int:
    """Count undirected cycles of length ``k``. Each cycle is grown from
    its smallest vertex through larger vertices only and is found once
    per direction.
    """
    n = graph.n
    K_CYCLES.check(n)

    if k < 3 or k > n:
        return 0

    count = 0

    def extend(start: int, vertex: int, length: int, visited: int) -> None:
        nonlocal count

        if length == k:
            if graph.has_edge(vertex, start):
                count += 1

            return

        for neighbor in graph.neighbors(vertex):
            if neighbor > start and not visited >> neighbor & 1:
                extend(start, neighbor, length + 1, visited | 1 << neighbor)

    for start in range(n):
        extend(start, start, 1, 1 << start)

    return count // 2
