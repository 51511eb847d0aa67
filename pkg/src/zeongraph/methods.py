"""The counting methods registered on every
:class:`~zeongraph.Enumerator`. Each quantity has one ``oracle`` method
that enumerates directly and is what :meth:`~zeongraph.Enumerator.verify`
compares the algebraic methods against.
"""

from __future__ import annotations

import itertools
import typing as t

from . import operators
from . import oracles
from .algebra import MultiIndex
from .errors import ConsistencyError
from .errors import VertexRangeError
from .graphs import adjacency
from .graphs import Graph
from .lattice import LatticeOptions

if t.TYPE_CHECKING:  # pragma: no cover
    from .app import Enumerator
    from .typing import CountMethod


def spanning_trees_fermion_trace(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Normalized level n-1 trace of the Laplacian operator."""
    return operators.spanning_tree_count(graph, options)


def spanning_trees_kirchhoff_cofactor(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """The Laplacian cofactor at the anchor vertex."""
    return operators.kirchhoff_cofactor(graph, anchor)


def spanning_trees_oracle(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Acyclic edge subsets of size n-1."""
    return oracles.count_spanning_trees_bruteforce(graph)


def hamiltonian_fz_trace(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Sign-weighted fermion-zeon trace over all blades."""
    return operators.hamiltonian_fz_trace(graph, options)


def hamiltonian_fz_integral(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Fermion-zeon convolution integral, expanded in the algebras."""
    return operators.fz_convolution_integral(graph, options)


def hamiltonian_liu(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Permanent-determinant sum over all vertex subsets."""
    return operators.hamiltonian_liu(graph, options)


def hamiltonian_goulden_jackson(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Determinant-permanent sum avoiding the anchor, halved.

    Below three vertices a directed circuit can only run back and forth
    along one edge, which is not a cycle of a simple graph.
    """
    if graph.n and not 0 <= anchor < graph.n:
        raise VertexRangeError(
            f"Anchor {anchor} is out of range for {graph.n} vertices."
        )

    if graph.n < 3:
        return 0

    directed = operators.hamiltonian_goulden_jackson(graph, anchor, options)

    if directed & 1:
        raise ConsistencyError(
            f"The Goulden-Jackson sum {directed} counts an odd number of"
            " directed circuits."
        )

    return directed // 2


def hamiltonian_nilpotent(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Trace of the n-th power of the nilpotent adjacency matrix."""
    return operators.hamiltonian_nilpotent(graph, options)


def hamiltonian_oracle(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Backtracking from vertex 0."""
    return oracles.count_hamiltonian_cycles_bruteforce(graph)


def cycle_matching_zeon_trace(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Level k zeon trace of the adjacency operator."""
    k = graph.n if level is None else level
    return operators.zeon_level_trace(adjacency(graph), k, options)


def cycle_matching_oracle(
    graph: Graph, *, level: int | None, anchor: int, options: LatticeOptions
) -> int:
    """Cycle and matching covers of every k-subset."""
    k = graph.n if level is None else level
    operators.check_level(graph.n, k)
    return sum(
        oracles.cycle_matching_covers(graph, MultiIndex.from_indices(c, graph.n))
        for c in itertools.combinations(range(graph.n), k)
    )


BUILTIN_METHODS: tuple[tuple[str, str, CountMethod], ...] = (
    ("spanning-trees", "fermion-trace", spanning_trees_fermion_trace),
    ("spanning-trees", "kirchhoff-cofactor", spanning_trees_kirchhoff_cofactor),
    ("spanning-trees", "oracle", spanning_trees_oracle),
    ("hamiltonian", "fz-trace", hamiltonian_fz_trace),
    ("hamiltonian", "fz-integral", hamiltonian_fz_integral),
    ("hamiltonian", "liu", hamiltonian_liu),
    ("hamiltonian", "goulden-jackson", hamiltonian_goulden_jackson),
    ("hamiltonian", "nilpotent", hamiltonian_nilpotent),
    ("hamiltonian", "oracle", hamiltonian_oracle),
    ("cycle-matching", "zeon-trace", cycle_matching_zeon_trace),
    ("cycle-matching", "oracle", cycle_matching_oracle),
)


def register_builtin_methods(enumerator: Enumerator) -> None:
    for quantity, name, func in BUILTIN_METHODS:
        enumerator.add_method(quantity, name, func, oracle=name == "oracle")
