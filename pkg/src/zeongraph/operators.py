"""Operators induced on the Clifford and zeon algebras by a matrix
acting on the generators, and the graph counts read off from them.

A matrix ``M`` induces the operator sending the blade ``e_I`` to the
product of the vectors ``M(e_j)``, ``j`` in ``I``, in ascending order.
Its grade-preserving matrix elements are minors of ``M``: determinants
on the Clifford side and permanents on the zeon side. Traces are sums
of principal minors over one grade of the subset lattice.
"""

from __future__ import annotations

import functools
import math
import typing as t
from fractions import Fraction

from .algebra import CliffordElement
from .algebra import Element
from .algebra import element_class
from .algebra import Flavor
from .algebra import MultiIndex
from .algebra import set_bit_indices
from .algebra import vector_from_row
from .algebra import ZeonElement
from .errors import ConsistencyError
from .errors import DimensionError
from .errors import GradeError
from .errors import ShapeError
from .errors import VertexRangeError
from .graphs import adjacency
from .graphs import Graph
from .graphs import IntMatrix
from .graphs import laplacian
from .graphs import submatrix
from .lattice import lattice_sum
from .lattice import LatticeOptions
from .linalg import cofactor
from .linalg import det
from .linalg import per

# Matrix elements


def _index(value: MultiIndex | t.Iterable[int], n: int) -> MultiIndex:
    if isinstance(value, MultiIndex):
        if value.n != n:
            raise DimensionError(
                f"Multi-index {value} belongs to n={value.n}, the matrix has n={n}."
            )

        return value

    return MultiIndex.from_indices(value, n)


def _square(matrix: IntMatrix) -> int:
    if not matrix.is_square:
        raise ShapeError(
            f"Induced operators need a square matrix, got {matrix.rows}x{matrix.cols}."
        )

    return matrix.rows


def _minor(
    kernel: t.Callable[[IntMatrix], int],
    matrix: IntMatrix,
    rows: MultiIndex | t.Iterable[int],
    cols: MultiIndex | t.Iterable[int],
) -> int:
    n = _square(matrix)
    rows = _index(rows, n)
    cols = _index(cols, n)

    if len(rows) != len(cols):
        raise GradeError(
            f"Matrix elements only connect blades of equal grade, got {rows}"
            f" and {cols}."
        )

    return kernel(submatrix(matrix, rows, cols))


def fermion_entry(
    matrix: IntMatrix, i: MultiIndex | t.Iterable[int], j: MultiIndex | t.Iterable[int]
) -> int:
    """``<gamma_I | Phi | gamma_J>``, the determinant of the ``I x J``
    minor of ``matrix``.
    """
    return _minor(det, matrix, i, j)


def zeon_entry(
    matrix: IntMatrix, i: MultiIndex | t.Iterable[int], j: MultiIndex | t.Iterable[int]
) -> int:
    """``<zeta_I | Xi | zeta_J>``, the permanent of the ``I x J`` minor
    of ``matrix``.
    """
    return _minor(per, matrix, i, j)


def star_dual_entry(
    matrix: IntMatrix, i: MultiIndex | t.Iterable[int], j: MultiIndex | t.Iterable[int]
) -> int:
    """The star dual ``<zeta_I | Xi* | zeta_J> = <zeta_I' | Xi | zeta_J'>``
    with complements taken in ``{0, ..., n - 1}``.
    """
    n = _square(matrix)
    return zeon_entry(matrix, _index(i, n).complement(), _index(j, n).complement())


def sigma_diag(index: MultiIndex | t.Iterable[int], n: int) -> int:
    """The diagonal entry ``(-1)^|I| * |I'|`` of the sign-weight operator."""
    size = len(_index(index, n))
    weight = n - size
    return -weight if size & 1 else weight


def _principal(
    kernel: t.Callable[[IntMatrix], int], matrix: IntMatrix, mask: int
) -> int:
    positions = list(set_bit_indices(mask))
    return kernel(submatrix(matrix, positions, positions))


class InducedOperator:
    """The operator induced on the algebra of ``flavor`` by ``matrix``
    acting on the generators.

    :param matrix: Square matrix. Row ``j`` is the image of generator ``j``.
    :param flavor: ``"clifford"`` (also spelled ``"fermion"``) or ``"zeon"``.
    """

    def __init__(self, matrix: IntMatrix, flavor: Flavor | t.Literal["fermion"]):
        self.n = _square(matrix)
        self.matrix = matrix
        self.element_class = element_class(flavor)
        self.flavor: Flavor = t.cast(Flavor, self.element_class.flavor)

    def apply(self, index: MultiIndex | t.Iterable[int]) -> Element:
        """The image of the basis blade ``index``: the ordered product of
        the row vectors it selects. The empty blade maps to one.
        """
        rv = self.element_class.scalar(1, self.n)

        for j in _index(index, self.n):
            rv = rv * vector_from_row(self.matrix.row(j), self.flavor)

        return rv

    def entry(
        self, i: MultiIndex | t.Iterable[int], j: MultiIndex | t.Iterable[int]
    ) -> int:
        if self.flavor == "zeon":
            return zeon_entry(self.matrix, i, j)

        return fermion_entry(self.matrix, i, j)

    def trace(
        self, k: int, normalized: bool = False, options: LatticeOptions | None = None
    ) -> int | Fraction:
        """The trace of the level ``k`` part. With ``normalized`` the sum
        is divided by the dimension ``C(n, k)`` of that level.
        """
        if self.flavor == "zeon":
            if normalized:
                return zeon_level_trace_normalized(self.matrix, k, options)

            return zeon_level_trace(self.matrix, k, options)

        if normalized:
            return fermion_level_trace_normalized(self.matrix, k, options)

        return fermion_level_trace(self.matrix, k, options)

    def star(self) -> StarDual:
        return StarDual(self)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.flavor} n={self.n}>"


class StarDual:
    """The star dual of an induced operator. Its ``(I, J)`` entry is the
    ``(I', J')`` entry of the wrapped operator.
    """

    def __init__(self, operator: InducedOperator) -> None:
        self.operator = operator

    def entry(
        self, i: MultiIndex | t.Iterable[int], j: MultiIndex | t.Iterable[int]
    ) -> int:
        n = self.operator.n
        return self.operator.entry(_index(i, n).complement(), _index(j, n).complement())

    def star(self) -> InducedOperator:
        return self.operator


# Level traces


def check_level(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise GradeError(f"Level {k} is out of range for n={n}.")


def fermion_level_trace(
    matrix: IntMatrix, k: int, options: LatticeOptions | None = None
) -> int:
    """The sum of all ``k x k`` principal minor determinants."""
    n = _square(matrix)
    check_level(n, k)
    return lattice_sum(
        functools.partial(_principal, det, matrix), n, grade=k, options=options
    )


def fermion_level_trace_normalized(
    matrix: IntMatrix, k: int, options: LatticeOptions | None = None
) -> Fraction:
    """The fermion level ``k`` trace divided by ``C(n, k)``, exactly."""
    n = _square(matrix)
    check_level(n, k)
    return Fraction(fermion_level_trace(matrix, k, options), math.comb(n, k))


def zeon_level_trace(
    matrix: IntMatrix, k: int, options: LatticeOptions | None = None
) -> int:
    """The sum of all ``k x k`` principal minor permanents. This trace
    is not normalized.

    Each permanent costs ``2 ** k`` terms, so ``k`` is held to the
    ``max_n`` bound of ``options``.
    """
    n = _square(matrix)
    check_level(n, k)
    (options or LatticeOptions()).check_size(k)
    return lattice_sum(
        functools.partial(_principal, per, matrix), n, grade=k, options=options
    )


def zeon_level_trace_normalized(
    matrix: IntMatrix, k: int, options: LatticeOptions | None = None
) -> Fraction:
    n = _square(matrix)
    check_level(n, k)
    return Fraction(zeon_level_trace(matrix, k, options), math.comb(n, k))


# Spanning trees


def spanning_tree_count(graph: Graph, options: LatticeOptions | None = None) -> int:
    """Count spanning trees as the normalized level ``n - 1`` trace of
    the operator induced by the Laplacian. Every diagonal entry at that
    level is a Laplacian cofactor.
    """
    if graph.n < 1:
        raise VertexRangeError("Spanning trees need a graph with at least one vertex.")

    value = fermion_level_trace_normalized(laplacian(graph), graph.n - 1, options)

    if value.denominator != 1:
        raise ConsistencyError(
            f"The normalized Laplacian trace {value} is not an integer."
        )

    return value.numerator


def kirchhoff_cofactor(graph: Graph, c: int = 0) -> int:
    """Count spanning trees as the single Laplacian cofactor at ``c``."""
    if not 0 <= c < graph.n:
        raise VertexRangeError(f"Vertex {c} is out of range for {graph.n} vertices.")

    return cofactor(laplacian(graph), c)


# Cycle-matching covers


def cycle_matching_convolution(
    graph: Graph, options: LatticeOptions | None = None
) -> int:
    """The top level zeon trace of the adjacency matrix, which counts
    the covers of all vertices by oriented cycles and matching edges.
    """
    return zeon_level_trace(adjacency(graph), graph.n, options)


# Hamiltonian cycles


def _divide_by_2n(total: int, n: int, route: str) -> int:
    q, r = divmod(total, 2 * n)

    if r:
        raise ConsistencyError(
            f"The {route} sum {total} is not divisible by 2n = {2 * n}."
        )

    return q


def _fz_trace_term(matrix: IntMatrix, n: int, mask: int) -> int:
    j = MultiIndex(mask, n)
    weight = sigma_diag(j, n)

    if not weight:
        return 0

    fermion = fermion_entry(matrix, j, j)

    if not fermion:
        return 0

    return weight * fermion * star_dual_entry(matrix, j, j)


def hamiltonian_fz_trace(graph: Graph, options: LatticeOptions | None = None) -> int:
    """Count Hamiltonian cycles as ``tr(sigma Phi (.) Xi*) / 2n``: the
    sign-weighted sum over all blades of the fermion diagonal entry
    times the star dual zeon diagonal entry.
    """
    n = graph.n

    if n < 3:
        return 0

    term = functools.partial(_fz_trace_term, adjacency(graph), n)
    return _divide_by_2n(lattice_sum(term, n, options=options), n, "fermion-zeon trace")


def _liu_term(matrix: IntMatrix, n: int, mask: int) -> int:
    size = mask.bit_count()

    if not size:
        return 0

    permanent = _principal(per, matrix, mask)

    if not permanent:
        return 0

    value = size * permanent * _principal(det, matrix, ((1 << n) - 1) ^ mask)
    return -value if (n - size) & 1 else value


def hamiltonian_liu(graph: Graph, options: LatticeOptions | None = None) -> int:
    """Count Hamiltonian cycles with the undirected, parameter-free form
    of Liu's permanent-determinant sum.
    """
    n = graph.n

    if n < 3:
        return 0

    term = functools.partial(_liu_term, adjacency(graph), n)
    return _divide_by_2n(lattice_sum(term, n, options=options), n, "Liu")


def _goulden_jackson_term(matrix: IntMatrix, n: int, anchor: int, mask: int) -> int:
    # Open a zero bit at the anchor so the mask ranges over subsets
    # that never contain it.
    low = mask & ((1 << anchor) - 1)
    mask = low | (mask ^ low) << 1
    determinant = _principal(det, matrix, mask)

    if not determinant:
        return 0

    value = determinant * _principal(per, matrix, ((1 << n) - 1) ^ mask)
    return -value if mask.bit_count() & 1 else value


def hamiltonian_goulden_jackson(
    graph: Graph, c: int = 0, options: LatticeOptions | None = None
) -> int:
    """Count directed Hamiltonian circuits with the Goulden-Jackson sum
    over the subsets avoiding the anchor ``c``. On an undirected graph
    with at least three vertices every cycle is counted once per
    orientation.
    """
    n = graph.n

    if not 0 <= c < n:
        raise VertexRangeError(f"Anchor {c} is out of range for {n} vertices.")

    (options or LatticeOptions()).check_size(n)
    term = functools.partial(_goulden_jackson_term, adjacency(graph), n, c)
    return lattice_sum(term, n - 1, options=options)


def _restricted_product(
    matrix: IntMatrix, index: MultiIndex, cls: type[Element]
) -> Element:
    n = index.n
    rv = cls.scalar(1, n)

    for j in index:
        row = [matrix[j, c] if c in index else 0 for c in range(n)]
        rv = rv * vector_from_row(row, cls.flavor)  # type: ignore[call-overload]

    return rv


def _fz_integral_term(matrix: IntMatrix, n: int, mask: int) -> int:
    j = MultiIndex(mask, n)
    weight = sigma_diag(j, n)

    if not weight:
        return 0

    # The coefficient of gamma_J needs every factor to contribute a
    # distinct generator of J, so columns outside J can be dropped. The
    # same holds for zeta_J' on the zeon side.
    fermion = _restricted_product(matrix, j, CliffordElement).coefficient(j)

    if not fermion:
        return 0

    rest = j.complement()
    zeon = _restricted_product(matrix, rest, ZeonElement).coefficient(rest)
    return weight * fermion * zeon


def fz_convolution_integral(
    graph: Graph, options: LatticeOptions | None = None
) -> int:
    """Count Hamiltonian cycles with the fermion-zeon convolution
    integral. Each blade ``J`` contributes the coefficient of ``gamma_J``
    in the Clifford product of its rows times the coefficient of
    ``zeta_J'`` in the zeon product of the complementary rows, weighted
    by ``sigma``. The products are expanded in the algebras, no
    determinant or permanent kernel is used.
    """
    n = graph.n

    if n < 3:
        return 0

    term = functools.partial(_fz_integral_term, adjacency(graph), n)
    return _divide_by_2n(
        lattice_sum(term, n, options=options), n, "fermion-zeon integral"
    )


# Nilpotent adjacency matrix


class NilpotentMatrix:
    """A square matrix with zeon entries. The nilpotent adjacency matrix
    has ``zeta_j`` at ``(i, j)`` for each edge ``{i, j}``; its powers
    are built with :meth:`__matmul__`.
    """

    __slots__ = ("n", "entries")

    def __init__(self, entries: t.Sequence[t.Sequence[ZeonElement]], n: int) -> None:
        rows = tuple(tuple(row) for row in entries)

        if len(rows) != n or any(len(row) != n for row in rows):
            raise ShapeError(f"A nilpotent matrix on {n} generators must be {n}x{n}.")

        self.n = n
        self.entries = rows

    def __getitem__(self, key: tuple[int, int]) -> ZeonElement:
        i, j = key
        return self.entries[i][j]

    def __matmul__(self, other: NilpotentMatrix) -> NilpotentMatrix:
        if other.n != self.n:
            raise DimensionError("Nilpotent matrices of different sizes.")

        n = self.n
        zero = ZeonElement.scalar(0, n)
        rows = []

        for i in range(n):
            row = [zero] * n

            for k in range(n):
                left = self.entries[i][k]

                if not left:
                    continue

                for j in range(n):
                    right = other.entries[k][j]

                    if right:
                        row[j] = row[j] + left * right

            rows.append(row)

        return NilpotentMatrix(rows, n)

    def power(self, k: int) -> NilpotentMatrix:
        if k < 1:
            raise ValueError("Only positive powers are defined.")

        rv = self

        for _ in range(k - 1):
            rv = rv @ self

        return rv

    def trace(self) -> ZeonElement:
        rv = ZeonElement.scalar(0, self.n)

        for i in range(self.n):
            rv = rv + self.entries[i][i]

        return rv

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.n}x{self.n}>"


def nilpotent_adjacency(graph: Graph) -> NilpotentMatrix:
    n = graph.n
    zero = ZeonElement.scalar(0, n)
    generators = [ZeonElement.generator(j, n) for j in range(n)]
    return NilpotentMatrix(
        [
            [generators[j] if graph.has_edge(i, j) else zero for j in range(n)]
            for i in range(n)
        ],
        n,
    )


def nilpotent_trace_power(
    graph: Graph, k: int, options: LatticeOptions | None = None
) -> ZeonElement:
    """The trace of the ``k``-th power of the nilpotent adjacency
    matrix. Each term is a closed walk whose vertices, apart from the
    start, are all distinct.
    """
    n = graph.n

    if not 1 <= k <= n:
        raise GradeError(f"Power {k} is out of range for n={n}.")

    (options or LatticeOptions()).check_size(n)
    return nilpotent_adjacency(graph).power(k).trace()


def hamiltonian_nilpotent(graph: Graph, options: LatticeOptions | None = None) -> int:
    """Count Hamiltonian cycles from ``tr(A^n) = 2n H zeta_[n]``."""
    n = graph.n

    if n < 3:
        return 0

    trace = nilpotent_trace_power(graph, n, options)

    if trace.grades() not in ([], [n]):
        raise ConsistencyError(
            f"The trace of the {n}-th nilpotent power has terms below grade {n}."
        )

    return _divide_by_2n(
        trace.coefficient(MultiIndex.full(n)), n, "nilpotent trace"
    )
