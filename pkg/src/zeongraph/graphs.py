from __future__ import annotations

import typing as t

import networkx as nx

from .algebra import MultiIndex
from .errors import EdgeListParseError
from .errors import GraphFormatError
from .errors import ShapeError
from .errors import UnknownGraphError
from .errors import VertexRangeError

if t.TYPE_CHECKING:  # pragma: no cover
    import typing_extensions as te

Edge = tuple[int, int]


class IntMatrix:
    """A dense matrix of exact integers. Rows are stored as tuples and
    the matrix is never modified after construction.

    :param entries: The rows of the matrix.
    :param cols: Number of columns. Only needed for matrices without
        rows, otherwise it is taken from the first row.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(
        self, entries: t.Iterable[t.Iterable[int]] = (), cols: int | None = None
    ) -> None:
        rows = tuple(tuple(int(value) for value in row) for row in entries)

        if cols is None:
            cols = len(rows[0]) if rows else 0

        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ShapeError(
                    f"Row {i} has {len(row)} entries, expected {cols}."
                )

        self.rows = len(rows)
        self.cols = cols
        self._entries = rows

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> te.Self:
        if cols is None:
            cols = rows

        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self._entries[i]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._entries]

    def transpose(self) -> IntMatrix:
        if not self._entries:
            return IntMatrix(((),) * self.cols, cols=0)

        return IntMatrix(zip(*self._entries), cols=self.rows)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._entries[i][j]

    def __iter__(self) -> t.Iterator[tuple[int, ...]]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented

        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, self._entries))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.rows}x{self.cols} {self.tolist()}>"


class Graph:
    """A simple undirected graph on the vertices ``0, ..., n - 1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v``. Loops and
    repeated edges are rejected rather than repaired.

    :param n: Number of vertices.
    :param edges: Pairs of distinct vertex ids.
    """

    __slots__ = ("n", "edges", "_neighbors")

    def __init__(self, n: int, edges: t.Iterable[Edge] = ()) -> None:
        if n < 0:
            raise VertexRangeError(f"A graph can't have {n} vertices.")

        seen: set[Edge] = set()
        neighbors: list[set[int]] = [set() for _ in range(n)]

        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"Loop edge at vertex {u}.")

            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(
                    f"Edge {u} {v} is out of range for {n} vertices."
                )

            key = (u, v) if u < v else (v, u)

            if key in seen:
                raise GraphFormatError(f"Duplicate edge {key[0]} {key[1]}.")

            seen.add(key)
            neighbors[u].add(v)
            neighbors[v].add(u)

        self.n = n
        self.edges = frozenset(seen)
        self._neighbors = tuple(frozenset(s) for s in neighbors)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> te.Self:
        """Convert a networkx graph, relabelling its nodes to consecutive
        integers in node iteration order.
        """
        graph = nx.convert_node_labels_to_integers(graph)
        return cls(graph.number_of_nodes(), graph.edges())

    def to_networkx(self) -> nx.Graph:
        rv = nx.Graph()
        rv.add_nodes_from(range(self.n))
        rv.add_edges_from(sorted(self.edges))
        return rv

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbors[u]

    def relabel(self, permutation: t.Sequence[int]) -> Graph:
        """Return the isomorphic graph with vertex ``v`` renamed to
        ``permutation[v]``.
        """
        if sorted(permutation) != list(range(self.n)):
            raise VertexRangeError("Relabelling must be a permutation of the vertices.")

        return Graph(self.n, ((permutation[u], permutation[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented

        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.n} m={self.m}>"


def _parse_vertex(token: str, lineno: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise EdgeListParseError(f"{token!r} is not a vertex id.", lineno)

    return int(token)


def parse_edge_list(text: str | bytes, vertices: int | None = None) -> Graph:
    """Parse an edge list into a :class:`Graph`.

    Each line holds two whitespace separated decimal vertex ids. Blank
    lines and lines starting with ``#`` are skipped, including the
    ``# vertices: N`` line :func:`serialize_edge_list` writes. A graph
    parsed without ``vertices`` serializes and parses back unchanged.
    Isolated vertices above the largest id need ``vertices`` again.

    :param text: UTF-8 bytes or text.
    :param vertices: Number of vertices. If not given, it is one more
        than the largest vertex id, or zero for an empty list.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise EdgeListParseError(f"The edge list is not valid UTF-8 ({e}).") from e

    if vertices is not None and vertices < 0:
        raise VertexRangeError(f"A graph can't have {vertices} vertices.")

    edges: list[Edge] = []
    first_seen: dict[Edge, int] = {}

    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()

        if not stripped or stripped.startswith("#"):
            continue

        tokens = stripped.split()

        if len(tokens) != 2:
            raise EdgeListParseError(
                f"Expected two vertex ids, got {len(tokens)} tokens.", lineno
            )

        u, v = (_parse_vertex(token, lineno) for token in tokens)

        if u == v:
            raise GraphFormatError(f"Loop edge at vertex {u}.", lineno)

        key = (u, v) if u < v else (v, u)

        if key in first_seen:
            raise GraphFormatError(
                f"Duplicate edge {key[0]} {key[1]}, first given on line"
                f" {first_seen[key]}.",
                lineno,
            )

        if vertices is not None and key[1] >= vertices:
            raise VertexRangeError(
                f"line {lineno}: vertex {key[1]} is out of range for"
                f" {vertices} vertices."
            )

        first_seen[key] = lineno
        edges.append(key)

    if vertices is None:
        vertices = max((v for _, v in edges), default=-1) + 1

    return Graph(vertices, edges)


def serialize_edge_list(graph: Graph) -> str:
    """Write ``graph`` in the edge list format, edges sorted. Isolated
    trailing vertices are only recorded in the leading comment, pass
    ``vertices=graph.n`` when parsing to restore them.
    """
    lines = [f"# vertices: {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def adjacency(graph: Graph) -> IntMatrix:
    """The symmetric 0/1 adjacency matrix of ``graph``."""
    return IntMatrix(
        (
            (1 if graph.has_edge(i, j) else 0 for j in range(graph.n))
            for i in range(graph.n)
        ),
        cols=graph.n,
    )


def degree_matrix(graph: Graph) -> IntMatrix:
    return IntMatrix(
        (
            (graph.degree(i) if i == j else 0 for j in range(graph.n))
            for i in range(graph.n)
        ),
        cols=graph.n,
    )


def laplacian(graph: Graph) -> IntMatrix:
    """The combinatorial Laplacian ``L = D - A``."""
    a = adjacency(graph)
    d = degree_matrix(graph)
    return IntMatrix(
        ((d[i, j] - a[i, j] for j in range(graph.n)) for i in range(graph.n)),
        cols=graph.n,
    )


def _positions(index: MultiIndex | t.Iterable[int], bound: int, axis: str) -> list[int]:
    positions = list(index) if isinstance(index, MultiIndex) else sorted(set(index))

    for p in positions:
        if not 0 <= p < bound:
            raise VertexRangeError(
                f"{axis} index {p} is out of range for size {bound}."
            )

    return positions


def submatrix(
    matrix: IntMatrix,
    rowset: MultiIndex | t.Iterable[int],
    colset: MultiIndex | t.Iterable[int],
) -> IntMatrix:
    """The submatrix with the given rows and columns, both kept in
    ascending order. Two empty index sets give the ``0 x 0`` matrix.
    """
    rows = _positions(rowset, matrix.rows, "Row")
    cols = _positions(colset, matrix.cols, "Column")
    return IntMatrix(((matrix[i, j] for j in cols) for i in rows), cols=len(cols))


def _two_k2() -> nx.Graph:
    return nx.disjoint_union(nx.complete_graph(2), nx.complete_graph(2))


#: Small named graphs available from the command line with
#: ``--builtin`` and checked by ``verify --corpus``.
BUILTIN_GRAPHS: dict[str, t.Callable[[], nx.Graph]] = {
    "k2": lambda: nx.complete_graph(2),
    "k3": lambda: nx.complete_graph(3),
    "k4": lambda: nx.complete_graph(4),
    "k5": lambda: nx.complete_graph(5),
    "c4": lambda: nx.cycle_graph(4),
    "c5": lambda: nx.cycle_graph(5),
    "c7": lambda: nx.cycle_graph(7),
    "p4": lambda: nx.path_graph(4),
    "2k2": _two_k2,
    "petersen": nx.petersen_graph,
}


def builtin_graph(name: str) -> Graph:
    try:
        factory = BUILTIN_GRAPHS[name]
    except KeyError:
        raise UnknownGraphError(
            f"Unknown built-in graph {name!r}. Choose from"
            f" {', '.join(sorted(BUILTIN_GRAPHS))}."
        ) from None

    return Graph.from_networkx(factory())
