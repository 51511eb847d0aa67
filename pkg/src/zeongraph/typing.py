from __future__ import annotations

import typing as t

if t.TYPE_CHECKING:  # pragma: no cover
    from .graphs import Graph
    from .lattice import LatticeOptions

#: The quantities counted by the built-in methods.
Quantity = t.Literal["spanning-trees", "hamiltonian", "cycle-matching"]


class CountMethod(t.Protocol):
    """A registered counting method. ``level`` is ``None`` unless the
    caller asked for a specific level, ``anchor`` is always resolved to
    a vertex id. Methods that don't use them ignore them.
    """

    def __call__(
        self,
        graph: Graph,
        *,
        level: int | None,
        anchor: int,
        options: LatticeOptions,
    ) -> int: ...
