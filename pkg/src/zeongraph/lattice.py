"""Sums over the subset lattice of ``{0, ..., n - 1}``.

Subsets are bit masks. The lattice, or one grade of it, is cut into
disjoint contiguous spans that are summed independently and then
folded. Integer addition is exact, so the result does not depend on how
the lattice was cut or in which order the spans finish.
"""

from __future__ import annotations

import math
import typing as t
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import SizeLimitError

#: Default bound on ``n`` for sums with ``2 ** n`` terms.
DEFAULT_MAX_N = 24

Term = t.Callable[[int], int]


@dataclass(frozen=True)
class LatticeOptions:
    """How a subset-lattice sum is evaluated.

    :param workers: Worker processes. ``1`` sums in the calling process.
    :param chunks: Number of spans the lattice is cut into.
    :param allow_large: Lift the ``max_n`` guard.
    :param max_n: Largest ``n`` summed over all ``2 ** n`` subsets
        without ``allow_large``.
    """

    workers: int = 1
    chunks: int = 16
    allow_large: bool = False
    max_n: int = DEFAULT_MAX_N

    def check_size(self, n: int) -> None:
        """Refuse full lattices over more than :attr:`max_n` elements
        unless :attr:`allow_large` is set.
        """
        if n > self.max_n and not self.allow_large:
            raise SizeLimitError(
                f"Refusing to sum over 2^{n} subsets (limit is n={self.max_n})."
                " Pass allow_large to override."
            )


def chunk_ranges(total: int, chunks: int) -> list[range]:
    """Split ``range(total)`` into at most ``chunks`` disjoint contiguous
    ranges of nearly equal length that cover it exactly.
    """
    chunks = max(1, min(chunks, total))
    size, extra = divmod(total, chunks)
    rv = []
    start = 0

    for i in range(chunks):
        stop = start + size + (1 if i < extra else 0)
        rv.append(range(start, stop))
        start = stop

    return rv


def unrank_combination(n: int, k: int, rank: int) -> list[int]:
    """The ``k``-subset of ``range(n)`` at position ``rank`` of the
    :func:`itertools.combinations` order, as a sorted list.
    """
    rv: list[int] = []
    c = 0

    for i in range(k):
        while rank >= (count := math.comb(n - c - 1, k - i - 1)):
            rank -= count
            c += 1

        rv.append(c)
        c += 1

    return rv


def _grade_masks(n: int, k: int, span: range) -> t.Iterator[int]:
    if not span:
        return

    combination = unrank_combination(n, k, span.start)

    for _ in span:
        yield sum(1 << i for i in combination)
        i = k - 1

        while i >= 0 and combination[i] == n - k + i:
            i -= 1

        if i < 0:
            return

        combination[i] += 1

        for j in range(i + 1, k):
            combination[j] = combination[j - 1] + 1


def iter_masks(n: int, grade: int | None, span: range) -> t.Iterator[int]:
    """The masks at positions ``span`` of the lattice order. Without a
    grade that order is numeric, otherwise it is the lexicographic order
    of :func:`itertools.combinations`. A grade span starts at its first
    subset directly instead of stepping over the ones before it.
    """
    if grade is None:
        return iter(span)

    return _grade_masks(n, grade, span)


def _sum_span(term: Term, n: int, grade: int | None, span: range) -> int:
    return sum(term(mask) for mask in iter_masks(n, grade, span))


def lattice_sum(
    term: Term,
    n: int,
    *,
    grade: int | None = None,
    options: LatticeOptions | None = None,
) -> int:
    """Sum ``term(mask)`` over every subset mask of ``n`` elements, or
    only over the masks with ``grade`` elements.

    The size guard of ``options`` applies to full lattices only, a
    single grade has ``C(n, grade)`` terms.

    :param term: Maps a mask to an integer. With more than one worker it
        must be picklable, such as a module level function or a
        :func:`functools.partial` of one.
    :param grade: Restrict the sum to subsets of this size.
    :param options: Chunking, worker and size guard settings.
    """
    if options is None:
        options = LatticeOptions()

    if grade is None:
        options.check_size(n)
        total = 1 << n
    elif 0 <= grade <= n:
        total = math.comb(n, grade)
    else:
        return 0

    spans = chunk_ranges(total, options.chunks)

    if options.workers <= 1 or len(spans) == 1:
        return sum(_sum_span(term, n, grade, span) for span in spans)

    count = len(spans)

    with ProcessPoolExecutor(max_workers=options.workers) as executor:
        return sum(
            executor.map(_sum_span, [term] * count, [n] * count, [grade] * count, spans)
        )
