"""Exact determinant and permanent kernels on :class:`IntMatrix`.

Both kernels work on Python integers only. The ``0 x 0`` matrix has
determinant and permanent one.
"""

from __future__ import annotations

import itertools
import math

from .errors import ShapeError
from .errors import SizeLimitError
from .errors import VertexRangeError
from .graphs import IntMatrix
from .graphs import submatrix

#: Largest dimension accepted by the permutation-sum oracles.
NAIVE_MAX_DIMENSION = 10


def _require_square(matrix: IntMatrix, what: str) -> int:
    if not matrix.is_square:
        raise ShapeError(
            f"The {what} is only defined for square matrices, got"
            f" {matrix.rows}x{matrix.cols}."
        )

    return matrix.rows


def det(matrix: IntMatrix) -> int:
    """The determinant by Bareiss fraction-free elimination.

    Every division in the elimination is exact, so intermediate values
    stay integers bounded by minors of the input. A zero pivot is
    replaced by swapping in a lower row with a nonzero entry in the
    pivot column, flipping the sign. If no such row exists the
    determinant is zero.
    """
    n = _require_square(matrix, "determinant")

    if n == 0:
        return 1

    m = matrix.tolist()
    sign = 1
    previous = 1

    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0

        pivot = m[k][k]

        for i in range(k + 1, n):
            row = m[i]
            factor = row[k]

            for j in range(k + 1, n):
                row[j] = (pivot * row[j] - factor * m[k][j]) // previous

            row[k] = 0

        previous = pivot

    return sign * m[n - 1][n - 1]


def per(matrix: IntMatrix) -> int:
    """The permanent by Ryser's inclusion-exclusion formula.

    Column subsets are visited in Gray code order, so each step adds or
    removes one column from the running row sums and the product over
    rows costs ``O(k)``.
    """
    k = _require_square(matrix, "permanent")

    if k == 0:
        return 1

    rows = matrix.tolist()
    sums = [0] * k
    total = 0
    gray = 0

    for step in range(1, 1 << k):
        column = (step & -step).bit_length() - 1
        gray ^= 1 << column

        if gray >> column & 1:
            for i in range(k):
                sums[i] += rows[i][column]
        else:
            for i in range(k):
                sums[i] -= rows[i][column]

        product = math.prod(sums)

        if gray.bit_count() & 1:
            total -= product
        else:
            total += product

    # Ryser's sign is (-1)^(k - |S|).
    return -total if k & 1 else total


def _check_naive(matrix: IntMatrix, what: str) -> int:
    n = _require_square(matrix, what)

    if n > NAIVE_MAX_DIMENSION:
        raise SizeLimitError(
            f"The permutation-sum {what} is limited to dimension"
            f" {NAIVE_MAX_DIMENSION}, got {n}."
        )

    return n


def _permutation_sign(permutation: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(permutation)

    for start in range(len(permutation)):
        if seen[start]:
            continue

        length = 0
        i = start

        while not seen[i]:
            seen[i] = True
            i = permutation[i]
            length += 1

        if length % 2 == 0:
            sign = -sign

    return sign


def per_naive(matrix: IntMatrix) -> int:
    """The permanent as a plain sum over all permutations."""
    n = _check_naive(matrix, "permanent")
    return sum(
        math.prod(matrix[i, p[i]] for i in range(n))
        for p in itertools.permutations(range(n))
    )


def det_naive(matrix: IntMatrix) -> int:
    """The determinant as the signed sum over all permutations."""
    n = _check_naive(matrix, "determinant")
    return sum(
        _permutation_sign(p) * math.prod(matrix[i, p[i]] for i in range(n))
        for p in itertools.permutations(range(n))
    )


def cofactor(matrix: IntMatrix, c: int) -> int:
    """The determinant of ``matrix`` with row ``c`` and column ``c``
    removed.
    """
    n = _require_square(matrix, "cofactor")

    if not 0 <= c < n:
        raise VertexRangeError(f"Cofactor index {c} is out of range for size {n}.")

    keep = [i for i in range(n) if i != c]
    return det(submatrix(matrix, keep, keep))
