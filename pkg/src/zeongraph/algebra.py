"""Exact arithmetic in the zeon algebra and the Euclidean Clifford
algebra on ``n`` generators.

Basis blades are stored as ``n``-bit masks, bit ``i`` standing for the
generator with index ``i``. Coefficients are Python integers, so every
result is exact.

The vertex vectors of the Clifford algebra are taken without the
``1/sqrt(2)`` normalization of the fermion pairs they come from. All
coefficients therefore stay integral and the top-grade coefficient of a
product of row vectors is exactly the determinant of the corresponding
column minor.
"""

from __future__ import annotations

import typing as t

from .errors import DimensionError

if t.TYPE_CHECKING:  # pragma: no cover
    import typing_extensions as te

#: Largest supported number of generators.
MAX_GENERATORS = 64

Flavor = t.Literal["zeon", "clifford"]


def set_bit_indices(bits: int) -> t.Iterator[int]:
    """Iterate over the indices of bits set to 1 in ``bits``, in
    ascending order.
    """
    index = 0

    while bits:
        if bits & 1:
            yield index

        bits >>= 1
        index += 1


def blade_sign(a: int, b: int) -> int:
    """Return the sign picked up when the generators of blade ``a``
    followed by the generators of blade ``b`` are brought into ascending
    order by adjacent transpositions.

    Every generator of ``a`` has to pass every generator of ``b`` with a
    smaller index. Shifting ``a`` right by ``s`` lines up each of its
    generators with the one ``s`` places below it, so summing the
    popcounts of the overlaps counts those inversions.
    """
    a >>= 1
    swaps = 0

    while a:
        swaps += (a & b).bit_count()
        a >>= 1

    return -1 if swaps & 1 else 1


def _check_dimension(n: int) -> None:
    if not 0 <= n <= MAX_GENERATORS:
        raise DimensionError(
            f"The number of generators must be between 0 and {MAX_GENERATORS},"
            f" got {n}."
        )


class MultiIndex:
    """A subset ``I`` of ``{0, ..., n - 1}`` naming the blade
    ``zeta_I`` or ``gamma_I``. Elements are always iterated in ascending
    order, which is the order blade signs are computed against.

    :param bits: The subset as a bit mask.
    :param n: The number of generators of the ambient algebra.
    """

    __slots__ = ("bits", "n")

    def __init__(self, bits: int, n: int) -> None:
        _check_dimension(n)

        if bits < 0 or bits >> n:
            raise DimensionError(
                f"Blade mask {bits:#b} has bits outside of the {n} generators."
            )

        self.bits = bits
        self.n = n

    @classmethod
    def from_indices(cls, indices: t.Iterable[int], n: int) -> te.Self:
        bits = 0

        for index in indices:
            if not 0 <= index < n:
                raise DimensionError(
                    f"Generator index {index} is out of range for n={n}."
                )

            bits |= 1 << index

        return cls(bits, n)

    @classmethod
    def empty(cls, n: int) -> te.Self:
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> te.Self:
        return cls((1 << n) - 1, n)

    def complement(self) -> MultiIndex:
        """The complement ``I'`` of this index in ``{0, ..., n - 1}``."""
        return MultiIndex(((1 << self.n) - 1) ^ self.bits, self.n)

    def isdisjoint(self, other: MultiIndex) -> bool:
        return not self.bits & other.bits

    def _same_n(self, other: MultiIndex) -> None:
        if self.n != other.n:
            raise DimensionError(
                f"Multi-indices live in different algebras (n={self.n}"
                f" and n={other.n})."
            )

    def __or__(self, other: MultiIndex) -> MultiIndex:
        self._same_n(other)
        return MultiIndex(self.bits | other.bits, self.n)

    def __and__(self, other: MultiIndex) -> MultiIndex:
        self._same_n(other)
        return MultiIndex(self.bits & other.bits, self.n)

    def __sub__(self, other: MultiIndex) -> MultiIndex:
        self._same_n(other)
        return MultiIndex(self.bits & ~other.bits, self.n)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> t.Iterator[int]:
        return set_bit_indices(self.bits)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.bits >> index & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiIndex):
            return NotImplemented

        return self.bits == other.bits and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.bits, self.n))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self} n={self.n}>"


BladeKey = t.Union[MultiIndex, int]
E = t.TypeVar("E", bound="Element")


class Element:
    """Base class of the sparse algebra elements. Stores a mapping from
    blade masks to nonzero integer coefficients. Subclasses define the
    product of two basis blades with :meth:`_blade_product`.

    Elements are immutable, every operation returns a new element.

    :param terms: Mapping of :class:`MultiIndex` (or raw bit masks) to
        coefficients. Zero coefficients are dropped.
    :param n: The number of generators.
    """

    __slots__ = ("n", "_terms")

    #: Name used for generators in :func:`str` output.
    symbol: t.ClassVar[str] = "e"
    flavor: t.ClassVar[str]

    def __init__(self, terms: t.Mapping[BladeKey, int] | None = None, n: int = 0):
        _check_dimension(n)
        clean: dict[int, int] = {}

        for key, value in (terms or {}).items():
            if isinstance(key, MultiIndex):
                if key.n != n:
                    raise DimensionError(
                        f"Blade {key} belongs to n={key.n}, not n={n}."
                    )

                bits = key.bits
            else:
                bits = MultiIndex(key, n).bits

            clean[bits] = clean.get(bits, 0) + value

        self.n = n
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _from_bits(cls, terms: dict[int, int], n: int) -> te.Self:
        rv = cls.__new__(cls)
        rv.n = n
        rv._terms = {k: v for k, v in terms.items() if v}
        return rv

    @classmethod
    def scalar(cls, value: int, n: int) -> te.Self:
        return cls({0: value}, n)

    @classmethod
    def generator(cls, index: int, n: int) -> te.Self:
        return cls({MultiIndex.from_indices((index,), n): 1}, n)

    @classmethod
    def blade(cls, index: MultiIndex, coefficient: int = 1) -> te.Self:
        return cls({index: coefficient}, index.n)

    def _blade_product(self, a: int, b: int) -> tuple[int, int] | None:
        """Return ``(sign, bits)`` for the product of blades ``a`` and
        ``b``, or ``None`` if the product vanishes.
        """
        raise NotImplementedError

    @property
    def terms(self) -> dict[MultiIndex, int]:
        """A copy of the nonzero terms keyed by :class:`MultiIndex`."""
        return {MultiIndex(bits, self.n): value for bits, value in self.items_bits()}

    def items_bits(self) -> list[tuple[int, int]]:
        """The nonzero ``(mask, coefficient)`` pairs ordered by grade, then
        by mask.
        """
        return sorted(
            self._terms.items(), key=lambda item: (item[0].bit_count(), item[0])
        )

    def coefficient(self, index: BladeKey) -> int:
        bits = index.bits if isinstance(index, MultiIndex) else index

        if bits < 0 or bits >> self.n:
            raise DimensionError(f"Blade {bits:#b} is outside of n={self.n}.")

        return self._terms.get(bits, 0)

    def grade(self, k: int) -> te.Self:
        return self._from_bits(
            {bits: v for bits, v in self._terms.items() if bits.bit_count() == k},
            self.n,
        )

    def grades(self) -> list[int]:
        return sorted({bits.bit_count() for bits in self._terms})

    def _check_same(self, other: Element) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"Can't combine {type(self).__name__} with {type(other).__name__}."
            )

        if other.n != self.n:
            raise DimensionError(
                f"Elements live in different algebras (n={self.n} and n={other.n})."
            )

    def multiply(self, other: te.Self) -> te.Self:
        self._check_same(other)
        out: dict[int, int] = {}
        product = self._blade_product

        for a, x in self._terms.items():
            for b, y in other._terms.items():
                rv = product(a, b)

                if rv is None:
                    continue

                sign, bits = rv
                out[bits] = out.get(bits, 0) + sign * x * y

        return self._from_bits(out, self.n)

    def __mul__(self, other: object) -> te.Self:
        if isinstance(other, int):
            terms = {k: v * other for k, v in self._terms.items()}
            return self._from_bits(terms, self.n)

        if isinstance(other, Element):
            return self.multiply(other)  # type: ignore[arg-type]

        return NotImplemented

    def __rmul__(self, other: object) -> te.Self:
        if isinstance(other, int):
            return self * other

        return NotImplemented

    def __add__(self, other: object) -> te.Self:
        if isinstance(other, int):
            other = self.scalar(other, self.n)

        if not isinstance(other, Element):
            return NotImplemented

        self._check_same(other)
        out = dict(self._terms)

        for bits, value in other._terms.items():
            out[bits] = out.get(bits, 0) + value

        return self._from_bits(out, self.n)

    __radd__ = __add__

    def __neg__(self) -> te.Self:
        return self * -1

    def __sub__(self, other: object) -> te.Self:
        if isinstance(other, (int, Element)):
            return self + (-other)

        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})

        if type(other) is not type(self):
            return NotImplemented

        return self.n == other.n and self._terms == other._terms  # type: ignore[attr-defined]

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        parts = []

        for bits, value in self.items_bits():
            blade = "*".join(f"{self.symbol}{i}" for i in set_bit_indices(bits))

            if not blade:
                parts.append(str(value))
            elif value == 1:
                parts.append(blade)
            elif value == -1:
                parts.append(f"-{blade}")
            else:
                parts.append(f"{value}*{blade}")

        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self} n={self.n}>"


class ZeonElement(Element):
    """An element of the zeon algebra. Generators commute and square
    to zero, so ``zeta_I * zeta_J`` is ``zeta_{I | J}`` when ``I`` and
    ``J`` are disjoint and zero otherwise.
    """

    __slots__ = ()
    symbol = "z"
    flavor = "zeon"

    def _blade_product(self, a: int, b: int) -> tuple[int, int] | None:
        if a & b:
            return None

        return 1, a | b


class CliffordElement(Element):
    """An element of the Euclidean Clifford algebra. Generators
    anticommute and square to one.
    """

    __slots__ = ()
    symbol = "g"
    flavor = "clifford"

    def _blade_product(self, a: int, b: int) -> tuple[int, int] | None:
        # Shared generators contract to +1 and drop out of the blade.
        return blade_sign(a, b), a ^ b


def zeon_mul(a: ZeonElement, b: ZeonElement) -> ZeonElement:
    """Multiply two zeon elements of the same dimension."""
    if not isinstance(a, ZeonElement) or not isinstance(b, ZeonElement):
        raise TypeError("zeon_mul expects two ZeonElement values.")

    return a.multiply(b)


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Multiply two Clifford elements of the same dimension."""
    if not isinstance(a, CliffordElement) or not isinstance(b, CliffordElement):
        raise TypeError("clifford_mul expects two CliffordElement values.")

    return a.multiply(b)


def grade_project(a: E, k: int) -> E:
    """Keep only the terms of grade ``k``. Grades outside ``0..n`` give
    the zero element.
    """
    return a.grade(k)


def coefficient(a: Element, index: MultiIndex) -> int:
    """The coefficient of the blade ``index`` in ``a``, zero if absent."""
    return a.coefficient(index)


@t.overload
def vector_from_row(
    row: t.Sequence[int], flavor: t.Literal["zeon"]
) -> ZeonElement: ...


@t.overload
def vector_from_row(
    row: t.Sequence[int], flavor: t.Literal["clifford"]
) -> CliffordElement: ...


def vector_from_row(row: t.Sequence[int], flavor: Flavor) -> Element:
    """Turn a matrix row into the grade-one element
    ``sum(row[j] * e_j)`` where ``e_j`` is ``zeta_j`` or ``gamma_j``.
    The dimension is the length of the row.
    """
    cls = element_class(flavor)
    _check_dimension(len(row))
    return cls._from_bits({1 << j: value for j, value in enumerate(row)}, len(row))


def element_class(flavor: str) -> type[Element]:
    if flavor == "zeon":
        return ZeonElement

    if flavor in ("clifford", "fermion"):
        return CliffordElement

    raise ValueError(f"Unknown algebra flavor {flavor!r}.")
