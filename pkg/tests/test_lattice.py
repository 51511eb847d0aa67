import functools
import itertools
import math

import pytest

from zeongraph.errors import SizeLimitError
from zeongraph.lattice import chunk_ranges
from zeongraph.lattice import iter_masks
from zeongraph.lattice import lattice_sum
from zeongraph.lattice import LatticeOptions
from zeongraph.lattice import unrank_combination


def weight(scale, mask):
    return scale * mask * mask - mask.bit_count()


def one(mask):
    return 1


@pytest.mark.parametrize(
    ("total", "chunks"), [(0, 4), (1, 16), (10, 3), (64, 16), (7, 9)]
)
def test_chunk_ranges_cover(total, chunks):
    spans = chunk_ranges(total, chunks)
    assert [i for span in spans for i in span] == list(range(total))
    assert len(spans) <= max(1, chunks)
    lengths = [len(span) for span in spans]
    assert max(lengths) - min(lengths) <= 1


def test_iter_masks_grade_order():
    span = range(math.comb(5, 2))
    masks = list(iter_masks(5, 2, span))
    assert masks == [
        sum(1 << i for i in c) for c in itertools.combinations(range(5), 2)
    ]
    assert list(iter_masks(5, 2, range(3, 5))) == masks[3:5]
    assert list(iter_masks(3, None, range(8))) == list(range(8))


@pytest.mark.parametrize(("n", "k"), [(7, 0), (7, 1), (7, 3), (8, 4), (6, 6)])
def test_unrank_combination(n, k):
    for rank, c in enumerate(itertools.combinations(range(n), k)):
        assert unrank_combination(n, k, rank) == list(c)


@pytest.mark.parametrize(("n", "k"), [(7, 0), (7, 3), (9, 4), (6, 6)])
def test_iter_masks_every_span(n, k):
    masks = [sum(1 << i for i in c) for c in itertools.combinations(range(n), k)]
    total = len(masks)

    for start in range(total + 1):
        for stop in range(start, total + 1):
            assert list(iter_masks(n, k, range(start, stop))) == masks[start:stop]


@pytest.mark.parametrize("chunks", [1, 2, 5, 16, 100])
@pytest.mark.parametrize("grade", [None, 0, 3, 8])
def test_chunking_does_not_change_sum(chunks, grade):
    term = functools.partial(weight, 3)
    n = 8
    masks = [m for m in range(1 << n) if grade is None or m.bit_count() == grade]
    expected = sum(term(mask) for mask in masks)
    options = LatticeOptions(chunks=chunks)
    assert lattice_sum(term, n, grade=grade, options=options) == expected


def test_workers_give_same_sum():
    term = functools.partial(weight, 5)
    options = LatticeOptions(workers=2, chunks=7)
    assert lattice_sum(term, 9, options=options) == lattice_sum(term, 9)
    assert lattice_sum(term, 9, grade=4, options=options) == lattice_sum(
        term, 9, grade=4
    )


def test_grade_out_of_range():
    assert lattice_sum(one, 4, grade=5) == 0
    assert lattice_sum(one, 4, grade=-1) == 0


def test_empty_lattice():
    assert lattice_sum(functools.partial(weight, 1), 0) == 0
    assert lattice_sum(one, 0) == 1


def test_size_guard():
    with pytest.raises(SizeLimitError, match="2\\^25"):
        lattice_sum(one, 25)

    with pytest.raises(SizeLimitError):
        lattice_sum(one, 5, options=LatticeOptions(max_n=4))

    options = LatticeOptions(max_n=4, allow_large=True)
    assert lattice_sum(one, 5, options=options) == 32
    assert lattice_sum(one, 25, grade=1) == 25
