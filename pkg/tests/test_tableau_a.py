"""Type-A tableaux: standardness, content, and exhaustive enumeration."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.tableau_a import (
    TableauA,
    canonical_rows,
    content_vector,
    count_standard,
    enumerate_standard,
)
from artifact.weights import ShapeA, instance_by_label, shape_from_weight

from oracles import grid_standard, naive_standard_tableaux


class TestTableauBasics:
    def test_rows_are_validated(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            TableauA(4, ((1, 1),))
        with pytest.raises(ValueError, match="range"):
            TableauA(4, ((1, 5),))
        with pytest.raises(ValueError, match="empty"):
            TableauA(4, ((),))

    def test_canonical_orders_rows_longest_first(self):
        t = TableauA(5, ((3,), (1, 2), (1, 4))).canonical()
        assert t.rows == ((1, 2), (1, 4), (3,))

    def test_content_counts_every_entry(self):
        assert TableauA(4, ((1, 2), (3, 4))).content() == (1, 1, 1, 1)
        assert TableauA(4, ((1, 2), (1, 2), (3, 4), (3, 4))).content() == (2, 2, 2, 2)
        t = TableauA(6, ((1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)))
        assert t.content() == (2, 2, 2, 2, 2, 2)

    def test_t_invariance_means_uniform_content(self):
        assert TableauA(4, ((1, 2), (3, 4))).is_t_invariant()
        assert not TableauA(4, ((1, 2), (1, 3))).is_t_invariant()
        assert TableauA(6, ((1, 3, 5), (2, 4, 6))).is_t_invariant()

    def test_standardness_on_the_canonical_arrangement(self):
        assert TableauA(4, ((1, 2), (3, 4))).is_standard()
        assert TableauA(4, ((1, 3), (2, 4))).is_standard()
        # second column reads 4 over 3
        assert not TableauA(4, ((1, 4), (2, 3))).is_standard()
        # the empty tableau is standard and invariant
        assert TableauA(4, ()).is_standard()
        assert TableauA(4, ()).is_t_invariant()

    def test_shape_columns(self):
        t = TableauA(4, ((1, 2), (1, 3), (4,)))
        assert t.shape_columns() == (3, 2)


@settings(max_examples=300)
@given(st.data())
def test_standardness_agrees_with_grid_oracle(data):
    n = data.draw(st.integers(3, 6))
    pool = list(itertools.chain.from_iterable(
        itertools.combinations(range(1, n + 1), r) for r in (1, 2, 3)
    ))
    rows = tuple(data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=5)))
    t = TableauA(n, rows)
    assert t.is_standard() == grid_standard(canonical_rows(rows))


class TestContentVector:
    def test_uniform_content_splits_boxes_evenly(self):
        assert content_vector((4, 4), 4, "uniform") == (2, 2, 2, 2)

    def test_uniform_needs_divisible_box_count(self):
        with pytest.raises(ValueError, match="uniformly"):
            content_vector((3, 3), 4, "uniform")

    def test_explicit_content_is_checked(self):
        assert content_vector((2, 2), 4, (2, 1, 1, 0)) == (2, 1, 1, 0)
        with pytest.raises(ValueError, match="total"):
            content_vector((2, 2), 4, (1, 1, 1, 0))
        with pytest.raises(ValueError, match="entries"):
            content_vector((2, 2), 4, (2, 2))
        with pytest.raises(ValueError, match="negative"):
            content_vector((2, 2), 4, (3, 2, -1, 0))


class TestEnumeration:
    def test_empty_shape_yields_the_empty_tableau(self):
        out = list(enumerate_standard(ShapeA(()), 4))
        assert len(out) == 1
        assert out[0].rows == ()

    def test_two_row_three_column_basis(self):
        shape = shape_from_weight(instance_by_label("g36"), 1)
        out = [t.rows for t in enumerate_standard(shape, 6, "uniform")]
        assert out == [
            ((1, 2, 3), (4, 5, 6)),
            ((1, 2, 4), (3, 5, 6)),
            ((1, 2, 5), (3, 4, 6)),
            ((1, 3, 4), (2, 5, 6)),
            ((1, 3, 5), (2, 4, 6)),
        ]

    @pytest.mark.parametrize(
        "cols, n, expected",
        [
            ((4, 4), 4, 3),      # smallest Grassmannian unit
            ((8, 8), 4, 5),
            ((12, 12), 4, 7),
            ((5, 5), 5, 6),
            ((6, 6), 6, 15),
            ((6, 3), 3, 4),      # flag unit: three pairs over three singles
            ((12, 6), 3, 7),
            ((18, 9), 3, 10),
        ],
    )
    def test_frozen_uniform_counts(self, cols, n, expected):
        assert count_standard(ShapeA(cols), n, "uniform") == expected

    @pytest.mark.parametrize(
        "cols, n",
        [
            ((4, 4), 4),
            ((2, 2), 4),
            ((5, 5), 5),
            ((2, 2, 2), 6),
            ((4, 4, 4), 6),
            ((6, 3), 3),
            ((6, 6), 6),
        ],
    )
    def test_matches_naive_filter_oracle(self, cols, n):
        got = {t.rows for t in enumerate_standard(ShapeA(cols), n, "uniform")}
        assert got == naive_standard_tableaux(cols, n)

    def test_explicit_content_matches_oracle(self):
        cols, n, content = (2, 2), 4, (2, 1, 1, 0)
        got = {t.rows for t in enumerate_standard(ShapeA(cols), n, content)}
        assert got == naive_standard_tableaux(cols, n, content)

    def test_content_total_must_match_boxes(self):
        with pytest.raises(ValueError):
            list(enumerate_standard(ShapeA((2, 2)), 4, (1, 1, 1, 0)))

    def test_no_duplicates_and_every_output_standard(self):
        shape = ShapeA((6, 3))
        seen = set()
        for t in enumerate_standard(shape, 3, "uniform"):
            assert t.is_standard()
            assert t.is_t_invariant()
            assert t.shape_columns() == (6, 3)
            assert t.rows not in seen
            seen.add(t.rows)

    def test_deterministic_order(self):
        shape = ShapeA((4, 4))
        first = [t.rows for t in enumerate_standard(shape, 4, "uniform")]
        second = [t.rows for t in enumerate_standard(shape, 4, "uniform")]
        assert first == second
        assert first == sorted(first)

    @pytest.mark.parametrize("r, n", [(1, 4), (2, 5), (2, 6), (3, 6)])
    def test_complementary_grassmannians_count_equal(self, r, n):
        # dimension symmetry between r columns and n-r columns
        for k in (1, 2):
            left = shape_from_weight(instance_by_label(f"g{r}{n}"), k)
            right = shape_from_weight(instance_by_label(f"g{n - r}{n}"), k)
            assert count_standard(left, n, "uniform") == count_standard(
                right, n, "uniform"
            )
