from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BT_D2_ROWS, BT_FORMS, OCTA_F1, OCTA_F2
from formality.linalg import Matrix, as_fraction, column_span_equal, kernel_basis, rank, rref
from oracles import minor_rank

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    # sparse-ish entries so that rank deficiency actually happens
    entry = st.one_of(st.just(Fraction(0)), small_fractions)
    return Matrix(r, c, draw(st.lists(entry, min_size=r * c, max_size=r * c)))


def test_identity_is_its_own_rref():
    m = Matrix.identity(3)
    reduced, pivots = rref(m)
    assert reduced == m
    assert pivots == (0, 1, 2)


def test_single_row():
    m = Matrix.from_rows([[1, 1, 1]])
    reduced, pivots = rref(m)
    assert reduced == m
    assert pivots == (0,)


def test_printed_d2_has_six_pivots():
    _, pivots = rref(Matrix.from_rows(BT_D2_ROWS))
    assert len(pivots) == 6


def test_zero_matrix_rank():
    assert rank(Matrix.zeros(4, 4)) == 0


def test_empty_shapes():
    assert rank(Matrix.zeros(0, 3)) == 0
    assert rank(Matrix.zeros(3, 0)) == 0
    assert kernel_basis(Matrix.zeros(0, 3)) == Matrix.identity(3)
    assert kernel_basis(Matrix.zeros(3, 0)).shape == (0, 0)


def test_normal_matrix_rank_and_kernel():
    phi = Matrix.from_columns(BT_FORMS, 4)
    assert phi.shape == (4, 10)
    assert rank(phi) == 4
    assert kernel_basis(phi).shape == (10, 6)


def test_octahedron_printed_ranks():
    assert rank(Matrix.from_rows(OCTA_F1)) == 5
    assert kernel_basis(Matrix.from_rows(OCTA_F2)).shape == (8, 1)


def test_identity_kernel_is_empty():
    assert kernel_basis(Matrix.identity(3)).shape == (3, 0)


def test_kernel_basis_convention():
    # free variables are columns 1 and 3; each gets its own unit column
    m = Matrix.from_rows([[1, 2, 0, 3], [0, 0, 1, 4]])
    k = kernel_basis(m)
    assert k.columns() == [(-2, 1, 0, 0), (-3, 0, -4, 1)]


def test_matrix_is_immutable():
    m = Matrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3


def test_entry_count_checked():
    with pytest.raises(ValueError):
        Matrix(2, 2, [1, 2, 3])


def test_floats_refused():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("-2/6") == Fraction(-1, 3)


def test_column_span_equal():
    a = Matrix.from_columns([(1, 0, 1), (0, 1, 1)], 3)
    b = Matrix.from_columns([(1, 1, 2), (1, -1, 0), (2, 0, 2)], 3)
    assert column_span_equal(a, b)
    assert not column_span_equal(a, Matrix.from_columns([(1, 0, 0)], 3))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_is_annihilated(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_idempotent_and_pivots(m):
    reduced, pivots = rref(m)
    again, pivots2 = rref(reduced)
    assert again == reduced
    assert pivots == pivots2
    assert list(pivots) == sorted(set(pivots))
    assert len(pivots) == rank(m)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(m):
    rows = m.to_rows()
    expected = minor_rank(rows) if m.rows and m.cols else 0
    assert rank(m) == expected
    assert rank(m.transpose()) == expected
