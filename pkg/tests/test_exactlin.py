from fractions import Fraction

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from qhalg.exactlin import (GF, QQ, Echelon, FieldSpec, Matrix, SparseEchelon, kernel_basis, rref,
                            solve, sparse_nullspace, sparse_rank)


def small_matrices(max_side=6, lo=-4, hi=4):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


fields = st.sampled_from([QQ, GF(2), GF(3), GF(7)])


def test_field_coercion():
    assert QQ("-2/3") == mpq(-2, 3)
    assert QQ(Fraction(1, 2)) == mpq(1, 2)
    assert GF(5)("2/3") == 2 * pow(3, -1, 5) % 5
    assert GF(7)(-1) == 6
    with pytest.raises(ZeroDivisionError):
        GF(3)("1/3")
    with pytest.raises(ValueError):
        FieldSpec("prime", 4)
    with pytest.raises(ValueError):
        FieldSpec("reals")


def test_field_json_and_inverse():
    assert QQ.to_json() == "rationals"
    assert GF(2).to_json() == {"prime": 2}
    assert GF(11).inv(3) * 3 % 11 == 1
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_rref_known():
    m = Matrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    red, rank, piv = rref(m)
    assert rank == 2
    assert piv == [0, 1]
    assert red.tolist()[0] == [1, 0, 1]
    assert red.tolist()[1] == [0, 1, 1]


def test_solve_and_inconsistent():
    a = Matrix(QQ, [[1, 1], [1, -1]])
    assert solve(a, [3, 1]) == [2, 1]
    b = Matrix(QQ, [[1, 1], [2, 2]])
    assert solve(b, [1, 3]) is None
    with pytest.raises(ValueError):
        solve(a, [1])


@settings(max_examples=60, deadline=None)
@given(small_matrices(), fields)
def test_rank_nullity(rows, field):
    m = Matrix(field, rows)
    ker = kernel_basis(m)
    assert m.rank() + len(ker) == m.ncols
    for v in ker:
        prod = [sum(a * b for a, b in zip(r, v)) for r in m.tolist()]
        if field.characteristic:
            prod = [x % field.characteristic for x in prod]
        assert not any(prod)


@settings(max_examples=60, deadline=None)
@given(small_matrices(), fields)
def test_rref_idempotent(rows, field):
    red, rank, piv = rref(Matrix(field, rows))
    again, rank2, piv2 = rref(red)
    assert again == red and rank == rank2 and piv == piv2


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_matches_sympy(rows):
    assert Matrix(QQ, rows).rank() == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(small_matrices(), fields)
def test_sparse_and_dense_agree(rows, field):
    ncols = len(rows[0])
    eqs = [{j: field(x) for j, x in enumerate(r) if field(x)} for r in rows]
    basis, free = sparse_nullspace(eqs, ncols, field)
    dense = kernel_basis(Matrix(field, rows))
    assert len(basis) == len(dense) == ncols - sparse_rank(eqs, field)
    # both are the reduced kernel basis indexed by the same free columns
    assert basis == dense


@settings(max_examples=40, deadline=None)
@given(small_matrices(), fields)
def test_echelon_span(rows, field):
    n = len(rows[0])
    e = Echelon(field, n)
    for r in rows:
        e.add([field(x) for x in r])
    assert len(e) == Matrix(field, rows).rank()
    for r in rows:
        assert e.contains([field(x) for x in r])


def test_sparse_echelon_min_key_pivots():
    se = SparseEchelon(QQ)
    assert se.add({(0, 1): QQ(1), (1, 0): QQ(2)})
    assert not se.add({(0, 1): QQ(2), (1, 0): QQ(4)})
    assert se.contains({(0, 1): QQ(3), (1, 0): QQ(6)})
    assert len(se) == 1


def test_matrix_algebra():
    a = Matrix(GF(3), [[1, 2], [0, 1]])
    b = Matrix(GF(3), [[1, 1], [0, 1]])
    assert (a @ b).tolist() == [[1, 0], [0, 1]]
    assert a.T.tolist() == [[1, 0], [2, 1]]
    assert Matrix.identity(QQ, 2) == Matrix(QQ, [[1, 0], [0, 1]])
