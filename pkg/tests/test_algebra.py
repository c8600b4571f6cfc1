import pytest

from qhalg.algebra import (Algebra, AlgebraError, DualityError, check_anti_automorphism,
                           corner_algebra, direct_product, ideal_dimension,
                           quotient_by_idempotent_ideal, semisimple_algebra)
from qhalg.exactlin import GF, QQ, Matrix
from qhalg.presentation_io import load_corpus
from qhalg.quiver import build_algebra


@pytest.fixture(scope="module")
def alg532():
    return build_algebra(load_corpus("example_5_3_2"))


def truncated_polynomial(field, n):
    """k[x]/(x^n) written with basis 1, x, ..., x^(n-1)."""
    table = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    return Algebra(field, [f"x^{i}" for i in range(n)], table, {"0": 0}, ["0"])


def test_semisimple_and_product():
    s = semisimple_algebra(QQ, ["a", "b"])
    assert s.dim == 2 and s.is_semisimple()
    t = truncated_polynomial(QQ, 3)
    assert not t.is_semisimple()
    assert t.loewy_length == 3
    with pytest.raises(ValueError):
        direct_product(s, semisimple_algebra(QQ, ["a"]))
    p = direct_product(s, semisimple_algebra(QQ, ["c"]))
    assert p.dim == 3 and p.weights == ["a", "b", "c"]


def test_peirce_cells_and_cartan(alg532):
    assert sum(alg532.cell_dim(r, c) for r in range(4) for c in range(4)) == 18
    cartan = alg532.cartan_matrix()
    assert sum(map(sum, cartan)) == 18
    # the duality makes the Cartan matrix symmetric
    assert cartan == [list(r) for r in zip(*cartan)]


def test_radical_dimension(alg532):
    assert sum(len(v) for v in alg532.jbasis.values()) == 18 - 4
    assert len(alg532.arrows) == 6


def test_opposite(alg532):
    op = alg532.opposite()
    assert op.dim == alg532.dim
    for (i, j), v in alg532.table.items():
        assert op.table[(j, i)] == v
    assert op.opposite().table == alg532.table


def test_idempotent_ideal_quotient_and_corner(alg532):
    w = alg532.weights
    q = quotient_by_idempotent_ideal(alg532, ["3"])
    assert q.dim == 18 - ideal_dimension(alg532, ["3"])
    assert q.weights == ["0", "1", "2"]
    c = corner_algebra(alg532, ["3"])
    assert c.dim == 1
    c23 = corner_algebra(alg532, ["2", "3"])
    assert c23.dim == sum(alg532.cell_dim(alg532.widx[a], alg532.widx[b])
                          for a in ("2", "3") for b in ("2", "3"))
    q0 = quotient_by_idempotent_ideal(alg532, ["0"])
    assert q0.dim == 18 - ideal_dimension(alg532, ["0"])
    assert q0.weights == [x for x in w if x != "0"]
    with pytest.raises(ValueError):
        corner_algebra(alg532, [])
    with pytest.raises(ValueError):
        quotient_by_idempotent_ideal(alg532, ["9"])


def test_non_associative_table_rejected():
    # x*x = y and x*y = 0 but y*x = y: (x x) x = y x = y while x (x x) = x y = 0
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1},
             (1, 1): {2: 1}, (2, 1): {2: 1}}
    with pytest.raises(AlgebraError):
        Algebra(QQ, ["e", "x", "y"], table, {"0": 0}, ["0"])


def test_non_local_corner_rejected():
    # k x k presented with a single idempotent is not basic-with-primitive-idempotents
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}}
    with pytest.raises(AlgebraError):
        Algebra(QQ, ["1", "f"], table, {"0": 0}, ["0"])


def test_duality_errors(alg532):
    ident = Matrix.identity(alg532.field, alg532.dim)
    # the identity is an anti-automorphism only for commutative algebras
    with pytest.raises(DualityError) as err:
        check_anti_automorphism(alg532, ident)
    assert err.value.identity == "anti-multiplicative"
    with pytest.raises(DualityError):
        check_anti_automorphism(alg532, Matrix.identity(alg532.field, 3))
    with pytest.raises(DualityError):
        check_anti_automorphism(alg532, Matrix.identity(GF(2), alg532.dim))


def test_truncated_polynomial_identity_duality():
    t = truncated_polynomial(GF(3), 4)
    sigma = check_anti_automorphism(t, Matrix.identity(GF(3), 4))
    assert sigma.apply({1: 1}) == {1: 1}
