import random

import pytest

from exacthom.errors import InputError
from exacthom.linalg import IntMatrix, det
from exacthom.powers import (
    FunctorKind,
    PowerKind,
    basis,
    basis_index,
    dim,
    div_contract,
    ext_mult,
    induced_map,
    norm_diagonal,
    sym_mult,
)


def rand_matrix(rng, rows, cols, lo=-3, hi=3):
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def test_functor_kind_parse():
    f = FunctorKind.parse("sym", 2)
    assert f.kind is PowerKind.SYM and f.degree == 2
    assert str(f) == "sym^2"
    assert str(FunctorKind.parse("tensor", 3)) == "tensor^3"
    with pytest.raises(InputError):
        FunctorKind.parse("bogus", 2)
    with pytest.raises(InputError):
        FunctorKind(PowerKind.SYM, 0)


def test_basis_enumeration():
    assert basis(PowerKind.TENSOR, 2, 2) == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert basis(PowerKind.SYM, 2, 2) == ((0, 0), (0, 1), (1, 1))
    assert basis(PowerKind.EXT, 2, 2) == ((0, 1),)
    assert basis(PowerKind.DIV, 2, 2) == ((0, 0), (0, 1), (1, 1))
    assert basis(PowerKind.EXT, 3, 2) == ()
    assert basis(PowerKind.SYM, 0, 2) == ((),)
    assert basis_index(PowerKind.SYM, 2, 2, (0, 1)) == 1
    with pytest.raises(InputError):
        basis_index(PowerKind.SYM, 2, 2, (1, 0))  # not weakly increasing


def test_dim_matches_basis():
    for kind in PowerKind:
        for n in range(1, 5):
            for r in range(0, 5):
                f = FunctorKind(kind, n)
                assert dim(f, r) == len(basis(kind, n, r))


def test_sym_mult():
    # x * (x*y) = x^2*y, the second monomial of S^3 = (x^3, x^2y, xy^2, y^3)
    assert sym_mult([1, 0], (0, 1)) == [0, 1, 0, 0]
    # (2x + 3y) * y^2 = 2 x*y^2 + 3 y^3
    assert sym_mult([2, 3], (1, 1)) == [0, 0, 2, 3]


def test_ext_mult():
    # e1 ^ (e0 ^ e2) = -(e0 ^ e1 ^ e2): one wedge index below the insertion
    assert ext_mult([0, 1, 0], (0, 2)) == [-1]
    # e0 ^ (e0 ^ e2) = 0
    assert ext_mult([1, 0, 0], (0, 2)) == [0]
    # (e0 + e1) ^ e2 over rank 3: basis (0,1), (0,2), (1,2)
    assert ext_mult([1, 1, 0], (2,)) == [0, 1, 1]


def test_div_contract():
    assert div_contract((0, 0, 1), 0) == (0, 1)
    assert div_contract((0, 0, 1), 1) == (0, 0)
    assert div_contract((0, 0, 1), 2) is None


def test_induced_frozen_2x2():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert induced_map(FunctorKind(PowerKind.SYM, 2), m).entries == (
        (1, 2, 4),
        (6, 10, 16),
        (9, 12, 16),
    )
    assert induced_map(FunctorKind(PowerKind.DIV, 2), m).entries == (
        (1, 4, 4),
        (3, 10, 8),
        (9, 24, 16),
    )
    assert induced_map(FunctorKind(PowerKind.EXT, 2), m).entries == ((-2,),)
    assert induced_map(FunctorKind(PowerKind.TENSOR, 2), m).entries == (
        (1, 2, 2, 4),
        (3, 4, 6, 8),
        (3, 6, 4, 8),
        (9, 12, 12, 16),
    )


def test_norm_diagonal_frozen():
    assert norm_diagonal(2, 2).entries == ((1, 0, 0), (0, 2, 0), (0, 0, 1))
    assert [norm_diagonal(3, 2).entry(i, i) for i in range(4)] == [1, 3, 3, 1]


def test_induced_identity_and_shape():
    rng = random.Random("powers-shape")
    for kind in PowerKind:
        for n in (1, 2, 3):
            f = FunctorKind(kind, n)
            for r in (0, 1, 2, 3):
                assert induced_map(f, IntMatrix.identity(r)) == IntMatrix.identity(
                    dim(f, r)
                )
            m = rand_matrix(rng, 3, 2)
            out = induced_map(f, m)
            assert (out.rows, out.cols) == (dim(f, 3), dim(f, 2))


def test_functoriality_rectangular():
    rng = random.Random("powers-compose")
    for _ in range(25):
        n = rng.randint(1, 3)
        r1, r2, r3 = (rng.randint(1, 3) for _ in range(3))
        a = rand_matrix(rng, r1, r2)
        b = rand_matrix(rng, r2, r3)
        for kind in PowerKind:
            f = FunctorKind(kind, n)
            assert induced_map(f, a @ b) == induced_map(f, a) @ induced_map(f, b)


def test_top_exterior_power_is_det():
    rng = random.Random("powers-det")
    for _ in range(20):
        k = rng.randint(1, 4)
        m = rand_matrix(rng, k, k, -5, 5)
        assert induced_map(FunctorKind(PowerKind.EXT, k), m).entries == ((det(m),),)


def test_divided_symmetric_duality():
    rng = random.Random("powers-duality")
    for _ in range(25):
        n = rng.randint(1, 3)
        m = rand_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
        div = induced_map(FunctorKind(PowerKind.DIV, n), m)
        sym_t = induced_map(FunctorKind(PowerKind.SYM, n), m.transpose())
        assert div == sym_t.transpose()


def test_norm_naturality():
    rng = random.Random("powers-norm")
    for _ in range(25):
        n = rng.randint(1, 3)
        r1, r2 = rng.randint(1, 3), rng.randint(1, 3)
        m = rand_matrix(rng, r2, r1)
        sym = induced_map(FunctorKind(PowerKind.SYM, n), m)
        div = induced_map(FunctorKind(PowerKind.DIV, n), m)
        assert sym @ norm_diagonal(n, r1) == norm_diagonal(n, r2) @ div


def test_div_on_scaled_vector():
    # gamma_n(c*v) = c^n gamma_n(v): rank-1 matrix [[c]] induces [[c^n]]
    for c in (-2, 3):
        for n in (2, 3, 4):
            m = IntMatrix.from_rows([[c]])
            assert induced_map(FunctorKind(PowerKind.DIV, n), m).entries == ((c**n,),)
            # and Sym^n does the same on rank 1
            assert induced_map(FunctorKind(PowerKind.SYM, n), m).entries == ((c**n,),)


def test_div_addition_rule():
    # gamma_2(v + w) = gamma_2(v) + gamma_1(v)gamma_1(w) + gamma_2(w):
    # the column of [[1],[1]] under Div^2 is all ones
    m = IntMatrix.from_rows([[1], [1]])
    assert induced_map(FunctorKind(PowerKind.DIV, 2), m).entries == ((1,), (1,), (1,))
    # with a coefficient: v + 2w gives (1, 2, 4) against gamma_2(cx) = c^2
    m2 = IntMatrix.from_rows([[1], [2]])
    assert induced_map(FunctorKind(PowerKind.DIV, 2), m2).entries == ((1,), (2,), (4,))
    # symmetric square of the same column picks up the cross coefficient 2
    assert induced_map(FunctorKind(PowerKind.SYM, 2), m).entries == ((1,), (2,), (1,))
