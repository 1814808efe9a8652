"""Tensor, symmetric, exterior and divided power functors on free Z-modules.

Basis conventions are frozen; every matrix produced here is meaningless
without them. For Z^r with basis e_0 .. e_{r-1}:

  * Tensor^n: words (i_1, ..., i_n) over 0..r-1, lexicographic;
  * Sym^n and Div^n: weakly increasing tuples, lexicographic;
  * Ext^n: strictly increasing tuples, lexicographic.

Worked order for r = 2, n = 2 (write x = e_0, y = e_1):

  Tensor^2: xx, xy, yx, yy
  Sym^2:    x*x, x*y, y*y
  Div^2:    g2(x), g1(x)g1(y), g2(y)      (g_a = the a-th divided power)
  Ext^2:    x^y

Divided powers multiply by g_a(v) g_b(v) = C(a+b, a) g_{a+b}(v) and expand
along g_a(v + w) = sum_{i+j=a} g_i(v) g_j(w) with g_a(c v) = c^a g_a(v); no
other relations are used. All caches are write-once and safe for concurrent
readers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Sequence

from .errors import InputError
from .linalg import IntMatrix, det

__all__ = [
    "PowerKind",
    "FunctorKind",
    "basis",
    "basis_index",
    "dim",
    "induced_map",
    "sym_mult",
    "ext_mult",
    "div_contract",
    "norm_diagonal",
]


class PowerKind(Enum):
    TENSOR = "tensor"
    SYM = "sym"
    EXT = "ext"
    DIV = "div"


@dataclass(frozen=True)
class FunctorKind:
    """One of the four power functors together with its degree n >= 1."""

    kind: PowerKind
    degree: int

    def __post_init__(self) -> None:
        if not isinstance(self.kind, PowerKind):
            raise InputError(f"unknown functor kind {self.kind!r}")
        if self.degree < 1:
            raise InputError("functor degree must be at least 1")

    @classmethod
    def parse(cls, name: str, degree: int) -> "FunctorKind":
        try:
            kind = PowerKind(name.lower())
        except ValueError:
            raise InputError(f"unknown functor kind {name!r}") from None
        return cls(kind, degree)

    def __str__(self) -> str:
        return f"{self.kind.value}^{self.degree}"


@lru_cache(maxsize=None)
def basis(kind: PowerKind, n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """The ordered basis index tuples of kind^n applied to Z^r."""
    if n < 0 or r < 0:
        raise InputError("degree and rank must be nonnegative")
    if kind is PowerKind.TENSOR:
        return tuple(itertools.product(range(r), repeat=n))
    if kind is PowerKind.EXT:
        return tuple(itertools.combinations(range(r), n))
    return tuple(itertools.combinations_with_replacement(range(r), n))


@lru_cache(maxsize=None)
def _index_map(kind: PowerKind, n: int, r: int) -> dict[tuple[int, ...], int]:
    return {t: i for i, t in enumerate(basis(kind, n, r))}


def basis_index(kind: PowerKind, n: int, r: int, element: Sequence[int]) -> int:
    """Position of a basis index tuple in the frozen enumeration."""
    try:
        return _index_map(kind, n, r)[tuple(element)]
    except KeyError:
        raise InputError(f"{tuple(element)} is not a {kind.value}^{n} basis index over rank {r}") from None


def dim(f: FunctorKind, r: int) -> int:
    """Rank of f applied to Z^r."""
    if r < 0:
        raise InputError("rank must be nonnegative")
    n = f.degree
    if f.kind is PowerKind.TENSOR:
        return r**n
    if f.kind is PowerKind.EXT:
        return math.comb(r, n)
    return math.comb(r + n - 1, n)


def _exponents(mono: tuple[int, ...], r: int) -> tuple[int, ...]:
    exps = [0] * r
    for i in mono:
        exps[i] += 1
    return tuple(exps)


def _mono_of_exponents(exps: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for i, e in enumerate(exps):
        out.extend([i] * e)
    return tuple(out)


def sym_mult(v: Sequence[int], mono: Sequence[int]) -> list[int]:
    """Multiply a monomial of Sym^k(Z^r) by a vector of Z^r, r = len(v).

    Returns the coordinate column of the product in Sym^(k+1)(Z^r).
    """
    r = len(v)
    mono = tuple(mono)
    k = len(mono)
    target = _index_map(PowerKind.SYM, k + 1, r)
    out = [0] * len(target)
    for i, c in enumerate(v):
        if c:
            out[target[tuple(sorted(mono + (i,)))]] += c
    return out


def ext_mult(v: Sequence[int], wedge: Sequence[int]) -> list[int]:
    """Left-multiply a wedge of Ext^k(Z^r) by a vector: v ^ wedge.

    Returns the coordinate column in Ext^(k+1)(Z^r); the sign of each term
    is (-1)^(number of wedge indices below the inserted one).
    """
    r = len(v)
    wedge = tuple(wedge)
    k = len(wedge)
    target = _index_map(PowerKind.EXT, k + 1, r)
    out = [0] * len(target)
    for i, c in enumerate(v):
        if c and i not in wedge:
            below = sum(1 for j in wedge if j < i)
            merged = tuple(sorted(wedge + (i,)))
            if below % 2:
                out[target[merged]] -= c
            else:
                out[target[merged]] += c
    return out


def div_contract(mono: Sequence[int], j: int) -> Optional[tuple[int, ...]]:
    """Remove one occurrence of generator j from a divided power monomial.

    The contraction coefficient is exactly 1; None when j does not occur.
    """
    mono = tuple(mono)
    if j not in mono:
        return None
    pos = mono.index(j)
    return mono[:pos] + mono[pos + 1 :]


def norm_diagonal(n: int, r: int) -> IntMatrix:
    """Diagonal matrix of multinomial coefficients n!/(a_0! a_1! ...).

    Indexed by the Sym^n/Div^n basis; it intertwines the two functors, with
    Sym^n(m) * N = N * Div^n(m) for every integer matrix m.
    """
    n_fact = math.factorial(n)
    values = []
    for mono in basis(PowerKind.SYM, n, r):
        denom = 1
        for i in set(mono):
            denom *= math.factorial(mono.count(i))
        values.append(n_fact // denom)
    return IntMatrix.diagonal(values)


def _weak_compositions(total: int, slots: Sequence[int]):
    """Yield dicts slot -> positive part, over weak compositions of total."""
    if not slots:
        if total == 0:
            yield {}
        return
    first, rest = slots[0], slots[1:]
    for part in range(total + 1):
        for tail in _weak_compositions(total - part, rest):
            if part:
                out = dict(tail)
                out[first] = part
                yield out
            else:
                yield tail


def _div_of_column(a: int, coeffs: list[tuple[int, int]], r: int) -> dict[tuple[int, ...], int]:
    """Expand g_a(sum_i c_i e_i) as exponent-vector -> coefficient."""
    out: dict[tuple[int, ...], int] = {}
    slots = [i for i, _ in coeffs]
    values = dict(coeffs)
    for comp in _weak_compositions(a, slots):
        coeff = 1
        exps = [0] * r
        for i, part in comp.items():
            coeff *= values[i] ** part
            exps[i] = part
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
    return out


def _div_product(
    x: dict[tuple[int, ...], int], y: dict[tuple[int, ...], int]
) -> dict[tuple[int, ...], int]:
    """Product in the divided power algebra, on exponent-vector dicts."""
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            coeff = c1 * c2
            for a, b in zip(e1, e2):
                if a and b:
                    coeff *= math.comb(a + b, a)
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + coeff
    return out


def _tensor_induced(n: int, m: IntMatrix) -> IntMatrix:
    # Kronecker power; the blocked row/column order matches the word basis.
    out = [[1]]
    cols = 1
    for _ in range(n):
        out = [
            [x * y for x in row_o for y in row_m]
            for row_o in out
            for row_m in m.entries
        ]
        cols *= m.cols
    return IntMatrix.from_rows(out, cols=cols)


def _sym_induced(n: int, m: IntMatrix) -> IntMatrix:
    r_src, r_dst = m.cols, m.rows
    src = basis(PowerKind.SYM, n, r_src)
    dst_index = _index_map(PowerKind.SYM, n, r_dst)
    columns = []
    for mono in src:
        acc: dict[tuple[int, ...], int] = {(): 1}
        for j in mono:
            new: dict[tuple[int, ...], int] = {}
            for partial, c in acc.items():
                for i in range(r_dst):
                    coeff = m.entries[i][j]
                    if coeff:
                        key = tuple(sorted(partial + (i,)))
                        new[key] = new.get(key, 0) + c * coeff
            acc = new
        col = [0] * len(dst_index)
        for mono_dst, c in acc.items():
            col[dst_index[mono_dst]] = c
        columns.append(col)
    return IntMatrix.from_rows(
        [[columns[j][i] for j in range(len(src))] for i in range(len(dst_index))],
        cols=len(src),
    )


def _ext_induced(n: int, m: IntMatrix) -> IntMatrix:
    src = basis(PowerKind.EXT, n, m.cols)
    dst = basis(PowerKind.EXT, n, m.rows)
    grid = [
        [det(m.submatrix(rows_idx, cols_idx)) for cols_idx in src]
        for rows_idx in dst
    ]
    return IntMatrix.from_rows(grid, cols=len(src))


def _div_induced(n: int, m: IntMatrix) -> IntMatrix:
    r_src, r_dst = m.cols, m.rows
    src = basis(PowerKind.DIV, n, r_src)
    dst_index = _index_map(PowerKind.DIV, n, r_dst)
    sparse_cols = [
        [(i, m.entries[i][j]) for i in range(r_dst) if m.entries[i][j]]
        for j in range(r_src)
    ]
    columns = []
    for mono in src:
        acc: dict[tuple[int, ...], int] = {(0,) * r_dst: 1}
        for j, a in enumerate(_exponents(mono, r_src)):
            if a:
                acc = _div_product(acc, _div_of_column(a, sparse_cols[j], r_dst))
        col = [0] * len(dst_index)
        for exps, c in acc.items():
            if c:
                col[dst_index[_mono_of_exponents(exps)]] = c
        columns.append(col)
    return IntMatrix.from_rows(
        [[columns[j][i] for j in range(len(src))] for i in range(len(dst_index))],
        cols=len(src),
    )


def induced_map(f: FunctorKind, m: IntMatrix) -> IntMatrix:
    """The matrix of f applied to the linear map m, in the frozen bases.

    Functorial: induced_map(f, a @ b) == induced_map(f, a) @ induced_map(f, b),
    and the identity goes to the identity.
    """
    n = f.degree
    if f.kind is PowerKind.TENSOR:
        return _tensor_induced(n, m)
    if f.kind is PowerKind.SYM:
        return _sym_induced(n, m)
    if f.kind is PowerKind.EXT:
        return _ext_induced(n, m)
    return _div_induced(n, m)
