from itertools import combinations
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from conftest import int_matrices
from quillenkit.config import override_entry_cap
from quillenkit.errors import SizeCapError
from quillenkit.linalg import (IntMatrix, bareiss_det, image_basis, in_lattice,
                               kernel_basis, rank, smith_decomposition,
                               smith_normal_form, solve_in_lattice)


def determinantal_factors(m: IntMatrix) -> list[int]:
    """Invariant factors from gcds of k x k minors (sympy determinants)."""
    a = sympy.Matrix(m.tolist()) if m.rows and m.cols else None
    out, prev = [], 1
    for k in range(1, min(m.shape) + 1):
        g = 0
        for rs in combinations(range(m.rows), k):
            for cs in combinations(range(m.cols), k):
                g = gcd(g, int(a.extract(list(rs), list(cs)).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def is_unimodular(m: IntMatrix) -> bool:
    return m.rows == 0 or abs(bareiss_det(m.tolist())) == 1


def test_snf_known():
    m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    u, d, v = smith_normal_form(m)
    assert [d[i, i] for i in range(3)] == [2, 6, 12]
    assert u @ m @ v == d


def test_snf_zero_and_empty():
    for shape in [(0, 0), (0, 3), (3, 0), (2, 2)]:
        m = IntMatrix.zeros(*shape)
        sf = smith_decomposition(m)
        assert sf.rank == 0
        assert sf.u @ m @ sf.v == sf.d


def test_snf_promotes_before_overflow():
    big = 2 ** 40
    m = IntMatrix.from_rows([[big, 1], [1, big]])
    sf = smith_decomposition(m)
    assert sf.diagonal == [1, big * big - 1]
    assert sf.u @ m @ sf.v == sf.d


@settings(max_examples=150, deadline=None)
@given(int_matrices(max_rows=4, max_cols=4))
def test_snf_matches_minor_oracle(m):
    sf = smith_decomposition(m)
    assert [abs(x) for x in sf.diagonal] == determinantal_factors(m)
    assert all(x > 0 for x in sf.diagonal)


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_snf_transforms_are_unimodular(m):
    sf = smith_decomposition(m)
    assert sf.u @ m @ sf.v == sf.d
    assert is_unimodular(sf.u) and is_unimodular(sf.v)
    assert sf.u @ sf.u_inv == IntMatrix.identity(m.rows)
    assert sf.v @ sf.v_inv == IntMatrix.identity(m.cols)
    diag = sf.diagonal
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_kernel_and_image(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert k.cols == m.cols - rank(m)
    img = image_basis(m)
    assert img.cols == rank(m)
    if m.cols and m.rows:
        assert in_lattice(img, m) and in_lattice(m, img)


def test_solve_in_lattice():
    b = IntMatrix.from_rows([[2, 0], [0, 3], [0, 0]])
    x = solve_in_lattice(b, IntMatrix.from_rows([[4], [-3], [0]]))
    assert x.tolist() == [[2], [-1]]
    assert not in_lattice(b, IntMatrix.from_rows([[1], [0], [0]]))
    assert not in_lattice(b, IntMatrix.from_rows([[0], [0], [1]]))
    # rank-deficient basis
    dup = IntMatrix.from_rows([[1, 2], [1, 2]])
    x = solve_in_lattice(dup, IntMatrix.from_rows([[3], [3]]))
    assert dup @ x == IntMatrix.from_rows([[3], [3]])


def test_entry_cap():
    with override_entry_cap(10):
        with pytest.raises(SizeCapError):
            IntMatrix.zeros(4, 4)
        IntMatrix.zeros(2, 5)


def test_entry_cap_env(monkeypatch):
    from quillenkit.config import entry_cap
    monkeypatch.setenv("QK_ENTRY_CAP", "123")
    assert entry_cap() == 123


def test_bareiss_det_matches_numpy():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = rng.integers(-5, 6, size=(5, 5))
        assert bareiss_det(a.tolist()) == round(np.linalg.det(a))


def test_snf_tracks_object_input():
    big = 2 ** 62
    m = IntMatrix(np.array([[big, 3], [6, 9]], dtype=object))
    sf = smith_decomposition(m)
    assert sf.u @ m @ sf.v == sf.d
    assert is_unimodular(sf.u) and is_unimodular(sf.v)
