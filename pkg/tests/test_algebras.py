from itertools import product

import numpy as np
import pytest

from quillenkit.algebras import (FinDimAlgebra, central_quotient, commutator_quotient,
                                 free_bimodule, hochschild_homology, is_reduced,
                                 matrix_algebra, mult_kernel_bimodule, nilradical,
                                 product_of_fields, regular_bimodule,
                                 square_zero_check, truncated_tensor_algebra,
                                 upper_triangular)
from quillenkit.builtins import ALGEBRA_BATTERY, builtin_algebra
from quillenkit.errors import ValidationError
from quillenkit.fields import Field

Q, F2, F3 = Field(0), Field(2), Field(3)


def hh(name, top=3, coeffs=regular_bimodule, **kw):
    a, _ = builtin_algebra(name)
    return hochschild_homology(a, coeffs(a), top, **kw)


# dim HH_n(A; A), n = 0..3; standard values
HH_KNOWN = {
    "Q": [1, 0, 0, 0],
    "QxQ": [2, 0, 0, 0],
    "M2(Q)": [1, 0, 0, 0],
    "upper-triangular-2": [2, 0, 0, 0],
    "dual-numbers-Q": [2, 1, 1, 1],
    "dual-numbers-F2": [2, 2, 2, 2],
    "Q[x]/(x^3)": [3, 2, 2, 2],
}


@pytest.mark.parametrize("name", sorted(HH_KNOWN))
def test_hochschild_known(name):
    top = 2 if name == "M2(Q)" else 3
    assert hh(name, top) == HH_KNOWN[name][:top + 1]


@pytest.mark.parametrize("name", ["QxQ", "dual-numbers-Q", "dual-numbers-F2",
                                  "upper-triangular-2"])
def test_hochschild_normalized_agrees(name):
    assert hh(name, 3, normalized=True) == hh(name, 3)


def test_truncated_polynomial_char_p():
    # k[x]/(x^3) over F_3: x^3 = 0 has derivative 3x^2 = 0, so HH_n = 3 for all n
    from quillenkit.rings import CommRingPres
    r = CommRingPres(F3, ["x"], ["x^3"])
    a = r.to_algebra()
    assert hochschild_homology(a, regular_bimodule(a), 3) == [3, 3, 3, 3]


def test_hh0_is_commutator_quotient_for_regular():
    for name in ALGEBRA_BATTERY:
        a, _ = builtin_algebra(name)
        assert hh(name, 0)[0] == a.dim - _commutator_span_dim(a)


def _commutator_span_dim(a):
    f = a.field
    rows = [a.multiply(a.basis_vector(i), a.basis_vector(j))
            - a.multiply(a.basis_vector(j), a.basis_vector(i))
            for i in range(a.dim) for j in range(a.dim)]
    return f.rank(np.array(rows, dtype=object).T) if rows else 0


def test_mult_kernel_dimension():
    a, _ = builtin_algebra("M2(Q)")
    assert mult_kernel_bimodule(a).dim == 12
    assert free_bimodule(a).dim == 16


def test_central_quotient():
    a, _ = builtin_algebra("M2(Q)")
    assert central_quotient(regular_bimodule(a)).dim == 0
    b, _ = builtin_algebra("dual-numbers-Q")
    assert central_quotient(regular_bimodule(b)).dim == 2


def test_commutator_quotient_dims():
    assert commutator_quotient(matrix_algebra(2, Q)).dim == 0
    assert commutator_quotient(upper_triangular(Q)).dim == 2
    t, _ = truncated_tensor_algebra(2, 2, Q)
    assert t.dim == 7
    assert commutator_quotient(t).dim == 6


def test_rejects_nonassociative():
    # e1 e1 = e2, e2 e1 = e1, e1 e2 = 0: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
    mul = np.zeros((3, 3, 3), dtype=int)
    for i in range(3):
        mul[0, i, i] = mul[i, 0, i] = 1
    mul[1, 1, 2] = 1
    mul[2, 1, 1] = 1
    with pytest.raises(ValidationError):
        FinDimAlgebra(Q, 3, mul.tolist(), [1, 0, 0])


def test_rejects_bad_unit():
    with pytest.raises(ValidationError):
        FinDimAlgebra(Q, 1, [[[1]]], [2])


def brute_nilradical_dim_f2(a: FinDimAlgebra) -> int:
    """Enumerate all elements of a small F_2-algebra and count nilpotents."""
    count = 0
    for coords in product((0, 1), repeat=a.dim):
        x = F2.array(list(coords))
        p = x
        for _ in range(a.dim + 1):
            p = a.multiply(p, x)
        count += F2.is_zero(p)
    return int(np.log2(count))


def _f2_algebras():
    from quillenkit.rings import CommRingPres
    yield CommRingPres(F2, ["x"], ["x^2"]).to_algebra()
    yield CommRingPres(F2, ["x"], ["x^2 + x"]).to_algebra()
    yield CommRingPres(F2, ["x"], ["x^3 + x^2"]).to_algebra()
    yield CommRingPres(F2, ["x"], ["x^4"]).to_algebra()
    yield CommRingPres(F2, ["x", "y"], ["x^2", "y^2"]).to_algebra()
    yield product_of_fields(3, F2)


@pytest.mark.parametrize("alg", list(_f2_algebras()), ids=lambda a: str(a.dim))
def test_nilradical_matches_enumeration(alg):
    assert nilradical(alg).shape[1] == brute_nilradical_dim_f2(alg)


def test_nilradical_char0():
    a, _ = builtin_algebra("Q[x]/(x^3)")
    assert nilradical(a).shape[1] == 2
    assert is_reduced(builtin_algebra("QxQ")[0])
    assert not is_reduced(builtin_algebra("dual-numbers-Q")[0])


def test_square_zero_check():
    a, _ = builtin_algebra("QxQ")
    ext, check = square_zero_check(a, regular_bimodule(a))
    assert ext.dim == 4
    assert check.equals_module and not check.reduced
