import numpy as np
import pytest

import gen
from quillenkit.abelian import FGAbelianGroup
from quillenkit.builtins import builtin_group
from quillenkit.chains import ChainComplexZ, all_homology, chain_homology
from quillenkit.errors import DegreeError, ValidationError
from quillenkit.groups import trivial_rep
from quillenkit.linalg import IntMatrix
from quillenkit.simplicial import (SimplicialZModule, alternating_sum_complex,
                                   bar_construction, constant, dold_kan,
                                   moore_complex, simplicial_homotopy,
                                   simplicial_pi, truncate)

Z = FGAbelianGroup(1, ())


def test_chain_homology_rp2():
    # cellular chains of RP^2: Z <-0- Z <-2- Z
    c = ChainComplexZ.from_lists([1, 1, 1], [[[0]], [[2]]])
    assert [str(h) for h in all_homology(c)] == ["Z", "Z/2", "0"]
    assert chain_homology(c, 1) == FGAbelianGroup(0, (2,))
    assert c.euler_characteristic() == 1


def test_chain_complex_rejects_nonzero_square():
    with pytest.raises(ValidationError):
        ChainComplexZ.from_lists([1, 1, 1], [[[1]], [[1]]])


def test_degree_out_of_range():
    c = ChainComplexZ.from_lists([1], [])
    with pytest.raises(DegreeError):
        chain_homology(c, 1)


def test_constant_homotopy():
    x = constant(3, 3)
    assert simplicial_homotopy(x) == [FGAbelianGroup(3, ()), FGAbelianGroup(0, ()),
                                      FGAbelianGroup(0, ())]
    with pytest.raises(DegreeError):
        simplicial_pi(x, 3)


def test_dold_kan_recovers_complex():
    rng = np.random.default_rng(11)
    for _ in range(30):
        top = int(rng.integers(1, 4))
        c = gen.random_chain_complex(rng, top)
        x = dold_kan(c)
        n = moore_complex(x)
        assert n.ranks == c.ranks
        assert all_homology(n) == all_homology(c)


def test_bad_face_identity_reported():
    x = constant(1, 2)
    faces = list(x.faces)
    faces[2] = (IntMatrix.from_rows([[2]]),) + faces[2][1:]
    with pytest.raises(ValidationError, match="simplicial identity"):
        SimplicialZModule(x.levels, faces, x.degeneracies)


def test_shape_mismatch_reported():
    with pytest.raises(ValidationError):
        SimplicialZModule((1, 2), ((), (IntMatrix.identity(1),) * 2),
                          ((IntMatrix.identity(1),),))


def test_bar_construction_gives_group_homology():
    # the simplicial bar construction of C2 with Z coefficients
    g = builtin_group("C2")
    x = bar_construction(g, trivial_rep(g), 3)
    assert [str(h) for h in simplicial_homotopy(x)] == ["Z", "Z/2", "0"]


def test_moore_vs_alternating_random():
    rng = np.random.default_rng(3)
    for _ in range(40):
        x = gen.random_simplicial(rng)
        if x.top == 0:
            continue
        # the top level has no outgoing boundary, so only 0..top-1 is meaningful
        upto = x.top - 1
        assert all_homology(moore_complex(x), upto) == \
            all_homology(alternating_sum_complex(x), upto)


def test_truncate_bounds():
    with pytest.raises(DegreeError):
        truncate(constant(1, 1), 2)
