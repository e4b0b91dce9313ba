import pytest

from quillenkit.abelian import FGAbelianGroup
from quillenkit.algebras import regular_bimodule
from quillenkit.builtins import builtin_algebra, builtin_group
from quillenkit.comparison import (closed_form_homology, comparison_map_degree0,
                                   cyclic_homology_oracle, dihedral_homology_oracle,
                                   factor_epi_mono, make_report,
                                   quaternion_homology_oracle,
                                   verify_central_quotient_hh0,
                                   verify_coinvariants_shift, verify_hochschild_shift,
                                   verify_module_adjunction, verify_torsionfree_beck)
from quillenkit.errors import InfiniteHomSetError, NotEquivariantError
from quillenkit.fields import Field
from quillenkit.groups import (cyclic_group, dihedral_group, group_homology,
                               product_group, regular_rep, trivial_rep)
from quillenkit.io import validate_report
from quillenkit.linalg import IntMatrix
from quillenkit.rings import CommRingPres

P = FGAbelianGroup.parse


def test_make_report_witness():
    rep = make_report("demo", {}, [1, 2, 3], [1, 5, 3], offset=1)
    assert rep.verdict == "not-equal" and not rep.passed
    assert rep.witness == {"index": 2, "left": 2, "right": 5}
    assert make_report("demo", {}, [1], [1, 2]).witness["right"] == 2
    validate_report(rep.to_json())


def test_oracle_tables():
    assert [str(h) for h in cyclic_homology_oracle(4, 3)] == ["Z", "Z/4", "0", "Z/4"]
    assert [str(h) for h in dihedral_homology_oracle(3, 4)] == ["Z", "Z/2", "0", "Z/6", "0"]
    assert [str(h) for h in dihedral_homology_oracle(4, 3)] == \
        ["Z", "Z/2 + Z/2", "Z/2", "Z/2 + Z/2 + Z/4"]
    assert [str(h) for h in quaternion_homology_oracle(4)] == \
        ["Z", "Z/2 + Z/2", "0", "Z/8", "0"]


# computed bar-complex homology against the closed forms, where affordable
@pytest.mark.parametrize("g,top", [
    (cyclic_group(5), 3), (cyclic_group(6), 3), (dihedral_group(5), 2),
    (product_group(cyclic_group(2), cyclic_group(4)), 3),
    (builtin_group("D4"), 3), (builtin_group("Q8"), 3), (builtin_group("S3"), 3),
], ids=lambda v: getattr(v, "name", str(v)))
def test_closed_forms_match_bar_complex(g, top):
    family, oracle = closed_form_homology(g, top)
    assert group_homology(g, trivial_rep(g), top, normalized=True) == oracle


def test_closed_form_unrecognized():
    from quillenkit.groups import symmetric_group
    assert closed_form_homology(symmetric_group(4), 2) is None


@pytest.mark.parametrize("name", ["trivial", "C2", "C3", "C4", "C2xC2", "S3"])
def test_coinvariants_shift_small(name):
    rep = verify_coinvariants_shift(builtin_group(name), 2)
    assert rep.passed and rep.details["oracle_agrees"]
    validate_report(rep.to_json())


def test_coinvariants_shift_degree3_small():
    for name in ("C2", "C3", "S3"):
        assert verify_coinvariants_shift(builtin_group(name), 3, normalized=True).passed


def test_hochschild_shift_reports():
    for name in ("QxQ", "dual-numbers-F2", "upper-triangular-2"):
        a, _ = builtin_algebra(name)
        rep = verify_hochschild_shift(a, 2, label=name)
        assert rep.passed
        validate_report(rep.to_json())


def test_comparison_map_char2():
    r = CommRingPres(Field(2), ["x"], ["x^2"])
    rep = comparison_map_degree0(r)
    assert rep.passed and rep.left[:2] == [2, 2]
    assert rep.details["injective"] and rep.details["surjective"]


def test_torsionfree_beck():
    good = verify_torsionfree_beck(2, P("Z^3"))
    assert good.passed and good.left == [True]
    bad = verify_torsionfree_beck(1, P("Z + Z/6"))
    assert bad.passed and bad.left == [False]
    assert bad.details["torsion_witness"] == {"element": [0, 0, 1], "order": 6}


def test_central_quotient_criterion():
    for name in ("M2(Q)", "dual-numbers-Q", "upper-triangular-2"):
        a, _ = builtin_algebra(name)
        assert verify_central_quotient_hh0(regular_bimodule(a)).passed


def test_factor_rejects_non_equivariant():
    c2 = cyclic_group(2)
    with pytest.raises(NotEquivariantError):
        factor_epi_mono(IntMatrix.from_rows([[1, 0]]), regular_rep(c2), trivial_rep(c2))


def test_factor_lattice_cokernel():
    c2 = cyclic_group(2)
    fz = factor_epi_mono(IntMatrix.from_rows([[2]]), trivial_rep(c2), trivial_rep(c2))
    assert fz.ok and fz.cokernel == P("Z/2")


def test_adjunction_infinite_hom_set():
    c2 = cyclic_group(2)
    with pytest.raises(InfiniteHomSetError):
        verify_module_adjunction("coinvariants-trivial", trivial_rep(c2), P("Z"))
