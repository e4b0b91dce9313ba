import pytest

from quillenkit.abelian import FGAbelianGroup
from quillenkit.builtins import GROUPS, SPLIT_EXTENSIONS, builtin_group
from quillenkit.config import override_entry_cap
from quillenkit.errors import (GroupAxiomError, NotHomomorphismError, SizeCapError,
                               ValidationError)
from quillenkit.groups import (FinGroup, GroupHom, abelianize_group, augmentation_ideal,
                               coinvariants, com_split_extension, commutator_subgroup,
                               cyclic_group, dihedral_group, group_cohomology,
                               group_homology, invariants, make_group, product_group,
                               pullback_module, pushforward_module, quaternion_group,
                               regular_rep, symmetric_group, trivial_rep)

P = FGAbelianGroup.parse


def strs(gs):
    return [str(g) for g in gs]


# integral homology H_0..H_3 with trivial coefficients, standard values
KNOWN = {
    "trivial": ["Z", "0", "0", "0"],
    "C2": ["Z", "Z/2", "0", "Z/2"],
    "C3": ["Z", "Z/3", "0", "Z/3"],
    "C4": ["Z", "Z/4", "0", "Z/4"],
    "C2xC2": ["Z", "Z/2 + Z/2", "Z/2", "Z/2 + Z/2 + Z/2"],
    "S3": ["Z", "Z/2", "0", "Z/6"],
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_homology_known_values(name):
    g = builtin_group(name)
    assert strs(group_homology(g, trivial_rep(g), 3)) == KNOWN[name]


@pytest.mark.parametrize("name", ["D4", "Q8"])
def test_homology_low_degrees_order8(name):
    g = builtin_group(name)
    expect = {"D4": ["Z", "Z/2 + Z/2", "Z/2"], "Q8": ["Z", "Z/2 + Z/2", "0"]}[name]
    assert strs(group_homology(g, trivial_rep(g), 2)) == expect


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_h1_is_abelianization(name):
    g = builtin_group(name)
    h = group_homology(g, trivial_rep(g), 1)
    assert h[1] == abelianize_group(g)
    index = g.order // len(commutator_subgroup(g))
    assert h[1].order == index


@pytest.mark.parametrize("name,deg", [("C2", 3), ("C3", 3), ("C2xC2", 3), ("S3", 2)])
def test_normalized_matches_unnormalized(name, deg):
    g = builtin_group(name)
    for m in (trivial_rep(g), augmentation_ideal(g)):
        assert group_homology(g, m, deg) == group_homology(g, m, deg, normalized=True)


@pytest.mark.parametrize("name,deg", [("C2", 3), ("C3", 3), ("S3", 2)])
def test_regular_coefficients_are_acyclic(name, deg):
    g = builtin_group(name)
    hs = group_homology(g, regular_rep(g), deg)
    assert hs[0] == FGAbelianGroup(1, ())
    assert all(h.is_trivial for h in hs[1:])


@pytest.mark.parametrize("name", ["C2", "C3", "C2xC2", "S3"])
def test_cohomology_universal_coefficients(name):
    g = builtin_group(name)
    hom = group_homology(g, trivial_rep(g), 3)
    coh = group_cohomology(g, trivial_rep(g), 3)
    for n in range(4):
        free = hom[n].free_rank
        tors = hom[n - 1].torsion if n else ()
        assert coh[n] == FGAbelianGroup(free, tuple(tors))


def test_coinvariants_and_invariants():
    g = builtin_group("C3")
    assert coinvariants(regular_rep(g)) == P("Z")
    assert coinvariants(augmentation_ideal(g)) == P("Z/3")
    assert invariants(regular_rep(g)) == P("Z")
    assert invariants(augmentation_ideal(g)).is_trivial


def test_group_axiom_witnesses():
    with pytest.raises(GroupAxiomError) as err:
        FinGroup([[0, 1], [1, 1]])
    assert err.value.triple
    # associativity failure on a Latin square with identity 0
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3],
           [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupAxiomError) as err:
        FinGroup(bad)
    a, b, c = err.value.triple
    assert bad[bad[a][b]][c] != bad[a][bad[b][c]]


def test_make_group_specs():
    assert make_group({"kind": "cyclic", "n": 5}).order == 5
    assert make_group({"kind": "symmetric", "n": 3}).order == 6
    g = make_group({"kind": "product", "factors": [{"kind": "cyclic", "n": 2}] * 2})
    assert g.is_abelian() and g.order == 4
    with pytest.raises(ValidationError) as err:
        make_group({"kind": "cyclic", "n": 0})
    assert err.value.field


def test_constructions():
    assert quaternion_group().order == 8 and not quaternion_group().is_abelian()
    d5 = dihedral_group(5)
    assert d5.order == 10 and abelianize_group(d5) == P("Z/2")
    assert symmetric_group(4).order == 24
    assert abelianize_group(product_group(cyclic_group(2), cyclic_group(3))) == P("Z/6")


def test_hom_validation():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    f = GroupHom(c4, c2, (0, 1, 0, 1))
    assert f.is_surjective
    with pytest.raises(NotHomomorphismError):
        GroupHom(c2, c4, (0, 1))


def test_pullback_pushforward():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    f = GroupHom(c4, c2, (0, 1, 0, 1))
    pulled = pullback_module(f, regular_rep(c2))
    assert coinvariants(pulled) == P("Z")
    push = pushforward_module(f, regular_rep(c4))
    # Z[C2] (x)_{Z[C4]} Z[C4] = Z[C2]
    assert push.underlying == P("Z^2")


@pytest.mark.parametrize("key", sorted(SPLIT_EXTENSIONS))
def test_split_extension_commutativization(key):
    e = SPLIT_EXTENSIONS[key]()
    left, right = com_split_extension(e)
    assert left == right
    assert e.projection().is_surjective
    sec = e.section()
    assert all(e.projection()(sec(g)) == g for g in e.base.elements)


def test_size_guards():
    g = builtin_group("Q8")
    with override_entry_cap(1000):
        with pytest.raises(SizeCapError):
            group_homology(g, trivial_rep(g), 3)
