"""Named objects and fixture sets used by the CLI battery and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .abelian import FGAbelianGroup
from .algebras import (Bimodule, FinDimAlgebra, matrix_algebra, module_from_actions,
                       product_of_fields, regular_bimodule, upper_triangular)
from .errors import ValidationError
from .fields import Field
from .groups import (FinGroup, SplitExtensionGrp, cyclic_group, dihedral_group,
                     product_group, quaternion_group, semidirect_by_units,
                     symmetric_group)
from .rings import CommRingPres

Q = Field(0)
F2 = Field(2)


def _v4() -> FinGroup:
    return product_group(cyclic_group(2), cyclic_group(2))


GROUPS: dict[str, Callable[[], FinGroup]] = {
    "trivial": lambda: cyclic_group(1),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C2xC2": _v4,
    "S3": lambda: symmetric_group(3),
    "D4": lambda: dihedral_group(4),
    "Q8": quaternion_group,
}

# groups in the default shift battery, in report order
SHIFT_BATTERY = ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"]


def builtin_group(name: str) -> FinGroup:
    try:
        g = GROUPS[name]()
    except KeyError:
        raise ValidationError(f"unknown builtin group {name!r}; choose from "
                              f"{sorted(GROUPS)}", field="group") from None
    g.name = name
    return g


@dataclass(frozen=True)
class AlgebraEntry:
    name: str
    make: Callable[[], FinDimAlgebra]
    ring: Callable[[], CommRingPres] | None = None


def _ring(field, variables, relations, name):
    return lambda: CommRingPres(field, variables, relations, name=name)


def _from_ring(make_ring):
    return lambda: make_ring().to_algebra()


_RINGS = {
    "Q": _ring(Q, [], [], "Q"),
    "QxQ": _ring(Q, ["x"], ["x^2 - x"], "QxQ"),
    "dual-numbers-Q": _ring(Q, ["x"], ["x^2"], "dual-numbers-Q"),
    "dual-numbers-F2": _ring(F2, ["x"], ["x^2"], "dual-numbers-F2"),
    "Q[x]/(x^3)": _ring(Q, ["x"], ["x^3"], "Q[x]/(x^3)"),
}

ALGEBRAS: dict[str, AlgebraEntry] = {
    **{k: AlgebraEntry(k, _from_ring(v), v) for k, v in _RINGS.items()},
    "M2(Q)": AlgebraEntry("M2(Q)", lambda: matrix_algebra(2, Q)),
    "upper-triangular-2": AlgebraEntry("upper-triangular-2", lambda: upper_triangular(Q)),
}

ALGEBRA_BATTERY = ["Q", "QxQ", "dual-numbers-Q", "dual-numbers-F2", "Q[x]/(x^3)",
                   "M2(Q)", "upper-triangular-2"]
COMMUTATIVE_BATTERY = ["Q", "QxQ", "dual-numbers-Q", "dual-numbers-F2", "Q[x]/(x^3)"]


def builtin_algebra(name: str) -> tuple[FinDimAlgebra, CommRingPres | None]:
    try:
        entry = ALGEBRAS[name]
    except KeyError:
        raise ValidationError(f"unknown builtin algebra {name!r}; choose from "
                              f"{sorted(ALGEBRAS)}", field="algebra") from None
    a = entry.make()
    a.name = name
    return a, (entry.ring() if entry.ring else None)


# --------------------------------------------------------------------------
# split extensions


def _v4_rotation(base_order: int, gen_power) -> list[list[int]]:
    # V4 elements 0, 1, 2, 3 = (0,0), (0,1), (1,0), (1,1); 1 -> 2 -> 3 -> 1
    rot = [0, 2, 3, 1]
    rows = []
    for g in range(base_order):
        row = list(range(4))
        for _ in range(gen_power(g)):
            row = [rot[x] for x in row]
        rows.append(row)
    return rows


def _s3_on_v4() -> list[list[int]]:
    """S3 permuting the three nonzero elements of V4 (all are automorphisms)."""
    from itertools import permutations
    return [[0] + [p[i] + 1 for i in range(3)] for p in permutations(range(3))]


SPLIT_EXTENSIONS: dict[str, Callable[[], SplitExtensionGrp]] = {
    "S3 = C2 x| C3": lambda: semidirect_by_units(cyclic_group(2), 3, [1, -1]),
    "D4 = C2 x| C4": lambda: semidirect_by_units(cyclic_group(2), 4, [1, -1]),
    "D5 = C2 x| C5": lambda: semidirect_by_units(cyclic_group(2), 5, [1, -1]),
    "D6 = C2 x| C6": lambda: semidirect_by_units(cyclic_group(2), 6, [1, -1]),
    "C2 x C3 (trivial action)": lambda: semidirect_by_units(cyclic_group(2), 3, [1, 1]),
    "C3 x C4 (trivial action)": lambda: semidirect_by_units(cyclic_group(3), 4, [1, 1, 1]),
    "C1 x| C4": lambda: semidirect_by_units(cyclic_group(1), 4, [1]),
    "A4 = C3 x| V4": lambda: SplitExtensionGrp(cyclic_group(3), _v4(),
                                               _v4_rotation(3, lambda g: g)),
    "S4 = S3 x| V4": lambda: SplitExtensionGrp(symmetric_group(3), _v4(), _s3_on_v4()),
    "D4 = C2 x| V4 (swap)": lambda: SplitExtensionGrp(cyclic_group(2), _v4(),
                                                      [[0, 1, 2, 3], [0, 2, 1, 3]]),
    "Dic3 = C4 x| C3": lambda: semidirect_by_units(cyclic_group(4), 3, [1, 2, 1, 2]),
    "SD16 = C2 x| C8 (x -> 3x)": lambda: semidirect_by_units(cyclic_group(2), 8, [1, 3]),
    "M16 = C2 x| C8 (x -> 5x)": lambda: semidirect_by_units(cyclic_group(2), 8, [1, 5]),
    "F21 = C3 x| C7 (x -> 2x)": lambda: semidirect_by_units(cyclic_group(3), 7, [1, 2, 4]),
}


# --------------------------------------------------------------------------
# square-zero and torsion fixtures


def _character_module(r: FinDimAlgebra, values) -> Bimodule:
    """One-dimensional module where ``e_i`` acts by ``values[i]``."""
    return module_from_actions(r, [[[v]] for v in values])


def _zero_module(r: FinDimAlgebra) -> Bimodule:
    return Bimodule(r, 0, [np.zeros((0, 0), dtype=object)] * r.dim,
                    [np.zeros((0, 0), dtype=object)] * r.dim)


def _regular_power(r: FinDimAlgebra, k: int) -> Bimodule:
    f = r.field
    acts = []
    for lm in r.left_matrices():
        big = f.zeros((k * r.dim, k * r.dim))
        for t in range(k):
            big[t * r.dim:(t + 1) * r.dim, t * r.dim:(t + 1) * r.dim] = lm
        acts.append(big)
    return module_from_actions(r, acts)


def _f4() -> FinDimAlgebra:
    return CommRingPres(F2, ["x"], ["x^2 + x + 1"]).to_algebra()


def nonexact_fixtures() -> list[tuple[str, FinDimAlgebra, Bimodule]]:
    q1 = product_of_fields(1, Q)
    q2 = product_of_fields(2, Q)
    q3 = product_of_fields(3, Q)
    f2 = product_of_fields(1, F2)
    f2x2 = product_of_fields(2, F2)
    f3 = product_of_fields(1, Field(3))
    f4 = _f4()
    sqrt2 = CommRingPres(Q, ["x"], ["x^2 - 2"]).to_algebra()
    pm1 = CommRingPres(Q, ["x"], ["x^2 - 1"]).to_algebra()
    return [
        ("Q, M = 0", q1, _zero_module(q1)),
        ("Q, M = Q", q1, regular_bimodule(q1)),
        ("Q, M = Q^2", q1, _regular_power(q1, 2)),
        ("F2, M = 0", f2, _zero_module(f2)),
        ("F2, M = F2", f2, regular_bimodule(f2)),
        ("F3, M = F3", f3, regular_bimodule(f3)),
        ("QxQ, M = 0", q2, _zero_module(q2)),
        ("QxQ, M = Q via first factor", q2, _character_module(q2, [1, 0])),
        ("QxQ, M = Q via second factor", q2, _character_module(q2, [0, 1])),
        ("QxQ, M = QxQ", q2, regular_bimodule(q2)),
        ("QxQxQ, M = Q via third factor", q3, _character_module(q3, [0, 0, 1])),
        ("F2xF2, M = F2 via first factor", f2x2, _character_module(f2x2, [1, 0])),
        ("F4, M = F4", f4, regular_bimodule(f4)),
        ("F4, M = 0", f4, _zero_module(f4)),
        ("Q(sqrt2), M = Q(sqrt2)", sqrt2, regular_bimodule(sqrt2)),
        ("Q[x]/(x^2-1), M = Q with x = -1", pm1, _character_module(pm1, [1, -1])),
    ]


TORSIONFREE_FIXTURES: list[tuple[int, str]] = [
    (0, "0"), (1, "Z"), (2, "Z"), (0, "Z/2"), (2, "Z/2"), (1, "Z + Z/3"),
    (3, "Z^2"), (0, "Z/2 + Z/4"), (2, "0"), (1, "Z/6"), (4, "Z^3"),
    (0, "Z/2 + Z/2"), (1, "Z^2 + Z/5"),
]


def torsionfree_fixtures() -> list[tuple[int, FGAbelianGroup]]:
    return [(r, FGAbelianGroup.parse(m)) for r, m in TORSIONFREE_FIXTURES]


# --------------------------------------------------------------------------
# adjunction, Quillen-pair and factorization fixtures


def adjunction_fixtures() -> list[tuple[str, str, object, object, list]]:
    """``(label, instance, m, n, naturality samples)``."""
    from .algebras import commutator_quotient_map, mult_kernel_bimodule
    from .groups import augmentation_ideal, regular_rep, trivial_rep
    from .linalg import IntMatrix
    out = []
    c2, c3, c4 = builtin_group("C2"), builtin_group("C3"), builtin_group("C4")
    s3, v4 = builtin_group("S3"), builtin_group("C2xC2")
    i2 = augmentation_ideal(c2)
    out.append(("C2, M = Z, N = Z/4", "coinvariants-trivial", trivial_rep(c2),
                FGAbelianGroup.parse("Z/4"),
                [(trivial_rep(c2), IntMatrix.from_rows([[2]]))]))
    out.append(("C2, M = I, N = Z/4", "coinvariants-trivial", i2,
                FGAbelianGroup.parse("Z/4"), [(i2, IntMatrix.from_rows([[3]]))]))
    out.append(("C3, M = I, N = Z/3", "coinvariants-trivial", augmentation_ideal(c3),
                FGAbelianGroup.parse("Z/3"),
                [(augmentation_ideal(c3), IntMatrix.identity(2))]))
    i_s3 = augmentation_ideal(s3)
    out.append(("S3, M = I, N = Z/6", "coinvariants-trivial", i_s3,
                FGAbelianGroup.parse("Z/6"),
                [(trivial_rep(s3), IntMatrix.zeros(5, 1))]))
    # inclusion I_C2 -> ZC2, s - e  |->  -e + s
    out.append(("C2, M = ZC2, N = Z/2", "coinvariants-trivial", regular_rep(c2),
                FGAbelianGroup.parse("Z/2"),
                [(i2, IntMatrix.from_rows([[-1], [1]]))]))
    out.append(("C2xC2, M = I, N = Z/2", "coinvariants-trivial", augmentation_ideal(v4),
                FGAbelianGroup.parse("Z/2"), []))
    out.append(("C4, M = Z^2, N = Z/2", "coinvariants-trivial", trivial_rep(c4, 2),
                FGAbelianGroup.parse("Z/2"),
                [(trivial_rep(c4), IntMatrix.from_rows([[1], [1]]))]))
    m2, _ = builtin_algebra("M2(Q)")
    q_m2 = commutator_quotient_map(m2).algebra
    out.append(("M2(Q), M = A, N = 0 over Com(A) = 0", "central-quotient-same-action",
                regular_bimodule(m2), Bimodule(q_m2, 0, [], []), []))
    dual, _ = builtin_algebra("dual-numbers-F2")
    out.append(("F2[e]/(e^2), M = A, N = A", "central-quotient-same-action",
                regular_bimodule(dual), regular_bimodule(commutator_quotient_map(dual).algebra),
                [(regular_bimodule(dual), np.eye(2, dtype=np.int64))]))
    ik = mult_kernel_bimodule(dual)
    out.append(("F2[e]/(e^2), M = I_A, N = A", "central-quotient-same-action",
                ik, regular_bimodule(commutator_quotient_map(dual).algebra),
                [(ik, np.eye(ik.dim, dtype=np.int64))]))
    t2 = upper_triangular(F2)
    out.append(("T2(F2), M = A, N = Com(A)", "central-quotient-same-action",
                regular_bimodule(t2), regular_bimodule(commutator_quotient_map(t2).algebra),
                []))
    f22 = product_of_fields(2, F2)
    out.append(("F2xF2, M = A, N = F2 via first factor", "central-quotient-same-action",
                regular_bimodule(f22), _character_module(f22, [1, 0]), []))
    return out


def quillen_samples(instance: str) -> list[tuple]:
    from .algebras import commutator_quotient_map
    from .groups import GroupHom, commutator_subgroup, quotient_group
    if instance == "gp-ab":
        out: list[tuple] = []
        for name in ("S3", "D4", "Q8", "C4"):
            g = builtin_group(name)
            quo, hom = quotient_group(g, commutator_subgroup(g))
            quo.name = f"Com({name})"
            out.append(("surjection", hom))
        s4 = SPLIT_EXTENSIONS["S4 = S3 x| V4"]()
        s4.total.name = "S4"
        out.append(("surjection", s4.projection()))
        c4 = builtin_group("C4")
        c2 = builtin_group("C2")
        out.append(("surjection", GroupHom(c4, c2, (0, 1, 0, 1))))
        out += [("free", n) for n in range(5)]
        return out
    if instance == "alg-com":
        out = [("free", n, 2) for n in range(1, 4)] + [("free", 2, 3)]
        for name in ("M2(Q)", "upper-triangular-2", "dual-numbers-Q"):
            a, _ = builtin_algebra(name)
            qa = commutator_quotient_map(a)
            qa.algebra.name = f"Com({name})"
            out.append(("surjection", a, qa.algebra, qa.projection))
        t2, _ = builtin_algebra("upper-triangular-2")
        qq = product_of_fields(2, Q)
        out.append(("surjection", t2, qq, [[1, 0, 0], [0, 0, 1]]))
        return out
    raise ValidationError(f"unknown instance {instance!r}", field="instance")


def factorization_fixtures() -> list[tuple[str, object, object, object]]:
    """``(label, f, source, target)``."""
    from .algebras import free_bimodule, mult_kernel_bimodule
    from .groups import augmentation_ideal, regular_rep, trivial_rep
    from .linalg import IntMatrix
    c2, c3, s3 = builtin_group("C2"), builtin_group("C3"), builtin_group("S3")
    dual, _ = builtin_algebra("dual-numbers-Q")
    ik = mult_kernel_bimodule(dual)
    return [
        ("identity on I_C3", IntMatrix.identity(2), augmentation_ideal(c3),
         augmentation_ideal(c3)),
        ("augmentation ZC2 -> Z", IntMatrix.from_rows([[1, 1]]), regular_rep(c2),
         trivial_rep(c2)),
        ("2 on trivial Z over S3", IntMatrix.from_rows([[2]]), trivial_rep(s3),
         trivial_rep(s3)),
        ("inclusion I_C2 -> ZC2", IntMatrix.from_rows([[-1], [1]]),
         augmentation_ideal(c2), regular_rep(c2)),
        ("norm Z -> ZC3", IntMatrix.from_rows([[1], [1], [1]]), trivial_rep(c3),
         regular_rep(c3)),
        ("multiplication A(x)A -> A, dual numbers", dual.multiplication_matrix(),
         free_bimodule(dual), regular_bimodule(dual)),
        ("zero map I_A -> A, dual numbers", Q.zeros((2, ik.dim)), ik,
         regular_bimodule(dual)),
    ]
