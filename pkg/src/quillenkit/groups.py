"""Finite groups, integral representations and group (co)homology.

A G-module is modelled as a free lattice ``Z^r`` with a left action by
integer matrices. Homology uses the inhomogeneous bar complex
``C_n = M ⊗ Z[G^n]``; all results are returned as :class:`FGAbelianGroup`
so element numbering never leaks into them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from . import config
from .abelian import FGAbelianGroup
from .chains import ChainComplexZ, all_homology
from .errors import (DegreeError, GroupAxiomError, NotHomomorphismError,
                     SizeCapError, ValidationError)
from .linalg import IntMatrix, hstack, rank, smith_decomposition, vstack


class FinGroup:
    """Finite group given by a multiplication table; element 0 is the identity."""

    __slots__ = ("table", "_inv", "name")

    def __init__(self, table: Sequence[Sequence[int]], name: str | None = None):
        tab = tuple(tuple(int(x) for x in row) for row in table)
        n = len(tab)
        if n == 0:
            raise GroupAxiomError("a group has at least one element")
        for a, row in enumerate(tab):
            if len(row) != n:
                raise GroupAxiomError(f"row {a} has length {len(row)}, "
                                      f"expected {n}", (a,))
            for b, c in enumerate(row):
                if not 0 <= c < n:
                    raise GroupAxiomError(f"{a}*{b} = {c} is not an element",
                                          (a, b))
        for a in range(n):
            if tab[0][a] != a or tab[a][0] != a:
                raise GroupAxiomError(f"element 0 is not an identity for {a}",
                                      (0, a))
        inv = []
        for a in range(n):
            sols = [b for b in range(n) if tab[a][b] == 0]
            if len(sols) != 1 or tab[sols[0]][a] != 0:
                raise GroupAxiomError(f"element {a} has no two-sided inverse",
                                      (a,))
            inv.append(sols[0])
        for a in range(n):
            ra = tab[a]
            for b in range(n):
                ab = ra[b]
                rab = tab[ab]
                rb = tab[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise GroupAxiomError(
                            f"associativity fails for ({a}, {b}, {c})",
                            (a, b, c))
        self.table = tab
        self._inv = tuple(inv)
        self.name = name

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def commutator(self, a: int, b: int) -> int:
        t = self.table
        return t[t[t[a][b]][self._inv[a]]][self._inv[b]]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm
        return lcm(*(self.element_order(a) for a in self.elements))

    def generated_subgroup(self, gens) -> frozenset[int]:
        sub = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        return frozenset(sub)

    def __eq__(self, other):
        return isinstance(other, FinGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"FinGroup({label})"


# --------------------------------------------------------------------------
# constructors


def cyclic_group(n: int) -> FinGroup:
    if n < 1:
        raise ValidationError("cyclic group order must be >= 1", field="n")
    return FinGroup([[(a + b) % n for b in range(n)] for a in range(n)],
                    name=f"C{n}")


def product_group(*factors: FinGroup) -> FinGroup:
    """Direct product; element ``(a, b)`` gets index ``a * |H| + b``."""
    if not factors:
        return cyclic_group(1)
    g = factors[0]
    for h in factors[1:]:
        m = h.order
        table = [[g.mul(a // m, b // m) * m + h.mul(a % m, b % m)
                  for b in range(g.order * m)] for a in range(g.order * m)]
        g = FinGroup(table, name=f"{g.name}x{h.name}"
                     if g.name and h.name else None)
    return g


def symmetric_group(n: int) -> FinGroup:
    """Permutations of ``0..n-1`` in lexicographic order; ``(στ)(i) = σ(τ(i))``."""
    if not 1 <= n <= 4:
        raise ValidationError("symmetric groups are supported for n <= 4",
                              field="n")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[i]] for i in range(n))] for t in perms]
             for s in perms]
    return FinGroup(table, name=f"S{n}")


def quaternion_table() -> list[list[int]]:
    """Table of Q_8 with elements ``1, -1, i, -i, j, -j, k, -k``."""
    # unit products: units[(x, y)] = (sign, unit) for x, y in 1, i, j, k
    units = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def split(a):
        return (-1 if a % 2 else 1), a // 2

    table = []
    for a in range(8):
        sa, ua = split(a)
        row = []
        for b in range(8):
            sb, ub = split(b)
            s, u = units[(ua, ub)]
            s *= sa * sb
            row.append(2 * u + (1 if s < 0 else 0))
        table.append(row)
    return table


def quaternion_group() -> FinGroup:
    return FinGroup(quaternion_table(), name="Q8")


def dihedral_group(m: int) -> FinGroup:
    """Order ``2m`` as ``C_2 ⋉ C_m`` with inversion; rotations are ``0..m-1``."""
    g = semidirect_by_units(cyclic_group(2), m, [1, -1]).total
    g.name = f"D{m}"
    return g


def make_group(spec) -> FinGroup:
    """Build a group from a constructor description (see the group schema).

    ``{"kind": "cyclic", "n": 3}``, ``{"kind": "symmetric", "n": 3}``,
    ``{"kind": "product", "factors": [...]}`` or
    ``{"kind": "table", "table": [[...]]}``.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValidationError("group description needs a 'kind'", field="kind")
    kind = spec["kind"]
    name = spec.get("name")
    if kind == "cyclic":
        g = cyclic_group(int(spec["n"]))
    elif kind == "symmetric":
        g = symmetric_group(int(spec["n"]))
    elif kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list):
            raise ValidationError("product needs a list of factors", field="factors")
        g = product_group(*[make_group(f) for f in factors])
    elif kind == "table":
        g = FinGroup(spec.get("table") or [], name=name)
    else:
        raise ValidationError(f"unknown group kind {kind!r}", field="kind")
    if name:
        g.name = name
    return g


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the image of each source element."""

    source: FinGroup
    target: FinGroup
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != self.source.order:
            raise NotHomomorphismError("one image per source element needed")
        if any(not 0 <= x < self.target.order for x in imgs):
            raise NotHomomorphismError("image outside the target group")
        for a in self.source.elements:
            for b in self.source.elements:
                if imgs[self.source.mul(a, b)] != self.target.mul(imgs[a], imgs[b]):
                    raise NotHomomorphismError(
                        f"f({a}*{b}) != f({a})*f({b})")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """``self ∘ inner``."""
        return GroupHom(inner.source, self.target,
                        tuple(self.images[x] for x in inner.images))

    def is_surjective(self) -> bool:
        return set(self.images) == set(self.target.elements)

    @classmethod
    def identity(cls, g: FinGroup) -> "GroupHom":
        return cls(g, g, tuple(g.elements))

    @classmethod
    def to_trivial(cls, g: FinGroup) -> "GroupHom":
        return cls(g, cyclic_group(1), (0,) * g.order)


def hom_from_generators(source: FinGroup, target: FinGroup,
                        assignment: dict[int, int]) -> GroupHom:
    """Extend an assignment on generators to a homomorphism (checked)."""
    images = {0: 0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g, tg in assignment.items():
            y = source.mul(x, g)
            ty = target.mul(images[x], tg)
            if y in images:
                if images[y] != ty:
                    raise NotHomomorphismError(
                        "generator assignment does not extend")
            else:
                images[y] = ty
                frontier.append(y)
    if len(images) != source.order:
        raise NotHomomorphismError("assignment does not generate the source")
    return GroupHom(source, target, tuple(images[a] for a in source.elements))


# --------------------------------------------------------------------------
# integral representations


class ZGRep:
    """Free lattice ``Z^rank`` with a left G-action by integer matrices."""

    __slots__ = ("group", "rank", "actions")

    def __init__(self, group: FinGroup, rank: int,
                 actions: Sequence[IntMatrix]):
        actions = tuple(
            a if isinstance(a, IntMatrix)
            else (IntMatrix.from_rows(a) if rank else IntMatrix.zeros(0, 0))
            for a in actions)
        if len(actions) != group.order:
            raise ValidationError("one action matrix per group element needed",
                                  field="action")
        for a in actions:
            if a.shape != (rank, rank):
                raise ValidationError(f"action matrix has shape {a.shape}, "
                                      f"expected {(rank, rank)}", field="action")
        if actions[0] != IntMatrix.identity(rank):
            raise ValidationError("identity must act trivially", field="action")
        for g in group.elements:
            for h in group.elements:
                if actions[g] @ actions[h] != actions[group.mul(g, h)]:
                    raise ValidationError(
                        f"action({g}) action({h}) != action({g}*{h})",
                        field="action")
        self.group = group
        self.rank = rank
        self.actions = actions

    def action_matrix(self, g: int) -> IntMatrix:
        return self.actions[g]

    def __eq__(self, other):
        return (isinstance(other, ZGRep) and self.group == other.group
                and self.rank == other.rank and self.actions == other.actions)

    def __hash__(self):
        return hash((self.group, self.rank, self.actions))

    def __repr__(self):
        return f"ZGRep({self.group!r}, rank={self.rank})"


def trivial_rep(g: FinGroup, rank: int = 1) -> ZGRep:
    return ZGRep(g, rank, [IntMatrix.identity(rank)] * g.order)


def permutation_rep(g: FinGroup, perms: Sequence[Sequence[int]]) -> ZGRep:
    """``g`` sends basis vector ``e_i`` to ``e_{perms[g][i]}``."""
    n = len(perms[0])
    mats = []
    for p in perms:
        a = np.zeros((n, n), dtype=np.int64)
        for i, j in enumerate(p):
            a[j, i] = 1
        mats.append(IntMatrix(a))
    return ZGRep(g, n, mats)


def regular_rep(g: FinGroup) -> ZGRep:
    """``ZG`` with basis the group elements and left multiplication."""
    return permutation_rep(g, [[g.mul(x, y) for y in g.elements]
                               for x in g.elements])


def augmentation_ideal(g: FinGroup) -> ZGRep:
    """``I_G = ker(ZG -> Z)`` in the basis ``{x - e : x != e}``.

    ``x·(y - e) = (xy - e) - (x - e)`` with ``e - e = 0``.
    """
    n = g.order - 1
    mats = []
    for x in g.elements:
        a = np.zeros((n, n), dtype=np.int64)
        for y in range(1, g.order):
            xy = g.mul(x, y)
            if xy:
                a[xy - 1, y - 1] += 1
            if x:
                a[x - 1, y - 1] -= 1
        mats.append(IntMatrix(a))
    return ZGRep(g, n, mats)


def sign_rep(g: FinGroup, hom_to_c2: GroupHom) -> ZGRep:
    return ZGRep(g, 1, [IntMatrix.from_rows([[(-1) ** hom_to_c2(x)]])
                        for x in g.elements])


def direct_sum_rep(m: ZGRep, n: ZGRep) -> ZGRep:
    from .linalg import block_diag
    return ZGRep(m.group, m.rank + n.rank,
                 [block_diag(a, b) for a, b in zip(m.actions, n.actions)])


def is_equivariant(f: IntMatrix, m: ZGRep, n: ZGRep) -> bool:
    """``f: M -> N`` (an ``n.rank x m.rank`` matrix) commutes with the actions."""
    return all(f @ a == b @ f for a, b in zip(m.actions, n.actions))


def _stacked_differences(m: ZGRep) -> list[IntMatrix]:
    eye = IntMatrix.identity(m.rank)
    return [a - eye for a in m.actions[1:]]


def coinvariants(m: ZGRep) -> FGAbelianGroup:
    """``M_G = M / <m - g·m>`` as the cokernel of ``[ρ(g) - 1]_g``."""
    return FGAbelianGroup.cokernel(hstack(_stacked_differences(m), m.rank))


def coinvariants_quotient(m: ZGRep):
    """``(M_G, q, section, orders)`` with ``q: Z^rank -> ⊕ Z/orders``.

    ``orders`` lists the cyclic order of each target coordinate (0 for Z);
    coordinates of order 1 are dropped. ``section`` lifts each target
    generator back to ``Z^rank``.
    """
    rel = hstack(_stacked_differences(m), m.rank)
    sf = smith_decomposition(rel)
    orders = sf.diagonal + [0] * (m.rank - sf.rank)
    keep = [i for i, d in enumerate(orders) if d != 1]
    q = IntMatrix(sf.u.array[keep].copy()) if keep else IntMatrix.zeros(0, m.rank)
    section = (IntMatrix(sf.u_inv.array[:, keep].copy()) if keep
               else IntMatrix.zeros(m.rank, 0))
    return FGAbelianGroup.from_orders(orders), q, section, [orders[i] for i in keep]


def invariants(m: ZGRep) -> FGAbelianGroup:
    """``M^G``; a saturated sublattice, hence free."""
    if m.rank == 0:
        return FGAbelianGroup()
    diffs = _stacked_differences(m)
    if not diffs:
        return FGAbelianGroup(m.rank)
    return FGAbelianGroup(m.rank - rank(vstack(diffs, m.rank)))


# --------------------------------------------------------------------------
# abelian structure of finite groups


def finite_abelian_invariants(g: FinGroup) -> FGAbelianGroup:
    """Structure of an abelian FinGroup from its table presentation.

    ``A = Z^{|A|} / <e_a + e_b - e_{ab}>``.
    """
    if not g.is_abelian():
        raise ValidationError("group is not abelian")
    n = g.order
    cols = []
    for a in g.elements:
        for b in range(a, n):
            v = np.zeros(n, dtype=np.int64)
            v[a] += 1
            v[b] += 1
            v[g.mul(a, b)] -= 1
            cols.append(v)
    return FGAbelianGroup.cokernel(IntMatrix(np.array(cols).T))


def commutator_subgroup(g: FinGroup) -> frozenset[int]:
    comms = {g.commutator(a, b) for a in g.elements for b in g.elements}
    return g.generated_subgroup(comms)


def quotient_group(g: FinGroup, normal: frozenset[int]) -> tuple[FinGroup, GroupHom]:
    """``G/N`` with cosets numbered by their smallest element."""
    for x in g.elements:
        for n in normal:
            if g.mul(g.mul(x, n), g.inv(x)) not in normal:
                raise ValidationError("subgroup is not normal")
    coset_of = {}
    reps = []
    for x in g.elements:
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for n in normal:
            coset_of[g.mul(x, n)] = idx
    table = [[coset_of[g.mul(a, b)] for b in reps] for a in reps]
    quo = FinGroup(table)
    return quo, GroupHom(g, quo, tuple(coset_of[x] for x in g.elements))


def abelianize_group(g: FinGroup) -> FGAbelianGroup:
    """``Com(G) = G/[G, G]``."""
    quo, _ = quotient_group(g, commutator_subgroup(g))
    return finite_abelian_invariants(quo)


# --------------------------------------------------------------------------
# bar complexes


def _digits(codes: np.ndarray, base: int, n: int) -> np.ndarray:
    out = np.zeros((len(codes), n), dtype=np.int64)
    c = codes.copy()
    for k in range(n - 1, -1, -1):
        out[:, k] = c % base
        c //= base
    return out


def _encode(digits: np.ndarray, base: int) -> np.ndarray:
    out = np.zeros(len(digits), dtype=np.int64)
    for k in range(digits.shape[1]):
        out = out * base + digits[:, k]
    return out


class _BarIndex:
    """Enumerates bar cells of length n (all, or those avoiding the identity)."""

    def __init__(self, order: int, n: int, normalized: bool):
        self.order = order
        codes = np.arange(order ** n, dtype=np.int64)
        digits = _digits(codes, order, n)
        if normalized and n:
            keep = np.all(digits != 0, axis=1)
            codes, digits = codes[keep], digits[keep]
        self.codes = codes
        self.digits = digits
        self.lookup = np.full(order ** n, -1, dtype=np.int64)
        self.lookup[codes] = np.arange(len(codes))

    def __len__(self):
        return len(self.codes)


def _bar_boundary(g: FinGroup, blocks: Sequence[np.ndarray], rank: int, n: int,
                  normalized: bool, cells: dict) -> np.ndarray:
    """Matrix of ``C_n -> C_{n-1}`` with first face ``m ↦ blocks[g_1] m``."""
    src = cells[n]
    dst = cells[n - 1]
    rows_total, cols_total = len(dst) * rank, len(src) * rank
    config.check_entries(rows_total, cols_total, what=f"bar boundary d_{n}")
    out = np.zeros((rows_total, cols_total), dtype=np.int64)
    if not len(src):
        return out
    table = np.array(g.table, dtype=np.int64)
    t_idx = np.arange(len(src), dtype=np.int64)
    dg = src.digits
    ar = np.arange(rank, dtype=np.int64)

    def add_identity(mask, target_codes, sign):
        tgt = dst.lookup[target_codes[mask]]
        cols = t_idx[mask]
        r = (tgt[:, None] * rank + ar[None, :]).ravel()
        c = (cols[:, None] * rank + ar[None, :]).ravel()
        np.add.at(out, (r, c), sign)

    # first face
    tails = _encode(dg[:, 1:], g.order)
    for x in g.elements:
        mask = dg[:, 0] == x
        if not mask.any():
            continue
        blk = blocks[x]
        tgt = dst.lookup[tails[mask]]
        cols = t_idx[mask]
        r = (tgt[:, None, None] * rank + ar[None, :, None])
        c = (cols[:, None, None] * rank + ar[None, None, :])
        r, c = np.broadcast_arrays(r, c)
        vals = np.broadcast_to(blk[None, :, :], r.shape)
        np.add.at(out, (r.ravel(), c.ravel()), vals.ravel())
    # inner faces
    for i in range(1, n):
        merged = table[dg[:, i - 1], dg[:, i]]
        nd = np.concatenate([dg[:, :i - 1], merged[:, None], dg[:, i + 1:]],
                            axis=1)
        mask = np.ones(len(src), dtype=bool)
        if normalized:
            mask = merged != 0
        add_identity(mask, _encode(nd, g.order), (-1) ** i)
    # last face
    add_identity(np.ones(len(src), dtype=bool), _encode(dg[:, :-1], g.order),
                 (-1) ** n)
    return out


def _check_group_guards(g: FinGroup, max_degree: int, allow_large: bool):
    if max_degree < 0:
        raise DegreeError("degree must be nonnegative")
    if allow_large:
        return
    if g.order > config.MAX_GROUP_ORDER:
        raise SizeCapError(f"|G| = {g.order} exceeds {config.MAX_GROUP_ORDER}; "
                           "pass allow_large=True to override")
    if max_degree > config.MAX_DEGREE:
        raise SizeCapError(f"degree {max_degree} exceeds {config.MAX_DEGREE}; "
                           "pass allow_large=True to override")


def bar_chain_complex(g: FinGroup, m: ZGRep, top: int,
                      normalized: bool = False) -> ChainComplexZ:
    """``C_n = M ⊗ Z[G^n]`` for ``n = 0..top`` with the standard boundary.

    ``d(m ⊗ [g_1|...|g_n]) = g_1^{-1} m ⊗ [g_2|...] + Σ_{i=1}^{n-1} (-1)^i
    m ⊗ [...|g_i g_{i+1}|...] + (-1)^n m ⊗ [g_1|...|g_{n-1}]``.
    With ``normalized`` only cells avoiding the identity are kept.
    """
    if m.group != g:
        raise ValidationError("representation lives over a different group")
    for n in range(1, top + 1):
        config.check_entries(m.rank * _cells(g.order, n - 1, normalized),
                             m.rank * _cells(g.order, n, normalized),
                             what=f"bar boundary d_{n}")
    cells = {n: _BarIndex(g.order, n, normalized) for n in range(top + 1)}
    blocks = [m.action_matrix(g.inv(x)).array for x in g.elements]
    bds = tuple(IntMatrix(_bar_boundary(g, blocks, m.rank, n, normalized, cells))
                for n in range(1, top + 1))
    return ChainComplexZ(tuple(len(cells[n]) * m.rank for n in range(top + 1)),
                         bds)


def _cells(order: int, n: int, normalized: bool) -> int:
    return (order - 1) ** n if normalized and n else order ** n


def group_homology(g: FinGroup, m: ZGRep, max_degree: int,
                   normalized: bool = False,
                   allow_large: bool = False) -> list[FGAbelianGroup]:
    """``[H_0(G; M), ..., H_max_degree(G; M)]`` from the bar complex."""
    _check_group_guards(g, max_degree, allow_large)
    c = bar_chain_complex(g, m, max_degree + 1, normalized)
    return all_homology(c, max_degree)


def bar_cochain_complex(g: FinGroup, m: ZGRep, top: int) -> ChainComplexZ:
    """Cochains ``C^n = Hom(Z[G^n], M)`` for ``n = 0..top``, re-indexed as a
    chain complex ``D_k = C^{top-k}``.

    ``(δf)(g_1..g_{n+1}) = g_1 f(g_2..) + Σ (-1)^i f(..g_i g_{i+1}..)
    + (-1)^{n+1} f(g_1..g_n)``.
    """
    if m.group != g:
        raise ValidationError("representation lives over a different group")
    for n in range(1, top + 1):
        config.check_entries(m.rank * g.order ** (n - 1), m.rank * g.order ** n,
                             what=f"bar coboundary δ^{n - 1}")
    cells = {n: _BarIndex(g.order, n, False) for n in range(top + 1)}
    blocks = [m.action_matrix(x).array.T.copy() for x in g.elements]
    coboundaries = [_bar_boundary(g, blocks, m.rank, n, False, cells).T.copy()
                    for n in range(1, top + 1)]
    ranks = [len(cells[n]) * m.rank for n in range(top + 1)]
    return ChainComplexZ(tuple(reversed(ranks)),
                         tuple(IntMatrix(d) for d in reversed(coboundaries)))


def group_cohomology(g: FinGroup, m: ZGRep, max_degree: int,
                     allow_large: bool = False) -> list[FGAbelianGroup]:
    """``[H^0(G; M), ..., H^max_degree(G; M)]`` from the bar cochains."""
    _check_group_guards(g, max_degree, allow_large)
    top = max_degree + 1
    hs = all_homology(bar_cochain_complex(g, m, top))
    return [hs[top - n] for n in range(max_degree + 1)]


# --------------------------------------------------------------------------
# split extensions


class SplitExtensionGrp:
    """``G ⋉ M`` for a finite abelian ``M`` and ``action[g][m] = g·m``.

    Element ``(g, m)`` has index ``g * |M| + m`` and
    ``(g, m)(g', m') = (gg', m + g·m')``.
    """

    __slots__ = ("base", "fiber", "action", "total")

    def __init__(self, base: FinGroup, fiber: FinGroup,
                 action: Sequence[Sequence[int]]):
        if not fiber.is_abelian():
            raise ValidationError("fiber must be abelian", field="fiber")
        act = tuple(tuple(int(x) for x in row) for row in action)
        if len(act) != base.order or any(len(r) != fiber.order for r in act):
            raise ValidationError("action needs |G| rows of |M| entries",
                                  field="action")
        for g in base.elements:
            row = act[g]
            if sorted(row) != list(fiber.elements):
                raise ValidationError(f"action of {g} is not a bijection",
                                      field="action")
            for a in fiber.elements:
                for b in fiber.elements:
                    if row[fiber.mul(a, b)] != fiber.mul(row[a], row[b]):
                        raise ValidationError(
                            f"action of {g} is not additive", field="action")
        for g in base.elements:
            for h in base.elements:
                gh = base.mul(g, h)
                if any(act[gh][x] != act[g][act[h][x]] for x in fiber.elements):
                    raise ValidationError(
                        f"action is not a homomorphism at ({g}, {h})",
                        field="action")
        m = fiber.order
        n = base.order * m
        table = [[base.mul(a // m, b // m) * m
                  + fiber.mul(a % m, act[a // m][b % m])
                  for b in range(n)] for a in range(n)]
        self.base = base
        self.fiber = fiber
        self.action = act
        self.total = FinGroup(table)
        self._check_law()

    def _check_law(self):
        m = self.fiber.order
        for a in self.total.elements:
            for b in self.total.elements:
                g, x = divmod(a, m)
                h, y = divmod(b, m)
                expect = (self.base.mul(g, h) * m
                          + self.fiber.mul(x, self.action[g][y]))
                if self.total.mul(a, b) != expect:
                    raise ValidationError("semidirect law violated")
        if self.projection().compose(self.section()) != GroupHom.identity(self.base):
            raise ValidationError("projection ∘ section != id")

    def projection(self) -> GroupHom:
        m = self.fiber.order
        return GroupHom(self.total, self.base,
                        tuple(a // m for a in self.total.elements))

    def section(self) -> GroupHom:
        m = self.fiber.order
        return GroupHom(self.base, self.total,
                        tuple(g * m for g in self.base.elements))


def semidirect_by_units(base: FinGroup, n: int, units: Sequence[int]) -> SplitExtensionGrp:
    """``base ⋉ C_n`` where ``g`` acts on ``C_n`` by multiplication by ``units[g]``."""
    fiber = cyclic_group(n)
    return SplitExtensionGrp(base, fiber,
                             [[(u * x) % n for x in range(n)] for u in units])


def finite_coinvariants(fiber: FinGroup, action: Sequence[Sequence[int]]) -> FGAbelianGroup:
    """``M_G`` for a finite abelian ``M`` with a G-action given by permutations."""
    n = fiber.order
    cols = []
    for a in fiber.elements:
        for b in range(a, n):
            v = np.zeros(n, dtype=np.int64)
            v[a] += 1
            v[b] += 1
            v[fiber.mul(a, b)] -= 1
            cols.append(v)
    for row in action:
        for x in fiber.elements:
            if row[x] != x:
                v = np.zeros(n, dtype=np.int64)
                v[x] += 1
                v[row[x]] -= 1
                cols.append(v)
    return FGAbelianGroup.cokernel(IntMatrix(np.array(cols).T))


def com_split_extension(e: SplitExtensionGrp) -> tuple[FGAbelianGroup, FGAbelianGroup]:
    """``(Com(G ⋉ M), Com(G) ⊕ M_G)``; the two agree."""
    total = abelianize_group(e.total)
    predicted = abelianize_group(e.base) + finite_coinvariants(e.fiber, e.action)
    return total, predicted


# --------------------------------------------------------------------------
# change of groups


def pullback_module(f: GroupHom, n: ZGRep) -> ZGRep:
    """``f^* N``: same lattice, ``g`` acts through ``f(g)``."""
    if n.group != f.target:
        raise NotHomomorphismError("module is not over the target of f")
    return ZGRep(f.source, n.rank, [n.action_matrix(f(g)) for g in f.source.elements])


@dataclass(frozen=True)
class Pushforward:
    """``ZH ⊗_{ZG} M``: its underlying abelian group, and the H-lattice when
    the result is torsion-free."""

    underlying: FGAbelianGroup
    rep: ZGRep | None


def pushforward_module(f: GroupHom, m: ZGRep) -> Pushforward:
    """``f_* M = ZH ⊗_{ZG} M`` with ``H`` acting on the left factor.

    Generators ``h ⊗ e_j`` modulo ``h f(g) ⊗ e_j - h ⊗ g·e_j``.
    """
    if m.group != f.source:
        raise NotHomomorphismError("module is not over the source of f")
    h_grp, r = f.target, m.rank
    size = h_grp.order * r
    cols = []
    for g in f.source.elements:
        if g == 0:
            continue
        a = m.action_matrix(g).array
        fg = f(g)
        for h in h_grp.elements:
            hf = h_grp.mul(h, fg)
            for j in range(r):
                v = np.zeros(size, dtype=object)
                v[hf * r + j] += 1
                v[h * r:(h + 1) * r] -= a[:, j]
                if np.any(v != 0):
                    cols.append(v)
    if not cols:
        rel = IntMatrix.zeros(size, 0)
    else:
        rel = IntMatrix(np.array(cols, dtype=object).T)
    underlying = FGAbelianGroup.cokernel(rel)
    if underlying.torsion:
        return Pushforward(underlying, None)
    sf = smith_decomposition(rel)
    q = sf.u.array[sf.rank:]
    s = sf.u_inv.array[:, sf.rank:]
    actions = []
    for h in h_grp.elements:
        p = np.zeros((size, size), dtype=np.int64)
        for h2 in h_grp.elements:
            t = h_grp.mul(h, h2)
            p[t * r:(t + 1) * r, h2 * r:(h2 + 1) * r] = np.eye(r, dtype=np.int64)
        actions.append(IntMatrix(q) @ IntMatrix(p) @ IntMatrix(s))
    return Pushforward(underlying, ZGRep(h_grp, size - sf.rank, actions))
