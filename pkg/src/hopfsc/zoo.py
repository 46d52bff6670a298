"""Small example structures with known properties."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import CharTwo
from .exactla import QQ, Field, LinearMap, tensor
from .structures import (
    Bialgebra, EquivariantBicomodule, HopfAlgebra, eye, ground_coalgebra, perm,
    regular_module_coalgebra, tensor_labels, trivial_module_coalgebra,
)


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def group_algebra(table, field: Field = QQ, labels=None) -> HopfAlgebra:
    """Group algebra of a finite group given by its multiplication table
    (``table[i][j]`` is the index of g_i g_j)."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise ValueError("multiplication table must be square")
    units = [e for e in range(n) if all(table[e][j] == j and table[j][e] == j for j in range(n))]
    if len(units) != 1:
        raise ValueError("table has no two-sided identity")
    e = units[0]
    inv = []
    for i in range(n):
        found = [j for j in range(n) if table[i][j] == e and table[j][i] == e]
        if not found:
            raise ValueError(f"element {i} has no inverse")
        inv.append(found[0])
    F = field
    comul = LinearMap.from_entries(F, n * n, n, [(i * n + i, i, 1) for i in range(n)])
    counit = LinearMap.from_entries(F, 1, n, [(0, i, 1) for i in range(n)])
    mul = LinearMap.from_entries(F, n, n * n, [(table[i][j], i * n + j, 1)
                                               for i in range(n) for j in range(n)])
    unit = LinearMap.from_entries(F, n, 1, [(e, 0, 1)])
    S = LinearMap.from_entries(F, n, n, [(inv[i], i, 1) for i in range(n)])
    if labels is None:
        labels = ["1" if i == e else f"g{i}" for i in range(n)]
        if n == 2:
            labels = ["1", "g"] if e == 0 else ["g", "1"]
    return HopfAlgebra(F, n, comul, counit, mul, unit, S, labels)


def kc2(field: Field = QQ) -> HopfAlgebra:
    return group_algebra(cyclic_table(2), field)


def kc3(field: Field = QQ) -> HopfAlgebra:
    return group_algebra(cyclic_table(3), field, ["1", "g", "g2"])


def ground_field(field: Field = QQ) -> HopfAlgebra:
    """The one-dimensional Hopf algebra k."""
    return group_algebra([[0]], field, ["1"])


# basis order of the Sweedler algebra
H4_LABELS = ["1", "g", "x", "gx"]


def sweedler_h4(field: Field = QQ) -> HopfAlgebra:
    """Four-dimensional Sweedler algebra: g^2 = 1, x^2 = 0, xg = -gx,
    Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x."""
    if field.p == 2:
        raise CharTwo("the Sweedler algebra needs characteristic different from 2")
    F = field
    one, g, x, gx = range(4)
    prod = {
        (g, g): [(one, 1)], (g, x): [(gx, 1)], (g, gx): [(x, 1)],
        (x, g): [(gx, -1)], (gx, g): [(x, -1)],
    }
    mul_entries = []
    for a in range(4):
        for b in range(4):
            if a == one:
                terms = [(b, 1)]
            elif b == one:
                terms = [(a, 1)]
            else:
                terms = prod.get((a, b), [])
            mul_entries.extend((out, a * 4 + b, c) for out, c in terms)
    mul = LinearMap.from_entries(F, 4, 16, mul_entries)
    comul = LinearMap.from_entries(F, 16, 4, [
        (one * 4 + one, one, 1),
        (g * 4 + g, g, 1),
        (x * 4 + one, x, 1), (g * 4 + x, x, 1),
        (gx * 4 + g, gx, 1), (one * 4 + gx, gx, 1),
    ])
    counit = LinearMap.from_entries(F, 1, 4, [(0, one, 1), (0, g, 1)])
    unit = LinearMap.from_entries(F, 4, 1, [(one, 0, 1)])
    S = LinearMap.from_entries(F, 4, 4, [(one, one, 1), (g, g, 1), (gx, x, -1), (x, gx, 1)])
    return HopfAlgebra(F, 4, comul, counit, mul, unit, S, H4_LABELS)


def idempotent_monoid_bialgebra(field: Field = QQ) -> Bialgebra:
    """Monoid algebra of {1, x} with x^2 = x; both basis elements group-like.
    A bialgebra without antipode."""
    F = field
    comul = LinearMap.from_entries(F, 4, 2, [(0, 0, 1), (3, 1, 1)])
    counit = LinearMap.from_entries(F, 1, 2, [(0, 0, 1), (0, 1, 1)])
    mul = LinearMap.from_entries(F, 2, 4, [(0, 0, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1)])
    unit = LinearMap.from_entries(F, 2, 1, [(0, 0, 1)])
    return Bialgebra(F, 2, comul, counit, mul, unit, ["1", "x"])


def kc2_dual(field: Field = QQ) -> HopfAlgebra:
    from .cosmash import dual_bialgebra
    return dual_bialgebra(kc2(field))


# ---------------------------------------------------------------------------
# equivariant bicomodules


def regular_bicomodule(H: Bialgebra) -> EquivariantBicomodule:
    """H as an H-H-bicomodule in H-modules (coactions Delta, action mul)."""
    C = regular_module_coalgebra(H)
    return EquivariantBicomodule(H, C, C, H.dim, H.comul, H.comul, H.mul, H.labels)


def hopf_module_over_ground(H: Bialgebra) -> EquivariantBicomodule:
    """H as a Hopf module: left coaction Delta, action mul, trivial right
    coaction over the ground coalgebra."""
    F = H.field
    C = regular_module_coalgebra(H)
    D = trivial_module_coalgebra(H, ground_coalgebra(F))
    return EquivariantBicomodule(H, C, D, H.dim, H.comul, eye(F, H.dim), H.mul, H.labels)


def psi_regular(H: Bialgebra) -> EquivariantBicomodule:
    """H (x) H with lambda = Delta (x) id, rho(h (x) w) = h1 (x) w1 (x) h2 w2,
    action on the first leg."""
    F = H.field
    n = H.dim
    C = regular_module_coalgebra(H)
    I = eye(F, n)
    left = tensor(H.comul, I)
    right = (tensor(I, I, H.mul) @ perm(F, (n, n, n, n), (0, 2, 1, 3))) @ tensor(H.comul, H.comul)
    action = tensor(H.mul, I)
    return EquivariantBicomodule(H, C, C, n * n, left, right, action,
                                 tensor_labels(H.labels, H.labels))


def twisted_regular(H: Bialgebra, alpha: LinearMap) -> EquivariantBicomodule:
    """Regular bicomodule with right coaction twisted by an H-linear coalgebra
    automorphism alpha: rho = (id (x) alpha) o Delta."""
    F = H.field
    C = regular_module_coalgebra(H)
    right = tensor(eye(F, H.dim), alpha) @ H.comul
    return EquivariantBicomodule(H, C, C, H.dim, H.comul, right, H.mul, H.labels)


def kc2_twist(field: Field = QQ) -> LinearMap:
    """Left multiplication by g on kC2: swaps the two group-likes."""
    return LinearMap.from_entries(field, 2, 2, [(1, 0, 1), (0, 1, 1)])


def trivial_action_bicomodule(H: Bialgebra, C) -> EquivariantBicomodule:
    """C as a C-C-bicomodule with H acting through the counit everywhere."""
    F = H.field
    MC = trivial_module_coalgebra(H, C)
    act = tensor(H.counit, eye(F, C.dim))
    return EquivariantBicomodule(H, MC, MC, C.dim, C.comul, C.comul, act, C.labels)


def equivariant_zoo(field: Field = QQ) -> dict:
    """Named equivariant bicomodules over kC2 and (char != 2) H4."""
    H = kc2(field)
    out = {
        "kc2_regular": regular_bicomodule(H),
        "kc2_hopf_module": hopf_module_over_ground(H),
        "kc2_psi": psi_regular(H),
        "kc2_twisted": twisted_regular(H, kc2_twist(field)),
        "kc2_trivial_action": trivial_action_bicomodule(H, H.coalgebra),
    }
    if field.p != 2:
        H4 = sweedler_h4(field)
        out["h4_regular"] = regular_bicomodule(H4)
        out["h4_hopf_module"] = hopf_module_over_ground(H4)
    return out


# ---------------------------------------------------------------------------
# catalog


@dataclass
class ZooEntry:
    name: str
    build: object
    expect: dict = dc_field(default_factory=dict)
    fields: tuple = (None, 3, 2)

    def make(self, field: Field = QQ):
        return self.build(field)


def antipode_order(S: LinearMap) -> int:
    P = S
    for k in range(1, 65):
        if P.is_identity():
            return k
        P = P @ S
    return 0


def zoo_catalog() -> list[ZooEntry]:
    """Algebraic structures with machine-readable expected properties.

    ``fields`` lists the characteristics (None for Q) where the entry exists.
    """
    return [
        ZooEntry("ground", ground_field,
                 {"kind": "hopf", "dim": 1, "is_hopf": True, "antipode_order": 1, "beta_corank": 0}),
        ZooEntry("kc2", kc2,
                 {"kind": "hopf", "dim": 2, "is_hopf": True, "antipode_order": 1, "beta_corank": 0}),
        ZooEntry("kc3", kc3,
                 {"kind": "hopf", "dim": 3, "is_hopf": True, "antipode_order": 2, "beta_corank": 0}),
        ZooEntry("h4", sweedler_h4,
                 {"kind": "hopf", "dim": 4, "is_hopf": True, "antipode_order": 4, "beta_corank": 0},
                 fields=(None, 3, 5)),
        ZooEntry("m2", idempotent_monoid_bialgebra,
                 {"kind": "bialgebra", "dim": 2, "is_hopf": False, "beta_corank": 1}),
        ZooEntry("kc2_dual", kc2_dual,
                 {"kind": "hopf", "dim": 2, "is_hopf": True, "antipode_order": 1, "beta_corank": 0}),
        ZooEntry("kc2_regular", lambda F: regular_bicomodule(kc2(F)),
                 {"kind": "equivariant_bicomodule", "dim": 2}),
        ZooEntry("kc2_hopf_module", lambda F: hopf_module_over_ground(kc2(F)),
                 {"kind": "equivariant_bicomodule", "dim": 2}),
        ZooEntry("kc2_psi", lambda F: psi_regular(kc2(F)),
                 {"kind": "equivariant_bicomodule", "dim": 4}),
        ZooEntry("kc2_twisted", lambda F: twisted_regular(kc2(F), kc2_twist(F)),
                 {"kind": "equivariant_bicomodule", "dim": 2}),
        ZooEntry("kc2_trivial_action", lambda F: trivial_action_bicomodule(kc2(F), kc2(F).coalgebra),
                 {"kind": "equivariant_bicomodule", "dim": 2}),
        ZooEntry("h4_regular", lambda F: regular_bicomodule(sweedler_h4(F)),
                 {"kind": "equivariant_bicomodule", "dim": 4}, fields=(None, 3, 5)),
        ZooEntry("h4_hopf_module", lambda F: hopf_module_over_ground(sweedler_h4(F)),
                 {"kind": "equivariant_bicomodule", "dim": 4}, fields=(None, 3, 5)),
    ]


def catalog_entry(name: str) -> ZooEntry:
    for e in zoo_catalog():
        if e.name == name:
            return e
    raise KeyError(name)


def module_coalgebra_zoo(field: Field = QQ) -> dict:
    """Named module coalgebras: regular ones, trivial actions, the ground
    coalgebra, and the cosmash coalgebra of kC2 with itself."""
    from .cosmash import cosmash
    H = kc2(field)
    out = {
        "ground_regular": regular_module_coalgebra(ground_field(field)),
        "kc2_regular": regular_module_coalgebra(H),
        "kc2_on_ground": trivial_module_coalgebra(H, ground_coalgebra(field)),
        "kc2_trivial_action": trivial_module_coalgebra(H, H.coalgebra),
        "kc3_regular": regular_module_coalgebra(kc3(field)),
        "m2_regular": regular_module_coalgebra(idempotent_monoid_bialgebra(field)),
        "kc2_cosmash": cosmash(H, regular_module_coalgebra(H)),
    }
    if field.p != 2:
        out["h4_regular"] = regular_module_coalgebra(sweedler_h4(field))
    return out
