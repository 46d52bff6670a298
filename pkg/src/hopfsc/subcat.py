"""Subcoalgebras, the torsion functor tau_D, the subcoalgebra / closed
subcategory correspondence, and Morita witnesses."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .cotensor import cotensor_bicomodule
from .errors import DimensionMismatch
from .exactla import (
    Field, LinearMap, contains, image, intersect, invert, kernel, preimage, restrict,
    same_subspace, tensor,
)
from .structures import (
    CheckReport, Coalgebra, EquivariantBicomodule, RightComodule, eye, free_comodule,
    regular_right, tensor_comodule, trivial_comodule,
)


@dataclass
class Subcoalgebra:
    parent: object
    inclusion: LinearMap

    @property
    def dim(self):
        return self.inclusion.cols

    @property
    def field(self):
        return self.parent.field


def check_subcoalgebra(D: Subcoalgebra, H_stable=False) -> CheckReport:
    R = CheckReport("subcoalgebra")
    C, iota = D.parent, D.inclusion
    R.add("inclusion is injective", image(iota).cols == iota.cols)
    R.add("Delta(D) inside D⊗D", restrict(C.comul, iota, tensor(iota, iota)) is not None)
    if H_stable:
        R.add("H . D inside D", is_h_stable(D))
    return R


def is_subcoalgebra(D: Subcoalgebra) -> bool:
    return restrict(D.parent.comul, D.inclusion, tensor(D.inclusion, D.inclusion)) is not None


def is_h_stable(D: Subcoalgebra) -> bool:
    C = D.parent
    H = C.H
    return restrict(C.action, tensor(eye(C.field, H.dim), D.inclusion), D.inclusion) is not None


def sub_coalgebra(D: Subcoalgebra) -> Coalgebra:
    """D as a coalgebra in its own basis."""
    C, iota = D.parent, D.inclusion
    comul = restrict(C.comul, iota, tensor(iota, iota))
    if comul is None:
        raise ValueError("not a subcoalgebra")
    return Coalgebra(C.field, D.dim, comul, C.counit @ iota)


@dataclass
class TauResult:
    inclusion: LinearMap      # tau(M) -> M
    steps: int                # number of refinement steps after V_0
    comodule: RightComodule   # tau(M) as a D-comodule
    history: list = dc_field(default_factory=list)

    @property
    def dim(self):
        return self.inclusion.cols


def tau(D: Subcoalgebra, M: RightComodule) -> TauResult:
    """Largest subspace V of M with rho(V) inside V (x) D, by iterating
    V_0 = rho^{-1}(M (x) D), V_{k+1} = {v in V_k : rho(v) in V_k (x) D}."""
    F = M.field
    iota = D.inclusion
    rho = M.coaction
    V = preimage(rho, tensor(eye(F, M.dim), iota))
    history = [V.cols]
    steps = 0
    while True:
        W = intersect(V, preimage(rho, tensor(V, iota)))
        if W.cols == V.cols:
            break
        V = W
        steps += 1
        history.append(V.cols)
    coaction = restrict(rho, V, tensor(V, iota))
    if coaction is None:
        raise AssertionError("fixpoint is not a subcomodule")
    Dco = sub_coalgebra(D)
    return TauResult(V, steps, RightComodule(Dco, V.cols, coaction), history)


def as_parent_comodule(T: TauResult, D: Subcoalgebra) -> RightComodule:
    """tau(M) viewed again as a C-comodule."""
    F = D.field
    return RightComodule(D.parent, T.dim, tensor(eye(F, T.dim), D.inclusion) @ T.comodule.coaction)


@dataclass
class InclusionReport:
    included: bool
    strict: bool
    dims: tuple   # (dim X (x) tau(M), dim tau(X (x) M))

    def to_dict(self):
        return {"included": self.included, "strict": self.strict, "dims": list(self.dims)}


def check_equivariance_inclusion(H, C, D: Subcoalgebra, X: RightComodule, M: RightComodule) -> InclusionReport:
    """Compare X (x) tau(M) with tau(X (x) M) inside X (x) M."""
    F = M.field
    tM = tau(D, M)
    XM = tensor_comodule(X, M, C)
    tXM = tau(D, XM)
    sub = tensor(eye(F, X.dim), tM.inclusion)
    included = contains(tXM.inclusion, sub)
    return InclusionReport(included, included and sub.cols < tXM.dim, (sub.cols, tXM.dim))


def grouplike_lines(C) -> list:
    """Right C-comodules k_g for every group-like basis vector g."""
    F, n = C.field, C.dim
    out = []
    for i in range(n):
        if C.comul.column(i) == {i * n + i: 1} and C.counit[0, i] == 1:
            g = LinearMap(F, n, 1, [{i: 1}])
            out.append((f"k_{C.labels[i]}", trivial_comodule(C, 1, g)))
    return out


def correspondence_probes(H, C):
    xs = [("k", trivial_comodule(H)), ("H", regular_right(H))] + grouplike_lines(H)
    ms = [("C", regular_right(C)), ("C^2", free_comodule(C, 2))] + grouplike_lines(C)
    return xs, ms


def roundtrip_correspondence(H, C, D: Subcoalgebra, probes=None) -> CheckReport:
    """tau_D of the regular comodule is D, and D is H-stable exactly when
    X (x) tau(M) lies in tau(X (x) M) for every probe pair."""
    R = CheckReport("subcoalgebra correspondence")
    if not R.extend(check_subcoalgebra(D)):
        return R
    t = tau(D, regular_right(C))
    R.add("tau_D(C) == D", same_subspace(t.inclusion, D.inclusion),
          detail=f"dim tau = {t.dim}, dim D = {D.dim}")
    xs, ms = probes or correspondence_probes(H, C)
    all_in = True
    for xn, X in xs:
        for mn, M in ms:
            rep = check_equivariance_inclusion(H, C, D, X, M)
            all_in = all_in and rep.included
    stable = is_h_stable(D)
    R.add("H-stable iff inclusion holds on all probes", stable == all_in,
          detail=f"H-stable: {stable}, inclusion on probes: {all_in}")
    return R


def enumerate_subspaces(field: Field, n: int):
    """Every subspace of F^n (F finite), as reduced echelon injections."""
    if field.p is None:
        raise ValueError("subspace enumeration needs a finite field")
    els = list(range(field.p))
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            # free slots: (row i, column j) with j > pivot_i and j not a pivot
            slots = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for vals in itertools.product(els, repeat=len(slots)):
                cols = [dict() for _ in range(k)]
                for i, pc in enumerate(pivots):
                    cols[i][pc] = 1
                for (i, j), v in zip(slots, vals):
                    if v:
                        cols[i][j] = v
                yield LinearMap(field, n, k, cols)


def enumerate_subcoalgebras(C):
    for V in enumerate_subspaces(C.field, C.dim):
        D = Subcoalgebra(C, V)
        if is_subcoalgebra(D):
            yield D


# ---------------------------------------------------------------------------
# Morita witnesses


def regular_equivariant(C) -> EquivariantBicomodule:
    """A module coalgebra C as a C-C-bicomodule in H-modules."""
    return EquivariantBicomodule(C.H, C, C, C.dim, C.comul, C.comul, C.action, C.labels)


def intertwiner_space(P: EquivariantBicomodule, T: EquivariantBicomodule) -> list[LinearMap]:
    """Basis of all linear f: P -> T commuting with both coactions and the action."""
    F = P.field
    p, t = P.dim, T.dim
    c, d, h = P.C.dim, P.D.dim, P.H.dim

    def constraints(f):
        a = T.left @ f - tensor(eye(F, c), f) @ P.left
        b = T.right @ f - tensor(f, eye(F, d)) @ P.right
        e = f @ P.action - T.action @ tensor(eye(F, h), f)
        return [a, b, e]

    columns = []
    for j in range(p):
        for i in range(t):
            f = LinearMap(F, t, p, [({i: 1} if jj == j else {}) for jj in range(p)])
            col = {}
            off = 0
            for g in constraints(f):
                for r, cc, v in g.entries:
                    col[off + cc * g.rows + r] = v
                off += g.rows * g.cols
            columns.append(col)
    nrows = t * c * p + t * d * p + t * h * p
    system = LinearMap(F, nrows, t * p, columns)
    K = kernel(system)
    out = []
    for k in range(K.cols):
        vec = K.column(k)
        cols = [dict() for _ in range(p)]
        for idx, v in vec.items():
            j, i = divmod(idx, t)
            cols[j][i] = v
        out.append(LinearMap(F, t, p, cols))
    return out


def find_isomorphism(P, T, rng: random.Random, tries: int = 200):
    """Returns (status, map or None, solution-space dimension, attempts)."""
    if P.dim != T.dim:
        return "not_isomorphic", None, 0, 0
    basis = intertwiner_space(P, T)
    if P.dim == 0:
        return "verified", LinearMap.zero(P.field, 0, 0), len(basis), 0
    if not basis:
        return "not_isomorphic", None, 0, 0
    F = P.field
    attempts = 0
    for f in basis:
        attempts += 1
        if invert(f) is not None:
            return "verified", f, len(basis), attempts
    for _ in range(tries):
        attempts += 1
        if F.p is None:
            coeffs = [rng.randint(-3, 3) for _ in basis]
        else:
            coeffs = [rng.randrange(F.p) for _ in basis]
        f = LinearMap.zero(F, T.dim, P.dim)
        for cf, b in zip(coeffs, basis):
            if cf:
                f = f + b.scale(cf)
        if invert(f) is not None:
            return "verified", f, len(basis), attempts
    return "inconclusive", None, len(basis), attempts


@dataclass
class MoritaResult:
    status: str                      # verified | inconclusive | not_isomorphic
    maps: dict
    solution_dims: dict
    attempts: dict
    dims: dict

    @property
    def verified(self):
        return self.status == "verified"

    def to_dict(self):
        return {
            "status": self.status,
            "dims": self.dims,
            "solution_dims": self.solution_dims,
            "attempts": self.attempts,
            "maps": {k: None if f is None else [[r, c, str(v)] for r, c, v in f.entries]
                     for k, f in self.maps.items()},
        }


def morita_witness_check(H, C, D, M: EquivariantBicomodule, N: EquivariantBicomodule,
                         seed: int = 0, tries: int = 200) -> MoritaResult:
    """Look for isomorphisms M []_D N = C and N []_C M = D of equivariant
    bicomodules."""
    if M.C.dim != C.dim or M.D.dim != D.dim or N.C.dim != D.dim or N.D.dim != C.dim:
        raise DimensionMismatch("M must be a C-D- and N a D-C-bicomodule")
    if M.H.dim != H.dim or N.H.dim != H.dim:
        raise DimensionMismatch("M and N must carry actions of H")
    rng = random.Random(seed)
    P = cotensor_bicomodule(M, N)
    Q = cotensor_bicomodule(N, M)
    s1, f1, d1, a1 = find_isomorphism(P, regular_equivariant(C), rng, tries)
    s2, f2, d2, a2 = find_isomorphism(Q, regular_equivariant(D), rng, tries)
    if s1 == s2 == "verified":
        status = "verified"
    elif "not_isomorphic" in (s1, s2):
        status = "not_isomorphic"
    else:
        status = "inconclusive"
    return MoritaResult(status, {"M□N->C": f1, "N□M->D": f2},
                        {"M□N->C": d1, "N□M->D": d2}, {"M□N->C": a1, "N□M->D": a2},
                        {"M□N": P.dim, "N□M": Q.dim, "C": C.dim, "D": D.dim})
