"""Antipodes from the map beta, inverse lax structures, and Hopf modules."""

from __future__ import annotations

import itertools

from .cotensor import restrict_or_raise
from .equivariant import XiFamily, default_probes
from .errors import InternalError, NotHopf, NotWellDefined
from .exactla import LinearMap, compose_all, invert, kernel, rank, restrict, tensor
from .structures import (
    Bialgebra, CheckReport, EquivariantBicomodule, HopfAlgebra, ModuleCoalgebra, RightComodule,
    check_antipode, check_equivariant_bicomodule, eye, ground_coalgebra, is_equivariant_map, perm,
    regular_module_coalgebra, tensor_labels, trivial_comodule, trivial_module_coalgebra,
)


def beta_map(H: Bialgebra) -> LinearMap:
    """h (x) h' -> h_(1) (x) h_(2) h'."""
    F, n = H.field, H.dim
    return tensor(eye(F, n), H.mul) @ tensor(H.comul, eye(F, n))


def beta_corank(H: Bialgebra) -> int:
    return H.dim * H.dim - rank(beta_map(H))


def extract_antipode(H: Bialgebra) -> LinearMap | None:
    """S(h) = (eps (x) id) beta^{-1}(h (x) 1), or None when beta is singular."""
    F, n = H.field, H.dim
    binv = invert(beta_map(H))
    if binv is None:
        return None
    S = compose_all(tensor(H.counit, eye(F, n)), binv, tensor(eye(F, n), H.unit))
    report = check_antipode(H, S)
    if not report.ok:
        raise InternalError("beta is invertible but the extracted map is not an antipode: "
                            + report.first_failure().name)
    return S


def as_hopf(H: Bialgebra) -> HopfAlgebra:
    if isinstance(H, HopfAlgebra):
        return H
    S = extract_antipode(H)
    if S is None:
        raise NotHopf(f"beta is singular (corank {beta_corank(H)})")
    return HopfAlgebra.from_bialgebra(H, S)


def antipode_of(H: Bialgebra) -> LinearMap:
    return as_hopf(H).antipode


# ---------------------------------------------------------------------------
# inverse structure map


def xi_inverse_ambient(M: EquivariantBicomodule, S: LinearMap, X, W) -> LinearMap:
    """x (x) w (x) m -> x_(0) (x) w (x) S(x_(1)) m."""
    F = M.field
    x, h, w, m = X.dim, M.H.dim, W.dim, M.dim
    return compose_all(
        tensor(eye(F, x * w), M.action @ tensor(S, eye(F, m))),
        perm(F, (x, h, w, m), (0, 2, 1, 3)),
        tensor(X.coaction, eye(F, w * m)),
    )


def xi_inverse(M: EquivariantBicomodule, X, W, xi: XiFamily | None = None) -> LinearMap:
    """The map (X (x) W) []_C M -> X (x) (W []_C M) built from the antipode,
    verified to be a two-sided inverse of xi_{X,W}."""
    F = M.field
    S = antipode_of(M.H)
    xi = xi or XiFamily.from_action(M)
    fwd = xi.component(X, W)
    src = xi.T(xi.product(X, W)).inclusion
    dst = tensor(eye(F, X.dim), xi.T(W).inclusion)
    inv = restrict(xi_inverse_ambient(M, S, X, W), src, dst)
    if inv is None:
        raise NotWellDefined("antipode formula leaves X (x) (W []_C M)")
    if not (fwd @ inv).is_identity() or not (inv @ fwd).is_identity():
        raise InternalError("antipode formula is not inverse to xi")
    return inv


def check_strong(M: EquivariantBicomodule, probes=None) -> CheckReport:
    """xi and the antipode formula are mutually inverse on every probe."""
    R = CheckReport("lax structure is invertible")
    probes = probes or default_probes(M.H, M.C)
    xi = XiFamily.from_action(M)
    for xn, X in probes.xs:
        for wn, W in probes.ws:
            tag = f"inverse at ({xn}, {wn})"
            try:
                xi_inverse(M, X, W, xi)
                R.add(tag, True)
            except (InternalError, NotWellDefined, NotHopf) as exc:
                R.add(tag, False, detail=str(exc))
    return R


# ---------------------------------------------------------------------------
# Hopf modules


def psi_functor(H: Bialgebra, D: ModuleCoalgebra, W: RightComodule) -> EquivariantBicomodule:
    """H (x) W with lambda = Delta (x) id, rho(h (x) w) = h1 (x) w0 (x) h2 w1,
    and h . (h' (x) w) = h h' (x) w."""
    F = H.field
    h, w, d = H.dim, W.dim, D.dim
    C = regular_module_coalgebra(H)
    left = tensor(H.comul, eye(F, w))
    right = compose_all(
        tensor(eye(F, h * w), D.action),
        perm(F, (h, h, w, d), (0, 2, 1, 3)),
        tensor(H.comul, W.coaction),
    )
    action = tensor(H.mul, eye(F, w))
    return EquivariantBicomodule(H, C, D, h * w, left, right, action,
                                 tensor_labels(H.labels, W.labels))


class CoinvariantComodule(RightComodule):
    def __init__(self, over, inclusion: LinearMap, coaction: LinearMap):
        super().__init__(over, inclusion.cols, coaction)
        self.inclusion = inclusion


def coinvariants(M: EquivariantBicomodule) -> CoinvariantComodule:
    """{m : lambda(m) = 1 (x) m} with the restricted right D-coaction."""
    F, H = M.field, M.H
    incl = kernel(M.left - tensor(H.unit, eye(F, M.dim)))
    coaction = restrict_or_raise(M.right, incl, tensor(incl, eye(F, M.D.dim)), "rho_M")
    return CoinvariantComodule(M.D, incl, coaction)


def unit_map(H: Bialgebra, W: RightComodule, P: EquivariantBicomodule, K: CoinvariantComodule) -> LinearMap:
    """w -> 1 (x) w, as a map W -> coinvariants of Psi(W)."""
    F = H.field
    return restrict_or_raise(tensor(H.unit, eye(F, W.dim)), eye(F, W.dim), K.inclusion,
                             "w -> 1 (x) w")


def counit_map(M: EquivariantBicomodule, K: CoinvariantComodule) -> LinearMap:
    """h (x) m -> h . m, as a map H (x) coinvariants -> M."""
    return M.action @ tensor(eye(M.field, M.H.dim), K.inclusion)


def _counit_entries(R: CheckReport, M: EquivariantBicomodule, tag: str):
    K = coinvariants(M)
    eps = counit_map(M, K)
    ok = eps.rows == eps.cols and invert(eps) is not None
    R.add(f"counit H⊗coinv -> M is an isomorphism [{tag}]", ok,
          detail=f"dim coinv = {K.dim}, dim M = {M.dim}")
    if ok:
        P = psi_functor(M.H, M.D, K)
        R.add(f"counit is a Hopf-module map [{tag}]", is_equivariant_map(eps, P, M))
    return ok


def hopf_module_probes(H: Bialgebra, D: ModuleCoalgebra):
    """Default right D-comodules W: 0, k (if D has a group-like), D, D^2."""
    from .equivariant import find_grouplike
    from .structures import free_comodule, zero_comodule
    out = [("0", zero_comodule(D))]
    g = find_grouplike(D)
    if g is not None:
        out.append(("k", trivial_comodule(D, 1, g)))
    out.append(("D", free_comodule(D, 1)))
    out.append(("D^2", free_comodule(D, 2)))
    return out


def fundamental_theorem_check(H: Bialgebra, D: ModuleCoalgebra, probes=None, objects=None,
                              search=True, search_dim=2, budget=20000) -> CheckReport:
    """Unit and counit of Psi_D -| coinvariants on finitely many probes.

    For a bialgebra with singular beta, a bounded search for a Hopf module
    whose counit map is not invertible is added to the report."""
    R = CheckReport("Hopf module equivalence (verified on probe set)")
    probes = probes if probes is not None else hopf_module_probes(H, D)
    for wn, W in probes:
        P = psi_functor(H, D, W)
        if not R.extend(check_equivariant_bicomodule(P), f"Psi({wn}) "):
            continue
        K = coinvariants(P)
        R.add(f"dim coinv Psi({wn}) == dim {wn}", K.dim == W.dim, detail=f"{K.dim} vs {W.dim}")
        eta = unit_map(H, W, P, K)
        ok = eta.rows == eta.cols and invert(eta) is not None
        R.add(f"unit {wn} -> coinv Psi({wn}) is an isomorphism", ok)
        if ok:
            F = H.field
            R.compare(f"unit is D-colinear at {wn}", K.coaction @ eta,
                      tensor(eta, eye(F, D.dim)) @ W.coaction)
        _counit_entries(R, P, f"Psi({wn})")
    for on, M in (objects or []):
        _counit_entries(R, M, on)
    corank = beta_corank(H)
    if corank:
        R.notes.append(f"beta is singular (corank {corank})")
        if search:
            found, info = search_failing_hopf_module(H, D, search_dim, budget)
            R.notes.append(info)
            if found is not None:
                _counit_entries(R, found, "searched probe")
    else:
        R.notes.append("beta is invertible")
    return R


def _matrices(F, rows, cols, coeffs):
    for vals in itertools.product(coeffs, repeat=rows * cols):
        yield LinearMap.from_entries(F, rows, cols, [(i // cols, i % cols, v) for i, v in enumerate(vals) if v])


def search_failing_hopf_module(H: Bialgebra, D: ModuleCoalgebra, max_dim=2, budget=20000):
    """Bounded search over Hopf modules in dimension <= max_dim (right
    D-coaction x -> x (x) g for a group-like g of D) for one whose counit
    map is not an isomorphism.  Coefficients range over {0, 1, -1} (Q) or
    the whole prime field.  Returns (object or None, message)."""
    from .equivariant import find_grouplike
    from .structures import LeftComodule, LeftModule, check_left_comodule, check_module
    F = H.field
    coeffs = [0, 1, -1] if F.p is None else list(range(F.p))
    g = find_grouplike(D)
    if g is None:
        return None, "no group-like in D: search skipped"
    tried = 0
    for d in range(1, max_dim + 1):
        n = H.dim
        if len(coeffs) ** (n * d * d) > budget:
            return None, f"no failing probe found (search truncated at dim {d}, budget {budget})"
        comods = [lam for lam in _matrices(F, n * d, d, coeffs)
                  if check_left_comodule(LeftComodule(H, d, lam)).ok]
        mods = [a for a in _matrices(F, d, n * d, coeffs)
                if check_module(LeftModule(H, d, a)).ok]
        right = tensor(eye(F, d), g)
        for lam in comods:
            for a in mods:
                tried += 1
                M = EquivariantBicomodule(H, regular_module_coalgebra(H), D, d, lam, right, a)
                if not check_equivariant_bicomodule(M).ok:
                    continue
                K = coinvariants(M)
                eps = counit_map(M, K)
                if eps.rows != eps.cols or invert(eps) is None:
                    return M, f"failing probe found in dim {d} after {tried} candidates"
    return None, f"no failing probe found (exhaustive up to dim {max_dim}, {tried} candidates)"


def ground_module_coalgebra(H: Bialgebra) -> ModuleCoalgebra:
    """The ground field k as an H-module coalgebra via the counit."""
    return trivial_module_coalgebra(H, ground_coalgebra(H.field))


def antipode_is_antihomomorphism(H: HopfAlgebra) -> bool:
    F, n = H.field, H.dim
    S = H.antipode
    return S @ H.mul == H.mul @ tensor(S, S) @ perm(F, (n, n), (1, 0))
