"""Yetter-Drinfeld modules over a bialgebra H (acting on itself), with
coefficients in an H-bimodule coalgebra C, and their lax-center and
Hopf-bimodule descriptions."""

from __future__ import annotations

from .cotensor import restrict_or_raise
from .equivariant import (
    BiEquivariantBicomodule, BimoduleCoalgebra, XiFamily, actions_commute,
    regular_bimodule_coalgebra, xi_right,
)
from .errors import NotHopf
from .exactla import LinearMap, compose_all, invert, tensor
from .hopf import as_hopf, xi_inverse
from .structures import (
    CheckReport, RightComodule, check_equivariant_bicomodule, check_right_comodule, eye,
    perm, regular_right, tensor_comodule, tensor_labels, trivial_comodule,
)


class YDModule:
    """Right H-module (m (x) a -> m a) with a right C-coaction."""

    def __init__(self, H, C: BimoduleCoalgebra, dim: int, action: LinearMap, coaction: LinearMap,
                 labels=None):
        if action.shape != (dim, dim * H.dim):
            raise ValueError(f"action has shape {action.shape}")
        if coaction.shape != (dim * C.dim, dim):
            raise ValueError(f"coaction has shape {coaction.shape}")
        self.H = H
        self.C = C
        self.field = H.field
        self.dim = dim
        self.action = action
        self.coaction = coaction
        self.labels = labels or [f"m{i}" for i in range(dim)]

    @property
    def comodule(self) -> RightComodule:
        return RightComodule(self.C, self.dim, self.coaction, self.labels)


def yd_composites(M: YDModule):
    """Both sides of (m a2)_(0) (x) a1 |> (m a2)_(1) = m_(0) a1 (x) m_(1) <| a2
    as maps M (x) H -> M (x) C."""
    H, C, F = M.H, M.C, M.field
    h, c, m = H.dim, C.dim, M.dim
    lhs = compose_all(
        tensor(eye(F, m), C.action_l),
        perm(F, (h, m, c), (1, 0, 2)),
        tensor(eye(F, h), M.coaction @ M.action),
        perm(F, (m, h, h), (1, 0, 2)),
        tensor(eye(F, m), H.comul),
    )
    rhs = compose_all(
        tensor(M.action, C.action_r),
        perm(F, (m, c, h, h), (0, 2, 1, 3)),
        tensor(M.coaction, H.comul),
    )
    return lhs, rhs


def yd_antipode_composites(M: YDModule, S: LinearMap):
    """rho(m a) versus m_(0) a2 (x) S(a1) |> m_(1) <| a3."""
    H, C, F = M.H, M.C, M.field
    h, c, m = H.dim, C.dim, M.dim
    Ih = eye(F, h)
    delta2 = tensor(H.comul, Ih) @ H.comul
    lhs = M.coaction @ M.action
    # (m0, m1, a1, a2, a3) -> (m0, a2, a1, m1, a3)
    rhs = compose_all(
        tensor(M.action, C.action_l @ tensor(S, C.action_r)),
        perm(F, (m, c, h, h, h), (0, 3, 2, 1, 4)),
        tensor(M.coaction, delta2),
    )
    return lhs, rhs


def check_yd(M: YDModule) -> CheckReport:
    R = CheckReport("Yetter-Drinfeld module")
    H, F = M.H, M.field
    m, h = M.dim, H.dim
    a = M.action
    labels = tensor_labels(M.labels, H.labels)
    R.compare("right module associativity", a @ tensor(a, eye(F, h)), a @ tensor(eye(F, m), H.mul),
              tensor_labels(M.labels, H.labels, H.labels))
    R.compare("right module unit", a @ tensor(eye(F, m), H.unit), eye(F, m), M.labels)
    R.extend(check_right_comodule(M.comodule), "comodule ")
    lhs, rhs = yd_composites(M)
    main = R.compare("Yetter-Drinfeld condition", lhs, rhs, labels)
    try:
        S = as_hopf(H).antipode
    except NotHopf:
        S = None
    if S is not None:
        l2, r2 = yd_antipode_composites(M, S)
        alt = l2 == r2
        R.compare("antipode form", l2, r2, labels)
        R.add("both forms agree", alt == main)
    return R


# ---------------------------------------------------------------------------
# lax center


def sigma_from_yd(M: YDModule, X: RightComodule) -> LinearMap:
    """m (x) x -> x_(0) (x) m x_(1)."""
    F = M.field
    m, x, h = M.dim, X.dim, M.H.dim
    return compose_all(
        tensor(eye(F, x), M.action),
        perm(F, (m, x, h), (1, 0, 2)),
        tensor(eye(F, m), X.coaction),
    )


def right_product_coaction(M: YDModule, X: RightComodule) -> LinearMap:
    """M (x) X in M^C: m0 (x) x0 (x) m1 <| x1."""
    F = M.field
    m, x, c, h = M.dim, X.dim, M.C.dim, M.H.dim
    return compose_all(tensor(eye(F, m * x), M.C.action_r), perm(F, (m, c, x, h), (0, 2, 1, 3)),
                       tensor(M.coaction, X.coaction))


def left_product_coaction(M: YDModule, X: RightComodule) -> LinearMap:
    """X (x) M in M^C: x0 (x) m0 (x) x1 |> m1."""
    F = M.field
    m, x, c, h = M.dim, X.dim, M.C.dim, M.H.dim
    return compose_all(tensor(eye(F, x * m), M.C.action_l), perm(F, (x, h, m, c), (0, 2, 1, 3)),
                       tensor(X.coaction, M.coaction))


def lax_center_probes(H):
    RH = regular_right(H)
    return [("k", trivial_comodule(H)), ("H", RH), ("H⊗H", tensor_comodule(RH, RH))]


def check_lax_center(M: YDModule, probes=None) -> CheckReport:
    """sigma is C-colinear and natural, sigma_1 = id, and
    sigma_{X (x) Y} = (id_X (x) sigma_Y)(sigma_X (x) id_Y) on the probes."""
    R = CheckReport("lax center object")
    H, F, C = M.H, M.field, M.C
    probes = probes or lax_center_probes(H)
    for xn, X in probes:
        s = sigma_from_yd(M, X)
        R.compare(f"sigma_{xn} is C-colinear", left_product_coaction(M, X) @ s,
                  tensor(s, eye(F, C.dim)) @ right_product_coaction(M, X))
    k = trivial_comodule(H)
    R.compare("sigma_1 is the identity", sigma_from_yd(M, k), eye(F, M.dim))
    for xn, X in probes:
        for yn, Y in probes:
            if X.dim * Y.dim > H.dim * H.dim:
                continue
            XY = tensor_comodule(X, Y)
            lhs = sigma_from_yd(M, XY)
            rhs = tensor(eye(F, X.dim), sigma_from_yd(M, Y)) @ tensor(sigma_from_yd(M, X), eye(F, Y.dim))
            R.compare(f"sigma_({xn}⊗{yn}) coherence", lhs, rhs)
    RH = regular_right(H)
    from .structures import free_comodule
    for fname, f, X1, X2 in [("Delta_H", H.comul, RH, free_comodule(H, H.dim)),
                             ("u", H.unit, k, RH)]:
        R.compare(f"sigma natural along {fname}",
                  sigma_from_yd(M, X2) @ tensor(eye(F, M.dim), f),
                  tensor(f, eye(F, M.dim)) @ sigma_from_yd(M, X1))
    return R


# ---------------------------------------------------------------------------
# Hopf bimodule description


def yd_to_bicomodule(M: YDModule) -> BiEquivariantBicomodule:
    """F(H) = H (x) M for the functor F(X) = X (x) M with structure from sigma:
    lambda = Delta (x) id, rho(h (x) m) = h1 (x) m0 (x) h2 |> m1,
    h (h' (x) m) = h h' (x) m and (h' (x) m) k = h' sigma(m (x) k)."""
    H, F = M.H, M.field
    as_hopf(H)
    h, m = H.dim, M.dim
    RH = regular_right(H)
    left = tensor(H.comul, eye(F, m))
    right = left_product_coaction(M, RH)
    action_l = tensor(H.mul, eye(F, m))
    action_r = tensor(H.mul, eye(F, m)) @ tensor(eye(F, h), sigma_from_yd(M, RH))
    CH = regular_bimodule_coalgebra(H)
    return BiEquivariantBicomodule(H, H, CH, M.C, h * m, left, right, action_l, action_r,
                                   tensor_labels(H.labels, M.labels))


def check_bi_equivariant(N: BiEquivariantBicomodule) -> CheckReport:
    R = CheckReport("Hopf bimodule with coefficients")
    R.extend(check_equivariant_bicomodule(N.left_part), "left: ")
    R.extend(check_equivariant_bicomodule(N.right_part.as_left_over_op()), "right: ")
    lhs, rhs = actions_commute(N.H, N.K, N.dim, N.action_l, N.action_r, N.field)
    R.compare("actions commute", lhs, rhs)
    return R


class RecoveredYD(YDModule):
    def __init__(self, H, C, inclusion, action, coaction):
        super().__init__(H, C, inclusion.cols, action, coaction)
        self.inclusion = inclusion


def bicomodule_to_yd(N: BiEquivariantBicomodule) -> RecoveredYD:
    """M = F(k) = coinvariants with sigma_X = (xi^l_{X,k})^{-1} o xi^r_{k,X};
    the right action is read off from sigma_H."""
    H, F = N.H, N.field
    as_hopf(H)
    left = N.left_part
    k = trivial_comodule(H)
    RH = regular_right(H)
    xi = XiFamily.from_action(left)
    Tk = xi.T(k)
    inv = xi_inverse(left, RH, k, xi)                     # (H (x) k) [] N -> H (x) T(k)
    xr = xi_right(N.right_part, k, RH)                    # T(k) (x) H -> (k (x) H) [] N
    sigma = inv @ xr                                       # T(k) (x) H -> H (x) T(k)
    action = tensor(H.counit, eye(F, Tk.dim)) @ sigma
    return RecoveredYD(H, N.D, Tk.inclusion, action, Tk.coaction)


def yd_roundtrip(M: YDModule) -> CheckReport:
    """YD module -> Hopf bimodule -> YD module, compared table by table
    through the identification m -> 1 (x) m."""
    R = CheckReport("Yetter-Drinfeld / Hopf bimodule round trip")
    if not R.extend(check_yd(M), "input: "):
        return R
    H, F = M.H, M.field
    try:
        N = yd_to_bicomodule(M)
    except NotHopf as exc:
        R.add("H is a Hopf algebra", False, detail=str(exc))
        return R
    R.extend(check_bi_equivariant(N), "forward: ")
    R.add("forward dimension is dim H * dim M", N.dim == H.dim * M.dim)
    back = bicomodule_to_yd(N)
    R.add("coinvariants have dimension dim M", back.dim == M.dim)
    if back.dim != M.dim:
        return R
    j = restrict_or_raise(tensor(H.unit, eye(F, M.dim)), eye(F, M.dim), back.inclusion, "m -> 1 (x) m")
    jinv = invert(j)
    R.add("m -> 1 (x) m is an isomorphism onto coinvariants", jinv is not None)
    if jinv is None:
        return R
    action = jinv @ back.action @ tensor(j, eye(F, H.dim))
    coaction = tensor(jinv, eye(F, M.C.dim)) @ back.coaction @ j
    R.compare("recovered action equals the original", action, M.action,
              tensor_labels(M.labels, H.labels))
    R.compare("recovered coaction equals the original", coaction, M.coaction, M.labels)
    return R


# ---------------------------------------------------------------------------
# examples


def trivial_yd(H, C: BimoduleCoalgebra | None = None, grouplike=None) -> YDModule:
    """k with m a = eps(a) m and coaction m -> m (x) g."""
    C = C or regular_bimodule_coalgebra(H)
    g = grouplike if grouplike is not None else H.unit
    return YDModule(H, C, 1, H.counit, g, ["m"])


def adjoint_yd(H) -> YDModule:
    """H with coaction Delta and right adjoint action m a = S(a1) m a2."""
    Hh = as_hopf(H)
    F, n = H.field, H.dim
    S = Hh.antipode
    # (m, a1, a2) -> (a1, m, a2) -> S(a1) m a2
    action = compose_all(H.mul, tensor(H.mul, eye(F, n)), tensor(S, eye(F, n * n)),
                         perm(F, (n, n, n), (1, 0, 2)), tensor(eye(F, n), H.comul))
    return YDModule(H, regular_bimodule_coalgebra(H), n, action, H.comul, H.labels)


def graded_yd_kc2(field, swap=False) -> YDModule:
    """kC2-YD module on k^2 with e0 in degree 1 and e1 in degree g; g acts by
    diag(1, -1), or by swapping e0 and e1 when ``swap`` (not Yetter-Drinfeld)."""
    from .zoo import kc2
    H = kc2(field)
    F = field
    if swap:
        g_act = [(1, 0, 1), (0, 1, 1)]
    else:
        g_act = [(0, 0, 1), (1, 1, -1)]
    # action: (m, a) at column m*2 + a
    entries = [(0, 0, 1), (1, 2, 1)] + [(r, c * 2 + 1, v) for r, c, v in g_act]
    action = LinearMap.from_entries(F, 2, 4, entries)
    coaction = LinearMap.from_entries(F, 4, 2, [(0 * 2 + 0, 0, 1), (1 * 2 + 1, 1, 1)])
    return YDModule(H, regular_bimodule_coalgebra(H), 2, action, coaction, ["e0", "e1"])


def yd_zoo(field) -> dict:
    from .zoo import kc2, sweedler_h4
    H = kc2(field)
    g = LinearMap(field, 2, 1, [{1: 1}])
    out = {
        "kc2_trivial": trivial_yd(H),
        "kc2_trivial_g": trivial_yd(H, grouplike=g),
        "kc2_adjoint": adjoint_yd(H),
        "kc2_graded": graded_yd_kc2(field),
    }
    if field.p != 2:
        out["h4_adjoint"] = adjoint_yd(sweedler_h4(field))
        out["h4_trivial"] = trivial_yd(sweedler_h4(field))
    return out
