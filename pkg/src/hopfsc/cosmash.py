"""The dual bialgebra H* and the cosmash coalgebra H* # C.

Dual bases are coordinate duals: f_i(e_j) = delta_ij, and every structure
map of H* is the literal transpose of the corresponding map of H.
"""

from __future__ import annotations

from .errors import InternalError
from .exactla import LinearMap, compose_all, tensor
from .structures import (
    Bialgebra, CheckReport, Coalgebra, HopfAlgebra, ModuleCoalgebra, check_module_coalgebra,
    check_right_comodule, eye, perm, RightComodule, tensor_labels, is_right_colinear,
)


def dual_bialgebra(H: Bialgebra) -> Bialgebra:
    """Convolution product (transpose of Delta), coproduct the transpose of
    m, unit eps, counit evaluation at 1; antipode S^T when H is Hopf."""
    labels = [f"{l}*" for l in H.labels]
    args = (H.field, H.dim, H.mul.T, H.unit.T, H.comul.T, H.counit.T)
    if isinstance(H, HopfAlgebra):
        return HopfAlgebra(*args, H.antipode.T, labels)
    return Bialgebra(*args, labels)


def dual_coaction(H: Bialgebra, dim: int, action: LinearMap) -> LinearMap:
    """x -> sum_i e_i . x (x) f_i : X -> X (x) H*, for a left H-action on X."""
    F, n = H.field, H.dim
    entries = []
    for i in range(n):
        for x in range(dim):
            for r, v in action.column(i * dim + x).items():
                entries.append((r * n + i, x, v))
    return LinearMap.from_entries(F, dim * n, dim, entries)


def dual_action(H: Bialgebra, dim: int, coaction: LinearMap) -> LinearMap:
    """Inverse of dual_coaction: h . x = (id (x) <-, h>)(x_[0] (x) x_[1])."""
    F, n = H.field, H.dim
    entries = []
    for x in range(dim):
        for r, v in coaction.column(x).items():
            y, i = divmod(r, n)
            entries.append((y, i * dim + x, v))
    return LinearMap.from_entries(F, dim, n * dim, entries)


def cosmash(H: Bialgebra, C: ModuleCoalgebra) -> ModuleCoalgebra:
    """H* # C: coalgebra on H* (x) C with
    Delta(f (x) c) = (f1 (x) (c1)_[0]) (x) (f2 * (c1)_[1] (x) c2),
    counit eps_{H*} (x) eps_C, and H* acting by left convolution."""
    F = H.field
    Hs = dual_bialgebra(H)
    n, c = H.dim, C.dim
    gamma = dual_coaction(H, c, C.action)
    # (f1, f2, c1, c2) -> (f1, f2, c1', phi, c2) -> (f1, c1', f2, phi, c2)
    comul = compose_all(
        tensor(eye(F, n * c), Hs.mul, eye(F, c)),
        perm(F, (n, n, c, n, c), (0, 2, 1, 3, 4)),
        tensor(eye(F, n * n), gamma, eye(F, c)),
        tensor(Hs.comul, C.comul),
    )
    counit = tensor(Hs.counit, C.counit)
    labels = tensor_labels(Hs.labels, C.labels)
    coalg = Coalgebra(F, n * c, comul, counit, labels)
    action = tensor(Hs.mul, eye(F, c))
    out = ModuleCoalgebra(Hs, coalg, action)
    report = check_module_coalgebra(out)
    if not report.ok:
        raise InternalError("cosmash product fails " + report.first_failure().name)
    return out


class ModuleComodule:
    """A right C-comodule in left H-modules: rho(h m) = h1 m0 (x) h2 m1."""

    def __init__(self, H, C: ModuleCoalgebra, dim, action, coaction, labels=None):
        self.H, self.C = H, C
        self.field = H.field
        self.dim = dim
        self.action = action
        self.coaction = coaction
        self.labels = labels or [f"m{i}" for i in range(dim)]

    @property
    def comodule(self) -> RightComodule:
        return RightComodule(self.C, self.dim, self.coaction, self.labels)


def check_module_comodule(M: ModuleComodule) -> CheckReport:
    from .structures import LeftModule, check_module
    R = CheckReport("comodule in H-modules")
    R.extend(check_module(LeftModule(M.H, M.dim, M.action, M.labels)), "module ")
    R.extend(check_right_comodule(M.comodule), "comodule ")
    H, C, F = M.H, M.C, M.field
    h, c, m = H.dim, C.dim, M.dim
    lhs = M.coaction @ M.action
    rhs = compose_all(tensor(M.action, C.action), perm(F, (h, h, m, c), (0, 2, 1, 3)),
                      tensor(H.comul, M.coaction))
    R.compare("coaction is H-linear", lhs, rhs, tensor_labels(H.labels, M.labels))
    return R


def to_cosmash_comodule(M: ModuleComodule, HC: ModuleCoalgebra | None = None) -> RightComodule:
    """nu = (gamma_M (x) id_C) o rho_M, with gamma_M(m) = sum_i e_i . m (x) f_i."""
    F = M.field
    HC = HC or cosmash(M.H, M.C)
    gamma = dual_coaction(M.H, M.dim, M.action)
    nu = tensor(gamma, eye(F, M.C.dim)) @ M.coaction
    return RightComodule(HC, M.dim, nu, M.labels)


def from_cosmash_comodule(N: RightComodule, H, C: ModuleCoalgebra) -> ModuleComodule:
    """Inverse translation: the action reads off the H* leg, the C-coaction
    applies eps_{H*} to it."""
    F = N.field
    n, c, d = H.dim, C.dim, N.dim
    Hs_counit = H.unit.T
    coaction = tensor(eye(F, d), Hs_counit, eye(F, c)) @ N.coaction
    to_dual = tensor(eye(F, d), eye(F, n), C.counit) @ N.coaction
    action = dual_action(H, d, to_dual)
    return ModuleComodule(H, C, d, action, coaction, N.labels)


def cosmash_roundtrip(M: ModuleComodule) -> CheckReport:
    R = CheckReport("cosmash comodule translation")
    if not R.extend(check_module_comodule(M), "input: "):
        return R
    HC = cosmash(M.H, M.C)
    N = to_cosmash_comodule(M, HC)
    R.extend(check_right_comodule(N), "forward: ")
    back = from_cosmash_comodule(N, M.H, M.C)
    R.compare("action recovered", back.action, M.action)
    R.compare("coaction recovered", back.coaction, M.coaction)
    again = to_cosmash_comodule(back, HC)
    R.compare("coaction over H*#C recovered", again.coaction, N.coaction)
    return R


def is_module_comodule_map(f: LinearMap, M: ModuleComodule, N: ModuleComodule) -> bool:
    F = M.field
    linear = f @ M.action == N.action @ tensor(eye(F, M.H.dim), f)
    return linear and is_right_colinear(f, M.comodule, N.comodule)


def is_cosmash_colinear(f: LinearMap, M: ModuleComodule, N: ModuleComodule) -> bool:
    HC = cosmash(M.H, M.C)
    return is_right_colinear(f, to_cosmash_comodule(M, HC), to_cosmash_comodule(N, HC))


def module_comodule_zoo(field) -> dict:
    from .hopf import ground_module_coalgebra, psi_functor
    from .structures import regular_module_coalgebra, regular_right
    from .zoo import kc2
    F = field
    H = kc2(F)
    CH = regular_module_coalgebra(H)
    k = ground_module_coalgebra(H)
    out = {
        "kc2_ground": ModuleComodule(H, k, 1, H.counit, eye(F, 1), ["m"]),
        "kc2_regular": ModuleComodule(H, CH, 2, H.mul, H.comul, H.labels),
    }
    P = psi_functor(H, CH, regular_right(CH))
    out["kc2_free"] = ModuleComodule(H, CH, P.dim, P.action, P.right, P.labels)
    s = 2 if F.p is not None and F.p > 2 else 1
    sinv = F.inv(F(s))
    # e0 in degree 1, e1 in degree g; g swaps them up to the scalar s
    action = LinearMap.from_entries(F, 2, 4, [(0, 0, 1), (1, 1, 1), (1, 2, s), (0, 3, sinv)])
    coaction = LinearMap.from_entries(F, 4, 2, [(0, 0, 1), (3, 1, 1)])
    out["kc2_swap"] = ModuleComodule(H, CH, 2, action, coaction, ["e0", "e1"])
    return out
