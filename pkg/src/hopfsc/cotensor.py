"""Cotensor products M []_C N, the functor T_M = (-) []_C M and the
object-level Takeuchi round trip."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, InternalError, RestrictionFailure
from .exactla import LinearMap, invert, kernel, rank, restrict, tensor
from .structures import (
    Bicomodule, CheckReport, EquivariantBicomodule, LeftComodule, RightComodule,
    check_bicomodule, eye, perm, regular_right, tensor_labels,
)


@dataclass
class CotensorSpace:
    left: RightComodule
    right: LeftComodule
    inclusion: LinearMap

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    def basis_labels(self) -> list[str]:
        """Each basis vector written as a sum over the tensor basis."""
        labels = tensor_labels(self.left.labels, self.right.labels)
        out = []
        for j in range(self.inclusion.cols):
            terms = []
            for r, v in sorted(self.inclusion.column(j).items()):
                coef = "" if v == 1 else ("-" if v == -1 and self.left.field.p is None else f"{v}*")
                terms.append(f"{coef}{labels[r]}")
            out.append(" + ".join(terms).replace("+ -", "- "))
        return out


def cotensor_defect(M: RightComodule, N: LeftComodule) -> LinearMap:
    """rho_M (x) id_N - id_M (x) lambda_N, whose kernel is M []_C N."""
    if M.over.dim != N.over.dim:
        raise DimensionMismatch("comodules over coalgebras of different dimension")
    if M.field != N.field:
        raise FieldMismatch(f"{M.field} vs {N.field}")
    F = M.field
    return tensor(M.coaction, eye(F, N.dim)) - tensor(eye(F, M.dim), N.coaction)


def cotensor(M: RightComodule, N: LeftComodule) -> CotensorSpace:
    return CotensorSpace(M, N, kernel(cotensor_defect(M, N)))


def restrict_or_raise(f: LinearMap, dom: LinearMap, cod: LinearMap, what: str) -> LinearMap:
    g = restrict(f, dom, cod)
    if g is None:
        raise RestrictionFailure(f"{what} does not preserve the subspace")
    return g


def counit_iso(C, M: LeftComodule) -> LinearMap:
    """The isomorphism C []_C M -> M induced by eps (x) id."""
    space = cotensor(regular_right(C), M)
    phi = tensor(C.counit, eye(M.field, M.dim)) @ space.inclusion
    if invert(phi) is None:
        raise InternalError("counit map C []_C M -> M is not invertible")
    return phi


class CotensorComodule(RightComodule):
    """W []_C M with its inherited right D-coaction; keeps the inclusion."""

    def __init__(self, over, space: CotensorSpace, coaction: LinearMap):
        super().__init__(over, space.dim, coaction, space.basis_labels())
        self.space = space
        self.inclusion = space.inclusion


def apply_TM(M: Bicomodule, W: RightComodule) -> CotensorComodule:
    """T_M(W) = W []_C M as a right D-comodule."""
    space = cotensor(W, M.as_left)
    F = M.field
    iota = space.inclusion
    full = tensor(eye(F, W.dim), M.right)
    coaction = restrict_or_raise(full, iota, tensor(iota, eye(F, M.D.dim)), "id_W (x) rho_M")
    return CotensorComodule(M.D, space, coaction)


def apply_TM_map(M: Bicomodule, f: LinearMap, W: RightComodule, W2: RightComodule) -> LinearMap:
    """T_M(f) for a colinear f: W -> W2."""
    A = apply_TM(M, W)
    B = apply_TM(M, W2)
    full = tensor(f, eye(M.field, M.dim))
    return restrict_or_raise(full, A.inclusion, B.inclusion, "f (x) id_M")


def recovered_left_coaction(M: Bicomodule) -> LinearMap:
    """Left C-coaction on T_M(C) obtained by applying T_M to Delta_C and
    identifying (C (x) C) []_C M with C (x) (C []_C M)."""
    C, F = M.C, M.field
    TC = apply_TM(M, regular_right(C))
    iota = TC.inclusion
    return restrict_or_raise(tensor(C.comul, eye(F, M.dim)), iota,
                             tensor(eye(F, C.dim), iota), "Delta_C (x) id_M")


def takeuchi_roundtrip(M: Bicomodule) -> CheckReport:
    """Check that M is recovered from the functor T_M: T_M(C) is isomorphic
    to M as a D-comodule via the counit map, and the left C-coaction
    rebuilt from T_M(Delta_C) is lambda_M."""
    R = CheckReport("cotensor functor round trip")
    if not R.extend(check_bicomodule(M.bicomodule), "input: "):
        return R
    C, D, F = M.C, M.D, M.field
    TC = apply_TM(M, regular_right(C))
    phi = tensor(C.counit, eye(F, M.dim)) @ TC.inclusion
    phi_inv = invert(phi)
    R.add("counit map T_M(C) -> M is invertible", phi_inv is not None,
          detail=f"dim T_M(C) = {TC.dim}, dim M = {M.dim}")
    if phi_inv is None:
        return R
    R.compare("counit map is D-colinear", M.right @ phi,
              tensor(phi, eye(F, D.dim)) @ TC.coaction, TC.labels)
    lam = recovered_left_coaction(M)
    rebuilt = tensor(eye(F, C.dim), phi) @ lam @ phi_inv
    R.compare("recovered left coaction equals lambda_M", rebuilt, M.left, M.labels)
    return R


def cotensor_bicomodule(M: Bicomodule, N: Bicomodule) -> Bicomodule:
    """M []_D N for M a C-D- and N a D-E-bicomodule, with the induced
    C-E-bicomodule structure (and diagonal H-action when both carry one)."""
    F = M.field
    space = cotensor(M.as_right, N.as_left)
    iota = space.inclusion
    c, e = M.C.dim, N.D.dim
    left = restrict_or_raise(tensor(M.left, eye(F, N.dim)), iota,
                             tensor(eye(F, c), iota), "lambda_M (x) id_N")
    right = restrict_or_raise(tensor(eye(F, M.dim), N.right), iota,
                              tensor(iota, eye(F, e)), "id_M (x) rho_N")
    labels = space.basis_labels()
    if isinstance(M, EquivariantBicomodule) and isinstance(N, EquivariantBicomodule):
        H = M.H
        h = H.dim
        diag = (tensor(M.action, N.action) @ perm(F, (h, h, M.dim, N.dim), (0, 2, 1, 3))
                @ tensor(H.comul, eye(F, M.dim * N.dim)))
        action = restrict_or_raise(diag, tensor(eye(F, h), iota), iota, "diagonal H-action")
        return EquivariantBicomodule(H, M.C, N.D, space.dim, left, right, action, labels)
    return Bicomodule(M.C, N.D, space.dim, left, right, labels)


def cotensor_rank_is_maximal(space: CotensorSpace) -> bool:
    """The inclusion is injective and spans the whole kernel."""
    defect = cotensor_defect(space.left, space.right)
    n = defect.cols
    return (rank(space.inclusion) == space.dim
            and (defect @ space.inclusion).is_zero()
            and rank(defect) + space.dim == n)
