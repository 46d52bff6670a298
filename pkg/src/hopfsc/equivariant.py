"""Equivariant bicomodules versus lax module structures on T_M.

An H-action on a C-D-bicomodule M gives maps

    xi_{X,W}: X (x) (W []_C M) -> (X (x) W) []_C M,
    x (x) w (x) m  ->  x_(0) (x) w (x) x_(1) . m

and conversely a lax family xi gives back an action

    h .xi m = (eps_H (x) eps_C (x) id)(xi_{H,C}(h (x) m_(-1) (x) m_(0))).

A family is stored as an *ambient* procedure producing a square map on
X (x) W (x) M whose restriction to the cotensor subspaces is xi_{X,W},
optionally with explicit components that override it on chosen probes.
Components are matrices in the canonical echelon bases of the cotensor
spaces (domain: id_X (x) iota_W, codomain: iota_{X (x) W}).
"""

from __future__ import annotations

from .cotensor import CotensorComodule, apply_TM, restrict_or_raise
from .errors import AxiomFailure, NotWellDefined, RestrictionFailure
from .exactla import LinearMap, compose_all, restrict, tensor
from .structures import (
    Bialgebra, CheckReport, EquivariantBicomodule, ModuleCoalgebra, RightComodule,
    check_equivariant_bicomodule, check_module_coalgebra, equivariance_composites, eye,
    free_comodule, op_bialgebra, perm, regular_right, tensor_comodule, tensor_labels,
    trivial_comodule,
)


def comodule_key(X) -> tuple:
    return (X.over.dim, X.dim, X.coaction)


def find_grouplike(C) -> LinearMap | None:
    """A basis vector g with Delta(g) = g (x) g and eps(g) = 1, if any."""
    F, n = C.field, C.dim
    for i in range(n):
        col = C.comul.column(i)
        if col == {i * n + i: 1} and C.counit[0, i] == 1:
            return LinearMap(F, n, 1, [{i: 1}])
    unit = getattr(C, "unit", None)
    if unit is not None and C.comul @ unit == tensor(unit, unit):
        return unit
    return None


def action_ambient(action: LinearMap, M, X: RightComodule, W: RightComodule) -> LinearMap:
    """x (x) w (x) m -> x_(0) (x) w (x) x_(1) . m on the full X (x) W (x) M."""
    F = M.field
    x, h, w, m = X.dim, M.H.dim, W.dim, M.dim
    return compose_all(
        tensor(eye(F, x * w), action),
        perm(F, (x, h, w, m), (0, 2, 1, 3)),
        tensor(X.coaction, eye(F, w * m)),
    )


class XiFamily:
    """A (candidate) lax module structure on T_M, evaluated on demand."""

    def __init__(self, M, ambient, overrides=None, name="xi"):
        self.M = M
        self.H = M.H
        self.C = M.C
        self.D = M.D
        self.field = M.field
        self.name = name
        self._ambient = ambient
        self.overrides = dict(overrides or {})
        self._tm = {}
        self._comp = {}

    @classmethod
    def from_action(cls, M: EquivariantBicomodule, name="xi"):
        action = M.action
        return cls(M, lambda X, W: action_ambient(action, M, X, W), name=name)

    @classmethod
    def from_block(cls, M, block: LinearMap, name="xi"):
        """Family determined by its (H, C) component alone: the action is
        recovered from the block and extended by the closed formula; the
        block itself is kept as the (H, C) component."""
        a = action_from_block(M, block)
        EM = EquivariantBicomodule(M.H, M.C, M.D, M.dim, M.left, M.right, a, M.labels)
        fam = cls.from_action(EM, name=name)
        H = M.H
        fam.overrides[(comodule_key(regular_right(H)), comodule_key(regular_right(M.C)))] = block
        return fam

    def with_component(self, X, W, component: LinearMap, name=None):
        over = dict(self.overrides)
        over[(comodule_key(X), comodule_key(W))] = component
        return XiFamily(self.M, self._ambient, over, name or self.name + "'")

    # -- evaluation -------------------------------------------------------

    def T(self, W: RightComodule) -> CotensorComodule:
        key = comodule_key(W)
        if key not in self._tm:
            self._tm[key] = apply_TM(self.M, W)
        return self._tm[key]

    def ambient(self, X, W) -> LinearMap:
        return self._ambient(X, W)

    def product(self, X, W) -> RightComodule:
        return tensor_comodule(X, W, self.C)

    def component(self, X, W) -> LinearMap:
        """xi_{X,W} in the echelon bases; NotWellDefined if the ambient map
        does not carry X (x) (W []_C M) into (X (x) W) []_C M."""
        key = (comodule_key(X), comodule_key(W))
        if key in self.overrides:
            return self.overrides[key]
        if key not in self._comp:
            F = self.field
            src = tensor(eye(F, X.dim), self.T(W).inclusion)
            dst = self.T(self.product(X, W)).inclusion
            g = restrict(self.ambient(X, W), src, dst)
            if g is None:
                raise NotWellDefined(
                    f"{self.name} does not map X (x) (W []_C M) into (X (x) W) []_C M "
                    f"(dim X = {X.dim}, dim W = {W.dim})")
            self._comp[key] = g
        return self._comp[key]

    def domain_comodule(self, X, W) -> RightComodule:
        """X (x) T_M(W) as a right D-comodule."""
        return tensor_comodule(X, self.T(W), self.D)


def xi_from_action(M: EquivariantBicomodule, X: RightComodule, W: RightComodule) -> LinearMap:
    return XiFamily.from_action(M).component(X, W)


def lambda_into_cotensor(M, T_C: CotensorComodule) -> LinearMap:
    """lambda_M as a map M -> C []_C M in the echelon basis."""
    return restrict_or_raise(M.left, eye(M.field, M.dim), T_C.inclusion, "lambda_M")


def action_from_block(M, block: LinearMap, T_C=None, T_HC=None) -> LinearMap:
    H, C, F = M.H, M.C, M.field
    if T_C is None:
        T_C = apply_TM(M, regular_right(C))
    if T_HC is None:
        T_HC = apply_TM(M, tensor_comodule(regular_right(H), regular_right(C), C))
    lam = lambda_into_cotensor(M, T_C)
    return compose_all(
        tensor(H.counit, C.counit, eye(F, M.dim)),
        T_HC.inclusion,
        block,
        tensor(eye(F, H.dim), lam),
    )


def recovered_action(xi: XiFamily) -> LinearMap:
    """The operation h .xi m read off from xi_{H,C}; not checked."""
    H, C = xi.H, xi.C
    RH, RC = regular_right(H), regular_right(C)
    block = xi.component(RH, RC)
    return action_from_block(xi.M, block, xi.T(RC), xi.T(xi.product(RH, RC)))


def action_from_xi(M, xi: XiFamily) -> LinearMap:
    """Recover the H-action from a lax family and check it; raises
    AxiomFailure naming the first failing axiom."""
    a = recovered_action(xi)
    EM = EquivariantBicomodule(xi.H, M.C, M.D, M.dim, M.left, M.right, a, M.labels)
    report = check_equivariant_bicomodule(EM)
    bad = report.first_failure()
    if bad is not None:
        raise AxiomFailure(bad.name, report)
    return a


# ---------------------------------------------------------------------------
# probes


class Probes:
    """Named H-comodules X and C-comodules W used to spot-check families."""

    def __init__(self, xs, ws, pairs=None):
        self.xs = list(xs)          # [(name, RightComodule over H)]
        self.ws = list(ws)          # [(name, RightComodule over C)]
        # (X, Y) pairs for the coherence axiom; default: X, Y of dim <= dim H
        self.pairs = pairs

    def coherence_pairs(self):
        if self.pairs is not None:
            return self.pairs
        small = [p for p in self.xs if p[1].dim <= p[1].over.dim]
        return [(a, b) for a in small for b in small]


def default_probes(H, C) -> Probes:
    """{k, H, H (x) H} x {k (via a group-like), C, C free of rank 2}."""
    k = trivial_comodule(H)
    RH = regular_right(H)
    xs = [("k", k), ("H", RH), ("H⊗H", tensor_comodule(RH, RH))]
    ws = []
    g = find_grouplike(C)
    if g is not None:
        ws.append(("k_g", trivial_comodule(C, 1, g)))
    ws.append(("C", regular_right(C)))
    ws.append(("C^2", free_comodule(C, 2)))
    return Probes(xs, ws)


def probe_morphisms(H, C):
    """Colinear maps used to spot-check naturality.

    Returns (x_maps, w_maps), each a list of (name, f, source, target)."""
    F = H.field
    RH, RC = regular_right(H), regular_right(C)
    x_maps = [
        ("Delta_H: H -> H_0⊗H", H.comul, RH, free_comodule(H, H.dim)),
        ("u: k -> H", H.unit, trivial_comodule(H), RH),
    ]
    w_maps = [("Delta_C: C -> C_0⊗C", C.comul, RC, free_comodule(C, C.dim))]
    g = find_grouplike(C)
    if g is not None:
        w_maps.append(("g: k_g -> C", g, trivial_comodule(C, 1, g), RC))
    # the flip C_0 (x) C -> C (x) C_0 is not colinear; use a block projection
    proj = tensor(LinearMap(F, 1, 2, [{0: 1}, {}]), eye(F, C.dim))
    w_maps.append(("first summand: C^2 -> C", proj, free_comodule(C, 2), RC))
    return x_maps, w_maps


# ---------------------------------------------------------------------------
# checks


def _safe(R: CheckReport, name: str, fn):
    try:
        return fn()
    except (NotWellDefined, RestrictionFailure) as exc:
        R.add(name, False, detail=str(exc))
        return None


def check_lax_axioms(xi: XiFamily, probes: Probes | None = None, morphisms=None) -> CheckReport:
    """Spot-check that xi is a lax module structure on T_M: well-defined
    components, D-colinearity, unit, coherence, naturality, and the closed
    form on free comodules."""
    H, C, D, F, M = xi.H, xi.C, xi.D, xi.field, xi.M
    probes = probes or default_probes(H, C)
    R = CheckReport(f"lax module structure {xi.name}")

    for xn, X in probes.xs:
        for wn, W in probes.ws:
            tag = f"({xn}, {wn})"
            comp = _safe(R, f"well-defined {tag}", lambda: xi.component(X, W))
            if comp is None:
                continue
            R.add(f"well-defined {tag}", True)
            dom = xi.domain_comodule(X, W)
            cod = xi.T(xi.product(X, W))
            R.compare(f"D-colinear {tag}", cod.coaction @ comp,
                      tensor(comp, eye(F, D.dim)) @ dom.coaction)

    k = trivial_comodule(H)
    for wn, W in probes.ws:
        comp = _safe(R, f"unit (k, {wn})", lambda: xi.component(k, W))
        if comp is not None:
            R.compare(f"unit (k, {wn})", comp, eye(F, comp.cols))

    for (xn, X), (yn, Y) in probes.coherence_pairs():
        XY = tensor_comodule(X, Y)
        for wn, W in probes.ws:
            tag = f"coherence ({xn}, {yn}, {wn})"

            def sides():
                YW = xi.product(Y, W)
                lhs = xi.component(XY, W)
                rhs = xi.component(X, YW) @ tensor(eye(F, X.dim), xi.component(Y, W))
                return lhs, rhs

            res = _safe(R, tag, sides)
            if res is not None:
                R.compare(tag, *res)

    if morphisms is None:
        morphisms = probe_morphisms(H, C)
    x_maps, w_maps = morphisms
    for fname, f, X1, X2 in x_maps:
        for wn, W in probes.ws:
            tag = f"natural in X along {fname} at {wn}"

            def sides():
                A = xi.component(X1, W)
                B = xi.component(X2, W)
                T1 = xi.T(xi.product(X1, W))
                T2 = xi.T(xi.product(X2, W))
                Tf = restrict_or_raise(tensor(f, eye(F, W.dim * M.dim)), T1.inclusion,
                                       T2.inclusion, "f (x) id")
                return B @ tensor(f, eye(F, xi.T(W).dim)), Tf @ A

            res = _safe(R, tag, sides)
            if res is not None:
                R.compare(tag, *res)
    for fname, g, W1, W2 in w_maps:
        for xn, X in probes.xs:
            if X.dim > H.dim:
                continue
            tag = f"natural in W along {fname} at {xn}"

            def sides():
                A = xi.component(X, W1)
                B = xi.component(X, W2)
                Tg = restrict_or_raise(tensor(g, eye(F, M.dim)), xi.T(W1).inclusion,
                                       xi.T(W2).inclusion, "g (x) id")
                P1 = xi.T(xi.product(X, W1))
                P2 = xi.T(xi.product(X, W2))
                Txg = restrict_or_raise(tensor(eye(F, X.dim), g, eye(F, M.dim)),
                                        P1.inclusion, P2.inclusion, "id (x) g (x) id")
                return B @ tensor(eye(F, X.dim), Tg), Txg @ A

            res = _safe(R, tag, sides)
            if res is not None:
                R.compare(tag, *res)

    # closed forms in terms of the recovered operation
    a = _safe(R, "recovered operation", lambda: recovered_action(xi))
    if a is not None:
        RH, RC = regular_right(H), regular_right(C)
        T_C = xi.T(RC)
        lam = lambda_into_cotensor(M, T_C)
        T_HC = xi.T(xi.product(RH, RC))
        lhs = compose_all(tensor(eye(F, H.dim), C.counit, eye(F, M.dim)), T_HC.inclusion,
                          xi.component(RH, RC), tensor(eye(F, H.dim), lam))
        rhs = tensor(eye(F, H.dim), a) @ tensor(H.comul, eye(F, M.dim))
        R.compare("partial counit of xi_{H,C} is h1 ⊗ h2.m", lhs, rhs,
                  tensor_labels(H.labels, M.labels))
        EM = EquivariantBicomodule(H, C, D, M.dim, M.left, M.right, a, M.labels)
        for xn, X in probes.xs:
            for wn, W in probes.ws:
                if W.dim % C.dim or W.coaction != tensor(eye(F, W.dim // C.dim), C.comul):
                    continue
                tag = f"closed form on free comodule ({xn}, {wn})"

                def sides():
                    dst = xi.T(xi.product(X, W)).inclusion
                    src = tensor(eye(F, X.dim), xi.T(W).inclusion)
                    closed = restrict(action_ambient(a, EM, X, W), src, dst)
                    if closed is None:
                        raise NotWellDefined("closed form leaves the cotensor")
                    return xi.component(X, W), closed

                res = _safe(R, tag, sides)
                if res is not None:
                    R.compare(tag, *res)
    return R


def roundtrip_bijection(M: EquivariantBicomodule, xi: XiFamily | None = None,
                        probes: Probes | None = None) -> CheckReport:
    """Both directions of the action <-> lax structure correspondence.

    With ``xi`` omitted the family is built from M's action; otherwise the
    given family is compared with the one rebuilt from its own operation."""
    R = CheckReport("action / lax structure round trip")
    if not R.extend(check_equivariant_bicomodule(M), "input: "):
        return R
    H, C = M.H, M.C
    probes = probes or default_probes(H, C)
    fam = xi or XiFamily.from_action(M)
    try:
        a = action_from_xi(M, fam)
    except AxiomFailure as exc:
        R.add(f"recovered operation is an equivariant action ({exc.axiom})", False)
        return R
    except NotWellDefined as exc:
        R.add("xi_{H,C} is well defined", False, detail=str(exc))
        return R
    R.compare("action recovered from xi equals the action", a, M.action,
              tensor_labels(H.labels, M.labels))
    rebuilt = XiFamily.from_action(M.with_action(a), name="xi rebuilt")
    for xn, X in probes.xs:
        for wn, W in probes.ws:
            tag = f"xi rebuilt from its action agrees at ({xn}, {wn})"
            try:
                R.compare(tag, rebuilt.component(X, W), fam.component(X, W))
            except NotWellDefined as exc:
                R.add(tag, False, detail=str(exc))
    return R


def transformation_commutes(f: LinearMap, M, N, probes: Probes | None = None) -> bool:
    """Whether T_f: T_M -> T_N intertwines the lax structures of M and N."""
    F = M.field
    probes = probes or default_probes(M.H, M.C)
    xm, xn = XiFamily.from_action(M), XiFamily.from_action(N)
    for _, X in probes.xs:
        for _, W in probes.ws:
            XW = xm.product(X, W)
            Tf_W = restrict_or_raise(tensor(eye(F, W.dim), f), xm.T(W).inclusion,
                                     xn.T(W).inclusion, "id (x) f")
            Tf_XW = restrict_or_raise(tensor(eye(F, XW.dim), f), xm.T(XW).inclusion,
                                      xn.T(XW).inclusion, "id (x) f")
            if xn.component(X, W) @ tensor(eye(F, X.dim), Tf_W) != Tf_XW @ xm.component(X, W):
                return False
    return True


def equivariance_mutants(M: EquivariantBicomodule, limit=None):
    """Single-entry perturbations of the action that break equivariance of
    the left coaction.  Yields (description, mutated bicomodule)."""
    F = M.field
    a = M.action
    count = 0
    for r in range(a.rows):
        for c in range(a.cols):
            for d in (1,):
                bump = LinearMap.from_entries(F, a.rows, a.cols, [(r, c, d)])
                Mm = M.with_action(a + bump)
                (ll, lr), _ = equivariance_composites(Mm)
                if ll == lr:
                    continue
                yield (f"action[{r},{c}] += {d}", Mm)
                count += 1
                if limit is not None and count >= limit:
                    return


# ---------------------------------------------------------------------------
# right and bimodule variants


class RightModuleCoalgebra:
    """Coalgebra with a right K-action c (x) k -> c k making Delta, eps K-linear."""

    def __init__(self, K: Bialgebra, coalg, action: LinearMap):
        self.K = K
        self.coalg = coalg.coalgebra
        self.action = action
        self.field = coalg.field
        self.dim = coalg.dim
        self.comul = coalg.comul
        self.counit = coalg.counit
        self.labels = coalg.labels

    @property
    def coalgebra(self):
        return self.coalg

    def as_left_over_op(self, Kop=None) -> ModuleCoalgebra:
        F = self.field
        Kop = Kop or op_bialgebra(self.K)
        left = self.action @ perm(F, (self.K.dim, self.dim), (1, 0))
        return ModuleCoalgebra(Kop, self.coalg, left)


class RightEquivariantBicomodule:
    """C-D-bicomodule in right K-modules (action m (x) k -> m k)."""

    def __init__(self, K, C: RightModuleCoalgebra, D: RightModuleCoalgebra, dim, left, right,
                 action, labels=None):
        self.K, self.C, self.D = K, C, D
        self.field = K.field
        self.dim = dim
        self.left, self.right, self.action = left, right, action
        self.labels = labels or [f"m{i}" for i in range(dim)]

    def as_left_over_op(self) -> EquivariantBicomodule:
        F = self.field
        Kop = op_bialgebra(self.K)
        left_act = self.action @ perm(F, (self.K.dim, self.dim), (1, 0))
        return EquivariantBicomodule(Kop, self.C.as_left_over_op(Kop), self.D.as_left_over_op(Kop),
                                     self.dim, self.left, self.right, left_act, self.labels)


def right_tensor_comodule(W: RightComodule, Y: RightComodule, C: RightModuleCoalgebra) -> RightComodule:
    """W (x) Y with coaction w_(0) (x) y_(0) (x) w_(1) y_(1)."""
    F = W.field
    w, y, c, k = W.dim, Y.dim, C.dim, Y.over.dim
    coaction = compose_all(
        tensor(eye(F, w * y), C.action),
        perm(F, (w, c, y, k), (0, 2, 1, 3)),
        tensor(W.coaction, Y.coaction),
    )
    return RightComodule(C, w * y, coaction, tensor_labels(W.labels, Y.labels))


def _flip_into(F, a, b, m, src_incl, dst_incl):
    """The leg swap a (x) b (x) m -> b (x) a (x) m restricted to cotensors."""
    P = perm(F, (a, b, m), (1, 0, 2))
    return restrict_or_raise(P, src_incl, dst_incl, "leg swap")


def xi_right(Mr: RightEquivariantBicomodule, W: RightComodule, Y: RightComodule) -> LinearMap:
    """(W []_C M) (x) Y -> (W (x) Y) []_C M,  w (x) m (x) y -> w (x) y_(0) (x) m y_(1),
    obtained from the left structure over K^op by conjugating with leg swaps."""
    F = Mr.field
    ML = Mr.as_left_over_op()
    fam = XiFamily.from_action(ML)
    Yop = RightComodule(ML.H, Y.dim, Y.coaction, Y.labels)
    left = fam.component(Yop, W)                       # Y (x) (W [] M) -> (Y (x) W) [] M
    TW = fam.T(W)
    YW = fam.product(Yop, W)
    WY = right_tensor_comodule(W, Y, Mr.C)
    T_WY = apply_TM(ML.bicomodule, RightComodule(ML.C, WY.dim, WY.coaction))
    src_flip = perm(F, (TW.dim, Y.dim), (1, 0))         # (W[]M) (x) Y -> Y (x) (W[]M)
    out_flip = _flip_into(F, Y.dim, W.dim, Mr.dim, fam.T(YW).inclusion, T_WY.inclusion)
    return out_flip @ left @ src_flip


def xi_right_ambient(Mr: RightEquivariantBicomodule, W, Y) -> LinearMap:
    """The right structure map written directly on W (x) M (x) Y -> W (x) Y (x) M."""
    F = Mr.field
    w, m, y, k = W.dim, Mr.dim, Y.dim, Mr.K.dim
    return compose_all(
        tensor(eye(F, w * y), Mr.action),
        perm(F, (w, m, y, k), (0, 2, 1, 3)),
        tensor(eye(F, w * m), Y.coaction),
    )


def check_right_variant(Mr: RightEquivariantBicomodule, probes: Probes | None = None) -> CheckReport:
    """The right-module version, checked by delegation to K^op, plus a
    direct comparison with the right structure formula."""
    R = CheckReport("right variant")
    F = Mr.field
    ML = Mr.as_left_over_op()
    R.extend(check_equivariant_bicomodule(ML), "over K^op: ")
    if not R.ok:
        return R
    R.extend(roundtrip_bijection(ML, probes=probes), "over K^op: ")
    K, C = Mr.K, Mr.C
    ys = [("k", trivial_comodule(K)), ("K", regular_right(K))]
    ws = [("C", regular_right(C.coalg)), ("C^2", free_comodule(C.coalg, 2))]
    for wn, W in ws:
        for yn, Y in ys:
            tag = f"right structure formula ({wn}, {yn})"
            try:
                comp = xi_right(Mr, W, Y)
            except (NotWellDefined, RestrictionFailure) as exc:
                R.add(tag, False, detail=str(exc))
                continue
            TW = apply_TM(ML.bicomodule, RightComodule(ML.C, W.dim, W.coaction))
            WY = right_tensor_comodule(W, Y, C)
            T_WY = apply_TM(ML.bicomodule, RightComodule(ML.C, WY.dim, WY.coaction))
            # evaluate w (x) m (x) y -> w (x) y0 (x) m y1 on the domain basis
            src = tensor(TW.inclusion, eye(F, Y.dim))
            direct = restrict(xi_right_ambient(Mr, W, Y), src, T_WY.inclusion)
            R.add(tag, direct is not None and direct == comp,
                  detail="" if direct is not None else "formula leaves the cotensor")
    return R


class BimoduleCoalgebra:
    """Coalgebra with commuting left H- and right K-actions, both making
    Delta and eps linear."""

    def __init__(self, H, K, coalg, action_l: LinearMap, action_r: LinearMap):
        self.H, self.K = H, K
        self.coalg = coalg.coalgebra
        self.action_l = action_l
        self.action_r = action_r
        self.field = coalg.field
        self.dim = coalg.dim
        self.comul = coalg.comul
        self.counit = coalg.counit
        self.labels = coalg.labels

    @property
    def coalgebra(self):
        return self.coalg

    @property
    def left(self) -> ModuleCoalgebra:
        return ModuleCoalgebra(self.H, self.coalg, self.action_l)

    @property
    def right(self) -> RightModuleCoalgebra:
        return RightModuleCoalgebra(self.K, self.coalg, self.action_r)

    @property
    def action(self):
        return self.action_l


def actions_commute(H, K, dim, action_l, action_r, F) -> tuple:
    """(h m) k versus h (m k), as maps H (x) M (x) K -> M."""
    lhs = action_r @ tensor(action_l, eye(F, K.dim))
    rhs = action_l @ tensor(eye(F, H.dim), action_r)
    return lhs, rhs


def check_bimodule_coalgebra(C: BimoduleCoalgebra) -> CheckReport:
    R = CheckReport("bimodule coalgebra")
    R.extend(check_module_coalgebra(C.left), "left: ")
    R.extend(check_module_coalgebra(C.right.as_left_over_op()), "right: ")
    lhs, rhs = actions_commute(C.H, C.K, C.dim, C.action_l, C.action_r, C.field)
    R.compare("actions commute", lhs, rhs)
    return R


class BiEquivariantBicomodule:
    """C-D-bicomodule in H-K-bimodules."""

    def __init__(self, H, K, C: BimoduleCoalgebra, D: BimoduleCoalgebra, dim, left, right,
                 action_l, action_r, labels=None):
        self.H, self.K, self.C, self.D = H, K, C, D
        self.field = H.field
        self.dim = dim
        self.left, self.right = left, right
        self.action_l, self.action_r = action_l, action_r
        self.labels = labels or [f"m{i}" for i in range(dim)]

    @property
    def left_part(self) -> EquivariantBicomodule:
        return EquivariantBicomodule(self.H, self.C.left, self.D.left, self.dim, self.left,
                                     self.right, self.action_l, self.labels)

    @property
    def right_part(self) -> RightEquivariantBicomodule:
        return RightEquivariantBicomodule(self.K, self.C.right, self.D.right, self.dim,
                                          self.left, self.right, self.action_r, self.labels)


def bimodule_tensor_comodule(X, W, Y, C: BimoduleCoalgebra) -> RightComodule:
    """X (x) W (x) Y with coaction x0 (x) w0 (x) y0 (x) x1 |> w1 <| y1."""
    XW = tensor_comodule(X, W, C.left)
    XW = RightComodule(C.right, XW.dim, XW.coaction, XW.labels)
    return right_tensor_comodule(XW, Y, C.right)


def check_bimodule_variant(Mb: BiEquivariantBicomodule, probes: Probes | None = None) -> CheckReport:
    """Left and right structures separately, plus their compatibility
    xi^l_{X, W (x) Y} o (id_X (x) xi^r_{W,Y}) == xi^r_{X (x) W, Y} o (xi^l_{X,W} (x) id_Y)."""
    R = CheckReport("bimodule variant")
    F = Mb.field
    H, K, C = Mb.H, Mb.K, Mb.C
    lhs, rhs = actions_commute(H, K, Mb.dim, Mb.action_l, Mb.action_r, F)
    R.compare("actions on M commute", lhs, rhs)
    R.extend(roundtrip_bijection(Mb.left_part, probes=probes), "left: ")
    R.extend(check_right_variant(Mb.right_part), "right: ")
    if not R.ok:
        return R
    fam = XiFamily.from_action(Mb.left_part)
    xs = [("k", trivial_comodule(H)), ("H", regular_right(H))]
    ys = [("k", trivial_comodule(K)), ("K", regular_right(K))]
    ws = [("C", regular_right(C.coalg))]
    for xn, X in xs:
        for wn, W in ws:
            for yn, Y in ys:
                tag = f"left and right structures commute ({xn}, {wn}, {yn})"
                try:
                    WY = right_tensor_comodule(W, Y, C.right)
                    WYc = RightComodule(C.left, WY.dim, WY.coaction)
                    XW = tensor_comodule(X, W, C.left)
                    one = fam.component(X, WYc) @ tensor(eye(F, X.dim), xi_right(Mb.right_part, W, Y))
                    two = xi_right(Mb.right_part, RightComodule(C.coalg, XW.dim, XW.coaction), Y) \
                        @ tensor(fam.component(X, W), eye(F, Y.dim))
                    R.compare(tag, one, two)
                except (NotWellDefined, RestrictionFailure) as exc:
                    R.add(tag, False, detail=str(exc))
    return R


def regular_bimodule_coalgebra(H: Bialgebra) -> BimoduleCoalgebra:
    return BimoduleCoalgebra(H, H, H.coalgebra, H.mul, H.mul)


def regular_bi_bicomodule(H: Bialgebra) -> BiEquivariantBicomodule:
    C = regular_bimodule_coalgebra(H)
    return BiEquivariantBicomodule(H, H, C, C, H.dim, H.comul, H.comul, H.mul, H.mul, H.labels)


def regular_right_bicomodule(K: Bialgebra) -> RightEquivariantBicomodule:
    C = RightModuleCoalgebra(K, K.coalgebra, K.mul)
    return RightEquivariantBicomodule(K, C, C, K.dim, K.comul, K.comul, K.mul, K.labels)
