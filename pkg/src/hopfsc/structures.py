"""Structure-constant records for (co)algebras, (co)modules and friends,
together with axiom checkers that return reports instead of raising.

Leg conventions: a right coaction puts the carrier leg first
(m -> m_(0) (x) m_(1)), a left coaction puts the coalgebra leg first
(m -> m_(-1) (x) m_(0)), and a left action is a map H (x) M -> M.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionMismatch, FieldMismatch
from .exactla import Field, LinearMap, compose_all, permutation, tensor


# ---------------------------------------------------------------------------
# small helpers


def eye(F: Field, n: int) -> LinearMap:
    return LinearMap.identity(F, n)


def perm(F: Field, dims, order) -> LinearMap:
    return permutation(F, dims, order)


def default_labels(n: int, prefix: str = "e") -> list[str]:
    return [f"{prefix}{i}" for i in range(n)]


def tensor_labels(*label_lists) -> list[str]:
    out = [""]
    for labels in label_lists:
        out = [f"{a}⊗{b}" if a else b for a in out for b in labels]
    if not label_lists:
        return ["1"]
    return out


def _labels(labels, n, prefix="e"):
    if labels is None:
        return default_labels(n, prefix)
    labels = list(labels)
    if len(labels) != n:
        raise DimensionMismatch(f"{len(labels)} labels for dimension {n}")
    return labels


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckEntry:
    name: str
    passed: bool
    witness: int | None = None
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "witness": self.witness, "detail": self.detail}


@dataclass
class CheckReport:
    title: str
    entries: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self):
        return self.ok

    def add(self, name, passed, witness=None, detail=""):
        self.entries.append(CheckEntry(name, bool(passed), witness, detail))
        return passed

    def extend(self, other: "CheckReport", prefix: str = ""):
        for e in other.entries:
            self.entries.append(CheckEntry(prefix + e.name, e.passed, e.witness, e.detail))
        self.notes.extend(other.notes)
        return other.ok

    def compare(self, name, lhs: LinearMap, rhs: LinearMap, labels=None):
        """Record whether two composites agree; on failure the witness is the
        first domain basis index where they differ."""
        if lhs.shape != rhs.shape:
            return self.add(name, False, None, f"shape {lhs.shape} vs {rhs.shape}")
        j = lhs.first_difference(rhs)
        if j is None:
            return self.add(name, True)
        where = labels[j] if labels is not None and j < len(labels) else f"#{j}"
        return self.add(name, False, j, f"composites differ on basis vector {where}")

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def first_failure(self):
        for e in self.entries:
            if not e.passed:
                return e
        return None

    def to_dict(self):
        return {"title": self.title, "ok": self.ok,
                "entries": [e.to_dict() for e in self.entries],
                "notes": list(self.notes)}

    def text(self, verbose=False) -> str:
        lines = [f"== {self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for e in self.entries:
            if verbose or not e.passed:
                mark = "ok  " if e.passed else "FAIL"
                extra = f"  ({e.detail})" if e.detail else ""
                lines.append(f"  [{mark}] {e.name}{extra}")
        if not verbose:
            npass = sum(e.passed for e in self.entries)
            lines.append(f"  {npass}/{len(self.entries)} checks passed")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# records


def _need(f: LinearMap, rows, cols, what):
    if f.shape != (rows, cols):
        raise DimensionMismatch(f"{what} has shape {f.shape}, expected {(rows, cols)}")


def _same_field(*objs):
    F = objs[0].field
    for o in objs[1:]:
        if o.field != F:
            raise FieldMismatch(f"{F} vs {o.field}")
    return F


class Coalgebra:
    def __init__(self, field: Field, dim: int, comul: LinearMap, counit: LinearMap, labels=None):
        _need(comul, dim * dim, dim, "comultiplication")
        _need(counit, 1, dim, "counit")
        _same_field(comul, counit)
        self.field = field
        self.dim = dim
        self.comul = comul
        self.counit = counit
        self.labels = _labels(labels, dim)

    @property
    def coalgebra(self):
        return self

    def __repr__(self):
        return f"Coalgebra(dim={self.dim}, field={self.field})"


class Algebra:
    def __init__(self, field: Field, dim: int, mul: LinearMap, unit: LinearMap, labels=None):
        _need(mul, dim, dim * dim, "multiplication")
        _need(unit, dim, 1, "unit")
        self.field = field
        self.dim = dim
        self.mul = mul
        self.unit = unit
        self.labels = _labels(labels, dim)

    @property
    def algebra(self):
        return self


class Bialgebra:
    """Coalgebra and algebra on the same carrier.  Also usable wherever a
    Coalgebra or an Algebra is expected."""

    def __init__(self, field: Field, dim: int, comul, counit, mul, unit, labels=None):
        _need(comul, dim * dim, dim, "comultiplication")
        _need(counit, 1, dim, "counit")
        _need(mul, dim, dim * dim, "multiplication")
        _need(unit, dim, 1, "unit")
        self.field = field
        self.dim = dim
        self.comul = comul
        self.counit = counit
        self.mul = mul
        self.unit = unit
        self.labels = _labels(labels, dim)

    @classmethod
    def from_parts(cls, coalg: Coalgebra, alg: Algebra, labels=None):
        if coalg.dim != alg.dim:
            raise DimensionMismatch("coalgebra and algebra carriers differ")
        return cls(coalg.field, coalg.dim, coalg.comul, coalg.counit, alg.mul, alg.unit,
                   labels or coalg.labels)

    @property
    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.field, self.dim, self.comul, self.counit, self.labels)

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.field, self.dim, self.mul, self.unit, self.labels)

    @property
    def bialgebra(self) -> "Bialgebra":
        return Bialgebra(self.field, self.dim, self.comul, self.counit, self.mul, self.unit, self.labels)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, field={self.field})"


class HopfAlgebra(Bialgebra):
    def __init__(self, field, dim, comul, counit, mul, unit, antipode, labels=None):
        super().__init__(field, dim, comul, counit, mul, unit, labels)
        _need(antipode, dim, dim, "antipode")
        self.antipode = antipode

    @classmethod
    def from_bialgebra(cls, B: Bialgebra, antipode: LinearMap):
        return cls(B.field, B.dim, B.comul, B.counit, B.mul, B.unit, antipode, B.labels)


class RightComodule:
    def __init__(self, over, dim: int, coaction: LinearMap, labels=None):
        _need(coaction, dim * over.dim, dim, "right coaction")
        self.over = over
        self.field = over.field
        self.dim = dim
        self.coaction = coaction
        self.labels = _labels(labels, dim, "m")

    def __repr__(self):
        return f"RightComodule(dim={self.dim})"


class LeftComodule:
    def __init__(self, over, dim: int, coaction: LinearMap, labels=None):
        _need(coaction, over.dim * dim, dim, "left coaction")
        self.over = over
        self.field = over.field
        self.dim = dim
        self.coaction = coaction
        self.labels = _labels(labels, dim, "m")

    def __repr__(self):
        return f"LeftComodule(dim={self.dim})"


class LeftModule:
    def __init__(self, over, dim: int, action: LinearMap, labels=None):
        _need(action, dim, over.dim * dim, "left action")
        self.over = over
        self.field = over.field
        self.dim = dim
        self.action = action
        self.labels = _labels(labels, dim, "m")


class ModuleCoalgebra:
    """A coalgebra C with a left H-action making Delta_C and eps_C H-linear."""

    def __init__(self, H: Bialgebra, coalg, action: LinearMap):
        _need(action, coalg.dim, H.dim * coalg.dim, "module-coalgebra action")
        _same_field(H, coalg)
        self.H = H
        self.coalg = coalg.coalgebra if not isinstance(coalg, Coalgebra) else coalg
        self.action = action
        self.field = coalg.field
        self.dim = coalg.dim
        self.comul = coalg.comul
        self.counit = coalg.counit
        self.labels = coalg.labels

    @property
    def coalgebra(self):
        return self.coalg

    def __repr__(self):
        return f"ModuleCoalgebra(dim={self.dim}, H dim={self.H.dim})"


class Bicomodule:
    """C-D-bicomodule: left C-coaction and right D-coaction."""

    def __init__(self, C, D, dim: int, left: LinearMap, right: LinearMap, labels=None):
        _need(left, C.dim * dim, dim, "left coaction")
        _need(right, dim * D.dim, dim, "right coaction")
        self.C = C
        self.D = D
        self.field = C.field
        self.dim = dim
        self.left = left
        self.right = right
        self.labels = _labels(labels, dim, "m")

    @property
    def as_left(self) -> LeftComodule:
        return LeftComodule(self.C, self.dim, self.left, self.labels)

    @property
    def as_right(self) -> RightComodule:
        return RightComodule(self.D, self.dim, self.right, self.labels)

    @property
    def bicomodule(self):
        return self

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})"


class EquivariantBicomodule(Bicomodule):
    """A C-D-bicomodule in the category of left H-modules."""

    def __init__(self, H, C, D, dim, left, right, action, labels=None):
        super().__init__(C, D, dim, left, right, labels)
        _need(action, dim, H.dim * dim, "H-action")
        self.H = H
        self.action = action

    @property
    def bicomodule(self) -> Bicomodule:
        return Bicomodule(self.C, self.D, self.dim, self.left, self.right, self.labels)

    def with_action(self, action: LinearMap) -> "EquivariantBicomodule":
        return EquivariantBicomodule(self.H, self.C, self.D, self.dim, self.left,
                                     self.right, action, self.labels)

    @property
    def as_module(self) -> LeftModule:
        return LeftModule(self.H, self.dim, self.action, self.labels)


# ---------------------------------------------------------------------------
# standard constructions


def regular_module_coalgebra(H: Bialgebra) -> ModuleCoalgebra:
    """H acting on itself by left multiplication."""
    return ModuleCoalgebra(H, H.coalgebra, H.mul)


def trivial_module_coalgebra(H: Bialgebra, C) -> ModuleCoalgebra:
    """h . c = eps(h) c."""
    return ModuleCoalgebra(H, C.coalgebra, tensor(H.counit, eye(H.field, C.dim)))


def ground_coalgebra(F: Field) -> Coalgebra:
    one = eye(F, 1)
    return Coalgebra(F, 1, one, one, ["1"])


def regular_right(C) -> RightComodule:
    return RightComodule(C, C.dim, C.comul, C.labels)


def regular_left(C) -> LeftComodule:
    return LeftComodule(C, C.dim, C.comul, C.labels)


def free_comodule(C, k: int) -> RightComodule:
    """k copies of the regular right comodule; coaction id_k (x) Delta."""
    F = C.field
    return RightComodule(C, k * C.dim, tensor(eye(F, k), C.comul),
                         tensor_labels([f"v{i}" for i in range(k)], C.labels))


def free_left_comodule(C, k: int) -> LeftComodule:
    """Delta (x) id_k on C (x) k."""
    F = C.field
    return LeftComodule(C, C.dim * k, tensor(C.comul, eye(F, k)),
                        tensor_labels(C.labels, [f"v{i}" for i in range(k)]))


def trivial_comodule(C, dim: int = 1, grouplike: LinearMap | None = None) -> RightComodule:
    """x -> x (x) g for a group-like g (default: the unit, when C has one)."""
    if grouplike is None:
        grouplike = C.unit
    F = C.field
    return RightComodule(C, dim, tensor(eye(F, dim), grouplike), default_labels(dim, "t"))


def trivial_left_comodule(C, dim: int = 1, grouplike: LinearMap | None = None) -> LeftComodule:
    if grouplike is None:
        grouplike = C.unit
    return LeftComodule(C, dim, tensor(grouplike, eye(C.field, dim)), default_labels(dim, "t"))


def zero_comodule(C) -> RightComodule:
    return RightComodule(C, 0, LinearMap.zero(C.field, 0, 0), [])


def direct_sum_comodule(*Ms: RightComodule) -> RightComodule:
    C = Ms[0].over
    F = C.field
    n = C.dim
    total = sum(M.dim for M in Ms)
    entries = []
    off = 0
    for M in Ms:
        for r, c, v in M.coaction.entries:
            m, k = divmod(r, n)
            entries.append(((m + off) * n + k, c + off, v))
        off += M.dim
    labels = [lab for M in Ms for lab in M.labels]
    return RightComodule(C, total, LinearMap.from_entries(F, total * n, total, entries), labels)


def tensor_comodule(X: RightComodule, M: RightComodule, C=None) -> RightComodule:
    """X (x) M with coaction x (x) m -> x_(0) (x) m_(0) (x) x_(1) m_(1).

    X is a right H-comodule, M a right C-comodule and C a left H-module
    coalgebra; when C is omitted, M is taken to be an H-comodule and H acts
    on itself by multiplication.
    """
    H = X.over
    if C is None:
        act = H.mul
        C = M.over
    else:
        act = C.action
    F = _same_field(X, M)
    x, h, m, c = X.dim, H.dim, M.dim, C.dim
    coaction = compose_all(
        tensor(eye(F, x * m), act),
        perm(F, (x, h, m, c), (0, 2, 1, 3)),
        tensor(X.coaction, M.coaction),
    )
    return RightComodule(C, x * m, coaction, tensor_labels(X.labels, M.labels))


def op_bialgebra(H: Bialgebra) -> Bialgebra:
    """Same coalgebra, multiplication reversed."""
    F = H.field
    mul = H.mul @ perm(F, (H.dim, H.dim), (1, 0))
    if isinstance(H, HopfAlgebra):
        # S is invertible in finite dimension; S^{-1} is the antipode of H^op
        from .exactla import invert
        Sinv = invert(H.antipode)
        if Sinv is not None:
            return HopfAlgebra(F, H.dim, H.comul, H.counit, mul, H.unit, Sinv, H.labels)
    return Bialgebra(F, H.dim, H.comul, H.counit, mul, H.unit, H.labels)


def cop_coalgebra(C):
    F = C.field
    return Coalgebra(F, C.dim, perm(F, (C.dim, C.dim), (1, 0)) @ C.comul, C.counit, C.labels)


# ---------------------------------------------------------------------------
# checkers


def _coassoc(R: CheckReport, F, n, comul, counit, labels, prefix=""):
    I = eye(F, n)
    R.compare(prefix + "coassociativity", tensor(comul, I) @ comul, tensor(I, comul) @ comul, labels)
    R.compare(prefix + "left counit", tensor(counit, I) @ comul, I, labels)
    R.compare(prefix + "right counit", tensor(I, counit) @ comul, I, labels)


def check_coalgebra(C) -> CheckReport:
    R = CheckReport("coalgebra")
    _coassoc(R, C.field, C.dim, C.comul, C.counit, C.labels)
    return R


def check_algebra(A) -> CheckReport:
    R = CheckReport("algebra")
    F, n, m, u = A.field, A.dim, A.mul, A.unit
    I = eye(F, n)
    R.compare("associativity", m @ tensor(m, I), m @ tensor(I, m), tensor_labels(A.labels, A.labels, A.labels))
    R.compare("left unit", m @ tensor(u, I), I, A.labels)
    R.compare("right unit", m @ tensor(I, u), I, A.labels)
    return R


def check_bialgebra(B) -> CheckReport:
    R = CheckReport("bialgebra")
    R.extend(check_coalgebra(B))
    R.extend(check_algebra(B))
    F, n = B.field, B.dim
    pairs = tensor_labels(B.labels, B.labels)
    mid = perm(F, (n, n, n, n), (0, 2, 1, 3))
    R.compare("comultiplication is multiplicative",
              B.comul @ B.mul, compose_all(tensor(B.mul, B.mul), mid, tensor(B.comul, B.comul)), pairs)
    R.compare("comultiplication is unital", B.comul @ B.unit, tensor(B.unit, B.unit), ["1"])
    R.compare("counit is multiplicative", B.counit @ B.mul, tensor(B.counit, B.counit), pairs)
    R.compare("counit is unital", B.counit @ B.unit, eye(F, 1), ["1"])
    return R


def check_antipode(H, S: LinearMap) -> CheckReport:
    R = CheckReport("antipode")
    F, n = H.field, H.dim
    I = eye(F, n)
    ue = H.unit @ H.counit
    R.compare("left antipode", compose_all(H.mul, tensor(S, I), H.comul), ue, H.labels)
    R.compare("right antipode", compose_all(H.mul, tensor(I, S), H.comul), ue, H.labels)
    return R


def check_hopf(H: HopfAlgebra) -> CheckReport:
    R = CheckReport("hopf algebra")
    R.extend(check_bialgebra(H))
    R.extend(check_antipode(H, H.antipode))
    return R


def check_right_comodule(M: RightComodule) -> CheckReport:
    R = CheckReport("right comodule")
    C, F, d = M.over, M.field, M.dim
    Id = eye(F, d)
    rho = M.coaction
    R.compare("coassociativity", tensor(rho, eye(F, C.dim)) @ rho, tensor(Id, C.comul) @ rho, M.labels)
    R.compare("counit", tensor(Id, C.counit) @ rho, Id, M.labels)
    return R


def check_left_comodule(M: LeftComodule) -> CheckReport:
    R = CheckReport("left comodule")
    C, F, d = M.over, M.field, M.dim
    Id = eye(F, d)
    lam = M.coaction
    R.compare("coassociativity", tensor(eye(F, C.dim), lam) @ lam, tensor(C.comul, Id) @ lam, M.labels)
    R.compare("counit", tensor(C.counit, Id) @ lam, Id, M.labels)
    return R


def check_comodule(M) -> CheckReport:
    if isinstance(M, LeftComodule):
        return check_left_comodule(M)
    return check_right_comodule(M)


def check_module(M) -> CheckReport:
    """Left module axioms; accepts anything with over/dim/action."""
    R = CheckReport("left module")
    A, F, d = M.over, M.field, M.dim
    a = M.action
    Id = eye(F, d)
    labels = tensor_labels(A.labels, A.labels, M.labels)
    R.compare("associativity", a @ tensor(A.mul, Id), a @ tensor(eye(F, A.dim), a), labels)
    R.compare("unit", a @ tensor(A.unit, Id), Id, M.labels)
    return R


def check_module_coalgebra(C: ModuleCoalgebra) -> CheckReport:
    R = CheckReport("module coalgebra")
    R.extend(check_coalgebra(C))
    R.extend(check_module(LeftModule(C.H, C.dim, C.action, C.labels)), "module: ")
    H, F = C.H, C.field
    h, n = H.dim, C.dim
    labels = tensor_labels(H.labels, C.labels)
    R.compare("comultiplication is H-linear",
              C.comul @ C.action,
              compose_all(tensor(C.action, C.action), perm(F, (h, h, n, n), (0, 2, 1, 3)),
                          tensor(H.comul, C.comul)), labels)
    R.compare("counit is H-linear", C.counit @ C.action, tensor(H.counit, C.counit), labels)
    return R


def check_bicomodule(M: Bicomodule) -> CheckReport:
    R = CheckReport("bicomodule")
    R.extend(check_left_comodule(M.as_left), "left ")
    R.extend(check_right_comodule(M.as_right), "right ")
    F = M.field
    R.compare("coactions commute",
              tensor(M.left, eye(F, M.D.dim)) @ M.right,
              tensor(eye(F, M.C.dim), M.right) @ M.left, M.labels)
    return R


def equivariance_composites(M: EquivariantBicomodule):
    """The two sides of both equivariance equations, as maps out of H (x) M."""
    H, C, D, F = M.H, M.C, M.D, M.field
    h, c, d, m = H.dim, C.dim, D.dim, M.dim
    left_lhs = M.left @ M.action
    left_rhs = compose_all(tensor(C.action, M.action), perm(F, (h, h, c, m), (0, 2, 1, 3)),
                           tensor(H.comul, M.left))
    right_lhs = M.right @ M.action
    right_rhs = compose_all(tensor(M.action, D.action), perm(F, (h, h, m, d), (0, 2, 1, 3)),
                            tensor(H.comul, M.right))
    return (left_lhs, left_rhs), (right_lhs, right_rhs)


def check_equivariant_bicomodule(M: EquivariantBicomodule) -> CheckReport:
    R = CheckReport("equivariant bicomodule")
    R.extend(check_bicomodule(M.bicomodule))
    R.extend(check_module(M.as_module), "module ")
    (ll, lr), (rl, rr) = equivariance_composites(M)
    labels = tensor_labels(M.H.labels, M.labels)
    R.compare("left coaction is H-linear", ll, lr, labels)
    R.compare("right coaction is H-linear", rl, rr, labels)
    return R


# ---------------------------------------------------------------------------
# morphisms


def is_right_colinear(f: LinearMap, M: RightComodule, N: RightComodule) -> bool:
    F = M.field
    c = M.over.dim
    return N.coaction @ f == tensor(f, eye(F, c)) @ M.coaction


def is_left_colinear(f: LinearMap, M: LeftComodule, N: LeftComodule) -> bool:
    F = M.field
    c = M.over.dim
    return N.coaction @ f == tensor(eye(F, c), f) @ M.coaction


def is_module_map(f: LinearMap, M, N) -> bool:
    F = M.field
    return f @ M.action == N.action @ tensor(eye(F, M.over.dim if hasattr(M, "over") else M.H.dim), f)


def is_bicomodule_map(f: LinearMap, M: Bicomodule, N: Bicomodule) -> bool:
    F = M.field
    return (N.left @ f == tensor(eye(F, M.C.dim), f) @ M.left
            and N.right @ f == tensor(f, eye(F, M.D.dim)) @ M.right)


def is_equivariant_map(f: LinearMap, M: EquivariantBicomodule, N: EquivariantBicomodule) -> bool:
    return is_bicomodule_map(f, M, N) and f @ M.action == N.action @ tensor(eye(M.field, M.H.dim), f)
