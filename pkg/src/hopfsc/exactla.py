"""Exact linear algebra over Q and prime fields.

A :class:`LinearMap` has ``rows`` = codomain dimension and ``cols`` = domain
dimension.  Tensor products follow one global row-major convention: the
basis vector e_i (x) e_j of an (m, n) tensor space sits at flat index
``i * n + j``.

Rationals are stored as ``int`` whenever the denominator is 1 and as
reduced :class:`fractions.Fraction` otherwise; prime-field elements are ints
in ``range(p)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NonPrimeField


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e9
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _demote(x: Fraction):
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class Field:
    """The rationals (``p=None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise NonPrimeField(f"characteristic must be an integer, got {self.p!r}")
            if not (2 <= self.p < 2**31) or not is_prime(self.p):
                raise NonPrimeField(f"{self.p} is not a prime below 2^31")

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text == "Q":
            return cls()
        if text.startswith("F") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise NonPrimeField(f"unknown field {text!r}")

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"

    def __repr__(self):
        return f"Field({self})"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or "a/b" string) into this field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, bool):
            x = int(x)
        p = self.p
        if p is None:
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                return _demote(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes in {self}")
            return x.numerator * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def inv(self, a):
        if self.p is None:
            return _demote(1 / Fraction(a))
        return pow(a, -1, self.p)

    def format(self, a) -> str:
        return str(a)

    def elements(self):
        if self.p is None:
            raise ValueError("Q is infinite")
        return range(self.p)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def _check_field(*maps: "LinearMap") -> Field:
    field = maps[0].field
    for m in maps[1:]:
        if m.field != field:
            raise FieldMismatch(f"{field} vs {m.field}")
    return field


class LinearMap:
    """Immutable sparse matrix over a :class:`Field`.

    Internally stored column-by-column (``dict`` row -> nonzero scalar).
    """

    __slots__ = ("field", "rows", "cols", "_columns", "_hash")

    def __init__(self, field: Field, rows: int, cols: int, columns: Sequence[dict]):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("dimensions must be nonnegative")
        if len(columns) != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {len(columns)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._columns = tuple(columns)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_entries(cls, field: Field, rows: int, cols: int, entries: Iterable) -> "LinearMap":
        """Build from ``(row, col, scalar)`` triples; duplicate positions add up."""
        columns = [dict() for _ in range(cols)]
        p = field.p
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatch(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = field(v)
            col = columns[c]
            nv = col.get(r, 0) + v
            if p is not None:
                nv %= p
            if nv:
                col[r] = nv
            else:
                col.pop(r, None)
        return cls(field, rows, cols, columns)

    @classmethod
    def from_dense(cls, field: Field, matrix: Sequence[Sequence], cols: int | None = None) -> "LinearMap":
        rows = len(matrix)
        if cols is None:
            cols = len(matrix[0]) if rows else 0
        entries = []
        for i, row in enumerate(matrix):
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix")
            entries.extend((i, j, v) for j, v in enumerate(row) if v)
        return cls.from_entries(field, rows, cols, entries)

    @classmethod
    def from_columns(cls, field: Field, rows: int, vectors: Sequence) -> "LinearMap":
        """Columns given as dense sequences or sparse dicts."""
        columns = []
        for vec in vectors:
            if isinstance(vec, dict):
                items = vec.items()
            else:
                if len(vec) != rows:
                    raise DimensionMismatch(f"column of length {len(vec)} for {rows} rows")
                items = enumerate(vec)
            col = {}
            for r, v in items:
                v = field(v)
                if v:
                    if not 0 <= r < rows:
                        raise DimensionMismatch(f"row index {r} out of range")
                    col[r] = v
            columns.append(col)
        return cls(field, rows, len(columns), columns)

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearMap":
        return cls(field, n, n, [{i: 1} for i in range(n)])

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "LinearMap":
        return cls(field, rows, cols, [{} for _ in range(cols)])

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Canonical form: ``(row, col, scalar)`` sorted by (row, col)."""
        out = [(r, c, v) for c, col in enumerate(self._columns) for r, v in col.items()]
        out.sort()
        return tuple(out)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._columns)

    def column(self, j: int) -> dict:
        return dict(self._columns[j])

    def __getitem__(self, rc):
        r, c = rc
        return self._columns[c].get(r, 0)

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def row_dicts(self) -> list[dict]:
        rows = [dict() for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def is_zero(self) -> bool:
        return not any(self._columns)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(col == {j: 1} for j, col in enumerate(self._columns))

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self._columns == other._columns)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows, self.cols, self.entries))
        return self._hash

    def first_difference(self, other: "LinearMap") -> int | None:
        """Index of the first domain basis vector on which two maps differ."""
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        for j, (a, b) in enumerate(zip(self._columns, other._columns)):
            if a != b:
                return j
        return None

    def __repr__(self):
        return f"LinearMap({self.field}, {self.rows}x{self.cols}, nnz={self.nnz})"

    # -- arithmetic -------------------------------------------------------

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    def _combine(self, other, sign):
        field = _check_field(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        p = field.p
        columns = []
        for a, b in zip(self._columns, other._columns):
            col = dict(a)
            for r, v in b.items():
                nv = col.get(r, 0) + sign * v
                if p is not None:
                    nv %= p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
            columns.append(col)
        return LinearMap(field, self.rows, self.cols, columns)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "LinearMap":
        field = self.field
        s = field(s)
        if not s:
            return LinearMap.zero(field, self.rows, self.cols)
        p = field.p
        if p is None:
            columns = [{r: _mulq(v, s) for r, v in col.items()} for col in self._columns]
        else:
            columns = [{r: v * s % p for r, v in col.items()} for col in self._columns]
        return LinearMap(field, self.rows, self.cols, columns)

    def transpose(self) -> "LinearMap":
        return LinearMap(self.field, self.cols, self.rows, self.row_dicts())

    @property
    def T(self) -> "LinearMap":
        return self.transpose()

    def apply(self, vector) -> list:
        """Apply to a dense vector (sequence of scalars); returns a dense list."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        field = self.field
        p = field.p
        out = [0] * self.rows
        for j, x in enumerate(vector):
            x = field(x)
            if not x:
                continue
            for r, v in self._columns[j].items():
                out[r] += v * x
        if p is not None:
            return [v % p for v in out]
        return [field(v) for v in out]


def _mulq(a, b):
    c = a * b
    return _demote(c) if isinstance(c, Fraction) else c


def _normq(x):
    return _demote(x) if isinstance(x, Fraction) else x


# ---------------------------------------------------------------------------
# core operations


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Return f o g."""
    field = _check_field(f, g)
    if f.cols != g.rows:
        raise DimensionMismatch(f"cannot compose {f.rows}x{f.cols} with {g.rows}x{g.cols}")
    p = field.p
    fcols = f._columns
    columns = []
    for gcol in g._columns:
        acc: dict = {}
        for k, gv in gcol.items():
            for r, fv in fcols[k].items():
                acc[r] = acc.get(r, 0) + fv * gv
        if p is None:
            col = {r: _normq(v) for r, v in acc.items() if v}
        else:
            col = {}
            for r, v in acc.items():
                v %= p
                if v:
                    col[r] = v
        columns.append(col)
    return LinearMap(field, f.rows, g.cols, columns)


def compose_all(*maps: LinearMap) -> LinearMap:
    """compose_all(f, g, h) == f o g o h."""
    return reduce(compose, maps)


def tensor(*maps: LinearMap) -> LinearMap:
    """Kronecker product with row-major flat indices."""
    if not maps:
        raise ValueError("tensor needs at least one map")
    return reduce(_tensor2, maps)


def _tensor2(f: LinearMap, g: LinearMap) -> LinearMap:
    field = _check_field(f, g)
    p = field.p
    gr, gc = g.rows, g.cols
    columns = []
    for fcol in f._columns:
        for gcol in g._columns:
            col = {}
            for i, fv in fcol.items():
                base = i * gr
                for k, gv in gcol.items():
                    v = fv * gv
                    if p is not None:
                        v %= p
                    else:
                        v = _normq(v)
                    col[base + k] = v
            columns.append(col)
    return LinearMap(field, f.rows * gr, f.cols * gc, columns)


def identity(field: Field, n: int) -> LinearMap:
    return LinearMap.identity(field, n)


def direct_sum(*maps: LinearMap) -> LinearMap:
    field = _check_field(*maps)
    columns = []
    roff = 0
    for m in maps:
        for col in m._columns:
            columns.append({r + roff: v for r, v in col.items()})
        roff += m.rows
    return LinearMap(field, roff, len(columns), columns)


def hstack(*maps: LinearMap) -> LinearMap:
    field = _check_field(*maps)
    rows = maps[0].rows
    if any(m.rows != rows for m in maps):
        raise DimensionMismatch("hstack needs equal row counts")
    columns = [col for m in maps for col in m._columns]
    return LinearMap(field, rows, len(columns), columns)


def vstack(*maps: LinearMap) -> LinearMap:
    field = _check_field(*maps)
    cols = maps[0].cols
    if any(m.cols != cols for m in maps):
        raise DimensionMismatch("vstack needs equal column counts")
    columns = [dict() for _ in range(cols)]
    roff = 0
    for m in maps:
        for j, col in enumerate(m._columns):
            for r, v in col.items():
                columns[j][r + roff] = v
        roff += m.rows
    return LinearMap(field, roff, cols, columns)


def select_columns(f: LinearMap, indices: Sequence[int]) -> LinearMap:
    return LinearMap(f.field, f.rows, len(indices), [f._columns[j] for j in indices])


def permutation(field: Field, dims: Sequence[int], order: Sequence[int]) -> LinearMap:
    """Leg permutation V_0 (x) ... (x) V_{k-1} -> V_order[0] (x) ... (x) V_order[k-1]."""
    dims = list(dims)
    if sorted(order) != list(range(len(dims))):
        raise ValueError(f"{order} is not a permutation of {len(dims)} legs")
    out_dims = [dims[o] for o in order]
    strides = [1] * len(out_dims)
    for i in range(len(out_dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * out_dims[i + 1]
    # position of domain leg t inside the codomain
    where = {o: i for i, o in enumerate(order)}
    columns = []
    for idx in itertools.product(*(range(d) for d in dims)):
        r = 0
        for t, i in enumerate(idx):
            r += i * strides[where[t]]
        columns.append({r: 1})
    n = 1
    for d in dims:
        n *= d
    return LinearMap(field, n, n, columns)


def swap(field: Field, m: int, n: int) -> LinearMap:
    """The flip V_m (x) V_n -> V_n (x) V_m."""
    return permutation(field, (m, n), (1, 0))


# ---------------------------------------------------------------------------
# elimination


def _rref(rows: Iterable[dict], field: Field) -> tuple[list[int], list[dict]]:
    """Incremental Gauss-Jordan elimination of sparse rows.

    Returns the pivot columns (ascending) and the matching rows of the unique
    reduced row echelon form.  Pivot rows only ever carry entries at columns
    >= their pivot, so the result is the RREF whatever the insertion order.
    """
    p = field.p
    piv: dict[int, dict] = {}
    # column -> set of pivot columns whose row has a nonzero there
    occurs: dict[int, set] = {}
    for src in rows:
        if not src:
            continue
        r = dict(src)
        for c in [c for c in r if c in piv]:
            f = r.get(c)
            if not f:
                continue
            for k, v in piv[c].items():
                nv = r.get(k, 0) - f * v
                if p is not None:
                    nv %= p
                elif isinstance(nv, Fraction):
                    nv = _demote(nv)
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            continue
        lead = min(r)
        lv = r[lead]
        if lv != 1:
            if p is None:
                inv = 1 / Fraction(lv)
                r = {k: _normq(v * inv) for k, v in r.items()}
            else:
                inv = pow(lv, -1, p)
                r = {k: v * inv % p for k, v in r.items()}
        # clear the new pivot column from existing pivot rows
        for c2 in list(occurs.get(lead, ())):
            row2 = piv[c2]
            f = row2.get(lead)
            if not f:
                continue
            for k, v in r.items():
                nv = row2.get(k, 0) - f * v
                if p is not None:
                    nv %= p
                elif isinstance(nv, Fraction):
                    nv = _demote(nv)
                if nv:
                    if k not in row2:
                        occurs.setdefault(k, set()).add(c2)
                    row2[k] = nv
                else:
                    row2.pop(k, None)
        occurs.pop(lead, None)
        piv[lead] = r
        for k in r:
            if k != lead:
                occurs.setdefault(k, set()).add(lead)
    pivots = sorted(piv)
    return pivots, [piv[c] for c in pivots]


def rref(f: LinearMap) -> tuple[list[int], LinearMap]:
    """Pivot columns and the nonzero rows of the RREF (as a rank x cols map)."""
    pivots, rows = _rref(f.row_dicts(), f.field)
    columns = [dict() for _ in range(f.cols)]
    for i, row in enumerate(rows):
        for c, v in row.items():
            columns[c][i] = v
    return pivots, LinearMap(f.field, len(rows), f.cols, columns)


def rank(f: LinearMap) -> int:
    return len(_rref(f.row_dicts(), f.field)[0])


def kernel(f: LinearMap) -> LinearMap:
    """Injection K -> domain(f) whose image is ker f.

    Columns are the reduced-echelon null-space basis: one column per
    non-pivot column j of the RREF, with a 1 at j, zero at the other
    non-pivot positions and minus the RREF entries at the pivot positions.
    """
    field = f.field
    pivots, rows = _rref(f.row_dicts(), field)
    pivset = set(pivots)
    free = [j for j in range(f.cols) if j not in pivset]
    p = field.p
    # column j of the RREF restricted to pivot rows
    by_col: dict[int, dict] = {}
    for pc, row in zip(pivots, rows):
        for c, v in row.items():
            if c != pc:
                by_col.setdefault(c, {})[pc] = v
    columns = []
    for j in free:
        col = {j: 1}
        for pc, v in by_col.get(j, {}).items():
            col[pc] = (-v) % p if p is not None else -v
        columns.append(col)
    return LinearMap(field, f.cols, len(free), columns)


def image(f: LinearMap) -> LinearMap:
    """Injection whose columns are the RREF basis of the column space of f."""
    pivots, rows = _rref(f._columns, f.field)
    return LinearMap(f.field, f.rows, len(rows), [dict(r) for r in rows])


def _unit_rows(a: LinearMap) -> list[int] | None:
    """For each column j, a row index r_j whose row is exactly e_j, if any."""
    rows = a.row_dicts()
    found: dict[int, int] = {}
    for r, row in enumerate(rows):
        if len(row) == 1:
            (c, v), = row.items()
            if v == 1 and c not in found:
                found[c] = r
    if len(found) != a.cols:
        return None
    return [found[j] for j in range(a.cols)]


def solve_columns(a: LinearMap, b: LinearMap) -> LinearMap | None:
    """Some x with a o x == b (free variables zero), or None if inconsistent."""
    field = _check_field(a, b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"{a.rows} rows vs {b.rows} rows")
    unit = _unit_rows(a)
    if unit is not None:
        # the unit rows force the solution
        columns = []
        for col in b._columns:
            columns.append({j: col[r] for j, r in enumerate(unit) if r in col})
        x = LinearMap(field, a.cols, b.cols, columns)
        return x if compose(a, x) == b else None
    n = a.cols
    arows = a.row_dicts()
    brows = b.row_dicts()
    aug = []
    for ra, rb in zip(arows, brows):
        row = dict(ra)
        for c, v in rb.items():
            row[n + c] = v
        aug.append(row)
    pivots, rows = _rref(aug, field)
    columns = [dict() for _ in range(b.cols)]
    bad = set()
    for pc, row in zip(pivots, rows):
        if pc >= n:
            # a pivot in the right-hand block: inconsistent for that column
            bad.add(pc - n)
            continue
        for c, v in row.items():
            if c >= n:
                columns[c - n][pc] = v
    if bad:
        return None
    return LinearMap(field, n, b.cols, columns)


def solve(f: LinearMap, b: Sequence) -> list | None:
    """A particular solution of f(x) = b with free variables set to 0."""
    if len(b) != f.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {f.rows} rows")
    rhs = LinearMap.from_columns(f.field, f.rows, [list(b)])
    x = solve_columns(f, rhs)
    if x is None:
        return None
    col = x.column(0)
    return [col.get(i, 0) for i in range(f.cols)]


def invert(f: LinearMap) -> LinearMap | None:
    if f.rows != f.cols:
        return None
    n = f.cols
    aug = []
    for i, row in enumerate(f.row_dicts()):
        row = dict(row)
        row[n + i] = 1
        aug.append(row)
    pivots, rows = _rref(aug, f.field)
    if pivots[:n] != list(range(n)):
        return None
    columns = [dict() for _ in range(n)]
    for pc, row in zip(pivots[:n], rows[:n]):
        for c, v in row.items():
            if c >= n:
                columns[c - n][pc] = v
    return LinearMap(f.field, n, n, columns)


# ---------------------------------------------------------------------------
# subspaces (represented by injective maps)


def restrict(f: LinearMap, domain: LinearMap, codomain: LinearMap) -> LinearMap | None:
    """The map g with codomain o g == f o domain, or None if f(im domain) is
    not contained in im codomain."""
    return solve_columns(codomain, compose(f, domain))


def contains(sub: LinearMap, vectors: LinearMap) -> bool:
    return solve_columns(sub, vectors) is not None


def same_subspace(a: LinearMap, b: LinearMap) -> bool:
    return image(a) == image(b)


def preimage(f: LinearMap, sub: LinearMap) -> LinearMap:
    """Canonical basis of {x : f(x) in im sub}."""
    field = _check_field(f, sub)
    k = kernel(hstack(f, sub))
    proj = LinearMap(field, f.cols, f.cols + sub.cols,
                     [{j: 1} for j in range(f.cols)] + [{} for _ in range(sub.cols)])
    return image(compose(proj, k))


def intersect(a: LinearMap, b: LinearMap) -> LinearMap:
    k = kernel(hstack(a, b))
    top = LinearMap(a.field, a.cols, a.cols + b.cols,
                    [{j: 1} for j in range(a.cols)] + [{} for _ in range(b.cols)])
    return image(compose(a, compose(top, k)))


def span_sum(a: LinearMap, b: LinearMap) -> LinearMap:
    return image(hstack(a, b))


def is_injective(f: LinearMap) -> bool:
    return rank(f) == f.cols
