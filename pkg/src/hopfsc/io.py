"""HSC v1: a line-friendly text format for structure constants.

A document is a header (``format: HSC v1`` and ``field: Q`` or ``field: F<p>``)
followed by named blocks::

    [kc2]
    kind: hopf
    dim: 2
    basis: [1, g]
    comul: [
      (0, 0, 0, 1),
      (1, 1, 1, 1),
    ]

Maps are sparse tuples: output leg indices, then input leg indices, then the
scalar (a decimal integer or a quoted ``"a/b"``).  ``(i, j, k, c)`` under
``comul`` means Delta(e_k) += c e_i (x) e_j.  Blocks refer to earlier blocks
by name (``over``, ``left``, ``right``, ``coalg``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .equivariant import BimoduleCoalgebra, XiFamily
from .errors import HopfSCError, NonPrimeField
from .exactla import Field, LinearMap
from .structures import (
    Algebra, Bialgebra, Bicomodule, Coalgebra, EquivariantBicomodule, HopfAlgebra,
    LeftComodule, LeftModule, ModuleCoalgebra, RightComodule, regular_right, tensor_comodule,
)
from .subcat import Subcoalgebra
from .ydmod import YDModule

FORMAT = "HSC v1"
MAX_DIM = 4096

KEY_ORDER = [
    "kind", "over", "left", "right", "coalg", "dim", "basis",
    "comul", "mul", "unit", "counit", "action", "action_l", "action_r",
    "coaction_r", "coaction_l", "antipode", "xi_HC", "inclusion",
]
REF_KEYS = ("over", "left", "right", "coalg")
MAP_KEYS = KEY_ORDER[7:]

COALGEBRA_KINDS = ("coalgebra", "bialgebra", "hopf", "module_coalgebra", "bimodule_coalgebra")
ALGEBRA_KINDS = ("algebra", "bialgebra", "hopf")
BIALGEBRA_KINDS = ("bialgebra", "hopf")

# kind -> (required keys, optional keys, {reference key: allowed kinds})
SCHEMA = {
    "coalgebra": (("dim", "comul", "counit"), ("basis",), {}),
    "algebra": (("dim", "mul", "unit"), ("basis",), {}),
    "bialgebra": (("dim", "comul", "counit", "mul", "unit"), ("basis",), {}),
    "hopf": (("dim", "comul", "counit", "mul", "unit", "antipode"), ("basis",), {}),
    "comodule_r": (("over", "dim", "coaction_r"), ("basis",), {"over": COALGEBRA_KINDS}),
    "comodule_l": (("over", "dim", "coaction_l"), ("basis",), {"over": COALGEBRA_KINDS}),
    "module_l": (("over", "dim", "action"), ("basis",), {"over": ALGEBRA_KINDS}),
    "module_coalgebra": (("over", "dim", "comul", "counit", "action"), ("basis",),
                         {"over": BIALGEBRA_KINDS}),
    "bimodule_coalgebra": (("left", "right", "dim", "comul", "counit", "action_l", "action_r"),
                           ("basis",), {"left": BIALGEBRA_KINDS, "right": BIALGEBRA_KINDS}),
    "equivariant_bicomodule": (("left", "right", "dim", "coaction_l", "coaction_r"),
                               ("over", "basis", "action"),
                               {"over": BIALGEBRA_KINDS, "left": COALGEBRA_KINDS,
                                "right": COALGEBRA_KINDS}),
    "yd_module": (("over", "coalg", "dim", "action", "coaction_r"), ("basis",),
                  {"over": BIALGEBRA_KINDS, "coalg": ("bimodule_coalgebra",)}),
    "subcoalgebra": (("over", "dim", "inclusion"), (), {"over": COALGEBRA_KINDS}),
    "xi_block": (("over", "xi_HC"), (), {"over": ("equivariant_bicomodule",)}),
}
KINDS = tuple(SCHEMA)


class HSCError(HopfSCError, ValueError):
    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, col {col}: " if line is not None else ""
        super().__init__(where + message)


class HSCSyntaxError(HSCError):
    pass


class HSCSemanticError(HSCError):
    def __init__(self, message, path, line=None, col=None):
        self.path = path
        super().__init__(f"{path}: {message}", line, col)


class HSCNonPrimeField(HSCSemanticError, NonPrimeField):
    pass


@dataclass
class XiBlock:
    """The (H, C) component of a lax structure xi, in echelon cotensor bases."""
    bicomodule: object
    block: LinearMap

    @property
    def field(self):
        return self.block.field

    def family(self) -> XiFamily:
        return XiFamily.from_block(self.bicomodule, self.block)


# ---------------------------------------------------------------------------
# lexer / parser


@dataclass
class Token:
    kind: str      # word | string | punct | eof
    value: str
    line: int
    col: int


_WORD = re.compile(r'[^\s\[\](),:"#]+')


def tokenize(text: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
        elif ch.isspace():
            i += 1
            col += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "[](),:":
            out.append(Token("punct", ch, line, col))
            i += 1
            col += 1
        elif ch == '"':
            j = i + 1
            buf = []
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise HSCSyntaxError("unterminated string", line, col)
                if text[j] == "\\" and j + 1 < n:
                    j += 1
                buf.append(text[j])
                j += 1
            if j >= n:
                raise HSCSyntaxError("unterminated string", line, col)
            out.append(Token("string", "".join(buf), line, col))
            col += j + 1 - i
            i = j + 1
        else:
            m = _WORD.match(text, i)
            out.append(Token("word", m.group(), line, col))
            col += m.end() - i
            i = m.end()
    out.append(Token("eof", "", line, col))
    return out


@dataclass
class Value:
    kind: str      # atom | list | tuple
    value: object
    tok: Token


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self, k=0):
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, value):
        t = self.next()
        if t.kind != "punct" or t.value != value:
            shown = t.value or "end of input"
            raise HSCSyntaxError(f"expected {value!r}, found {shown!r}", t.line, t.col)
        return t

    def at_key(self):
        t, u = self.peek(), self.peek(1)
        return t.kind == "word" and u.kind == "punct" and u.value == ":"

    def at(self, value):
        t = self.peek()
        return t.kind == "punct" and t.value == value

    def atom(self):
        t = self.next()
        if t.kind not in ("word", "string"):
            shown = t.value or "end of input"
            raise HSCSyntaxError(f"expected a value, found {shown!r}", t.line, t.col)
        return Value("atom", t, t)

    def item(self):
        if self.at("("):
            start = self.next()
            items = []
            while not self.at(")"):
                items.append(self.atom())
                if not self.at(")"):
                    self.expect(",")
            self.expect(")")
            return Value("tuple", items, start)
        return self.atom()

    def value(self):
        if self.at("["):
            start = self.next()
            items = []
            while not self.at("]"):
                items.append(self.item())
                if not self.at("]"):
                    self.expect(",")
            self.expect("]")
            return Value("list", items, start)
        first = self.atom()
        words = [first.value.value]
        # bare multi-word values such as "HSC v1"
        while self.peek().kind == "word" and not self.at_key():
            words.append(self.next().value)
        if len(words) > 1:
            return Value("atom", Token("word", " ".join(words), first.tok.line, first.tok.col), first.tok)
        return first

    def entries(self):
        out = []
        while self.at_key():
            key = self.next()
            self.next()
            out.append((key, self.value()))
        return out

    def document(self):
        header = self.entries()
        blocks = []
        while self.peek().kind != "eof":
            self.expect("[")
            name = self.next()
            if name.kind != "word":
                raise HSCSyntaxError("expected a block name", name.line, name.col)
            self.expect("]")
            blocks.append((name, self.entries()))
            t = self.peek()
            if t.kind != "eof" and not self.at("["):
                raise HSCSyntaxError(f"expected 'key:' or '[name]', found {t.value!r}", t.line, t.col)
        return header, blocks


# ---------------------------------------------------------------------------
# document model


class Document:
    """Ordered collection of named structures over one field."""

    def __init__(self, field: Field):
        self.field = field
        self.objects: dict[str, object] = {}
        self.kinds: dict[str, str] = {}

    def __getitem__(self, name):
        return self.objects[name]

    def __contains__(self, name):
        return name in self.objects

    def __iter__(self):
        return iter(self.objects.items())

    def names(self, kind=None):
        return [n for n in self.objects if kind is None or self.kinds[n] == kind]

    def name_of(self, obj):
        for n, o in self.objects.items():
            if o is obj:
                return n
        return None

    def add(self, name: str, obj) -> str:
        """Add obj under name, first adding (under derived names) any
        structure it refers to that is not already present."""
        existing = self.name_of(obj)
        if existing is not None:
            return existing
        if obj.field != self.field:
            raise HSCSemanticError(f"field {obj.field} differs from document field {self.field}", name)
        if name in self.objects:
            raise HSCSemanticError("duplicate block name", name)
        for role, dep in _references(obj).items():
            if dep is not None:
                self.add(f"{name}.{role}", dep)
        self.objects[name] = obj
        self.kinds[name] = kind_of(obj)
        return name


def kind_of(obj) -> str:
    if isinstance(obj, HopfAlgebra):
        return "hopf"
    if isinstance(obj, Bialgebra):
        return "bialgebra"
    for cls, kind in ((Algebra, "algebra"), (Coalgebra, "coalgebra"),
                      (ModuleCoalgebra, "module_coalgebra"),
                      (BimoduleCoalgebra, "bimodule_coalgebra"),
                      (Bicomodule, "equivariant_bicomodule"),
                      (RightComodule, "comodule_r"), (LeftComodule, "comodule_l"),
                      (LeftModule, "module_l"), (YDModule, "yd_module"),
                      (Subcoalgebra, "subcoalgebra"), (XiBlock, "xi_block")):
        if isinstance(obj, cls):
            return kind
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _references(obj) -> dict:
    kind = kind_of(obj)
    if kind in ("comodule_r", "comodule_l", "module_l"):
        return {"over": obj.over}
    if kind == "module_coalgebra":
        return {"over": obj.H}
    if kind == "bimodule_coalgebra":
        return {"left": obj.H, "right": obj.K}
    if kind == "equivariant_bicomodule":
        return {"over": getattr(obj, "H", None), "left": obj.C, "right": obj.D}
    if kind == "yd_module":
        return {"over": obj.H, "coalg": obj.C}
    if kind == "subcoalgebra":
        return {"over": obj.parent}
    if kind == "xi_block":
        return {"over": obj.bicomodule}
    return {}


def _xi_dims(M):
    """(rows, cols) of the (H, C) component of xi for M."""
    from .cotensor import apply_TM
    H, C = M.H, M.C
    T_C = apply_TM(M, regular_right(C))
    T_HC = apply_TM(M, tensor_comodule(regular_right(H), regular_right(C), C))
    return T_HC.dim, H.dim * T_C.dim


def _legs(kind, key, obj_dims):
    """(output leg dims, input leg dims) for a map key."""
    d = obj_dims
    n = d.get("dim")
    if key == "comul":
        return (n, n), (n,)
    if key == "mul":
        return (n,), (n, n)
    if key == "unit":
        return (n,), ()
    if key == "counit":
        return (), (n,)
    if key == "antipode":
        return (n,), (n,)
    if key == "action":
        if kind == "yd_module":
            return (n,), (n, d["over"])
        return (n,), (d["over"], n)
    if key == "action_l":
        return (n,), (d["left"], n)
    if key == "action_r":
        return (n,), (n, d["right"])
    if key == "coaction_r":
        c = {"comodule_r": d.get("over"), "equivariant_bicomodule": d.get("right"),
             "yd_module": d.get("coalg")}[kind]
        return (n, c), (n,)
    if key == "coaction_l":
        c = {"comodule_l": d.get("over"), "equivariant_bicomodule": d.get("left")}[kind]
        return (c, n), (n,)
    if key == "inclusion":
        return (d["over"],), (n,)
    if key == "xi_HC":
        r, c = d["xi"]
        return (r,), (c,)
    raise KeyError(key)


def _flat(idx, dims):
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out


def _unflat(k, dims):
    out = []
    for d in reversed(dims):
        k, r = divmod(k, d)
        out.append(r)
    return tuple(reversed(out))


class _Builder:
    def __init__(self, header, blocks):
        self.header = header
        self.blocks = blocks
        self.doc = None

    def sem(self, msg, path, tok):
        return HSCSemanticError(msg, path, tok.line, tok.col)

    def run(self) -> Document:
        hdr = {}
        for key, val in self.header:
            if key.value in hdr:
                raise self.sem("duplicate header key", key.value, key)
            hdr[key.value] = (key, val)
        if "format" not in hdr:
            raise HSCSyntaxError("missing 'format: HSC v1' header", 1, 1)
        ftok, fval = hdr["format"]
        if fval.kind != "atom" or fval.value.value != FORMAT:
            raise self.sem(f"unsupported format (expected {FORMAT!r})", "format", fval.tok)
        if "field" not in hdr:
            raise HSCSyntaxError("missing 'field:' header", ftok.line, ftok.col)
        _, fv = hdr["field"]
        extra = set(hdr) - {"format", "field"}
        if extra:
            k = sorted(extra)[0]
            raise self.sem("unknown header key", k, hdr[k][0])
        if fv.kind != "atom":
            raise self.sem("field must be Q or F<p>", "field", fv.tok)
        text = fv.value.value
        if not re.fullmatch(r"Q|F[0-9]{1,10}", text):
            raise self.sem(f"field must be Q or F<p>, got {text!r}", "field", fv.tok)
        try:
            field = Field.parse(text)
        except NonPrimeField as exc:
            raise HSCNonPrimeField(str(exc), "field", fv.tok.line, fv.tok.col) from None
        self.doc = Document(field)
        for name_tok, entries in self.blocks:
            name = name_tok.value
            if name in self.doc:
                raise self.sem("duplicate block name", name, name_tok)
            obj, kind = self.block(name, name_tok, entries)
            self.doc.objects[name] = obj
            self.doc.kinds[name] = kind
        return self.doc

    def scalar(self, atom: Value, path):
        t = atom.value
        text = t.value
        if not re.fullmatch(r"-?[0-9]{1,60}(/[0-9]{1,60})?", text):
            raise self.sem(f"bad scalar {text!r}", path, t)
        try:
            return self.doc.field(Fraction(text))
        except (ZeroDivisionError, ValueError) as exc:
            raise self.sem(f"bad scalar {text!r}: {exc}", path, t) from None

    def integer(self, val: Value, path, limit=None):
        if val.kind != "atom" or not re.fullmatch(r"[0-9]{1,9}", val.value.value):
            raise self.sem("expected a non-negative integer", path, val.tok)
        v = int(val.value.value)
        if limit is not None and v >= limit:
            raise self.sem(f"index {v} out of range (< {limit})", path, val.tok)
        return v

    def block(self, name, name_tok, entries):
        keys = {}
        for key, val in entries:
            k = key.value
            path = f"{name}.{k}"
            if k not in KEY_ORDER:
                raise self.sem("unknown key", path, key)
            if k in keys:
                raise self.sem("duplicate key", path, key)
            keys[k] = (key, val)
        if "kind" not in keys:
            raise self.sem("missing 'kind'", name, name_tok)
        kval = keys["kind"][1]
        kind = kval.value.value if kval.kind == "atom" else None
        if kind not in SCHEMA:
            raise self.sem(f"unknown kind (expected one of {', '.join(KINDS)})", f"{name}.kind", kval.tok)
        required, optional, refkinds = SCHEMA[kind]
        for k in required:
            if k not in keys:
                raise self.sem(f"missing key '{k}' for kind {kind}", f"{name}.{k}", name_tok)
        for k, (ktok, _) in keys.items():
            if k != "kind" and k not in required and k not in optional:
                raise self.sem(f"key not allowed for kind {kind}", f"{name}.{k}", ktok)
        if kind == "equivariant_bicomodule" and "action" in keys and "over" not in keys:
            raise self.sem("an action needs 'over'", f"{name}.action", keys["action"][0])

        refs = {}
        dims = {}
        for k in REF_KEYS:
            if k not in keys:
                continue
            ktok, val = keys[k]
            path = f"{name}.{k}"
            if val.kind != "atom":
                raise self.sem("expected a block name", path, val.tok)
            ref = val.value.value
            if ref not in self.doc:
                raise self.sem(f"unknown reference {ref!r}", path, val.tok)
            if self.doc.kinds[ref] not in refkinds[k]:
                raise self.sem(f"{ref!r} has kind {self.doc.kinds[ref]}, expected one of "
                               f"{', '.join(refkinds[k])}", path, val.tok)
            refs[k] = self.doc[ref]
            dims[k] = refs[k].dim

        if "dim" in keys:
            dims["dim"] = self.integer(keys["dim"][1], f"{name}.dim", MAX_DIM + 1)
        labels = None
        if "basis" in keys:
            ktok, val = keys["basis"]
            if val.kind != "list" or any(v.kind != "atom" for v in val.value):
                raise self.sem("basis must be a list of labels", f"{name}.basis", val.tok)
            labels = [v.value.value for v in val.value]
            if len(labels) != dims["dim"]:
                raise self.sem(f"{len(labels)} labels for dimension {dims['dim']}", f"{name}.basis", val.tok)

        if kind == "equivariant_bicomodule":
            H = refs.get("over")
            for side in ("left", "right"):
                C = refs[side]
                if H is not None and getattr(C, "H", None) is not H and "action" in keys:
                    raise self.sem("coalgebra is not a module coalgebra over 'over'",
                                   f"{name}.{side}", keys[side][1].tok)
        if kind == "xi_block":
            M = refs["over"]
            if not hasattr(M, "H") or not isinstance(M.C, ModuleCoalgebra):
                raise self.sem("xi_block needs a bicomodule with 'over' and a module-coalgebra 'left'",
                               f"{name}.over", keys["over"][1].tok)
            try:
                dims["xi"] = _xi_dims(M)
            except (HopfSCError, ValueError) as exc:
                raise self.sem(f"cannot form the cotensor bases for xi: {exc}",
                               f"{name}.over", keys["over"][1].tok) from None

        maps = {}
        for k in MAP_KEYS:
            if k in keys:
                maps[k] = self.map(name, kind, k, keys[k][1], dims)
        try:
            return self.construct(kind, refs, dims.get("dim"), labels, maps), kind
        except HSCError:
            raise
        except (HopfSCError, ValueError) as exc:
            raise self.sem(str(exc), name, name_tok) from None

    def map(self, name, kind, key, val: Value, dims) -> LinearMap:
        path = f"{name}.{key}"
        out_legs, in_legs = _legs(kind, key, dims)
        arity = len(out_legs) + len(in_legs) + 1
        if val.kind != "list":
            raise self.sem("expected a list of tuples", path, val.tok)
        rows = _prod(out_legs)
        cols = _prod(in_legs)
        entries = []
        for i, item in enumerate(val.value):
            ipath = f"{path}[{i}]"
            if item.kind != "tuple":
                raise self.sem("expected a tuple", ipath, item.tok)
            if len(item.value) != arity:
                raise self.sem(f"expected {arity} components, got {len(item.value)}", ipath, item.tok)
            idx = [self.integer(v, ipath, d) for v, d in zip(item.value, out_legs + in_legs)]
            c = self.scalar(item.value[-1], ipath)
            r = _flat(idx[:len(out_legs)], out_legs)
            s = _flat(idx[len(out_legs):], in_legs)
            entries.append((r, s, c))
        return LinearMap.from_entries(self.doc.field, rows, cols, entries)

    def construct(self, kind, refs, n, labels, maps):
        F = self.doc.field
        g = maps.get
        if kind == "coalgebra":
            return Coalgebra(F, n, g("comul"), g("counit"), labels)
        if kind == "algebra":
            return Algebra(F, n, g("mul"), g("unit"), labels)
        if kind == "bialgebra":
            return Bialgebra(F, n, g("comul"), g("counit"), g("mul"), g("unit"), labels)
        if kind == "hopf":
            return HopfAlgebra(F, n, g("comul"), g("counit"), g("mul"), g("unit"), g("antipode"), labels)
        if kind == "comodule_r":
            return RightComodule(refs["over"], n, g("coaction_r"), labels)
        if kind == "comodule_l":
            return LeftComodule(refs["over"], n, g("coaction_l"), labels)
        if kind == "module_l":
            return LeftModule(refs["over"], n, g("action"), labels)
        if kind == "module_coalgebra":
            return ModuleCoalgebra(refs["over"], Coalgebra(F, n, g("comul"), g("counit"), labels), g("action"))
        if kind == "bimodule_coalgebra":
            coalg = Coalgebra(F, n, g("comul"), g("counit"), labels)
            return BimoduleCoalgebra(refs["left"], refs["right"], coalg, g("action_l"), g("action_r"))
        if kind == "equivariant_bicomodule":
            C, D = refs["left"], refs["right"]
            if "action" in maps:
                return EquivariantBicomodule(refs["over"], C, D, n, g("coaction_l"), g("coaction_r"),
                                             g("action"), labels)
            M = Bicomodule(C, D, n, g("coaction_l"), g("coaction_r"), labels)
            if "over" in refs:
                M.H = refs["over"]
            return M
        if kind == "yd_module":
            return YDModule(refs["over"], refs["coalg"], n, g("action"), g("coaction_r"), labels)
        if kind == "subcoalgebra":
            return Subcoalgebra(refs["over"], g("inclusion"))
        if kind == "xi_block":
            return XiBlock(refs["over"], g("xi_HC"))
        raise AssertionError(kind)


def _prod(dims):
    out = 1
    for d in dims:
        out *= d
    return out


def parse(text: str) -> Document:
    """Parse an HSC v1 document.  Raises HSCSyntaxError or HSCSemanticError
    (both carry line and column)."""
    if not isinstance(text, str):
        raise HSCSyntaxError("document must be text", 1, 1)
    header, blocks = _Parser(text).document()
    return _Builder(header, blocks).run()


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# serializer


_BARE = re.compile(r'[^\s\[\](),:"#\\]+')


def _label(s: str) -> str:
    if _BARE.fullmatch(s):
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _scalar(v) -> str:
    if isinstance(v, Fraction):
        return f'"{v.numerator}/{v.denominator}"'
    return str(v)


def _fields(obj, kind, names) -> dict:
    """Key -> (value text or map, legs) for a structure."""
    out = {"kind": kind}
    for role, dep in _references(obj).items():
        if dep is not None:
            out[role] = names(dep)
    if kind != "xi_block":
        out["dim"] = str(obj.dim)
    if kind not in ("xi_block", "subcoalgebra"):
        out["basis"] = obj.labels
    if kind in COALGEBRA_KINDS:
        out["comul"] = obj.comul
        out["counit"] = obj.counit
    if kind in ALGEBRA_KINDS:
        out["mul"] = obj.mul
        out["unit"] = obj.unit
    if kind == "hopf":
        out["antipode"] = obj.antipode
    if kind in ("module_l", "module_coalgebra", "yd_module"):
        out["action"] = obj.action
    if kind == "equivariant_bicomodule":
        if isinstance(obj, EquivariantBicomodule):
            out["action"] = obj.action
        out["coaction_l"] = obj.left
        out["coaction_r"] = obj.right
    if kind == "bimodule_coalgebra":
        out["action_l"] = obj.action_l
        out["action_r"] = obj.action_r
    if kind in ("comodule_r", "yd_module"):
        out["coaction_r"] = obj.coaction
    if kind == "comodule_l":
        out["coaction_l"] = obj.coaction
    if kind == "subcoalgebra":
        out["inclusion"] = obj.inclusion
    if kind == "xi_block":
        out["xi_HC"] = obj.block
    return out


def _dims_for(obj, kind, refs):
    d = {k: v.dim for k, v in refs.items() if v is not None}
    if kind == "xi_block":
        d["xi"] = (obj.block.rows, obj.block.cols)
    else:
        d["dim"] = obj.dim
    return d


def _write_map(lines, key, f: LinearMap, out_legs, in_legs):
    rows = []
    for r, c, v in f.entries:
        rows.append(_unflat(r, out_legs) + _unflat(c, in_legs) + (v,))
    rows.sort(key=lambda t: t[:-1])
    if not rows:
        lines.append(f"{key}: []")
        return
    lines.append(f"{key}: [")
    for t in rows:
        lines.append("  (" + ", ".join([str(i) for i in t[:-1]] + [_scalar(t[-1])]) + "),")
    lines.append("]")


def serialize(obj, name: str = "main") -> str:
    """Canonical text for a Document, or for a single structure (its
    dependencies are included as extra blocks)."""
    if isinstance(obj, Document):
        doc = obj
    else:
        doc = Document(obj.field)
        doc.add(name, obj)
    lines = [f"format: {FORMAT}", f"field: {doc.field}"]
    for bname, o in doc:
        kind = doc.kinds[bname]
        refs = _references(o)

        def names(dep):
            n = doc.name_of(dep)
            if n is None:
                raise HSCSemanticError("referenced structure is not in the document", bname)
            return n

        fields = _fields(o, kind, names)
        dims = _dims_for(o, kind, refs)
        lines.append("")
        lines.append(f"[{bname}]")
        for key in KEY_ORDER:
            if key not in fields:
                continue
            val = fields[key]
            if key == "basis":
                lines.append("basis: [" + ", ".join(_label(s) for s in val) + "]")
            elif isinstance(val, LinearMap):
                out_legs, in_legs = _legs(kind, key, dims)
                _write_map(lines, key, val, out_legs, in_legs)
            else:
                lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def dump(obj, path, name="main"):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(obj, name))


def canonicalize(text: str) -> str:
    return serialize(parse(text))


def xi_block_of(M: EquivariantBicomodule) -> XiBlock:
    """The (H, C) component of xi for M, ready to serialize."""
    H, C = M.H, M.C
    fam = XiFamily.from_action(M)
    return XiBlock(M, fam.component(regular_right(H), regular_right(C)))


# ---------------------------------------------------------------------------
# golden documents


def _bicomodule_document(name, M, field):
    doc = Document(field)
    doc.add("H", M.H)
    doc.add("C", M.C)
    if M.D is not M.C:
        doc.add("D", M.D)
    doc.add(name, M)
    doc.add(f"{name}_xi", xi_block_of(M))
    return doc


def _m2_strict(field):
    """M2, its regular module coalgebra, D = span{x}, the trivial line via 1
    and the line v -> v (x) x: the finite strictness probe."""
    from .zoo import idempotent_monoid_bialgebra
    from .structures import regular_module_coalgebra, trivial_comodule
    H = idempotent_monoid_bialgebra(field)
    C = regular_module_coalgebra(H)
    x = LinearMap(field, 2, 1, [{1: 1}])
    one = LinearMap(field, 2, 1, [{0: 1}])
    doc = Document(field)
    doc.add("H", H)
    doc.add("C", C)
    doc.add("D", Subcoalgebra(C, x))
    doc.add("M", trivial_comodule(C, 1, one))
    doc.add("X", trivial_comodule(H, 1, x))
    return doc


def _kc2_yd(field, broken=False):
    """Yetter-Drinfeld modules over kC2 sharing one H and one coefficient
    coalgebra; ``broken`` gives the graded module with g swapping degrees."""
    from .ydmod import graded_yd_kc2, yd_zoo
    doc = Document(field)
    objs = yd_zoo(field)
    H, C = objs["kc2_adjoint"].H, objs["kc2_adjoint"].C
    doc.add("H", H)
    doc.add("C", C)
    picks = {"kc2_swap": graded_yd_kc2(field, swap=True)} if broken else \
        {n: objs[n] for n in ("kc2_trivial", "kc2_trivial_g", "kc2_adjoint", "kc2_graded")}
    for n, Y in picks.items():
        doc.add(n, YDModule(H, C, Y.dim, Y.action, Y.coaction, Y.labels))
    return doc


def _kc2_morita(field):
    from .zoo import kc2, kc2_twist, twisted_regular
    from .structures import regular_module_coalgebra
    H = kc2(field)
    C = regular_module_coalgebra(H)
    doc = Document(field)
    doc.add("H", H)
    doc.add("C", C)
    doc.add("regular", EquivariantBicomodule(H, C, C, C.dim, C.comul, C.comul, C.action, C.labels))
    T = twisted_regular(H, kc2_twist(field))
    doc.add("twisted", EquivariantBicomodule(H, C, C, T.dim, T.left, T.right, T.action, T.labels))
    return doc


EXTRA_DOCUMENTS = {
    "m2_strict": _m2_strict,
    "kc2_yd": _kc2_yd,
    "kc2_yd_broken": lambda F: _kc2_yd(F, broken=True),
    "kc2_morita": _kc2_morita,
}


def zoo_document_names() -> list[str]:
    from .zoo import zoo_catalog
    return [e.name for e in zoo_catalog()] + list(EXTRA_DOCUMENTS)


def zoo_document(name: str, field: Field | None = None) -> Document:
    """Golden document for a catalog entry or one of the extra demos."""
    from .zoo import catalog_entry
    field = field or Field()
    if name in EXTRA_DOCUMENTS:
        return EXTRA_DOCUMENTS[name](field)
    obj = catalog_entry(name).make(field)
    if isinstance(obj, EquivariantBicomodule):
        return _bicomodule_document(name, obj, field)
    doc = Document(field)
    doc.add(name, obj)
    return doc
