import os
import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfsc import io as hsc
from hopfsc.errors import HopfSCError, NonPrimeField
from hopfsc.exactla import GF, QQ, LinearMap
from hopfsc.structures import Coalgebra, check_coalgebra
from hopfsc.zoo import sweedler_h4

from conftest import ZOO_DIR
from helpers import mutate

GOLDEN = sorted(f for f in os.listdir(ZOO_DIR) if f.endswith(".hsc"))


def read(name):
    with open(os.path.join(ZOO_DIR, name), encoding="utf-8") as fh:
        return fh.read()


def test_golden_set_is_complete():
    assert sorted(n + ".hsc" for n in hsc.zoo_document_names()) == GOLDEN


@pytest.mark.parametrize("fname", GOLDEN)
def test_golden_roundtrip_is_byte_identical(fname):
    text = read(fname)
    assert hsc.serialize(hsc.parse(text)) == text
    assert hsc.canonicalize(text) == text


@pytest.mark.parametrize("fname", GOLDEN)
def test_golden_matches_builder(fname):
    assert hsc.serialize(hsc.zoo_document(fname[:-4], QQ)) == read(fname)


@pytest.mark.parametrize("p", [3, 5])
def test_roundtrip_over_prime_fields(p):
    doc = hsc.zoo_document("h4", GF(p))
    text = hsc.serialize(doc)
    assert text.startswith(f"format: HSC v1\nfield: F{p}\n")
    assert hsc.serialize(hsc.parse(text)) == text


def test_parsed_structures_equal_originals():
    doc = hsc.parse(read("h4.hsc"))
    H = doc["h4"]
    ref = sweedler_h4(QQ)
    assert H.mul == ref.mul and H.comul == ref.comul and H.antipode == ref.antipode


def test_whitespace_and_comments_are_ignored():
    text = read("kc2.hsc")
    loose = text.replace("\n", "\n\n").replace(", ", " ,  ").replace("[kc2]", "# a comment\n[kc2]")
    assert hsc.canonicalize(loose) == text


def test_rational_scalars():
    F = QQ
    comul = LinearMap.from_entries(F, 1, 1, [(0, 0, 1)])
    C = Coalgebra(F, 1, comul, LinearMap.from_entries(F, 1, 1, [(0, 0, 1)]))
    text = hsc.serialize(C, "k")
    assert hsc.serialize(hsc.parse(text)) == text
    frac = text.replace("counit: [\n  (0, 1),", 'counit: [\n  (0, "2/2"),')
    assert hsc.canonicalize(frac) == text


def test_dim_zero_coalgebra():
    F = QQ
    C = Coalgebra(F, 0, LinearMap.zero(F, 0, 0), LinearMap.zero(F, 1, 0))
    text = hsc.serialize(C, "zero")
    assert "comul: []" in text
    back = hsc.parse(text)["zero"]
    assert back.dim == 0
    assert check_coalgebra(back).ok


def test_non_prime_field():
    with pytest.raises(hsc.HSCNonPrimeField) as exc:
        hsc.parse("format: HSC v1\nfield: F4\n")
    assert exc.value.line == 2
    assert isinstance(exc.value, NonPrimeField)


def test_syntax_error_position():
    text = read("kc2.hsc").replace("dim: 2", "dim: (2")
    with pytest.raises(hsc.HSCSyntaxError) as exc:
        hsc.parse(text)
    assert exc.value.line == 6


def test_semantic_error_names_path():
    text = read("kc2.hsc").replace("(1, 1, 0, 1),", "(1, 1, 5, 1),")
    with pytest.raises(hsc.HSCSemanticError) as exc:
        hsc.parse(text)
    assert exc.value.path.startswith("kc2")
    assert exc.value.line is not None


def test_missing_header():
    with pytest.raises(hsc.HSCError):
        hsc.parse("[kc2]\nkind: hopf\n")


def test_unknown_reference():
    text = read("kc2_regular.hsc").replace("over: H", "over: nowhere", 1)
    with pytest.raises(hsc.HSCSemanticError):
        hsc.parse(text)


def test_xi_block_roundtrip():
    from hopfsc.equivariant import XiFamily, check_lax_axioms
    from hopfsc.structures import regular_right
    doc = hsc.parse(read("kc2_psi.hsc"))
    X, M = doc["kc2_psi_xi"], doc["kc2_psi"]
    xi = XiFamily.from_action(M)
    assert X.block == xi.component(regular_right(M.H), regular_right(M.C))
    assert check_lax_axioms(X.family()).ok


def test_fuzz_small():
    rng = random.Random(11)
    texts = [read(f) for f in GOLDEN]
    for _ in range(500):
        t = mutate(rng, rng.choice(texts))
        try:
            hsc.parse(t)
        except HopfSCError:
            pass


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=200))
def test_arbitrary_text_never_crashes(text):
    try:
        hsc.parse("format: HSC v1\nfield: Q\n" + text)
    except HopfSCError:
        pass
