import pytest

from hopfsc.cotensor import (
    apply_TM, cotensor, cotensor_bicomodule, cotensor_defect, cotensor_rank_is_maximal,
    counit_iso, takeuchi_roundtrip,
)
from hopfsc.exactla import GF, QQ, LinearMap, same_subspace, tensor
from hopfsc.structures import (
    Bicomodule, LeftComodule, check_bicomodule, direct_sum_comodule, eye, free_comodule,
    regular_left, regular_right, tensor_comodule, trivial_comodule,
)
from hopfsc.zoo import equivariant_zoo, kc2, sweedler_h4

from helpers import brute_kernel_size, perturb


def test_regular_cotensor_kc2_dimension_2():
    H = kc2(GF(2))
    S = cotensor(regular_right(H), regular_left(H))
    assert S.dim == 2
    # oracle: enumerate all 16 vectors of C (x) C
    assert brute_kernel_size(cotensor_defect(regular_right(H), regular_left(H))) == 2 ** 2
    assert same_subspace(S.inclusion, H.comul)


def test_cotensor_with_zero_is_zero(field):
    H = kc2(field)
    N = LeftComodule(H, 0, LinearMap.zero(field, 0, 0))
    assert cotensor(regular_right(H), N).dim == 0


def test_trivial_cotensor_h4_is_coinvariants():
    F = GF(3)
    H = sweedler_h4(F)
    S = cotensor(trivial_comodule(H), regular_left(H))
    assert S.dim == 1
    assert brute_kernel_size(cotensor_defect(trivial_comodule(H), regular_left(H))) == 3
    # spanned by 1 (x) 1 in k (x) H
    assert S.inclusion.column(0) == {0: 1}


def test_counit_iso_examples(field):
    H = kc2(field)
    assert counit_iso(H, regular_left(H)).shape == (2, 2)
    z = LeftComodule(H, 0, LinearMap.zero(field, 0, 0))
    assert counit_iso(H, z).shape == (0, 0)


def test_counit_iso_h4(odd_field):
    H = sweedler_h4(odd_field)
    assert counit_iso(H, regular_left(H)).shape == (4, 4)


def test_counit_iso_is_natural(field):
    H = kc2(field)
    # f = Delta: H -> H (x) H_0 as left comodules (coaction on the first leg)
    M, N = regular_left(H), LeftComodule(H, 4, tensor(H.comul, eye(field, 2)))
    f = H.comul
    SM, SN = cotensor(regular_right(H), M), cotensor(regular_right(H), N)
    idf = tensor(eye(field, 2), f)
    from hopfsc.exactla import restrict
    g = restrict(idf, SM.inclusion, SN.inclusion)
    assert g is not None
    assert counit_iso(H, N) @ g == f @ counit_iso(H, M)


def test_rank_is_maximal(field):
    H = kc2(field)
    assert cotensor_rank_is_maximal(cotensor(free_comodule(H, 2), regular_left(H)))


def test_apply_TM_examples(field):
    M = equivariant_zoo(field)["kc2_psi"]
    C = M.C
    assert apply_TM(M, regular_right(C)).dim == M.dim
    for k in (0, 1, 2, 3):
        assert apply_TM(M, free_comodule(C, k)).dim == k * M.dim
    # M = C: T_M(W) has the dimension of W
    R = equivariant_zoo(field)["kc2_regular"]
    for W in (regular_right(C), free_comodule(C, 2), free_comodule(C, 0)):
        assert apply_TM(R, W).dim == W.dim


def test_dimension_is_additive(field):
    M = equivariant_zoo(field)["kc2_psi"]
    C = M.C
    A, B = free_comodule(C, 2), regular_right(C)
    assert apply_TM(M, direct_sum_comodule(A, B)).dim == apply_TM(M, A).dim + apply_TM(M, B).dim


def test_trivial_X_commutes_with_cotensor(field):
    # (X (x) W) []_C M == X (x) (W []_C M) for X with trivial coaction
    M = equivariant_zoo(field)["kc2_psi"]
    H, C = M.H, M.C
    X = trivial_comodule(H, 2)
    W = regular_right(C)
    lhs = apply_TM(M, tensor_comodule(X, W, C)).inclusion
    rhs = tensor(eye(field, 2), apply_TM(M, W).inclusion)
    assert same_subspace(lhs, rhs)


@pytest.mark.parametrize("name", ["kc2_regular", "kc2_psi", "kc2_twisted", "kc2_hopf_module",
                                  "kc2_trivial_action"])
def test_takeuchi_roundtrip_zoo(field, name):
    assert takeuchi_roundtrip(equivariant_zoo(field)[name]).ok


def test_takeuchi_roundtrip_detects_corrupted_lambda():
    M = equivariant_zoo(QQ)["kc2_regular"]
    bad = Bicomodule(M.C, M.D, M.dim, perturb(M.left, 1, 0), M.right)
    R = takeuchi_roundtrip(bad)
    assert not R.ok
    assert R.first_failure().name.startswith("input")


def test_cotensor_of_bicomodules(field):
    M = equivariant_zoo(field)["kc2_psi"]
    R = equivariant_zoo(field)["kc2_regular"]
    P = cotensor_bicomodule(M, R)
    assert P.dim == M.dim
    assert check_bicomodule(P).ok
