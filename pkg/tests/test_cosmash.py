import pytest

from hopfsc.cosmash import (
    ModuleComodule, check_module_comodule, cosmash, cosmash_roundtrip, dual_action,
    dual_bialgebra, dual_coaction, from_cosmash_comodule, is_cosmash_colinear,
    is_module_comodule_map, module_comodule_zoo, to_cosmash_comodule,
)
from hopfsc.exactla import QQ, LinearMap, tensor
from hopfsc.structures import (
    check_hopf, check_module_coalgebra, check_right_comodule, eye, regular_module_coalgebra,
)
from hopfsc.zoo import kc2, kc3, sweedler_h4

from helpers import hom_space, perturb


def test_dual_bialgebra(field):
    for H in (kc2(field), kc3(field)):
        D = dual_bialgebra(H)
        assert check_hopf(D).ok
        assert dual_bialgebra(D).mul == H.mul


def test_dual_of_h4_is_hopf(odd_field):
    assert check_hopf(dual_bialgebra(sweedler_h4(odd_field))).ok


def test_dual_coaction_inverts(field):
    H = kc2(field)
    assert dual_action(H, 2, dual_coaction(H, 2, H.mul)) == H.mul


def test_cosmash_kc2(field):
    H = kc2(field)
    HC = cosmash(H, regular_module_coalgebra(H))
    assert HC.dim == 4
    assert check_module_coalgebra(HC).ok


def test_cosmash_h4():
    H = sweedler_h4(QQ)
    HC = cosmash(H, regular_module_coalgebra(H))
    assert HC.dim == 16
    assert check_module_coalgebra(HC).ok


@pytest.mark.parametrize("name", ["kc2_ground", "kc2_regular", "kc2_free", "kc2_swap"])
def test_roundtrip(field, name):
    M = module_comodule_zoo(field)[name]
    R = cosmash_roundtrip(M)
    assert R.ok, R.text()


def test_corrupted_action_is_rejected():
    M = module_comodule_zoo(QQ)["kc2_regular"]
    bad = ModuleComodule(M.H, M.C, M.dim, perturb(M.action, 0, 1), M.coaction)
    assert not check_module_comodule(bad).ok
    assert not cosmash_roundtrip(bad).ok


def test_from_to_on_cosmash_side(field):
    M = module_comodule_zoo(field)["kc2_free"]
    N = to_cosmash_comodule(M)
    assert check_right_comodule(N).ok
    back = from_cosmash_comodule(N, M.H, M.C)
    assert back.action == M.action and back.coaction == M.coaction


def colinear_constraints(M, N, over_cosmash):
    F = M.field
    if over_cosmash:
        HC = cosmash(M.H, M.C)
        A, B = to_cosmash_comodule(M, HC), to_cosmash_comodule(N, HC)
        return lambda f: [B.coaction @ f - tensor(f, eye(F, HC.dim)) @ A.coaction]
    return lambda f: [
        f @ M.action - N.action @ tensor(eye(F, M.H.dim), f),
        N.coaction @ f - tensor(f, eye(F, M.C.dim)) @ M.coaction,
    ]


@pytest.mark.parametrize("src,dst", [("kc2_regular", "kc2_free"), ("kc2_free", "kc2_free"),
                                     ("kc2_swap", "kc2_regular"), ("kc2_free", "kc2_regular"), ("kc2_ground", "kc2_ground"),
                                     ("kc2_regular", "kc2_swap")])
def test_morphisms_agree(field, src, dst):
    zoo = module_comodule_zoo(field)
    M, N = zoo[src], zoo[dst]
    a = hom_space(field, M.dim, N.dim, colinear_constraints(M, N, False))
    b = hom_space(field, M.dim, N.dim, colinear_constraints(M, N, True))
    assert len(a) == len(b)
    for f in a:
        assert is_module_comodule_map(f, M, N) and is_cosmash_colinear(f, M, N)
    for f in b:
        assert is_module_comodule_map(f, M, N)


def test_non_morphism_detected_both_ways():
    zoo = module_comodule_zoo(QQ)
    M = zoo["kc2_regular"]
    f = LinearMap.from_entries(QQ, 2, 2, [(0, 0, 1)])
    assert not is_module_comodule_map(f, M, M)
    assert not is_cosmash_colinear(f, M, M)
