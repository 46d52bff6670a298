import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfsc.errors import DimensionMismatch
from hopfsc.exactla import GF, QQ, LinearMap, contains, tensor
from hopfsc.structures import (
    direct_sum_comodule, eye, free_comodule, regular_module_coalgebra, regular_right,
    trivial_comodule, zero_comodule,
)
from hopfsc.subcat import (
    Subcoalgebra, as_parent_comodule, check_equivariance_inclusion, check_subcoalgebra,
    correspondence_probes, enumerate_subcoalgebras, enumerate_subspaces, find_isomorphism,
    is_h_stable, morita_witness_check, regular_equivariant, roundtrip_correspondence, tau,
)
from hopfsc.zoo import (
    equivariant_zoo, idempotent_monoid_bialgebra, kc2, kc2_twist, kc3, module_coalgebra_zoo,
    twisted_regular,
)

from helpers import vectors


def brute_subcoalgebras(C):
    """Subspaces V (as frozensets of vectors) with Delta(V) inside V (x) V,
    found by testing every vector over a small prime field."""
    F, n = C.field, C.dim
    out = []
    for V in enumerate_subspaces(F, n):
        members = set()
        for coeffs in vectors(F, V.cols):
            v = V @ LinearMap(F, V.cols, 1, [coeffs])
            members.add(tuple(sorted(v.column(0).items())))
        VV = tensor(V, V)
        ok = True
        for coeffs in vectors(F, V.cols):
            d = C.comul @ V @ LinearMap(F, V.cols, 1, [coeffs])
            if not contains(VV, d):
                ok = False
                break
        if ok:
            out.append(frozenset(members))
    return out


def grouplike(C, i):
    return LinearMap(C.field, C.dim, 1, [{i: 1}])


def test_subspace_count_F2():
    # Gaussian binomials: 1 + 3 + 1 subspaces of F_2^2, 1 + 7 + 7 + 1 of F_2^3
    assert len(list(enumerate_subspaces(GF(2), 2))) == 5
    assert len(list(enumerate_subspaces(GF(2), 3))) == 16
    assert len(list(enumerate_subspaces(GF(3), 2))) == 6


@pytest.mark.parametrize("p", [2, 3])
def test_kc2_subcoalgebras_match_brute_force(p):
    H = kc2(GF(p))
    found = list(enumerate_subcoalgebras(H))
    assert len(found) == len(brute_subcoalgebras(H)) == 4
    assert sorted(D.dim for D in found) == [0, 1, 1, 2]


def test_kc3_subcoalgebras():
    assert len(list(enumerate_subcoalgebras(kc3(GF(2))))) == 8


@pytest.mark.parametrize("p", [2, 3])
def test_correspondence_for_every_subcoalgebra(p):
    H = kc2(GF(p))
    C = regular_module_coalgebra(H)
    for V in enumerate_subspaces(GF(p), 2):
        D = Subcoalgebra(C, V)
        if check_subcoalgebra(D).ok:
            assert roundtrip_correspondence(H, C, D).ok


def test_stable_subcoalgebras_of_kc2():
    # only 0 and kC2 are stable under left multiplication
    H = kc2(GF(2))
    C = regular_module_coalgebra(H)
    stable = [D.dim for D in enumerate_subcoalgebras(C) if is_h_stable(D)]
    assert sorted(stable) == [0, 2]


def test_non_subcoalgebra_is_rejected():
    C = kc2(QQ)
    D = Subcoalgebra(C, LinearMap(QQ, 2, 1, [{0: 1, 1: 1}]))
    R = check_subcoalgebra(D)
    assert not R.ok
    assert R.first_failure().name == "Delta(D) inside D⊗D"


def test_tau_examples(field):
    H = kc2(field)
    C = regular_module_coalgebra(H)
    full = Subcoalgebra(C, eye(field, 2))
    zero = Subcoalgebra(C, LinearMap.zero(field, 2, 0))
    M = free_comodule(C, 2)
    assert tau(full, M).dim == 4
    assert tau(zero, M).dim == 0
    line = Subcoalgebra(C, grouplike(C, 1))
    assert tau(line, M).dim == 2
    assert tau(line, trivial_comodule(C, 1, grouplike(C, 0))).dim == 0
    assert tau(line, zero_comodule(C)).dim == 0


def test_tau_m2_line_via_one_is_zero(field):
    H = idempotent_monoid_bialgebra(field)
    C = regular_module_coalgebra(H)
    D = Subcoalgebra(C, grouplike(C, 1))
    T = tau(D, trivial_comodule(C, 1, grouplike(C, 0)))
    assert T.dim == 0
    assert T.history == [0]


def tau_instances(field):
    out = []
    for name, C in module_coalgebra_zoo(field).items():
        if field.p is None or C.dim > 4:
            continue
        for D in enumerate_subcoalgebras(C):
            for M in (regular_right(C), free_comodule(C, 2)):
                out.append((name, D, M))
    return out


@pytest.mark.parametrize("p", [2, 3])
def test_tau_idempotent_and_one_step(p):
    count = 0
    for name, D, M in tau_instances(GF(p)):
        T = tau(D, M)
        assert T.steps == 0, name
        again = tau(D, as_parent_comodule(T, D))
        assert again.dim == T.dim
        count += 1
    assert count > 10


def test_tau_monotone_in_D():
    F = GF(2)
    C = regular_module_coalgebra(kc3(F))
    subs = list(enumerate_subcoalgebras(C))
    M = free_comodule(C, 2)
    taus = {id(D): tau(D, M).inclusion for D in subs}
    for D1 in subs:
        for D2 in subs:
            if contains(D2.inclusion, D1.inclusion):
                assert contains(taus[id(D2)], taus[id(D1)])


def test_tau_monotone_in_M():
    F = GF(3)
    C = regular_module_coalgebra(kc2(F))
    D = Subcoalgebra(C, grouplike(C, 1))
    small, big = regular_right(C), direct_sum_comodule(regular_right(C), free_comodule(C, 1))
    # small sits in big as the first summand
    inc = LinearMap(F, 4, 2, [{0: 1}, {1: 1}])
    assert contains(tau(D, big).inclusion, inc @ tau(D, small).inclusion)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=3), st.integers(0, 1))
def test_tau_of_sums_of_lines(degrees, keep):
    # M = sum of lines k_{g_i}; tau_{k g_keep}(M) keeps exactly the lines of degree keep
    F = GF(3)
    C = regular_module_coalgebra(kc2(F))
    M = direct_sum_comodule(*[trivial_comodule(C, 1, grouplike(C, d)) for d in degrees])
    D = Subcoalgebra(C, grouplike(C, keep))
    assert tau(D, M).dim == degrees.count(keep)


def test_m2_strictness_probe(field):
    H = idempotent_monoid_bialgebra(field)
    C = regular_module_coalgebra(H)
    D = Subcoalgebra(C, grouplike(C, 1))
    assert is_h_stable(D)
    M = trivial_comodule(C, 1, grouplike(C, 0))
    X = trivial_comodule(H, 1, grouplike(H, 1))
    rep = check_equivariance_inclusion(H, C, D, X, M)
    assert rep.included and rep.strict
    assert rep.dims == (0, 1)


def test_no_strictness_for_kc2(field):
    H = kc2(field)
    C = regular_module_coalgebra(H)
    xs, ms = correspondence_probes(H, C)
    for D in (Subcoalgebra(C, eye(field, 2)), Subcoalgebra(C, LinearMap.zero(field, 2, 0))):
        for _, X in xs:
            for _, M in ms:
                rep = check_equivariance_inclusion(H, C, D, X, M)
                assert rep.included and not rep.strict


@pytest.mark.parametrize("name", list(module_coalgebra_zoo(GF(3))))
def test_morita_regular_verified(name):
    C = module_coalgebra_zoo(GF(3))[name]
    P = regular_equivariant(C)
    res = morita_witness_check(C.H, C, C, P, P, seed=1)
    assert res.verified


def test_morita_twisted():
    H = kc2(QQ)
    C = regular_module_coalgebra(H)
    T = twisted_regular(H, kc2_twist(QQ))
    assert morita_witness_check(H, C, C, T, T).verified
    R = regular_equivariant(C)
    assert morita_witness_check(H, C, C, R, T).status == "not_isomorphic"


def test_morita_seed_is_reproducible():
    C = module_coalgebra_zoo(QQ)["kc2_cosmash"]
    P = regular_equivariant(C)
    a = morita_witness_check(C.H, C, C, P, P, seed=7).to_dict()
    b = morita_witness_check(C.H, C, C, P, P, seed=7).to_dict()
    assert a == b


def test_morita_wrong_dimension():
    H = kc2(QQ)
    C = regular_module_coalgebra(H)
    P = regular_equivariant(C)
    M = equivariant_zoo(QQ)["kc2_hopf_module"]    # a C-k-bicomodule
    with pytest.raises(DimensionMismatch):
        morita_witness_check(H, C, C, M, P)


def test_find_isomorphism_dimension_mismatch():
    H = kc2(QQ)
    P = regular_equivariant(regular_module_coalgebra(H))
    Q = equivariant_zoo(QQ)["kc2_psi"]
    status, f, _, _ = find_isomorphism(P, Q, random.Random(0))
    assert status == "not_isomorphic" and f is None
