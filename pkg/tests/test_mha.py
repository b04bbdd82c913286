import random

import pytest

from mhopf import catalog
from mhopf.mha import (InsufficientCover, Integral, SuiteConfig, antipode, canonical_map, check_integral, counit,
                       delta_apply, delta_n_covered, mha_suite, slice)
from mhopf.algebra import embed, multipliers_agree, zero_multiplier
from mhopf.tensor import Functional, TensorVec, Vec, tensor_product

import oracles

e = Vec.basis
Z2, S3 = catalog.cyclic(2), catalog.symmetric(3)


@pytest.fixture(scope="module")
def cz2():
    return catalog.function_algebra(Z2)


@pytest.fixture(scope="module")
def kz2():
    return catalog.group_algebra(Z2)


@pytest.fixture(scope="module")
def cs3():
    return catalog.function_algebra(S3)


def pointwise(t, x):
    """Multiply a tensor of δ's leg-wise by the basis tuple ``x``."""
    return {k: c for k, c in t.items() if k == x}


def test_t1_function_algebra(cz2):
    assert canonical_map(cz2, "t1", tensor_product(e(0), e(1))) == TensorVec.basis((1, 1))


def test_t1_group_algebra(kz2):
    assert canonical_map(kz2, "t1", tensor_product(e(1), e(0))) == TensorVec.basis((1, 1))


@pytest.mark.parametrize("which", ["t1", "t2", "t_op1", "t_op2"])
def test_inverse_contracts(cs3, which):
    for a in cs3.labels():
        for b in cs3.labels():
            x = tensor_product(e(a), e(b))
            assert canonical_map(cs3, which + "_inv", canonical_map(cs3, which, x)) == x


def test_t_maps_match_group_oracle(cs3):
    for g in S3.elements:
        for h in S3.elements:
            assert dict(cs3.t("t1", g, h).items()) == oracles.cg_t1(S3, g, h)
            assert dict(cs3.t("t2", g, h).items()) == oracles.cg_t2(S3, g, h)


def test_delta_apply_z2(cz2):
    assert delta_apply(cz2, e(0), TensorVec.basis((1, 1))) == TensorVec.basis((1, 1))


def test_delta_apply_unital_collapse(cs3):
    one = cs3.algebra.unit
    for a in ("012", "201"):
        for y in ("102", "021"):
            assert delta_apply(cs3, e(a), tensor_product(one, e(y))) == cs3.t("t1", a, y)


def test_delta_apply_both_sides_vs_oracle(cs3):
    for g in S3.elements:
        full = oracles.cg_coproduct(S3, g)
        for x in (("012", "120"), ("201", "021"), ("102", "102")):
            want = pointwise(full, x)
            t = TensorVec.basis(x)
            assert dict(delta_apply(cs3, e(g), t, "left").items()) == want
            assert dict(delta_apply(cs3, e(g), t, "right").items()) == want


def test_counit_values(cz2, kz2):
    assert counit(cz2, e(0)) == 1 and counit(cz2, e(1)) == 0
    kS3 = catalog.group_algebra(S3)
    assert all(counit(kS3, e(h)) == 1 for h in S3.elements)
    assert counit(cz2, Vec.zero()) == 0


def test_antipode_values(cz2):
    assert antipode(cz2, e(1)) == e(1)
    kS3 = catalog.group_algebra(S3)
    for h in S3.elements:
        assert antipode(kS3, e(h)) == e(S3.inv(h))
    assert antipode(catalog.function_algebra(catalog.cyclic(3)), e(1)) == e(2)


def test_antipode_inverse_on_random_vectors(cs3):
    rng = random.Random(3)
    for _ in range(10):
        v = Vec({g: rng.randint(-3, 3) for g in rng.sample(S3.elements, 3)})
        assert antipode(cs3, antipode(cs3, v), -1) == v


def test_slice_by_counit_is_embedding(cs3):
    eps = Functional(lambda l: cs3.counit_label(l), "ε")
    for a in S3.elements:
        assert multipliers_agree(slice(cs3, eps, "right", e(a)), embed(cs3.algebra, e(a))) is None


def test_slice_by_coefficient(cz2):
    at_s = Functional(lambda l: 1 if l == 1 else 0, "δ^s")
    assert multipliers_agree(slice(cz2, at_s, "right", e(0)), embed(cz2.algebra, e(1))) is None


def test_slice_of_zero(cz2):
    om = Functional(lambda l: 1, "1")
    assert multipliers_agree(slice(cz2, om, "right", Vec.zero()), zero_multiplier(cz2.algebra)) is None


def test_covered_degree_one_is_t1(cs3):
    for a, b in (("012", "102"), ("120", "201")):
        assert delta_n_covered(cs3, e(a), [(1, "right", e(b))], 1) == cs3.t("t1", a, b)


def test_covered_triple_z2(cz2):
    out = delta_n_covered(cz2, e(0), [(0, "right", e(1)), (2, "right", e(1))], 2)
    assert out == TensorVec.basis((1, 0, 1))


def test_covered_triple_s3_vs_oracle(cs3):
    for g in S3.elements:
        for c0, c2 in (("102", "102"), ("120", "021")):
            out = delta_n_covered(cs3, e(g), [(0, "right", e(c0)), (2, "right", e(c2))], 2)
            want = {k: v for k, v in oracles.cg_coproduct(S3, g, 2).items() if k[0] == c0 and k[2] == c2}
            assert dict(out.items()) == want


def test_covered_frozen_value(cs3):
    out = delta_n_covered(cs3, e("012"), [(0, "right", e("102")), (2, "right", e("102"))], 2)
    assert out == TensorVec.basis(("102", "012", "102"))


def test_covered_nestings_agree(cs3):
    rng = random.Random(7)
    for _ in range(20):
        a = e(rng.choice(S3.elements))
        covers = [(i, rng.choice(["left", "right"]), e(rng.choice(S3.elements))) for i in range(3)]
        free = rng.randrange(4)
        covers = [c for c in covers + [(3, "left", e(rng.choice(S3.elements)))] if c[0] != free]
        assert delta_n_covered(cs3, a, covers, 3, "left") == delta_n_covered(cs3, a, covers, 3, "right")


def test_two_free_legs_rejected(cs3):
    with pytest.raises(InsufficientCover):
        delta_n_covered(cs3, e("012"), [(2, "right", e("012"))], 2)


def test_counit_as_degree_minus_one(cs3):
    assert delta_n_covered(cs3, e("012"), [], -1) == 1


def test_integrals(cz2, kz2):
    phi = Functional(lambda l: 1, "φ")
    assert check_integral(cz2, Integral("left", phi)).ok
    at_e = Functional(lambda l: 1 if l == 0 else 0, "ψ")
    assert check_integral(kz2, Integral("right", at_e)).ok
    bad = check_integral(kz2, Integral("right", Functional(lambda l: 1, "1")))
    assert bad.status == "fail" and bad.witness


@pytest.mark.parametrize("G", [Z2, S3, catalog.dihedral(4)], ids=lambda G: G.name)
def test_suite_passes_on_groups(G):
    for H in (catalog.function_algebra(G), catalog.group_algebra(G)):
        rep = mha_suite(H, SuiteConfig(sample=300 if G.order > 6 else None))
        assert rep.ok, rep.render()


def test_suite_on_lazy_integers():
    Z = catalog.integers()
    for H in (catalog.function_algebra(Z), catalog.group_algebra(Z)):
        rep = mha_suite(H, SuiteConfig(window=3))
        assert rep.ok, rep.render()
