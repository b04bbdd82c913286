import random

import pytest

from mhopf import catalog
from mhopf.algebra import embed, multipliers_agree, unit_multiplier
from mhopf.double import (DoubleHandle, VerificationFailed, build_double, d_canonical_map, d_mul, d_star,
                          lift_multiplier, opposite_double_iso, twist)
from mhopf.pairing import NotPairingVerified
from mhopf.tensor import TensorVec, Vec, tensor_product

import oracles

e = Vec.basis
S3 = catalog.symmetric(3)


def test_needs_verified_pairing():
    with pytest.raises(NotPairingVerified):
        DoubleHandle(catalog.finite_group_pair(catalog.cyclic(2), verify=False))


def test_twist_on_groups_vs_oracle(d_s3):
    for h in S3.elements:
        for g in S3.elements:
            got = twist(d_s3, TensorVec.basis((h, g)))
            assert dict(got.items()) == oracles.twist(S3, h, g)


def test_twist_frozen_values(d_s3):
    assert twist(d_s3, TensorVec.basis(("102", "120"))) == TensorVec.basis(("201", "102"))
    assert twist(d_s3, TensorVec.basis(("021", "102"))) == TensorVec.basis(("210", "021"))


def test_twist_abelian(d_z2):
    assert twist(d_z2, TensorVec.basis((1, 1))) == TensorVec.basis((1, 1))


@pytest.mark.parametrize("strategy", ["fast", "composite"])
def test_twist_inverse_contract(d_z2, d_s3, strategy):
    rng = random.Random(2)
    for D, G in ((d_z2, catalog.cyclic(2)), (d_s3, S3)):
        for _ in range(10):
            x = TensorVec({(rng.choice(G.elements), rng.choice(G.elements)): rng.randint(1, 3) for _ in range(2)}, 2)
            assert twist(D, twist(D, x, "forward", strategy), "inverse", strategy) == x


def test_fast_and_composite_agree(d_s3):
    for h in S3.elements:
        for g in S3.elements:
            x = TensorVec.basis((h, g))
            assert twist(d_s3, x, strategy="fast") == twist(d_s3, x, strategy="composite")


def test_product_vs_oracle(d_s3):
    for x in d_s3.labels():
        for y in d_s3.labels():
            assert dict(d_mul(d_s3, e(x), e(y)).items()) == oracles.double_mul(S3, x, y)


def test_product_frozen_values(d_s3):
    assert d_mul(d_s3, e(("021", "102")), e(("210", "021"))) == e(("021", "120"))
    assert d_mul(d_s3, e(("012", "102")), e(("210", "021"))).is_zero()


def test_identity_group_element_twists_trivially(d_s3):
    for g in S3.elements:
        for h in S3.elements:
            want = e((g, "012")) if g == h else Vec.zero()
            assert d_mul(d_s3, e((g, "012")), e((h, "012"))) == want


def test_associativity_random_triples(d_s3):
    rng = random.Random(5)
    ls = d_s3.labels()
    for _ in range(50):
        x, y, z = (e(rng.choice(ls)) for _ in range(3))
        assert d_mul(d_s3, d_mul(d_s3, x, y), z) == d_mul(d_s3, x, d_mul(d_s3, y, z))


def test_star_involution_and_values(d_z2, d_s3):
    for D in (d_z2, d_s3):
        for x in D.labels():
            assert d_star(D, d_star(D, e(x))) == e(x)
    for g in S3.elements:
        assert d_star(d_s3, e((g, "012"))) == e((g, "012"))


def test_star_antimultiplicative(d_s3):
    rng = random.Random(11)
    ls = d_s3.labels()
    for _ in range(30):
        x, y = e(rng.choice(ls)), e(rng.choice(ls))
        assert d_star(d_s3, d_mul(d_s3, x, y)) == d_mul(d_s3, d_star(d_s3, y), d_star(d_s3, x))


def test_lifts_compose_to_embedding(d_z2):
    A, B = d_z2.A.algebra, d_z2.B.algebra
    for a in A.labels():
        for b in B.labels():
            ia = lift_multiplier(d_z2, "iA", embed(A, e(a)))
            ib = lift_multiplier(d_z2, "iB", embed(B, e(b)))
            for x in d_z2.labels():
                assert ia.rho1(ib.rho1(e(x))) == d_mul(d_z2, e((a, b)), e(x))


def test_lift_of_unit_is_unit(d_s3):
    one = lift_multiplier(d_s3, "iA", unit_multiplier(d_s3.A.algebra), check=True)
    assert multipliers_agree(one, unit_multiplier(d_s3.algebra)) is None


def test_lifts_preserve_star(d_s3):
    from mhopf.algebra import star_multiplier
    A, B = d_s3.A.algebra, d_s3.B.algebra
    for a in ("012", "201"):
        m = embed(A, e(a).scale(2))
        lhs = lift_multiplier(d_s3, "iA", star_multiplier(m))
        assert multipliers_agree(lhs, star_multiplier(lift_multiplier(d_s3, "iA", m))) is None
    for b in ("102", "120"):
        n = embed(B, e(b))
        lhs = lift_multiplier(d_s3, "iB", star_multiplier(n))
        assert multipliers_agree(lhs, star_multiplier(lift_multiplier(d_s3, "iB", n))) is None


def test_counit_of_double(d_s3):
    for g, h in d_s3.labels():
        assert d_s3.counit_label((g, h)) == (1 if g == "012" else 0)
    assert d_s3.mha.counit(e(("012", "120"))) == 1


def test_counit_slice_of_t1_is_product(d_z2):
    H = d_z2.mha
    for x in d_z2.labels():
        for y in d_z2.labels():
            t = d_canonical_map(d_z2, "t1", tensor_product(e(x), e(y)))
            got = Vec.zero()
            for (u, v), c in t.items():
                got = got + e(v).scale(c * H.counit_label(u))
            assert got == d_mul(d_z2, e(x), e(y))


def test_coproduct_vs_oracle(d_s3):
    # T^D_1(x⊗y) = Δ_D(x)(1⊗y), against the textbook coproduct multiplied out
    for x in d_s3.labels()[:12]:
        for y in (("012", "012"), ("102", "120")):
            t = d_canonical_map(d_s3, "t1", tensor_product(e(x), e(y)))
            want = {}
            for (p, q), c in oracles.double_coproduct(S3, x).items():
                for r, w in oracles.double_mul(S3, q, y).items():
                    want[(p, r)] = want.get((p, r), 0) + c * w
            want = {k: v for k, v in want.items() if v}
            assert dict(t.items()) == want


def test_opposite_iso(d_z2, d_s3):
    from mhopf.mha import SuiteConfig
    assert opposite_double_iso(d_z2).ok
    assert opposite_double_iso(d_s3, SuiteConfig(sample=50)).ok


def test_build_double_reports(z2_pair):
    D = build_double(z2_pair, verify="full")
    assert D.report.ok and len(D.labels()) == 4


def test_wrong_twist_is_caught(s3_pair):
    from mhopf.double import double_suite
    from mhopf.mha import SuiteConfig
    bad = DoubleHandle(s3_pair)
    # the plain flip would be the twist of the tensor product algebra, not of the double
    bad.twist_label = lambda label, direction="forward", strategy=None: TensorVec.basis((label[1], label[0]))
    rep = double_suite(bad, SuiteConfig(sample=30))
    assert not rep.ok
    bad_check = rep.failures()[0]
    assert bad_check.witness
    assert VerificationFailed(rep).report is rep
