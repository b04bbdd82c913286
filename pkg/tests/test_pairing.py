import random

import pytest

from mhopf import catalog
from mhopf.mha import SuiteConfig
from mhopf.pairing import (NotPairingVerified, Pairing, action, eval_pairing, op_op_pairing, pairing_suite, r_map,
                           six_conditions, star_conditions, verify_pairing, verify_prepairing)
from mhopf.tensor import TensorVec, Vec, tensor_product

import oracles

e = Vec.basis
S3 = catalog.symmetric(3)


def test_eval_is_delta(s3_pair):
    for g in S3.elements:
        for h in S3.elements:
            assert eval_pairing(s3_pair, e(g), e(h)) == (1 if g == h else 0)
    assert eval_pairing(s3_pair, Vec.zero(), e("012")) == 0


def test_unit_pairs_to_counit(h4_pair):
    A, B = h4_pair.A, h4_pair.B
    for a in A.labels():
        assert h4_pair.eval(e(a), B.algebra.unit) == A.counit_label(a)
    for b in B.labels():
        assert h4_pair.eval(A.algebra.unit, e(b)) == B.counit_label(b)


def test_h_acts_on_delta(s3_pair):
    for h in S3.elements:
        for g in S3.elements:
            assert dict(action(s3_pair, "b_on_a_left", h, g).items()) == oracles.act_h_on_delta(S3, h, g)
    assert s3_pair.b_on_a("102", "012") == e("102")
    assert s3_pair.b_on_a("120", "201") == e("120")


def test_delta_acts_on_group_like(s3_pair):
    for g in S3.elements:
        for h in S3.elements:
            want = e(h) if g == h else Vec.zero()
            assert s3_pair.a_on_b(g, h) == want


def test_action_on_zero(s3_pair):
    assert action(s3_pair, "a_on_b_left", e("012"), Vec.zero()).is_zero()


def test_canonical_prepairing_passes(s3_pair):
    assert verify_prepairing(s3_pair).ok


def test_perturbed_form_fails_third_axiom():
    G = S3
    P = Pairing(catalog.function_algebra(G), catalog.group_algebra(G),
                lambda g, h: (1 if g == h else 0) + (1 if (g, h) == ("102", "120") else 0))
    rep = verify_prepairing(P)
    first = rep.failures()[0]
    assert first.name.endswith("⟨a, a'▷b⟩ = ⟨a', b◁a⟩ = ⟨aa', b⟩")
    assert first.witness


def test_hopf_adapter_slices_trivially_land(h4_pair):
    rep = verify_prepairing(h4_pair)
    assert [c.status for c in rep.checks[:2]] == ["pass", "pass"]
    assert rep.ok


def test_r_map_vs_oracle(s3_pair):
    for g in S3.elements:
        for h in S3.elements:
            x = TensorVec.basis((g, h))
            want = oracles.r_map(S3, g, h)
            assert dict(r_map(s3_pair, "R", x, "direct").items()) == want
            assert dict(r_map(s3_pair, "R", x, "fast").items()) == want
    assert r_map(s3_pair, "R", TensorVec.basis(("102", "120"))) == TensorVec.basis(("210", "120"))


def test_r_inverse_contract(z2_pair):
    rng = random.Random(1)
    for _ in range(10):
        x = TensorVec({(rng.randrange(2), rng.randrange(2)): rng.randint(1, 4) for _ in range(3)}, 2)
        assert r_map(z2_pair, "R", r_map(z2_pair, "R_inv", x)) == x


def test_r_commutes_with_r_opop(s3_pair):
    for g in S3.elements:
        for h in S3.elements:
            x = TensorVec.basis((g, h))
            assert r_map(s3_pair, "R_opop", r_map(s3_pair, "R", x)) == r_map(s3_pair, "R", r_map(s3_pair, "R_opop", x))


def test_inverse_needs_verification():
    P = catalog.finite_group_pair(catalog.cyclic(2), verify=False)
    with pytest.raises(NotPairingVerified):
        r_map(P, "R_inv", TensorVec.basis((0, 0)))


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z2xZ2", "S3", "D4", "trivial", "H4"])
def test_six_conditions_hold(name):
    P = catalog.example(name)
    conds = six_conditions(P)
    assert len(conds) == 6 and all(ok for ok, _ in conds.values())


def test_zero_form_fails_all_six():
    P = catalog.zero_pairing(S3)
    conds = six_conditions(P)
    assert not any(ok for ok, _ in conds.values())
    rep = verify_pairing(P)
    assert not rep.ok and P.status != "pairing-verified"
    agree = [c for c in rep.checks if c.name.endswith("the six conditions agree")]
    assert agree[0].status == "pass"


def test_star_conditions(s3_pair):
    checks = star_conditions(s3_pair)
    assert len(checks) == 2 and all(c.status == "pass" for c in checks)


def test_op_op_twice_is_identity(s3_pair):
    Q = op_op_pairing(s3_pair)
    assert Q.op_op() is s3_pair
    for a in S3.elements:
        for b in S3.elements:
            x = tensor_product(e(a), e(b))
            assert Q.op_op().A.canonical_map("t1", x) == s3_pair.A.canonical_map("t1", x)


def test_op_op_of_abelian_matches(z2_pair):
    Q = z2_pair.op_op()
    for which in ("t1", "t2"):
        for H, Hq in ((z2_pair.A, Q.A), (z2_pair.B, Q.B)):
            for a in H.labels():
                for b in H.labels():
                    assert Hq.t(which, a, b) == H.t(which, a, b)


def test_op_op_of_s3_verifies(s3_pair):
    Q = catalog.finite_group_pair(S3).op_op()
    assert verify_pairing(Q).ok


@pytest.mark.parametrize("name", ["Z2", "S3", "H4"])
def test_invariant_suite(name):
    P = catalog.example(name)
    rep = pairing_suite(P)
    assert rep.ok, rep.render()


def test_lazy_suite_on_window(int_pair):
    rep = pairing_suite(int_pair, SuiteConfig(window=3))
    assert rep.ok, rep.render()
