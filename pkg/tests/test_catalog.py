import pytest

from mhopf import catalog
from mhopf.algebra import has_unit_on
from mhopf.catalog import AntipodeNotInvertible, HopfData, NotAGroup
from mhopf.double import DoubleHandle, twist
from mhopf.mha import SuiteConfig, mha_suite
from mhopf.tensor import TensorVec, Vec

e = Vec.basis


def same_maps(H1, H2):
    ls = H1.labels()
    assert ls == H2.labels()
    for which in ("t1", "t2", "t1_inv", "t2_inv"):
        for a in ls:
            for b in ls:
                assert H1.t(which, a, b) == H2.t(which, a, b), (which, a, b)
    for a in ls:
        assert H1.counit_label(a) == H2.counit_label(a)
        assert H1.antipode(e(a)) == H2.antipode(e(a))


@pytest.mark.parametrize("G", [catalog.cyclic(2), catalog.symmetric(3)], ids=lambda G: G.name)
def test_adapter_reproduces_group_algebra(G):
    same_maps(catalog.hopf_as_mha(catalog.group_hopf_data(G)), catalog.group_algebra(G))


def test_sweedler_suites():
    H = catalog.hopf_as_mha(catalog.sweedler())
    assert H.algebra.dim == 4
    assert mha_suite(H).ok
    P = catalog.sweedler_pair()
    assert P.status == "pairing-verified"


def test_singular_antipode_rejected():
    G = catalog.cyclic(2)
    H = catalog.group_hopf_data(G)
    bad = HopfData("bad", H.labels, H.mul, H.unit, H.coproduct, H.counit, lambda g: e(0))
    with pytest.raises(AntipodeNotInvertible):
        catalog.hopf_as_mha(bad)


def test_table_without_identity_rejected():
    table = {(g, h): "a" for g in "ab" for h in "ab"}
    with pytest.raises(NotAGroup):
        catalog.from_table("bad", "ab", table)


def test_nonassociative_table_rejected():
    # a Latin square with identity 0 that is not associative
    rows = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    table = {(g, h): rows[g][h] for g in range(5) for h in range(5)}
    with pytest.raises(NotAGroup):
        catalog.from_table("loop", range(5), table)


def test_table_group_matches_cyclic():
    table = {(g, h): (g + h) % 3 for g in range(3) for h in range(3)}
    G = catalog.from_table("C3", range(3), table)
    same_maps(catalog.function_algebra(G), catalog.function_algebra(catalog.cyclic(3)))


def test_infinite_group_rejected_for_finite_pair():
    with pytest.raises(NotAGroup):
        catalog.finite_group_pair(catalog.integers())


def test_trivial_group_is_one_dimensional():
    P = catalog.example("trivial")
    assert P.labels_A() == P.labels_B() == [0]
    for H in (P.A, P.B):
        assert H.t("t1", 0, 0) == H.t("t2", 0, 0) == TensorVec.basis((0, 0))
        assert H.antipode(e(0)) == e(0) and H.counit_label(0) == 1


def test_s3_double_dimension(s3_pair):
    assert len(DoubleHandle(s3_pair).labels()) == 36


def test_integer_functions_have_no_unit(int_pair):
    A = int_pair.A.algebra
    assert A.unit is None
    # the best local unit on a window kills everything outside it
    u = has_unit_on(A, list(range(-8, 9)))
    assert u is not None and A.mul(u, e(9)).is_zero()


def test_integer_t1(int_pair):
    # Δ(δ_0) = Σ_{u+v=0} δ_u⊗δ_v meets the cover δ_5 on the second leg at v = 5
    assert int_pair.A.t("t1", 0, 5) == TensorVec.basis((-5, 5))


def test_integer_twist_is_flip(int_pair):
    D = DoubleHandle(int_pair)
    for n in (-2, 0, 3):
        for m in (-1, 4):
            assert twist(D, TensorVec.basis((n, m))) == TensorVec.basis((m, n))


def test_integer_suites(int_pair):
    assert mha_suite(int_pair.A, SuiteConfig(window=4)).ok
    assert int_pair.status == "pairing-verified"


def test_unknown_example():
    with pytest.raises(KeyError):
        catalog.example("nope")
