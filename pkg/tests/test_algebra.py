import pytest

from mhopf import catalog
from mhopf.algebra import (Algebra, CompatibilityViolation, NoStar, check_associative, check_nondegenerate, embed,
                           extend_morphism, has_unit_on, multiplier_from_pair, multiplier_ops, multipliers_agree,
                           multiply, scalar_algebra, scalar_multiplier, unit_multiplier)
from mhopf.tensor import Basis, Vec, linmap

e = Vec.basis
Z2 = catalog.cyclic(2)
S3 = catalog.symmetric(3)


@pytest.fixture(scope="module")
def cz2():
    return catalog.function_algebra(Z2)


@pytest.fixture(scope="module")
def kz2():
    return catalog.group_algebra(Z2)


def test_pointwise_products(cz2):
    # 0 is the identity of Z2, 1 the generator
    assert multiply(cz2.algebra, e(0), e(0)) == e(0)
    assert multiply(cz2.algebra, e(0), e(1)).is_zero()


def test_group_product(kz2):
    assert multiply(kz2.algebra, e(1), e(1)) == e(0)


def test_associative_catalog_algebras():
    for G in (Z2, S3):
        assert check_associative(catalog.function_algebra(G).algebra).ok
        assert check_associative(catalog.group_algebra(G).algebra).ok


def test_nondegenerate_cs3():
    c = check_nondegenerate(catalog.function_algebra(S3).algebra)
    assert c.status == "pass" and c.count == 6


def test_zero_product_is_degenerate():
    A = Algebra("null", Basis.finite(["x"]), lambda x, y: Vec.zero())
    c = check_nondegenerate(A)
    assert c.status == "fail"
    assert c.witness.startswith("x = ") and "x" in c.witness[4:]


def test_nondegenerate_on_integer_window():
    A = catalog.function_algebra(catalog.integers()).algebra
    assert check_nondegenerate(A, range(-2, 3)).status == "pass"


def test_int_functions_have_no_unit_on_window():
    A = catalog.function_algebra(catalog.integers()).algebra
    assert A.unit is None
    # a local unit exists for each window, but none is global
    u = has_unit_on(A, list(range(-2, 3)))
    assert u == Vec({g: 1 for g in range(-2, 3)})
    assert A.mul(u, e(3)).is_zero()


def test_identity_pair_is_unit(cz2):
    ident = linmap(lambda l: e(l), "id")
    m = multiplier_from_pair(cz2.algebra, ident, ident)
    assert multipliers_agree(m, unit_multiplier(cz2.algebra)) is None


def test_embed_is_a_multiplier(cz2):
    A = cz2.algebra
    m = multiplier_from_pair(A, A.left_mult(e(0)), A.right_mult(e(0)))
    assert multipliers_agree(m, embed(A, e(0))) is None


def test_incompatible_pair_rejected(cz2):
    A = cz2.algebra
    with pytest.raises(CompatibilityViolation) as exc:
        multiplier_from_pair(A, A.left_mult(e(0)), A.right_mult(e(1)))
    a, b = exc.value.witness
    assert A.mul(A.mul(e(a), e(1)), e(b)) != A.mul(e(a), A.mul(e(0), e(b)))


def test_unit_times_rho(cz2):
    A = cz2.algebra
    r = embed(A, e(0) + e(1).scale(3))
    assert multipliers_agree(multiplier_ops("mul", unit_multiplier(A), r), r) is None


def test_embedding_is_homomorphism(cz2, kz2):
    for A in (cz2.algebra, kz2.algebra):
        for a in A.labels():
            for b in A.labels():
                prod = multiplier_ops("mul", embed(A, e(a)), embed(A, e(b)))
                assert multipliers_agree(prod, embed(A, A.mul(e(a), e(b)))) is None


def test_star_of_embedding_on_group_algebra(kz2):
    A = kz2.algebra
    kS3 = catalog.group_algebra(S3).algebra
    for alg, g in ((A, 1), (kS3, "120")):
        s = multiplier_ops("star", embed(alg, e(g)))
        assert multipliers_agree(s, embed(alg, alg.star(e(g)))) is None
    assert kS3.star(e("120")) == e("201")


def test_star_requires_star():
    A = Algebra("plain", Basis.finite(["x"]), lambda x, y: e("x"))
    with pytest.raises(NoStar):
        multiplier_ops("star", embed(A, e("x")))


def test_apply_left_right(cz2):
    A = cz2.algebra
    r = embed(A, e(1))
    assert multiplier_ops("apply_left", r, e(1)) == e(1)
    assert multiplier_ops("apply_right", e(0), r).is_zero()


def test_one_component_determines_other(cz2):
    A = cz2.algebra
    r = embed(A, e(0).scale(2) + e(1))
    s = multiplier_from_pair(A, r.rho1, A.right_mult(e(0).scale(2) + e(1)))
    assert multipliers_agree(r, s) is None


def test_extend_identity_at_unit(cz2):
    A = cz2.algebra
    ext = extend_morphism(lambda a: embed(A, a), A, A, unit_multiplier(A))
    assert multipliers_agree(ext, unit_multiplier(A)) is None


def test_extend_coproduct_at_unit(cz2):
    A = cz2.algebra
    sq = cz2.square
    ext = extend_morphism(cz2.delta_multiplier, A, sq, embed(A, e(0) + e(1)))
    assert multipliers_agree(ext, unit_multiplier(sq)) is None


def test_extend_counit_gives_scalar():
    H = catalog.function_algebra(S3)
    A, k = H.algebra, scalar_algebra()
    x = e("012").scale(5) + e("120")
    ext = extend_morphism(lambda a: scalar_multiplier(k, H.counit(a)), A, k, embed(A, x))
    # counit of C(S3) evaluates at the identity "012"
    assert multipliers_agree(ext, scalar_multiplier(k, 5)) is None
