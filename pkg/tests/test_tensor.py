import pytest

from mhopf import catalog
from mhopf.tensor import (ArityMismatch, Functional, TensorVec, Vec, apply_on_legs, flip, identity_map,
                          permute_legs, regroup, flatten, tensor_product)

e = Vec.basis


def test_tensor_product_bilinear():
    assert tensor_product(e("e") + e("s"), e("e")) == TensorVec({("e", "e"): 1, ("s", "e"): 1}, 2)


def test_zero_annihilates():
    assert tensor_product(Vec.zero(), e("y")).is_zero()


def test_scalar_migrates():
    assert tensor_product(e("x").scale(2), e("y")) == tensor_product(e("x"), e("y")).scale(2)


def test_flip_and_involution():
    t = TensorVec.basis(("x", "y"))
    assert flip(t) == TensorVec.basis(("y", "x"))
    assert permute_legs(permute_legs(t, (1, 0)), (1, 0)) == t


def test_disjoint_swaps_on_degree_four():
    t = TensorVec({(1, 2, 3, 4): 1, (5, 6, 7, 8): 2}, 4)
    both = permute_legs(t, (2, 3, 0, 1))
    one = permute_legs(permute_legs(t, (2, 1, 0, 3)), (0, 3, 2, 1))
    assert both == one == TensorVec({(3, 4, 1, 2): 1, (7, 8, 5, 6): 2}, 4)


def test_identity_on_a_leg():
    t = TensorVec({("a", "b"): 3, ("c", "d"): -1}, 2)
    assert apply_on_legs(identity_map(), (1,), t) == t


def test_functional_on_a_leg():
    omega = Functional(lambda l: {"y": 5}.get(l, 0))
    assert apply_on_legs(omega, (1,), tensor_product(e("x"), e("y"))) == e("x", 5)


def test_antipode_on_a_leg_z2():
    A = catalog.function_algebra(catalog.cyclic(2))
    t = TensorVec.basis((1, 0))
    # S(δ_g) = δ_{g⁻¹}; in ℤ₂ every element is its own inverse
    assert apply_on_legs(A.S_map(), (0,), t) == TensorVec.basis((1, 0))
    B = catalog.function_algebra(catalog.cyclic(3))
    assert apply_on_legs(B.S_map(), (0,), TensorVec.basis((1, 2))) == TensorVec.basis((2, 2))


def test_bad_legs_raise():
    with pytest.raises(ArityMismatch):
        apply_on_legs(identity_map(), (2,), TensorVec.basis(("a", "b")))
    with pytest.raises(ArityMismatch):
        permute_legs(TensorVec.basis(("a", "b")), (0, 0))


def test_regroup_flatten_inverse():
    t = TensorVec({(1, 2, 3, 4): 7}, 4)
    g = regroup(t, (2, 2))
    assert g == TensorVec({((1, 2), (3, 4)): 7}, 2)
    assert flatten(g, (2, 2)) == t


def test_mixed_degrees_refuse_to_add():
    with pytest.raises(Exception):
        TensorVec.basis(("a", "b")) + TensorVec.basis(("a", "b", "c"))
