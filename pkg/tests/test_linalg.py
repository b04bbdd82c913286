from fractions import Fraction

import pytest

from mhopf import linalg
from mhopf.scalar import I


def test_inverse_of_shear():
    inv = linalg.inverse({0: {0: 1, 1: 1}, 1: {1: 1}}, 2)
    assert inv == {0: {0: 1, 1: -1}, 1: {1: 1}}


def test_inverse_rational_entries():
    inv = linalg.inverse({0: {0: 2}, 1: {1: Fraction(1, 3)}}, 2)
    assert inv == {0: {0: Fraction(1, 2)}, 1: {1: 3}}


def test_inverse_over_gaussian_rationals():
    inv = linalg.inverse({0: {0: I}}, 1)
    assert inv == {0: {0: -I}}


def test_singular_raises():
    with pytest.raises(linalg.Singular):
        linalg.inverse({0: {0: 1, 1: 1}, 1: {0: 1, 1: 1}}, 2)


def test_rank_and_nullspace():
    rows = {0: {0: 1, 1: 1}, 1: {0: 2, 1: 2}}
    assert linalg.rank(rows, (2, 2)) == 1
    (v,) = linalg.nullspace(rows, (2, 2))
    assert v[0] + v.get(1, 0) == 0 and v


def test_solve_consistent_and_not():
    rows = {0: {0: 1, 1: 1}}
    x = linalg.solve(rows, (1, 2), {0: 5})
    assert x.get(0, 0) + x.get(1, 0) == 5
    assert linalg.solve({0: {0: 1}, 1: {0: 1}}, (2, 1), {0: 1, 1: 2}) is None


def test_matmul_and_transpose():
    a = {0: {0: 1, 1: 2}}
    assert linalg.transpose(a) == {0: {0: 1}, 1: {0: 2}}
    assert linalg.matmul(a, linalg.transpose(a)) == {0: {0: 5}}
