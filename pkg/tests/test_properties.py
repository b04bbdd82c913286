"""Algebraic invariants on random exact inputs."""
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from mhopf import catalog
from mhopf.double import DoubleHandle, d_mul, d_star, twist
from mhopf.pairing import r_map
from mhopf.scalar import I, conj, format_scalar, parse_scalar
from mhopf.specfile import dump_mha, load_spec
from mhopf.tensor import Functional, TensorVec, Vec, apply_on_legs, tensor_product

S3 = catalog.symmetric(3)
H4_PAIR = catalog.sweedler_pair()
S3_PAIR = catalog.example("S3")
D_S3 = DoubleHandle(S3_PAIR)
CS3 = S3_PAIR.A
H4 = H4_PAIR.A

PROP = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(lambda r, s: r + s * I, rationals, st.integers(-2, 2))


def vecs(labels, max_terms=3):
    return st.dictionaries(st.sampled_from(labels), scalars, min_size=1, max_size=max_terms).map(Vec)


def tensors(labels_a, labels_b, max_terms=3):
    keys = st.tuples(st.sampled_from(labels_a), st.sampled_from(labels_b))
    return st.dictionaries(keys, scalars, min_size=1, max_size=max_terms).map(lambda d: TensorVec(d, 2))


@PROP
@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert conj(x * y) == conj(x) * conj(y)
    if x != 0:
        assert x * (1 / x) == 1


@PROP
@given(scalars)
def test_scalar_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@PROP
@given(tensors(CS3.labels(), CS3.labels()))
def test_canonical_maps_invert(x):
    for H in (CS3, S3_PAIR.B):
        for w in ("t1", "t2", "t_op1", "t_op2"):
            assert H.canonical_map(w + "_inv", H.canonical_map(w, x)) == x


@PROP
@given(tensors(H4.labels(), H4.labels()))
def test_sweedler_canonical_maps_invert(x):
    for w in ("t1", "t2"):
        assert H4.canonical_map(w + "_inv", H4.canonical_map(w, x)) == x


@PROP
@given(vecs(H4.labels()), vecs(H4.labels()))
def test_counit_multiplicative(x, y):
    assert H4.counit(H4.mul(x, y)) == H4.counit(x) * H4.counit(y)


@PROP
@given(vecs(H4.labels()), vecs(H4.labels()))
def test_antipode_antimultiplicative(x, y):
    S = H4.antipode
    assert S(H4.mul(x, y)) == H4.mul(S(y), S(x))


@PROP
@given(vecs(H4_PAIR.labels_A()), vecs(H4_PAIR.labels_B()))
def test_pairing_antipode_adjoint(a, b):
    P = H4_PAIR
    assert P.eval(P.A.antipode(a), b) == P.eval(a, P.B.antipode(b))


@PROP
@given(vecs(S3.elements), st.lists(st.tuples(st.sampled_from(["left", "right"]), st.sampled_from(S3.elements)),
                                   min_size=3, max_size=3), st.integers(0, 2))
def test_covered_coproduct_nestings(a, cov, free):
    covers = [(i, s, Vec.basis(g)) for i, (s, g) in enumerate(cov) if i != free]
    assert CS3.delta_n_covered(a, covers, 2, "left") == CS3.delta_n_covered(a, covers, 2, "right")


@PROP
@given(tensors(S3.elements, S3.elements))
def test_r_inverse(x):
    assert r_map(S3_PAIR, "R_inv", r_map(S3_PAIR, "R", x)) == x
    assert r_map(S3_PAIR, "R", x, "fast") == r_map(S3_PAIR, "R", x, "direct")


@PROP
@given(tensors(S3.elements, S3.elements))
def test_twist_inverse(x):
    assert twist(D_S3, twist(D_S3, x), "inverse") == x


@PROP
@given(vecs(D_S3.labels()), vecs(D_S3.labels()), vecs(D_S3.labels()))
def test_double_associative(x, y, z):
    assert d_mul(D_S3, d_mul(D_S3, x, y), z) == d_mul(D_S3, x, d_mul(D_S3, y, z))


@PROP
@given(vecs(D_S3.labels()), vecs(D_S3.labels()))
def test_double_star(x, y):
    assert d_star(D_S3, d_star(D_S3, x)) == x
    assert d_star(D_S3, d_mul(D_S3, x, y)) == d_mul(D_S3, d_star(D_S3, y), d_star(D_S3, x))


@PROP
@given(vecs(D_S3.labels()), vecs(D_S3.labels()))
def test_double_counit_multiplicative(x, y):
    H = D_S3.mha
    assert H.counit(d_mul(D_S3, x, y)) == H.counit(x) * H.counit(y)


@PROP
@given(vecs(D_S3.labels(), 2), vecs(D_S3.labels(), 2))
def test_double_integral_invariance(x, y):
    H = D_S3.mha
    phi = D_S3.integral()
    lhs = apply_on_legs(phi, (1,), H.canonical_map("t2", tensor_product(x, y)))
    assert lhs == x.scale(phi(y))


@PROP
@given(st.sampled_from(["Z2", "S3", "H4"]), st.booleans())
def test_spec_round_trip(name, which_b):
    P = catalog.example(name)
    H = P.B if which_b else P.A
    back = load_spec({"format": "mhopf-spec/1", "field": "Q(i)", "mha": dump_mha(H)})
    ls = H.labels()
    assert set(back.labels()) == set(ls)
    for a in ls:
        for b in ls:
            assert back.t("t1", a, b) == H.t("t1", a, b)
            assert back.t("t2", a, b) == H.t("t2", a, b)
            assert back.mul(Vec.basis(a), Vec.basis(b)) == H.mul(Vec.basis(a), Vec.basis(b))
        assert back.counit_label(a) == H.counit_label(a)
        assert back.antipode(Vec.basis(a)) == H.antipode(Vec.basis(a))


def test_functional_is_linear():
    f = Functional(lambda l: 1 if l == "012" else 0)
    assert f(Vec({"012": Fraction(1, 2), "102": 3})) == Fraction(1, 2)
