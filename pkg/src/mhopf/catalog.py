"""Built-in examples: finite groups, the lazy group ℤ, classical Hopf data.

Also home of the classical Drinfeld double of a finite group, written
straight from the textbook formulas as an oracle for :mod:`mhopf.double`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import linalg
from .algebra import Algebra
from .mha import Mha
from .pairing import Pairing
from .scalar import I
from .tensor import Basis, Functional, TensorVec, Vec, _acc


class NotAGroup(ValueError):
    pass


class AntipodeNotInvertible(ValueError):
    pass


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class GroupPresentation:
    """A group by multiplication and inverse rules.  ``elements`` is ``None``
    for a lazy (infinite) group."""

    name: str
    elements: Optional[tuple]
    mul: Callable
    inv: Callable
    identity: object
    enumerator: Optional[Callable] = field(default=None, compare=False)
    contains: Optional[Callable] = field(default=None, compare=False)

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    @property
    def order(self) -> int:
        return len(self.elements)

    def basis(self) -> Basis:
        if self.is_finite:
            return Basis.finite(self.elements, self.name)
        return Basis.lazy(self.contains, self.enumerator, self.name)

    def check(self) -> None:
        """Group axioms, exhaustively (finite groups only)."""
        if not self.is_finite:
            return
        els = set(self.elements)
        e = self.identity
        if e not in els:
            raise NotAGroup(f"{self.name}: identity {e!r} is not an element")
        for g in self.elements:
            if self.mul(e, g) != g or self.mul(g, e) != g:
                raise NotAGroup(f"{self.name}: {e!r} is not an identity at {g!r}")
            gi = self.inv(g)
            if gi not in els or self.mul(g, gi) != e or self.mul(gi, g) != e:
                raise NotAGroup(f"{self.name}: bad inverse of {g!r}")
            for h in self.elements:
                if self.mul(g, h) not in els:
                    raise NotAGroup(f"{self.name}: {g!r}·{h!r} leaves the group")
        for g, h, k in itertools.product(self.elements, repeat=3):
            if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)):
                raise NotAGroup(f"{self.name}: not associative at {(g, h, k)!r}")

    def conj(self, x, g):
        """``x g x⁻¹``."""
        return self.mul(self.mul(x, g), self.inv(x))


def from_table(name: str, elements, table: dict, identity=None) -> GroupPresentation:
    """Group from a multiplication table ``{(g, h): gh}``; axioms are checked."""
    els = tuple(elements)
    for g, h in itertools.product(els, repeat=2):
        if (g, h) not in table:
            raise NotAGroup(f"{name}: table has no entry for {(g, h)!r}")
    if identity is None:
        identity = next((e for e in els if all(table[(e, g)] == g == table[(g, e)] for g in els)), None)
        if identity is None:
            raise NotAGroup(f"{name}: no identity element")
    inverses = {}
    for g in els:
        gi = next((h for h in els if table[(g, h)] == identity), None)
        if gi is None:
            raise NotAGroup(f"{name}: {g!r} has no inverse")
        inverses[g] = gi
    G = GroupPresentation(name, els, lambda g, h: table[(g, h)], lambda g: inverses[g], identity)
    G.check()
    return G


def cyclic(n: int) -> GroupPresentation:
    if n < 1:
        raise NotAGroup("cyclic group needs n ≥ 1")
    G = GroupPresentation(f"Z{n}", tuple(range(n)), lambda a, b: (a + b) % n, lambda a: (-a) % n, 0)
    return G


def trivial() -> GroupPresentation:
    return GroupPresentation("trivial", (0,), lambda a, b: 0, lambda a: 0, 0)


def symmetric(n: int = 3) -> GroupPresentation:
    """Permutations of ``0..n-1`` in one-line notation (``"102"`` swaps 0 and 1);
    ``(gh)(i) = g(h(i))``."""
    perms = tuple("".join(map(str, p)) for p in itertools.permutations(range(n)))

    def mul(g, h):
        return "".join(g[int(h[i])] for i in range(n))

    def inv(g):
        out = [""] * n
        for i, c in enumerate(g):
            out[int(c)] = str(i)
        return "".join(out)

    return GroupPresentation(f"S{n}", perms, mul, inv, "".join(map(str, range(n))))


def dihedral(n: int = 4) -> GroupPresentation:
    """Symmetries of the ``n``-gon, labels ``r<k>`` (rotation) and ``s<k>`` (``r^k s``)."""
    els = tuple([f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)])

    def parse(g):
        return int(g[1:]), 1 if g[0] == "s" else 0

    def mul(g, h):
        a, f = parse(g)
        b, s = parse(h)
        k = (a + (-b if f else b)) % n
        return f"{'s' if (f + s) % 2 else 'r'}{k}"

    def inv(g):
        a, f = parse(g)
        return g if f else f"r{(-a) % n}"

    return GroupPresentation(f"D{n}", els, mul, inv, "r0")


def direct_product(G: GroupPresentation, H: GroupPresentation) -> GroupPresentation:
    """Labels are concatenated strings ``f"{g}{h}"``."""
    pairs = {f"{g}{h}": (g, h) for g in G.elements for h in H.elements}
    if len(pairs) != G.order * H.order:
        raise NotAGroup("concatenated labels are ambiguous")
    back = {v: k for k, v in pairs.items()}

    def mul(x, y):
        (g1, h1), (g2, h2) = pairs[x], pairs[y]
        return back[(G.mul(g1, g2), H.mul(h1, h2))]

    def inv(x):
        g, h = pairs[x]
        return back[(G.inv(g), H.inv(h))]

    return GroupPresentation(f"{G.name}x{H.name}", tuple(pairs), mul, inv, back[(G.identity, H.identity)])


def _int_enum():
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1


def integers() -> GroupPresentation:
    return GroupPresentation("Z", None, lambda a, b: a + b, lambda a: -a, 0,
                             enumerator=_int_enum, contains=lambda x: isinstance(x, int) and not isinstance(x, bool))


GROUPS = {
    "trivial": trivial,
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z2xZ2": lambda: direct_product(cyclic(2), cyclic(2)),
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
}


def group(name: str) -> GroupPresentation:
    if name in ("Z", "int"):
        return integers()
    try:
        return GROUPS[name]()
    except KeyError:
        raise NotAGroup(f"unknown group {name!r}") from None


# ---------------------------------------------------------------------------
# function algebra and group algebra


def function_algebra(G: GroupPresentation) -> Mha:
    """``C(G)`` (finite) or ``C_c(G)`` (lazy): pointwise product, ``Δ(δ_g) = Σ_{uv=g} δ_u⊗δ_v``."""
    e = Vec.basis
    alg = Algebra(f"C({G.name})", G.basis(), lambda x, y: e(x) if x == y else Vec.zero(),
                  Vec({g: 1 for g in G.elements}) if G.is_finite else None, lambda x: e(x),
                  local_unit=lambda ls: Vec({g: 1 for g in set(ls)}))

    def t1(g, h):
        return TensorVec.basis((G.mul(g, G.inv(h)), h))

    def t2(g, h):
        return TensorVec.basis((g, G.mul(G.inv(g), h)))

    one = Functional(lambda l: 1, "φ")
    kw = {}
    if not G.is_finite:
        kw = dict(t1_inv=lambda g, h: TensorVec.basis((G.mul(g, h), h)),
                  t2_inv=lambda g, h: TensorVec.basis((g, G.mul(g, h))),
                  counit=lambda g: 1 if g == G.identity else 0,
                  antipode=lambda g: e(G.inv(g)), antipode_inv=lambda g: e(G.inv(g)))
    return Mha(alg, t1, t2, left_integral=one, right_integral=one, name=alg.name,
               default_window=None if G.is_finite else 8, **kw)


def group_algebra(G: GroupPresentation) -> Mha:
    """``kG``: group product, ``Δ(g) = g⊗g``, ``g* = g⁻¹``."""
    e = Vec.basis
    alg = Algebra(f"k{G.name}", G.basis(), lambda x, y: e(G.mul(x, y)), e(G.identity), lambda x: e(G.inv(x)))

    def t1(g, h):
        return TensorVec.basis((g, G.mul(g, h)))

    def t2(g, h):
        return TensorVec.basis((G.mul(g, h), h))

    psi = Functional(lambda l: 1 if l == G.identity else 0, "ψ")
    kw = {}
    if not G.is_finite:
        kw = dict(t1_inv=lambda g, h: TensorVec.basis((g, G.mul(G.inv(g), h))),
                  t2_inv=lambda g, h: TensorVec.basis((G.mul(g, G.inv(h)), h)),
                  counit=lambda g: 1, antipode=lambda g: e(G.inv(g)), antipode_inv=lambda g: e(G.inv(g)))
    return Mha(alg, t1, t2, left_integral=psi, right_integral=psi, name=alg.name,
               default_window=None if G.is_finite else 8, **kw)


def finite_group_pair(G: GroupPresentation, verify: bool = True) -> Pairing:
    """``C(G)`` paired with ``kG`` by ``⟨δ_g, h⟩ = [g = h]``."""
    if not G.is_finite:
        raise NotAGroup(f"{G.name} is not finite; use lazy_int_group_pair")
    G.check()
    P = Pairing(function_algebra(G), group_algebra(G), lambda g, h: 1 if g == h else 0,
                name=f"C({G.name})|k{G.name}")
    P.group = G
    return _verified(P) if verify else P


def _verified(P: Pairing) -> Pairing:
    from .pairing import verify_pairing, verify_prepairing
    rep = verify_prepairing(P)
    rep2 = verify_pairing(P)
    if not (rep.ok and rep2.ok):
        bad = (rep.failures() + rep2.failures())[0]
        raise ValueError(f"{P.name}: {bad.name} failed ({bad.witness})")
    return P


def lazy_int_group_pair(window: int = 8, verify: bool = True) -> Pairing:
    """``C_c(ℤ)`` (no unit) paired with ``kℤ``; verified on ``[-window, window]``."""
    G = integers()
    A, B = function_algebra(G), group_algebra(G)
    A.default_window = B.default_window = window
    e = Vec.basis
    # δ_m ▷ m = m and m ◁ δ_m = m
    pre = {
        "a_on_b_left": lambda m: [(1, e(m), e(m))],
        "a_on_b_right": lambda m: [(1, e(m), e(m))],
    }
    P = Pairing(A, B, lambda n, m: 1 if n == m else 0, name="C_c(Z)|kZ",
                cover_in_A=lambda m: e(m), preimages=pre, default_window=window)
    P.group = G
    return _verified(P) if verify else P


# ---------------------------------------------------------------------------
# classical Hopf data


@dataclass
class HopfData:
    """A finite-dimensional Hopf algebra on basis labels."""

    name: str
    labels: tuple
    mul: Callable          # (l1, l2) -> Vec
    unit: Vec
    coproduct: Callable    # l -> TensorVec of degree 2
    counit: Callable       # l -> scalar
    antipode: Callable     # l -> Vec
    star: Optional[Callable] = None


def hopf_as_mha(H: HopfData) -> Mha:
    """``T1(a⊗b) = Δ(a)(1⊗b)``, ``T2(a⊗b) = (a⊗1)Δ(b)``."""
    alg = Algebra(H.name, Basis.finite(H.labels, H.name), H.mul, H.unit, H.star)
    labels = list(H.labels)
    idx = {l: i for i, l in enumerate(labels)}
    rows: dict = {}
    for j, l in enumerate(labels):
        for k, v in H.antipode(l).items():
            rows.setdefault(idx[k], {})[j] = v
    try:
        inv = linalg.inverse(rows, len(labels))
    except linalg.Singular:
        raise AntipodeNotInvertible(f"{H.name}: antipode is not invertible") from None
    cols: dict = {}
    for i, r in inv.items():
        for j, v in r.items():
            cols.setdefault(labels[j], {})[labels[i]] = v

    def t1(a, b):
        d: dict = {}
        for (x, y), c in H.coproduct(a).items():
            for k, v in H.mul(y, b).items():
                _acc(d, (x, k), c * v)
        return TensorVec._wrap(d, 2)

    def t2(a, b):
        d: dict = {}
        for (x, y), c in H.coproduct(b).items():
            for k, v in H.mul(a, x).items():
                _acc(d, (k, y), c * v)
        return TensorVec._wrap(d, 2)

    return Mha(alg, t1, t2, counit=H.counit, antipode=H.antipode,
               antipode_inv=lambda l: Vec._wrap(dict(cols.get(l, {}))), name=H.name)


def group_hopf_data(G: GroupPresentation) -> HopfData:
    e = Vec.basis
    return HopfData(f"k{G.name}", G.elements, lambda x, y: e(G.mul(x, y)), e(G.identity),
                    lambda g: TensorVec.basis((g, g)), lambda g: 1, lambda g: e(G.inv(g)),
                    lambda g: e(G.inv(g)))


def sweedler() -> HopfData:
    """Sweedler's 4-dimensional Hopf algebra over ℚ(i).

    Generated by ``g, x`` with ``g² = 1``, ``x² = 0``, ``xg = -gx``;
    ``Δg = g⊗g``, ``Δx = x⊗1 + g⊗x``.  The basis is ``1, g, x, y`` with
    ``y = i·gx``, so that ``Δy = y⊗g + 1⊗y``.
    """
    labels = ("1", "g", "x", "y")
    # g^a x^b  <->  label
    word = {"1": (0, 0), "g": (1, 0), "x": (0, 1)}
    minus_i = -I

    def from_word(a, b, c) -> Vec:
        if b >= 2:
            return Vec.zero()
        if (a, b) == (1, 1):
            return Vec.basis("y", minus_i * c)  # gx = -i·y
        lab = {(0, 0): "1", (1, 0): "g", (0, 1): "x"}[(a, b)]
        return Vec.basis(lab, c)

    def to_word(l):
        if l == "y":
            return (1, 1), I
        return word[l], 1

    def mul(l1, l2):
        (a, b), c1 = to_word(l1)
        (c, d), c2 = to_word(l2)
        sign = -1 if (b * c) % 2 else 1
        return from_word((a + c) % 2, b + d, sign * c1 * c2)

    def coproduct(l):
        return {
            "1": TensorVec.basis(("1", "1")),
            "g": TensorVec.basis(("g", "g")),
            "x": TensorVec._wrap({("x", "1"): 1, ("g", "x"): 1}, 2),
            "y": TensorVec._wrap({("y", "g"): 1, ("1", "y"): 1}, 2),
        }[l]

    def counit(l):
        return 1 if l in ("1", "g") else 0

    def antipode(l):
        # S(g) = g, S(x) = -gx = i·y, S(y) = i·S(gx) = i·x
        return {"1": Vec.basis("1"), "g": Vec.basis("g"), "x": Vec.basis("y", I), "y": Vec.basis("x", I)}[l]

    return HopfData("H4", labels, mul, Vec.basis("1"), coproduct, counit, antipode)


def dual_hopf_data(H: HopfData) -> HopfData:
    """The dual Hopf algebra on the dual basis ``f:<label>``.

    ``(fg)(a) = (f⊗g)Δ(a)``, ``Δ(f)(a⊗b) = f(ab)``, ``S(f) = f∘S``, unit ``ε``."""
    labels = tuple(f"f:{l}" for l in H.labels)
    base = {f"f:{l}": l for l in H.labels}

    def mul(f1, f2):
        d: dict = {}
        for a in H.labels:
            v = H.coproduct(a).coeff((base[f1], base[f2]))
            if v != 0:
                d[f"f:{a}"] = v
        return Vec._wrap(d)

    unit = Vec._wrap({f"f:{a}": H.counit(a) for a in H.labels if H.counit(a) != 0})

    def coproduct(f):
        d: dict = {}
        for a, b in itertools.product(H.labels, repeat=2):
            v = H.mul(a, b).coeff(base[f])
            if v != 0:
                d[(f"f:{a}", f"f:{b}")] = v
        return TensorVec._wrap(d, 2)

    def counit(f):
        return H.unit.coeff(base[f])

    def antipode(f):
        d: dict = {}
        for a in H.labels:
            v = H.antipode(a).coeff(base[f])
            if v != 0:
                d[f"f:{a}"] = v
        return Vec._wrap(d)

    return HopfData(f"{H.name}*", labels, mul, unit, coproduct, counit, antipode)


def dual_pair(H: HopfData, verify: bool = True) -> Pairing:
    """``H`` paired with its dual by evaluation ``⟨a, f⟩ = f(a)``."""
    D = dual_hopf_data(H)
    P = Pairing(hopf_as_mha(H), hopf_as_mha(D), lambda a, f: 1 if f == f"f:{a}" else 0,
                name=f"{H.name}|{D.name}")
    return _verified(P) if verify else P


def sweedler_pair(verify: bool = True) -> Pairing:
    return dual_pair(sweedler(), verify)


def zero_pairing(G: GroupPresentation) -> Pairing:
    """``C(G)`` and ``kG`` with the zero form: a pre-pairing that is not a pairing."""
    return Pairing(function_algebra(G), group_algebra(G), lambda g, h: 0, name=f"zero C({G.name})|k{G.name}")


# ---------------------------------------------------------------------------
# classical Drinfeld double oracle (independent of mhopf.double)


def classical_double_mul(G: GroupPresentation, x: tuple, y: tuple) -> dict:
    """``(δ_g⊗a)(δ_h⊗b) = [g = a h a⁻¹] δ_g⊗ab`` as ``{label: coeff}``."""
    (g, a), (h, b) = x, y
    if g == G.mul(G.mul(a, h), G.inv(a)):
        return {(g, G.mul(a, b)): 1}
    return {}


def classical_double_coproduct(G: GroupPresentation, x: tuple) -> dict:
    """``Δ(δ_g⊗a) = Σ_{uv=g} (δ_u⊗a)⊗(δ_v⊗a)``."""
    g, a = x
    out = {}
    for u in G.elements:
        v = G.mul(G.inv(u), g)
        out[((u, a), (v, a))] = 1
    return out


def classical_double_counit(G: GroupPresentation, x: tuple) -> int:
    return 1 if x[0] == G.identity else 0


def classical_double_table(G: GroupPresentation) -> dict:
    labels = [(g, a) for g in G.elements for a in G.elements]
    return {(x, y): classical_double_mul(G, x, y) for x in labels for y in labels}


EXAMPLES = {
    "Z2": lambda: finite_group_pair(cyclic(2)),
    "Z3": lambda: finite_group_pair(cyclic(3)),
    "Z2xZ2": lambda: finite_group_pair(direct_product(cyclic(2), cyclic(2))),
    "S3": lambda: finite_group_pair(symmetric(3)),
    "D4": lambda: finite_group_pair(dihedral(4)),
    "trivial": lambda: finite_group_pair(trivial()),
    "Z": lazy_int_group_pair,
    "H4": sweedler_pair,
}


def example(name: str) -> Pairing:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None
