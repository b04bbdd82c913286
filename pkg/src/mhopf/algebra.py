"""Non-unital algebras with non-degenerate product, star structures and
multipliers represented as compatible pairs of maps."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import linalg
from .report import Check, mismatch, scan
from .scalar import conj
from .tensor import (Basis, BasisMismatch, LinMap, TensorVec, Vec, _acc, label_key, linmap)


class CompatibilityViolation(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NoStar(ValueError):
    pass


class NotNondegenerate(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Algebra:
    """Associative algebra on a (finite or lazy) basis.

    ``mul_basis(x, y)`` gives the product of two basis labels; ``star_basis``
    the star of a basis label (extended conjugate-linearly).
    """

    name: str
    basis: Basis
    mul_basis: Callable
    unit: Optional[Vec] = None
    star_basis: Optional[Callable] = None
    local_unit: Optional[Callable] = None  # labels -> Vec acting as 1 on them (non-unital case)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def is_finite(self) -> bool:
        return self.basis.is_finite

    @property
    def has_star(self) -> bool:
        return self.star_basis is not None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def labels(self, window: Optional[int] = None) -> list:
        return self.basis.window(window)

    def e(self, label) -> Vec:
        return Vec.basis(label)

    def unit_for(self, labels) -> Optional[Vec]:
        """The unit, else a local unit for ``labels`` if the algebra supplies one."""
        if self.unit is not None:
            return self.unit
        return self.local_unit(list(labels)) if self.local_unit is not None else None

    def mul_labels(self, x, y) -> Vec:
        key = (x, y)
        c = self._cache
        try:
            return c[key]
        except KeyError:
            out = c[key] = self.mul_basis(x, y)
            return out

    def mul(self, x: Vec, y: Vec) -> Vec:
        if x.degree is not None or y.degree is not None:
            raise BasisMismatch(f"{self.name}: products take degree-1 vectors")
        d: dict = {}
        for k1, c1 in x.items():
            for k2, c2 in y.items():
                c = c1 * c2
                for k, v in self.mul_labels(k1, k2).items():
                    _acc(d, k, c * v)
        return Vec._wrap(d)

    def star(self, x: Vec) -> Vec:
        if self.star_basis is None:
            raise NoStar(f"{self.name} has no star")
        d: dict = {}
        for k, c in x.items():
            cc = conj(c)
            for k2, v in self.star_basis(k).items():
                _acc(d, k2, cc * v)
        return Vec._wrap(d)

    def left_mult(self, a: Vec) -> LinMap:
        return linmap(lambda l: self.mul(a, Vec.basis(l)), f"{a!r}·")

    def right_mult(self, a: Vec) -> LinMap:
        return linmap(lambda l: self.mul(Vec.basis(l), a), f"·{a!r}")

    def __repr__(self):
        return f"Algebra({self.name})"


def multiply(A: Algebra, x: Vec, y: Vec) -> Vec:
    return A.mul(x, y)


def mul_leg(A: Algebra, t: TensorVec, leg: int, a: Vec, side: str) -> TensorVec:
    """Multiply leg ``leg`` of ``t`` by ``a``: on the left (``a·t``) or right (``t·a``)."""
    d: dict = {}
    for k, c in t.items():
        x = Vec.basis(k[leg])
        y = A.mul(a, x) if side == "left" else A.mul(x, a)
        for l, v in y.items():
            kk = k[:leg] + (l,) + k[leg + 1:]
            _acc(d, kk, c * v)
    return TensorVec._wrap(d, t.degree)


def tensor_algebra(*algs: Algebra, name: Optional[str] = None) -> Algebra:
    """Tensor product algebra on tuple labels (legwise product and star)."""
    n = len(algs)
    if all(a.is_finite for a in algs):
        basis = Basis.finite(itertools.product(*(a.basis.labels for a in algs)))
    else:
        basis = Basis.lazy(
            lambda l: isinstance(l, tuple) and len(l) == n and all(x in a.basis for x, a in zip(l, algs)),
            lambda: _product_enum(algs),
        )

    def mul(x, y):
        parts = [a.mul_labels(xi, yi) for a, xi, yi in zip(algs, x, y)]
        d = {(): 1}
        for p in parts:
            nd = {}
            for k1, c1 in d.items():
                for k2, c2 in p.items():
                    nd[k1 + (k2,)] = c1 * c2
            d = nd
        return Vec._wrap(d)

    unit = None
    if all(a.unit is not None for a in algs):
        t = _tensor_vecs([a.unit for a in algs])
        unit = t
    def star(x):
        return _tensor_vecs([a.star(Vec.basis(xi)) for a, xi in zip(algs, x)])

    return Algebra(name or "⊗".join(a.name for a in algs), basis, mul, unit,
                   star if all(a.has_star for a in algs) else None)


def _tensor_vecs(vs: Sequence[Vec]) -> Vec:
    d = {(): 1}
    for v in vs:
        nd = {}
        for k1, c1 in d.items():
            for k2, c2 in v.items():
                nd[k1 + (k2,)] = c1 * c2
        d = nd
    return Vec._wrap(d)


def _product_enum(algs):
    # finite windows of lazy products come from the factors' windows
    its = [a.basis.window(2) for a in algs]
    return iter(itertools.product(*its))


def scalar_algebra() -> Algebra:
    """The ground field as a one-dimensional unital algebra (label ``"1"``)."""
    one = Vec.basis("1")
    return Algebra("k", Basis.finite(["1"]), lambda x, y: one, one, lambda x: one)


# ---------------------------------------------------------------------------
# checks


def check_associative(A: Algebra, labels: Optional[Iterable] = None) -> Check:
    labels = list(labels) if labels is not None else A.labels()
    e = Vec.basis

    def test(t):
        a, b, c = t
        return mismatch(A.mul(A.mul(e(a), e(b)), e(c)), A.mul(e(a), A.mul(e(b), e(c))))

    return scan(f"{A.name}: associativity", itertools.product(labels, repeat=3), test)


def check_star(A: Algebra, labels: Optional[Iterable] = None) -> list:
    labels = list(labels) if labels is not None else A.labels()
    e = Vec.basis
    invol = scan(f"{A.name}: star involutive", labels, lambda a: mismatch(A.star(A.star(e(a))), e(a)))
    anti = scan(f"{A.name}: star antimultiplicative", itertools.product(labels, repeat=2),
                lambda t: mismatch(A.star(A.mul(e(t[0]), e(t[1]))), A.mul(A.star(e(t[1])), A.star(e(t[0])))))
    return [invol, anti]


def _mult_matrix(A: Algebra, labels: list, side: str):
    idx = {l: i for i, l in enumerate(labels)}
    out_idx: dict = {}
    rows: dict = {}
    for a in labels:
        for j, b in enumerate(labels):
            prod = A.mul_labels(a, b) if side == "left" else A.mul_labels(b, a)
            for c, v in prod.items():
                r = out_idx.setdefault((a, c), len(out_idx))
                rows.setdefault(r, {})[j] = v
    return rows, (max(len(out_idx), 1), len(labels)), idx


def check_nondegenerate(A: Algebra, window: Optional[Iterable] = None) -> Check:
    """No nonzero ``x`` on the window with ``a·x = 0`` for all window ``a``
    (and likewise ``x·a = 0``)."""
    labels = sorted(window if window is not None else A.labels(), key=label_key)
    name = f"{A.name}: non-degenerate product"
    if not labels:
        return Check(name, "fail", "empty window")
    for side in ("left", "right"):
        rows, shape, _ = _mult_matrix(A, labels, side)
        ns = linalg.nullspace(rows, shape)
        if ns:
            w = Vec({labels[j]: v for j, v in ns[0].items()})
            what = "a·x = 0 for all a" if side == "left" else "x·a = 0 for all a"
            return Check(name, "fail", f"x = {w!r} ({what})", len(labels))
    return Check(name, "pass", None, len(labels))


def has_unit_on(A: Algebra, labels: list) -> Optional[Vec]:
    """A vector supported on ``labels`` acting as identity on ``labels``, if any."""
    labels = list(labels)
    rows: dict = {}
    rhs: dict = {}
    r = 0
    for side in ("left", "right"):
        for b in labels:
            targets = {}
            for j, u in enumerate(labels):
                p = A.mul_labels(u, b) if side == "left" else A.mul_labels(b, u)
                for c, v in p.items():
                    targets.setdefault(c, {})[j] = v
            keys = set(targets) | {b}
            for c in sorted(keys, key=label_key):
                rows[r] = targets.get(c, {})
                rhs[r] = 1 if c == b else 0
                r += 1
    x = linalg.solve(rows, (r, len(labels)), rhs)
    if x is None:
        return None
    return Vec({labels[j]: v for j, v in x.items()})


# ---------------------------------------------------------------------------
# solving x·b = y(b) for x


class Extractor:
    """Recovers an element from its left (or right) multiplication action.

    For ``side='left'`` finds ``x`` with ``x·b = targets(b)`` for all probe
    labels ``b``; ``side='right'`` finds ``x`` with ``b·x = targets(b)``.
    Works on finite algebras (probes = full basis).
    """

    def __init__(self, A: Algebra, side: str = "left", probes: Optional[list] = None):
        self.A = A
        self.side = side
        self.labels = list(A.labels())
        self.probes = list(probes) if probes is not None else self.labels
        self._build()

    def _build(self):
        A = self.A
        rows: dict = {}
        keys: dict = {}
        for j, u in enumerate(self.labels):
            for b in self.probes:
                p = A.mul_labels(u, b) if self.side == "left" else A.mul_labels(b, u)
                for c, v in p.items():
                    r = keys.setdefault((b, c), len(keys))
                    rows.setdefault(r, {})[j] = v
        self.keys = keys
        self.rows = rows
        n = len(self.labels)
        shape = (len(keys), n)
        if linalg.rank(rows, shape) < n:
            raise NotNondegenerate(f"{A.name}: {self.side} multiplication action is not injective")
        piv = linalg.independent_rows(rows, shape)
        self.pivot_keys = [k for k, r in sorted(keys.items(), key=lambda kv: kv[1]) if r in set(piv)]
        sub = {}
        rev = {r: k for k, r in keys.items()}
        for i, r in enumerate(sorted(piv)):
            sub[i] = rows.get(r, {})
        self.pivots = [rev[r] for r in sorted(piv)]
        self.inv = linalg.inverse(sub, n)

    def solve(self, targets: Callable) -> Optional[Vec]:
        """``targets(b)`` returns the required product for probe label ``b``;
        ``None`` if no element realizes all of them."""
        cache: dict = {}

        def t(b):
            if b not in cache:
                cache[b] = targets(b)
            return cache[b]

        y = [t(b).coeff(c) for b, c in self.pivots]
        d = {}
        for i, r in self.inv.items():
            s = 0
            for j, v in r.items():
                if y[j] != 0:
                    s = s + v * y[j]
            if s != 0:
                d[self.labels[i]] = s
        x = Vec._wrap(d)
        A = self.A
        for b in self.probes:
            got = A.mul(x, Vec.basis(b)) if self.side == "left" else A.mul(Vec.basis(b), x)
            if got != t(b):
                return None
        return x


def extractor(A: Algebra, side: str = "left") -> Extractor:
    key = ("extractor", side)
    ex = A._cache.get(key)
    if ex is None:
        ex = A._cache[key] = Extractor(A, side)
    return ex


# ---------------------------------------------------------------------------
# multipliers


@dataclass(frozen=True, eq=False)
class Multiplier:
    """``ρ = (ρ1, ρ2)`` with ``ρ·a = ρ1(a)``, ``a·ρ = ρ2(a)`` and
    ``ρ2(a)·b = a·ρ1(b)``."""

    algebra: Algebra
    rho1: LinMap
    rho2: LinMap
    name: str = ""

    def left(self, a: Vec) -> Vec:
        return self.rho1(a)

    def right(self, a: Vec) -> Vec:
        return self.rho2(a)

    def __repr__(self):
        return f"Multiplier({self.name or '?'} on {self.algebra.name})"


def embed(A: Algebra, a: Vec) -> Multiplier:
    return Multiplier(A, A.left_mult(a), A.right_mult(a), repr(a))


def unit_multiplier(A: Algebra) -> Multiplier:
    ident = linmap(lambda l: Vec.basis(l), "id", memo=False)
    return Multiplier(A, ident, ident, "1")


def zero_multiplier(A: Algebra) -> Multiplier:
    z = linmap(lambda l: Vec.zero(), "0", memo=False)
    return Multiplier(A, z, z, "0")


def compatibility_witness(m: Multiplier, labels: Iterable) -> Optional[tuple]:
    A = m.algebra
    labels = list(labels)
    for a in labels:
        ra = m.rho2.on_basis(a)
        for b in labels:
            if A.mul(ra, Vec.basis(b)) != A.mul(Vec.basis(a), m.rho1.on_basis(b)):
                return (a, b)
    return None


def check_compatible(m: Multiplier, labels: Optional[Iterable] = None) -> Check:
    A = m.algebra
    labels = list(labels) if labels is not None else A.labels()
    w = compatibility_witness(m, labels)
    name = f"{A.name}: multiplier compatibility ({m.name})"
    return Check(name, "fail" if w else "pass", repr(w) if w else None, len(labels) ** 2)


def multiplier_from_pair(A: Algebra, rho1: LinMap, rho2: LinMap, window: Optional[Iterable] = None,
                         name: str = "") -> Multiplier:
    m = Multiplier(A, rho1, rho2, name)
    labels = list(window) if window is not None else A.labels()
    w = compatibility_witness(m, labels)
    if w is not None:
        raise CompatibilityViolation(f"rho2({w[0]})·{w[1]} != {w[0]}·rho1({w[1]})", w)
    return m


def mul_multipliers(r: Multiplier, s: Multiplier) -> Multiplier:
    if r.algebra is not s.algebra:
        raise BasisMismatch("multipliers of different algebras")
    return Multiplier(r.algebra, linmap(lambda l: r.rho1(s.rho1.on_basis(l))),
                      linmap(lambda l: s.rho2(r.rho2.on_basis(l))), f"{r.name}{s.name}")


def star_multiplier(r: Multiplier) -> Multiplier:
    A = r.algebra
    if not A.has_star:
        raise NoStar(f"{A.name} has no star")

    def conj_map(f):
        # f*(a) := f(a*)*
        return linmap(lambda l: A.star(f(A.star(Vec.basis(l)))))

    return Multiplier(A, conj_map(r.rho2), conj_map(r.rho1), f"{r.name}*")


def multiplier_ops(op: str, *args):
    """``mul(ρ, σ)``, ``star(ρ)``, ``apply_left(ρ, a)``, ``apply_right(a, ρ)``."""
    if op == "mul":
        return mul_multipliers(*args)
    if op == "star":
        return star_multiplier(*args)
    if op == "apply_left":
        r, a = args
        return r.rho1(a)
    if op == "apply_right":
        a, r = args
        return r.rho2(a)
    raise ValueError(f"unknown multiplier operation {op!r}")


def multipliers_agree(r: Multiplier, s: Multiplier, labels: Optional[Iterable] = None) -> Optional[tuple]:
    """First ``(component, label)`` where ``r`` and ``s`` differ."""
    labels = list(labels) if labels is not None else r.algebra.labels()
    for l in labels:
        if r.rho1.on_basis(l) != s.rho1.on_basis(l):
            return ("rho1", l)
        if r.rho2.on_basis(l) != s.rho2.on_basis(l):
            return ("rho2", l)
    return None


def multiplier_element(m: Multiplier) -> Optional[Vec]:
    """The element of a finite algebra represented by ``m`` (``None`` if the
    multiplier is not in ``A``)."""
    A = m.algebra
    if A.unit is not None:
        x = m.rho1(A.unit)
        return x if A.mul(A.unit, x) == x and multipliers_agree(embed(A, x), m) is None else None
    x = extractor(A, "left").solve(lambda b: m.rho1.on_basis(b))
    if x is None or multipliers_agree(embed(A, x), m) is not None:
        return None
    return x


def extend_morphism(phi: Callable[[Vec], Multiplier], A: Algebra, B: Algebra, m: Multiplier,
                    window_a: Optional[list] = None, window_b: Optional[list] = None) -> Multiplier:
    """Extension of a non-degenerate morphism ``φ: A → M(B)`` to ``M(A)``,
    evaluated at ``m``: ``φ̃(m)·(φ(a)b) = φ(m·a)b`` and ``(bφ(a))·φ̃(m) = bφ(a·m)``."""
    la = list(window_a) if window_a is not None else A.labels()
    lb = list(window_b) if window_b is not None else B.labels()
    gens_l, gens_r = [], []
    for a in la:
        pa = phi(Vec.basis(a))
        for b in lb:
            gens_l.append((a, b, pa.rho1.on_basis(b)))
            gens_r.append((a, b, pa.rho2.on_basis(b)))

    def solver(gens, side):
        cols = len(gens)
        keys: dict = {}
        rows: dict = {}
        for j, (_, _, v) in enumerate(gens):
            for c, x in v.items():
                rows.setdefault(keys.setdefault(c, len(keys)), {})[j] = x
        for c in lb:
            keys.setdefault(c, len(keys))
        shape = (len(keys), cols)
        if linalg.rank(rows, shape) < len(lb):
            raise NotNondegenerate("φ(A)B does not span B" if side == "l" else "Bφ(A) does not span B")

        def express(label):
            x = linalg.solve(rows, shape, {keys[label]: 1})
            if x is None:
                raise NotNondegenerate(f"{label} outside the span")
            return x
        return express

    exl, exr = solver(gens_l, "l"), solver(gens_r, "r")

    def rho1(label):
        out = Vec.zero()
        for j, c in exl(label).items():
            a, b, _ = gens_l[j]
            out = out + phi(m.rho1(Vec.basis(a))).rho1.on_basis(b).scale(c)
        return out

    def rho2(label):
        out = Vec.zero()
        for j, c in exr(label).items():
            a, b, _ = gens_r[j]
            out = out + phi(m.rho2(Vec.basis(a))).rho2.on_basis(b).scale(c)
        return out

    return Multiplier(B, linmap(rho1, "φ̃1"), linmap(rho2, "φ̃2"), f"φ̃({m.name})")


def scalar_multiplier(A: Algebra, c) -> Multiplier:
    f = linmap(lambda l: Vec.basis(l, c), f"{c}")
    return Multiplier(A, f, f, f"{c}")
