"""Multiplier Hopf algebras given by their canonical maps T1, T2.

``T1(a⊗a') = Δ(a)(1⊗a')`` and ``T2(a⊗a') = (a⊗1)Δ(a')``.  The coproduct is
never materialized; it acts through :func:`Mha.delta_apply`, slices and
the covered Sweedler engine :meth:`Mha.delta_n_covered`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

from . import linalg
from .algebra import (Algebra, Multiplier, check_associative, check_nondegenerate,
                      check_star, extractor, mul_leg, multiplier_element, tensor_algebra)
from .report import Check, Report, guarded, mismatch, scan, skipped
from .scalar import Scalar
from .tensor import (Functional, LinMap, TensorVec, Vec, _acc, apply_on_legs, flip, label_key, linmap)


class NotRegular(ValueError):
    pass


class NotInvertible(ValueError):
    pass


class InconsistentCounit(ValueError):
    pass


class InconsistentAntipode(ValueError):
    pass


class InsufficientCover(ValueError):
    pass


MAPS = ("t1", "t2", "t1_inv", "t2_inv", "t_op1", "t_op2", "t_op1_inv", "t_op2_inv")


@dataclass
class SuiteConfig:
    """How thoroughly to verify.  ``sample=None`` means exhaustive."""

    window: Optional[int] = None
    sample: Optional[int] = None
    seed: int = 0
    random_cases: int = 20
    sample_triples: Optional[int] = None  # overrides ``sample`` for tuples of length ≥ 3


def cases(labels: Sequence, k: int, cfg: SuiteConfig, salt: str = ""):
    """All ``k``-tuples of labels, or a seeded random sample of them."""
    labels = list(labels)
    total = len(labels) ** k
    n = cfg.sample_triples if k >= 3 and cfg.sample_triples is not None else cfg.sample
    if n is None or n >= total:
        return list(itertools.product(labels, repeat=k))
    rng = random.Random(f"{cfg.seed}:{salt}:{k}")
    return [tuple(rng.choice(labels) for _ in range(k)) for _ in range(n)]


def _pair_map(f: Callable, name: str) -> LinMap:
    """LinMap on pair labels from a callable ``f(x, y) -> TensorVec``."""
    return linmap(lambda l: f(l[0], l[1]), name, out_degree=2)


def _compose(*fs: LinMap, name: str = "") -> LinMap:
    """``fs[0] ∘ fs[1] ∘ ...`` (rightmost applied first)."""
    fs = list(fs)

    def ev(label):
        v = fs[-1].on_basis(label)
        for f in reversed(fs[:-1]):
            v = f(v)
        return v

    return linmap(ev, name, out_degree=getattr(fs[0], "out_degree", None))


def _flip_map() -> LinMap:
    return linmap(lambda l: TensorVec._wrap({(l[1], l[0]): 1}, 2), "τ", out_degree=2, memo=False)


def _on_leg(f: LinMap, leg: int, name: str = "") -> LinMap:
    """``f`` acting on one leg of a degree-2 tensor."""
    def ev(label):
        return apply_on_legs(f, (leg,), TensorVec._wrap({label: 1}, 2))
    return linmap(ev, name or f"{f.name}@{leg}", out_degree=2)


def _tensor_from(v) -> TensorVec:
    if isinstance(v, TensorVec):
        return v
    return TensorVec(dict(v.items()), 2) if v else TensorVec.zero(2)


def _matrix(f: LinMap, labels: list):
    idx = {l: i for i, l in enumerate(labels)}
    rows: dict = {}
    for j, l in enumerate(labels):
        for k, v in f.on_basis(l).items():
            if k not in idx:
                raise NotInvertible(f"{f.name}({l}) leaves the basis at {k}")
            rows.setdefault(idx[k], {})[j] = v
    return rows, idx


def _invert(f: LinMap, labels: list, name: str, degree: Optional[int] = None) -> LinMap:
    rows, idx = _matrix(f, labels)
    n = len(labels)
    try:
        inv = linalg.inverse(rows, n)
    except linalg.Singular as exc:
        raise NotInvertible(f"{f.name} is not bijective: {exc}") from None
    cols: dict = {}
    for i, r in inv.items():
        for j, v in r.items():
            cols.setdefault(j, {})[labels[i]] = v
    if degree:
        return linmap(lambda l: TensorVec._wrap(dict(cols.get(idx[l], {})), degree), name, out_degree=degree)
    return linmap(lambda l: Vec._wrap(dict(cols.get(idx[l], {}))), name)


class Mha:
    """A multiplier Hopf algebra presented by ``(A, T1, T2)``.

    Finite handles solve for ``T1⁻¹, T2⁻¹, ε, S, S⁻¹`` exactly; lazy handles
    need them supplied (``counit``, ``antipode``, ``antipode_inv`` as
    callables on basis labels) and only verify them on windows.
    """

    def __init__(self, algebra: Algebra, t1, t2, *, t1_inv=None, t2_inv=None,
                 counit: Optional[Callable] = None, antipode: Optional[Callable] = None,
                 antipode_inv: Optional[Callable] = None,
                 left_integral: Optional[Functional] = None, right_integral: Optional[Functional] = None,
                 name: str = "", default_window: Optional[int] = None):
        self.algebra = algebra
        self.name = name or algebra.name
        self.maps: dict = {}
        self.maps["t1"] = t1 if isinstance(t1, LinMap) else _pair_map(t1, "T1")
        self.maps["t2"] = t2 if isinstance(t2, LinMap) else _pair_map(t2, "T2")
        for key, f in (("t1_inv", t1_inv), ("t2_inv", t2_inv)):
            if f is not None:
                self.maps[key] = f if isinstance(f, LinMap) else _pair_map(f, key)
        self._counit = counit
        self._antipode = antipode
        self._antipode_inv = antipode_inv
        self.left_integral = left_integral
        self.right_integral = right_integral
        self.default_window = default_window
        self._cache: dict = {}

    # -- basics
    @property
    def is_finite(self) -> bool:
        return self.algebra.is_finite

    def labels(self, window: Optional[int] = None) -> list:
        return self.algebra.labels(window if window is not None else self.default_window)

    def pair_labels(self, window: Optional[int] = None) -> list:
        ls = self.labels(window)
        return [(a, b) for a in ls for b in ls]

    def mul(self, x: Vec, y: Vec) -> Vec:
        return self.algebra.mul(x, y)

    @property
    def square(self) -> Algebra:
        sq = self._cache.get("square")
        if sq is None:
            sq = self._cache["square"] = tensor_algebra(self.algebra, self.algebra)
        return sq

    # -- canonical maps
    def T(self, which: str) -> LinMap:
        f = self.maps.get(which)
        if f is not None:
            return f
        if which not in MAPS:
            raise ValueError(f"unknown canonical map {which!r}")
        if which in ("t1_inv", "t2_inv"):
            if not self.is_finite:
                raise NotInvertible(f"{self.name}: {which} must be supplied for a lazy algebra")
            f = _invert(self.T(which[:2]), self.pair_labels(), which.upper(), 2)
        else:
            s, si = self.S_map(), self.S_inv_map()
            tau = _flip_map()
            if which == "t_op1":
                f = _compose(_on_leg(si, 1), tau, self.T("t2_inv"), tau, _on_leg(s, 1), name="T_op1")
            elif which == "t_op2":
                f = _compose(_on_leg(si, 0), tau, self.T("t1_inv"), tau, _on_leg(s, 0), name="T_op2")
            elif which == "t_op1_inv":
                f = _compose(_on_leg(si, 1), tau, self.T("t2"), tau, _on_leg(s, 1), name="T_op1⁻¹")
            else:
                f = _compose(_on_leg(si, 0), tau, self.T("t1"), tau, _on_leg(s, 0), name="T_op2⁻¹")
        self.maps[which] = f
        return f

    def canonical_map(self, which: str, x: TensorVec) -> TensorVec:
        return _tensor_from(self.T(which)(x))

    def t(self, which: str, a, b) -> TensorVec:
        """Canonical map on a pair of labels or vectors."""
        if isinstance(a, Vec) or isinstance(b, Vec):
            from .tensor import tensor_product
            a = a if isinstance(a, Vec) else Vec.basis(a)
            b = b if isinstance(b, Vec) else Vec.basis(b)
            return self.canonical_map(which, tensor_product(a, b))
        return _tensor_from(self.T(which).on_basis((a, b)))

    # -- counit and antipode
    def counit_label(self, label) -> Scalar:
        c = self._cache.setdefault("eps", {})
        if label in c:
            return c[label]
        if self._counit is not None:
            val = self._counit(label)
        else:
            val = self._extract_counit(label)
        c[label] = val
        return val

    def _extract_counit(self, label) -> Scalar:
        lam = None
        for b in self.labels():
            y = self.m(self.t("t1_inv", label, b))
            lam_b = y.coeff(b)
            if y != Vec.basis(b, lam_b):
                raise InconsistentCounit(f"{self.name}: m T1⁻¹({label}⊗{b}) = {y!r} is not a multiple of {b}")
            if lam is None:
                lam = lam_b
            elif lam_b != lam:
                raise InconsistentCounit(f"{self.name}: probes disagree for ε({label}): {lam} vs {lam_b} at {b}")
        return lam if lam is not None else 0

    def counit(self, a: Vec) -> Scalar:
        s = 0
        for k, c in a.items():
            e = self.counit_label(k)
            if e != 0:
                s = s + c * e
        return s

    def counit_functional(self) -> Functional:
        return Functional(self.counit_label, "ε")

    def m(self, t: TensorVec) -> Vec:
        """Multiplication ``A⊗A → A``."""
        d: dict = {}
        A = self.algebra
        for (x, y), c in t.items():
            for k, v in A.mul_labels(x, y).items():
                _acc(d, k, c * v)
        return Vec._wrap(d)

    def S_map(self) -> LinMap:
        f = self._cache.get("S")
        if f is None:
            if self._antipode is not None:
                f = linmap(self._antipode, "S")
            else:
                f = linmap(self._extract_antipode, "S")
            self._cache["S"] = f
        return f

    def _extract_antipode(self, label) -> Vec:
        eps = self.counit_functional()

        def target(b):
            return apply_on_legs(eps, (0,), self.t("t1_inv", label, b))

        A = self.algebra
        if A.unit is not None:
            s = Vec.zero()
            for u, c in A.unit.items():
                s = s + target(u).scale(c)
            bad = next((b for b in self.labels() if A.mul(s, Vec.basis(b)) != target(b)), None)
        else:
            s = extractor(A, "left").solve(target)
            bad = None if s is not None else "no solution"
        if s is None or bad is not None:
            raise InconsistentAntipode(f"{self.name}: S({label}) not determined consistently (probe {bad})")
        return s

    def S_inv_map(self) -> LinMap:
        f = self._cache.get("S_inv")
        if f is None:
            if self._antipode_inv is not None:
                f = linmap(self._antipode_inv, "S⁻¹")
            elif self.is_finite:
                try:
                    f = _invert(self.S_map(), self.labels(), "S⁻¹")
                except NotInvertible as exc:
                    raise NotRegular(f"{self.name}: antipode not invertible ({exc})") from None
            else:
                raise NotRegular(f"{self.name}: S⁻¹ must be supplied for a lazy algebra")
            self._cache["S_inv"] = f
        return f

    def antipode(self, a: Vec, power: int = 1) -> Vec:
        if power == 1:
            return self.S_map()(a)
        if power == -1:
            return self.S_inv_map()(a)
        raise ValueError("power must be +1 or -1")

    # -- coproduct actions
    def delta_apply(self, a: Vec, t: TensorVec, side: str = "left") -> TensorVec:
        """``Δ(a)(x⊗y)`` (side ``left``) or ``(x⊗y)Δ(a)`` (side ``right``)."""
        A = self.algebra
        out = TensorVec.zero(2)
        for (x, y), c in t.items():
            if side == "left":
                r = mul_leg(A, self.t("t1", a, Vec.basis(y)), 0, Vec.basis(x), "right")
            elif side == "right":
                r = mul_leg(A, self.t("t2", Vec.basis(x), a), 1, Vec.basis(y), "left")
            else:
                raise ValueError(f"side must be left or right, not {side!r}")
            out = out + r.scale(c)
        return out

    def delta_multiplier(self, a: Vec) -> Multiplier:
        """``Δ(a)`` as a multiplier of ``A⊗A``."""
        sq = self.square

        def r1(l):
            return Vec._wrap(dict(self.delta_apply(a, TensorVec._wrap({l: 1}, 2), "left").items()))

        def r2(l):
            return Vec._wrap(dict(self.delta_apply(a, TensorVec._wrap({l: 1}, 2), "right").items()))

        return Multiplier(sq, linmap(r1, "Δ·"), linmap(r2, "·Δ"), f"Δ({a!r})")

    def slice(self, omega: Functional, side: str, a: Vec) -> Multiplier:
        """``(id⊗ω)Δ(a)`` (side ``right``) or ``(ω⊗id)Δ(a)`` (side ``left``)."""
        A = self.algebra
        e = Vec.basis
        if side == "right":
            def r1(l):
                return apply_on_legs(omega, (1,), flip(self.t("t_op1", a, e(l))))

            def r2(l):
                return apply_on_legs(omega, (1,), self.t("t2", e(l), a))
        elif side == "left":
            def r1(l):
                return apply_on_legs(omega, (0,), self.t("t1", a, e(l)))

            def r2(l):
                return apply_on_legs(omega, (0,), flip(self.t("t_op2", e(l), a)))
        else:
            raise ValueError(f"side must be left or right, not {side!r}")
        return Multiplier(A, linmap(r1), linmap(r2), f"slice_{side}({omega.name})")

    def slice_element(self, omega: Functional, side: str, a: Vec) -> Vec:
        """The slice as an element of ``A``, using the cover of ``ω`` if any."""
        if omega.cover is not None:
            u = omega.cover
            if side == "left":
                return apply_on_legs(omega, (0,), self.t("t2", u, a))
            return apply_on_legs(omega, (1,), self.t("t1", a, u))
        x = multiplier_element(self.slice(omega, side, a))
        if x is None:
            raise InsufficientCover(f"slice of {a!r} by {omega.name} is not in {self.name}")
        return x

    def delta_n_covered(self, a: Vec, covers, n: int, order: str = "left"):
        """``Δ⁽ⁿ⁾(a)`` with covered legs multiplied in (legs numbered from 0).

        ``covers`` is a list of ``(leg, side, element)``; ``side`` is ``left``
        (element multiplies from the left) or ``right``.  At most one leg may
        stay uncovered.  ``n = -1`` gives ``ε(a)``; ``order`` picks which end
        is peeled first when both are covered.
        """
        if n < -1:
            raise ValueError("n must be at least -1")
        if n == -1:
            return self.counit(a)
        cov: dict = {}
        for leg, side, x in covers:
            if not 0 <= leg <= n:
                raise InsufficientCover(f"cover on leg {leg} outside 0..{n}")
            if side not in ("left", "right"):
                raise ValueError(f"cover side must be left or right, not {side!r}")
            cov.setdefault(leg, []).append((side, x))
        free = [i for i in range(n + 1) if i not in cov]
        if len(free) > 1:
            raise InsufficientCover(f"legs {free} are uncovered; at most one free leg gives a finite tensor")
        legs = [cov.get(i, []) for i in range(n + 1)]
        return self._covered(a, legs, order)

    def _apply_covers(self, v: Vec, cs) -> Vec:
        A = self.algebra
        for side, x in cs:
            v = A.mul(x, v) if side == "left" else A.mul(v, x)
        return v

    def _covered(self, a: Vec, legs: list, order: str):
        n = len(legs) - 1
        if n == 0:
            return self._apply_covers(a, legs[0])
        first_ok, last_ok = bool(legs[0]), bool(legs[-1])
        peel_first = first_ok and (order == "left" or not last_ok)
        if not (first_ok or last_ok):
            raise InsufficientCover("both end legs are uncovered")
        out: dict = {}
        if peel_first:
            (side, c), rest = legs[0][0], legs[0][1:]
            t = flip(self.t("t_op1", a, c)) if side == "right" else self.t("t2", c, a)
            for (p, q), coef in t.items():
                head = self._apply_covers(Vec.basis(p), rest)
                tail = self._covered(Vec.basis(q), legs[1:], order)
                self._glue(out, head, tail, coef, first=True)
        else:
            (side, c), rest = legs[-1][0], legs[-1][1:]
            t = self.t("t1", a, c) if side == "right" else flip(self.t("t_op2", c, a))
            for (p, q), coef in t.items():
                tail = self._apply_covers(Vec.basis(q), rest)
                head = self._covered(Vec.basis(p), legs[:-1], order)
                self._glue(out, head, tail, coef, first=False)
        return TensorVec._wrap(out, n + 1)

    @staticmethod
    def _glue(out: dict, head: Vec, tail: Vec, coef, first: bool) -> None:
        # first=True: head is one leg, tail a block; else head is the block
        for k1, c1 in head.items():
            k1 = (k1,) if head.degree is None else k1
            for k2, c2 in tail.items():
                k2 = (k2,) if tail.degree is None else k2
                _acc(out, k1 + k2, coef * c1 * c2)

    # -- derived handles
    def co_opposite(self) -> "Mha":
        """``(A, Δ^op)`` with its own generically derived counit and antipode."""
        return Mha(self.algebra, self.T("t_op1"), self.T("t_op2"),
                   t1_inv=self.T("t_op1_inv"), t2_inv=self.T("t_op2_inv"),
                   name=f"{self.name}_op", default_window=self.default_window)

    def op_op(self) -> "Mha":
        """Opposite product and opposite coproduct."""
        A = self.algebra
        Aop = Algebra(f"{A.name}^op", A.basis, lambda x, y: A.mul_labels(y, x), A.unit, A.star_basis)
        tau = _flip_map()
        t1 = _compose(tau, self.T("t2"), tau, name="T1'")
        t2 = _compose(tau, self.T("t1"), tau, name="T2'")
        kw = {}
        if "t1_inv" in self.maps or self.is_finite:
            kw["t2_inv"] = _compose(tau, self.T("t1_inv"), tau, name="T2'⁻¹")
        if "t2_inv" in self.maps or self.is_finite:
            kw["t1_inv"] = _compose(tau, self.T("t2_inv"), tau, name="T1'⁻¹")
        return Mha(Aop, t1, t2, counit=self.counit_label, antipode=self.S_map().on_basis,
                   antipode_inv=self.S_inv_map().on_basis,
                   left_integral=self.right_integral, right_integral=self.left_integral,
                   name=f"{self.name}^op_op", default_window=self.default_window, **kw)

    def __repr__(self):
        return f"Mha({self.name})"


def canonical_map(H: Mha, which: str, x: TensorVec) -> TensorVec:
    return H.canonical_map(which, x)


def delta_apply(H: Mha, a: Vec, t: TensorVec, side: str = "left") -> TensorVec:
    return H.delta_apply(a, t, side)


def counit(H: Mha, a: Vec) -> Scalar:
    return H.counit(a)


def antipode(H: Mha, a: Vec, power: int = 1) -> Vec:
    return H.antipode(a, power)


def slice(H: Mha, omega: Functional, side: str, a: Vec) -> Multiplier:  # noqa: A001
    return H.slice(omega, side, a)


def delta_n_covered(H: Mha, a: Vec, covers, n: int, order: str = "left"):
    return H.delta_n_covered(a, covers, n, order)


# ---------------------------------------------------------------------------
# integrals


@dataclass(frozen=True)
class Integral:
    side: str  # left | right
    functional: Functional


def check_integral(H: Mha, I: Integral, window: Optional[int] = None, cfg: Optional[SuiteConfig] = None) -> Check:
    """Left: ``(id⊗φ)T2(a⊗a') = a·φ(a')``.  Right: ``(id⊗ψ)T_op2(a⊗a') = a·ψ(a')``."""
    cfg = cfg or SuiteConfig(window=window)
    ls = H.labels(window if window is not None else cfg.window)
    f = I.functional
    which = "t2" if I.side == "left" else "t_op2"

    def test(p):
        a, b = p
        return mismatch(apply_on_legs(f, (1,), H.t(which, a, b)), Vec.basis(a, f.on_basis(b)))

    return scan(f"{H.name}: {I.side} integral {f.name}", cases(ls, 2, cfg, "int"), test)


# ---------------------------------------------------------------------------
# verification suite


def _in_basis(H: Mha, t: Vec) -> Optional[str]:
    for k in t.labels():
        for x in (k if isinstance(k, tuple) and t.degree else (k,)):
            if x not in H.algebra.basis:
                return f"label {x!r} outside the basis"
    return None


def random_vec(rng: random.Random, labels: Sequence, terms: int = 2, lo: int = -3, hi: int = 3) -> Vec:
    d: dict = {}
    for _ in range(terms):
        _acc(d, rng.choice(labels), rng.randint(lo, hi) or 1)
    return Vec._wrap(d)


def random_functional(rng: random.Random, labels: Sequence, algebra: Optional[Algebra] = None) -> Functional:
    """Random functional with finite support.  Given a lazy ``algebra`` it
    also gets a cover: the unit, a local unit for its support, or else the
    sum of its support labels; the cover is checked on ``labels`` before use."""
    vals = {l: rng.randint(-2, 2) for l in rng.sample(list(labels), min(3, len(labels)))}
    f = lambda l: vals.get(l, 0)
    cover = None
    if algebra is not None and not algebra.is_finite:
        cover = algebra.unit_for(vals)
        if cover is None:
            cover = Vec({l: 1 for l in vals})
        for x in labels:
            ex = Vec.basis(x)
            w = f(x)
            if Functional(f)(algebra.mul(cover, ex)) != w or Functional(f)(algebra.mul(ex, cover)) != w:
                raise InsufficientCover(f"{cover!r} does not cover the random functional at {x}")
    return Functional(f, f"ω{sorted(vals.items(), key=lambda kv: label_key(kv[0]))}", cover)


def mha_suite(H: Mha, cfg: Optional[SuiteConfig] = None) -> Report:
    """Every generic invariant of a (regular) multiplier Hopf algebra."""
    cfg = cfg or SuiteConfig()
    window = cfg.window if cfg.window is not None else H.default_window
    rep = Report(f"mha suite: {H.name}", window=None if H.is_finite else window, seed=cfg.seed)
    A = H.algebra
    ls = H.labels(window)
    e = Vec.basis
    nm = H.name

    if H.is_finite and cfg.sample is None:
        rep.add(check_associative(A, ls))
    else:
        rep.add(scan(f"{A.name}: associativity", cases(ls, 3, cfg, "assoc"),
                     lambda t: mismatch(A.mul(A.mul(e(t[0]), e(t[1])), e(t[2])),
                                        A.mul(e(t[0]), A.mul(e(t[1]), e(t[2]))))))
    rep.add(guarded(f"{A.name}: non-degenerate product", lambda: check_nondegenerate(A, ls)))
    if A.has_star:
        for c in check_star(A, ls):
            rep.add(c)

    pairs = cases(ls, 2, cfg, "pairs")
    rep.add(scan(f"{nm}: T1, T2 land in A⊗A", pairs,
                 lambda p: _in_basis(H, H.t("t1", *p)) or _in_basis(H, H.t("t2", *p))))

    def coassoc(t):
        a, b, c = t
        lhs = apply_on_legs(H.T("t2"), (0, 1), apply_on_legs(H.T("t1"), (1, 2), TensorVec.basis((a, b, c))))
        rhs = apply_on_legs(H.T("t1"), (1, 2), apply_on_legs(H.T("t2"), (0, 1), TensorVec.basis((a, b, c))))
        return mismatch(lhs, rhs)

    rep.add(scan(f"{nm}: mixed coassociativity (T2⊗id)(id⊗T1) = (id⊗T1)(T2⊗id)",
                 cases(ls, 3, cfg, "coassoc"), coassoc))

    for w in ("t1", "t2"):
        def inv_test(p, w=w):
            x = TensorVec.basis(p)
            m = mismatch(H.canonical_map(w + "_inv", H.canonical_map(w, x)), x)
            return m or mismatch(H.canonical_map(w, H.canonical_map(w + "_inv", x)), x)
        rep.add(scan(f"{nm}: {w.upper()} bijective", pairs, inv_test))

    rep.add(scan(f"{nm}: Δ multiplicative, T1(ab⊗c) = Δ(a)·T1(b⊗c)", cases(ls, 3, cfg, "mult"),
                 lambda t: mismatch(H.t("t1", A.mul(e(t[0]), e(t[1])), e(t[2])),
                                    H.delta_apply(e(t[0]), H.t("t1", t[1], t[2]), "left"))))
    rep.add(scan(f"{nm}: Δ multiplicative, T2(a⊗bc) = T2(a⊗b)·Δ(c)", cases(ls, 3, cfg, "mult2"),
                 lambda t: mismatch(H.t("t2", e(t[0]), A.mul(e(t[1]), e(t[2]))),
                                    H.delta_apply(e(t[2]), H.t("t2", t[0], t[1]), "right"))))

    eps = H.counit_functional()
    rep.add(scan(f"{nm}: counit well defined", ls, lambda a: H.counit_label(a) is not None))
    rep.add(scan(f"{nm}: (ε⊗id)T1(a⊗b) = ab", pairs,
                 lambda p: mismatch(apply_on_legs(eps, (0,), H.t("t1", *p)), A.mul(e(p[0]), e(p[1])))))
    rep.add(scan(f"{nm}: (id⊗ε)T2(a⊗b) = ab", pairs,
                 lambda p: mismatch(apply_on_legs(eps, (1,), H.t("t2", *p)), A.mul(e(p[0]), e(p[1])))))
    rep.add(scan(f"{nm}: m(S⊗id)T1(a⊗b) = ε(a)b", pairs,
                 lambda p: mismatch(H.m(apply_on_legs(H.S_map(), (0,), H.t("t1", *p))),
                                    e(p[1], H.counit_label(p[0])))))
    rep.add(scan(f"{nm}: m(id⊗S)T2(a⊗b) = ε(b)a", pairs,
                 lambda p: mismatch(H.m(apply_on_legs(H.S_map(), (1,), H.t("t2", *p))),
                                    e(p[0], H.counit_label(p[1])))))
    rep.add(scan(f"{nm}: S bijective", ls,
                 lambda a: mismatch(H.antipode(H.antipode(e(a)), -1), e(a))
                 or mismatch(H.antipode(H.antipode(e(a), -1)), e(a))))
    rep.add(scan(f"{nm}: (id⊗ε)T_op1(a⊗b) = ε(b)a", pairs,
                 lambda p: mismatch(apply_on_legs(eps, (1,), H.t("t_op1", *p)),
                                    e(p[0], H.counit_label(p[1])))))
    rep.add(scan(f"{nm}: T_op1, T_op2 bijective", pairs,
                 lambda p: mismatch(H.canonical_map("t_op1_inv", H.t("t_op1", *p)), TensorVec.basis(p))
                 or mismatch(H.canonical_map("t_op2_inv", H.t("t_op2", *p)), TensorVec.basis(p))))

    if H.is_finite:
        def opposite():
            op = H.co_opposite()
            c1 = scan(f"{nm}: ε_op = ε", ls, lambda a: mismatch(op.counit_label(a), H.counit_label(a)))
            c2 = scan(f"{nm}: S_op = S⁻¹", ls, lambda a: mismatch(op.antipode(e(a)), H.antipode(e(a), -1)))
            return c1, c2
        try:
            for c in opposite():
                rep.add(c)
        except Exception as exc:
            rep.add(Check(f"{nm}: co-opposite is a multiplier Hopf algebra", "fail", f"{type(exc).__name__}: {exc}"))
    else:
        rep.add(skipped(f"{nm}: ε_op = ε, S_op = S⁻¹", "generic extraction needs a finite basis"))

    if A.has_star:
        star2 = lambda t: _tensor_from(_star_legs(A, t))
        rep.add(scan(f"{nm}: Δ is a *-map, (*⊗*)T2(x⊗a) = τT_op1(a*⊗x*)", pairs,
                     lambda p: mismatch(star2(H.t("t2", *p)),
                                        flip(H.t("t_op1", A.star(e(p[1])), A.star(e(p[0])))))))
        rep.add(scan(f"{nm}: Δ is a *-map, (*⊗*)T1(a⊗y) = τT_op2(y*⊗a*)", pairs,
                     lambda p: mismatch(star2(H.t("t1", *p)),
                                        flip(H.t("t_op2", A.star(e(p[1])), A.star(e(p[0])))))))

    rep.add(guarded(f"{nm}: slice lemma (ω⊗id⊗id)(id⊗Δ)Δ(a) = Δ((ω⊗id)Δ(a))",
                    lambda: _slice_lemma(H, ls, cfg, "left")))
    rep.add(guarded(f"{nm}: slice lemma (id⊗id⊗ω)(Δ⊗id)Δ(a) = Δ((id⊗ω)Δ(a))",
                    lambda: _slice_lemma(H, ls, cfg, "right")))

    if H.left_integral is not None:
        rep.add(check_integral(H, Integral("left", H.left_integral), cfg=replace(cfg, window=window)))
    if H.right_integral is not None:
        rep.add(check_integral(H, Integral("right", H.right_integral), cfg=replace(cfg, window=window)))
    return rep


def _star_legs(A: Algebra, t: TensorVec) -> TensorVec:
    from .scalar import conj
    out = TensorVec.zero(t.degree)
    for k, c in t.items():
        parts = [A.star(Vec.basis(x)) for x in k]
        d = {(): conj(c)}
        for p in parts:
            nd = {}
            for k1, c1 in d.items():
                for k2, c2 in p.items():
                    nd[k1 + (k2,)] = c1 * c2
            d = nd
        out = out + TensorVec._wrap(d, t.degree)
    return out


def _slice_lemma(H: Mha, ls: list, cfg: SuiteConfig, side: str) -> Check:
    rng = random.Random(f"{cfg.seed}:slice:{side}")
    trials = []
    for _ in range(cfg.random_cases):
        trials.append((random_functional(rng, ls, H.algebra), random_vec(rng, ls), random_vec(rng, ls), random_vec(rng, ls)))

    def test(t):
        omega, a, x, y = t
        if side == "left":
            lhs = H.delta_n_covered(a, [(1, "right", x), (2, "right", y)], 2)
            lhs = apply_on_legs(omega, (0,), lhs)
            m = H.slice_element(omega, "left", a)
        else:
            lhs = H.delta_n_covered(a, [(0, "right", x), (1, "right", y)], 2)
            lhs = apply_on_legs(omega, (2,), lhs)
            m = H.slice_element(omega, "right", a)
        rhs = H.delta_apply(m, _tp(x, y), "left")
        return mismatch(_tensor_from(lhs), rhs)

    name = ("(ω⊗id⊗id)(id⊗Δ)Δ(a) = Δ((ω⊗id)Δ(a))" if side == "left"
            else "(id⊗id⊗ω)(Δ⊗id)Δ(a) = Δ((id⊗ω)Δ(a))")
    return scan(f"{H.name}: slice lemma {name}", trials, test)


def _tp(x: Vec, y: Vec) -> TensorVec:
    from .tensor import tensor_product
    return tensor_product(x, y)
