"""Pairings of regular multiplier Hopf algebras.

The four actions (legs of the coproduct sliced by the form):

* ``a ▷ b = (id⊗⟨a,·⟩)Δ(b)``     -- ``action("a_on_b_left", a, b)``
* ``b ◁ a = (⟨a,·⟩⊗id)Δ(b)``     -- ``action("a_on_b_right", b, a)``
* ``b ▷ a = (id⊗⟨·,b⟩)Δ(a)``     -- ``action("b_on_a_left", b, a)``
* ``a ◁ b = (⟨·,b⟩⊗id)Δ(a)``     -- ``action("b_on_a_right", a, b)``

``R = (id⊗⟨·,·⟩⊗id)(Δ_A⊗Δ_B)`` and its relatives are evaluated either
directly as multipliers of ``A⊗B`` (finite algebras) or through closed
formulas on action images (needs preimage witnesses).
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Optional

from . import linalg
from .algebra import Algebra, extractor, tensor_algebra
from .mha import Mha, SuiteConfig, cases, mha_suite, random_vec
from .report import Check, Report, guarded, mismatch, scan, skipped
from .scalar import Scalar, conj
from .tensor import (Functional, TensorVec, Vec, _acc, apply_on_legs, flip, permute_legs, tensor_product)

ACTIONS = ("a_on_b_left", "a_on_b_right", "b_on_a_left", "b_on_a_right")
R_MAPS = ("R", "R_inv", "Rtilde", "Rtilde_inv", "R_opop", "R_opop_inv")

# which side is the actor, which algebra is acted on
_ACTOR = {"a_on_b_left": "A", "a_on_b_right": "A", "b_on_a_left": "B", "b_on_a_right": "B"}


class NotPairingVerified(ValueError):
    pass


class MissingWitness(ValueError):
    pass


def _vec(x) -> Vec:
    return x if isinstance(x, Vec) else Vec.basis(x)


class Pairing:
    """Bilinear form ``⟨·,·⟩: A⊗B → k`` between two regular MHAs.

    Optional witnesses for lazy algebras:

    * ``cover_in_A(b)``: ``u ∈ A`` with ``⟨ux,b⟩ = ⟨x,b⟩ = ⟨xu,b⟩``;
      ``cover_in_B(a)`` likewise in ``B``.  Unital algebras default to 1.
    * ``preimages[kind](label)``: list of ``(coef, actor, target)`` with
      ``Σ coef·action(kind) = basis(label)``, where ``kind`` names the
      action as in :data:`ACTIONS`.
    """

    def __init__(self, A: Mha, B: Mha, form: Callable, *, name: str = "",
                 cover_in_A: Optional[Callable] = None, cover_in_B: Optional[Callable] = None,
                 preimages: Optional[dict] = None, default_window: Optional[int] = None):
        self.A = A
        self.B = B
        self._form = form
        self.name = name or f"⟨{A.name},{B.name}⟩"
        self._cover_in_A = cover_in_A
        self._cover_in_B = cover_in_B
        self._preimages = dict(preimages or {})
        self.default_window = default_window if default_window is not None else A.default_window
        self.status = "unverified"
        self._cache: dict = {}
        self._op_op: Optional["Pairing"] = None

    # -- basics
    @property
    def is_finite(self) -> bool:
        return self.A.is_finite and self.B.is_finite

    @property
    def star_mode(self) -> bool:
        return self.A.algebra.has_star and self.B.algebra.has_star

    def form(self, a_label, b_label) -> Scalar:
        return self._form(a_label, b_label)

    def eval(self, a: Vec, b: Vec) -> Scalar:
        s = 0
        for ka, ca in a.items():
            for kb, cb in b.items():
                v = self._form(ka, kb)
                if v != 0:
                    s = s + ca * cb * v
        return s

    def labels_A(self, window=None) -> list:
        return self.A.labels(window if window is not None else self.default_window)

    def labels_B(self, window=None) -> list:
        return self.B.labels(window if window is not None else self.default_window)

    def omega_a(self, a: Vec) -> Functional:
        """``⟨a,·⟩`` on ``B``."""
        a = _vec(a)
        return Functional(lambda l: self.eval(a, Vec.basis(l)), f"⟨{a!r},·⟩")

    def omega_b(self, b: Vec) -> Functional:
        """``⟨·,b⟩`` on ``A``."""
        b = _vec(b)
        return Functional(lambda l: self.eval(Vec.basis(l), b), f"⟨·,{b!r}⟩")

    def cover_in_A(self, b_label) -> Vec:
        if self._cover_in_A is not None:
            return self._cover_in_A(b_label)
        if self.A.algebra.unit is not None:
            return self.A.algebra.unit
        raise MissingWitness(f"{self.name}: no cover in A for ⟨·,{b_label}⟩")

    def cover_in_B(self, a_label) -> Vec:
        if self._cover_in_B is not None:
            return self._cover_in_B(a_label)
        if self.B.algebra.unit is not None:
            return self.B.algebra.unit
        raise MissingWitness(f"{self.name}: no cover in B for ⟨{a_label},·⟩")

    # -- actions
    def action_labels(self, which: str, x, y) -> Vec:
        key = (which, x, y)
        c = self._cache.setdefault("act", {})
        if key in c:
            return c[key]
        e = Vec.basis
        if which == "a_on_b_left":  # x=a, y=b
            v = self.cover_in_B(x)
            out = apply_on_legs(self.omega_a(e(x)), (1,), self.B.t("t1", e(y), v))
        elif which == "a_on_b_right":  # x=b, y=a
            v = self.cover_in_B(y)
            out = apply_on_legs(self.omega_a(e(y)), (0,), self.B.t("t2", v, e(x)))
        elif which == "b_on_a_left":  # x=b, y=a
            u = self.cover_in_A(x)
            out = apply_on_legs(self.omega_b(e(x)), (1,), self.A.t("t1", e(y), u))
        elif which == "b_on_a_right":  # x=a, y=b
            u = self.cover_in_A(y)
            out = apply_on_legs(self.omega_b(e(y)), (0,), self.A.t("t2", u, e(x)))
        else:
            raise ValueError(f"unknown action {which!r}")
        c[key] = out
        return out

    def action(self, which: str, x, y) -> Vec:
        """Bilinear action, arguments in written order (``x ▷ y`` / ``x ◁ y``)."""
        x, y = _vec(x), _vec(y)
        out = Vec.zero()
        for kx, cx in x.items():
            for ky, cy in y.items():
                out = out + self.action_labels(which, kx, ky).scale(cx * cy)
        return out

    # shorthands
    def a_on_b(self, a, b) -> Vec:
        return self.action("a_on_b_left", a, b)

    def b_by_a(self, b, a) -> Vec:
        return self.action("a_on_b_right", b, a)

    def b_on_a(self, b, a) -> Vec:
        return self.action("b_on_a_left", b, a)

    def a_by_b(self, a, b) -> Vec:
        return self.action("b_on_a_right", a, b)

    # -- preimage witnesses
    def preimage(self, kind: str, label) -> list:
        """``[(coef, actor, target), ...]`` realizing ``basis(label)`` as a sum of action images."""
        f = self._preimages.get(kind)
        if f is not None:
            return f(label)
        c = self._cache.setdefault("pre", {})
        if (kind, label) in c:
            return c[(kind, label)]
        out = self._solve_preimage(kind, label)
        c[(kind, label)] = out
        return out

    def _act_kind(self, kind, actor, target) -> Vec:
        if kind in ("a_on_b_left", "b_on_a_left"):
            return self.action(kind, actor, target)
        return self.action(kind, target, actor)

    def _solve_preimage(self, kind: str, label) -> list:
        actor_alg = self.A if _ACTOR[kind] == "A" else self.B
        target_alg = self.B if _ACTOR[kind] == "A" else self.A
        e = Vec.basis
        unit = actor_alg.algebra.unit
        if unit is not None and self._act_kind(kind, unit, e(label)) == e(label):
            return [(1, unit, e(label))]
        if not (actor_alg.is_finite and target_alg.is_finite):
            raise MissingWitness(f"{self.name}: no preimage witness for {kind} at {label}")
        key = ("premat", kind)
        if key not in self._cache:
            cols = [(x, y) for x in actor_alg.labels() for y in target_alg.labels()]
            tl = target_alg.labels()
            idx = {l: i for i, l in enumerate(tl)}
            rows: dict = {}
            for j, (x, y) in enumerate(cols):
                for k, v in self._act_kind(kind, e(x), e(y)).items():
                    rows.setdefault(idx[k], {})[j] = v
            self._cache[key] = (cols, rows, idx, (len(tl), len(cols)))
        cols, rows, idx, shape = self._cache[key]
        sol = linalg.solve(rows, shape, {idx[label]: 1})
        if sol is None:
            raise MissingWitness(f"{self.name}: {label} is not in the image of {kind}")
        return [(v, e(cols[j][0]), e(cols[j][1])) for j, v in sorted(sol.items())]

    def two_sided_preimage(self, label) -> list:
        """``[(coef, b, a0, b')]`` with ``Σ coef·(b ▷ a0 ◁ b') = basis(label)``."""
        out = []
        for c1, b2, a1 in self.preimage("b_on_a_right", label):
            for ka, ca in a1.items():
                for c2, b1, a0 in self.preimage("b_on_a_left", ka):
                    out.append((c1 * ca * c2, b1, a0, b2))
        return out

    def two_sided_preimage_B(self, label) -> list:
        """``[(coef, a, b0, a')]`` with ``Σ coef·(a ▷ b0 ◁ a') = basis(label)``."""
        out = []
        for c1, a2, b1 in self.preimage("a_on_b_right", label):
            for kb, cb in b1.items():
                for c2, a1, b0 in self.preimage("a_on_b_left", kb):
                    out.append((c1 * cb * c2, a1, b0, a2))
        return out

    # -- R maps
    def _contract(self, ta: TensorVec, leg_a: int, tb: TensorVec, leg_b: int, a_first: bool,
                  s_inv_on_a: bool = False) -> TensorVec:
        """Pair leg ``leg_a`` of ``ta`` (over A) with leg ``leg_b`` of ``tb`` (over B).

        The result keeps the remaining leg of the first tensor written
        (``ta`` if ``a_first``) followed by the remaining leg of the other.
        """
        if s_inv_on_a:
            ta = apply_on_legs(self.A.S_inv_map(), (leg_a,), ta)
        out: dict = {}
        ra, rb = 1 - leg_a, 1 - leg_b
        for ka, ca in ta.items():
            for kb, cb in tb.items():
                v = self._form(ka[leg_a], kb[leg_b])
                if v == 0:
                    continue
                lab = (ka[ra], kb[rb]) if a_first else (kb[rb], ka[ra])
                _acc(out, lab, ca * cb * v)
        return TensorVec._wrap(out, 2)

    def r_multiplier_action(self, which: str, x_label, cover, side: str) -> TensorVec:
        """``R(x)·(c⊗c')`` (side ``left``) or ``(c⊗c')·R(x)`` (side ``right``) for
        ``which`` in R, R_inv, Rtilde, Rtilde_inv (direct multiplier semantics)."""
        A, B = self.A, self.B
        inv = which.endswith("_inv")
        if which in ("R", "R_inv"):
            a, b = _vec(x_label[0]), _vec(x_label[1])
            c, c2 = _vec(cover[0]), _vec(cover[1])
            if side == "left":
                ta = flip(A.t("t_op1", a, c))         # a_(1) c ⊗ a_(2)
                tb = B.t("t1", b, c2)                 # b_(1) ⊗ b_(2) c'
                return self._contract(ta, 1, tb, 0, True, inv)
            ta = A.t("t2", c, a)                      # c a_(1) ⊗ a_(2)
            tb = flip(B.t("t_op2", c2, b))            # b_(1) ⊗ c' b_(2)
            return self._contract(ta, 1, tb, 0, True, inv)
        if which in ("Rtilde", "Rtilde_inv"):
            b, a = _vec(x_label[0]), _vec(x_label[1])
            c, c2 = _vec(cover[0]), _vec(cover[1])
            if side == "left":
                tb = flip(B.t("t_op1", b, c))         # b_(1) c ⊗ b_(2)
                ta = A.t("t1", a, c2)                 # a_(1) ⊗ a_(2) c'
                return self._contract(ta, 0, tb, 1, False, inv)
            tb = B.t("t2", c, b)                      # c b_(1) ⊗ b_(2)
            ta = flip(A.t("t_op2", c2, a))            # a_(1) ⊗ c' a_(2)
            return self._contract(ta, 0, tb, 1, False, inv)
        raise ValueError(f"no direct multiplier form for {which!r}")

    def _pair_algebra(self, which: str) -> Algebra:
        key = ("pairalg", which.startswith("Rtilde"))
        if key not in self._cache:
            algs = (self.B.algebra, self.A.algebra) if which.startswith("Rtilde") else (self.A.algebra, self.B.algebra)
            self._cache[key] = tensor_algebra(*algs)
        return self._cache[key]

    def _r_direct_label(self, which: str, x_label) -> TensorVec:
        if which in ("R_opop", "R_opop_inv"):
            return self.op_op()._r_direct_label("R" + which[6:], x_label)
        alg = self._pair_algebra(which)
        if alg.unit is not None:
            unit = alg.unit
            out = TensorVec.zero(2)
            for (u1, u2), c in unit.items():
                out = out + self.r_multiplier_action(which, x_label, (u1, u2), "left").scale(c)
            return out
        if not alg.is_finite:
            raise NotPairingVerified(f"{self.name}: direct evaluation of {which} needs a finite or unital algebra")
        ex = extractor(alg, "left")
        x = ex.solve(lambda l: Vec._wrap(dict(self.r_multiplier_action(which, x_label, l, "left").items())))
        if x is None:
            raise NotPairingVerified(f"{self.name}: {which}({x_label}) is not an element of the tensor product")
        return TensorVec._wrap(dict(x.items()), 2)

    def _r_fast_label(self, which: str, x_label) -> TensorVec:
        A, B = self.A, self.B
        e = Vec.basis
        out = TensorVec.zero(2)
        if which in ("R", "R_inv"):
            a, b2 = x_label
            for coef, c, a0 in self.preimage("b_on_a_left", a):
                if which == "R":
                    t = flip(B.t("t_op1", e(b2), c))                       # b'_(1) c ⊗ b'_(2)
                else:
                    t = apply_on_legs(B.S_inv_map(), (0,), B.t("t2", B.antipode(c), e(b2)))
                for (x0, x1), v in t.items():
                    out = out + tensor_product(self.b_on_a(x0, a0), e(x1)).scale(coef * v)
            return out
        if which in ("Rtilde", "Rtilde_inv"):
            b, a = x_label
            for coef, c, b0 in self.preimage("a_on_b_left", b):
                if which == "Rtilde":
                    t = flip(A.t("t_op1", e(a), c))                        # a_(1) c ⊗ a_(2)
                else:
                    t = apply_on_legs(A.S_inv_map(), (0,), A.t("t2", A.antipode(c), e(a)))
                for (x0, x1), v in t.items():
                    out = out + tensor_product(self.a_on_b(x0, b0), e(x1)).scale(coef * v)
            return out
        if which in ("R_opop", "R_opop_inv"):
            a, b2 = x_label
            for coef, c, a0 in self.preimage("b_on_a_right", a):
                if which == "R_opop":
                    t = B.t("t_op2", c, e(b2))                             # c b'_(2) ⊗ b'_(1)
                    for (y0, y1), v in t.items():
                        out = out + tensor_product(self.a_by_b(a0, y0), e(y1)).scale(coef * v)
                else:
                    t = apply_on_legs(B.S_inv_map(), (1,), B.t("t1", e(b2), B.antipode(c)))
                    for (z0, z1), v in t.items():                          # b'_(1) ⊗ c S⁻¹(b'_(2))
                        out = out + tensor_product(self.a_by_b(a0, z1), e(z0)).scale(coef * v)
            return out
        raise ValueError(f"unknown R map {which!r}")

    def r_map_label(self, which: str, x_label, strategy: str = "auto") -> TensorVec:
        if which not in R_MAPS:
            raise ValueError(f"unknown R map {which!r}")
        if strategy == "auto":
            strategy = "direct" if self.is_finite else "fast"
        key = (which, strategy)
        c = self._cache.setdefault("r", {})
        k2 = (key, x_label)
        if k2 in c:
            return c[k2]
        if strategy == "direct":
            out = self._r_direct_label(which, x_label)
        elif strategy == "fast":
            out = self._r_fast_label(which, x_label)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        c[k2] = out
        return out

    def r_map(self, which: str, x: TensorVec, strategy: str = "auto") -> TensorVec:
        out = TensorVec.zero(2)
        for k, v in x.items():
            out = out + self.r_map_label(which, k, strategy).scale(v)
        return out

    # -- derived pairing
    def op_op(self) -> "Pairing":
        """The same form on ``A^op_op ⊗ B^op_op``."""
        if self._op_op is None:
            swap = {"a_on_b_left": "a_on_b_right", "a_on_b_right": "a_on_b_left",
                    "b_on_a_left": "b_on_a_right", "b_on_a_right": "b_on_a_left"}
            pre = {swap[k]: f for k, f in self._preimages.items()}
            P = Pairing(self.A.op_op(), self.B.op_op(), self._form, name=f"{self.name}^op_op",
                        cover_in_A=self._cover_in_A, cover_in_B=self._cover_in_B, preimages=pre,
                        default_window=self.default_window)
            P._op_op = self
            P.status = self.status
            self._op_op = P
        return self._op_op

    def __repr__(self):
        return f"Pairing({self.name}, {self.status})"


def eval_pairing(P: Pairing, a: Vec, b: Vec) -> Scalar:
    return P.eval(a, b)


def action(P: Pairing, which: str, x, y) -> Vec:
    return P.action(which, x, y)


def r_map(P: Pairing, which: str, x: TensorVec, strategy: str = "auto") -> TensorVec:
    if which.endswith("_inv") and P.status != "pairing-verified" and not P._cache.get("trust"):
        raise NotPairingVerified(f"{P.name}: {which} needs a verified pairing")
    return P.r_map(which, x, strategy)


# ---------------------------------------------------------------------------
# verification


def _windows(P: Pairing, cfg: SuiteConfig):
    w = cfg.window if cfg.window is not None else P.default_window
    return P.labels_A(w), P.labels_B(w), w


def _star_t(alg: Algebra, t: TensorVec, algs=None) -> TensorVec:
    """``*⊗*`` (conjugate-linear) on a degree-2 tensor with per-leg algebras."""
    algs = algs or (alg, alg)
    out = TensorVec.zero(2)
    for (x, y), c in t.items():
        out = out + tensor_product(algs[0].star(Vec.basis(x)), algs[1].star(Vec.basis(y))).scale(conj(c))
    return out


def verify_prepairing(P: Pairing, cfg: Optional[SuiteConfig] = None) -> Report:
    """Slice axioms, module laws and (for non-degenerate forms) bimodule laws."""
    cfg = cfg or SuiteConfig()
    la, lb, w = _windows(P, cfg)
    rep = Report(f"pre-pairing: {P.name}", window=None if P.is_finite else w, seed=cfg.seed)
    A, B = P.A.algebra, P.B.algebra
    e = Vec.basis
    nm = P.name

    if P.is_finite:
        from .algebra import multiplier_element
        def in_B(a):
            for side in ("left", "right"):
                for b in lb:
                    m = P.B.slice(P.omega_a(e(a)), "right" if side == "left" else "left", e(b))
                    if multiplier_element(m) is None:
                        return f"slice of Δ({b}) by ⟨{a},·⟩ on the {side} is not in B"
            return None

        def in_A(b):
            for side in ("left", "right"):
                for a in la:
                    m = P.A.slice(P.omega_b(e(b)), "right" if side == "left" else "left", e(a))
                    if multiplier_element(m) is None:
                        return f"slice of Δ({a}) by ⟨·,{b}⟩ on the {side} is not in A"
            return None
        rep.add(scan(f"{nm}: slices by ⟨a,·⟩ land in B", la, in_B))
        rep.add(scan(f"{nm}: slices by ⟨·,b⟩ land in A", lb, in_A))
    else:
        rep.add(scan(f"{nm}: cover witnesses are two-sided units for the form", itertools.product(la, lb),
                     lambda p: _cover_ok(P, *p)))

    rep.add(scan(f"{nm}: ⟨a, a'▷b⟩ = ⟨a', b◁a⟩ = ⟨aa', b⟩", [(x, y, b) for (x, y) in cases(la, 2, cfg, "p3") for b in lb][: _cap(cfg, len(la) ** 2 * len(lb))],
                 lambda t: _three(P.eval(e(t[0]), P.a_on_b(t[1], t[2])), P.eval(e(t[1]), P.b_by_a(t[2], t[0])),
                                  P.eval(A.mul(e(t[0]), e(t[1])), e(t[2])))))
    rep.add(scan(f"{nm}: ⟨b'▷a, b⟩ = ⟨a◁b, b'⟩ = ⟨a, bb'⟩",
                 [(x, y, a) for (x, y) in cases(lb, 2, cfg, "p4") for a in la][: _cap(cfg, len(lb) ** 2 * len(la))],
                 lambda t: _three(P.eval(P.b_on_a(t[1], t[2]), e(t[0])), P.eval(P.a_by_b(t[2], t[0]), e(t[1])),
                                  P.eval(e(t[2]), B.mul(e(t[0]), e(t[1]))))))

    tri_aab = [(x, y, b) for (x, y) in cases(la, 2, cfg, "maab") for b in lb][: _cap(cfg, len(la) ** 2 * len(lb))]
    tri_bba = [(x, y, a) for (x, y) in cases(lb, 2, cfg, "mbba") for a in la][: _cap(cfg, len(lb) ** 2 * len(la))]
    rep.add(scan(f"{nm}: left A-module, (aa')▷b = a▷(a'▷b)", tri_aab,
                 lambda t: mismatch(P.a_on_b(A.mul(e(t[0]), e(t[1])), t[2]), P.a_on_b(t[0], P.a_on_b(t[1], t[2])))))
    rep.add(scan(f"{nm}: right A-module, b◁(aa') = (b◁a)◁a'", tri_aab,
                 lambda t: mismatch(P.b_by_a(t[2], A.mul(e(t[0]), e(t[1]))), P.b_by_a(P.b_by_a(t[2], t[0]), t[1]))))
    rep.add(scan(f"{nm}: left B-module, (bb')▷a = b▷(b'▷a)", tri_bba,
                 lambda t: mismatch(P.b_on_a(B.mul(e(t[0]), e(t[1])), t[2]), P.b_on_a(t[0], P.b_on_a(t[1], t[2])))))
    rep.add(scan(f"{nm}: right B-module, a◁(bb') = (a◁b)◁b'", tri_bba,
                 lambda t: mismatch(P.a_by_b(t[2], B.mul(e(t[0]), e(t[1]))), P.a_by_b(P.a_by_b(t[2], t[0]), t[1]))))
    rep.add(scan(f"{nm}: bimodule, (b▷a)◁b' = b▷(a◁b')", tri_bba,
                 lambda t: mismatch(P.a_by_b(P.b_on_a(t[0], t[2]), t[1]), P.b_on_a(t[0], P.a_by_b(t[2], t[1])))))
    rep.add(scan(f"{nm}: bimodule, (a▷b)◁a' = a▷(b◁a')", tri_aab,
                 lambda t: mismatch(P.b_by_a(P.a_on_b(t[0], t[2]), t[1]), P.a_on_b(t[0], P.b_by_a(t[2], t[1])))))
    return rep


def _cap(cfg: SuiteConfig, total: int) -> int:
    return total if cfg.sample is None else min(total, cfg.sample)


def _three(x, y, z):
    if x == y == z:
        return None
    return f"{x} / {y} / {z}"


def _cover_ok(P: Pairing, a, b) -> Optional[str]:
    e = Vec.basis
    u = P.cover_in_A(b)
    A, B = P.A.algebra, P.B.algebra
    if P.eval(A.mul(u, e(a)), e(b)) != P.eval(e(a), e(b)) or P.eval(A.mul(e(a), u), e(b)) != P.eval(e(a), e(b)):
        return f"cover {u!r} of ⟨·,{b}⟩ fails at {a}"
    v = P.cover_in_B(a)
    if P.eval(e(a), B.mul(v, e(b))) != P.eval(e(a), e(b)) or P.eval(e(a), B.mul(e(b), v)) != P.eval(e(a), e(b)):
        return f"cover {v!r} of ⟨{a},·⟩ fails at {b}"
    return None


def _rank_of(vectors: list, labels: list) -> int:
    idx = {l: i for i, l in enumerate(labels)}
    rows: dict = {}
    for j, v in enumerate(vectors):
        for k, c in v.items():
            if k not in idx:
                idx[k] = len(idx)
            rows.setdefault(idx[k], {})[j] = c
    return linalg.rank(rows, (max(len(idx), 1), max(len(vectors), 1)))


def six_conditions(P: Pairing) -> dict:
    """The six equivalent surjectivity/bijectivity conditions, each decided
    independently on a finite example.  Values are ``(ok, witness)``."""
    if not P.is_finite:
        raise ValueError("six_conditions needs finite algebras")
    la, lb = P.labels_A(), P.labels_B()
    out = {}

    def surj(kind, target_labels):
        if kind == "b_on_a_left":
            vs = [P.b_on_a(b, a) for b in lb for a in la]
        elif kind == "b_on_a_right":
            vs = [P.a_by_b(a, b) for a in la for b in lb]
        elif kind == "a_on_b_left":
            vs = [P.a_on_b(a, b) for a in la for b in lb]
        else:
            vs = [P.b_by_a(b, a) for b in lb for a in la]
        r = _rank_of(vs, target_labels)
        return (r == len(target_labels), None if r == len(target_labels) else f"rank {r} < {len(target_labels)}")

    def bij(which, pairs):
        vs = []
        for p in pairs:
            try:
                vs.append(Vec._wrap(dict(P.r_map_label(which, p, "direct").items())))
            except Exception as exc:
                return (False, f"{which}({p}) is not in the tensor product: {exc}")
        r = _rank_of(vs, pairs)
        return (r == len(pairs), None if r == len(pairs) else f"rank {r} < {len(pairs)}")

    ab = [(a, b) for a in la for b in lb]
    ba = [(b, a) for b in lb for a in la]
    out["(1) R(A⊗B) = A⊗B"] = bij("R", ab)
    out["(2) b▷a surjective"] = surj("b_on_a_left", la)
    out["(3) b◁a surjective"] = surj("a_on_b_right", lb)
    out["(4) R~(B⊗A) = B⊗A"] = bij("Rtilde", ba)
    out["(5) a▷b surjective"] = surj("a_on_b_left", lb)
    out["(6) a◁b surjective"] = surj("b_on_a_right", la)
    return out


def verify_pairing(P: Pairing, cfg: Optional[SuiteConfig] = None) -> Report:
    """The six equivalent conditions (finite) or inverse contracts (lazy),
    plus the star conditions in star mode.  Marks ``P`` verified on success."""
    cfg = cfg or SuiteConfig()
    la, lb, w = _windows(P, cfg)
    rep = Report(f"pairing: {P.name}", window=None if P.is_finite else w, seed=cfg.seed)
    e = Vec.basis
    nm = P.name
    if P.is_finite:
        conds = six_conditions(P)
        for k, (ok, wit) in conds.items():
            rep.add(Check(f"{nm}: condition {k}", "pass" if ok else "fail", wit, 1))
        vals = [ok for ok, _ in conds.values()]
        agree = all(vals) or not any(vals)
        rep.add(Check(f"{nm}: the six conditions agree", "pass" if agree else "fail",
                      None if agree else repr({k: v[0] for k, v in conds.items()}), 6))
        ok_all = all(vals)
    else:
        ok_all = True
        for kind, ls in (("b_on_a_left", la), ("b_on_a_right", la), ("a_on_b_left", lb), ("a_on_b_right", lb)):
            def wit(l, kind=kind):
                s = Vec.zero()
                for c, x, y in P.preimage(kind, l):
                    s = s + P._act_kind(kind, x, y).scale(c)
                return mismatch(s, e(l))
            c = rep.add(scan(f"{nm}: {kind} surjective (witnessed on window)", ls, wit))
            ok_all = ok_all and c.ok
    ab = [(a, b) for a in la for b in lb]
    ba = [(b, a) for b in lb for a in la]
    pairs_ab = ab if cfg.sample is None else random.Random(cfg.seed).sample(ab, min(cfg.sample, len(ab)))
    pairs_ba = ba if cfg.sample is None else random.Random(cfg.seed + 1).sample(ba, min(cfg.sample, len(ba)))
    if ok_all:
        for which, ps in (("R", pairs_ab), ("Rtilde", pairs_ba), ("R_opop", pairs_ab)):
            def inv(p, which=which):
                x = TensorVec.basis(p)
                m = mismatch(P.r_map(which + "_inv", P.r_map(which, x)), x)
                return m or mismatch(P.r_map(which, P.r_map(which + "_inv", x)), x)
            c = rep.add(scan(f"{nm}: {which} bijective with the closed-form inverse", ps, inv))
            ok_all = ok_all and c.ok
    else:
        rep.add(skipped(f"{nm}: R inverse formulas", "the surjectivity conditions fail"))
    if P.star_mode:
        for c in star_conditions(P, la, lb):
            rep.add(c)
    P.status = "pairing-verified" if rep.ok and ok_all else "prepairing"
    return rep


def star_conditions(P: Pairing, la=None, lb=None) -> list:
    A, B = P.A, P.B
    la = la if la is not None else P.labels_A()
    lb = lb if lb is not None else P.labels_B()
    e = Vec.basis
    pairs = list(itertools.product(la, lb))
    c1 = scan(f"{P.name}: star condition ⟨a*,b⟩ = conj⟨a,S(b)*⟩", pairs,
              lambda p: mismatch(P.eval(A.algebra.star(e(p[0])), e(p[1])),
                                 conj(P.eval(e(p[0]), B.algebra.star(B.antipode(e(p[1])))))))
    c2 = scan(f"{P.name}: star condition ⟨a,b*⟩ = conj⟨S(a)*,b⟩", pairs,
              lambda p: mismatch(P.eval(e(p[0]), B.algebra.star(e(p[1]))),
                                 conj(P.eval(A.algebra.star(A.antipode(e(p[0]))), e(p[1])))))
    return [c1, c2]


def op_op_pairing(P: Pairing) -> Pairing:
    if P.status != "pairing-verified":
        raise NotPairingVerified(f"{P.name} is not pairing-verified")
    return P.op_op()


# ---------------------------------------------------------------------------
# invariant suite


def pairing_suite(P: Pairing, cfg: Optional[SuiteConfig] = None) -> Report:
    """Identities that hold for a (non-degenerate) pairing of regular MHAs."""
    cfg = cfg or SuiteConfig()
    la, lb, w = _windows(P, cfg)
    rep = Report(f"pairing suite: {P.name}", window=None if P.is_finite else w, seed=cfg.seed)
    A, B = P.A, P.B
    mA, mB = A.algebra.mul, B.algebra.mul
    e = Vec.basis
    nm = P.name
    SA, SB = A.S_map(), B.S_map()
    SAi, SBi = A.S_inv_map(), B.S_inv_map()

    def trip(l1, l2, l3, salt):
        full = [(x, y, z) for x in l1 for y in l2 for z in l3]
        if cfg.sample is None or cfg.sample >= len(full):
            return full
        return random.Random(f"{cfg.seed}:{salt}").sample(full, cfg.sample)

    def pairs(l1, l2, salt):
        full = [(x, y) for x in l1 for y in l2]
        if cfg.sample is None or cfg.sample >= len(full):
            return full
        return random.Random(f"{cfg.seed}:{salt}").sample(full, cfg.sample)

    # adjointness
    bab = trip(lb, la, lb, "adj1")
    aab = trip(la, la, lb, "adj2")
    rep.add(scan(f"{nm}: ⟨b▷a, b'⟩ = ⟨a, b'b⟩", bab,
                 lambda t: mismatch(P.eval(P.b_on_a(t[0], t[1]), e(t[2])), P.eval(e(t[1]), mB(e(t[2]), e(t[0]))))))
    rep.add(scan(f"{nm}: ⟨a◁b, b'⟩ = ⟨a, bb'⟩", bab,
                 lambda t: mismatch(P.eval(P.a_by_b(t[1], t[0]), e(t[2])), P.eval(e(t[1]), mB(e(t[0]), e(t[2]))))))
    rep.add(scan(f"{nm}: ⟨a, a'▷b⟩ = ⟨aa', b⟩", aab,
                 lambda t: mismatch(P.eval(e(t[0]), P.a_on_b(t[1], t[2])), P.eval(mA(e(t[0]), e(t[1])), e(t[2])))))
    rep.add(scan(f"{nm}: ⟨a, b◁a'⟩ = ⟨a'a, b⟩", aab,
                 lambda t: mismatch(P.eval(e(t[0]), P.b_by_a(t[2], t[1])), P.eval(mA(e(t[1]), e(t[0])), e(t[2])))))

    # coproducts of actions, as covered identities
    rep.add(guarded(f"{nm}: coproduct of actions", lambda: _action_coproducts(P, la, lb, cfg)))

    # Hopf-type compatibilities
    quads = [(a, a2, b, b2) for (a, a2) in pairs(la, la, "q1") for (b, b2) in pairs(lb, lb, "q2")]
    if cfg.sample is not None:
        quads = random.Random(f"{cfg.seed}:quad").sample(quads, min(cfg.sample, len(quads)))
    rep.add(scan(f"{nm}: ⟨T2(a⊗a'), b⊗b'⟩ = ⟨a⊗a', T1(b⊗b')⟩", quads,
                 lambda q: mismatch(_pair2(P, A.t("t2", q[0], q[1]), TensorVec.basis((q[2], q[3]))),
                                    _pair2(P, TensorVec.basis((q[0], q[1])), B.t("t1", q[2], q[3])))))
    ab = pairs(la, lb, "ab")
    rep.add(scan(f"{nm}: ⟨S(a), b⟩ = ⟨a, S(b)⟩", ab,
                 lambda p: mismatch(P.eval(SA(e(p[0])), e(p[1])), P.eval(e(p[0]), SB(e(p[1]))))))
    ba = pairs(lb, la, "ba")
    rep.add(scan(f"{nm}: S(b▷a) = S(a)◁S⁻¹(b)", ba,
                 lambda p: mismatch(SA(P.b_on_a(p[0], p[1])), P.a_by_b(SA(e(p[1])), SBi(e(p[0]))))))
    rep.add(scan(f"{nm}: S⁻¹(b▷a) = S⁻¹(a)◁S(b)", ba,
                 lambda p: mismatch(SAi(P.b_on_a(p[0], p[1])), P.a_by_b(SAi(e(p[1])), SB(e(p[0]))))))
    rep.add(scan(f"{nm}: S(a▷b) = S(b)◁S⁻¹(a)", ab,
                 lambda p: mismatch(SB(P.a_on_b(p[0], p[1])), P.b_by_a(SB(e(p[1])), SAi(e(p[0]))))))
    rep.add(scan(f"{nm}: S⁻¹(a▷b) = S⁻¹(b)◁S(a)", ab,
                 lambda p: mismatch(SBi(P.a_on_b(p[0], p[1])), P.b_by_a(SBi(e(p[1])), SA(e(p[0]))))))

    # non-degeneracy of the actions
    def nondeg(kind, targets, actors):
        def test(t):
            for x in actors:
                if not P._act_kind(kind, e(x), e(t)).is_zero():
                    return None
            return f"every actor kills {t}"
        return scan(f"{nm}: {kind} non-degenerate", targets, test)
    rep.add(nondeg("a_on_b_left", lb, la))
    rep.add(nondeg("a_on_b_right", lb, la))
    rep.add(nondeg("b_on_a_left", la, lb))
    rep.add(nondeg("b_on_a_right", la, lb))

    # star compatibilities
    if P.star_mode:
        sA, sB = A.algebra.star, B.algebra.star
        rep.add(scan(f"{nm}: (a◁b)* = a*◁S(b)*", ab,
                     lambda p: mismatch(sA(P.a_by_b(p[0], p[1])), P.a_by_b(sA(e(p[0])), sB(SB(e(p[1])))))))
        rep.add(scan(f"{nm}: (b▷a)* = S(b)*▷a*", ba,
                     lambda p: mismatch(sA(P.b_on_a(p[0], p[1])), P.b_on_a(sB(SB(e(p[0]))), sA(e(p[1]))))))
        rep.add(scan(f"{nm}: (b◁a)* = b*◁S(a)*", ba,
                     lambda p: mismatch(sB(P.b_by_a(p[0], p[1])), P.b_by_a(sB(e(p[0])), sA(SA(e(p[1])))))))
        rep.add(scan(f"{nm}: (a▷b)* = S(a)*▷b*", ab,
                     lambda p: mismatch(sB(P.a_on_b(p[0], p[1])), P.a_on_b(sA(SA(e(p[0]))), sB(e(p[1]))))))

    # R maps on action images
    for c in _lemma_r(P, la, lb, cfg, trip):
        rep.add(c)

    # R and R_opop commute, antipode intertwining
    def r(which, x):
        return P.r_map(which, x)
    tabs = [TensorVec.basis(p) for p in ab]
    rep.add(scan(f"{nm}: R∘R_opop = R_opop∘R", tabs,
                 lambda x: mismatch(r("R", r("R_opop", x)), r("R_opop", r("R", x)))))
    for sgn, (f, g) in (("+", (SA, SBi)), ("-", (SAi, SB))):
        def ss(t, f=f, g=g):
            return apply_on_legs(g, (1,), apply_on_legs(f, (0,), t))
        rep.add(scan(f"{nm}: R_opop∘(S^{sgn}⊗S^{'-' if sgn == '+' else '+'}) = (S⊗S)∘R (sign {sgn})", tabs,
                     lambda x, ss=ss: mismatch(r("R_opop", ss(x)), ss(r("R", x)))))
    if P.star_mode:
        pa = (A.algebra, B.algebra)
        for which in ("R", "R_opop"):
            rep.add(scan(f"{nm}: {which}∘(*⊗*) = (*⊗*)∘{which}⁻¹", tabs,
                         lambda x, which=which: mismatch(r(which, _star_t(None, x, pa)),
                                                         _star_t(None, r(which + "_inv", x), pa))))
            rep.add(scan(f"{nm}: {which}⁻¹∘(*⊗*) = (*⊗*)∘{which}", tabs,
                         lambda x, which=which: mismatch(r(which + "_inv", _star_t(None, x, pa)),
                                                         _star_t(None, r(which, x), pa))))

    # R intertwines the actions with the opposite canonical maps
    def inter1(t):
        b, a, b2 = t
        lhs = r("R", tensor_product(P.b_on_a(b, a), e(b2)))
        x = TensorVec.basis((a, b, b2))
        tt = _flip_map_on(B, "t_op1")
        x = apply_on_legs(tt, (1, 2), x)
        x = permute_legs(x, (1, 0, 2))
        rhs = TensorVec.zero(2)
        for (bb, aa, b3), c in x.items():
            rhs = rhs + tensor_product(P.b_on_a(bb, aa), e(b3)).scale(c)
        return mismatch(lhs, rhs)
    rep.add(scan(f"{nm}: R∘(▷⊗id) = (▷⊗id)(τ⊗id)(id⊗τT_op1τ)(τ⊗id)", trip(lb, la, lb, "int1"), inter1))

    def inter2(t):
        a, b, a2 = t
        lhs = r("R", tensor_product(e(a), P.b_by_a(b, a2)))
        x = TensorVec.basis((a, b, a2))
        x = permute_legs(x, (0, 2, 1))                   # a ⊗ a'' ⊗ b
        x = apply_on_legs(_flip_map_on(A, "t_op2"), (0, 1), x)
        x = permute_legs(x, (0, 2, 1))
        rhs = TensorVec.zero(2)
        for (aa, bb, a3), c in x.items():
            rhs = rhs + tensor_product(e(aa), P.b_by_a(bb, a3)).scale(c)
        return mismatch(lhs, rhs)
    rep.add(scan(f"{nm}: R∘(id⊗◁) = (id⊗◁)(id⊗τ)(τT_op2τ⊗id)(id⊗τ)", trip(la, lb, la, "int2"), inter2))

    # the two evaluation strategies agree
    if P.is_finite:
        for which in R_MAPS:
            src = ab if not which.startswith("Rtilde") else ba
            rep.add(scan(f"{nm}: {which} direct = closed form", src,
                         lambda p, which=which: mismatch(P.r_map_label(which, p, "direct"),
                                                         P.r_map_label(which, p, "fast"))))
    else:
        rep.add(guarded(f"{nm}: closed-form R maps act as the multipliers they define",
                        lambda: _lazy_r_windows(P, la, lb, cfg)))
    return rep


def _flip_map_on(H: Mha, which: str):
    """``τ∘T∘τ`` for a canonical map of ``H``."""
    from .tensor import linmap
    f = H.T(which)
    return linmap(lambda l: flip(TensorVec._wrap(dict(f.on_basis((l[1], l[0])).items()), 2)), f"τ{which}τ", 2)


def _pair2(P: Pairing, ta: TensorVec, tb: TensorVec) -> Scalar:
    s = 0
    for (a1, a2), ca in ta.items():
        for (b1, b2), cb in tb.items():
            v = P.form(a1, b1) * P.form(a2, b2)
            if v != 0:
                s = s + ca * cb * v
    return s


def _action_coproducts(P: Pairing, la, lb, cfg: SuiteConfig) -> Check:
    """``Δ(a▷b) = (id⊗a▷·)Δ(b)`` and its three siblings on each side,
    tested against random covers."""
    A, B = P.A, P.B
    rng = random.Random(f"{cfg.seed}:coprod")
    e = Vec.basis
    trials = []
    for _ in range(cfg.random_cases):
        trials.append((rng.choice(la), rng.choice(lb), random_vec(rng, la), random_vec(rng, la),
                       random_vec(rng, lb), random_vec(rng, lb)))

    def test(t):
        a, b, x1, x2, y1, y2 = t
        oa, ob = P.omega_a(e(a)), P.omega_b(e(b))
        v, u = P.cover_in_B(a), P.cover_in_A(b)
        # B side: Δ(a▷b)(y1⊗y2) = b_(1)y1 ⊗ (a▷b_(2))y2
        lhs = B.delta_apply(P.a_on_b(a, b), tensor_product(y1, y2))
        rhs = apply_on_legs(oa, (2,), B.delta_n_covered(e(b), [(0, "right", y1), (1, "right", y2), (2, "right", v)], 2))
        if lhs != rhs:
            return f"Δ(a▷b): {lhs!r} vs {rhs!r}"
        # Δ(b◁a)(y1⊗y2) = (b_(1)◁a)y1 ⊗ b_(2)y2
        lhs = B.delta_apply(P.b_by_a(b, a), tensor_product(y1, y2))
        rhs = apply_on_legs(oa, (0,), B.delta_n_covered(e(b), [(0, "left", v), (1, "right", y1), (2, "right", y2)], 2))
        if lhs != rhs:
            return f"Δ(b◁a): {lhs!r} vs {rhs!r}"
        # Δ(b▷a)(x1⊗x2) = a_(1)x1 ⊗ (b▷a_(2))x2
        lhs = A.delta_apply(P.b_on_a(b, a), tensor_product(x1, x2))
        rhs = apply_on_legs(ob, (2,), A.delta_n_covered(e(a), [(0, "right", x1), (1, "right", x2), (2, "right", u)], 2))
        if lhs != rhs:
            return f"Δ(b▷a): {lhs!r} vs {rhs!r}"
        # Δ(a◁b)(x1⊗x2) = (a_(1)◁b)x1 ⊗ a_(2)x2
        lhs = A.delta_apply(P.a_by_b(a, b), tensor_product(x1, x2))
        rhs = apply_on_legs(ob, (0,), A.delta_n_covered(e(a), [(0, "left", u), (1, "right", x1), (2, "right", x2)], 2))
        if lhs != rhs:
            return f"Δ(a◁b): {lhs!r} vs {rhs!r}"
        # opposite coproduct versions: Δ^op(a▷b)(y1⊗y2) = (a▷b_(2))y1 ⊗ b_(1)y2
        lhs = flip(B.delta_apply(P.a_on_b(a, b), tensor_product(y2, y1)))
        rhs = flip(apply_on_legs(oa, (2,), B.delta_n_covered(e(b), [(0, "right", y2), (1, "right", y1), (2, "right", v)], 2)))
        if lhs != rhs:
            return f"Δ^op(a▷b): {lhs!r} vs {rhs!r}"
        lhs = flip(B.delta_apply(P.b_by_a(b, a), tensor_product(y2, y1)))
        rhs = flip(apply_on_legs(oa, (0,), B.delta_n_covered(e(b), [(0, "left", v), (1, "right", y2), (2, "right", y1)], 2)))
        if lhs != rhs:
            return f"Δ^op(b◁a): {lhs!r} vs {rhs!r}"
        return None

    return scan(f"{P.name}: coproduct of actions, Δ(a▷b) = (id⊗a▷·)Δ(b) and siblings", trials, test)


def _lemma_r(P: Pairing, la, lb, cfg: SuiteConfig, trip) -> list:
    """R maps on action images against the Sweedler closed forms."""
    A, B = P.A, P.B
    e = Vec.basis
    nm = P.name
    r = P.r_map
    SA, SB, SBi = A.S_map(), B.S_map(), B.S_inv_map()
    SAi = A.S_inv_map()
    out = []

    def tb(b2, c):
        return flip(B.t("t_op1", e(b2), c))        # b'_(1)c ⊗ b'_(2)

    def R1(t):
        b, a, b2 = t
        lhs = r("R", tensor_product(P.b_on_a(b, a), e(b2)))
        rhs = _sum_tensor((P.b_on_a(x0, a), e(x1), v) for (x0, x1), v in tb(b2, e(b)).items())
        return mismatch(lhs, rhs)

    def R2(t):
        b, a, b2 = t
        lhs = r("R_inv", tensor_product(P.b_on_a(b, a), e(b2)))
        tt = apply_on_legs(SBi, (0,), B.t("t2", SB(e(b)), e(b2)))       # S⁻¹(b'_(1))b ⊗ b'_(2)
        rhs = _sum_tensor((P.b_on_a(x0, a), e(x1), v) for (x0, x1), v in tt.items())
        return mismatch(lhs, rhs)

    def R3(t):
        a, b, a2 = t
        lhs = r("R", tensor_product(e(a), P.b_by_a(b, a2)))
        tt = _a_prime_a2(A, e(a2), e(a))   # a_(1) ⊗ a' a_(2)
        rhs = _sum_tensor((e(x0), P.b_by_a(b, x1), v) for (x0, x1), v in tt.items())
        return mismatch(lhs, rhs)

    def R4(t):
        a, b, a2 = t
        lhs = r("R_inv", tensor_product(e(a), P.b_by_a(b, a2)))
        # a_(1) ⊗ S⁻¹(a_(2)S(a')) = a_(1) ⊗ a' S⁻¹(a_(2))
        tt = apply_on_legs(SAi, (1,), A.t("t1", e(a), SA(e(a2))))
        rhs = _sum_tensor((e(x0), P.b_by_a(b, x1), v) for (x0, x1), v in tt.items())
        return mismatch(lhs, rhs)

    def O1(t):
        a, b, b2 = t
        lhs = r("R_opop", tensor_product(P.a_by_b(a, b), e(b2)))
        tt = B.t("t_op2", e(b), e(b2))                                    # b b'_(2) ⊗ b'_(1)
        rhs = _sum_tensor((P.a_by_b(a, y0), e(y1), v) for (y0, y1), v in tt.items())
        return mismatch(lhs, rhs)

    def O2(t):
        a, b, b2 = t
        lhs = r("R_opop_inv", tensor_product(P.a_by_b(a, b), e(b2)))
        tt = apply_on_legs(SBi, (1,), B.t("t1", e(b2), SB(e(b))))          # b'_(1) ⊗ b S⁻¹(b'_(2))
        rhs = _sum_tensor((P.a_by_b(a, z1), e(z0), v) for (z0, z1), v in tt.items())
        return mismatch(lhs, rhs)

    def O3(t):
        a, a2, b = t
        lhs = r("R_opop", tensor_product(e(a), P.a_on_b(a2, b)))
        tt = flip(A.t("t_op1", e(a), e(a2)))                               # a_(1)a' ⊗ a_(2)
        rhs = _sum_tensor((e(x1), P.a_on_b(x0, b), v) for (x0, x1), v in tt.items())
        return mismatch(lhs, rhs)

    def O4(t):
        a, a2, b = t
        lhs = r("R_opop_inv", tensor_product(e(a), P.a_on_b(a2, b)))
        tt = apply_on_legs(SAi, (0,), A.t("t2", SA(e(a2)), e(a)))          # S⁻¹(a_(1))a' ⊗ a_(2)
        rhs = _sum_tensor((e(x1), P.a_on_b(x0, b), v) for (x0, x1), v in tt.items())
        return mismatch(lhs, rhs)

    bab, aba, abb, aab = trip(lb, la, lb, "l1"), trip(la, lb, la, "l2"), trip(la, lb, lb, "l3"), trip(la, la, lb, "l4")
    out.append(scan(f"{nm}: R(b▷a⊗b') = (b'_(1)b)▷a⊗b'_(2)", bab, R1))
    out.append(scan(f"{nm}: R⁻¹(b▷a⊗b') = S⁻¹(S(b)b'_(1))▷a⊗b'_(2)", bab, R2))
    out.append(scan(f"{nm}: R(a⊗b◁a') = a_(1)⊗b◁(a'a_(2))", aba, R3))
    out.append(scan(f"{nm}: R⁻¹(a⊗b◁a') = a_(1)⊗b◁S⁻¹(a_(2)S(a'))", aba, R4))
    out.append(scan(f"{nm}: R_opop(a◁b⊗b') = a◁(bb'_(2))⊗b'_(1)", abb, O1))
    out.append(scan(f"{nm}: R_opop⁻¹(a◁b⊗b') = a◁S⁻¹(b'_(2)S(b))⊗b'_(1)", abb, O2))
    out.append(scan(f"{nm}: R_opop(a⊗a'▷b) = a_(2)⊗(a_(1)a')▷b", aab, O3))
    out.append(scan(f"{nm}: R_opop⁻¹(a⊗a'▷b) = a_(2)⊗S⁻¹(S(a')a_(1))▷b", aab, O4))
    return out


def _a_prime_a2(A: Mha, a2: Vec, a: Vec) -> TensorVec:
    """``a_(1) ⊗ a' a_(2)`` = ``τ((a'⊗1)... )``: computed as ``τT_op2(a'⊗a)``."""
    return flip(A.canonical_map("t_op2", tensor_product(a2, a)))


def _sum_tensor(terms) -> TensorVec:
    out = TensorVec.zero(2)
    for x, y, c in terms:
        out = out + tensor_product(x, y).scale(c)
    return out


def _lazy_r_windows(P: Pairing, la, lb, cfg: SuiteConfig) -> Check:
    """Closed-form ``R``, ``R̃`` (and inverses) against their defining multiplier action."""
    from .algebra import mul_leg
    A, B = P.A.algebra, P.B.algebra
    e = Vec.basis
    small = max(1, (cfg.window or 4) // 2)
    ca, cb = P.labels_A(small), P.labels_B(small)
    items = []
    for which in ("R", "R_inv", "Rtilde", "Rtilde_inv"):
        src = [(a, b) for a in la for b in lb] if not which.startswith("Rtilde") else [(b, a) for b in lb for a in la]
        rng = random.Random(f"{cfg.seed}:lazyR:{which}")
        items += [(which, p) for p in rng.sample(src, min(len(src), cfg.random_cases))]

    def test(item):
        which, p = item
        F = P.r_map_label(which, p, "fast")
        algs = (B, A) if which.startswith("Rtilde") else (A, B)
        c1s, c2s = (cb, ca) if which.startswith("Rtilde") else (ca, cb)
        for c1 in c1s:
            for c2 in c2s:
                left = mul_leg(algs[1], mul_leg(algs[0], F, 0, e(c1), "right"), 1, e(c2), "right")
                if left != P.r_multiplier_action(which, p, (c1, c2), "left"):
                    return f"right cover ({c1},{c2})"
                right = mul_leg(algs[1], mul_leg(algs[0], F, 0, e(c1), "left"), 1, e(c2), "left")
                if right != P.r_multiplier_action(which, p, (c1, c2), "right"):
                    return f"left cover ({c1},{c2})"
        return None

    return scan(f"{P.name}: closed-form R maps act as the multipliers they define", items, test)


def pairing_full_report(P: Pairing, cfg: Optional[SuiteConfig] = None) -> Report:
    """Suites of both algebras, pre-pairing checks, the pairing conditions
    and the invariant suite."""
    cfg = cfg or SuiteConfig()
    rep = Report(f"pairing report: {P.name}", seed=cfg.seed)
    for H in (P.A, P.B):
        rep.extend(mha_suite(H, cfg))
    pre = verify_prepairing(P, cfg)
    rep.extend(pre)
    ver = verify_pairing(P, cfg)
    rep.extend(ver)
    rep.window = ver.window
    if P.status == "pairing-verified":
        rep.extend(pairing_suite(P, cfg))
    else:
        rep.add(skipped(f"{P.name}: pairing invariant suite", "pairing conditions not verified"))
    return rep
