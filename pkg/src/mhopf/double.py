"""The quantum double ``D = A⊗B`` of a pairing.

Twist ``T = R∘(R_opop)⁻¹∘τ: B⊗A → A⊗B``, product
``m_D = (m_A⊗m_B)∘(id⊗T⊗id)``, canonical maps ``T^D_1, T^D_2`` as leg
composites of component maps, and lifts of multipliers into ``M(D)``.
"""
from __future__ import annotations

import random
from typing import Optional

from .algebra import Algebra, Multiplier, embed, tensor_algebra, unit_multiplier
from .mha import Mha, SuiteConfig, cases, mha_suite, random_vec
from .pairing import NotPairingVerified, Pairing
from .report import Check, Report, mismatch, scan, skipped
from .tensor import (Functional, LinMap, TensorVec, Vec, _acc, apply_on_legs, flip, linmap, tensor_product)

B3_NOTE = ("ambiguous index: the regrouping identity behind the acted expansions names an undeclared b_3; it is read as "
           "b_(2)(1) with the unbound leg b_(2)(2) contracted by the counit, which equals reading it as b_2")


class VerificationFailed(Exception):
    def __init__(self, report: Report):
        bad = report.failures()
        msg = f"{report.title}: " + (f"{bad[0].name} failed ({bad[0].witness})" if bad else "failed")
        super().__init__(msg)
        self.report = report


def _v(x) -> Vec:
    return x if isinstance(x, Vec) else Vec.basis(x)


def _as_vec(t) -> Vec:
    """Degree-2 tensor over pair labels seen as a vector of the double."""
    return Vec._wrap(dict(t.items()))


def _to4(t) -> TensorVec:
    d: dict = {}
    for ((a, b), (a2, b2)), c in t.items():
        _acc(d, (a, b, a2, b2), c)
    return TensorVec._wrap(d, 4)


def _from4(t: TensorVec) -> TensorVec:
    d: dict = {}
    for (a, b, a2, b2), c in t.items():
        _acc(d, ((a, b), (a2, b2)), c)
    return TensorVec._wrap(d, 2)


def _wrap2(f) -> LinMap:
    """A multiplier map on pair labels, returning degree-2 tensors."""
    return linmap(lambda l: TensorVec._wrap(dict(f.on_basis(l).items()), 2), getattr(f, "name", ""), 2)


class DoubleHandle:
    """The double of a pairing-verified :class:`Pairing`.

    ``strategy`` picks how the twist is evaluated on basis inputs: ``fast``
    (closed form on action images), ``composite`` (through the R maps) or
    ``auto`` (fast when action preimages are available).
    """

    def __init__(self, P: Pairing, strategy: str = "auto"):
        if P.status != "pairing-verified":
            raise NotPairingVerified(f"{P.name} is not pairing-verified")
        self.pairing = P
        self.A, self.B = P.A, P.B
        self.strategy = strategy
        self.name = f"D({P.A.name},{P.B.name})"
        self.notes: list = []
        self._cache: dict = {}
        self.T = linmap(lambda l: self.twist_label(l, "forward"), "T", 2)
        self.T_inv = linmap(lambda l: self.twist_label(l, "inverse"), "T⁻¹", 2)
        self.algebra = self._make_algebra()
        self.mha = self._make_mha()

    # -- twist
    def twist_label(self, label, direction: str = "forward", strategy: Optional[str] = None) -> TensorVec:
        strategy = strategy or self.strategy
        if strategy == "auto":
            strategy = "fast"
        key = (label, direction, strategy)
        c = self._cache.setdefault("twist", {})
        if key in c:
            return c[key]
        P = self.pairing
        if direction == "forward":
            b, a = label
            if strategy == "fast":
                out = self._twist_fast(b, a)
            else:
                out = P.r_map("R", P.r_map("R_opop_inv", TensorVec.basis((a, b))))
        elif direction == "inverse":
            rs = "fast" if strategy == "fast" else "auto"
            out = flip(P.r_map("R_opop", P.r_map("R_inv", TensorVec.basis(label), rs), rs))
        else:
            raise ValueError(f"direction must be forward or inverse, not {direction!r}")
        c[key] = out
        return out

    def _twist_fast(self, b2, a) -> TensorVec:
        """``T(b''⊗ b▷a0◁b') = (b''_(1)b)▷a0◁S⁻¹(b''_(3)S(b')) ⊗ b''_(2)``."""
        P, B = self.pairing, self.B
        out = TensorVec.zero(2)
        for coef, b, a0, bp in P.two_sided_preimage(a):
            t = B.delta_n_covered(Vec.basis(b2), [(0, "right", b), (2, "right", B.antipode(bp))], 2)
            for (x0, x1, x2), v in t.items():
                left = P.a_by_b(P.b_on_a(x0, a0), B.antipode(Vec.basis(x2), -1))
                out = out + tensor_product(left, Vec.basis(x1)).scale(coef * v)
        return out

    # -- algebra
    def _make_algebra(self) -> Algebra:
        A, B = self.A.algebra, self.B.algebra
        basis = A.basis.product(B.basis)
        T = self.T

        def mul(x, y):
            (a, b), (a2, b2) = x, y
            d: dict = {}
            for (p, q), c in T.on_basis((b, a2)).items():
                for k1, c1 in A.mul_labels(a, p).items():
                    for k2, c2 in B.mul_labels(q, b2).items():
                        _acc(d, (k1, k2), c * c1 * c2)
            return Vec._wrap(d)

        unit = None
        if A.unit is not None and B.unit is not None:
            unit = _as_vec(tensor_product(A.unit, B.unit))
        def star(x):
            a, b = x
            return _as_vec(T(tensor_product(B.star(Vec.basis(b)), A.star(Vec.basis(a)))))

        def local(ls):
            return _as_vec(tensor_product(A.unit_for([l[0] for l in ls]), B.unit))

        has_local = unit is None and B.unit is not None and (A.unit is not None or A.local_unit is not None)
        return Algebra(self.name, basis, mul, unit, star if A.has_star and B.has_star else None,
                       local if has_local else None)

    # -- canonical maps of D
    def _td(self, which: str, label) -> TensorVec:
        A, B, T, Ti = self.A, self.B, self.T, self.T_inv
        x = _to4(TensorVec.basis(label))
        if which == "t1":
            x = apply_on_legs(Ti, (2, 3), x)
            x = apply_on_legs(B.T("t_op1"), (1, 2), x)
            x = apply_on_legs(T, (2, 3), x)
            x = apply_on_legs(A.T("t1"), (0, 2), x)
        elif which == "t2":
            x = apply_on_legs(Ti, (0, 1), x)
            x = apply_on_legs(A.T("t2"), (1, 2), x)
            x = apply_on_legs(T, (0, 1), x)
            x = apply_on_legs(B.T("t_op2"), (1, 3), x)
        elif which == "t1_inv":
            x = apply_on_legs(A.T("t1_inv"), (0, 2), x)
            x = apply_on_legs(Ti, (2, 3), x)
            x = apply_on_legs(B.T("t_op1_inv"), (1, 2), x)
            x = apply_on_legs(T, (2, 3), x)
        elif which == "t2_inv":
            x = apply_on_legs(B.T("t_op2_inv"), (1, 3), x)
            x = apply_on_legs(Ti, (0, 1), x)
            x = apply_on_legs(A.T("t2_inv"), (1, 2), x)
            x = apply_on_legs(T, (0, 1), x)
        else:
            raise ValueError(which)
        return _from4(x)

    def counit_label(self, label) -> object:
        a, b = label
        return self.A.counit_label(a) * self.B.counit_label(b)

    def antipode_label(self, label) -> Vec:
        """``S_D = T∘τ∘(S_A⊗S_B⁻¹)``."""
        a, b = label
        return _as_vec(self.T(tensor_product(self.B.antipode(Vec.basis(b), -1), self.A.antipode(Vec.basis(a)))))

    def antipode_inv_label(self, label) -> Vec:
        """``S_D⁻¹ = (S_A⁻¹⊗S_B)∘τ∘T⁻¹``."""
        out = Vec.zero()
        for (b, a), c in self.T_inv.on_basis(label).items():
            out = out + _as_vec(tensor_product(self.A.antipode(Vec.basis(a), -1),
                                               self.B.antipode(Vec.basis(b)))).scale(c)
        return out

    def integral(self) -> Optional[Functional]:
        """``φ_A⊗ψ_B`` (left integral of A, right integral of B)."""
        phi, psi = self.A.left_integral, self.B.right_integral
        if phi is None or psi is None:
            return None
        return Functional(lambda l: phi.on_basis(l[0]) * psi.on_basis(l[1]), "φ_A⊗ψ_B")

    def _make_mha(self) -> Mha:
        kw = {w: linmap(lambda l, w=w: self._td(w, l), f"T^D_{w}", 2) for w in ("t1", "t2", "t1_inv", "t2_inv")}
        return Mha(self.algebra, kw.pop("t1"), kw.pop("t2"), t1_inv=kw["t1_inv"], t2_inv=kw["t2_inv"],
                   counit=self.counit_label, antipode=self.antipode_label, antipode_inv=self.antipode_inv_label,
                   left_integral=self.integral(), name=self.name, default_window=self.pairing.default_window)

    def generic_mha(self) -> Mha:
        """The same canonical maps with counit and antipode left to extraction."""
        m = self.mha
        return Mha(self.algebra, m.T("t1"), m.T("t2"), t1_inv=m.T("t1_inv"), t2_inv=m.T("t2_inv"),
                   name=f"{self.name} (extracted)")

    @property
    def unit(self) -> Optional[Vec]:
        return self.algebra.unit

    def labels(self, window=None) -> list:
        return self.mha.labels(window)

    def __repr__(self):
        return f"DoubleHandle({self.name})"


# ---------------------------------------------------------------------------
# operations


def twist(D: DoubleHandle, x: TensorVec, direction: str = "forward", strategy: Optional[str] = None) -> TensorVec:
    out = TensorVec.zero(2)
    for k, c in x.items():
        out = out + D.twist_label(k, direction, strategy).scale(c)
    return out


def d_mul(D: DoubleHandle, x: Vec, y: Vec) -> Vec:
    return D.algebra.mul(x, y)


def d_star(D: DoubleHandle, x: Vec) -> Vec:
    return D.algebra.star(x)


def d_canonical_map(D: DoubleHandle, which: str, x: TensorVec) -> TensorVec:
    return D.mha.canonical_map(which, x)


def delta_op_multiplier(H: Mha, b: Vec) -> Multiplier:
    """``Δ^op(b)`` as a multiplier of ``B⊗B``."""
    def r1(l):
        return _as_vec(flip(H.delta_apply(b, TensorVec.basis((l[1], l[0])), "left")))

    def r2(l):
        return _as_vec(flip(H.delta_apply(b, TensorVec.basis((l[1], l[0])), "right")))
    return Multiplier(H.square, linmap(r1), linmap(r2), f"Δ^op({b!r})")


def _alpha(D: DoubleHandle, m: Multiplier, n: Multiplier) -> Multiplier:
    T, Ti = D.T, D.T_inv

    def r1(l):
        x = Ti.on_basis(l)
        x = apply_on_legs(n.rho1, (0,), x)
        x = apply_on_legs(T, (0, 1), x)
        return _as_vec(apply_on_legs(m.rho1, (0,), x))

    def r2(l):
        x = Ti.on_basis(l)
        x = apply_on_legs(m.rho2, (1,), x)
        x = apply_on_legs(T, (0, 1), x)
        return _as_vec(apply_on_legs(n.rho2, (1,), x))

    return Multiplier(D.algebra, linmap(r1, "α1"), linmap(r2, "α2"), f"α({m.name}⊗{n.name})")


def _beta(D: DoubleHandle, M: Multiplier, N: Multiplier) -> Multiplier:
    T, Ti = D.T, D.T_inv
    sq = D._cache.get("DD")
    if sq is None:
        sq = D._cache["DD"] = tensor_algebra(D.algebra, D.algebra)
    M1, M2, N1, N2 = _wrap2(M.rho1), _wrap2(M.rho2), _wrap2(N.rho1), _wrap2(N.rho2)

    def both(f, x):
        return apply_on_legs(f, (2, 3), apply_on_legs(f, (0, 1), x))

    def r1(l):
        x = both(Ti, _to4(TensorVec.basis(l)))
        x = apply_on_legs(N1, (0, 2), x)
        x = both(T, x)
        return _as_vec(_from4(apply_on_legs(M1, (0, 2), x)))

    def r2(l):
        x = both(Ti, _to4(TensorVec.basis(l)))
        x = apply_on_legs(M2, (1, 3), x)
        x = both(T, x)
        return _as_vec(_from4(apply_on_legs(N2, (1, 3), x)))

    return Multiplier(sq, linmap(r1, "β1"), linmap(r2, "β2"), f"β({M.name}⊗{N.name})")


def lift_multiplier(D: DoubleHandle, kind: str, *args, check: bool = False) -> Multiplier:
    """``alpha(m, n)``, ``beta(M, N)``, ``iA(m)``, ``iB(n)``, ``IA(M)``, ``IB(N)``."""
    A, B = D.A, D.B
    if kind == "alpha":
        out = _alpha(D, *args)
    elif kind == "iA":
        out = _alpha(D, args[0], unit_multiplier(B.algebra))
    elif kind == "iB":
        out = _alpha(D, unit_multiplier(A.algebra), args[0])
    elif kind == "beta":
        out = _beta(D, *args)
    elif kind == "IA":
        out = _beta(D, args[0], unit_multiplier(B.square))
    elif kind == "IB":
        out = _beta(D, unit_multiplier(A.square), args[0])
    else:
        raise ValueError(f"unknown lift {kind!r}")
    if check:
        from .algebra import CompatibilityViolation, compatibility_witness
        w = compatibility_witness(out, out.algebra.labels(D.pairing.default_window))
        if w is not None:
            raise CompatibilityViolation(f"{out.name} is not a multiplier", w)
    return out


def build_double(P: Pairing, verify: str = "sample", cfg: Optional[SuiteConfig] = None,
                 strategy: str = "auto") -> DoubleHandle:
    """Assemble the double; ``verify`` is ``full``, ``sample`` or ``none``.

    Verification runs the generic MHA suite on the double, the double's own
    identities and the comparison of the closed-form counit and antipode
    with their generic extraction.  Raises :class:`VerificationFailed`.
    """
    D = DoubleHandle(P, strategy)
    if verify == "none":
        return D
    if verify not in ("full", "sample"):
        raise ValueError(f"verify must be full, sample or none, not {verify!r}")
    cfg = cfg or (SuiteConfig() if verify == "full" else SuiteConfig(sample=200))
    rep = double_report(D, cfg)
    D.report = rep
    if not rep.ok:
        raise VerificationFailed(rep)
    return D


def double_report(D: DoubleHandle, cfg: Optional[SuiteConfig] = None) -> Report:
    cfg = cfg or SuiteConfig()
    rep = Report(f"double: {D.name}", seed=cfg.seed)
    rep.extend(mha_suite(D.mha, cfg))
    rep.extend(double_suite(D, cfg))
    rep.window = None if D.mha.is_finite else (cfg.window or D.pairing.default_window)
    return rep


def opposite_double_iso(D: DoubleHandle, cfg: Optional[SuiteConfig] = None) -> Report:
    """``D̄ = B⊗A`` with ``m = (m_B⊗m_A)∘(id⊗T⁻¹⊗id)``; checks ``T: D̄ → D`` is a
    (star-)algebra isomorphism."""
    cfg = cfg or SuiteConfig()
    A, B = D.A.algebra, D.B.algebra
    Ti = D.T_inv
    w = cfg.window if cfg.window is not None else D.pairing.default_window

    def mul(x, y):
        (b, a), (b2, a2) = x, y
        d: dict = {}
        for (q, p), c in Ti.on_basis((a, b2)).items():
            for k1, c1 in B.mul_labels(b, q).items():
                for k2, c2 in A.mul_labels(p, a2).items():
                    _acc(d, (k1, k2), c * c1 * c2)
        return Vec._wrap(d)

    def star(x):
        b, a = x
        return _as_vec(Ti(tensor_product(A.star(Vec.basis(a)), B.star(Vec.basis(b)))))

    Dbar = Algebra(f"D̄({D.B.name},{D.A.name})", B.basis.product(A.basis), mul, None,
                   star if A.has_star and B.has_star else None)
    rep = Report(f"opposite double: {D.name}", window=None if D.mha.is_finite else w, seed=cfg.seed)

    def Tv(x: Vec) -> Vec:
        return _as_vec(D.T(TensorVec._wrap(dict(x.items()), 2)))

    lb, la = D.B.labels(w), D.A.labels(w)
    bl = [(b, a) for b in lb for a in la]
    pairs = cases(bl, 2, cfg, "dbar")
    e = Vec.basis
    rep.add(scan(f"{D.name}: T(x·y) = T(x)·T(y) from D̄", pairs,
                 lambda p: mismatch(Tv(Dbar.mul(e(p[0]), e(p[1]))), D.algebra.mul(Tv(e(p[0])), Tv(e(p[1]))))))
    rep.add(scan(f"{D.name}: T⁻¹∘T = id on D̄", bl,
                 lambda x: mismatch(_as_vec(D.T_inv(TensorVec._wrap(dict(Tv(e(x)).items()), 2))), e(x))))
    if star is not None:
        rep.add(scan(f"{D.name}: T∘ι_D̄ = ι_D∘T", bl,
                     lambda x: mismatch(Tv(Dbar.star(e(x))), D.algebra.star(Tv(e(x))))))
    return rep


# ---------------------------------------------------------------------------
# identities of the double


def _full(H: Mha, x: Vec, n: int) -> TensorVec:
    """``Δ⁽ⁿ⁾(x)`` for a unital algebra (every leg covered by 1)."""
    u = H.algebra.unit
    return H.delta_n_covered(x, [(i, "right", u) for i in range(n + 1)], n)


def double_suite(D: DoubleHandle, cfg: Optional[SuiteConfig] = None) -> Report:
    cfg = cfg or SuiteConfig()
    w = cfg.window if cfg.window is not None else D.pairing.default_window
    rep = Report(f"double suite: {D.name}", window=None if D.mha.is_finite else w, seed=cfg.seed)
    P, A, B, T, Ti = D.pairing, D.A, D.B, D.T, D.T_inv
    la, lb = A.labels(w), B.labels(w)
    e = Vec.basis
    nm = D.name
    mA = linmap(lambda l: A.algebra.mul_labels(*l), "m_A")
    mB = linmap(lambda l: B.algebra.mul_labels(*l), "m_B")
    SB, SBi, SA, SAi = B.S_map(), B.S_inv_map(), A.S_map(), A.S_inv_map()
    unital = D.unit is not None and D.mha.is_finite

    def sample(tuples, salt):
        tuples = list(tuples)
        n = cfg.sample_triples if len(tuples[0]) >= 3 and cfg.sample_triples is not None else cfg.sample
        if n is None or n >= len(tuples):
            return tuples
        return random.Random(f"{cfg.seed}:{salt}").sample(tuples, n)

    def prod(*ls):
        import itertools
        return list(itertools.product(*ls))

    # twist
    ba = prod(lb, la)
    rep.add(scan(f"{nm}: T⁻¹∘T = id and T∘T⁻¹ = id", ba,
                 lambda p: mismatch(twist(D, twist(D, TensorVec.basis(p)), "inverse"), TensorVec.basis(p))
                 or mismatch(twist(D, twist(D, TensorVec.basis((p[1], p[0])), "inverse")), TensorVec.basis((p[1], p[0])))))
    rep.add(scan(f"{nm}: twist closed form = R∘R_opop⁻¹∘τ", ba,
                 lambda p: mismatch(D.twist_label(p, "forward", "fast"), D.twist_label(p, "forward", "composite"))))
    rep.add(scan(f"{nm}: inverse twist closed form = τ∘R_opop∘R⁻¹", ba,
                 lambda p: mismatch(D.twist_label((p[1], p[0]), "inverse", "fast"),
                                    D.twist_label((p[1], p[0]), "inverse", "composite"))))

    def tw(bv: Vec, av: Vec) -> TensorVec:
        """Composite twist on vectors."""
        out = TensorVec.zero(2)
        for kb, cb in bv.items():
            for ka, ca in av.items():
                out = out + D.twist_label((kb, ka), "forward", "composite").scale(cb * ca)
        return out

    def twist_b_side(t):
        b2, b, a, bp = t
        lhs = tw(e(b2), P.a_by_b(P.b_on_a(b, a), bp))
        x = B.delta_n_covered(e(b2), [(0, "right", e(b)), (2, "right", SB(e(bp)))], 2)
        rhs = TensorVec.zero(2)
        for (x0, x1, x2), v in x.items():
            rhs = rhs + tensor_product(P.a_by_b(P.b_on_a(x0, a), SBi(e(x2))), e(x1)).scale(v)
        return mismatch(lhs, rhs)

    def twist_a_side(t):
        a, b, ap, a2 = t
        lhs = tw(P.b_by_a(P.a_on_b(a, b), ap), e(a2))
        x = A.delta_n_covered(e(a2), [(0, "left", SA(e(a))), (2, "left", e(ap))], 2)
        rhs = TensorVec.zero(2)
        for (x0, x1, x2), v in x.items():
            rhs = rhs + tensor_product(e(x1), P.b_by_a(P.a_on_b(SAi(e(x0)), b), e(x2))).scale(v)
        return mismatch(lhs, rhs)

    def twist_mixed_left(t):
        a, b, bp, ap = t
        lhs = tw(P.a_on_b(a, b), P.b_on_a(bp, ap))
        xb = flip(B.t("t_op1", e(b), e(bp)))          # b_(1)b' ⊗ b_(2)
        ya = A.t("t2", SA(e(a)), e(ap))                # S(a)a'_(1) ⊗ a'_(2)
        rhs = TensorVec.zero(2)
        for (x0, x1), v in xb.items():
            for (y0, y1), u in ya.items():
                rhs = rhs + tensor_product(P.b_on_a(x0, y1), P.a_on_b(SAi(e(y0)), x1)).scale(v * u)
        return mismatch(lhs, rhs)

    def twist_mixed_right(t):
        b, a, ap, bp = t
        lhs = tw(P.b_by_a(b, a), P.a_by_b(ap, bp))
        xb = B.t("t1", e(b), SB(e(bp)))                # b_(1) ⊗ b_(2)S(b')
        ya = flip(A.t("t_op2", e(a), e(ap)))           # a'_(1) ⊗ a a'_(2)
        rhs = TensorVec.zero(2)
        for (x0, x1), v in xb.items():
            for (y0, y1), u in ya.items():
                rhs = rhs + tensor_product(P.a_by_b(y0, SBi(e(x1))), P.b_by_a(x0, y1)).scale(v * u)
        return mismatch(lhs, rhs)

    def twist_a_module(t):
        b, a, ap, a2 = t
        lhs = tw(e(b), e(a))
        lhs = apply_on_legs(A.algebra.left_mult(e(ap)), (0,), lhs)
        lhs = apply_on_legs(linmap(lambda l: P.b_by_a(l, a2)), (1,), lhs)
        x = A.delta_n_covered(e(a), [(1, "left", e(ap)), (2, "right", e(a2))], 2)
        rhs = TensorVec.zero(2)
        for (x0, x1, x2), v in x.items():
            rhs = rhs + tensor_product(e(x1), P.b_by_a(P.a_on_b(SAi(e(x0)), b), e(x2))).scale(v)
        return mismatch(lhs, rhs)

    def twist_b_module(t):
        b, a, bp, b2 = t
        lhs = tw(e(b), e(a))
        lhs = apply_on_legs(linmap(lambda l: P.b_on_a(bp, l)), (0,), lhs)
        lhs = apply_on_legs(B.algebra.right_mult(e(b2)), (1,), lhs)
        x = B.delta_n_covered(e(b), [(0, "left", e(bp)), (1, "right", e(b2))], 2)
        rhs = TensorVec.zero(2)
        for (x0, x1, x2), v in x.items():
            rhs = rhs + tensor_product(P.a_by_b(P.b_on_a(x0, a), SBi(e(x2))), e(x1)).scale(v)
        return mismatch(lhs, rhs)

    rep.add(scan(f"{nm}: T(b''⊗b▷a◁b') = (b''_(1)b)▷a◁S⁻¹(b''_(3)S(b'))⊗b''_(2)",
                 sample(prod(lb, lb, la, lb), "tw2"), twist_b_side))
    rep.add(scan(f"{nm}: T(a▷b◁a'⊗a'') = a''_(2)⊗S⁻¹(S(a)a''_(1))▷b◁(a'a''_(3))",
                 sample(prod(la, lb, la, la), "tw3"), twist_a_side))
    rep.add(scan(f"{nm}: T(a▷b⊗b'▷a') = (b_(1)b')▷a'_(2)⊗S⁻¹(S(a)a'_(1))▷b_(2)",
                 sample(prod(la, lb, lb, la), "tw4"), twist_mixed_left))
    rep.add(scan(f"{nm}: T(b◁a⊗a'◁b') = a'_(1)◁S⁻¹(b_(2)S(b'))⊗b_(1)◁(aa'_(2))",
                 sample(prod(lb, la, la, lb), "tw5"), twist_mixed_right))
    rep.add(scan(f"{nm}: (a'·⊗·◁a'')T(b⊗a) = a'a_(2)⊗S⁻¹(a_(1))▷b◁(a_(3)a'')",
                 sample(prod(lb, la, la, la), "tw6"), twist_a_module))
    rep.add(scan(f"{nm}: (b'▷·⊗·b'')T(b⊗a) = (b'b_(1))▷a◁S⁻¹(b_(3))⊗b_(2)b''",
                 sample(prod(lb, la, lb, lb), "tw7"), twist_b_module))

    # braiding relations with the products
    def br1(t):
        b, bp, a = t
        lhs = T(tensor_product(B.algebra.mul(e(b), e(bp)), e(a)))
        x = TensorVec.basis((b, bp, a))
        x = apply_on_legs(T, (1, 2), x)
        x = apply_on_legs(T, (0, 1), x)
        return mismatch(lhs, apply_on_legs(mB, (1, 2), x))

    def br2(t):
        b, a, ap = t
        lhs = T(tensor_product(e(b), A.algebra.mul(e(a), e(ap))))
        x = TensorVec.basis((b, a, ap))
        x = apply_on_legs(T, (0, 1), x)
        x = apply_on_legs(T, (1, 2), x)
        return mismatch(lhs, apply_on_legs(mA, (0, 1), x))

    rep.add(scan(f"{nm}: T∘(m_B⊗id) = (id⊗m_B)∘(T⊗id)∘(id⊗T)", sample(prod(lb, lb, la), "br1"), br1))
    rep.add(scan(f"{nm}: T∘(id⊗m_A) = (m_A⊗id)∘(id⊗T)∘(T⊗id)", sample(prod(lb, la, la), "br2"), br2))

    # T^D_2 against its Sweedler expansion
    dl = [(a, b) for a in la for b in lb]

    def sweedler_td2(p):
        (a1, b1), (a2, b2) = p
        lhs = D.mha.t("t2", p[0], p[1])
        d: dict = {}
        for (bi, ai), c in Ti.on_basis((a1, b1)).items():
            for (x, y), v in A.t("t2", ai, a2).items():          # a1_(i)a2_(1) ⊗ a2_(2)
                for (p0, q0), u in T.on_basis((bi, x)).items():
                    z = B.delta_n_covered(e(b2), [(1, "left", e(q0))], 1)   # b2_(1) ⊗ q b2_(2)
                    for (z0, z1), s in z.items():
                        _acc(d, ((p0, z1), (y, z0)), c * v * u * s)
        return mismatch(lhs, TensorVec._wrap(d, 2))

    rep.add(scan(f"{nm}: T^D_2 equals its Sweedler expansion", sample(prod(dl, dl), "td2"), sweedler_td2))

    # coproduct of the double
    rng = random.Random(f"{cfg.seed}:dd")
    dd_labels = D.labels(w)
    covers = [(random_vec(rng, dd_labels), random_vec(rng, dd_labels)) for _ in range(cfg.random_cases)]

    def dcover(X):
        return tensor_product(*X)

    def delta_of_twist(t):
        b, a, X = t
        d = _as_vec(T(tensor_product(e(b), e(a))))
        lhs = D.mha.delta_apply(d, dcover(X))
        IA = lift_multiplier(D, "IA", A.delta_multiplier(e(a)))
        IB = lift_multiplier(D, "IB", delta_op_multiplier(B, e(b)))
        rhs = _tp2(IB.rho1(IA.rho1(_as_vec(dcover(X)))))
        return mismatch(lhs, rhs)

    trip = [(rng.choice(lb), rng.choice(la), X) for X in covers]
    rep.add(scan(f"{nm}: Δ_D(T(b⊗a)) = Δ^op_B(b)·Δ_A(a)", trip, delta_of_twist))

    def delta_mult(t):
        x, y = t
        X = covers[hash((x, y)) % len(covers)] if covers else None
        cov = dcover(X)
        lhs = D.mha.delta_apply(D.algebra.mul(e(x), e(y)), cov)
        rhs = D.mha.delta_apply(e(x), D.mha.delta_apply(e(y), cov))
        return mismatch(lhs, rhs)

    rep.add(scan(f"{nm}: Δ_D multiplicative", sample(prod(dl, dl), "dmul"), delta_mult))

    # antipode law on D, covered form

    def ant(p):
        d, dp = p
        t = D.mha.t("t1", d, dp)
        lhs = D.mha.m(apply_on_legs(D.mha.S_map(), (0,), t))
        return mismatch(lhs, e(dp, D.counit_label(d)))

    rep.add(scan(f"{nm}: m_D(S_D⊗id)(Δ_D(d)(1⊗d')) = ε_D(d)d'", sample(prod(dl, dl), "ant"), ant))

    # integral
    phi = D.integral()
    if phi is not None:
        rep.add(scan(f"{nm}: (id⊗φ_A⊗ψ_B)∘T^D_2 = id⊗φ_A⊗ψ_B", sample(prod(dl, dl), "int"),
                     lambda p: mismatch(apply_on_legs(phi, (1,), D.mha.t("t2", p[0], p[1])),
                                        e(p[0], phi.on_basis(p[1])))))
    else:
        rep.add(skipped(f"{nm}: integral φ_A⊗ψ_B", "A has no left or B no right integral"))

    # multiplier lifts
    def alpha_ab(p):
        a, b = p
        m = lift_multiplier(D, "iA", embed(A.algebra, e(a)))
        n = lift_multiplier(D, "iB", embed(B.algebra, e(b)))
        for y in dl[: max(1, min(len(dl), 12))]:
            got = m.rho1(n.rho1.on_basis(y))
            want = D.algebra.mul(e((a, b)), e(y))
            if got != want:
                return f"at {y}: {got!r} vs {want!r}"
        return None

    rep.add(scan(f"{nm}: i_A(a)·i_B(b) = a⊗b", sample(prod(la, lb), "alpha"), alpha_ab))

    def alg_emb(t):
        a, ap = t
        lhs = lift_multiplier(D, "iA", embed(A.algebra, A.algebra.mul(e(a), e(ap))))
        m1 = lift_multiplier(D, "iA", embed(A.algebra, e(a)))
        m2 = lift_multiplier(D, "iA", embed(A.algebra, e(ap)))
        for y in dl[:12]:
            if lhs.rho1.on_basis(y) != m1.rho1(m2.rho1.on_basis(y)):
                return f"rho1 at {y}"
            if lhs.rho2.on_basis(y) != m2.rho2(m1.rho2.on_basis(y)):
                return f"rho2 at {y}"
        return None

    rep.add(scan(f"{nm}: i_A is multiplicative", sample(prod(la, la), "emb"), alg_emb))
    if D.unit is not None:
        one = unit_multiplier(A.algebra)
        rep.add(scan(f"{nm}: i_A(1) = 1", dl,
                     lambda y: mismatch(lift_multiplier(D, "iA", one).rho1.on_basis(y), e(y))
                     or mismatch(lift_multiplier(D, "iA", one).rho2.on_basis(y), e(y))))

    # star structure
    if D.algebra.has_star:
        S = D.algebra.star
        rep.add(scan(f"{nm}: ι_D² = id", dl, lambda x: mismatch(S(S(e(x))), e(x))))
        rep.add(scan(f"{nm}: (xy)* = y*x*", sample(prod(dl, dl), "star"),
                     lambda p: mismatch(S(D.algebra.mul(e(p[0]), e(p[1]))), D.algebra.mul(S(e(p[1])), S(e(p[0]))))))
        from .algebra import star_multiplier

        def star_lift(t):
            kind, x = t
            alg = A.algebra if kind == "iA" else B.algebra
            m = embed(alg, e(x))
            lhs = lift_multiplier(D, kind, embed(alg, alg.star(e(x))))
            rhs = star_multiplier(lift_multiplier(D, kind, m))
            for y in dl[:12]:
                if lhs.rho1.on_basis(y) != rhs.rho1.on_basis(y) or lhs.rho2.on_basis(y) != rhs.rho2.on_basis(y):
                    return f"at {y}"
            return None

        rep.add(scan(f"{nm}: i_A, i_B preserve the star", [("iA", a) for a in la] + [("iB", b) for b in lb],
                     star_lift))

    # Sweedler expansions of the double's coproduct (unital finite examples)
    if unital:
        for c in _expansions(D, cfg, la, lb):
            rep.add(c)
        rep.notes.append(B3_NOTE)
    else:
        rep.add(skipped(f"{nm}: coproduct identities as full Sweedler expansions", "needs a unital finite double"))

    # closed-form counit and antipode against generic extraction
    if D.mha.is_finite:
        def extracted():
            G = D.generic_mha()
            dls = D.labels()
            c1 = scan(f"{nm}: ε_D = ε_A⊗ε_B matches extraction", dls,
                      lambda x: mismatch(G.counit_label(x), D.counit_label(x)))
            c2 = scan(f"{nm}: S_D = T∘τ∘(S_A⊗S_B⁻¹) matches extraction", dls,
                      lambda x: mismatch(G.antipode(e(x)), D.antipode_label(x)))
            return c1, c2
        try:
            for c in extracted():
                rep.add(c)
        except Exception as exc:
            rep.add(Check(f"{nm}: closed-form counit and antipode match extraction", "fail",
                          f"{type(exc).__name__}: {exc}"))
    return rep


def _tp2(v: Vec) -> TensorVec:
    return TensorVec._wrap(dict(v.items()), 2)


def _expansions(D: DoubleHandle, cfg: SuiteConfig, la, lb) -> list:
    P, A, B, T, Ti = D.pairing, D.A, D.B, D.T, D.T_inv
    e = Vec.basis
    nm = D.name
    SBi, SB, SAi = B.S_inv_map(), B.S_map(), A.S_inv_map()
    rng = random.Random(f"{cfg.seed}:expansions")
    n = cfg.random_cases
    oneD = D.unit
    mulA, mulB = A.algebra.mul, B.algebra.mul
    out = []

    def with_unit(dp) -> TensorVec:
        return tensor_product(oneD, dp)

    def exp_delta_twist(t):
        b, a, ap, bp = t
        X = _as_vec(T.on_basis((b, a)))
        lhs = _to4(D.mha.canonical_map("t1", tensor_product(X, e((ap, bp)))))
        d = TensorVec.zero(4)
        for (ai, bi), c in T.on_basis((b, a)).items():
            for (x0, x1), u in _full(A, e(ai), 1).items():
                for (y0, y1), v in _full(B, e(bi), 1).items():
                    for (bj, aj), s in Ti.on_basis((ap, bp)).items():
                        t2 = T(tensor_product(mulB(e(y0), e(bj)), e(aj)))
                        t2 = apply_on_legs(A.algebra.left_mult(e(x1)), (0,), t2)
                        d = d + _glue4(e(x0), e(y1), t2, c * u * v * s)
        return mismatch(lhs, d)

    def exp_delta_product(t):
        b, a, ap, bp = t
        IA = lift_multiplier(D, "IA", A.delta_multiplier(e(a)))
        IB = lift_multiplier(D, "IB", delta_op_multiplier(B, e(b)))
        lhs = _to4(_tp2(IB.rho1(IA.rho1(_as_vec(with_unit(e((ap, bp))))))))
        d = TensorVec.zero(4)
        for (p0, p1), u in _full(A, e(a), 1).items():
            for (s0, s1), v in _full(B, e(b), 1).items():
                t1 = T.on_basis((s1, p0))
                for (bl, al), c in Ti(tensor_product(mulA(e(p1), e(ap)), e(bp))).items():
                    t2 = T(tensor_product(mulB(e(s0), e(bl)), e(al)))
                    for (x, y), r in t1.items():
                        d = d + _glue4(e(x), e(y), t2, u * v * c * r)
        return mismatch(lhs, d)

    def rand(ls, k):
        return [rng.choice(ls) for _ in range(k)]

    def leg_ops(t4: TensorVec, b1, b2, a1) -> TensorVec:
        x = apply_on_legs(linmap(lambda l: P.b_on_a(b1, l)), (0,), t4)
        x = apply_on_legs(B.algebra.left_mult(e(b2)), (1,), x)
        return apply_on_legs(A.algebra.left_mult(e(a1)), (2,), x)

    def mixed_first(t):
        a1, a2, a3, a4, b1, b2, b3, b4, b5 = t
        X = _as_vec(tw_vec(D, P.b_by_a(b3, a2), P.a_by_b(a3, b4)))
        lhs = leg_ops(_to4(D.mha.canonical_map("t1", tensor_product(X, e((a4, b5))))), b1, b2, a1)
        d = TensorVec.zero(4)
        for (s0, s1, s2), u in _full(B, e(b3), 2).items():
            for (p0, p1, p2), v in _full(A, e(a3), 2).items():
                for (q0, q1, q2), r in _full(A, e(a4), 2).items():
                    l0 = P.a_by_b(P.b_on_a(b1, p0), SBi(mulB(e(s2), SB(e(b4)))))
                    l1 = mulB(e(b2), e(s1))
                    l2 = mulA(mulA(e(a1), e(p1)), e(q1))
                    l3 = mulB(P.b_by_a(P.a_on_b(SAi(e(q0)), s0), mulA(mulA(e(a2), e(p2)), e(q2))), e(b5))
                    d = d + tensor_product(l0, l1, l2, l3).scale(u * v * r)
        return mismatch(lhs, d)

    def mixed_second(t):
        a1, a2, a3, a4, b1, b2, b3, b4, b5 = t
        IA = lift_multiplier(D, "IA", A.delta_multiplier(P.a_by_b(a3, b4)))
        IB = lift_multiplier(D, "IB", delta_op_multiplier(B, P.b_by_a(b3, a2)))
        lhs = leg_ops(_to4(_tp2(IB.rho1(IA.rho1(_as_vec(with_unit(e((a4, b5)))))))), b1, b2, a1)
        d = TensorVec.zero(4)
        for (s0, s1, s2, s3), u in _full(B, e(b3), 3).items():
            for (p0, p1), v in _full(A, e(a3), 1).items():
                for (r0, r1, r2), w in _full(A, mulA(e(p1), e(a4)), 2).items():
                    l0 = P.a_by_b(P.b_on_a(mulB(e(b1), e(s1)), p0), SBi(mulB(e(s3), SB(e(b4)))))
                    l1 = mulB(e(b2), e(s2))
                    l2 = mulA(e(a1), e(r1))
                    l3 = mulB(P.b_by_a(P.a_on_b(SAi(e(r0)), s0), mulA(e(a2), e(r2))), e(b5))
                    d = d + tensor_product(l0, l1, l2, l3).scale(u * v * w)
        return mismatch(lhs, d)

    def b3_identity(t, reading):
        a1, a2, a3, a4, b1, b2 = t
        lhs = TensorVec.zero(4)
        for (p0, p1), v in _full(A, e(a3), 1).items():
            for (r0, r1, r2), w in _full(A, mulA(e(p1), e(a4)), 2).items():
                for (s0, s1), u in _full(B, e(b2), 1).items():
                    l0 = P.b_on_a(mulB(e(b1), e(s1)), p0)
                    l1 = P.a_on_b(SAi(e(r0)), s0)
                    lhs = lhs + tensor_product(l0, l1, mulA(e(a1), e(r1)), mulA(e(a2), e(r2))).scale(v * w * u)
        if reading == "b2":
            b3s = [(e(b2), 1)]
        else:  # b_(2)(1), the unbound b_(2)(2) contracted by the counit
            b3s = [(e(s0), u * B.counit_label(s1)) for (s0, s1), u in _full(B, e(b2), 1).items()]
        rhs = TensorVec.zero(4)
        for (p0, p1, p2), v in _full(A, e(a3), 2).items():
            for (q0, q1, q2), w in _full(A, e(a4), 2).items():
                for b3, c in b3s:
                    l0 = P.b_on_a(b1, p0)
                    l1 = P.a_on_b(SAi(e(q0)), b3)
                    l2 = mulA(mulA(e(a1), e(p1)), e(q1))
                    l3 = mulA(mulA(e(a2), e(p2)), e(q2))
                    rhs = rhs + tensor_product(l0, l1, l2, l3).scale(v * w * c)
        return mismatch(lhs, rhs)

    four = [(rng.choice(lb), rng.choice(la), rng.choice(la), rng.choice(lb)) for _ in range(n)]
    nine = [tuple(rand(la, 4) + rand(lb, 5)) for _ in range(n)]
    six = [tuple(rand(la, 4) + rand(lb, 2)) for _ in range(n)]
    out.append(scan(f"{nm}: Δ_D(T(b⊗a))(1⊗a'⊗b') Sweedler expansion", four, exp_delta_twist))
    out.append(scan(f"{nm}: (Δ^op_B(b)Δ_A(a))(1⊗a'⊗b') Sweedler expansion", four, exp_delta_product))
    out.append(scan(f"{nm}: acted Δ_D(T(b◁a⊗a'◁b'))(1⊗a''⊗b'') expansion, twist side", nine, mixed_first))
    out.append(scan(f"{nm}: acted Δ_D(T(b◁a⊗a'◁b'))(1⊗a''⊗b'') expansion, product side", nine, mixed_second))
    out.append(scan(f"{nm}: b_3 identity, b_3 read as b_2", six, lambda t: b3_identity(t, "b2")))
    out.append(scan(f"{nm}: b_3 identity, b_3 read as b_(2)(1) with counit on b_(2)(2)", six,
                    lambda t: b3_identity(t, "b21")))
    return out


def tw_vec(D: DoubleHandle, bv: Vec, av: Vec) -> TensorVec:
    return D.T(tensor_product(bv, av))


def _glue4(x: Vec, y: Vec, t2: TensorVec, coef) -> TensorVec:
    d: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            for (p, q), c in t2.items():
                _acc(d, (kx, ky, p, q), coef * cx * cy * c)
    return TensorVec._wrap(d, 4)
