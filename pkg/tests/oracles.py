"""Brute-force oracles written straight from group laws.

Nothing here imports the structure maps under test: values are produced
from the group multiplication alone and then compared (or frozen).
"""
import itertools


def mul(G, *gs):
    out = G.identity
    for g in gs:
        out = G.mul(out, g)
    return out


def cg_coproduct(G, g, n=1):
    """``Δ⁽ⁿ⁾(δ_g) = Σ_{u0...un = g} δ_u0⊗...⊗δ_un`` for C(G)."""
    out = {}
    for us in itertools.product(G.elements, repeat=n):
        last = G.mul(G.inv(mul(G, *us)), g)
        out[tuple(us) + (last,)] = 1
    return out


def cg_t1(G, g, h):
    """``Δ(δ_g)(1⊗δ_h)`` by multiplying out the coproduct."""
    return {(u, v): c for (u, v), c in cg_coproduct(G, g).items() if v == h}


def cg_t2(G, g, h):
    return {(u, v): c for (u, v), c in cg_coproduct(G, h).items() if u == g}


def kg_t1(G, g, h):
    return {(g, G.mul(g, h)): 1}


def kg_t2(G, g, h):
    return {(G.mul(g, h), h): 1}


def act_h_on_delta(G, h, g):
    """``h ▷ δ_g = (id⊗⟨·,h⟩)Δ(δ_g)``."""
    out = {}
    for (u, v), c in cg_coproduct(G, g).items():
        if v == h:
            out[u] = out.get(u, 0) + c
    return out


def twist(G, h, g):
    """``T(h⊗δ_g) = δ_{hgh⁻¹}⊗h``: the cross relation ``h δ_g = δ_{hgh⁻¹} h`` of the double."""
    return {(G.conj(h, g), h): 1}


def r_map(G, g, h):
    """``R(δ_g⊗h) = Σ δ_u ⊗ v ⟨δ_w, x⟩`` over ``Δ(δ_g) = Σ δ_u⊗δ_w`` and ``Δ(h) = h⊗h``."""
    out = {}
    for (u, w), c in cg_coproduct(G, g).items():
        if w == h:
            out[(u, h)] = out.get((u, h), 0) + c
    return out


def double_mul(G, x, y):
    """Textbook ``(δ_g⊗a)(δ_h⊗b) = [g = a h a⁻¹] δ_g⊗ab``."""
    (g, a), (h, b) = x, y
    return {(g, G.mul(a, b)): 1} if g == G.conj(a, h) else {}


def double_coproduct(G, x):
    g, a = x
    return {((u, a), (G.mul(G.inv(u), g), a)): 1 for u in G.elements}
