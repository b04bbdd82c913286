"""Exact sparse linear algebra over QQ or QQ(i), backed by sympy's DomainMatrix.

Matrices are passed as ``{row: {col: scalar}}`` dicts with an explicit shape.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .scalar import Gaussian, Scalar, gaussian

Rows = dict


class Singular(ValueError):
    pass


def _uses_i(rows: Rows, extra=()) -> bool:
    for r in rows.values():
        for v in r.values():
            if isinstance(v, Gaussian):
                return True
    return any(isinstance(v, Gaussian) for v in extra)


def _to_q(x):
    if isinstance(x, int):
        return QQ(x)
    return QQ(x.numerator, x.denominator)


def _to_dom(x, dom):
    if dom is QQ:
        return _to_q(x)
    if isinstance(x, Gaussian):
        return QQ_I(_to_q(x.re), _to_q(x.im))
    return QQ_I(_to_q(x), QQ(0))


def _from_q(q):
    n, d = int(q.numerator), int(q.denominator)
    return n if d == 1 else Fraction(n, d)


def _from_dom(x, dom) -> Scalar:
    if dom is QQ:
        return _from_q(x)
    return gaussian(_from_q(x.x), _from_q(x.y))


def _dm(rows: Rows, shape, dom) -> DomainMatrix:
    data = {}
    for i, r in rows.items():
        rr = {j: _to_dom(v, dom) for j, v in r.items() if v != 0}
        if rr:
            data[i] = rr
    return DomainMatrix(data, shape, dom)


def _rows(M: DomainMatrix, dom) -> Rows:
    out = {}
    for i, r in M.to_sparse().rep.to_dod().items():
        rr = {j: _from_dom(v, dom) for j, v in r.items() if v}
        if rr:
            out[i] = rr
    return out


def _domain(rows, extra=()):
    return QQ_I if _uses_i(rows, extra) else QQ


def rank(rows: Rows, shape) -> int:
    if not rows:
        return 0
    dom = _domain(rows)
    return _dm(rows, shape, dom).rank()


def inverse(rows: Rows, n: int) -> Rows:
    """Inverse of a square matrix; raises :class:`Singular`."""
    dom = _domain(rows)
    M = _dm(rows, (n, n), dom)
    if M.rank() < n:
        raise Singular(f"matrix of size {n} has rank {M.rank()}")
    return _rows(M.to_dense().inv(), dom)


def nullspace(rows: Rows, shape) -> list:
    """Basis of ``{x : Mx = 0}`` as a list of ``{col: scalar}`` dicts."""
    dom = _domain(rows)
    M = _dm(rows, shape, dom).to_dense()
    ns = M.nullspace()
    out = []
    for i, r in _rows(ns, dom).items():
        out.append(r)
    return out


def transpose(rows: Rows) -> Rows:
    out: Rows = {}
    for i, r in rows.items():
        for j, v in r.items():
            out.setdefault(j, {})[i] = v
    return out


def independent_rows(rows: Rows, shape) -> list:
    """Indices of a maximal set of linearly independent rows."""
    dom = _domain(rows)
    t = _dm(transpose(rows), (shape[1], shape[0]), dom)
    _, pivots = t.to_dense().rref()
    return list(pivots)


def solve(rows: Rows, shape, rhs: dict) -> Optional[dict]:
    """Some ``x`` with ``Mx = rhs`` (free variables set to 0), or ``None``."""
    m, n = shape
    dom = _domain(rows, rhs.values())
    aug = {i: dict(r) for i, r in rows.items()}
    for i, v in rhs.items():
        if v != 0:
            aug.setdefault(i, {})[n] = v
    R, pivots = _dm(aug, (m, n + 1), dom).to_dense().rref()
    if n in pivots:
        return None
    rr = _rows(R, dom)
    x = {}
    for k, p in enumerate(pivots):
        v = rr.get(k, {}).get(n, 0)
        if v != 0:
            x[p] = v
    return x


def matmul(a: Rows, b: Rows) -> Rows:
    out: Rows = {}
    for i, r in a.items():
        acc: dict = {}
        for k, v in r.items():
            for j, w in b.get(k, {}).items():
                s = acc.get(j, 0) + v * w
                if s == 0:
                    acc.pop(j, None)
                else:
                    acc[j] = s
        if acc:
            out[i] = acc
    return out
