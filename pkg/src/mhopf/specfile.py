"""JSON spec files: load and export algebras, pairings and doubles.

Scalars are strings ``"p/q"`` or ``"p/q+r/si"``; structure constants are
rows ``[label, ..., coeff]``.  Labels are strings, integers or (nested)
arrays, the latter read back as tuples.

A spec holds one of
  ``{"group": "S3"}`` or ``{"group": "int", "window": 8}``: catalog shorthand;
  ``{"group": {"elements": [...], "table": [[g, h, gh], ...]}}``: finite table;
  ``{"A": {...}, "B": {...}, "pairing": [[a, b, c], ...]}``: explicit pairing;
  ``{"mha": {...}}``: a single multiplier Hopf algebra (e.g. an exported double).
"""
from __future__ import annotations

import json
from typing import Optional

from . import catalog
from .algebra import Algebra
from .mha import Mha
from .pairing import Pairing
from .scalar import Gaussian, format_scalar, parse_scalar
from .tensor import Basis, Functional, TensorVec, Vec, label_key

FORMAT = "mhopf-spec/1"
FIELDS = ("Q", "Q(i)")


class ParseError(ValueError):
    """Malformed spec; ``where`` is a JSON path like ``A.T1[3]``."""

    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}" if where else msg)
        self.where = where


def _label(x, where: str):
    if isinstance(x, list):
        return tuple(_label(y, where) for y in x)
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(where, f"bad label {x!r}")
    return x


def _dump_label(x):
    return [_dump_label(y) for y in x] if isinstance(x, tuple) else x


def _scalar(x, where: str, field: str):
    try:
        c = parse_scalar(x)
    except ValueError as exc:
        raise ParseError(where, str(exc)) from None
    if field == "Q" and isinstance(c, Gaussian):
        raise ParseError(where, f"{x!r} is not rational but the field is Q")
    return c


def _rows(spec: dict, key: str, arity: int, where: str, basis: set, field: str) -> dict:
    """``{labels: coeff}`` from rows of ``arity`` labels plus a coefficient."""
    raw = spec.get(key)
    if not isinstance(raw, list):
        raise ParseError(f"{where}.{key}", "expected a list of rows")
    out: dict = {}
    for i, row in enumerate(raw):
        w = f"{where}.{key}[{i}]"
        if not isinstance(row, list) or len(row) != arity + 1:
            raise ParseError(w, f"expected {arity} labels and a coefficient")
        labs = tuple(_label(x, w) for x in row[:arity])
        for x in labs:
            if x not in basis:
                raise ParseError(w, f"undeclared label {_dump_label(x)!r}")
        c = _scalar(row[arity], w, field)
        if c != 0:
            out[labs] = out.get(labs, 0) + c
    return out


def _group_map(rows: dict, n_in: int) -> dict:
    """Rows keyed by input labels: ``{inputs: {outputs: coeff}}``."""
    out: dict = {}
    for labs, c in rows.items():
        k = labs[:n_in] if n_in > 1 else labs[0]
        rest = labs[n_in:]
        rest = rest if len(rest) > 1 else rest[0]
        out.setdefault(k, {})[rest] = c
    return out


def _algebra_spec(spec: dict, where: str, field: str) -> Mha:
    if not isinstance(spec, dict):
        raise ParseError(where, "expected an object")
    name = spec.get("name", where)
    if not isinstance(spec.get("basis"), list) or not spec["basis"]:
        raise ParseError(f"{where}.basis", "expected a non-empty list of labels")
    labels = [_label(x, f"{where}.basis[{i}]") for i, x in enumerate(spec["basis"])]
    if len(set(labels)) != len(labels):
        raise ParseError(f"{where}.basis", "duplicate labels")
    bs = set(labels)
    mul = _group_map(_rows(spec, "mul", 3, where, bs, field), 2)

    def vec(d):
        return Vec._wrap(dict(d))

    def tens(d):
        return TensorVec._wrap(dict(d), 2)

    unit = None
    if "unit" in spec:
        unit = vec({k[0]: c for k, c in _rows(spec, "unit", 1, where, bs, field).items()})
    star = None
    if "star" in spec:
        st = _group_map(_rows(spec, "star", 2, where, bs, field), 1)
        star = lambda x: vec(st.get(x, {}))
    alg = Algebra(name, Basis.finite(labels, name), lambda x, y: vec(mul.get((x, y), {})), unit, star)

    maps = {}
    for key in ("T1", "T2", "T1_inv", "T2_inv"):
        if key in spec:
            m = _group_map(_rows(spec, key, 4, where, bs, field), 2)
            maps[key.lower()] = (lambda m: lambda a, b: tens(m.get((a, b), {})))(m)
        elif key in ("T1", "T2"):
            raise ParseError(f"{where}.{key}", "missing")
    kw: dict = {}
    if "counit" in spec:
        cu = {k[0]: c for k, c in _rows(spec, "counit", 1, where, bs, field).items()}
        kw["counit"] = lambda x: cu.get(x, 0)
    for key in ("antipode", "antipode_inv"):
        if key in spec:
            m = _group_map(_rows(spec, key, 2, where, bs, field), 1)
            kw[key] = (lambda m: lambda x: vec(m.get(x, {})))(m)
    for key in ("left_integral", "right_integral"):
        if key in spec:
            v = {k[0]: c for k, c in _rows(spec, key, 1, where, bs, field).items()}
            kw[key] = Functional((lambda v: lambda x: v.get(x, 0))(v), key)
    return Mha(alg, maps["t1"], maps["t2"], t1_inv=maps.get("t1_inv"), t2_inv=maps.get("t2_inv"),
               name=name, **kw)


def _group(spec, where: str, window: Optional[int]):
    if isinstance(spec, str):
        if spec in ("int", "Z"):
            return catalog.lazy_int_group_pair(window or 8, verify=False)
        try:
            return catalog.finite_group_pair(catalog.group(spec), verify=False)
        except catalog.NotAGroup as exc:
            raise ParseError(where, str(exc)) from None
    if not isinstance(spec, dict) or "elements" not in spec or "table" not in spec:
        raise ParseError(where, "expected a group name or {elements, table}")
    els = [_label(x, f"{where}.elements[{i}]") for i, x in enumerate(spec["elements"])]
    table = {}
    for i, row in enumerate(spec["table"]):
        w = f"{where}.table[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError(w, "expected [g, h, gh]")
        g, h, gh = (_label(x, w) for x in row)
        table[(g, h)] = gh
    try:
        G = catalog.from_table(spec.get("name", "G"), els, table)
    except catalog.NotAGroup as exc:
        raise ParseError(where, str(exc)) from None
    return catalog.finite_group_pair(G, verify=False)


def load_spec(data, window: Optional[int] = None):
    """A :class:`Pairing` (unverified) or an :class:`Mha` from parsed JSON."""
    if not isinstance(data, dict):
        raise ParseError("", "top level must be an object")
    field = data.get("field", "Q(i)")
    if field not in FIELDS:
        raise ParseError("field", f"unknown field {field!r}; choose from {FIELDS}")
    if window is None and "window" in data:
        window = data["window"]
        if not isinstance(window, int) or window < 1:
            raise ParseError("window", "expected a positive integer")
    if "group" in data:
        return _group(data["group"], "group", window)
    if "mha" in data:
        return _algebra_spec(data["mha"], "mha", field)
    if "A" in data and "B" in data:
        A = _algebra_spec(data["A"], "A", field)
        B = _algebra_spec(data["B"], "B", field)
        la, lb = set(A.labels()), set(B.labels())
        if not isinstance(data.get("pairing"), list):
            raise ParseError("pairing", "expected a list of [a, b, coeff] rows")
        form: dict = {}
        for i, row in enumerate(data["pairing"]):
            w = f"pairing[{i}]"
            if not isinstance(row, list) or len(row) != 3:
                raise ParseError(w, "expected [a, b, coeff]")
            a, b = _label(row[0], w), _label(row[1], w)
            if a not in la or b not in lb:
                raise ParseError(w, "undeclared label")
            form[(a, b)] = _scalar(row[2], w, field)
        return Pairing(A, B, lambda a, b: form.get((a, b), 0), name=data.get("name", f"{A.name}|{B.name}"))
    raise ParseError("", "spec needs one of: group, mha, or A/B/pairing")


def load_path(path: str, window: Optional[int] = None):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} col {exc.colno}", exc.msg) from None
    return load_spec(data, window)


# ---------------------------------------------------------------------------
# export


def _sorted_rows(d: dict) -> list:
    rows = sorted(d.items(), key=lambda kv: tuple(label_key(x) for x in kv[0]))
    return [[_dump_label(x) for x in k] + [format_scalar(c)] for k, c in rows]


def mha_tables(H: Mha, extra: bool = True) -> dict:
    """Structure constants of a finite handle as ``{key: {labels: coeff}}``."""
    if not H.is_finite:
        raise ValueError(f"{H.name} has no finite basis to export")
    A = H.algebra
    ls = sorted(H.labels(), key=label_key)
    out: dict = {"mul": {}, "T1": {}, "T2": {}}
    for x in ls:
        for y in ls:
            for z, c in A.mul_labels(x, y).items():
                out["mul"][(x, y, z)] = c
            for key in ("T1", "T2"):
                for (p, q), c in H.t(key.lower(), x, y).items():
                    out[key][(x, y, p, q)] = c
    if A.unit is not None:
        out["unit"] = {(k,): c for k, c in A.unit.items()}
    if A.has_star:
        out["star"] = {(x, k): c for x in ls for k, c in A.star(Vec.basis(x)).items()}
    if extra:
        out["counit"] = {(x,): H.counit_label(x) for x in ls if H.counit_label(x) != 0}
        out["antipode"] = {(x, k): c for x in ls for k, c in H.antipode(Vec.basis(x)).items()}
        out["antipode_inv"] = {(x, k): c for x in ls for k, c in H.antipode(Vec.basis(x), -1).items()}
        for key in ("left_integral", "right_integral"):
            f = getattr(H, key)
            if f is not None:
                out[key] = {(x,): f.on_basis(x) for x in ls if f.on_basis(x) != 0}
    return out


def dump_mha(H: Mha, extra: bool = True) -> dict:
    tabs = mha_tables(H, extra)
    spec = {"name": H.name, "basis": [_dump_label(x) for x in sorted(H.labels(), key=label_key)]}
    for k, d in tabs.items():
        spec[k] = _sorted_rows(d)
    return spec


def _field_of(*tables: dict) -> str:
    gaussian = any(isinstance(c, Gaussian) for tab in tables for d in tab.values() for c in d.values())
    return "Q(i)" if gaussian else "Q"


def dump_pairing(P: Pairing, name: Optional[str] = None) -> dict:
    A, B = dump_mha(P.A), dump_mha(P.B)
    form = {(a, b): P.form(a, b) for a in P.labels_A() for b in P.labels_B() if P.form(a, b) != 0}
    return {"format": FORMAT, "field": _field_of(mha_tables(P.A), mha_tables(P.B), {"form": form}),
            "name": name or P.name, "A": A, "B": B, "pairing": _sorted_rows(form)}


def dump_double(D) -> dict:
    return {"format": FORMAT, "field": _field_of(mha_tables(D.mha)), "name": D.name, "mha": dump_mha(D.mha)}


def csv_rows(tabs: dict) -> list:
    """``[map, label..., coeff]`` rows; tuple labels are JSON-encoded."""
    out = []
    for key, d in tabs.items():
        for row in _sorted_rows(d):
            out.append([key] + [json.dumps(x) if isinstance(x, list) else x for x in row[:-1]] + [row[-1]])
    return out



def dumps(data, indent: int = 0) -> str:
    """JSON with one structure-constant row per line."""
    pad = " " * (indent + 1)
    if isinstance(data, dict):
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent + 1)}" for k, v in data.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    if isinstance(data, list) and data and all(isinstance(x, list) for x in data):
        return "[\n" + ",\n".join(pad + json.dumps(x, ensure_ascii=False) for x in data) + "\n" + " " * indent + "]"
    return json.dumps(data, ensure_ascii=False)
