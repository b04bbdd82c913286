"""Sparse vectors over structured basis labels, linear maps and leg operations.

Legs are numbered from 0.  A plain :class:`Vec` is an element of one space;
a :class:`TensorVec` of degree ``k`` is an element of a ``k``-fold tensor
product whose labels are ``k``-tuples of factor labels.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

from .scalar import Scalar, format_scalar, is_scalar

Label = Hashable


class ArityMismatch(ValueError):
    pass


class BasisMismatch(ValueError):
    pass


def label_key(label):
    """Total order on heterogeneous labels (ints < strings < tuples)."""
    if isinstance(label, bool):
        return (3, repr(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(label_key(x) for x in label))
    return (3, repr(label))


def fmt_label(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(fmt_label(x) for x in label) + ")"
    return str(label)


def _acc(d: dict, key, c) -> None:
    v = d.get(key, 0) + c
    if v == 0:
        d.pop(key, None)
    else:
        d[key] = v


class Vec:
    """Finite formal linear combination of basis labels (no stored zeros).

    Treat as immutable.
    """

    __slots__ = ("_c",)
    degree: Optional[int] = None

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for k, v in items:
                if v != 0:
                    _acc(c, k, v)
        self._c = c

    @classmethod
    def _wrap(cls, d: dict, degree=None):
        out = cls.__new__(cls)
        out._c = d
        return out

    @classmethod
    def basis(cls, label, coeff: Scalar = 1):
        return cls._wrap({label: coeff} if coeff != 0 else {})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def like(self, d: dict):
        """New vector of the same kind (and degree) built from ``d``."""
        return type(self)._wrap(d) if self.degree is None else TensorVec._wrap(d, self.degree)

    # mapping-ish access
    def items(self):
        return self._c.items()

    def labels(self):
        return self._c.keys()

    def coeff(self, label) -> Scalar:
        return self._c.get(label, 0)

    def __getitem__(self, label):
        return self._c.get(label, 0)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def support(self) -> list:
        return sorted(self._c, key=label_key)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, Vec) or other.degree != self.degree:
            raise BasisMismatch(f"cannot combine degree {self.degree} with {getattr(other, 'degree', other)!r}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        d = dict(self._c)
        for k, v in other._c.items():
            _acc(d, k, v)
        return self.like(d)

    __radd__ = __add__

    def __neg__(self):
        return self.like({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        self._check(other)
        d = dict(self._c)
        for k, v in other._c.items():
            _acc(d, k, -v)
        return self.like(d)

    def scale(self, c: Scalar):
        if c == 0:
            return self.like({})
        if c == 1:
            return self
        return self.like({k: v * c for k, v in self._c.items()})

    def __mul__(self, c):
        if not is_scalar(c):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def map_coeffs(self, f):
        d = {}
        for k, v in self._c.items():
            w = f(v)
            if w != 0:
                d[k] = w
        return self.like(d)

    def relabel(self, f):
        d = {}
        for k, v in self._c.items():
            _acc(d, f(k), v)
        return self.like(d)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.degree == other.degree and self._c == other._c

    def __hash__(self):
        return hash((self.degree, frozenset(self._c.items())))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for k in self.support():
            v = self._c[k]
            parts.append(f"{format_scalar(v)}*{fmt_label(k)}")
        return " + ".join(parts)


class TensorVec(Vec):
    """Element of a ``degree``-fold tensor product; labels are tuples."""

    __slots__ = ("degree",)

    def __init__(self, coeffs=None, degree: Optional[int] = None):
        super().__init__(coeffs)
        if degree is None:
            if not self._c:
                raise ArityMismatch("degree required for an empty tensor")
            degree = len(next(iter(self._c)))
        self.degree = degree
        for k in self._c:
            if not isinstance(k, tuple) or len(k) != degree:
                raise ArityMismatch(f"label {k!r} does not have arity {degree}")

    @classmethod
    def _wrap(cls, d: dict, degree=None):
        out = cls.__new__(cls)
        out._c = d
        out.degree = degree
        return out

    @classmethod
    def basis(cls, label, coeff: Scalar = 1):
        return cls._wrap({tuple(label): coeff} if coeff != 0 else {}, len(label))

    @classmethod
    def zero(cls, degree: int):
        return cls._wrap({}, degree)

    def __repr__(self):
        if not self._c:
            return f"0[deg {self.degree}]"
        parts = []
        for k in self.support():
            v = self._c[k]
            parts.append(f"{format_scalar(v)}*" + "⊗".join(fmt_label(x) for x in k))
        return " + ".join(parts)


def degree_of(v: Vec) -> int:
    return 1 if v.degree is None else v.degree


def _legs_of(v: Vec, label) -> tuple:
    return (label,) if v.degree is None else label


def tensor_product(*vs: Vec) -> TensorVec:
    """``v ⊗ w ⊗ ...``; degrees add (plain vectors count as degree 1)."""
    d = {(): 1}
    deg = 0
    for v in vs:
        deg += degree_of(v)
        nd = {}
        for k1, c1 in d.items():
            for k2, c2 in v.items():
                nd[k1 + _legs_of(v, k2)] = c1 * c2
        d = nd
    return TensorVec._wrap(d, deg)


def as_tensor(v: Vec, degree: int) -> TensorVec:
    """View a vector over tuple labels as a tensor of the given degree."""
    if v.degree == degree:
        return v
    if v.degree is not None:
        raise ArityMismatch(f"degree {v.degree} is not {degree}")
    return TensorVec(dict(v.items()), degree)


def as_vec(t: Vec) -> Vec:
    """Forget the tensor structure (tuple labels become plain labels)."""
    if t.degree is None:
        return t
    return Vec._wrap(dict(t.items()))


def permute_legs(t: TensorVec, perm: Sequence[int]) -> TensorVec:
    """Reindex legs: leg ``i`` of the result is leg ``perm[i]`` of ``t``."""
    perm = tuple(perm)
    if t.degree is None or len(perm) != t.degree or sorted(perm) != list(range(t.degree)):
        raise ArityMismatch(f"permutation {perm} does not fit degree {t.degree}")
    d = {}
    for k, v in t.items():
        d[tuple(k[p] for p in perm)] = v
    return TensorVec._wrap(d, t.degree)


def flip(t: TensorVec) -> TensorVec:
    """The transposition of a degree-2 tensor."""
    if t.degree != 2:
        raise ArityMismatch("flip needs a degree-2 tensor")
    return TensorVec._wrap({(k[1], k[0]): v for k, v in t.items()}, 2)


def regroup(t: TensorVec, sizes: Sequence[int]) -> TensorVec:
    """Group consecutive legs into tuple labels, e.g. ``(a,b,c,d)`` with
    sizes ``(2,2)`` becomes ``((a,b),(c,d))``."""
    if sum(sizes) != t.degree:
        raise ArityMismatch(f"sizes {tuple(sizes)} do not add up to {t.degree}")
    cuts = list(itertools.accumulate(sizes))
    starts = [0] + cuts[:-1]
    d = {}
    for k, v in t.items():
        d[tuple(k[s:e] if e - s > 1 else k[s] for s, e in zip(starts, cuts))] = v
    return TensorVec._wrap(d, len(sizes))


def flatten(t: TensorVec, sizes: Sequence[int]) -> TensorVec:
    """Inverse of :func:`regroup`."""
    if len(sizes) != t.degree:
        raise ArityMismatch(f"{len(sizes)} groups for degree {t.degree}")
    d = {}
    for k, v in t.items():
        lab = ()
        for part, s in zip(k, sizes):
            lab += part if s > 1 else (part,)
        d[lab] = v
    return TensorVec._wrap(d, sum(sizes))


# ---------------------------------------------------------------------------
# linear maps


class LinMap:
    """Linear map given by its values on basis labels.

    ``on_basis(label)`` returns a :class:`Vec`/:class:`TensorVec`.  Values are
    memoized; the evaluator must be pure.
    """

    def __init__(self, on_basis: Callable[[Label], Vec], name: str = "", memo: bool = True,
                 in_degree: Optional[int] = None):
        self._f = on_basis
        self.name = name
        self.in_degree = in_degree
        self._memo = {} if memo else None

    def on_basis(self, label) -> Vec:
        memo = self._memo
        if memo is None:
            return self._f(label)
        try:
            return memo[label]
        except KeyError:
            out = memo[label] = self._f(label)
            return out

    def __call__(self, v: Vec) -> Vec:
        acc = None
        deg = None
        for k, c in v.items():
            img = self.on_basis(k)
            if acc is None:
                acc = {}
                deg = img.degree
            for k2, c2 in img.items():
                _acc(acc, k2, c * c2)
            if not acc and img.degree is not None:
                deg = img.degree
        if acc is None:
            return _zero_like_output(self)
        return Vec._wrap(acc) if deg is None else TensorVec._wrap(acc, deg)

    def then(self, other: "LinMap", name: str = "") -> "LinMap":
        """``other ∘ self``."""
        return LinMap(lambda l: other(self.on_basis(l)), name or f"{other.name}∘{self.name}")

    def __repr__(self):
        return f"LinMap({self.name})"


def _zero_like_output(f: LinMap) -> Vec:
    deg = getattr(f, "out_degree", None)
    return TensorVec.zero(deg) if deg else Vec.zero()


def linmap(on_basis, name="", out_degree: Optional[int] = None, memo: bool = True) -> LinMap:
    f = LinMap(on_basis, name, memo=memo)
    f.out_degree = out_degree
    return f


def identity_map(name: str = "id", out_degree: Optional[int] = None) -> LinMap:
    if out_degree:
        return linmap(lambda l: TensorVec._wrap({l: 1}, out_degree), name, out_degree, memo=False)
    return linmap(lambda l: Vec._wrap({l: 1}), name, memo=False)


class Functional:
    """Linear functional given on basis labels.

    ``cover`` optionally holds an element ``u`` with ``ω(u·x) = ω(x) = ω(x·u)``
    for all ``x``; slices of coproducts by ``ω`` are then honest elements.
    """

    def __init__(self, on_basis: Callable[[Label], Scalar], name: str = "", cover: Optional[Vec] = None):
        self._f = on_basis
        self.name = name
        self.cover = cover

    def on_basis(self, label) -> Scalar:
        return self._f(label)

    def __call__(self, v: Vec) -> Scalar:
        s = 0
        for k, c in v.items():
            x = self._f(k)
            if x != 0:
                s = s + c * x
        return s

    def __repr__(self):
        return f"Functional({self.name})"


def functional_from_dict(values: dict, name: str = "", cover: Optional[Vec] = None) -> Functional:
    vals = dict(values)
    return Functional(lambda l: vals.get(l, 0), name, cover)


def apply_on_legs(f, legs: Sequence[int], t: TensorVec) -> Vec:
    """Apply ``f`` to the given legs of ``t`` (identity on the others).

    ``f`` may be a :class:`LinMap` (degree preserving on non-contiguous legs,
    arbitrary on a contiguous block) or a :class:`Functional` (legs removed).
    """
    legs = tuple(legs)
    deg = degree_of(t)
    if not legs or len(set(legs)) != len(legs) or any(l < 0 or l >= deg for l in legs):
        raise ArityMismatch(f"legs {legs} invalid for degree {deg}")
    if t.degree is None:
        if isinstance(f, Functional):
            raise ArityMismatch("use the functional directly on a degree-1 vector")
        return f(t)
    single = len(legs) == 1
    rest = [i for i in range(deg) if i not in legs]
    functional = isinstance(f, Functional)
    contiguous = list(legs) == list(range(legs[0], legs[0] + len(legs)))
    out: dict = {}
    out_deg = None
    for k, c in t.items():
        sub = k[legs[0]] if single else tuple(k[i] for i in legs)
        if functional:
            s = f.on_basis(sub)
            if s != 0:
                _acc(out, tuple(k[i] for i in rest), c * s)
            continue
        img = f.on_basis(sub)
        kd = degree_of(img)
        if kd == len(legs):
            for k2, c2 in img.items():
                k2 = (k2,) if img.degree is None else k2
                lab = list(k)
                for pos, x in zip(legs, k2):
                    lab[pos] = x
                _acc(out, tuple(lab), c * c2)
        elif contiguous:
            a, b = k[:legs[0]], k[legs[-1] + 1:]
            for k2, c2 in img.items():
                k2 = (k2,) if img.degree is None else k2
                _acc(out, a + k2 + b, c * c2)
        else:
            raise ArityMismatch(f"map changes degree on non-contiguous legs {legs}")
        out_deg = deg - len(legs) + kd
    if functional:
        nd = deg - len(legs)
        if nd == 1:
            return Vec._wrap({k[0]: v for k, v in out.items()})
        return TensorVec._wrap(out, nd)
    if out_deg is None:
        od = getattr(f, "out_degree", None)
        out_deg = deg - len(legs) + (od or len(legs))
    if out_deg == 1:
        return Vec._wrap({k[0]: v for k, v in out.items()})
    return TensorVec._wrap(out, out_deg)


def apply_functional_leg(omega: Functional, leg: int, t: TensorVec) -> Vec:
    return apply_on_legs(omega, (leg,), t)


def tensor_maps(*fs: LinMap) -> LinMap:
    """``f1 ⊗ f2 ⊗ ...`` acting on tuple labels, each factor on one leg."""
    n = len(fs)

    def ev(label):
        parts = [f.on_basis(x) for f, x in zip(fs, label)]
        return tensor_product(*parts)

    return linmap(ev, "⊗".join(f.name for f in fs), n)


def maps_agree(f, g, labels: Iterable) -> Optional[object]:
    """First label where ``f`` and ``g`` differ, or ``None`` (window equality)."""
    for l in labels:
        if f.on_basis(l) != g.on_basis(l):
            return l
    return None


# ---------------------------------------------------------------------------
# bases


@dataclass(frozen=True)
class Basis:
    """Finite label list, or a lazy countable basis (membership + enumerator)."""

    labels: Optional[tuple] = None
    contains: Optional[Callable[[Label], bool]] = field(default=None, compare=False)
    enumerator: Optional[Callable[[], Iterator]] = field(default=None, compare=False)
    name: str = ""

    @classmethod
    def finite(cls, labels: Iterable, name: str = "") -> "Basis":
        return cls(labels=tuple(labels), name=name)

    @classmethod
    def lazy(cls, contains, enumerator, name: str = "") -> "Basis":
        return cls(contains=contains, enumerator=enumerator, name=name)

    @property
    def is_finite(self) -> bool:
        return self.labels is not None

    def __len__(self):
        if self.labels is None:
            raise TypeError(f"basis {self.name!r} is infinite")
        return len(self.labels)

    def __contains__(self, label) -> bool:
        if self.labels is not None:
            return label in self._index
        return bool(self.contains(label))

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {l: i for i, l in enumerate(self.labels)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, label) -> int:
        return self._index[label]

    def window(self, size: Optional[int] = None) -> list:
        """All labels of a finite basis, or the first ``2*size+1`` enumerated
        labels of a lazy one (sorted)."""
        if self.labels is not None:
            return list(self.labels)
        if size is None:
            raise ValueError(f"basis {self.name!r} is lazy; a window size is required")
        return sorted(itertools.islice(self.enumerator(), 2 * size + 1), key=label_key)

    def product(self, other: "Basis") -> "Basis":
        if self.is_finite and other.is_finite:
            return Basis.finite(itertools.product(self.labels, other.labels), f"{self.name}⊗{other.name}")
        return Basis.lazy(
            lambda l: isinstance(l, tuple) and len(l) == 2 and l[0] in self and l[1] in other,
            lambda: _diagonal_pairs(self.enumerator(), other.enumerator()),
            f"{self.name}⊗{other.name}",
        )


def _diagonal_pairs(it1, it2):
    xs, ys = [], []
    it1, it2 = iter(it1), iter(it2)
    done1 = done2 = False
    n = 0
    while not (done1 and done2):
        if not done1:
            try:
                xs.append(next(it1))
            except StopIteration:
                done1 = True
        if not done2:
            try:
                ys.append(next(it2))
            except StopIteration:
                done2 = True
        for i in range(len(xs)):
            j = n - i
            if 0 <= j < len(ys):
                yield (xs[i], ys[j])
        n += 1
        if done1 and done2:
            break
