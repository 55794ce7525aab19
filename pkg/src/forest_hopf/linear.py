"""Finite Poly-linear combinations of forests, forest pairs and forest triples."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, TypeVar

from .coefficients import ONE, ZERO, Poly
from .forest import UNIT, Forest, Tree, as_forest, concat

C = TypeVar("C", bound="Combination")


class Combination:
    """Sparse map ``basis key -> nonzero Poly`` with module operations.

    Subclasses fix the basis (forests, pairs or triples) and the product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] | None = None):
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                key = self._check_key(key)
                c = Poly.coerce(c)
                if key in acc:
                    acc[key] = acc[key] + c
                else:
                    acc[key] = c
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _from_clean(cls: type[C], terms: dict) -> C:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @staticmethod
    def _check_key(key):
        return key

    @staticmethod
    def _key_mul(a, b):
        raise NotImplementedError

    @staticmethod
    def _key_sort(key) -> tuple:
        raise NotImplementedError

    # -- container protocol ------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self):
        return self._terms.items()

    def coefficient(self, key) -> Poly:
        return self._terms.get(self._check_key(key), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_keys())

    def sorted_keys(self) -> list:
        return sorted(self._terms, key=self._key_sort)

    def sorted_items(self) -> list[tuple]:
        return [(k, self._terms[k]) for k in self.sorted_keys()]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            if isinstance(other, (int, Fraction, Poly)) and isinstance(self, Element):
                return self == Element.scalar(other)
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- module structure ----------------------------------------------------

    def __add__(self: C, other: C) -> C:
        if type(other) is not type(self):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            if k in out:
                s = out[k] + c
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = c
        return self._from_clean(out)

    def __neg__(self: C) -> C:
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self: C, other: C) -> C:
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self: C, p) -> C:
        p = Poly.coerce(p)
        if not p:
            return self._from_clean({})
        if p == ONE:
            return self
        out = {}
        for k, c in self._terms.items():
            v = c * p
            if v:
                out[k] = v
        return self._from_clean(out)

    def __rmul__(self: C, other) -> C:
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self: C, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = self._key_mul(k1, k2)
                v = c1 * c2
                if k in out:
                    out[k] = out[k] + v
                else:
                    out[k] = v
        return self._from_clean({k: c for k, c in out.items() if c})

    def map_coefficients(self: C, fn: Callable[[Poly], Poly]) -> C:
        return type(self)((k, fn(c)) for k, c in self._terms.items())

    def degrees(self) -> set:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


def _format_coefficient(c: Poly) -> tuple[str, str]:
    """Split a coefficient into a sign and a printable multiplier ('' for 1)."""
    if len(c) == 1:
        ((mono, k),) = c.items()
        sign = "-" if k < 0 else "+"
        mag = Poly({mono: -k if k < 0 else k})
        return sign, "" if mag == ONE else str(mag)
    return "+", f"({c})"


def _join_terms(rendered: list[tuple[str, str]]) -> str:
    if not rendered:
        return "0"
    out = []
    for i, (sign, body) in enumerate(rendered):
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class Element(Combination):
    """An element of the forest algebra: a Poly-combination of forests."""

    __slots__ = ()

    @staticmethod
    def _check_key(key) -> Forest:
        return as_forest(key)

    @staticmethod
    def _key_mul(a: Forest, b: Forest) -> Forest:
        return concat(a, b)

    @staticmethod
    def _key_sort(key: Forest) -> tuple:
        return key.sort_key()

    @classmethod
    def basis(cls, f: Forest | Tree) -> Element:
        return cls._from_clean({as_forest(f): ONE})

    @classmethod
    def scalar(cls, p) -> Element:
        p = Poly.coerce(p)
        return cls._from_clean({UNIT: p} if p else {})

    @classmethod
    def zero(cls) -> Element:
        return cls._from_clean({})

    @classmethod
    def one(cls) -> Element:
        return cls.scalar(ONE)

    def degrees(self) -> set[int]:
        return {f.degree for f in self._terms}

    def __str__(self) -> str:
        rendered = []
        for f, c in self.sorted_items():
            sign, mult = _format_coefficient(c)
            if not mult:
                rendered.append((sign, str(f)))
            else:
                rendered.append((sign, f"{mult} * {f}"))
        return _join_terms(rendered)

    def latex(self) -> str:
        parts = []
        for i, (f, c) in enumerate(self.sorted_items()):
            parts.append(_latex_term(c, f.latex(), first=i == 0))
        return "".join(parts) or "0"


class Tensor2(Combination):
    """A Poly-combination of pure tensors ``F (x) G`` of forests."""

    __slots__ = ()

    @staticmethod
    def _check_key(key) -> tuple[Forest, Forest]:
        a, b = key
        return (as_forest(a), as_forest(b))

    @staticmethod
    def _key_mul(a, b):
        return (concat(a[0], b[0]), concat(a[1], b[1]))

    @staticmethod
    def _key_sort(key) -> tuple:
        return (key[0].sort_key(), key[1].sort_key())

    @classmethod
    def basis(cls, left, right) -> Tensor2:
        return cls._from_clean({(as_forest(left), as_forest(right)): ONE})

    @classmethod
    def one(cls) -> Tensor2:
        return cls.basis(UNIT, UNIT)

    @classmethod
    def zero(cls) -> Tensor2:
        return cls._from_clean({})

    def degrees(self) -> set[tuple[int, int]]:
        return {(a.degree, b.degree) for a, b in self._terms}

    def apply(
        self,
        left: Callable[[Forest], Element],
        right: Callable[[Forest], Element],
    ) -> Tensor2:
        """``(left (x) right)`` applied to this tensor."""
        out = Tensor2.zero()
        lcache: dict = {}
        rcache: dict = {}
        for (a, b), c in self._terms.items():
            la = lcache.get(a)
            if la is None:
                la = lcache[a] = left(a)
            rb = rcache.get(b)
            if rb is None:
                rb = rcache[b] = right(b)
            out = out + tensor(la, rb).scale(c)
        return out

    def multiply(self) -> Element:
        """The concatenation map ``m : H (x) H -> H``."""
        return Element((concat(a, b), c) for (a, b), c in self._terms.items())

    def contract_left(self, fn: Callable[[Forest], Poly]) -> Element:
        """``(fn (x) id)`` followed by ``k (x) H = H``."""
        return Element((b, c * fn(a)) for (a, b), c in self._terms.items())

    def contract_right(self, fn: Callable[[Forest], Poly]) -> Element:
        return Element((a, c * fn(b)) for (a, b), c in self._terms.items())

    def expand_left(self, fn: Callable[[Forest], Tensor2]) -> Tensor3:
        """``(fn (x) id)`` for a map ``fn : H -> H (x) H``."""
        acc: dict = {}
        for (a, b), c in self._terms.items():
            for (l, r), d in fn(a).items():
                k = (l, r, b)
                acc[k] = acc[k] + c * d if k in acc else c * d
        return Tensor3(acc)

    def expand_right(self, fn: Callable[[Forest], Tensor2]) -> Tensor3:
        acc: dict = {}
        for (a, b), c in self._terms.items():
            for (l, r), d in fn(b).items():
                k = (a, l, r)
                acc[k] = acc[k] + c * d if k in acc else c * d
        return Tensor3(acc)

    def __str__(self) -> str:
        return self.format()

    def format(self, otimes: str = "⊗") -> str:
        rendered = []
        for (a, b), c in self.sorted_items():
            sign, mult = _format_coefficient(c)
            body = f"({a}) {otimes} ({b})"
            rendered.append((sign, f"{mult} * {body}" if mult else body))
        return _join_terms(rendered)

    def latex(self) -> str:
        parts = []
        for i, ((a, b), c) in enumerate(self.sorted_items()):
            parts.append(_latex_term(c, f"{a.latex()}\\otimes {b.latex()}", first=i == 0))
        return "".join(parts) or "0"


class Tensor3(Combination):
    __slots__ = ()

    @staticmethod
    def _check_key(key) -> tuple[Forest, Forest, Forest]:
        a, b, c = key
        return (as_forest(a), as_forest(b), as_forest(c))

    @staticmethod
    def _key_mul(a, b):
        return tuple(concat(x, y) for x, y in zip(a, b))

    @staticmethod
    def _key_sort(key) -> tuple:
        return tuple(f.sort_key() for f in key)

    @classmethod
    def basis(cls, a, b, c) -> Tensor3:
        return cls._from_clean({(as_forest(a), as_forest(b), as_forest(c)): ONE})

    @classmethod
    def zero(cls) -> Tensor3:
        return cls._from_clean({})

    def degrees(self) -> set[tuple[int, int, int]]:
        return {tuple(f.degree for f in k) for k in self._terms}

    def __str__(self) -> str:
        rendered = []
        for (a, b, d), c in self.sorted_items():
            sign, mult = _format_coefficient(c)
            body = f"({a}) ⊗ ({b}) ⊗ ({d})"
            rendered.append((sign, f"{mult} * {body}" if mult else body))
        return _join_terms(rendered)


def _latex_term(c: Poly, body: str, first: bool) -> str:
    if len(c) == 1:
        ((mono, k),) = c.items()
        neg = k < 0
        mag = Poly({mono: -k if neg else k})
        mult = "" if mag == ONE else mag.latex()
        if mult and not mag.is_constant():
            mult = mult + " "
        text = f"{mult}{body}"
    else:
        neg = False
        text = f"({c.latex()}) {body}"
    if first:
        return ("-" if neg else "") + text
    return (" - " if neg else " + ") + text


def tensor(a: Element, b: Element) -> Tensor2:
    """The bilinear tensor product of two elements."""
    out = {}
    for fa, ca in a.items():
        for fb, cb in b.items():
            v = ca * cb
            if v:
                out[(fa, fb)] = v
    return Tensor2._from_clean(out)


def elem_add(a: Element, b: Element) -> Element:
    return a + b


def elem_scale(p, a: Element) -> Element:
    return a.scale(p)


def elem_mul(a: Element, b: Element) -> Element:
    return a * b


def tensor2_mul(s: Tensor2, t: Tensor2) -> Tensor2:
    return s * t


def tensor3_mul(s: Tensor3, t: Tensor3) -> Tensor3:
    return s * t


def lift_linear(phi: Callable[[Forest], object], zero=None) -> Callable[[Element], object]:
    """Extend a map defined on basis forests Poly-linearly to elements.

    ``phi`` may return an :class:`Element`, a tensor, or a :class:`Poly`;
    ``zero`` is what the lifted map returns on the zero element (defaults to
    the zero :class:`Element`).
    """

    def lifted(a):
        if isinstance(a, (Forest, Tree)):
            return phi(as_forest(a))
        result = None
        for f, c in a.items():
            v = phi(f)
            v = c * v if isinstance(v, Poly) else v.scale(c)
            result = v if result is None else result + v
        if result is None:
            return Element.zero() if zero is None else zero
        return result

    return lifted
