"""Exact coefficient ring Z[la_w, mu_x] and its rational specializations.

Polynomials are stored sparsely as ``{monomial: coefficient}`` where a
monomial is a sorted tuple of ``(symbol, exponent)`` pairs.  Coefficients are
Python ints (arbitrary precision) or :class:`fractions.Fraction` once a
rational specialization has been applied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .forest import Decoration, DecorationKind

Scalar = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, int], ...]

LAMBDA_PREFIX = "la_"
MU_PREFIX = "mu_"


class UnknownLabelError(KeyError):
    """A label was used that the symbol table does not declare."""

    def __str__(self) -> str:
        return f"undeclared decoration label {self.args[0]!r}"


def _normalize(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for s, e in b:
        exps[s] = exps.get(s, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable sparse multivariate polynomial with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _normalize(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls({(): c})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> Poly:
        if exp < 0:
            raise ValueError("negative exponent")
        return cls({((name, exp),) if exp else (): 1})

    @classmethod
    def coerce(cls, value) -> Poly:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Poly")

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> Poly:
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    def __rmul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- inspection ----------------------------------------------------------

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial; raises if it is not constant."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), 0)

    def variables(self) -> set[str]:
        return {s for m in self._terms for s, _ in m}

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    def specialize(self, assignment: Mapping[str, Scalar]) -> Poly:
        out: dict = {}
        for mono, c in self._terms.items():
            rest = []
            for s, e in mono:
                if s in assignment:
                    c = c * Fraction(assignment[s]) ** e
                else:
                    rest.append((s, e))
            if c:
                key = tuple(rest)
                out[key] = out.get(key, 0) + c
        return Poly(out)

    # -- text / json -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(
            self._terms.items(),
            key=lambda mc: (-sum(e for _, e in mc[0]), mc[0]),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            factors = [f"{s}^{e}" if e > 1 else s for s, e in mono]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                pieces.append(("-" if sign == "-" else "") + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def latex(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            mag = -c if c < 0 else c
            factors = []
            for s, e in mono:
                base = _latex_symbol(s)
                factors.append(f"{base}^{{{e}}}" if e > 1 else base)
            if mag != 1 or not factors:
                if isinstance(mag, Fraction):
                    factors.insert(0, f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}")
                else:
                    factors.insert(0, str(mag))
            body = "".join(factors)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_json(self) -> list[dict]:
        return [
            {"coef": str(c), "exps": {s: e for s, e in mono}}
            for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> Poly:
        out: dict = {}
        for term in data:
            mono = tuple(sorted((s, int(e)) for s, e in term["exps"].items() if int(e)))
            out[mono] = out.get(mono, 0) + Fraction(term["coef"])
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> Poly:
        return _PolyParser(text).parse()


ZERO = Poly()
ONE = Poly.const(1)


def _latex_symbol(name: str) -> str:
    if name.startswith(LAMBDA_PREFIX):
        return f"\\lambda_{{{name[len(LAMBDA_PREFIX):]}}}"
    if name.startswith(MU_PREFIX):
        return f"\\mu_{{{name[len(MU_PREFIX):]}}}"
    return name


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _PolyParser:
    """Recursive descent over ``+ - * / ^ ( )``, integers and symbol names."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("sym", m.group(2), m.start(2)))
            elif m.group(3) is not None and not m.group(3).isspace():
                self.tokens.append(("op", m.group(3), m.start(3)))
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, value=None):
        tok = self._peek()
        if tok is None or (value is not None and tok[1] != value):
            where = tok[2] if tok else len(self.text)
            raise ValueError(f"bad polynomial {self.text!r} at position {where}")
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        p = self._sum()
        if self._peek() is not None:
            self._take("<end>")
        return p

    def _sum(self) -> Poly:
        sign = 1
        tok = self._peek()
        if tok and tok[1] in "+-" and tok[0] == "op":
            self._take()
            sign = -1 if tok[1] == "-" else 1
        acc = self._product() * sign
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self._take()
                term = self._product()
                acc = acc + term if tok[1] == "+" else acc - term
            else:
                return acc

    def _product(self) -> Poly:
        acc = self._factor()
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self._take()
                acc = acc * self._factor()
            elif tok and tok[0] == "op" and tok[1] == "/":
                self._take()
                d = self._factor()
                if not d.is_constant() or not d:
                    raise ValueError(f"bad polynomial {self.text!r}: divisor at {tok[2]} must be a nonzero number")
                acc = acc * (1 / Fraction(d.constant_value()))
            else:
                return acc

    def _factor(self) -> Poly:
        tok = self._take()
        kind, value, _ = tok
        if kind == "int":
            num = Fraction(int(value))
            nxt = self._peek()
            if nxt and nxt[1] == "/":
                self._take()
                num /= int(self._take()[1])
            return Poly.const(num)
        if kind == "sym":
            base = Poly.var(value)
        elif value == "(":
            base = self._sum()
            self._take(")")
        elif value == "-":
            return -self._factor()
        else:
            raise ValueError(f"bad polynomial {self.text!r} at position {tok[2]}")
        nxt = self._peek()
        if nxt and nxt[1] == "^":
            self._take()
            base = base ** int(self._take()[1])
        return base


@dataclass(frozen=True)
class SymbolTable:
    """Declared X-labels and Omega-labels, in declaration order."""

    x_labels: tuple[str, ...] = ()
    omega_labels: tuple[str, ...] = ("a",)
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "x_labels", tuple(self.x_labels))
        object.__setattr__(self, "omega_labels", tuple(self.omega_labels))
        if not self.omega_labels:
            raise ValueError("the set of Omega labels must be nonempty")
        clash = set(self.x_labels) & set(self.omega_labels)
        if clash:
            raise ValueError(f"labels declared as both X and Omega: {sorted(clash)}")
        for group in (self.x_labels, self.omega_labels):
            if len(set(group)) != len(group):
                raise ValueError("duplicate label declaration")
        for label in self.x_labels + self.omega_labels:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", label) or label == "1":
                raise ValueError(f"invalid label {label!r}")
        index = {x: Decoration(DecorationKind.X, x) for x in self.x_labels}
        index.update({w: Decoration(DecorationKind.OMEGA, w) for w in self.omega_labels})
        object.__setattr__(self, "_index", index)

    def __getitem__(self, label: str) -> Decoration:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def __contains__(self, item) -> bool:
        if isinstance(item, Decoration):
            return self._index.get(item.label) == item
        return item in self._index

    @property
    def decorations(self) -> tuple[Decoration, ...]:
        return tuple(self._index[label] for label in self.x_labels + self.omega_labels)

    @property
    def x_decorations(self) -> tuple[Decoration, ...]:
        return tuple(self._index[label] for label in self.x_labels)

    @property
    def omega_decorations(self) -> tuple[Decoration, ...]:
        return tuple(self._index[label] for label in self.omega_labels)

    def symbol_names(self) -> list[str]:
        return [symbol_name(d) for d in self.decorations]

    def weight_of(self, d: Decoration | str) -> Poly:
        if isinstance(d, str):
            d = self[d]
        elif d not in self:
            raise UnknownLabelError(d.label)
        return weight_of(d)


def symbol_name(d: Decoration) -> str:
    prefix = MU_PREFIX if d.kind is DecorationKind.X else LAMBDA_PREFIX
    return prefix + d.label


def weight_of(d: Decoration) -> Poly:
    """The symbolic weight ``mu_x`` of an X-label or ``la_w`` of an Omega-label."""
    return Poly.var(symbol_name(d))


@dataclass(frozen=True)
class Specialization:
    """Assignment of exact rational values to some weight symbols."""

    assignment: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "assignment", {k: Fraction(v) for k, v in dict(self.assignment).items()}
        )

    def __call__(self, p: Poly) -> Poly:
        return specialize(p, self)

    def __hash__(self) -> int:
        return hash(frozenset(self.assignment.items()))

    @classmethod
    def parse(cls, text: str) -> Specialization:
        """Parse ``la_a=0,mu_x=1/2``."""
        out = {}
        for chunk in filter(None, (c.strip() for c in text.split(","))):
            name, sep, value = chunk.partition("=")
            if not sep or not name.strip():
                raise ValueError(f"bad weight assignment {chunk!r}")
            out[name.strip()] = Fraction(value.strip())
        return cls(out)

    @classmethod
    def zero(cls, symbols: SymbolTable) -> Specialization:
        return cls({name: 0 for name in symbols.symbol_names()})


def specialize(p: Poly, s: Specialization | Mapping[str, Scalar]) -> Poly:
    """Substitute the assigned symbols of ``p``; unassigned ones stay symbolic."""
    assignment = s.assignment if isinstance(s, Specialization) else s
    return Poly.coerce(p).specialize(assignment)
