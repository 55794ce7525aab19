"""Text and JSON forms of forests, elements and tensors.

Forest grammar::

    forest := "1" | tree { WS tree }
    tree   := label | label "[" forest "]"

Only Omega-labels may open brackets.  Element text is a sum of
``<poly> * <forest>`` terms; tensor text uses ``(<forest>) ⊗ (<forest>)``
with ``(<forest>)o(<forest>)`` accepted as an ASCII spelling.
"""

from __future__ import annotations

import re
from typing import Any

from .coefficients import Poly, SymbolTable, UnknownLabelError
from .forest import Forest, Tree, as_forest
from .linear import Element, Tensor2

JSON_SCHEMA_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.message = message
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


_FOREST_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*|1(?![0-9]))|(\[)|(\])|(\S))")


class _ForestParser:
    def __init__(self, text: str, symbols: SymbolTable):
        self.text = text
        self.symbols = symbols
        self.tokens: list[tuple[str, str, int]] = []
        for m in _FOREST_TOKEN.finditer(text):
            if m.group(1):
                self.tokens.append(("label", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("open", "[", m.start(2)))
            elif m.group(3):
                self.tokens.append(("close", "]", m.start(3)))
            elif m.group(4):
                raise ParseError(f"unexpected character {m.group(4)!r}", text, m.start(4))
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def parse(self) -> Forest:
        f = self._forest()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return f

    def _forest(self) -> Forest:
        tok = self._peek()
        if tok is None or tok[0] == "close":
            where = tok[2] if tok else len(self.text)
            raise ParseError("expected a forest", self.text, where)
        if tok[1] == "1":
            self.pos += 1
            nxt = self._peek()
            if nxt is not None and nxt[0] == "label":
                raise ParseError("'1' cannot be concatenated with trees", self.text, nxt[2])
            return Forest()
        trees = []
        while True:
            tok = self._peek()
            if tok is None or tok[0] != "label":
                break
            if tok[1] == "1":
                raise ParseError("'1' cannot be concatenated with trees", self.text, tok[2])
            trees.append(self._tree())
        return Forest(trees)

    def _tree(self) -> Tree:
        _, label, where = self.tokens[self.pos]
        self.pos += 1
        try:
            d = self.symbols[label]
        except UnknownLabelError:
            raise ParseError(f"undeclared label {label!r}", self.text, where) from None
        nxt = self._peek()
        if nxt is None or nxt[0] != "open":
            return Tree(d)
        if not d.is_omega:
            raise ParseError(
                f"X-label {label!r} cannot be an internal vertex", self.text, where
            )
        self.pos += 1
        children = self._forest()
        close = self._peek()
        if close is None or close[0] != "close":
            where = close[2] if close else len(self.text)
            raise ParseError("expected ']'", self.text, where)
        self.pos += 1
        return Tree(d, children.trees)


def parse_forest(src: str, symbols: SymbolTable) -> Forest:
    """Parse the forest grammar, rejecting undeclared labels and X-internal vertices."""
    return _ForestParser(src, symbols).parse()


def format_forest(f: Forest | Tree) -> str:
    return str(as_forest(f))


# -- elements and tensors ----------------------------------------------------


def _split_top(text: str, seps: str) -> list[tuple[str, int]]:
    """Split at separators outside () and []; returns (chunk, offset) pairs."""
    depth = 0
    out = []
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in seps:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


def _signed_terms(text: str) -> list[tuple[int, str, int]]:
    """Split a sum at top-level ``+``/``-`` into (sign, chunk, offset)."""
    terms = []
    depth = 0
    sign = 1
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in "+-":
            chunk = text[start:i]
            if chunk.strip():
                terms.append((sign, chunk, start))
                sign = 1
            if ch == "-":
                sign = -sign
            start = i + 1
    chunk = text[start:]
    if not chunk.strip():
        raise ParseError("expected a term", text, start)
    terms.append((sign, chunk, start))
    return terms


def _coefficient(chunks: list[tuple[str, int]], text: str) -> Poly:
    coef = Poly.const(1)
    for chunk, offset in chunks:
        try:
            coef = coef * Poly.parse(chunk)
        except ValueError as exc:
            raise ParseError(str(exc), text, offset) from None
    return coef


def parse_element(src: str, symbols: SymbolTable) -> Element:
    """Parse e.g. ``x a + mu_x * a - 2*la_a * 1``.

    Within each term the last ``*``-separated factor is the forest.
    """
    if src.strip() == "0":
        return Element.zero()
    out = Element.zero()
    for sign, chunk, offset in _signed_terms(src):
        factors = _split_top(chunk, "*")
        forest_text, _ = factors[-1]
        try:
            f = parse_forest(forest_text, symbols)
        except ParseError as exc:
            raise ParseError(exc.message, src, offset + (exc.position or 0)) from None
        coef = _coefficient(factors[:-1], src) * sign
        out = out + Element.basis(f).scale(coef)
    return out


_PAIR = re.compile(r"^\s*\((.*)\)\s*(?:⊗|o|\\otimes)\s*\((.*)\)\s*$", re.S)


def parse_tensor2(src: str, symbols: SymbolTable) -> Tensor2:
    """Parse ``c * (F) ⊗ (G) + ...``; ``(F)o(G)`` is accepted for ``⊗``."""
    if src.strip() == "0":
        return Tensor2.zero()
    out = Tensor2.zero()
    for sign, chunk, offset in _signed_terms(src):
        factors = _split_top(chunk, "*")
        pair_text, pair_offset = factors[-1]
        m = _PAIR.match(pair_text)
        if not m:
            raise ParseError("expected '(forest) ⊗ (forest)'", src, offset + pair_offset)
        try:
            left = parse_forest(m.group(1), symbols)
            right = parse_forest(m.group(2), symbols)
        except ParseError as exc:
            raise ParseError(exc.message, src, offset) from None
        coef = _coefficient(factors[:-1], src) * sign
        out = out + Tensor2.basis(left, right).scale(coef)
    return out


# -- JSON ----------------------------------------------------------------------


def tree_to_json(t: Tree) -> dict:
    return {"d": t.decoration.label, "c": [tree_to_json(c) for c in t.children]}


def forest_to_json(f: Forest | Tree) -> list[dict]:
    return [tree_to_json(t) for t in as_forest(f)]


def tree_from_json(data: dict, symbols: SymbolTable) -> Tree:
    d = symbols[data["d"]]
    children = [tree_from_json(c, symbols) for c in data.get("c", [])]
    if children and not d.is_omega:
        raise ValueError(f"X-label {d.label!r} cannot be an internal vertex")
    return Tree(d, children)


def forest_from_json(data: list, symbols: SymbolTable) -> Forest:
    return Forest(tree_from_json(t, symbols) for t in data)


def element_to_json(a: Element) -> list[dict]:
    return [{"coef": c.to_json(), "forest": forest_to_json(f)} for f, c in a.sorted_items()]


def element_from_json(data: list, symbols: SymbolTable) -> Element:
    return Element(
        (forest_from_json(t["forest"], symbols), Poly.from_json(t["coef"])) for t in data
    )


def tensor2_to_json(t: Tensor2) -> list[dict]:
    return [
        {"coef": c.to_json(), "left": forest_to_json(a), "right": forest_to_json(b)}
        for (a, b), c in t.sorted_items()
    ]


def tensor2_from_json(data: list, symbols: SymbolTable) -> Tensor2:
    return Tensor2(
        (
            (forest_from_json(t["left"], symbols), forest_from_json(t["right"], symbols)),
            Poly.from_json(t["coef"]),
        )
        for t in data
    )


def to_json(value: Any) -> Any:
    """JSON-ready form of any value this package produces."""
    if isinstance(value, Poly):
        return value.to_json()
    if isinstance(value, (Forest, Tree)):
        return forest_to_json(value)
    if isinstance(value, Element):
        return element_to_json(value)
    if isinstance(value, Tensor2):
        return tensor2_to_json(value)
    raise TypeError(f"no JSON form for {type(value).__name__}")
