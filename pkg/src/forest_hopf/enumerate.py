"""Exhaustive generation of decorated planar forests by number of vertices."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .coefficients import SymbolTable
from .forest import Forest, Tree

# A shape is an undecorated planar forest: a tuple of trees, each tree being
# the tuple of its children's shapes.  The one-vertex tree is ``()``.
Shape = tuple


@lru_cache(maxsize=None)
def _forest_shapes(n: int) -> tuple[Shape, ...]:
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for first in _tree_shapes(k):
            for rest in _forest_shapes(n - k):
                out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _tree_shapes(k: int) -> tuple[Shape, ...]:
    return tuple(_forest_shapes(k - 1))


def shapes(n: int) -> list[Shape]:
    """All planar rooted forests with exactly ``n`` vertices, each once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_forest_shapes(n))


def shape_vertices(shape: Shape) -> int:
    return sum(1 + shape_vertices(t) for t in shape)


def shape_internal_and_leaves(shape: Shape) -> tuple[int, int]:
    internal = leaves = 0
    for t in shape:
        if t:
            internal += 1
            i, l = shape_internal_and_leaves(t)
            internal += i
            leaves += l
        else:
            leaves += 1
    return internal, leaves


def decoration_count(shape: Shape, symbols: SymbolTable) -> int:
    """``|Omega|^internal * (|X| + |Omega|)^leaves``."""
    internal, leaves = shape_internal_and_leaves(shape)
    n_omega = len(symbols.omega_labels)
    return n_omega**internal * (n_omega + len(symbols.x_labels)) ** leaves


def _decorate_tree(skel: Shape, symbols: SymbolTable) -> list[Tree]:
    if not skel:
        return [Tree(d) for d in symbols.decorations]
    below = _decorate_forest(skel, symbols)
    return [Tree(w, f.trees) for w in symbols.omega_decorations for f in below]


def _decorate_forest(skel: Shape, symbols: SymbolTable) -> list[Forest]:
    choices = [_decorate_tree(t, symbols) for t in skel]
    return [Forest(combo) for combo in itertools.product(*choices)]


def decorate(shape: Shape, symbols: SymbolTable) -> list[Forest]:
    """Every admissible decoration of ``shape``."""
    return _decorate_forest(shape, symbols)


def forests_of_degree(n: int, symbols: SymbolTable) -> list[Forest]:
    out = [f for s in shapes(n) for f in decorate(s, symbols)]
    out.sort(key=Forest.sort_key)
    return out


def forests_up_to(n: int, symbols: SymbolTable) -> Iterator[Forest]:
    """All decorated forests of degree at most ``n``, in canonical order."""
    for k in range(n + 1):
        yield from forests_of_degree(k, symbols)


def trees_up_to(n: int, symbols: SymbolTable) -> Iterator[Forest]:
    return (f for f in forests_up_to(n, symbols) if f.breadth == 1)
