"""Planar rooted trees and forests with (X, Omega) vertex decorations.

Internal vertices carry Omega-labels; leaves carry X- or Omega-labels.  A
forest is an ordered tuple of trees and the empty forest is the unit ``1`` of
the concatenation monoid.  Both types are immutable and hashable; vertices are
addressed by paths ``(root_index, child_index, child_index, ...)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DecorationKind(enum.Enum):
    X = "x"
    OMEGA = "omega"


@dataclass(frozen=True, order=False)
class Decoration:
    kind: DecorationKind
    label: str

    @property
    def is_omega(self) -> bool:
        return self.kind is DecorationKind.OMEGA

    @property
    def sort_key(self) -> tuple:
        return (0 if self.kind is DecorationKind.X else 1, self.label)

    def __str__(self) -> str:
        return self.label


class Tree:
    """A decorated planar rooted tree."""

    __slots__ = ("decoration", "children", "_hash", "_degree")

    def __init__(self, decoration: Decoration, children: Iterable[Tree] = ()):
        self.decoration = decoration
        self.children = tuple(children)
        self._hash = hash((decoration, self.children))
        self._degree = 1 + sum(c._degree for c in self.children)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.decoration == other.decoration
            and self.children == other.children
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tree({str(self)!r})"

    def __str__(self) -> str:
        if not self.children:
            return self.decoration.label
        return f"{self.decoration.label}[{' '.join(map(str, self.children))}]"

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def depth(self) -> int:
        if not self.decoration.is_omega:
            # an X-vertex is necessarily a leaf in a valid tree
            return max((c.depth for c in self.children), default=0)
        return 1 + max((c.depth for c in self.children), default=0)

    @property
    def branches(self) -> Forest:
        """The forest of subtrees hanging below the root."""
        return Forest(self.children)

    def preorder(self) -> Iterator[tuple[tuple[int, ...], Tree]]:
        stack = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((path + (i,), node.children[i]))

    def shape_key(self) -> tuple:
        return tuple((node.decoration.sort_key, len(node.children)) for _, node in self.preorder())


class Forest:
    """An ordered sequence of trees; ``Forest()`` is the unit 1."""

    __slots__ = ("trees", "_hash", "_degree")

    def __init__(self, trees: Iterable[Tree] = ()):
        self.trees = tuple(trees)
        self._hash = hash(self.trees)
        self._degree = sum(t._degree for t in self.trees)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Forest):
            return NotImplemented
        return self._hash == other._hash and self.trees == other.trees

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __getitem__(self, i: int) -> Tree:
        return self.trees[i]

    def __bool__(self) -> bool:
        return bool(self.trees)

    def __mul__(self, other: Forest) -> Forest:
        if not isinstance(other, Forest):
            return NotImplemented
        return concat(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.trees)) if self.trees else "1"

    def __repr__(self) -> str:
        return f"Forest({str(self)!r})"

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def breadth(self) -> int:
        return len(self.trees)

    @property
    def depth(self) -> int:
        return max((t.depth for t in self.trees), default=0)

    @property
    def is_unit(self) -> bool:
        return not self.trees

    def vertices(self) -> Iterator[tuple[tuple[int, ...], Tree]]:
        """All vertices in depth-first pre-order, as ``(path, subtree)`` pairs."""
        for i, t in enumerate(self.trees):
            for path, node in t.preorder():
                yield (i,) + path, node

    def leaves(self) -> Iterator[tuple[tuple[int, ...], Decoration]]:
        for path, node in self.vertices():
            if node.is_leaf:
                yield path, node.decoration

    def subtree(self, path: Sequence[int]) -> Tree:
        node = self.trees[path[0]]
        for i in path[1:]:
            node = node.children[i]
        return node

    def sort_key(self) -> tuple:
        """Canonical order: degree, breadth, then pre-order decorations and arities."""
        return (
            self._degree,
            len(self.trees),
            tuple(t.shape_key() for t in self.trees),
        )

    def latex(self) -> str:
        if not self.trees:
            return "1"
        return "".join(_tree_latex(t) for t in self.trees)


def _tree_latex(t: Tree) -> str:
    if t.is_leaf:
        return f"\\bullet_{{{t.decoration.label}}}"
    inner = "".join(_tree_latex(c) for c in t.children)
    return f"B^+_{{{t.decoration.label}}}({inner})"


UNIT = Forest()


def as_forest(value: Forest | Tree | Iterable[Tree]) -> Forest:
    if isinstance(value, Forest):
        return value
    if isinstance(value, Tree):
        return Forest((value,))
    return Forest(value)


def leaf(d: Decoration) -> Tree:
    return Tree(d)


def graft(f: Forest | Tree, omega: Decoration) -> Tree:
    """Attach the roots of ``f``, in order, under a new root decorated ``omega``."""
    if not omega.is_omega:
        raise ValueError(f"cannot graft under X-label {omega.label!r}: internal vertices need Omega-labels")
    return Tree(omega, as_forest(f).trees)


def concat(f: Forest | Tree, g: Forest | Tree) -> Forest:
    f, g = as_forest(f), as_forest(g)
    if not f.trees:
        return g
    if not g.trees:
        return f
    return Forest(f.trees + g.trees)


def degree(f: Forest | Tree) -> int:
    return as_forest(f).degree


def breadth(f: Forest | Tree) -> int:
    return as_forest(f).breadth


def depth(f: Forest | Tree) -> int:
    """Maximum number of Omega-decorated vertices on a root-to-leaf path."""
    return as_forest(f).depth


@dataclass(frozen=True)
class Violation:
    path: tuple[int, ...]
    decoration: Decoration

    def __str__(self) -> str:
        where = ".".join(map(str, self.path))
        return f"internal vertex at {where} carries X-label {self.decoration.label!r}"


def validate(f: Forest | Tree) -> Violation | None:
    """Return the first internal vertex with an X-label, or ``None`` if valid."""
    for path, node in as_forest(f).vertices():
        if node.children and not node.decoration.is_omega:
            return Violation(path, node.decoration)
    return None


# -- subforests ------------------------------------------------------------


def _tree_antichains(t: Tree) -> list[tuple[tuple[int, ...], ...]]:
    # either the root is selected (taking its whole subtree) or we recurse
    out: list[tuple[tuple[int, ...], ...]] = [((),)]
    per_child = [
        [tuple((i,) + p for p in sel) for sel in _tree_antichains(c)]
        for i, c in enumerate(t.children)
    ]
    for combo in itertools.product(*per_child):
        out.append(tuple(itertools.chain.from_iterable(combo)))
    return out


def antichains(f: Forest | Tree) -> list[tuple[tuple[int, ...], ...]]:
    """Every antichain of the descendant order, each listed in pre-order.

    The empty selection (giving the subforest 1) is included.
    """
    f = as_forest(f)
    per_tree = [
        [tuple((i,) + p for p in sel) for sel in _tree_antichains(t)]
        for i, t in enumerate(f.trees)
    ]
    return [tuple(itertools.chain.from_iterable(c)) for c in itertools.product(*per_tree)]


def _cut(t: Tree, selected: frozenset, path: tuple[int, ...]) -> Tree | None:
    if path in selected:
        return None
    kept = []
    for i, c in enumerate(t.children):
        q = _cut(c, selected, path + (i,))
        if q is not None:
            kept.append(q)
    if len(kept) == len(t.children) and all(a is b for a, b in zip(kept, t.children)):
        return t
    return Tree(t.decoration, kept)


def split(f: Forest | Tree, roots: Iterable[Sequence[int]]) -> tuple[Forest, Forest]:
    """Subforest generated by an antichain of vertices, and the quotient.

    The subforest lists the selected subtrees in pre-order of their roots.
    """
    f = as_forest(f)
    paths = sorted(tuple(p) for p in roots)
    for a, b in zip(paths, paths[1:]):
        if b[: len(a)] == a:
            raise ValueError(f"vertex {b} lies below selected vertex {a}")
    selected = frozenset(paths)
    sub = Forest(f.subtree(p) for p in paths)
    quotient = []
    for i, t in enumerate(f.trees):
        q = _cut(t, selected, (i,))
        if q is not None:
            quotient.append(q)
    return sub, Forest(quotient)


def subforest_pairs(f: Forest | Tree) -> list[tuple[Forest, Forest]]:
    """All pairs ``(G, F/G)`` with G running over the subforests of F."""
    f = as_forest(f)
    return [split(f, sel) for sel in antichains(f)]
