"""Omega-operated algebra targets and the evaluation fold out of the forest algebra.

A target is a bundle of callables.  Evaluating a forest folds it
structurally: concatenation goes to the target product, grafting under ``w``
to the target operator ``P_w``, and a leaf ``x`` to the generator image.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from .coefficients import Poly, SymbolTable
from .forest import Decoration, DecorationKind, Forest, Tree, as_forest, graft
from .hopf import HopfAlgebra
from .linear import Element, Tensor2, tensor


class MissingImageError(KeyError):
    def __str__(self) -> str:
        kind, label = self.args
        return f"target has no {kind} for label {label!r}"


class GeneratorConditionError(ValueError):
    """A generator image does not have the coproduct of a weighted primitive."""

    def __init__(self, label: str, detail: str = ""):
        self.label = label
        msg = (
            f"coproduct of the image f({label}) must be "
            f"f({label}) ⊗ 1 + 1 ⊗ f({label}) + weight({label}) 1 ⊗ 1"
        )
        super().__init__(msg + (f": {detail}" if detail else ""))


def _lookup(source, kind: str, label: str):
    if isinstance(source, Mapping):
        try:
            return source[label]
        except KeyError:
            raise MissingImageError(kind, label) from None
    return source


@dataclass(frozen=True)
class OperatedTarget:
    """An Omega-operated algebra given by its operations.

    ``op`` is either a callable ``(label, value) -> value`` or a mapping from
    Omega-label to a unary callable; ``gen`` is either a callable
    ``label -> value`` or a mapping from X-label to value.
    """

    unit: Any
    mul: Callable[[Any, Any], Any]
    op: Callable[[str, Any], Any] | Mapping[str, Callable[[Any], Any]]
    gen: Callable[[str], Any] | Mapping[str, Any]
    eq: Callable[[Any, Any], bool] = operator.eq
    name: str = "target"

    def apply_op(self, label: str, value):
        fn = _lookup(self.op, "operator", label)
        if isinstance(self.op, Mapping):
            return fn(value)
        try:
            return fn(label, value)
        except KeyError:
            raise MissingImageError("operator", label) from None

    def generator(self, label: str):
        if isinstance(self.gen, Mapping):
            return _lookup(self.gen, "generator image", label)
        try:
            return self.gen(label)
        except KeyError:
            raise MissingImageError("generator image", label) from None


def evaluate(f: Forest | Tree, t: OperatedTarget):
    """The operated-algebra homomorphism extending the generator map, on a forest."""
    result = t.unit
    for i, tree in enumerate(as_forest(f)):
        value = _evaluate_tree(tree, t)
        result = value if i == 0 else t.mul(result, value)
    return result


def _evaluate_tree(tree: Tree, t: OperatedTarget):
    d = tree.decoration
    if not d.is_omega:
        if tree.children:
            raise ValueError(f"X-label {d.label!r} on an internal vertex")
        return t.generator(d.label)
    return t.apply_op(d.label, evaluate(tree.branches, t))


def evaluate_linear(a: Element, t: OperatedTarget):
    """Linear extension of :func:`evaluate`; needs a carrier with ``+`` and Poly scaling."""
    result = None
    for f, c in a.items():
        v = c * evaluate(f, t)
        result = v if result is None else result + v
    return Poly() * t.unit if result is None else result


@dataclass
class Report:
    """Outcome of a law check: how many instances ran and which failed."""

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, passed: bool, detail) -> None:
        self.checked += 1
        if not passed:
            self.violations.append(detail)

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.name}: {self.checked} checked, {status}"


def check_homomorphism(
    t: OperatedTarget,
    forests: Iterable[Forest],
    omegas: Iterable[str],
    max_degree: int | None = None,
) -> Report:
    """Check ``ev(FG) = ev(F) ev(G)`` and ``ev(B_w F) = P_w ev(F)`` on the given forests.

    With ``max_degree`` set, only products of total degree at most that are tried.
    """
    forests = [as_forest(f) for f in forests]
    omegas = list(omegas)
    report = Report(f"homomorphism[{t.name}]")
    values = {f: evaluate(f, t) for f in forests}
    for f in forests:
        for g in forests:
            if max_degree is not None and f.degree + g.degree > max_degree:
                continue
            lhs = evaluate(f * g, t)
            rhs = t.mul(values[f], values[g])
            report.record(t.eq(lhs, rhs), ("product", f, g, lhs, rhs))
    for f in forests:
        for w in omegas:
            lhs = evaluate(graft(f, Decoration(DecorationKind.OMEGA, w)), t)
            rhs = t.apply_op(w, values[f])
            report.record(t.eq(lhs, rhs), ("operator", w, f, lhs, rhs))
    return report


@dataclass(frozen=True)
class OperatedBialgebraTarget(OperatedTarget):
    """An Omega-operated bialgebra: an operated target plus coalgebra maps.

    Carrier values and tensors must support ``+`` and multiplication by a
    :class:`Poly` on the left.  ``weight`` returns the scalar ``la_w`` of an
    Omega-label and ``mu_x`` of an X-label; ``x_labels`` lists the labels whose
    generator images are validated on construction.
    """

    cop: Callable[[Any], Any] = None
    cou: Callable[[Any], Poly] = None
    tensor: Callable[[Any, Any], Any] = None
    map_right: Callable[[Any, Callable[[Any], Any]], Any] = None
    weight: Callable[[str], Poly] = None
    x_labels: tuple[str, ...] = ()

    def __post_init__(self):
        missing = [
            n for n in ("cop", "cou", "tensor", "map_right", "weight") if getattr(self, n) is None
        ]
        if missing:
            raise TypeError(f"bialgebra target is missing {', '.join(missing)}")
        for x in self.x_labels:
            fx = self.generator(x)
            expected = (
                self.tensor(fx, self.unit)
                + self.tensor(self.unit, fx)
                + self.weight(x) * self.tensor(self.unit, self.unit)
            )
            actual = self.cop(fx)
            if not self.eq(actual, expected):
                raise GeneratorConditionError(x, f"got {actual}")


def check_cocycle_target(
    t: OperatedBialgebraTarget, elems: Iterable[Any], omegas: Iterable[str]
) -> Report:
    """Check the weighted 1-cocycle identity and ``cou P_w = -la_w cou`` on carrier elements."""
    omegas = list(omegas)
    report = Report(f"cocycle[{t.name}]")
    for h in elems:
        cop_h = t.cop(h)
        cou_h = t.cou(h)
        for w in omegas:
            ph = t.apply_op(w, h)
            lam = t.weight(w)
            lhs = t.cop(ph)
            rhs = (
                t.tensor(ph, t.unit)
                + lam * t.tensor(h, t.unit)
                + t.map_right(cop_h, lambda v, w=w: t.apply_op(w, v))
            )
            report.record(t.eq(lhs, rhs), ("cocycle", w, h, lhs, rhs))
            c_lhs = t.cou(ph)
            c_rhs = -lam * cou_h
            report.record(c_lhs == c_rhs, ("counit", w, h, c_lhs, c_rhs))
    return report


def check_bialgebra_homomorphism(
    t: OperatedBialgebraTarget, source: HopfAlgebra, forests: Iterable[Forest]
) -> Report:
    """Check that evaluation commutes with coproduct and counit on the given forests."""
    report = Report(f"bialgebra-homomorphism[{t.name}]")
    cache: dict = {}

    def ev(f: Forest):
        if f not in cache:
            cache[f] = evaluate(f, t)
        return cache[f]

    for f in forests:
        f = as_forest(f)
        image = ev(f)
        lhs = t.cop(image)
        rhs = None
        for (g, h), c in source.coproduct(f).items():
            term = c * t.tensor(ev(g), ev(h))
            rhs = term if rhs is None else rhs + term
        report.record(t.eq(lhs, rhs), ("coproduct", f, lhs, rhs))
        c_lhs = t.cou(image)
        c_rhs = source.counit(f)
        report.record(c_lhs == c_rhs, ("counit", f, c_lhs, c_rhs))
    return report


# -- concrete targets ------------------------------------------------------------


def _map_right_tensor(tns: Tensor2, fn: Callable[[Element], Element]) -> Tensor2:
    out = Tensor2.zero()
    for (a, b), c in tns.items():
        out = out + tensor(Element.basis(a), fn(Element.basis(b))).scale(c)
    return out


def forest_target(
    hopf: HopfAlgebra,
    gen: Mapping[str, Element] | None = None,
    category_weight: Callable[[str], Poly] | None = None,
    name: str = "forests",
) -> OperatedBialgebraTarget:
    """The forest Hopf algebra itself as an operated bialgebra target.

    ``gen`` defaults to ``x -> leaf x``.  ``category_weight`` supplies the
    ``la``/``mu`` scalars the generator images are checked against; by default
    the target's own weights.
    """
    symbols = hopf.symbols
    if gen is None:
        gen = {x: Element.basis(Tree(symbols[x])) for x in symbols.x_labels}
    weight = category_weight or hopf.weight
    return OperatedBialgebraTarget(
        unit=Element.one(),
        mul=operator.mul,
        op=lambda w, a: hopf.graft(a, w),
        gen=gen,
        name=name,
        cop=hopf.coproduct,
        cou=hopf.counit,
        tensor=tensor,
        map_right=_map_right_tensor,
        weight=weight,
        x_labels=tuple(gen),
    )


def renaming_target(source: HopfAlgebra, rename: Mapping[str, str]) -> OperatedBialgebraTarget:
    """Forest algebra on relabelled X-labels, with weights pulled back from ``source``.

    Each source label ``x`` maps to the leaf ``rename[x]`` (identity when absent).
    The target label ``y`` gets the weight of the first ``x`` renamed to it;
    generator validation rejects renamings that merge labels of different weight.
    """
    src = source.symbols
    unknown = set(rename) - set(src.x_labels)
    if unknown:
        raise ValueError(f"can only rename declared X-labels, not {sorted(unknown)}")
    images = {x: rename.get(x, x) for x in src.x_labels}
    clash = set(images.values()) & set(src.omega_labels)
    if clash:
        raise ValueError(f"renamed labels collide with Omega-labels: {sorted(clash)}")
    target_x = tuple(dict.fromkeys(images.values()))
    target_symbols = SymbolTable(target_x, src.omega_labels)
    weights: dict[str, Poly] = {}
    for x, y in images.items():
        weights.setdefault(y, source.weight(x))
    for w in src.omega_labels:
        weights[w] = source.weight(w)
    target = HopfAlgebra(target_symbols, weights=weights)
    gen = {x: Element.basis(Tree(target_symbols[y])) for x, y in images.items()}
    return forest_target(target, gen=gen, category_weight=source.weight, name="renamed forests")


def relabel(f: Forest | Tree, rename: Mapping[str, str], symbols: SymbolTable) -> Forest:
    """Rename X-decorations structurally (the expected value of a renaming fold)."""

    def go(t: Tree) -> Tree:
        d = t.decoration
        if not d.is_omega:
            d = symbols[rename.get(d.label, d.label)]
        return Tree(d, [go(c) for c in t.children])

    return Forest(go(t) for t in as_forest(f))
