"""Coproduct, counit and antipode of the weighted forest Hopf algebra.

Every leaf ``x`` carries a weight ``mu_x`` and every Omega-label ``w`` a weight
``la_w``.  The coproduct satisfies

    Delta B_w(F) = B_w(F) (x) 1 + (id (x) B_w) Delta(F) + la_w F (x) 1

and is multiplicative on concatenation.  It is computed two ways: by that
recursion, and as a sum over subforests ``G (x) tilde(F/G)`` where ``tilde``
shifts every leaf by its weight.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .coefficients import ONE, Poly, Specialization, SymbolTable, weight_of
from .forest import (
    UNIT,
    Decoration,
    Forest,
    Tree,
    as_forest,
    graft,
    split,
    subforest_pairs,
)
from .linear import Element, Tensor2, lift_linear, tensor

LinearMap = Callable[[Element], Element]


class HopfAlgebra:
    """The Hopf algebra of (X, Omega)-decorated planar forests.

    Parameters
    ----------
    symbols:
        Declared labels.
    specialization:
        Optional numeric values substituted into the weights before any
        computation.
    weights:
        Optional per-label override of the weight, keyed by label.  Used to
        build targets whose weights are pulled back along a relabelling.
    """

    def __init__(
        self,
        symbols: SymbolTable,
        specialization: Specialization | None = None,
        weights: Mapping[str, Poly] | None = None,
    ):
        self.symbols = symbols
        self.specialization = specialization
        self._weights: dict[Decoration, Poly] = {}
        overrides = dict(weights or {})
        unknown = set(overrides) - set(symbols.x_labels) - set(symbols.omega_labels)
        if unknown:
            raise ValueError(f"weights given for undeclared labels {sorted(unknown)}")
        for d in symbols.decorations:
            w = Poly.coerce(overrides.get(d.label, weight_of(d)))
            if specialization is not None:
                w = specialization(w)
            self._weights[d] = w
        self._cop: dict[Forest, Tensor2] = {}
        self._tilde: dict[Forest, Element] = {}
        self._eps: dict[Forest, Poly] = {}
        self._conv_powers: dict[tuple[int, Forest], Element] = {}

    def __repr__(self) -> str:
        return (
            f"HopfAlgebra(x={list(self.symbols.x_labels)}, "
            f"omega={list(self.symbols.omega_labels)})"
        )

    def weight(self, d: Decoration | str) -> Poly:
        if isinstance(d, str):
            d = self.symbols[d]
        try:
            return self._weights[d]
        except KeyError:
            self.symbols.weight_of(d)  # raises UnknownLabelError
            raise

    def decoration(self, label: str) -> Decoration:
        return self.symbols[label]

    # -- algebra ---------------------------------------------------------------

    def one(self) -> Element:
        return Element.one()

    def graft(self, a: Element | Forest | Tree, omega: Decoration | str) -> Element:
        """``B_w`` extended linearly."""
        if isinstance(omega, str):
            omega = self.symbols[omega]
        if isinstance(a, (Forest, Tree)):
            return Element.basis(graft(a, omega))
        return Element((graft(f, omega), c) for f, c in a.items())

    def graft_right(self, t: Tensor2, omega: Decoration | str) -> Tensor2:
        """``(id (x) B_w)`` on a tensor."""
        if isinstance(omega, str):
            omega = self.symbols[omega]
        return Tensor2(((a, Forest((graft(b, omega),))), c) for (a, b), c in t.items())

    # -- leaf shift ----------------------------------------------------------

    def leaf_tilde(self, a: Element | Forest | Tree) -> Element:
        """Replace every leaf ``v`` by ``v + weight(v)`` and expand."""
        return lift_linear(self._tilde_forest)(a)

    def _tilde_forest(self, f: Forest) -> Element:
        cached = self._tilde.get(f)
        if cached is not None:
            return cached
        leaves = list(f.leaves())
        out: dict = {}
        # sum over subsets of leaves to drop, each dropped leaf contributing its weight
        for mask in range(1 << len(leaves)):
            coef = ONE
            dropped = []
            for i, (path, d) in enumerate(leaves):
                if mask >> i & 1:
                    coef = coef * self.weight(d)
                    dropped.append(path)
            if not coef:
                continue
            _, rest = split(f, dropped)
            out[rest] = out[rest] + coef if rest in out else coef
        result = Element(out)
        self._tilde[f] = result
        return result

    # -- coproduct -------------------------------------------------------------

    def coproduct(self, a: Element | Forest | Tree) -> Tensor2:
        """Coproduct via the weighted cocycle recursion on depth and breadth."""
        return lift_linear(self._cop_forest, zero=Tensor2.zero())(a)

    def _cop_forest(self, f: Forest) -> Tensor2:
        cached = self._cop.get(f)
        if cached is not None:
            return cached
        if f.is_unit:
            result = Tensor2.one()
        elif f.breadth == 1:
            result = self._cop_tree(f[0])
        else:
            result = Tensor2.one()
            for t in f:
                result = result * self._cop_forest(Forest((t,)))
        self._cop[f] = result
        return result

    def _cop_tree(self, t: Tree) -> Tensor2:
        d = t.decoration
        w = self.weight(d)
        if not d.is_omega:
            if t.children:
                raise ValueError(f"X-label {d.label!r} on an internal vertex")
            return Tensor2({(t, UNIT): ONE, (UNIT, t): ONE, (UNIT, UNIT): w})
        below = t.branches
        out = Tensor2.basis(t, UNIT)
        out = out + self.graft_right(self._cop_forest(below), d)
        out = out + Tensor2({(below, UNIT): w})
        return out

    def coproduct_cuts(self, a: Element | Forest | Tree) -> Tensor2:
        """Coproduct as ``sum over subforests G of G (x) tilde(F/G)``."""

        def cuts(f: Forest) -> Tensor2:
            out = Tensor2.zero()
            for g, q in subforest_pairs(f):
                out = out + tensor(Element.basis(g), self._tilde_forest(q))
            return out

        return lift_linear(cuts, zero=Tensor2.zero())(a)

    # -- counit ----------------------------------------------------------------

    def counit(self, a: Element | Forest | Tree) -> Poly:
        """Counit by recursion: ``eps(x) = -mu_x``, ``eps(B_w F) = -la_w eps(F)``."""
        return lift_linear(self._eps_forest, zero=Poly())(a)

    def _eps_forest(self, f: Forest) -> Poly:
        cached = self._eps.get(f)
        if cached is not None:
            return cached
        result = ONE
        for t in f:
            result = result * self._eps_tree(t)
        self._eps[f] = result
        return result

    def _eps_tree(self, t: Tree) -> Poly:
        d = t.decoration
        if not d.is_omega:
            if t.children:
                raise ValueError(f"X-label {d.label!r} on an internal vertex")
            return -self.weight(d)
        return -self.weight(d) * self._eps_forest(t.branches)

    def counit_closed(self, f: Forest | Tree) -> Poly:
        """``(-1)^|F|`` times the product of the weights of all vertices."""
        f = as_forest(f)
        result = Poly.const((-1) ** f.degree)
        for _, node in f.vertices():
            result = result * self.weight(node.decoration)
        return result

    def unit_counit(self, a: Element | Forest | Tree) -> Element:
        """``u eps``: the convolution identity."""
        return Element.scalar(self.counit(a))

    # -- filtration ------------------------------------------------------------

    def filtration_degree(self, a: Element | Forest | Tree) -> int:
        """Least ``n`` with ``a`` in the span of forests of degree at most ``n``."""
        if isinstance(a, (Forest, Tree)):
            return as_forest(a).degree
        if not a:
            raise ValueError("the zero element has no filtration degree")
        return max(a.degrees())

    # -- convolution and antipode ----------------------------------------------

    def convolve(self, phi: LinearMap, psi: LinearMap, a: Element | Forest | Tree) -> Element:
        """``m (phi (x) psi) Delta (a)``."""

        def conv(f: Forest) -> Element:
            return self._cop_forest(f).apply(
                lambda g: phi(Element.basis(g)), lambda h: psi(Element.basis(h))
            ).multiply()

        return lift_linear(conv)(a)

    def _eta(self, f: Forest) -> Element:
        # u eps - id; vanishes on the unit forest
        return Element.scalar(self._eps_forest(f)) - Element.basis(f)

    def _eta_power(self, k: int, f: Forest) -> Element:
        """``(u eps - id)^{*k}`` on a basis forest."""
        key = (k, f)
        cached = self._conv_powers.get(key)
        if cached is not None:
            return cached
        if k == 0:
            result = Element.scalar(self._eps_forest(f))
        elif k == 1:
            result = self._eta(f)
        elif k > f.degree:
            result = Element.zero()
        else:
            result = Element.zero()
            for (g, h), c in self._cop_forest(f).items():
                if g.is_unit:
                    continue
                left = self._eta(g)
                right = self._eta_power(k - 1, h)
                if right:
                    result = result + (left * right).scale(c)
        self._conv_powers[key] = result
        return result

    def antipode(self, a: Element | Forest | Tree) -> Element:
        """Antipode as the terminating series ``sum_k (u eps - id)^{*k}``."""

        def series(f: Forest) -> Element:
            out = Element.zero()
            for k in range(f.degree + 1):
                out = out + self._eta_power(k, f)
            return out

        return lift_linear(series)(a)
