"""Exhaustive law checks over all forests up to a given degree.

Forests are visited in canonical order, so the first recorded violation of
each check is a smallest counterexample.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable

from .coefficients import Specialization, SymbolTable
from .enumerate import forests_up_to
from .forest import Forest
from .hopf import HopfAlgebra
from .linear import Element
from .operated import (
    Report,
    check_bialgebra_homomorphism,
    check_cocycle_target,
    check_homomorphism,
    forest_target,
    renaming_target,
)

CHECKS = (
    "coassoc",
    "counit",
    "bialgebra",
    "cocycle",
    "homomorphism",
    "antipode",
    "equivalence",
    "filtration",
)


def check_coassociativity(hopf: HopfAlgebra, forests: Iterable[Forest]) -> Report:
    report = Report("coassoc")
    for f in forests:
        d = hopf.coproduct(f)
        lhs = d.expand_left(hopf.coproduct)
        rhs = d.expand_right(hopf.coproduct)
        report.record(lhs == rhs, (f, lhs - rhs))
    return report


def check_counit(hopf: HopfAlgebra, forests: Iterable[Forest]) -> Report:
    report = Report("counit")
    for f in forests:
        d = hopf.coproduct(f)
        target = Element.basis(f)
        left = d.contract_left(hopf.counit)
        right = d.contract_right(hopf.counit)
        report.record(left == target, (f, "left", left))
        report.record(right == target, (f, "right", right))
    return report


def check_bialgebra(hopf: HopfAlgebra, forests: Iterable[Forest], max_degree: int) -> Report:
    """Multiplicativity of coproduct and counit on pairs of total degree <= max_degree."""
    report = Report("bialgebra")
    forests = list(forests)
    for f in forests:
        for g in forests:
            if f.degree + g.degree > max_degree:
                continue
            fg = f * g
            cop_ok = hopf.coproduct(fg) == hopf.coproduct(f) * hopf.coproduct(g)
            report.record(cop_ok, (f, g, "coproduct"))
            eps_ok = hopf.counit(fg) == hopf.counit(f) * hopf.counit(g)
            report.record(eps_ok, (f, g, "counit"))
    return report


def check_cocycle(hopf: HopfAlgebra, forests: Iterable[Forest], max_degree: int) -> Report:
    """Weighted 1-cocycle identity through the operated-bialgebra interface."""
    elems = [Element.basis(f) for f in forests if f.degree < max_degree]
    report = check_cocycle_target(forest_target(hopf), elems, hopf.symbols.omega_labels)
    report.name = "cocycle"
    return report


def check_evaluation(hopf: HopfAlgebra, forests: Iterable[Forest], max_degree: int) -> Report:
    """Fold forests into a relabelled copy (X-labels rotated) and check all structure maps."""
    forests = list(forests)
    xs = hopf.symbols.x_labels
    target = renaming_target(hopf, dict(zip(xs, xs[1:] + xs[:1])))
    report = Report("homomorphism")
    for part in (
        check_homomorphism(target, forests, hopf.symbols.omega_labels, max_degree),
        check_bialgebra_homomorphism(target, hopf, forests),
    ):
        report.checked += part.checked
        report.violations += part.violations
    return report


def check_antipode(hopf: HopfAlgebra, forests: Iterable[Forest]) -> Report:
    report = Report("antipode")
    ident = lambda a: a  # noqa: E731
    for f in forests:
        ue = hopf.unit_counit(f)
        left = hopf.convolve(hopf.antipode, ident, f)
        right = hopf.convolve(ident, hopf.antipode, f)
        report.record(left == ue, (f, "S*id", left))
        report.record(right == ue, (f, "id*S", right))
    return report


def check_equivalence(hopf: HopfAlgebra, forests: Iterable[Forest]) -> Report:
    report = Report("equivalence")
    for f in forests:
        rec, cut = hopf.coproduct(f), hopf.coproduct_cuts(f)
        report.record(rec == cut, (f, "coproduct", rec - cut))
        eps, closed = hopf.counit(f), hopf.counit_closed(f)
        report.record(eps == closed, (f, "counit", eps, closed))
    return report


def check_filtration(hopf: HopfAlgebra, forests: Iterable[Forest]) -> Report:
    report = Report("filtration")
    for f in forests:
        bad = [(a, b) for (a, b) in hopf.coproduct(f).terms if a.degree + b.degree > f.degree]
        report.record(not bad, (f, bad))
    return report


def random_specializations(symbols: SymbolTable, count: int, seed: int = 0) -> list[Specialization]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(
            Specialization(
                {
                    name: Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                    for name in symbols.symbol_names()
                }
            )
        )
    return out


def run_checks(
    symbols: SymbolTable,
    max_degree: int,
    which: Iterable[str] = CHECKS,
    specializations: Iterable[Specialization | None] = (None,),
    progress: Callable[[Report, Specialization | None], None] | None = None,
) -> list[tuple[Specialization | None, Report]]:
    """Run the selected checks once per specialization (``None`` = symbolic)."""
    which = list(which)
    unknown = set(which) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    forests = list(forests_up_to(max_degree, symbols))
    results = []
    for weights in specializations:
        hopf = HopfAlgebra(symbols, specialization=weights)
        for name in which:
            if name == "bialgebra":
                report = check_bialgebra(hopf, forests, max_degree)
            elif name == "cocycle":
                report = check_cocycle(hopf, forests, max_degree)
            elif name == "homomorphism":
                report = check_evaluation(hopf, forests, max_degree)
            else:
                report = _SIMPLE[name](hopf, forests)
            results.append((weights, report))
            if progress is not None:
                progress(report, weights)
    return results


_SIMPLE = {
    "coassoc": check_coassociativity,
    "counit": check_counit,
    "antipode": check_antipode,
    "equivalence": check_equivalence,
    "filtration": check_filtration,
}
