"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest
from helpers import EXAMPLE, SMALL, E, F, T2

from forest_hopf import (
    Element,
    Forest,
    HopfAlgebra,
    Poly,
    Specialization,
    SymbolTable,
    Tensor2,
    Tree,
    check_bialgebra_homomorphism,
    check_homomorphism,
    decorate,
    evaluate,
    forests_of_degree,
    forests_up_to,
    parse_forest,
    renaming_target,
    shapes,
    subforest_pairs,
)
from forest_hopf.operated import relabel


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n{status} [{number:2d}] {title} ({elapsed:.2f}s, limit {limit}s)")


@pytest.fixture(scope="module")
def small_forests_4():
    return list(forests_up_to(4, SMALL))


# The four-vertex example tree: root a, children c (a leaf) and b[x].
EXAMPLE_TREE = "a[c b[x]]"

COPRODUCT_DISPLAYS = {
    "x": "(x) ⊗ (1) + (1) ⊗ (x) + mu_x * (1) ⊗ (1)",
    "a": "(a) ⊗ (1) + (1) ⊗ (a) + la_a * (1) ⊗ (1)",
    "a[x]": "(a[x]) ⊗ (1) + (x) ⊗ (a) + (1) ⊗ (a[x]) + la_a * (x) ⊗ (1) + mu_x * (1) ⊗ (a)",
    EXAMPLE_TREE: " + ".join(
        [
            "(a[c b[x]]) ⊗ (1)",
            "(c) ⊗ (a[b[x]])",
            "mu_x * (c) ⊗ (a[b])",
            "(b[x]) ⊗ (a[c])",
            "la_c * (b[x]) ⊗ (a)",
            "(x) ⊗ (a[c b])",
            "la_b * (x) ⊗ (a[c])",
            "la_c * (x) ⊗ (a[b])",
            "la_b*la_c * (x) ⊗ (a)",
            "(c b[x]) ⊗ (a)",
            "la_a * (c b[x]) ⊗ (1)",
            "(c x) ⊗ (a[b])",
            "la_b * (c x) ⊗ (a)",
            "(1) ⊗ (a[c b[x]])",
            "mu_x * (1) ⊗ (a[c b])",
            "la_c * (1) ⊗ (a[b[x]])",
            "la_c*mu_x * (1) ⊗ (a[b])",
        ]
    ),
}

# (subforest, quotient, tilde of quotient)
SUBFOREST_TABLE = [
    ("a[c b[x]]", "1", "1"),
    ("c", "a[b[x]]", "a[b[x]] + mu_x * a[b]"),
    ("x", "a[c b]", "a[c b] + la_b * a[c] + la_c * a[b] + la_b*la_c * a"),
    ("b[x]", "a[c]", "a[c] + la_c * a"),
    ("c x", "a[b]", "a[b] + la_b * a"),
    ("c b[x]", "a", "a + la_a * 1"),
    ("1", "a[c b[x]]", "a[c b[x]] + mu_x * a[c b] + la_c * a[b[x]] + la_c*mu_x * a[b]"),
]


def test_criterion_01_worked_examples(capsys, example_hopf):
    with criterion(capsys, 1, "worked coproduct displays and subforest table", 1.0):
        for forest_text, expected in COPRODUCT_DISPLAYS.items():
            f = F(forest_text)
            assert example_hopf.coproduct(f) == T2(expected), forest_text
            assert example_hopf.coproduct_cuts(f) == T2(expected), forest_text
        assert len(example_hopf.coproduct(F(EXAMPLE_TREE))) == 17

        rows = subforest_pairs(F(EXAMPLE_TREE))
        assert len(rows) == len(SUBFOREST_TABLE)
        got = {(g, q): example_hopf.leaf_tilde(q) for g, q in rows}
        want = {(F(g), F(q)): E(t) for g, q, t in SUBFOREST_TABLE}
        assert got == want


def test_criterion_02_recursive_equals_cuts(capsys, small_hopf, small_forests_4):
    with criterion(capsys, 2, "recursive coproduct equals cut coproduct, degree <= 4", 60.0):
        for f in small_forests_4:
            assert small_hopf.coproduct(f) == small_hopf.coproduct_cuts(f), f


def test_criterion_03_bialgebra(capsys, small_forests_4):
    with criterion(capsys, 3, "coassociativity, counit laws, multiplicativity, degree <= 4", 60.0):
        hopf = HopfAlgebra(SMALL)
        for f in small_forests_4:
            d = hopf.coproduct(f)
            assert d.expand_left(hopf.coproduct) == d.expand_right(hopf.coproduct), f
            assert d.contract_left(hopf.counit) == Element.basis(f), f
            assert d.contract_right(hopf.counit) == Element.basis(f), f
        for f in small_forests_4:
            for g in small_forests_4:
                if f.degree + g.degree > 4:
                    continue
                assert hopf.coproduct(f * g) == hopf.coproduct(f) * hopf.coproduct(g), (f, g)
                assert hopf.counit(f * g) == hopf.counit(f) * hopf.counit(g), (f, g)


def test_criterion_04_weighted_cocycle(capsys, small_hopf):
    with criterion(capsys, 4, "weighted cocycle and counit of grafting, degree <= 3", 10.0):
        h = small_hopf
        for f in forests_up_to(3, SMALL):
            d = h.coproduct_cuts(f)
            for w in SMALL.omega_labels:
                lam = Poly.var(f"la_{w}")
                bf = h.graft(f, w)
                expected = (
                    Tensor2.basis(next(iter(bf)), Forest())
                    + Tensor2.basis(f, Forest()).scale(lam)
                    + h.graft_right(d, w)
                )
                assert h.coproduct_cuts(bf) == expected, (w, f)
                assert h.coproduct(bf) == expected, (w, f)
                assert h.counit(bf) == -lam * h.counit(f), (w, f)


def test_criterion_05_antipode(capsys, small_hopf, small_forests_4):
    with criterion(capsys, 5, "antipode axioms, degree <= 4", 120.0):
        h = small_hopf
        ident = lambda a: a  # noqa: E731
        for f in small_forests_4:
            ue = h.unit_counit(f)
            assert h.convolve(h.antipode, ident, f) == ue, f
            assert h.convolve(ident, h.antipode, f) == ue, f
        assert h.antipode(Element.one()) == Element.one()
        # S(x) + x + mu_x S(1) = eps(x) = -mu_x forces the value below
        assert h.antipode(F("x", SMALL)) == E("-x - 2*mu_x * 1", SMALL)


def _closed_counit(f):
    # (-1)^|F| times the weight of every vertex
    value = Poly.const((-1) ** f.degree)
    for _, node in f.vertices():
        prefix = "la_" if node.decoration.is_omega else "mu_"
        value = value * Poly.var(prefix + node.decoration.label)
    return value


def test_criterion_06_counit_closed_form(capsys, small_hopf):
    with criterion(capsys, 6, "closed-form counit agrees with recursive counit, degree <= 5", 30.0):
        for f in forests_up_to(5, SMALL):
            assert small_hopf.counit(f) == _closed_counit(f), f
            assert small_hopf.counit_closed(f) == _closed_counit(f), f


def _bullet_word_coproduct(word):
    # each letter goes to the scalar part, the left factor or the right factor
    out = Tensor2.zero()
    for roles in itertools.product("ILR", repeat=len(word)):
        coef = Poly.const(1)
        left, right = [], []
        for x, role in zip(word, roles):
            if role == "I":
                coef = coef * Poly.var(f"mu_{x}")
            else:
                (left if role == "L" else right).append(Tree(EXAMPLE[x]))
        out = out + Tensor2.basis(Forest(left), Forest(right)).scale(coef)
    return out


def test_criterion_07_bullet_words(capsys, example_hopf):
    with criterion(capsys, 7, "double-sum formula on bullet words, m <= 5", 10.0):
        for m in range(1, 6):
            for word in itertools.product(("x", "y"), repeat=m):
                f = Forest(Tree(EXAMPLE[x]) for x in word)
                assert example_hopf.coproduct(f) == _bullet_word_coproduct(word), word


def test_criterion_08_filtration(capsys, small_hopf):
    with criterion(capsys, 8, "coproduct respects the degree filtration, degree <= 5", 30.0):
        for f in forests_up_to(5, SMALL):
            for a, b in small_hopf.coproduct(f):
                assert a.degree + b.degree <= f.degree, (f, a, b)
        d = small_hopf.coproduct(F("x", SMALL))
        assert d.coefficient((Forest(), Forest())) == Poly.var("mu_x")
        # the witness term lowers the degree, so the coproduct is not graded
        assert any(a.degree + b.degree < 1 for a, b in d)


def _random_assignment(rng):
    return Specialization(
        {n: Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for n in SMALL.symbol_names()}
    )


def test_criterion_09_zero_weights_and_specialization(capsys, small_hopf, small_forests_4):
    with criterion(capsys, 9, "zero weights give the classical cut coproduct; specialization commutes", 60.0):
        zero = HopfAlgebra(SMALL, specialization=Specialization.zero(SMALL))
        for f in small_forests_4:
            classical = Tensor2.zero()
            for g, q in subforest_pairs(f):
                classical = classical + Tensor2.basis(g, q)
            assert zero.coproduct(f) == classical, f

        rng = random.Random(20261016)
        sym = small_hopf
        for _ in range(5):
            s = _random_assignment(rng)
            h = HopfAlgebra(SMALL, specialization=s)
            for f in small_forests_4:
                assert h.coproduct(f) == sym.coproduct(f).map_coefficients(s), (s, f)
                assert h.counit(f) == s(sym.counit(f)), (s, f)
                assert h.antipode(f) == sym.antipode(f).map_coefficients(s), (s, f)


def test_criterion_10_operated_universal_map(capsys):
    with criterion(capsys, 10, "renaming fold is an operated bialgebra homomorphism, degree <= 3", 30.0):
        symbols = SymbolTable(("x", "y"), ("a", "b"))
        forests = list(forests_up_to(3, symbols))

        swap = {"x": "y", "y": "x"}
        source = HopfAlgebra(symbols)
        target = renaming_target(source, swap)
        for f in forests:
            assert evaluate(f, target) == Element.basis(relabel(f, swap, symbols))
        assert check_homomorphism(target, forests, symbols.omega_labels).ok
        assert check_bialgebra_homomorphism(target, source, forests).ok

        # merging two labels is allowed once their weights agree
        merge = {"y": "x"}
        equal = HopfAlgebra(symbols, weights={"y": Poly.var("mu_x")})
        target = renaming_target(equal, merge)
        assert check_homomorphism(target, forests, symbols.omega_labels).ok
        assert check_bialgebra_homomorphism(target, equal, forests).ok


def test_criterion_11_enumeration(capsys):
    with criterion(capsys, 11, "shape counts, per-shape decoration counts, parser round trip", 10.0):
        assert [len(shapes(n)) for n in range(6)] == [1, 1, 2, 5, 14, 42]
        n_omega, n_all = len(SMALL.omega_labels), len(SMALL.decorations)
        for n in range(6):
            total = 0
            for s in shapes(n):
                forests = decorate(s, SMALL)
                internal = sum(1 for _, t in forests[0].vertices() if not t.is_leaf) if n else 0
                assert len(forests) == n_omega**internal * n_all ** (n - internal)
                assert len(set(forests)) == len(forests)
                total += len(forests)
            assert len(forests_of_degree(n, SMALL)) == total
        for f in forests_up_to(4, SMALL):
            assert parse_forest(str(f), SMALL) == f


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
