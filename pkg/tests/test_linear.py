import itertools

from helpers import SMALL, E, F, T2
from hypothesis import given
from hypothesis import strategies as st

from forest_hopf import Element, Forest, Poly, Tensor2, Tensor3, Tree, forests_up_to, lift_linear, tensor

BASIS = list(forests_up_to(2, SMALL))
coefs = st.sampled_from([Poly.const(1), Poly.const(-2), Poly.var("mu_x"), Poly.parse("la_a + 1")])
elements = st.lists(st.tuples(st.sampled_from(BASIS), coefs), max_size=4).map(Element)
tensors = st.lists(
    st.tuples(st.tuples(st.sampled_from(BASIS), st.sampled_from(BASIS)), coefs), max_size=3
).map(Tensor2)


@given(elements, elements, elements)
def test_element_algebra_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p * Element.one() == p == Element.one() * p
    assert p - p == Element.zero()


@given(tensors, tensors, tensors)
def test_tensor_algebra_is_associative(s, t, u):
    assert (s * t) * u == s * (t * u)
    assert s * Tensor2.one() == s


@given(elements, elements)
def test_product_adds_degrees(p, q):
    for f in (p * q).terms:
        assert any(g.degree + h.degree == f.degree for g in p.terms for h in q.terms)


@given(elements, elements, elements, elements)
def test_tensor_of_products(a, b, c, d):
    assert tensor(a, b) * tensor(c, d) == tensor(a * c, b * d)


def test_square_of_primitive_like_coproduct():
    # each of the two letters goes to the scalar, left or right part
    d = T2("(x) ⊗ (1) + (1) ⊗ (x) + mu_x * (1) ⊗ (1)", SMALL)
    expected = Tensor2.zero()
    x = Tree(SMALL["x"])
    for roles in itertools.product("SLR", repeat=2):
        coef = Poly.var("mu_x") ** roles.count("S")
        left = Forest([x] * roles.count("L"))
        right = Forest([x] * roles.count("R"))
        expected = expected + Tensor2.basis(left, right).scale(coef)
    assert d * d == expected
    assert len(d * d) == 6


def test_zero_coefficients_are_dropped():
    e = E("x - x + 0 * a", SMALL)
    assert not e and len(e) == 0
    assert Element([(F("x", SMALL), 1), (F("x", SMALL), -1)]) == Element.zero()


def test_lift_linear():
    def double_leaf(f):
        return Element.basis(f * f)

    lifted = lift_linear(double_leaf)
    assert lifted(E("2 * x + la_a * a", SMALL)) == E("2 * x x + la_a * a a", SMALL)
    assert lifted(Element.zero()) == Element.zero()
    assert lifted(F("x", SMALL)) == E("x x", SMALL)

    degree_map = lift_linear(lambda f: Poly.const(f.degree), zero=Poly())
    assert degree_map(E("3 * x a + mu_x * a", SMALL)) == Poly.parse("6 + mu_x")
    assert degree_map(Element.zero()) == Poly()


def test_contractions_and_expansions():
    t = T2("mu_x * (x) ⊗ (a) + (1) ⊗ (x)", SMALL)
    degree = lambda f: Poly.const(f.degree)  # noqa: E731
    assert t.contract_left(degree) == E("mu_x * a", SMALL)
    assert t.contract_right(degree) == E("mu_x * x + 1", SMALL)
    assert t.multiply() == E("mu_x * x a + x", SMALL)
    split = lambda f: Tensor2.basis(f, Forest())  # noqa: E731
    assert t.expand_left(split) == Tensor3(
        [((F("x", SMALL), Forest(), F("a", SMALL)), Poly.var("mu_x")),
         ((Forest(), Forest(), F("x", SMALL)), Poly.const(1))]
    )


def test_printing():
    e = E("x a + mu_x * a - 2*la_a * 1 + (la_a + 1) * a[x]", SMALL)
    assert str(e) == "-2*la_a * 1 + mu_x * a + (la_a + 1) * a[x] + x a"
    assert str(Element.zero()) == "0"
    t = T2("(x) ⊗ (1) - mu_x * (1) ⊗ (1)", SMALL)
    assert t.format(otimes="(x)") == "-mu_x * (1) (x) (1) + (x) (x) (1)"
    assert r"\otimes" in t.latex()
