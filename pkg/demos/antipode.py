# Antipode by the convolution series
#
# u eps - id kills the empty forest and lowers the degree filtration, so
# summing its convolution powers up to the degree of a forest gives the
# antipode exactly.

from forest_hopf import Element, HopfAlgebra, SymbolTable, parse_element, parse_forest

symbols = SymbolTable(("x",), ("a", "b"))
H = HopfAlgebra(symbols)

for text in ["x", "a", "a[x]", "x a", "a[b[x]]"]:
    f = parse_forest(text, symbols)
    print(f"S({text}) =", H.antipode(f))

# Check both antipode identities on one forest.

f = parse_forest("a[x b]", symbols)
ident = lambda e: e
print(H.convolve(H.antipode, ident, f) == H.unit_counit(f))
print(H.convolve(ident, H.antipode, f) == H.unit_counit(f))

# The antipode reverses products.

g = parse_forest("b[x]", symbols)
print(H.antipode(f * g) == H.antipode(g) * H.antipode(f))

# Everything is linear, so elements work too.

e = parse_element("2 * x + la_a * a", symbols)
print(H.antipode(e))
print(H.counit(e), H.antipode(Element.one()))
