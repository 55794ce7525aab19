# Evaluating forests in an operated algebra
#
# A forest folds into any algebra with one operator per Omega-label once we
# choose where the X-leaves go.

import operator

from forest_hopf import (
    HopfAlgebra,
    OperatedTarget,
    Poly,
    SymbolTable,
    check_bialgebra_homomorphism,
    check_homomorphism,
    evaluate,
    forests_up_to,
    parse_forest,
    renaming_target,
)

symbols = SymbolTable(("x", "y"), ("a", "b"))

# Polynomials in t: leaves go to t, a adds 1, b multiplies by t.

t = Poly.var("t")
poly = OperatedTarget(
    unit=Poly.const(1),
    mul=operator.mul,
    op={"a": lambda p: p + 1, "b": lambda p: t * p},
    gen={"x": t, "y": t * t},
)
for text in ["x y", "a[x]", "b[x a[y]]"]:
    print(text, "->", evaluate(parse_forest(text, symbols), poly))

forests = list(forests_up_to(2, symbols))
print(check_homomorphism(poly, forests, symbols.omega_labels))

# Renaming leaves inside the forest algebra keeps the coalgebra structure,
# provided the weights travel with the labels.

source = HopfAlgebra(symbols)
swap = renaming_target(source, {"x": "y", "y": "x"})
print(evaluate(parse_forest("a[x b[y]]", symbols), swap))
print(check_bialgebra_homomorphism(swap, source, forests))

# Merging x and y is refused while their weights differ.

try:
    renaming_target(source, {"y": "x"})
except ValueError as exc:
    print("refused:", exc)
