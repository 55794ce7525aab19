# Weighted coproduct on decorated planar forests
#
# Leaves may carry X-labels (here x) or Omega-labels (a, b, c); every
# internal vertex carries an Omega-label.  The weights mu_x and la_w stay
# symbolic until we choose to specialize them.

from forest_hopf import HopfAlgebra, Specialization, SymbolTable, parse_forest, subforest_pairs

symbols = SymbolTable(x_labels=("x",), omega_labels=("a", "b", "c"))
H = HopfAlgebra(symbols)

# A single leaf is not primitive: the weight shows up as a scalar term.

print(H.coproduct(parse_forest("x", symbols)))

# Grafting a leaf under a adds a term coming from the weight of a.

print(H.coproduct(parse_forest("a[x]", symbols)))

# A four-vertex tree.  The coproduct has 17 terms.

T = parse_forest("a[c b[x]]", symbols)
dT = H.coproduct(T)
print(len(dT), "terms")
for (left, right), coef in dT.sorted_items():
    print(f"  {coef!s:>12}   {left}  (x)  {right}")

# The same coproduct, read off from cuts: each subforest G pairs with the
# quotient T/G after every leaf of the quotient is shifted by its weight.

for g, q in subforest_pairs(T):
    print(f"{g!s:>10} | {q!s:<10} | {H.leaf_tilde(q)}")

print(H.coproduct_cuts(T) == dT)

# With every weight set to zero the extra terms vanish and only cuts remain.

H0 = HopfAlgebra(symbols, specialization=Specialization.zero(symbols))
print(H0.coproduct(T))
