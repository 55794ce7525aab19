from forest_hopf import SymbolTable, parse_element, parse_forest, parse_tensor2

EXAMPLE = SymbolTable(("x", "y"), ("a", "b", "c"))
SMALL = SymbolTable(("x",), ("a", "b"))


def F(text, symbols=EXAMPLE):
    return parse_forest(text, symbols)


def E(text, symbols=EXAMPLE):
    return parse_element(text, symbols)


def T2(text, symbols=EXAMPLE):
    return parse_tensor2(text, symbols)
