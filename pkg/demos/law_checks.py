# Exhaustive law checks
#
# Every forest up to a given degree, symbolic weights first and then a few
# random rational specializations.

from forest_hopf import SymbolTable
from forest_hopf.laws import random_specializations, run_checks

symbols = SymbolTable(("x",), ("a", "b"))

for weights, report in run_checks(symbols, 3):
    print(report)

weight_sets = random_specializations(symbols, 2, seed=1)
for weights, report in run_checks(symbols, 3, ["antipode", "coassoc"], weight_sets):
    print(report, ", ".join(f"{k}={v}" for k, v in weights.assignment.items()))
