"""Behavioral fingerprints: which axioms a rule family satisfies.

Score-threshold rules always pass monotonicity and informational dominance.
Neutrality is different: it only holds when all alternatives need the same
number of appearances, so a skewed rule is caught with a concrete witness
that replays exactly.
"""

import json
from fractions import Fraction

from seqdec import Alphabet, CsrSpec, OsrSpec, RuleHandle, replay_witness, run_suite

abc = Alphabet(("a", "b", "c"))
xy = Alphabet(("x", "y"))

fair = RuleHandle.from_rule(CsrSpec(abc, {s: Fraction(1) for s in abc}, Fraction(3)))
print("unit-weight score rule against its suite:")
for report in run_suite(fair, "csr"):
    print(f"  {report.axiom:<26} {report.verdict}  ({report.checked} checks)")

ranked = RuleHandle.from_rule(OsrSpec(abc, ("a", "b", "c"), "b", 2))
print("\nranked-threshold rule against its suite:")
for report in run_suite(ranked, "osr"):
    print(f"  {report.axiom:<26} {report.verdict}  ({report.checked} checks)")

skewed = RuleHandle.from_rule(CsrSpec(xy, {"x": Fraction(3), "y": Fraction(1)}, Fraction(3)))
print("\nskewed score rule (x needs one appearance, y needs three):")
for report in run_suite(skewed, "config"):
    print(f"  {report.axiom:<26} {report.verdict}  ({report.checked} checks)")
    if not report.passed:
        print("  witness:", json.dumps(report.witness, indent=4))
        print("  witness replays:", replay_witness(skewed, report))
