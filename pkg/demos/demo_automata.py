"""Compiling a stopping rule into a finite machine and minimizing it.

With two alternatives, unit scores, and threshold two, the compiled machine
minimizes to six states: the empty history, one occurrence of either
alternative, one of each, and the two absorbing outcomes.
"""

from fractions import Fraction

from seqdec import (
    Alphabet,
    CsrSpec,
    csr_compile,
    decidedness,
    evaluate,
    minimize,
    to_dot,
    verify_stopping,
)

alphabet = Alphabet(("x", "y"))
rule = CsrSpec(alphabet, {"x": Fraction(1), "y": Fraction(1)}, Fraction(2))

raw = csr_compile(rule)
small = minimize(raw)
print(f"compiled: {len(raw.states)} states; minimized: {len(small.states)} states")

verdict = verify_stopping(small)
print(f"every input decides within {verdict.bound} observations")

print("\nruns:")
for text in ("|x", "|x y", "y|x"):
    seq = alphabet.sequence(text)
    decision, stop = evaluate(small, seq)
    print(f"  {text:<8} -> {decision} at position {stop}")

print("\nper-state commitments:")
for state, verdict in decidedness(small).items():
    label = verdict.decision if verdict.is_decided else "open"
    print(f"  {state:<4} {label}")

print("\nDOT rendering:\n")
print(to_dot(small))
