"""Deliberately broken rules, one per axiom checker.

Each mutant is a stopping choice rule that violates exactly the documented
axiom; the checkers must fail on them with replayable witnesses.  Several
are plain black boxes, two are built from rule specs, exercising both
handle kinds.
"""

from fractions import Fraction

from seqdec.core import Alphabet
from seqdec.heuristics import CsrSpec
from seqdec.analysis import RuleHandle

ABC = Alphabet(("a", "b", "c"))
XY = Alphabet(("x", "y"))


def second_position_rule():
    """Choose the symbol at position 2: deleting position 1 displaces it.

    Violates monotonicity and sequential-alpha.
    """
    return RuleHandle.from_callable(ABC, lambda s: s.symbol_at(2), horizon=2)


def first_unless_repeat_rule():
    """First symbol, unless it reappears in the window; then the first other.

    A sufficient segment without the first symbol can be spliced after a
    one-symbol truncation and still yield that symbol: violates
    informational dominance.
    """

    def decide(seq):
        w = [seq.symbol_at(i) for i in (1, 2, 3)]
        if w[0] not in w[1:]:
            return w[0]
        others = [x for x in w[1:] if x != w[0]]
        return others[0] if others else w[0]

    return RuleHandle.from_callable(ABC, decide, horizon=3)


def skewed_counts_rule():
    """Critical counts (1, 3, 3): replacing b by c inside (b b b) destroys
    sufficiency, violating replacement."""
    spec = CsrSpec(
        ABC, {"a": Fraction(1), "b": Fraction(1, 3), "c": Fraction(1, 3)}, Fraction(1)
    )
    return RuleHandle.from_rule(spec)


def cyclic_majority_rule():
    """a beats b, b beats c, c beats a on two-symbol windows: violates
    sequential no-binary-cycles."""
    table = {frozenset("ab"): "a", frozenset("bc"): "b", frozenset("ac"): "c"}

    def decide(seq):
        pair = frozenset((seq.symbol_at(1), seq.symbol_at(2)))
        return table.get(pair, seq.symbol_at(1))

    return RuleHandle.from_callable(ABC, decide, horizon=2)


def unequal_weights_rule():
    """Critical counts differ across symbols, so relabeling changes stopping
    behavior: violates neutrality."""
    return RuleHandle.from_rule(
        CsrSpec(XY, {"x": Fraction(3), "y": Fraction(1)}, Fraction(3))
    )


def config_triangle_rule():
    """Three fixed window patterns beat each other in a cycle.

    Pattern 00100 beats 10000 beats 01000 beats 00100, with all other
    comparisons resolved by the numeric value of the pattern; the three
    special patterns never occur together (they do not tile a five-slot
    window with three symbols), so the rule is well defined.  Violates
    acyclicity with a revealed cycle of length exactly three, while still
    satisfying neutrality.
    """

    def decide(seq):
        w = [seq.symbol_at(i) for i in range(1, 6)]
        occ = sorted(set(w))
        cfg = {sym: "".join("1" if x == sym else "0" for x in w) for sym in occ}
        by_cfg = {v: k for k, v in cfg.items()}
        cfgs = set(cfg.values())
        if cfgs == {"10011", "01000", "00100"}:
            return by_cfg["01000"]
        if cfgs == {"10000", "01011", "00100"}:
            return by_cfg["00100"]
        return max(occ, key=lambda sym: int(cfg[sym], 2))

    return RuleHandle.from_callable(ABC, decide, horizon=5)


MUTANTS = {
    "monotonicity": second_position_rule,
    "informational-dominance": first_unless_repeat_rule,
    "replacement": skewed_counts_rule,
    "sequential-alpha": second_position_rule,
    "sequential-nbc": cyclic_majority_rule,
    "neutrality": unequal_weights_rule,
    "acyclicity": config_triangle_rule,
}
