"""Satisficing rule families and their compilation to decision automata.

Three parameterized families of choice rules over sequences:

* score-threshold rules (cardinal satisficing): pick the first alternative
  whose cumulative weight reaches a threshold;
* ranked-threshold rules (ordinal satisficing): within a fixed attention
  span, pick the first alternative strictly above a threshold alternative,
  otherwise the best-ranked alternative seen;
* configuration rules: rank the 0/1 occupancy patterns of the alternatives
  inside a fixed window and pick the alternative with the best pattern.

Weights and thresholds are exact rationals: the stopping position depends on
equality at the crossing boundary, which floating point would corrupt.

Rule JSON formats (rationals as ``"p/q"`` or integer strings)::

    {"kind": "csr", "alphabet": [...], "weights": {"a": "1", "b": "2/3"},
     "threshold": "3"}
    {"kind": "osr", "alphabet": [...], "order": ["a", "b", "c"],
     "threshold_alt": "b", "span": 2}
    {"kind": "config", "alphabet": [...], "window": 3,
     "comparator": {"table": {"101": 5, ...}}}       # or {"builtin": NAME}
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Union

from .core import (
    Alphabet,
    Segment,
    SeqSpec,
    ValidationError,
    _require_same_alphabet,
)
from .automaton import DecisionAutomaton, absorbing_terminal_row


class InvalidRuleError(ValidationError):
    """A rule description violates one of its invariants."""


@dataclass(frozen=True)
class CsrSpec:
    """Score-threshold rule: positive weight per symbol, positive threshold.

    Positivity is required so the rule always stops: a zero-weight symbol
    would admit inputs whose cumulative score never crosses the threshold.
    """

    alphabet: Alphabet
    weights: Mapping[str, Fraction]
    threshold: Fraction

    def __post_init__(self) -> None:
        weights = {name: Fraction(w) for name, w in self.weights.items()}
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "threshold", Fraction(self.threshold))
        if set(weights) != set(self.alphabet.symbols):
            raise InvalidRuleError(f"weights must cover the alphabet exactly: {sorted(weights)}")
        for name, w in weights.items():
            if w <= 0:
                raise InvalidRuleError(f"weight of {name!r} must be > 0, got {w}")
        if self.threshold <= 0:
            raise InvalidRuleError(f"threshold must be > 0, got {self.threshold}")


@dataclass(frozen=True)
class OsrSpec:
    """Ranked-threshold rule: strict total order, threshold alternative, span."""

    alphabet: Alphabet
    order: tuple[str, ...]
    threshold_alt: str
    span: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != sorted(self.alphabet.symbols):
            raise InvalidRuleError(f"order must rank every symbol exactly once: {self.order}")
        if self.threshold_alt not in self.alphabet:
            raise InvalidRuleError(f"threshold alternative {self.threshold_alt!r} not in alphabet")
        if self.span < 1:
            raise InvalidRuleError(f"span must be >= 1, got {self.span}")
        object.__setattr__(self, "_rank", {s: i for i, s in enumerate(self.order)})

    def prefers(self, x: str, y: str) -> bool:
        """True when x is ranked strictly above y."""
        return self._rank[x] < self._rank[y]  # type: ignore[attr-defined]

    def above_threshold(self, x: str) -> bool:
        return self.prefers(x, self.threshold_alt)

    def best(self, names) -> str:
        return min(names, key=lambda s: self._rank[s])  # type: ignore[attr-defined]


BUILTIN_COMPARATORS = ("first-position-priority", "numeric-value")


@dataclass(frozen=True)
class Comparator:
    """Injective ranking of all bit-words of a fixed window length.

    Built-ins: ``numeric-value`` reads the word as a binary numeral as
    written (position 1 most significant); ``first-position-priority`` ranks
    every word with a 1 in position 1 above all others, ties broken by
    numeric value.  A table comparator lists the rank of every word
    explicitly and is validated for totality and injectivity.
    """

    window: int
    builtin: str | None = None
    table: Mapping[str, int] | None = None

    def __post_init__(self) -> None:
        if self.window < 1:
            raise InvalidRuleError(f"window must be >= 1, got {self.window}")
        if (self.builtin is None) == (self.table is None):
            raise InvalidRuleError("exactly one of builtin or table must be given")
        if self.builtin is not None and self.builtin not in BUILTIN_COMPARATORS:
            raise InvalidRuleError(
                f"unknown builtin {self.builtin!r}, expected one of {BUILTIN_COMPARATORS}"
            )
        if self.table is not None:
            object.__setattr__(self, "table", dict(self.table))
            words = {"".join(bits) for bits in itertools.product("01", repeat=self.window)}
            if set(self.table) != words:
                raise InvalidRuleError(
                    f"table must rank all {2 ** self.window} bit-words of length {self.window}"
                )
            if len(set(self.table.values())) != len(self.table):
                raise InvalidRuleError("table ranks must be injective")

    def rank(self, bits: tuple[int, ...]) -> int:
        if len(bits) != self.window:
            raise InvalidRuleError(f"expected a bit-word of length {self.window}, got {bits}")
        word = "".join(str(b) for b in bits)
        if self.table is not None:
            return self.table[word]
        value = int(word, 2)
        if self.builtin == "numeric-value":
            return value
        return (bits[0] << self.window) | value


@dataclass(frozen=True)
class ConfigRuleSpec:
    """Configuration rule: compare window-length occupancy patterns."""

    alphabet: Alphabet
    window: int
    comparator: Comparator

    def __post_init__(self) -> None:
        if self.window < 1:
            raise InvalidRuleError(f"window must be >= 1, got {self.window}")
        if self.comparator.window != self.window:
            raise InvalidRuleError(
                f"comparator window {self.comparator.window} != rule window {self.window}"
            )


RuleSpec = Union[CsrSpec, OsrSpec, ConfigRuleSpec]


@dataclass(frozen=True)
class BitstreamCollection:
    """Per-symbol bit-words of common length, exactly one 1 per position."""

    streams: Mapping[str, tuple[int, ...]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "streams", {k: tuple(v) for k, v in self.streams.items()})
        lengths = {len(v) for v in self.streams.values()}
        if len(lengths) != 1:
            raise InvalidRuleError(f"bitstreams must share one length, got {sorted(lengths)}")
        (n,) = lengths
        for i in range(n):
            ones = sum(v[i] for v in self.streams.values())
            if ones != 1:
                raise InvalidRuleError(f"position {i + 1} carries {ones} ones, expected exactly 1")


def csr_evaluate(spec: CsrSpec, seq: SeqSpec) -> tuple[str, int]:
    """First crossing of the threshold: (chosen symbol, crossing position).

    Only the symbol read at the crossing position changed score there, so
    the chooser is unique; an assertion keeps that argument honest.
    """
    _require_same_alphabet(spec.alphabet, seq.alphabet)
    totals = {name: Fraction(0) for name in spec.alphabet}
    limit = csr_uniform_bound(spec)
    for pos in range(1, limit + 1):
        name = seq.symbol_at(pos)
        totals[name] += spec.weights[name]
        if totals[name] >= spec.threshold:
            assert all(
                totals[other] < spec.threshold for other in spec.alphabet if other != name
            )
            return name, pos
    raise AssertionError("unreachable: positive weights cross the threshold within the bound")


def csr_critical_counts(spec: CsrSpec) -> dict[str, int]:
    """Occurrences of each symbol needed to reach the threshold alone."""
    return {
        name: math.ceil(spec.threshold / spec.weights[name]) for name in spec.alphabet
    }


def csr_uniform_bound(spec: CsrSpec) -> int:
    """Worst-case stopping position: every symbol one short, then one more."""
    counts = csr_critical_counts(spec)
    return 1 + sum(n - 1 for n in counts.values())


def _vector_name(alphabet: Alphabet, vector: tuple[int, ...]) -> str:
    return ",".join(f"{name}:{c}" for name, c in zip(alphabet.symbols, vector))


def csr_compile(spec: CsrSpec) -> DecisionAutomaton:
    """Automaton over occurrence-count vectors below the critical counts.

    Reading a symbol increments its count; hitting the critical count moves
    to that symbol's absorbing output state.  Only vectors reachable from
    zero are materialized.
    """
    counts = csr_critical_counts(spec)
    aut = spec.alphabet
    zero = tuple(0 for _ in aut)
    todo = [zero]
    seen = {zero}
    transitions: dict[str, dict[str, str]] = {}
    while todo:
        vec = todo.pop()
        row = {}
        for i, name in enumerate(aut):
            if vec[i] + 1 == counts[name]:
                row[name] = f"dec:{name}"
            else:
                nxt = vec[:i] + (vec[i] + 1,) + vec[i + 1 :]
                row[name] = _vector_name(aut, nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        transitions[_vector_name(aut, vec)] = row
    terminal = {f"dec:{name}": name for name in aut}
    for t in terminal:
        transitions[t] = absorbing_terminal_row(aut, t)
    states = tuple(sorted(_vector_name(aut, v) for v in seen)) + tuple(sorted(terminal))
    return DecisionAutomaton(aut, states, _vector_name(aut, zero), transitions, terminal)


def osr_evaluate(spec: OsrSpec, seq: SeqSpec) -> str:
    """First above-threshold symbol within the span, else the best seen."""
    _require_same_alphabet(spec.alphabet, seq.alphabet)
    seen = []
    for pos in range(1, spec.span + 1):
        name = seq.symbol_at(pos)
        if spec.above_threshold(name):
            return name
        seen.append(name)
    return spec.best(seen)


def osr_compile(spec: OsrSpec) -> DecisionAutomaton:
    """Automaton tracking (position, best below-threshold symbol so far).

    The strict order makes the running best a sufficient statistic for the
    fallback choice, so no further history is needed.
    """
    aut = spec.alphabet

    def name_of(pos: int, best: str | None) -> str:
        return f"p{pos}:{best or '-'}"

    transitions: dict[str, dict[str, str]] = {}
    seen = {(0, None)}
    todo: list[tuple[int, str | None]] = [(0, None)]
    while todo:
        pos, best = todo.pop()
        row = {}
        for sym in aut:
            if spec.above_threshold(sym):
                row[sym] = f"dec:{sym}"
                continue
            new_best = sym if best is None else spec.best([best, sym])
            if pos + 1 == spec.span:
                row[sym] = f"dec:{new_best}"
            else:
                row[sym] = name_of(pos + 1, new_best)
                if (pos + 1, new_best) not in seen:
                    seen.add((pos + 1, new_best))
                    todo.append((pos + 1, new_best))
        transitions[name_of(pos, best)] = row
    terminal = {f"dec:{sym}": sym for sym in aut}
    for t in terminal:
        transitions[t] = absorbing_terminal_row(aut, t)
    states = tuple(sorted(name_of(p, b) for p, b in seen)) + tuple(sorted(terminal))
    return DecisionAutomaton(aut, states, name_of(0, None), transitions, terminal)


def config_encode(seq: SeqSpec, symbol: str, window: int) -> tuple[int, ...]:
    """Occupancy pattern of a symbol over positions 1..window."""
    if window < 1:
        raise InvalidRuleError(f"window must be >= 1, got {window}")
    idx = seq.alphabet.index(symbol)
    return tuple(1 if seq.at(i) == idx else 0 for i in range(1, window + 1))


def bitstream_collection(seq: SeqSpec, window: int) -> BitstreamCollection:
    """Feasible collection of the patterns of all symbols occurring in the window."""
    occurring = {seq.symbol_at(i) for i in range(1, window + 1)}
    return BitstreamCollection(
        {name: config_encode(seq, name, window) for name in sorted(occurring)}
    )


def config_evaluate(spec: ConfigRuleSpec, seq: SeqSpec) -> str:
    """Occurring symbol whose window pattern has the best comparator rank.

    Feasibility makes the patterns of distinct occurring symbols distinct,
    so injectivity of the ranking gives a unique maximum.
    """
    _require_same_alphabet(spec.alphabet, seq.alphabet)
    occurring = sorted({seq.symbol_at(i) for i in range(1, spec.window + 1)})
    return max(
        occurring, key=lambda name: spec.comparator.rank(config_encode(seq, name, spec.window))
    )


def segment_tree_automaton(
    alphabet: Alphabet, depth: int, decide: Callable[[tuple[int, ...]], str]
) -> DecisionAutomaton:
    """Prefix-tree automaton absorbing at a fixed depth.

    Internal states are the words shorter than ``depth``; reading the final
    symbol of a full-depth word moves to the absorbing output state labeled
    by ``decide(word)``.  The generic bridge from any bounded-window
    evaluator, or any tabulated black box, to an automaton.
    """
    if depth < 1:
        raise ValidationError(f"depth must be >= 1, got {depth}")

    def name_of(word: tuple[int, ...]) -> str:
        return "<" + " ".join(alphabet.name(i) for i in word) + ">"

    transitions: dict[str, dict[str, str]] = {}
    outputs = set()
    words: list[tuple[int, ...]] = [()]
    for word in words:
        row = {}
        for i, sym in enumerate(alphabet):
            child = word + (i,)
            if len(child) == depth:
                out = decide(child)
                outputs.add(out)
                row[sym] = f"dec:{out}"
            else:
                row[sym] = name_of(child)
                words.append(child)
        transitions[name_of(word)] = row
    terminal = {f"dec:{out}": out for out in sorted(outputs)}
    for t in terminal:
        transitions[t] = absorbing_terminal_row(alphabet, t)
    states = tuple(name_of(w) for w in words) + tuple(sorted(terminal))
    return DecisionAutomaton(alphabet, states, name_of(()), transitions, terminal)


def config_compile(spec: ConfigRuleSpec) -> DecisionAutomaton:
    """Tabulate the window evaluator into a prefix-tree automaton."""

    def decide(word: tuple[int, ...]) -> str:
        seq = SeqSpec(
            spec.alphabet,
            Segment(spec.alphabet, word),
            Segment(spec.alphabet, word[-1:]),
        )
        return config_evaluate(spec, seq)

    return segment_tree_automaton(spec.alphabet, spec.window, decide)


def compile_rule(spec: RuleSpec) -> DecisionAutomaton:
    if isinstance(spec, CsrSpec):
        return csr_compile(spec)
    if isinstance(spec, OsrSpec):
        return osr_compile(spec)
    return config_compile(spec)


def evaluate_rule(spec: RuleSpec, seq: SeqSpec) -> str:
    if isinstance(spec, CsrSpec):
        return csr_evaluate(spec, seq)[0]
    if isinstance(spec, OsrSpec):
        return osr_evaluate(spec, seq)
    return config_evaluate(spec, seq)


def _fraction(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidRuleError(f"bad rational literal {text!r}") from exc


def rule_from_dict(data: dict) -> RuleSpec:
    try:
        kind = data["kind"]
        alphabet = Alphabet(tuple(data["alphabet"]))
        if kind == "csr":
            return CsrSpec(
                alphabet,
                {name: _fraction(w) for name, w in data["weights"].items()},
                _fraction(data["threshold"]),
            )
        if kind == "osr":
            return OsrSpec(alphabet, tuple(data["order"]), data["threshold_alt"], int(data["span"]))
        if kind == "config":
            comp = data["comparator"]
            window = int(data["window"])
            if "builtin" in comp:
                comparator = Comparator(window, builtin=comp["builtin"])
            else:
                comparator = Comparator(window, table={w: int(r) for w, r in comp["table"].items()})
            return ConfigRuleSpec(alphabet, window, comparator)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidRuleError(f"malformed rule document: {exc}") from exc
    raise InvalidRuleError(f"unknown rule kind {data.get('kind')!r}")


def rule_to_dict(spec: RuleSpec) -> dict:
    if isinstance(spec, CsrSpec):
        return {
            "kind": "csr",
            "alphabet": list(spec.alphabet.symbols),
            "weights": {name: str(w) for name, w in sorted(spec.weights.items())},
            "threshold": str(spec.threshold),
        }
    if isinstance(spec, OsrSpec):
        return {
            "kind": "osr",
            "alphabet": list(spec.alphabet.symbols),
            "order": list(spec.order),
            "threshold_alt": spec.threshold_alt,
            "span": spec.span,
        }
    comp: dict = (
        {"builtin": spec.comparator.builtin}
        if spec.comparator.builtin is not None
        else {"table": dict(sorted(spec.comparator.table.items()))}
    )
    return {
        "kind": "config",
        "alphabet": list(spec.alphabet.symbols),
        "window": spec.window,
        "comparator": comp,
    }


def rule_to_json(spec: RuleSpec) -> str:
    return json.dumps(rule_to_dict(spec), indent=2, sort_keys=True)


def rule_from_json(text: str) -> RuleSpec:
    return rule_from_dict(json.loads(text))
