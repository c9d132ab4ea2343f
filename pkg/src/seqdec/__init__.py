"""Decision rules over infinite symbol sequences.

Library for sequential-choice analysis: eventually periodic sequences,
satisficing rule families, finite decision automata with absorbing outputs,
a two-tape Turing-machine interpreter, exhaustive axiom checking, and
parameter identification from black-box choice behavior.
"""

from .core import (
    Alphabet,
    AlphabetMismatchError,
    Relabeling,
    Segment,
    SeqSpec,
    SeqdecError,
    ValidationError,
    concat,
    constant,
    enumerate_segments,
    favorable_deletion,
    favorable_shift,
    prefix_of,
    relabel,
    relabel_segment,
)
from .automaton import (
    DecisionAutomaton,
    Decidedness,
    DivergenceError,
    InvalidAutomatonError,
    StopVerdict,
    Sufficiency,
    decidedness,
    evaluate,
    isomorphic,
    minimize,
    run,
    sufficiency,
    to_dot,
    verify_stopping,
)
from .heuristics import (
    BitstreamCollection,
    Comparator,
    ConfigRuleSpec,
    CsrSpec,
    InvalidRuleError,
    OsrSpec,
    bitstream_collection,
    compile_rule,
    config_compile,
    config_encode,
    config_evaluate,
    csr_compile,
    csr_critical_counts,
    csr_evaluate,
    csr_uniform_bound,
    evaluate_rule,
    osr_compile,
    osr_evaluate,
    rule_from_json,
    rule_to_json,
)
from .machines import (
    BudgetExhausted,
    InvalidMachineError,
    TmRun,
    TwoTapeTm,
    automaton_to_tm,
    tm_run,
)
from .analysis import (
    AxiomReport,
    agreement_count,
    DecisiveSet,
    HorizonViolation,
    NonStoppingRuleError,
    NotAChoiceRule,
    NotCsr,
    NotOsr,
    RuleHandle,
    check_acyclicity,
    check_informational_dominance,
    check_monotonicity,
    check_neutrality,
    check_replacement,
    check_sequential_alpha,
    check_snbc,
    decisive_set,
    enumerate_minimal_sufficient,
    identify_csr,
    identify_osr,
    replay_witness,
    run_suite,
    stopping_time,
    sufficiency_of,
    tabulate_automaton,
    uniform_bound_search,
)

__all__ = [
    "Alphabet",
    "AlphabetMismatchError",
    "AxiomReport",
    "BitstreamCollection",
    "BudgetExhausted",
    "Comparator",
    "ConfigRuleSpec",
    "CsrSpec",
    "Decidedness",
    "DecisionAutomaton",
    "DecisiveSet",
    "DivergenceError",
    "HorizonViolation",
    "InvalidAutomatonError",
    "InvalidMachineError",
    "InvalidRuleError",
    "NonStoppingRuleError",
    "NotAChoiceRule",
    "NotCsr",
    "NotOsr",
    "OsrSpec",
    "Relabeling",
    "RuleHandle",
    "Segment",
    "SeqSpec",
    "SeqdecError",
    "StopVerdict",
    "Sufficiency",
    "TmRun",
    "TwoTapeTm",
    "ValidationError",
    "agreement_count",
    "automaton_to_tm",
    "bitstream_collection",
    "check_acyclicity",
    "check_informational_dominance",
    "check_monotonicity",
    "check_neutrality",
    "check_replacement",
    "check_sequential_alpha",
    "check_snbc",
    "compile_rule",
    "concat",
    "config_compile",
    "config_encode",
    "config_evaluate",
    "constant",
    "csr_compile",
    "csr_critical_counts",
    "csr_evaluate",
    "csr_uniform_bound",
    "decidedness",
    "decisive_set",
    "enumerate_minimal_sufficient",
    "enumerate_segments",
    "evaluate",
    "evaluate_rule",
    "favorable_deletion",
    "favorable_shift",
    "identify_csr",
    "identify_osr",
    "isomorphic",
    "minimize",
    "osr_compile",
    "osr_evaluate",
    "prefix_of",
    "relabel",
    "relabel_segment",
    "replay_witness",
    "rule_from_json",
    "rule_to_json",
    "run",
    "run_suite",
    "stopping_time",
    "sufficiency",
    "sufficiency_of",
    "tabulate_automaton",
    "tm_run",
    "uniform_bound_search",
    "verify_stopping",
]
