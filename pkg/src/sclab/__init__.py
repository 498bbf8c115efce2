"""State-complexity laboratory for star and reversal combined with union
and intersection on regular languages."""

from .core import (
    Alphabet,
    AlphabetMismatch,
    Dfa,
    Nfa,
    Word,
    complete_dfa,
    dfa_accepts,
    nfa_accepts,
    relabel_canonical,
    require_same_alphabet,
    validate_dfa,
)
from .textfmt import ParseError, format_dfa, format_dot, parse_dfa
from .constructions import (
    CombinedOp,
    NEW_START,
    StarPrecondition,
    SubsetDfa,
    combined,
    determinize,
    epsilon_only_dfa,
    first_component,
    product,
    reverse_to_nfa,
    star_explicit,
    star_generic,
)
from .minimization import (
    Partition,
    distinguishing_word,
    equivalence_partition,
    equivalent,
    minimize,
    state_complexity,
)
from .witnesses import (
    BoundKind,
    REVERSAL_ALPHABET,
    STAR_ALPHABET,
    bound_value,
    pipeline_bound,
    reversal_witness_m,
    reversal_witness_n,
    star_witness_m,
    star_witness_n,
    star_witness_n_intersection,
    witness_pair,
)
from .oracle import (
    BudgetExceeded,
    DEFAULT_MACHINE_BUDGET,
    DEFAULT_PAIR_BUDGET,
    SearchMode,
    SearchReport,
    SplitMix64,
    bounded_language_equal,
    dfa_space_size,
    enumerate_dfas,
    random_dfa,
    reverse_membership_oracle,
    search_max,
    star_membership_oracle,
    table_filling_minimize,
)

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "BoundKind",
    "BudgetExceeded",
    "CombinedOp",
    "DEFAULT_MACHINE_BUDGET",
    "DEFAULT_PAIR_BUDGET",
    "Dfa",
    "NEW_START",
    "Nfa",
    "ParseError",
    "Partition",
    "REVERSAL_ALPHABET",
    "STAR_ALPHABET",
    "SearchMode",
    "SearchReport",
    "SplitMix64",
    "StarPrecondition",
    "SubsetDfa",
    "Word",
    "bound_value",
    "bounded_language_equal",
    "combined",
    "complete_dfa",
    "determinize",
    "dfa_accepts",
    "dfa_space_size",
    "distinguishing_word",
    "enumerate_dfas",
    "epsilon_only_dfa",
    "equivalence_partition",
    "equivalent",
    "first_component",
    "format_dfa",
    "format_dot",
    "minimize",
    "nfa_accepts",
    "parse_dfa",
    "pipeline_bound",
    "product",
    "random_dfa",
    "relabel_canonical",
    "require_same_alphabet",
    "reversal_witness_m",
    "reversal_witness_n",
    "reverse_membership_oracle",
    "reverse_to_nfa",
    "search_max",
    "star_explicit",
    "star_generic",
    "star_membership_oracle",
    "star_witness_m",
    "star_witness_n",
    "star_witness_n_intersection",
    "state_complexity",
    "table_filling_minimize",
    "validate_dfa",
    "witness_pair",
]
