"""Independent ground truth for the rest of the package: a second minimiser,
bounded word-level language comparison, star and reversal membership by
definition, and exhaustive or sampled searches over small DFA pairs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import Alphabet, Dfa, dfa_accepts, relabel_canonical, require_same_alphabet
from .constructions import CombinedOp, SubsetDfa, first_component
from .minimization import _refine, state_complexity
from .witnesses import BoundKind, bound_value

DEFAULT_PAIR_BUDGET = 1 << 21
DEFAULT_MACHINE_BUDGET = 1 << 21

_MASK64 = (1 << 64) - 1


class BudgetExceeded(RuntimeError):
    """Enumeration would visit more machines or pairs than the budget allows."""

    def __init__(self, needed: int, budget: int, what: str = "machines"):
        super().__init__(
            f"would examine {needed} {what}, over the budget of {budget}"
        )
        self.needed = needed
        self.budget = budget


class SplitMix64:
    """splitmix64: the state advances by 0x9E3779B97F4A7C15 per draw and the
    output is a bit-mixed copy of the state (xor-shifts by 30, 27, 31 with
    multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).  Fixed here so
    that seeds reproduce identically in any implementation of the same
    recurrence."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next_uint64() % bound


def table_filling_minimize(d: Dfa) -> Dfa:
    """Minimal DFA via pairwise marking, independent of the partition
    refinement minimiser.

    Trims to the reachable states, marks every pair with differing
    finality, propagates marks backwards over the transition relation to a
    fixed point, merges the unmarked pairs, and relabels canonically.  The
    output is structurally equal to ``minimize``'s on every machine.
    """
    sigma = d.sigma
    index = {d.start: 0}
    order = [d.start]
    for q in order:
        for t in d.delta[q]:
            if t not in index:
                index[t] = len(order)
                order.append(t)
    n = len(order)
    rows = [tuple(index[t] for t in d.delta[q]) for q in order]
    fin = [q in d.finals for q in order]
    marked = [[False] * n for _ in range(n)]
    pre: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(sigma)]
    for q in range(n):
        for a in range(sigma):
            pre[a][rows[q][a]].append(q)
    queue: deque[tuple[int, int]] = deque()
    for p in range(n):
        for q in range(p + 1, n):
            if fin[p] != fin[q]:
                marked[p][q] = marked[q][p] = True
                queue.append((p, q))
    while queue:
        p, q = queue.popleft()
        for a in range(sigma):
            for x in pre[a][p]:
                mx = marked[x]
                for y in pre[a][q]:
                    if x != y and not mx[y]:
                        mx[y] = marked[y][x] = True
                        queue.append((x, y))
    rep = list(range(n))
    for p in range(n):
        if rep[p] != p:
            continue
        mp = marked[p]
        for q in range(p + 1, n):
            if rep[q] == q and not mp[q]:
                rep[q] = p
    reps = sorted(set(rep))
    rid = {r: i for i, r in enumerate(reps)}
    delta = tuple(
        tuple(rid[rep[rows[r][a]]] for a in range(sigma)) for r in reps
    )
    finals = frozenset(rid[r] for r in reps if fin[r])
    quotient = Dfa(d.alphabet, len(reps), rid[rep[0]], finals, delta)
    return relabel_canonical(quotient)


def bounded_language_equal(d1: Dfa, d2: Dfa, maxlen: int) -> bool:
    """True iff the machines agree on every word of length at most
    ``maxlen``; breadth-first walk of the pair graph, no words
    materialised."""
    require_same_alphabet(d1, d2)
    sigma = d1.sigma
    f1, f2 = d1.finals, d2.finals
    start = (d1.start, d2.start)
    if (start[0] in f1) != (start[1] in f2):
        return False
    frontier = [start]
    seen = {start}
    for _ in range(maxlen):
        nxt: list[tuple[int, int]] = []
        for p, q in frontier:
            row1 = d1.delta[p]
            row2 = d2.delta[q]
            for a in range(sigma):
                pair = (row1[a], row2[a])
                if pair not in seen:
                    if (pair[0] in f1) != (pair[1] in f2):
                        return False
                    seen.add(pair)
                    nxt.append(pair)
        if not nxt:
            break
        frontier = nxt
    return True


def star_membership_oracle(d: Dfa, word: Sequence[int]) -> bool:
    """Star membership by definition: true iff the word is empty or splits
    into non-empty factors each accepted by ``d``.

    Dynamic programming over factor boundaries, independent of any star
    construction: a position is a boundary if some earlier boundary reaches
    it through one accepted factor.
    """
    sigma = d.sigma
    for s in word:
        if not 0 <= s < sigma:
            raise ValueError(
                f"symbol index {s} out of range for alphabet of size {sigma}"
            )
    length = len(word)
    boundary = [False] * (length + 1)
    boundary[0] = True
    finals = d.finals
    delta = d.delta
    for j in range(length):
        if not boundary[j]:
            continue
        q = d.start
        for i in range(j, length):
            q = delta[q][word[i]]
            if q in finals:
                boundary[i + 1] = True
    return boundary[length]


def reverse_membership_oracle(d: Dfa, word: Sequence[int]) -> bool:
    """Membership in the reversal of ``d``'s language: run ``d`` on the
    reversed word."""
    return dfa_accepts(d, tuple(reversed(word)))


def dfa_space_size(states: int, alphabet: Alphabet) -> int:
    """Number of complete DFAs on ``states`` states with the start fixed at
    0: every transition table crossed with every final set."""
    sigma = len(alphabet)
    return states ** (states * sigma) * 2**states


def enumerate_dfas(
    states: int,
    alphabet: Alphabet,
    consumer: Callable[[Dfa], None],
    budget: int = DEFAULT_MACHINE_BUDGET,
) -> int:
    """Feed every complete DFA with the start fixed at 0 to ``consumer``.

    Fixing the start loses no languages, since any DFA can be relabeled to
    start at 0.  Returns the number of machines emitted; refuses up front,
    reporting the computed count, when it exceeds ``budget``.
    """
    if states < 1:
        raise ValueError(f"need at least one state, got {states}")
    sigma = len(alphabet)
    total = dfa_space_size(states, alphabet)
    if total > budget:
        raise BudgetExceeded(total, budget)
    final_sets = [
        frozenset(q for q in range(states) if mask >> q & 1)
        for mask in range(1 << states)
    ]
    count = 0
    for flat in itertools.product(range(states), repeat=states * sigma):
        rows = tuple(flat[q * sigma : (q + 1) * sigma] for q in range(states))
        for finals in final_sets:
            consumer(Dfa(alphabet, states, 0, finals, rows))
            count += 1
    return count


def random_dfa(states: int, alphabet: Alphabet, seed: int) -> Dfa:
    """Uniform random transitions and a fair coin per state for finality,
    drawn from the documented splitmix64 stream: transitions first in
    row-major order, then one finality draw per state.  Start fixed at 0."""
    if states < 1:
        raise ValueError(f"need at least one state, got {states}")
    sigma = len(alphabet)
    rng = SplitMix64(seed)
    rows = tuple(
        tuple(rng.below(states) for _ in range(sigma)) for _ in range(states)
    )
    finals = frozenset(q for q in range(states) if rng.next_uint64() & 1)
    return Dfa(alphabet, states, 0, finals, rows)


@dataclass(frozen=True)
class SearchMode:
    """Exhaustive over the whole pair space, or a seeded random sample."""

    kind: str
    samples: int = 0
    seed: int = 0

    @staticmethod
    def exhaustive() -> "SearchMode":
        return SearchMode("exhaustive")

    @staticmethod
    def sampled(samples: int, seed: int) -> "SearchMode":
        return SearchMode("sampled", samples, seed)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one worst-case search; ``machines_examined`` counts the
    (M, N) pairs measured."""

    op: CombinedOp
    m: int
    n: int
    sigma: int
    mode: SearchMode
    observed_max: int
    achieving_pair: tuple[Dfa, Dfa]
    machines_examined: int
    predicted_bound: int


def _measured_size(first: SubsetDfa, dN: Dfa, union: bool) -> int:
    """Minimal-DFA size of the pair machine, skipping object construction.

    The pair machine is reachable by construction, so the refined block
    count equals the minimised state count.
    """
    d1 = first.dfa
    rows1, rows2 = d1.delta, dN.delta
    f1, f2 = d1.finals, dN.finals
    sigma = d1.sigma
    start = (d1.start, dN.start)
    index = {start: 0}
    order = [start]
    rows: list[tuple[int, ...]] = []
    finals: list[bool] = []
    for i, j in order:
        row1 = rows1[i]
        row2 = rows2[j]
        row = []
        for a in range(sigma):
            key = (row1[a], row2[a])
            t = index.get(key)
            if t is None:
                t = len(order)
                index[key] = t
                order.append(key)
            row.append(t)
        rows.append(tuple(row))
        finals.append((i in f1 or j in f2) if union else (i in f1 and j in f2))
    _, count = _refine(len(order), sigma, rows, finals)
    return count


def search_max(
    op: CombinedOp,
    m: int,
    n: int,
    alphabet: Alphabet,
    mode: SearchMode,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> SearchReport:
    """Maximise the measured minimal size of ``op`` over pairs of DFAs.

    Exhaustive mode enumerates every pair of complete machines with starts
    fixed at 0 (refusing over ``pair_budget`` pairs); sampled mode draws
    seeded random pairs.  Deterministic for fixed arguments; ties go to the
    earliest pair, and the winner is re-measured through the public
    pipeline before reporting.
    """
    if m < 2 or n < 2:
        raise ValueError(f"search needs m, n >= 2, got m={m}, n={n}")
    union = op.boolean_mode == "union"
    kind = (
        BoundKind.STAR_COMBINED_TIGHT
        if op.uses_star
        else BoundKind.REVERSAL_COMBINED_TIGHT
    )
    predicted = bound_value(kind, m, n)
    best = -1
    best_pair: tuple[Dfa, Dfa] | None = None
    examined = 0
    if mode.kind == "exhaustive":
        pairs = dfa_space_size(m, alphabet) * dfa_space_size(n, alphabet)
        if pairs > pair_budget:
            raise BudgetExceeded(pairs, pair_budget, "pairs")
        ms: list[Dfa] = []
        enumerate_dfas(m, alphabet, ms.append, budget=pair_budget)
        if n == m:
            ns = ms
        else:
            ns = []
            enumerate_dfas(n, alphabet, ns.append, budget=pair_budget)
        for dM in ms:
            firstM = first_component(dM, op)
            for dN in ns:
                size = _measured_size(firstM, dN, union)
                examined += 1
                if size > best:
                    best = size
                    best_pair = (dM, dN)
    elif mode.kind == "sampled":
        if mode.samples < 1:
            raise ValueError("sampled mode needs a positive sample count")
        if mode.samples > pair_budget:
            raise BudgetExceeded(mode.samples, pair_budget, "pairs")
        rng = SplitMix64(mode.seed)
        for _ in range(mode.samples):
            dM = random_dfa(m, alphabet, rng.next_uint64())
            dN = random_dfa(n, alphabet, rng.next_uint64())
            size = _measured_size(first_component(dM, op), dN, union)
            examined += 1
            if size > best:
                best = size
                best_pair = (dM, dN)
    else:
        raise ValueError(f"unknown search mode: {mode.kind!r}")
    assert best_pair is not None
    recheck = state_complexity(best_pair[0], best_pair[1], op)
    if recheck != best:
        raise AssertionError(
            f"fast measurement {best} disagrees with the pipeline's {recheck}"
        )
    return SearchReport(
        op, m, n, len(alphabet), mode, best, best_pair, examined, predicted
    )
