"""Machines for star and reversal, pair machines for union and intersection,
and the four pipelines combining them.

Subset-valued states carry labels describing what they denote: a frozenset
of source-machine states, the ``NEW_START`` marker for the injected start of
the star machine, a plain state index when the first component is a machine
reused as is, or a ``(first, j)`` pair after a product.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

from .core import Alphabet, Dfa, Nfa, require_same_alphabet


class _NewStart:
    __slots__ = ()

    def __repr__(self) -> str:
        return "NEW_START"


NEW_START = _NewStart()

Label = object

BooleanMode = Literal["union", "intersection"]


class StarPrecondition(ValueError):
    """The explicit star machine needs a final state other than the start."""


class CombinedOp(Enum):
    """The four measured pipelines; values double as their command names."""

    STAR_UNION = "star-union"
    STAR_INTERSECTION = "star-intersection"
    REVERSAL_UNION = "reversal-union"
    REVERSAL_INTERSECTION = "reversal-intersection"

    @property
    def uses_star(self) -> bool:
        return self in (CombinedOp.STAR_UNION, CombinedOp.STAR_INTERSECTION)

    @property
    def boolean_mode(self) -> BooleanMode:
        if self in (CombinedOp.STAR_UNION, CombinedOp.REVERSAL_UNION):
            return "union"
        return "intersection"


@dataclass(frozen=True)
class SubsetDfa:
    """A DFA plus one label per state recording what the state denotes."""

    dfa: Dfa
    labels: tuple[Label, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.dfa.state_count:
            raise ValueError("need exactly one label per state")


def _mask_to_frozenset(mask: int) -> frozenset[int]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


def reverse_to_nfa(d: Dfa) -> Nfa:
    """Reverse every edge and swap the roles of start and finals.

    The result accepts exactly the reversals of the words ``d`` accepts.  A
    machine with no final states reverses to an NFA with no start states.
    """
    sigma = d.sigma
    cells: list[list[set[int]]] = [
        [set() for _ in range(sigma)] for _ in range(d.state_count)
    ]
    for q in range(d.state_count):
        row = d.delta[q]
        for a in range(sigma):
            cells[row[a]][a].add(q)
    delta = tuple(tuple(frozenset(cell) for cell in row) for row in cells)
    return Nfa(d.alphabet, d.state_count, d.finals, frozenset({d.start}), delta)


def determinize(nf: Nfa) -> SubsetDfa:
    """Subset construction from the set of start states.

    The result is complete: an empty transition image leads to the empty
    subset, which is a non-final sink.  A subset state is final iff it meets
    ``nf.finals``.  Labels record the subsets, and states are numbered in
    breadth-first discovery order, so the output is already in canonical
    form.
    """
    sigma = nf.sigma
    move = [[0] * sigma for _ in range(nf.state_count)]
    for q in range(nf.state_count):
        for a in range(sigma):
            bits = 0
            for t in nf.delta[q][a]:
                bits |= 1 << t
            move[q][a] = bits
    start = 0
    for q in nf.starts:
        start |= 1 << q
    final_mask = 0
    for q in nf.finals:
        final_mask |= 1 << q
    index = {start: 0}
    order = [start]
    rows = []
    for subset in order:
        row = []
        for a in range(sigma):
            image = 0
            rest = subset
            while rest:
                low = rest & -rest
                image |= move[low.bit_length() - 1][a]
                rest ^= low
            t = index.get(image)
            if t is None:
                t = len(order)
                index[image] = t
                order.append(image)
            row.append(t)
        rows.append(tuple(row))
    finals = frozenset(i for i, subset in enumerate(order) if subset & final_mask)
    dfa = Dfa(nf.alphabet, len(order), 0, finals, tuple(rows))
    return SubsetDfa(dfa, tuple(_mask_to_frozenset(s) for s in order))


def star_explicit(d: Dfa) -> SubsetDfa:
    """Subset-based star machine with an injected start state.

    Writing F0 for the finals other than the start (k = |F0|, required
    non-empty), the states are: the injected start; every non-empty subset
    disjoint from F0; and every subset containing the start and meeting F0.
    A transition takes the elementwise image and re-adds the start whenever
    the image meets F0, modelling a restart after a completed factor; the
    injected start behaves like the singleton {start} under this rule.
    Finals are the injected start and every subset meeting ``d.finals``.

    The result accepts the star of ``d``'s language and has exactly
    ``2**(m-1) + 2**(m-k-1)`` states, counting unreachable ones.
    """
    restart_finals = d.finals - {d.start}
    if not restart_finals:
        raise StarPrecondition(
            "the explicit star machine needs a final state other than the "
            "start; with none, the language is already its own star (start "
            "final) or the star is just the empty word (no finals)"
        )
    m, sigma = d.state_count, d.sigma
    f0_mask = 0
    for q in restart_finals:
        f0_mask |= 1 << q
    final_mask = 0
    for q in d.finals:
        final_mask |= 1 << q
    start_bit = 1 << d.start

    index: dict[int, int] = {}
    members: list[int] = []
    for mask in range(1, 1 << m):
        if (mask & f0_mask) == 0 or (mask & start_bit and mask & f0_mask):
            index[mask] = len(members) + 1
            members.append(mask)

    bit_step = [[1 << d.delta[q][a] for a in range(sigma)] for q in range(m)]

    def step(mask: int, a: int) -> int:
        image = 0
        rest = mask
        while rest:
            low = rest & -rest
            image |= bit_step[low.bit_length() - 1][a]
            rest ^= low
        if image & f0_mask:
            image |= start_bit
        return image

    rows = [tuple(index[step(start_bit, a)] for a in range(sigma))]
    for mask in members:
        rows.append(tuple(index[step(mask, a)] for a in range(sigma)))
    finals = frozenset({0}) | frozenset(
        index[mask] for mask in members if mask & final_mask
    )
    dfa = Dfa(d.alphabet, 1 + len(members), 0, finals, tuple(rows))
    labels = (NEW_START, *(_mask_to_frozenset(mask) for mask in members))
    return SubsetDfa(dfa, labels)


def star_generic(d: Dfa) -> Dfa:
    """Star DFA by reachable subset construction, as a cross-check.

    Tokens advance through ``d`` in parallel; whenever one lands on a final
    state a new token is started at ``d.start``, and the empty word is
    accepted at a fresh start state.  Works for any machine and guarantees
    nothing about the state count.
    """
    sigma = d.sigma
    final_mask = 0
    for q in d.finals:
        final_mask |= 1 << q
    start_bit = 1 << d.start
    bit_step = [
        [1 << d.delta[q][a] for a in range(sigma)] for q in range(d.state_count)
    ]

    def step(mask: int, a: int) -> int:
        image = 0
        rest = mask
        while rest:
            low = rest & -rest
            image |= bit_step[low.bit_length() - 1][a]
            rest ^= low
        if image & final_mask:
            image |= start_bit
        return image

    index: dict[int, int] = {}
    order: list[int] = []

    def intern(mask: int) -> int:
        t = index.get(mask)
        if t is None:
            t = len(order) + 1
            index[mask] = t
            order.append(mask)
        return t

    rows = [tuple(intern(step(start_bit, a)) for a in range(sigma))]
    for mask in order:
        rows.append(tuple(intern(step(mask, a)) for a in range(sigma)))
    finals = frozenset({0}) | frozenset(
        i + 1 for i, mask in enumerate(order) if mask & final_mask
    )
    return Dfa(d.alphabet, 1 + len(order), 0, finals, tuple(rows))


def product(d1: Dfa, d2: Dfa, mode: BooleanMode) -> SubsetDfa:
    """Reachable pair machine with componentwise transitions.

    A pair is final when either side is final (union) or both are
    (intersection); labels record the ``(i, j)`` pairs in breadth-first
    discovery order.
    """
    require_same_alphabet(d1, d2)
    if mode not in ("union", "intersection"):
        raise ValueError(f"unknown mode: {mode!r}")
    union = mode == "union"
    sigma = d1.sigma
    delta1, delta2 = d1.delta, d2.delta
    start = (d1.start, d2.start)
    index: dict[tuple[int, int], int] = {start: 0}
    order: list[tuple[int, int]] = [start]
    rows = []
    for i, j in order:
        row1 = delta1[i]
        row2 = delta2[j]
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
    f1, f2 = d1.finals, d2.finals
    if union:
        finals = frozenset(t for t, (i, j) in enumerate(order) if i in f1 or j in f2)
    else:
        finals = frozenset(t for t, (i, j) in enumerate(order) if i in f1 and j in f2)
    dfa = Dfa(d1.alphabet, len(order), 0, finals, tuple(rows))
    return SubsetDfa(dfa, tuple(order))


def epsilon_only_dfa(alphabet: Alphabet) -> Dfa:
    """Two-state machine accepting only the empty word."""
    sigma = len(alphabet)
    return Dfa(alphabet, 2, 0, frozenset({0}), ((1,) * sigma, (1,) * sigma))


def first_component(d: Dfa, op: CombinedOp) -> SubsetDfa:
    """The star or reversal half of a combined pipeline.

    Reversal ops determinize the reversed machine.  Star ops use the
    explicit star machine when some final differs from the start; otherwise
    the star adds nothing (start final: the language is its own star) or
    collapses to the empty word (no finals at all), and the component is the
    machine itself or the two-state empty-word machine.  In those two cases
    the labels are plain state indices.
    """
    if not op.uses_star:
        return determinize(reverse_to_nfa(d))
    if d.finals - {d.start}:
        return star_explicit(d)
    if d.start in d.finals:
        return SubsetDfa(d, tuple(range(d.state_count)))
    eps = epsilon_only_dfa(d.alphabet)
    return SubsetDfa(eps, tuple(range(eps.state_count)))


def combined(dM: Dfa, dN: Dfa, op: CombinedOp) -> SubsetDfa:
    """Full pipeline: star or reversal of ``dM``, then union or intersection
    with ``dN``.

    The result is reachable but not minimised; labels pair the first
    component's label with the second machine's state index.
    """
    require_same_alphabet(dM, dN)
    first = first_component(dM, op)
    prod = product(first.dfa, dN, op.boolean_mode)
    labels = tuple((first.labels[i], j) for i, j in prod.labels)
    return SubsetDfa(prod.dfa, labels)
