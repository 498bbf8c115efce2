import pytest

from sclab import (
    NEW_START,
    AlphabetMismatch,
    CombinedOp,
    Dfa,
    StarPrecondition,
    SubsetDfa,
    combined,
    determinize,
    dfa_accepts,
    epsilon_only_dfa,
    first_component,
    minimize,
    nfa_accepts,
    product,
    relabel_canonical,
    reverse_to_nfa,
    star_explicit,
    star_generic,
    equivalent,
)
from sclab.oracle import random_dfa, reverse_membership_oracle, star_membership_oracle
from sclab.witnesses import (
    REVERSAL_ALPHABET,
    STAR_ALPHABET,
    reversal_witness_m,
    star_witness_m,
    star_witness_n,
)

from conftest import AB, mkdfa, words_upto


def test_new_start_is_a_singleton_marker():
    assert repr(NEW_START) == "NEW_START"
    assert NEW_START is first_component(star_witness_m(2), CombinedOp.STAR_UNION).labels[0]


def test_subset_dfa_checks_label_count():
    d = star_witness_n(2)
    with pytest.raises(ValueError):
        SubsetDfa(d, (0,))


def test_combined_op_properties():
    assert CombinedOp.STAR_UNION.uses_star
    assert CombinedOp.STAR_INTERSECTION.uses_star
    assert not CombinedOp.REVERSAL_UNION.uses_star
    assert CombinedOp.STAR_UNION.boolean_mode == "union"
    assert CombinedOp.REVERSAL_INTERSECTION.boolean_mode == "intersection"
    assert CombinedOp("star-union") is CombinedOp.STAR_UNION


def test_reverse_to_nfa_transposes_the_witness():
    d = reversal_witness_m(2)
    nf = reverse_to_nfa(d)
    assert nf.starts == frozenset({0})
    assert nf.finals == frozenset({0})
    # a sends 0->1 and 1->0 in the witness, so the transpose keeps both
    assert nf.delta[0][0] == frozenset({1})
    assert nf.delta[1][0] == frozenset({0})
    # b sends both states to 1, so reversed b fans 1 out to {0, 1}
    assert nf.delta[1][1] == frozenset({0, 1})
    assert nf.delta[0][1] == frozenset()


def test_reverse_to_nfa_of_finalless_machine_has_no_starts():
    d = mkdfa(AB, [(0, 1), (1, 0)], set())
    nf = reverse_to_nfa(d)
    assert nf.starts == frozenset()
    assert not nfa_accepts(nf, ())


def test_reverse_nfa_accepts_reversed_words():
    for m in (2, 3, 4):
        d = reversal_witness_m(m)
        nf = reverse_to_nfa(d)
        for w in words_upto(d.sigma, 4):
            assert nfa_accepts(nf, w) == dfa_accepts(d, tuple(reversed(w)))


def test_determinize_reversal_witness_is_full_power_set():
    sub = determinize(reverse_to_nfa(reversal_witness_m(2)))
    assert sub.dfa.state_count == 4
    assert set(sub.labels) == {
        frozenset(),
        frozenset({0}),
        frozenset({1}),
        frozenset({0, 1}),
    }
    sub3 = determinize(reverse_to_nfa(reversal_witness_m(3)))
    assert sub3.dfa.state_count == 8
    assert minimize(sub3.dfa).state_count == 8


def test_determinize_output_is_canonical_and_complete():
    sub = determinize(reverse_to_nfa(reversal_witness_m(3)))
    assert relabel_canonical(sub.dfa) == sub.dfa
    assert sub.labels[0] == frozenset({0})
    # a subset state is final exactly when it contains the old start
    for i, label in enumerate(sub.labels):
        assert (i in sub.dfa.finals) == (0 in label)


def test_determinize_empty_subset_is_nonfinal_sink():
    d = mkdfa(AB, [(0, 1), (1, 0)], set())
    sub = determinize(reverse_to_nfa(d))
    assert sub.labels == (frozenset(),)
    assert sub.dfa.finals == frozenset()
    assert sub.dfa.delta == ((0, 0),)


def test_star_explicit_smallest_witness_structure():
    sub = star_explicit(star_witness_m(2))
    assert sub.labels == (NEW_START, frozenset({0}), frozenset({0, 1}))
    assert sub.dfa.start == 0
    assert sub.dfa.finals == frozenset({0, 2})
    # the injected start mirrors the {0} row
    assert sub.dfa.delta[0] == sub.dfa.delta[1]


def test_star_explicit_state_count_formula():
    for m in range(2, 7):
        sub = star_explicit(star_witness_m(m))
        assert sub.dfa.state_count == 2 ** (m - 1) + 2 ** (m - 2)
    # two finals away from the start: k = 2
    d = Dfa(STAR_ALPHABET, 4, 0, frozenset({2, 3}), (
        (1, 1, 0), (2, 2, 1), (3, 3, 2), (0, 0, 3),
    ))
    sub = star_explicit(d)
    assert sub.dfa.state_count == 2 ** 3 + 2 ** 1


def test_star_explicit_needs_a_final_besides_the_start():
    with pytest.raises(StarPrecondition):
        star_explicit(mkdfa(AB, [(0, 1), (1, 0)], {0}))
    with pytest.raises(StarPrecondition):
        star_explicit(mkdfa(AB, [(0, 1), (1, 0)], set()))


def test_star_explicit_matches_membership_oracle():
    machines = [star_witness_m(m) for m in (2, 3, 4)]
    machines += [random_dfa(3, AB, seed) for seed in range(200)]
    for d in machines:
        if not d.finals - {d.start}:
            continue
        sub = star_explicit(d)
        for w in words_upto(d.sigma, 6):
            assert dfa_accepts(sub.dfa, w) == star_membership_oracle(d, w)


def test_star_generic_agrees_with_star_explicit():
    for m in range(2, 7):
        d = star_witness_m(m)
        assert equivalent(star_generic(d), star_explicit(d).dfa)


def test_star_generic_handles_the_degenerate_cases():
    start_final = mkdfa(AB, [(0, 1), (1, 0)], {0})
    g = star_generic(start_final)
    for w in words_upto(2, 6):
        assert dfa_accepts(g, w) == star_membership_oracle(start_final, w)
    no_finals = mkdfa(AB, [(0, 1), (1, 0)], set())
    g2 = star_generic(no_finals)
    for w in words_upto(2, 4):
        assert dfa_accepts(g2, w) == (len(w) == 0)


def test_product_union_and_intersection_finals():
    d1 = star_witness_n(2)
    d2 = star_witness_n(3)
    union = product(d1, d2, "union")
    inter = product(d1, d2, "intersection")
    assert union.labels[0] == (0, 0)
    assert union.dfa.state_count == inter.dfa.state_count == 6
    # c^j lands on the pair (j mod 2, j mod 3)
    for j in range(13):
        w = (2,) * j
        assert dfa_accepts(union.dfa, w) == (j % 2 == 1 or j % 3 == 2)
        assert dfa_accepts(inter.dfa, w) == (j % 2 == 1 and j % 3 == 2)
    # a and b leave both machines in place, so they never change membership
    assert dfa_accepts(inter.dfa, (0, 2, 1, 2, 0, 2, 2, 2)) == dfa_accepts(
        inter.dfa, (2,) * 5
    )


def test_product_rejects_bad_inputs():
    with pytest.raises(ValueError):
        product(star_witness_n(2), star_witness_n(2), "xor")
    with pytest.raises(AlphabetMismatch):
        product(star_witness_n(2), reversal_witness_m(2), "union")


def test_epsilon_only_dfa():
    d = epsilon_only_dfa(AB)
    assert d.state_count == 2
    assert dfa_accepts(d, ())
    for w in words_upto(2, 3):
        if w:
            assert not dfa_accepts(d, w)


def test_first_component_dispatch():
    star = first_component(star_witness_m(3), CombinedOp.STAR_UNION)
    assert star.labels[0] is NEW_START

    rev = first_component(reversal_witness_m(3), CombinedOp.REVERSAL_UNION)
    assert all(isinstance(lbl, frozenset) for lbl in rev.labels)

    start_final = mkdfa(STAR_ALPHABET, [(0, 0, 1), (1, 1, 0)], {0})
    same = first_component(start_final, CombinedOp.STAR_INTERSECTION)
    assert same.dfa is start_final
    assert same.labels == (0, 1)

    no_finals = mkdfa(STAR_ALPHABET, [(0, 0, 1), (1, 1, 0)], set())
    eps = first_component(no_finals, CombinedOp.STAR_UNION)
    assert eps.dfa.state_count == 2
    assert dfa_accepts(eps.dfa, ())
    assert not dfa_accepts(eps.dfa, (2,))


def test_combined_pairs_labels_and_counts():
    sub = combined(star_witness_m(2), star_witness_n(2), CombinedOp.STAR_UNION)
    assert sub.labels[0] == (NEW_START, 0)
    assert all(isinstance(lbl, tuple) and len(lbl) == 2 for lbl in sub.labels)
    assert len(sub.labels) == sub.dfa.state_count
    # reachable pairs only; this smallest union cell happens to be minimal
    assert sub.dfa.state_count == 5
    assert minimize(sub.dfa).state_count == 5


def test_combined_requires_matching_alphabets():
    with pytest.raises(AlphabetMismatch):
        combined(star_witness_m(2), reversal_witness_m(2), CombinedOp.STAR_UNION)


def test_combined_small_cells_hit_known_sizes():
    d = combined(star_witness_m(3), star_witness_n(2), CombinedOp.STAR_UNION)
    assert minimize(d.dfa).state_count == 11
    r = combined(
        reversal_witness_m(2),
        mkdfa(REVERSAL_ALPHABET, [(0, 0, 0, 1), (1, 1, 1, 0)], {0}),
        CombinedOp.REVERSAL_INTERSECTION,
    )
    assert minimize(r.dfa).state_count == 7


def test_combined_reversal_acceptance_matches_oracles():
    dM = reversal_witness_m(3)
    dN = mkdfa(REVERSAL_ALPHABET, [(0, 0, 0, 1), (1, 1, 1, 0)], {0})
    union = combined(dM, dN, CombinedOp.REVERSAL_UNION)
    for w in words_upto(4, 5):
        expect = reverse_membership_oracle(dM, w) or dfa_accepts(dN, w)
        assert dfa_accepts(union.dfa, w) == expect
