from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smtorus import weyl


def test_parse_valid_top_element():
    el = weyl.parse_one_line((5, 6, 7, 8, 1, 2, 3, 4), "D", 4)
    assert el.one_line == (5, 6, 7, 8, 1, 2, 3, 4)


def test_parse_identity():
    for n in (2, 3, 4):
        el = weyl.parse_one_line(range(1, 2 * n + 1), "D", n)
        assert el == weyl.identity("D", n)
        assert weyl.length(el) == 0


def test_parse_rejects_symmetry_violation():
    with pytest.raises(weyl.SymmetryViolatedError):
        weyl.parse_one_line((5, 6, 7, 8, 1, 2, 4, 3), "D", 4)


def test_parse_rejects_mirror_symmetric_odd_count():
    # mirror-symmetric but with three negated slots among the first four
    with pytest.raises(weyl.OddNegativeCountError):
        weyl.parse_one_line((5, 6, 7, 1, 8, 2, 3, 4), "D", 4)


def test_parse_rejects_non_permutation():
    with pytest.raises(weyl.NotPermutationError):
        weyl.parse_one_line((1, 1, 3, 4, 5, 6, 8, 8), "D", 4)
    with pytest.raises(weyl.NotPermutationError):
        weyl.parse_one_line((1, 2, 3), "D", 4)


def test_parse_rejects_odd_negative_count():
    # swap one mirror pair only: a_4 = 5, a_5 = 4
    with pytest.raises(weyl.OddNegativeCountError):
        weyl.parse_one_line((1, 2, 3, 5, 4, 6, 7, 8), "D", 4)
    # the same element is fine in type C
    weyl.parse_one_line((1, 2, 3, 5, 4, 6, 7, 8), "C", 4)


def test_word_to_one_line_top():
    el = weyl.word_to_one_line((4, 2, 3, 1, 2, 4), "D", 4)
    assert el.one_line[:4] == (5, 6, 7, 8)
    assert weyl.length(el) == 6


def test_word_empty_is_identity():
    assert weyl.word_to_one_line((), "D", 3) == weyl.identity("D", 3)


def test_word_out_of_range():
    with pytest.raises(weyl.IndexOutOfRangeError):
        weyl.word_to_one_line((5,), "D", 4)


def test_words_for_smaller_indices():
    assert weyl.word_to_one_line((3, 1, 2, 4), "D", 4).one_line[:4] == (2, 4, 6, 8)
    assert weyl.word_to_one_line((2, 3, 1, 2, 4), "D", 4).one_line[:4] == (3, 4, 7, 8)


def test_word_roundtrip_via_parse():
    el = weyl.word_to_one_line((4, 2, 3), "D", 4)
    assert weyl.parse_one_line(el.one_line, "D", 4) == el


def test_simple_reflections_are_involutions():
    for gt in ("D", "C"):
        for n in (2, 3, 4):
            for i in range(1, n + 1):
                s = weyl.simple_reflection(i, gt, n)
                el = weyl.parse_one_line(s, gt, n)
                assert weyl.length(el) == 1
                twice = tuple(s[s[x] - 1] for x in range(2 * n))
                assert twice == tuple(range(1, 2 * n + 1))


def test_length_formula_against_greedy_reduced_words():
    for n in (2, 3, 4):
        for iv in weyl.minimal_coset_reps_alpha_n(n):
            el = weyl.coset_rep_to_weyl(iv, n)
            word = weyl.reduced_word(el)
            assert len(word) == weyl.length(el)
            assert weyl.word_to_one_line(word, "D", n) == el


def test_length_type_c_simple_reflections():
    for n in (2, 3, 4):
        for i in range(1, n + 1):
            el = weyl.parse_one_line(weyl.simple_reflection(i, "C", n), "C", n)
            assert weyl.length(el) == 1


def test_quotient_dimension_of_top_element():
    el = weyl.word_to_one_line((4, 2, 3, 1, 2, 4), "D", 4)
    assert weyl.length(el) - 4 == 2


def test_bruhat_examples():
    assert weyl.bruhat_leq((1, 2, 3, 4), (5, 6, 7, 8))
    assert weyl.bruhat_leq((2, 4, 6, 8), (3, 4, 7, 8))
    assert not weyl.bruhat_leq((3, 4, 7, 8), (2, 4, 6, 8))
    with pytest.raises(weyl.LengthMismatchError):
        weyl.bruhat_leq((1, 2), (1, 2, 3))


def test_bruhat_poset_axioms_exhaustive():
    reps = weyl.minimal_coset_reps_alpha_n(4)
    assert len(reps) == 8
    for u in reps:
        assert weyl.bruhat_leq(u, u)
    for u, v in combinations(reps, 2):
        if weyl.bruhat_leq(u, v) and weyl.bruhat_leq(v, u):
            assert u == v
    for u in reps:
        for v in reps:
            for w in reps:
                if weyl.bruhat_leq(u, v) and weyl.bruhat_leq(v, w):
                    assert weyl.bruhat_leq(u, w)


def brute_force_reps(n):
    out = []
    for iv in combinations(range(1, 2 * n + 1), n):
        if any((t in iv) == (2 * n + 1 - t in iv) for t in range(1, n + 1)):
            continue
        if sum(1 for v in iv if v > n) % 2 == 0:
            out.append(iv)
    return sorted(out)


def test_minimal_coset_reps_against_brute_force():
    for n in (2, 3, 4, 5):
        assert weyl.minimal_coset_reps_alpha_n(n) == brute_force_reps(n)


def test_minimal_coset_reps_examples():
    assert weyl.minimal_coset_reps_alpha_n(2) == [(1, 2), (3, 4)]
    reps = weyl.minimal_coset_reps_alpha_n(4)
    assert (1, 2, 3, 4) in reps and (5, 6, 7, 8) in reps
    for iv in reps:
        assert (1 in iv) != (8 in iv)
        # transversal of every mirror pair
        for t in range(1, 5):
            assert (t in iv) != (9 - t in iv)


def test_apply_to_weight_top_element():
    el = weyl.parse_one_line((5, 6, 7, 8, 1, 2, 3, 4), "D", 4)
    assert weyl.apply_to_weight(el, weyl.two_omega_n(4)) == tuple([Fraction(-1)] * 4)


def test_apply_to_weight_identity_and_rank_mismatch():
    el = weyl.identity("D", 4)
    lam = (Fraction(3), Fraction(-2), Fraction(1), Fraction(0))
    assert weyl.apply_to_weight(el, lam) == lam
    with pytest.raises(weyl.RankMismatchError):
        weyl.apply_to_weight(el, (1, 2, 3))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-5, 5), min_size=4, max_size=4),
    st.lists(st.integers(-5, 5), min_size=4, max_size=4),
    st.integers(-3, 3),
)
def test_apply_to_weight_is_linear(a, b, c):
    el = weyl.word_to_one_line((2, 3, 1, 2, 4), "D", 4)
    lhs = weyl.apply_to_weight(el, [c * x + y for x, y in zip(a, b)])
    fa = weyl.apply_to_weight(el, a)
    fb = weyl.apply_to_weight(el, b)
    assert lhs == tuple(c * x + y for x, y in zip(fa, fb))


def test_dominance_nonpositive_examples():
    assert weyl.is_dominant_nonpositive((-1, -1, -1, -1), "D")
    assert weyl.is_dominant_nonpositive((0, 0, 0, 0), "D")
    assert not weyl.is_dominant_nonpositive((1, 0, 0, 0), "D")
    ok, coeffs = weyl.nonpositivity_certificate((-1, -1, -1, -1), "D")
    assert ok and all(c >= 0 and c.denominator == 1 for c in coeffs)


def test_dominance_nonintegral_is_false_with_reason():
    ok, reason = weyl.nonpositivity_certificate((-1, 0, 0, 0), "D")
    assert not ok and isinstance(reason, str)


def test_dominance_type_c():
    # -2e_1 = 2a_1 + 2a_2 + ... ; alpha_n = 2e_n
    assert weyl.is_dominant_nonpositive((-2, 0, 0), "C")
    assert not weyl.is_dominant_nonpositive((-1, 0, 0), "C")


def test_bottom_index_weight_is_nonpositive_but_not_negative():
    el = weyl.coset_rep_to_weyl((2, 4, 6, 8), 4)
    mu = weyl.apply_to_weight(el, weyl.two_omega_n(4))
    assert weyl.is_dominant_nonpositive(mu, "D")
    assert any(x >= 0 for x in mu)


def test_serialization_of_words():
    assert weyl.parse_word("4 2 3 1 2 4") == (4, 2, 3, 1, 2, 4)
    assert weyl.format_word((4, 2, 3)) == "4 2 3"


def test_top_coset_rep_dominates_everything():
    for n in (2, 3, 4, 5, 6):
        top = weyl.top_coset_rep(n)
        reps = weyl.minimal_coset_reps_alpha_n(n)
        assert top in reps
        assert all(weyl.bruhat_leq(r, top) for r in reps)
