from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from random import Random

import pytest

from smtorus import families, weyl
from smtorus.pfaffian import random_skew_point
from smtorus.straighten import (
    FuelExhaustedError,
    NotAPfaffianIndexError,
    evaluate_expansion,
    evaluate_rows,
    expand_by_interpolation,
    expand_product,
    expansion_from_json,
    expansion_to_json,
    first_violation,
    is_standard_rows,
    restrict_expansion,
    sort_rows,
    straighten_pair,
    straighten_rows,
)

G1, G2, G3 = families.SPIN8_DEG1_ROWS
W6 = families.family_index(6, 2)
X = {i: families.x_tableau(i, 2) for i in range(1, 7)}
Y = {j: families.y_tableau(j, 2) for j in range(1, 5)}
Z = {l: families.z_tableau(l, 2) for l in (1, 2)}


def incomparable_pairs(n):
    reps = weyl.minimal_coset_reps_alpha_n(n)
    return [(a, b) for a, b in combinations(reps, 2) if not is_standard_rows((a, b))]


def test_worked_identity_signs():
    exp = straighten_pair((1, 4, 6, 7), (2, 3, 5, 8), 4)
    assert exp == {G1: Fraction(1), G2: Fraction(-1), G3: Fraction(1)}


def test_already_standard_pair_is_fixed():
    exp = straighten_pair((1, 2, 3, 4), (5, 6, 7, 8), 4)
    assert exp == {G1: Fraction(1)}
    # order of arguments is irrelevant
    assert straighten_pair((5, 6, 7, 8), (1, 2, 3, 4), 4) == exp


def test_rejects_non_coordinate_rows():
    with pytest.raises(NotAPfaffianIndexError):
        straighten_pair((1, 2, 3, 5), (1, 2, 3, 4), 4)


def test_first_violation_and_sorting():
    rows = sort_rows(((2, 3, 5, 8), (1, 4, 6, 7)))
    assert rows == ((1, 4, 6, 7), (2, 3, 5, 8))
    assert first_violation(rows) == 0
    assert first_violation((G1[0], G1[1])) is None


def test_rank8_quadratic_relations_restricted():
    e45 = straighten_rows(X[4].rows + X[5].rows, 8, w=W6)
    assert e45 == {
        Y[1].rows: Fraction(1),
        Y[2].rows: Fraction(-1),
        sort_rows(X[3].rows + X[6].rows): Fraction(1),
    }
    e25 = straighten_rows(X[2].rows + X[5].rows, 8, w=W6)
    assert e25 == {
        Y[1].rows: Fraction(1),
        Y[3].rows: Fraction(-1),
        sort_rows(X[1].rows + X[6].rows): Fraction(1),
    }
    e23 = straighten_rows(X[2].rows + X[3].rows, 8, w=W6)
    assert e23 == {
        Y[1].rows: Fraction(1),
        Y[4].rows: Fraction(-1),
        sort_rows(X[1].rows + X[4].rows): Fraction(1),
    }


def test_restriction_drops_terms_of_unrestricted_expansion():
    full = straighten_rows(X[4].rows + X[5].rows, 8)
    restricted = restrict_expansion(full, W6)
    assert restricted == straighten_rows(X[4].rows + X[5].rows, 8, w=W6)
    assert len(full) > len(restricted)
    dropped = set(full) - set(restricted)
    for rows in dropped:
        assert any(not weyl.bruhat_leq(r, W6) for r in rows)


def test_restriction_by_top_is_identity():
    exp = straighten_rows(X[4].rows + X[5].rows, 8)
    assert restrict_expansion(exp, weyl.top_coset_rep(8)) == exp


def test_restriction_by_bottom_kills_everything():
    w1 = families.family_index(1, 2)
    exp = straighten_rows(X[4].rows + X[5].rows, 8, w=w1)
    assert exp == {}


def test_degree3_products_collapse_to_single_tableaux():
    assert straighten_rows(X[2].rows + Y[1].rows, 8, w=W6) == {Z[1].rows: Fraction(1)}
    assert straighten_rows(X[2].rows + Y[2].rows, 8, w=W6) == {Z[2].rows: Fraction(1)}


def test_degree_preserved_and_terms_standard():
    for b1, b2 in incomparable_pairs(4):
        exp = straighten_pair(b1, b2, 4)
        for rows in exp:
            assert len(rows) == 2
            assert is_standard_rows(rows)


def test_straightening_law_bounds_rank8():
    for b1, b2 in incomparable_pairs(8):
        for a1, a2 in straighten_pair(b1, b2, 8):
            for b in (b1, b2):
                assert all(x <= y for x, y in zip(a1, b)) and a1 != b
                assert all(x >= y for x, y in zip(a2, b)) and a2 != b


def test_evaluation_soundness_rank8_sample():
    rng = Random(11)
    pairs = incomparable_pairs(8)
    for b1, b2 in Random(12).sample(pairs, 40):
        exp = straighten_pair(b1, b2, 8)
        for _ in range(3):
            pt = random_skew_point(8, rng, 1, 999983)
            assert evaluate_rows((b1, b2), pt) == evaluate_expansion(exp, pt)


def test_evaluation_soundness_20_points_rank4():
    rng = Random(13)
    exp = straighten_pair((1, 4, 6, 7), (2, 3, 5, 8), 4)
    for _ in range(20):
        pt = random_skew_point(4, rng)
        assert evaluate_rows(((1, 4, 6, 7), (2, 3, 5, 8)), pt) == evaluate_expansion(exp, pt)


def test_fuel_exhaustion_is_loud():
    with pytest.raises(FuelExhaustedError):
        straighten_rows(((1, 4, 6, 7), (2, 3, 5, 8)), 4, fuel=0)


def test_path_independence_rank4_all_quadratics():
    reps = weyl.minimal_coset_reps_alpha_n(4)
    for b1, b2 in combinations_with_replacement(reps, 2):
        assert expand_by_interpolation((b1, b2), 4, seed=0) == straighten_rows((b1, b2), 4)


def test_interpolation_higher_degree_rank4():
    rows = G3 + G3 + G2
    assert expand_by_interpolation(rows, 4, seed=1) == straighten_rows(rows, 4)


def test_expand_product_merges_columns():
    from smtorus.tableau import column_tableau

    a = column_tableau(4, (1, 1, 8, 8))
    b = column_tableau(4, (2, 2, 7, 7))
    exp = expand_product([a, b])
    (rows, coeff), = exp.items()
    assert coeff == 1
    assert tuple(v for r in rows for v in r) == (1, 1, 2, 2, 7, 7, 8, 8)


def test_expand_product_empty_is_unit():
    assert expand_product([]) == {(): Fraction(1)}


def test_expand_product_standard_product_stays_standard():
    # a product of standard invariant tableaux that happens to be standard
    exp = expand_product([X[3], X[6]], w=W6)
    assert exp == {sort_rows(X[3].rows + X[6].rows): Fraction(1)}


def test_expansion_json_roundtrip():
    exp = straighten_pair((1, 4, 6, 7), (2, 3, 5, 8), 4)
    assert expansion_from_json(expansion_to_json(exp)) == exp


def test_product_of_comparable_standard_tableaux_is_itself():
    from smtorus.tableau import grid_tableau

    exp = expand_product([grid_tableau(4, G2), grid_tableau(4, G3)], w=(3, 4, 7, 8))
    assert exp == {sort_rows(G2 + G3): Fraction(1)}


def test_printed_odd_row_pair_straightens_to_three_terms():
    # the top two rows of the degree-2 product of the fourth and fifth
    # degree-1 tableaux, before any Schubert restriction
    b1, b2 = X[5].rows[0], X[4].rows[0]
    exp = straighten_pair(b1, b2, 8)
    x6r1, x3r1 = families.x_tableau(6, 2).rows[0], families.x_tableau(3, 2).rows[0]
    assert exp == {
        (Y[1].rows[0], Y[1].rows[1]): Fraction(1),
        (Y[2].rows[0], Y[2].rows[1]): Fraction(-1),
        sort_rows((x6r1, x3r1)): Fraction(1),
    }


def test_w6_relations_vanish_off_the_schubert_locus():
    """The three quadratic relations are identities of sections of the largest
    member: their full-space expansions carry only rows not below its index."""
    from random import Random

    combos = [
        [(1, X[4].rows + X[5].rows), (-1, X[3].rows + X[6].rows),
         (1, Y[2].rows), (-1, Y[1].rows)],
        [(1, X[2].rows + X[5].rows), (-1, X[1].rows + X[6].rows),
         (1, Y[3].rows), (-1, Y[1].rows)],
        [(1, X[2].rows + X[3].rows), (-1, X[1].rows + X[4].rows),
         (1, Y[4].rows), (-1, Y[1].rows)],
    ]
    rng = Random(21)
    for combo in combos:
        total = {}
        for c, rows in combo:
            for key, v in straighten_rows(rows, 8).items():
                total[key] = total.get(key, Fraction(0)) + c * v
        total = {k: v for k, v in total.items() if v}
        assert restrict_expansion(total, W6) == {}
        # and the unrestricted combination still evaluates consistently
        for _ in range(5):
            pt = random_skew_point(8, rng, 1, 9973)
            lhs = sum(c * evaluate_rows(rows, pt) for c, rows in combo)
            assert lhs == evaluate_expansion(total, pt)


def test_rank6_pairs_straighten_soundly():
    reps6 = weyl.minimal_coset_reps_alpha_n(6)
    rng = Random(31)
    pairs = [(a, b) for a, b in combinations(reps6, 2) if not is_standard_rows((a, b))]
    for b1, b2 in pairs:
        exp = straighten_pair(b1, b2, 6)
        for rows in exp:
            assert is_standard_rows(rows)
        pt = random_skew_point(6, rng, 1, 99991)
        assert evaluate_rows((b1, b2), pt) == evaluate_expansion(exp, pt)
