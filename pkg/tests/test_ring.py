import pytest

from smtorus import families, ring
from smtorus.ring import (
    AmbiguousMatchError,
    RingSpec,
    basis,
    check_generation,
    dim_graded_piece,
    has_semistable,
    hilbert,
    hilbert_even,
    identify_projective_space,
    new_generators,
    relations_in_degree,
    veronese_hilbert,
)

FULL4 = RingSpec("omega_n", 4, (5, 6, 7, 8), max_degree=4)


def test_hilbert_full_rank4():
    assert hilbert(RingSpec("omega_n", 4, (5, 6, 7, 8), max_degree=3)) == [1, 3, 6, 10]


def test_hilbert_point_and_line():
    assert hilbert(RingSpec("omega_n", 4, (2, 4, 6, 8), max_degree=5)) == [1] * 6
    assert hilbert(RingSpec("omega_n", 4, (3, 4, 7, 8), max_degree=3)) == [1, 2, 3, 4]


def test_hilbert_none_w_means_full_space():
    assert hilbert(RingSpec("omega_n", 4, None, max_degree=3)) == [1, 3, 6, 10]


def test_hilbert_omega_1():
    for n in range(4, 9):
        spec = RingSpec("omega_1", n, None, "D", max_degree=4)
        assert hilbert(spec) == veronese_hilbert(n - 2, 1, 4)
    for n in range(2, 9):
        spec = RingSpec("omega_1", n, None, "C", max_degree=4)
        assert hilbert(spec) == veronese_hilbert(n - 1, 1, 4)


def test_generation_full_rank4_degree1():
    rep = check_generation(FULL4, 1)
    assert rep.generated
    assert [r[1] for r in rep.per_degree] == [1, 3, 6, 10, 15]
    assert all(r[1] == r[2] for r in rep.per_degree)


def test_generation_with_max_degree_generators_is_trivially_surjective():
    spec = RingSpec("omega_n", 4, (3, 4, 7, 8), max_degree=3)
    assert check_generation(spec, 3).generated


def test_generation_monotone_in_max_degree():
    for K in (2, 3, 4):
        spec = RingSpec("omega_n", 4, (5, 6, 7, 8), max_degree=K)
        assert check_generation(spec, 1).generated


def test_generation_omega_1_degree1():
    for gt, n in (("D", 5), ("C", 3)):
        spec = RingSpec("omega_1", n, None, gt, max_degree=4)
        assert check_generation(spec, 1).generated


def test_generation_with_explicit_generators():
    # only the two degree-1 elements on the line: still generates
    spec = RingSpec("omega_n", 4, (3, 4, 7, 8), max_degree=3)
    gens = basis(spec, 1)
    assert check_generation(spec, 1, generators=gens).generated
    # a single generator does not generate the line's ring
    assert not check_generation(spec, 1, generators=gens[:1]).generated


def test_relations_zero_at_rank4():
    assert relations_in_degree(FULL4, 2).dimension == 0
    assert relations_in_degree(RingSpec("omega_n", 4, (3, 4, 7, 8), max_degree=2), 2).dimension == 0


def test_relations_rejects_degree_one():
    with pytest.raises(ring.RingError):
        relations_in_degree(FULL4, 1)


def test_new_generators_rank4_stop_at_degree1():
    gens = new_generators(FULL4, 3)
    assert [d for d, _ in gens] == [1, 1, 1]


def test_new_generators_w6_include_the_four_extra_tableaux():
    spec = RingSpec("omega_n", 8, families.family_index(6, 2), max_degree=2)
    gens = new_generators(spec, 2)
    got = sorted(t.rows for d, t in gens if d == 2)
    assert got == sorted(families.y_tableau(j, 2).rows for j in range(1, 5))


def test_veronese_values():
    assert veronese_hilbert(2, 1, 3) == [1, 3, 6, 10]
    assert veronese_hilbert(1, 2, 3) == [1, 3, 5, 7]
    assert veronese_hilbert(3, 2, 2) == [1, 10, 35]
    assert veronese_hilbert(2, 2, 3) == [1, 6, 15, 28]


def test_identify_examples():
    assert identify_projective_space((1, 3, 6, 10)) == (2, 1)
    assert identify_projective_space((1, 6, 15, 28)) == (2, 2)
    assert identify_projective_space((1, 2, 3, 4)) == (1, 1)
    assert identify_projective_space((1, 1, 1, 1)) == (0, 1)
    assert identify_projective_space((1, 5, 17, 500)) is None


def test_identify_matches_veronese_inverse():
    for m in range(0, 5):
        for e in range(1, 4):
            h = veronese_hilbert(m, e, 3)
            got = identify_projective_space(h)
            assert got == ((m, e) if m else (0, 1))


def test_identify_requires_enough_degrees():
    with pytest.raises(AmbiguousMatchError):
        identify_projective_space((1, 3, 6))


def test_semistable_full_space():
    rep = has_semistable(FULL4)
    assert rep.first_invariant_degree == 1
    assert rep.weight_nonpositive is True


def test_semistable_family_members_rank8():
    for i in range(1, 7):
        spec = RingSpec("omega_n", 8, families.family_index(i, 2), max_degree=2)
        rep = has_semistable(spec)
        assert rep.first_invariant_degree == 1
        assert rep.weight_nonpositive is True


def test_semistable_absent_on_bottom_cell():
    spec = RingSpec("omega_n", 4, (1, 2, 3, 4), max_degree=6)
    rep = has_semistable(spec)
    assert rep.first_invariant_degree is None
    assert rep.weight_nonpositive is False


def test_semistable_omega_1_has_no_weight_verdict():
    rep = has_semistable(RingSpec("omega_1", 4, None, "D", max_degree=3))
    assert rep.first_invariant_degree == 1
    assert rep.weight_nonpositive is None


def test_hilbert_even_grading():
    spec = RingSpec("omega_n", 4, (3, 4, 7, 8))
    assert hilbert_even(spec, 3) == [1, 3, 5, 7]


def test_dim_matches_enumeration_rank4():
    for w in ((5, 6, 7, 8), (3, 4, 7, 8), (2, 4, 6, 8), (1, 4, 6, 7)):
        spec = RingSpec("omega_n", 4, w)
        for k in (1, 2, 3):
            assert dim_graded_piece(spec, k) == len(basis(spec, k))


def test_generation_by_minimal_set_on_largest_member():
    from smtorus import families

    spec = RingSpec("omega_n", 8, families.family_index(6, 2), max_degree=4)
    gens = [families.x_tableau(i, 2) for i in range(1, 7)] + [families.y_tableau(1, 2)]
    assert check_generation(spec, 2, generators=gens).generated
    # dropping Y_1 reproduces the degree-2 failure
    assert not check_generation(spec, 2, generators=gens[:6]).generated
