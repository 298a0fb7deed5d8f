from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smtorus.ring import veronese_hilbert
from smtorus.rewrite import (
    FuelExhaustedError,
    NotConfluentError,
    RewriteError,
    check_confluence,
    format_system,
    make_system,
    normal_form,
    normal_form_count,
    normal_form_trace,
    overlaps,
    parse_system,
    system_from_json,
    system_to_json,
    veronese_p1_system,
    veronese_p2_system,
    veronese_p3_system,
)

P1 = veronese_p1_system()
P2 = veronese_p2_system()
P3 = veronese_p3_system()

# the printed 54-element ambiguity list for the 10-variable system (1-based)
P3_PRINTED_AMBIGUITIES = [
    (1, 2, 3), (1, 2, 4), (1, 2, 6), (1, 2, 7), (1, 2, 8), (1, 2, 9), (1, 2, 10),
    (1, 3, 4), (1, 3, 5), (1, 3, 7), (1, 3, 8), (1, 3, 9), (1, 3, 10),
    (1, 4, 5), (1, 4, 6), (1, 4, 8), (1, 4, 9), (1, 4, 10),
    (1, 5, 10), (1, 6, 9), (1, 8, 9), (1, 8, 10), (1, 9, 10),
    (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 3, 7), (2, 3, 9), (2, 3, 10),
    (2, 4, 5), (2, 4, 6), (2, 4, 7), (2, 4, 8), (2, 4, 10),
    (2, 5, 10), (2, 6, 7), (2, 6, 9), (2, 6, 10), (2, 7, 10),
    (3, 4, 5), (3, 4, 6), (3, 4, 7), (3, 4, 8), (3, 4, 9),
    (3, 5, 7), (3, 5, 9), (3, 5, 10), (3, 6, 9), (3, 7, 9),
    (4, 5, 6), (4, 5, 8), (4, 5, 10), (4, 6, 8), (4, 6, 9),
]


def test_normal_form_single_rule_chain():
    assert normal_form((0, 1, 2), P1) == (1, 1, 1)
    trace = normal_form_trace((0, 1, 2), P1)
    assert trace == [(0, 1, 2), (1, 1, 1)]


def test_normal_form_of_normal_monomial_is_itself():
    assert normal_form((1, 1, 1), P1) == (1, 1, 1)
    assert normal_form((), P1) == ()


def test_normal_form_idempotent():
    rng = Random(0)
    for _ in range(50):
        mono = tuple(sorted(rng.choices(range(P3.nvars), k=rng.randint(1, 5))))
        nf = normal_form(mono, P3)
        assert normal_form(nf, P3) == nf


def test_rule_application_preserves_degree():
    rng = Random(1)
    for _ in range(50):
        mono = tuple(sorted(rng.choices(range(P2.nvars), k=4)))
        assert len(normal_form(mono, P2)) == 4


def test_p2_three_way_resolution():
    rep = check_confluence(P2)
    assert rep.confluent
    ways = dict(rep.resolutions)[(0, 1, 2)]
    assert len(ways) == 3
    traces = {tuple(trace) for _, trace, _ in ways}
    assert traces == {
        ((0, 1, 2), (2, 3, 3), (3, 4, 5)),
        ((0, 1, 2), (1, 4, 4), (3, 4, 5)),
        ((0, 1, 2), (0, 5, 5), (3, 4, 5)),
    }


def test_p2_overlap_list_matches_printed_seven():
    got = overlaps(P2)
    assert got == sorted([
        (0, 1, 2), (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (1, 2, 3), (1, 2, 4),
    ])


def test_p2_remaining_ambiguities_reach_printed_normal_forms():
    rep = check_confluence(P2)
    res = dict(rep.resolutions)
    # printed normal forms for the six non-triple ambiguities:
    # z1z2z5 -> z4^2 z5, z1z2z6 -> z4^2 z6, z1z3z4 -> z4 z5^2,
    # z1z3z6 -> z5^2 z6, z2z3z4 -> z4 z6^2, z2z3z5 -> z5 z6^2
    expect = {
        (0, 1, 4): (3, 3, 4),
        (0, 1, 5): (3, 3, 5),
        (0, 2, 3): (3, 4, 4),
        (0, 2, 5): (4, 4, 5),
        (1, 2, 3): (3, 5, 5),
        (1, 2, 4): (4, 5, 5),
    }
    for mono, nf in expect.items():
        for _, _, got_nf in res[mono]:
            assert got_nf == nf, (mono, got_nf, nf)


def test_p1_single_rule_certificate_checks_square():
    rep = check_confluence(P1)
    assert rep.confluent
    assert rep.ambiguities == ()
    checked = [mono for mono, _ in rep.resolutions]
    assert checked == [(0, 0, 2, 2)]


def test_p3_ambiguities_match_printed_list():
    got = overlaps(P3)
    want = sorted(tuple(v - 1 for v in mono) for mono in P3_PRINTED_AMBIGUITIES)
    assert got == want


def test_p3_confluent_with_printed_chains():
    rep = check_confluence(P3)
    assert rep.confluent
    ways = dict(rep.resolutions)[(0, 1, 2)]
    mids = {trace[1] for _, trace, _ in ways}
    assert mids == {(2, 4, 4), (1, 5, 5), (0, 7, 7)}
    assert {nf for _, _, nf in ways} == {(4, 5, 7)}


def test_counts_match_identified_veronese():
    for sys_, (m, e) in ((P1, (1, 2)), (P2, (2, 2)), (P3, (3, 2))):
        counts = [normal_form_count(sys_, k, assume_confluent=True) for k in range(5)]
        assert counts == veronese_hilbert(m, e, 4)


def test_degree_one_count_is_nvars():
    for sys_ in (P1, P2, P3):
        assert normal_form_count(sys_, 1, assume_confluent=True) == sys_.nvars


def test_broken_system_detected():
    broken = make_system(3, [((0, 1), (2, 2)), ((0, 2), (1, 1))], ("a", "b", "c"))
    rep = check_confluence(broken)
    assert not rep.confluent
    with pytest.raises(NotConfluentError):
        normal_form_count(broken, 2)


def test_cyclic_system_exhausts_fuel():
    looping = make_system(4, [((0, 1), (2, 3)), ((2, 3), (0, 1))])
    with pytest.raises(FuelExhaustedError):
        normal_form((0, 1, 2), looping)


def test_normal_form_independent_of_strategy_when_confluent():
    rng = Random(2)

    def random_reduce(mono, sys_):
        while True:
            hits = [r for r in sys_.rules
                    if (r.lhs[0] == r.lhs[1] and mono.count(r.lhs[0]) >= 2)
                    or (r.lhs[0] != r.lhs[1] and r.lhs[0] in mono and r.lhs[1] in mono)]
            if not hits:
                return mono
            rule = rng.choice(hits)
            out = list(mono)
            out.remove(rule.lhs[0])
            out.remove(rule.lhs[1])
            mono = tuple(sorted(out + list(rule.rhs)))

    for sys_ in (P2, P3):
        for _ in range(100):
            mono = tuple(sorted(rng.choices(range(sys_.nvars), k=rng.randint(2, 5))))
            assert random_reduce(mono, sys_) == normal_form(mono, sys_)


def test_make_system_validation():
    with pytest.raises(RewriteError):
        make_system(3, [((0, 1, 2), (0, 1))])
    with pytest.raises(RewriteError):
        make_system(2, [((0, 3), (1, 1))])
    with pytest.raises(RewriteError):
        make_system(3, [((0, 1), (2, 2)), ((1, 0), (2, 2))])


def test_text_roundtrip():
    text = format_system(P2)
    assert parse_system(text) == make_system(
        P2.nvars, [(r.lhs, r.rhs) for r in P2.rules], P2.names
    )


def test_parse_without_header_infers_names():
    sys_ = parse_system("a b -> c c\na c -> b b")
    assert sys_.names == ("a", "b", "c")
    assert sys_.rules[0].lhs == (0, 1)


def test_json_roundtrip():
    for sys_ in (P1, P3):
        back = system_from_json(system_to_json(sys_))
        assert back.rules == sys_.rules and back.names == sys_.names
        assert back.bindings == sys_.bindings


def test_bindings_follow_generator_squares():
    assert P2.bindings[0] == "X1*X1"
    assert P3.bindings[4] == "X1*X2"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=6))
def test_normal_form_total_degree_invariant(vals):
    mono = tuple(sorted(vals))
    assert len(normal_form(mono, P2)) == len(mono)


def test_empty_system_has_no_overlaps_and_is_confluent():
    empty = make_system(3, [])
    assert overlaps(empty) == []
    assert check_confluence(empty).confluent
    assert normal_form((0, 1, 2), empty) == (0, 1, 2)
    assert normal_form_count(empty, 2) == 6
