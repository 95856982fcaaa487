import pytest
from hypothesis import given, settings, strategies as st

from conjmeasure import reduction as R
from conjmeasure.errors import DomainError
from conjmeasure.perms import canonical_tuples, cycle_type, parse_tuple, tuple_product, tuple_symbol
from conjmeasure.reduction import (
    apply_step,
    check_pairing,
    has_reducible_shape,
    identity_by_reduction,
    reduce,
    reduction_step,
)

EXAMPLE = parse_tuple("(1 2);(1 3);(5 6);(1 6)")
T = parse_tuple


def in_shape_family(omega, q):
    sym = tuple_symbol(omega)
    return not sym or (sym[0] <= q and all(c <= 2 for c in sym[1:]))


def test_minimal_pair_reduces_in_one_step():
    succ = reduction_step(T("(1 2);(1 2)"))
    assert len(succ) == 1
    nxt, step = succ[0]
    assert nxt == () and step.pivot == 1 and step.deleted == 2


def test_example_tuple_has_no_successor():
    assert reduction_step(EXAMPLE, "enumerate") == []
    trace = reduce(EXAMPLE)
    assert not trace.reached_empty and trace.final == EXAMPLE
    assert identity_by_reduction(EXAMPLE) is False


@pytest.mark.parametrize("text", ["(1 2 3);(1 3 2)", "(1 2);(1 2)", "(1 2);(3 4);(1 2);(3 4)"])
def test_identity_examples_reach_empty(text):
    omega = T(text)
    assert reduction_step(omega, "enumerate")
    trace = reduce(omega)
    assert trace.reached_empty and trace.final == ()
    assert identity_by_reduction(omega)


def test_shape_precondition():
    bad = T("(1 2);(1 2);(1 2)")  # two points written three times
    assert not has_reducible_shape(bad)
    with pytest.raises(DomainError):
        reduction_step(bad)
    with pytest.raises(DomainError):
        identity_by_reduction(bad)
    with pytest.raises(DomainError):
        reduction_step(T("(1 2);(3 4)"))


def test_unknown_policy_rule_and_mode():
    omega = T("(1 2);(1 2)")
    with pytest.raises(DomainError):
        reduction_step(omega, "random")
    with pytest.raises(DomainError):
        reduction_step(omega, rule="both")
    with pytest.raises(DomainError):
        reduce(omega, "bfs")


def test_empty_tuple_reduces_trivially():
    trace = reduce(())
    assert trace.reached_empty and trace.steps == ()


def test_trace_lines_format():
    trace = reduce(T("(1 2 3);(1 3 2)"))
    lines = trace.lines()
    assert lines[0].startswith("step 1: pivot=1, delete ")
    assert "from (1,1)~(2,1)" in lines[0]
    assert lines[-1] == "final: ()"


def test_wrap_around_step_is_used_and_preserves_product():
    # the only admissible pair is the wrap from the last cycle through 1 back to the first
    omega = T("(1 2);(1 3);(1 3 2)")
    moves = reduction_step(omega, "enumerate")
    wraps = [(nxt, s) for nxt, s in moves if s.first == (3, 1) and s.second == (1, 1)]
    assert wraps
    for nxt, _ in wraps:
        assert cycle_type(tuple_product(nxt)) == cycle_type(tuple_product(omega))


def test_literal_either_rule_breaks_the_equivalence():
    omega = T("(1 2);(1 3);(1 2 3)")
    assert not tuple_product(omega).is_identity()
    assert identity_by_reduction(omega, rule="either")
    assert not identity_by_reduction(omega)


def test_second_last_rule_matches_right_to_left_product():
    omega = T("(1 2);(1 3);(1 2 3)")
    rtl = tuple_product(tuple(reversed(omega)))
    assert identity_by_reduction(omega, rule="second/last") == rtl.is_identity()


SMALL = [w for w in canonical_tuples(3, (2, 3), 5, 2) if w and has_reducible_shape(w)]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SMALL))
def test_every_step_preserves_product_and_shape(omega):
    q = tuple_symbol(omega)[0]
    p = tuple_product(omega)
    for nxt, step in reduction_step(omega, "enumerate"):
        assert nxt == apply_step(omega, step)
        if step.first[0] < step.second[0]:
            assert tuple_product(nxt) == p
        else:
            # wrap-around: the product is replaced by a conjugate
            assert cycle_type(tuple_product(nxt)) == cycle_type(p)
        assert in_shape_family(nxt, q)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SMALL))
def test_trace_replays_to_final(omega):
    for mode in ("search", "deterministic"):
        trace = reduce(omega, mode)
        cur = omega
        for step in trace.steps:
            cur = apply_step(cur, step)
        assert cur == trace.final
        assert trace.reached_empty == (trace.final == ())


def test_search_is_independent_of_pivot_order(monkeypatch):
    before = {w: identity_by_reduction(w) for w in SMALL}
    original = R._pivots
    monkeypatch.setattr(R, "_pivots", lambda omega: original(omega)[::-1])
    original_moves = R._moves
    monkeypatch.setattr(R, "_moves", lambda omega, a, rule: original_moves(omega, a, rule)[::-1])
    assert {w: identity_by_reduction(w) for w in SMALL} == before


def test_small_equivalence_including_multi_cycle_entries():
    for omega in SMALL:
        assert identity_by_reduction(omega) == tuple_product(omega).is_identity(), omega


def test_deterministic_versus_search_is_reported():
    # the deterministic policy is not claimed to decide identity; record, do not assert
    diverging = [w for w in SMALL if reduce(w, "deterministic").reached_empty != identity_by_reduction(w)]
    print(f"deterministic policy diverges from search on {len(diverging)} of {len(SMALL)} tuples")
    # a deterministic path to the empty tuple is itself a witness for search
    assert all(not reduce(w, "deterministic").reached_empty or identity_by_reduction(w) for w in SMALL)


def test_pairing_examples():
    assert check_pairing(T("(1 2);(3 4);(1 2);(3 4)"))
    assert not check_pairing(T("(1 2);(2 3);(1 3)"))
    assert check_pairing(T("(1 2 3);(1 3 2)"))
    assert not check_pairing(T("(1 2 3);(1 2 3)"))
    with pytest.raises(DomainError):
        check_pairing(EXAMPLE)


def test_pairing_requires_distinct_entries():
    # (1 2)(3 4) then (1 2)(3 4): every cycle has its inverse in the other entry
    assert check_pairing(T("(1 2)(3 4);(1 2)(3 4)"))
