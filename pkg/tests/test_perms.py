from collections import Counter
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conjmeasure.errors import DomainError, ParseError
from conjmeasure.partitions import class_size, enumerate_partitions
from conjmeasure.perms import (
    Permutation,
    canonical_tuples,
    compose,
    cycle_type,
    enumerate_class,
    format_tuple,
    parse_tuple,
    points_written,
    tuple_product,
    tuple_symbol,
)

EXAMPLE = "(1 2);(1 3);(5 6);(1 6)"
P = Permutation.from_cycles


def test_parse_example_tuple():
    omega = parse_tuple(EXAMPLE)
    assert omega == (((1, 2),), ((1, 3),), ((5, 6),), ((1, 6),))
    assert format_tuple(omega) == EXAMPLE


def test_parse_empty_and_multi_cycle_entry():
    assert parse_tuple("") == ()
    omega = parse_tuple("(1 2)(3 4);(1 3)")
    assert len(omega) == 2 and omega[0] == ((1, 2), (3, 4))


@pytest.mark.parametrize("bad", ["(1 1)", "(1)", "(1 2", "1 2)", "(1 2)(2 3)", "(a b)", "(1 2))"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_tuple(bad)


def test_compose_examples():
    assert compose(P([(1, 2)]), P([(1, 2)])).is_identity()
    assert compose(P([(1, 2)]), P([(2, 3)])) == P([(1, 3, 2)])
    q = P([(2, 5, 4)])
    assert compose(Permutation.identity(), q) == q


def test_compose_applies_first_argument_first():
    p, q = P([(1, 2)]), P([(2, 3)])
    r = compose(p, q)
    assert all(r(x) == q(p(x)) for x in range(1, 5))


def test_example_product_and_types():
    prod_ = tuple_product(parse_tuple(EXAMPLE))
    assert prod_ == P([(1, 2, 3, 6, 5)])
    assert cycle_type(prod_, 8) == (5, 1, 1, 1)
    assert cycle_type(prod_, 0) == (5,)
    with pytest.raises(DomainError):
        cycle_type(prod_, 5)


def test_product_examples():
    assert tuple_product(parse_tuple("(1 2);(1 2)")).is_identity()
    assert tuple_product(parse_tuple("(1 2);(2 3);(1 3)")) == P([(2, 3)])
    assert tuple_product(()).is_identity()


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(), 4) == (1, 1, 1, 1)
    assert cycle_type(P([(1, 2), (3, 4, 5)]), 6) == (3, 2, 1)


def test_symbol_examples():
    assert tuple_symbol(parse_tuple(EXAMPLE)) == (3, 2, 1, 1, 1)
    assert tuple_symbol(parse_tuple("(1 2);(1 2)")) == (2, 2)
    assert tuple_symbol(()) == ()


def test_enumerate_class_examples():
    assert len(list(enumerate_class(3, (2, 1)))) == 3
    assert list(enumerate_class(3, (1, 1, 1))) == [Permutation.identity()]
    assert len(list(enumerate_class(4, (4,)))) == 6
    with pytest.raises(DomainError):
        list(enumerate_class(4, (2, 1)))


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_class_sizes_and_types(n):
    seen = set()
    for lam in enumerate_partitions(n):
        members = list(enumerate_class(n, lam))
        assert len(members) == class_size(lam) == len(set(members))
        assert all(cycle_type(p, n) == lam for p in members)
        seen.update(members)
    assert len(seen) == factorial(n)


def test_inverse_and_then():
    p = P([(1, 4, 2), (3, 5)])
    assert p.then(p.inverse()).is_identity()
    assert p.inverse().inverse() == p


cycles = st.lists(st.integers(1, 7), min_size=2, max_size=4, unique=True).map(tuple)
tuples = st.lists(cycles.map(lambda c: (c,)), max_size=6).map(tuple)


@given(tuples, tuples)
def test_product_of_concatenation_is_composition(a, b):
    assert tuple_product(a + b) == compose(tuple_product(a), tuple_product(b))


@given(tuples, st.randoms(use_true_random=False))
def test_symbol_invariant_under_relabeling(omega, rng):
    images = list(range(1, 20))
    rng.shuffle(images)
    relabel = dict(zip(range(1, 20), images))
    moved = tuple(tuple(tuple(relabel[x] for x in c) for c in e) for e in omega)
    assert tuple_symbol(moved) == tuple_symbol(omega)
    assert cycle_type(tuple_product(moved)) == cycle_type(tuple_product(omega))


@given(tuples)
def test_symbol_weight_counts_written_points(omega):
    assert sum(tuple_symbol(omega)) == points_written(omega)


@given(st.permutations(list(range(1, 7))))
def test_cycles_round_trip(images):
    p = Permutation(dict(zip(range(1, 7), images)))
    assert P(p.cycles()) == p
    assert sum(cycle_type(p, 6)) == 6


def _relabel_key(omega):
    # orbit representative under relabeling: the least relabeled rendering
    pts = sorted({x for e in omega for c in e for x in c})
    best = None
    for perm in permutations(range(1, len(pts) + 1)):
        m = dict(zip(pts, perm))
        key = tuple(
            tuple(sorted(_rot(tuple(m[x] for x in c)) for c in e)) for e in omega
        )
        best = key if best is None or key < best else best
    return best


def _rot(c):
    k = c.index(min(c))
    return c[k:] + c[:k]


def _all_labelled(max_entries, lengths, ground):
    words = [
        _rot(w)
        for L in lengths
        for w in permutations(range(1, ground + 1), L)
        if w[0] == min(w)
    ]
    for k in range(max_entries + 1):
        for combo in product(words, repeat=k):
            yield tuple((w,) for w in combo)


def test_canonical_tuples_cover_every_relabeling_class():
    want = {_relabel_key(w) for w in _all_labelled(3, (2, 3), 4)}
    got = {_relabel_key(w) for w in canonical_tuples(3, (2, 3), 4, 1)}
    assert got == want


def test_canonical_tuples_respect_filters():
    for omega in canonical_tuples(4, (2, 3), 6, 2, max_count=2):
        assert all(1 <= len(e) <= 2 for e in omega)
        assert max(Counter(x for e in omega for c in e for x in c).values(), default=0) <= 2
    for omega in canonical_tuples(3, (2,), 5, 2, single_heavy=True):
        assert sum(1 for v in tuple_symbol(omega) if v >= 3) <= 1


def test_canonical_multi_cycle_entries_cover_small_case():
    pts = range(1, 5)
    singles = [((a, b),) for a in pts for b in pts if a < b]
    doubles = [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]
    want = {_relabel_key(t) for t in product(singles + doubles, repeat=2)}
    got = {_relabel_key(t) for t in canonical_tuples(2, (2,), 4, 2) if len(t) == 2}
    assert got == want
