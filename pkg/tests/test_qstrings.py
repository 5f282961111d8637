import itertools
import random
from fractions import Fraction as F

import pytest

from qonsager.qstrings import (
    NotInverseClosedError,
    QString,
    adjacent,
    adjacent_by_union,
    canonical,
    decompose,
    decompose_inverse_closed,
    equivalent,
    in_general_position,
    paired_elements,
    strongly_in_general_position,
)
from conftest import general_position_partitions, strongly_general_paired_covers


def S(ell, a):
    return QString(ell, F(a))


def test_elements_examples(q2):
    assert S(1, 1).elements(q2) == (F(1),)
    assert sorted(S(2, 2).elements(q2)) == [F(1), F(4)]
    assert sorted(S(3, 4).elements(q2)) == [F(1), F(4), F(16)]


def test_elements_are_distinct(q2, q52):
    for q in (q2, q52):
        for ell in range(1, 6):
            for a in (F(1), F(3), F(-2), F(1, 6)):
                elems = QString(ell, a).elements(q)
                assert len(set(elems)) == ell


def test_inverse_string(q2):
    assert S(1, 1).inverse() == S(1, 1)
    assert S(2, 6).inverse() == S(2, F(1, 6))
    assert S(2, 1).inverse() == S(2, 1)
    assert sorted(S(2, 6).inverse().elements(q2)) == [F(1, 12), F(1, 3)]


def test_adjacent_examples(q2):
    assert adjacent(q2, S(1, 1), S(1, 4))
    assert not adjacent(q2, S(1, 1), S(1, 16))
    assert adjacent(q2, S(2, 2), S(2, 8))
    assert not adjacent(q2, S(1, 4), S(3, 4))


def test_adjacent_matches_union_oracle(q2):
    bases = [q2.power(k) for k in range(-4, 5)]
    bases += [3 * q2.power(k) for k in range(-4, 5)]
    strings = [QString(ell, a) for ell in range(1, 5) for a in bases]
    for s1, s2 in itertools.combinations_with_replacement(strings, 2):
        assert adjacent(q2, s1, s2) == adjacent_by_union(q2, s1, s2)
        assert adjacent(q2, s1, s2) == adjacent(q2, s2, s1)
        if s1 == s2:
            assert not adjacent(q2, s1, s2)


def test_general_position_examples(q2):
    assert in_general_position(q2, [S(1, 1), S(1, 16)])
    assert not in_general_position(q2, [S(1, 1), S(1, 4)])
    assert in_general_position(q2, [S(3, 4), S(1, 4)])


def test_strong_general_position_examples(q2):
    assert not strongly_in_general_position(q2, [S(1, 2), S(1, F(1, 8))])
    assert strongly_in_general_position(q2, [S(1, 1), S(1, 16)])
    assert strongly_in_general_position(q2, [S(2, 1)])


def test_decompose_examples(q2):
    assert decompose(q2, [F(1), F(4), F(4), F(16)]) == canonical([S(3, 4), S(1, 4)])
    assert decompose(q2, [F(1)]) == (S(1, 1),)
    assert decompose(q2, [F(1), F(16)]) == canonical([S(1, 1), S(1, 16)])


def test_decompose_reconstruction_and_uniqueness(q2):
    rng = random.Random(7)
    pool = [q2.power(k) for k in range(-3, 4)] + [3 * q2.power(k) for k in range(-3, 4)]
    for _ in range(120):
        omega = [rng.choice(pool) for _ in range(rng.randint(1, 6))]
        result = decompose(q2, omega)
        rebuilt = sorted(e for s in result for e in s.elements(q2))
        assert rebuilt == sorted(omega)
        assert in_general_position(q2, result)
        unique = general_position_partitions(q2, omega)
        assert unique == [result]


def test_decompose_inverse_closed_examples(q2):
    assert decompose_inverse_closed(q2, [F(1, 2), F(1, 2), F(2), F(2)]) == (S(2, 1),)
    assert decompose_inverse_closed(
        q2, [F(3), F(1, 3), F(12), F(1, 12)]) == (S(2, 6),)
    assert decompose_inverse_closed(q2, [F(1), F(1)]) == (S(1, 1),)


def test_decompose_inverse_closed_rejects_unpaired(q2):
    with pytest.raises(NotInverseClosedError):
        decompose_inverse_closed(q2, [F(2)])
    with pytest.raises(NotInverseClosedError):
        decompose_inverse_closed(q2, [F(1)])
    with pytest.raises(NotInverseClosedError):
        decompose_inverse_closed(q2, [F(3), F(1, 3), F(3)])


def test_decompose_inverse_closed_reconstruction(q2):
    corpus = [
        [F(1, 2), F(1, 2), F(2), F(2)],
        [F(3), F(1, 3), F(12), F(1, 12)],
        [F(1), F(1)],
        [F(1), F(1), F(4), F(1, 4)],
        [F(2), F(1, 2), F(8), F(1, 8)],
        [F(-2), F(-1, 2)],
        [F(2), F(2), F(1, 2), F(1, 2), F(8), F(1, 8)],
        [F(3), F(1, 3), F(48), F(1, 48)],
    ]
    for omega in corpus:
        result = decompose_inverse_closed(q2, omega)
        assert strongly_in_general_position(q2, result)
        assert paired_elements(q2, result) == tuple(sorted(omega))
        covers = strongly_general_paired_covers(q2, omega)
        assert covers, omega
        assert any(equivalent(q2, result, c) for c in covers)
        for c in covers:
            assert equivalent(q2, result, c)


def test_equivalent_examples(q2):
    assert equivalent(q2, [S(2, 6)], [S(2, F(1, 6))])
    assert equivalent(q2, [S(1, 1), S(1, 16)], [S(1, F(1, 16)), S(1, 1)])
    assert not equivalent(q2, [S(1, 1)], [S(2, 1)])


def test_equivalent_is_an_equivalence(q2):
    rng = random.Random(13)
    pool = [F(1), F(3), F(16), F(1, 6), F(-2)]
    family = []
    for _ in range(12):
        n = rng.randint(1, 3)
        family.append([QString(rng.randint(1, 3), rng.choice(pool)) for _ in range(n)])
    for a in family:
        assert equivalent(q2, a, a)
    for a, b in itertools.combinations(family, 2):
        assert equivalent(q2, a, b) == equivalent(q2, b, a)
    for a, b, c in itertools.combinations(family, 3):
        if equivalent(q2, a, b) and equivalent(q2, b, c):
            assert equivalent(q2, a, c)
