from itertools import combinations
from math import comb

import pytest

from jetschemes import (generic_matrix, jets_ideal, minors, parse_variables,
                        ring_make)

from expected import GENERIC_3X3_ROWS
from oracles import leibniz_det


@pytest.fixture
def generic3():
    ring = ring_make(parse_variables("x_(1,1)..x_(3,3)"))
    return generic_matrix(ring, 3, 3)


def test_generic_matrix_display(generic3):
    rows = [[str(e) for e in row] for row in generic3.entries]
    assert rows == GENERIC_3X3_ROWS
    assert str(generic3).splitlines()[0] == "| x_(1,1) x_(2,1) x_(3,1) |"


def test_generic_matrix_column():
    ring = ring_make(parse_variables("a,b"))
    M = generic_matrix(ring, 2, 1)
    assert [str(M.entry(i, 0)) for i in range(2)] == ["a", "b"]


def test_generic_matrix_needs_enough_variables():
    ring = ring_make(parse_variables("a"))
    with pytest.raises(ValueError, match="need 4"):
        generic_matrix(ring, 2, 2)


def test_minors_size1_are_entries(generic3):
    I = minors(1, generic3)
    assert list(I.generators) == [generic3.entry(i, j)
                                  for i in range(3) for j in range(3)]


def test_minors_out_of_range(generic3):
    for r in (0, 4):
        with pytest.raises(ValueError, match="out of range"):
            minors(r, generic3)


def test_determinant_term_signs_follow_permutation_parity(generic3):
    det = minors(3, generic3).generators[0]
    assert det == leibniz_det(generic3.ring, generic3.entries)
    coeffs = [c for _, c in det.items()]
    assert len(coeffs) == 6
    assert sorted(coeffs) == [-1, -1, -1, 1, 1, 1]


def test_minors_size2_match_leibniz(generic3):
    I = minors(2, generic3)
    assert len(I.generators) == 9
    expected = []
    for rowset in combinations(range(3), 2):
        for colset in combinations(range(3), 2):
            sub = [[generic3.entry(i, j) for j in colset] for i in rowset]
            expected.append(leibniz_det(generic3.ring, sub))
    assert list(I.generators) == expected


def test_generator_counts():
    ring = ring_make(parse_variables("x_(1,1)..x_(4,4)"))
    for m, n in ((2, 3), (3, 3), (4, 4)):
        M = generic_matrix(ring, m, n)
        for r in range(1, min(m, n) + 1):
            assert len(minors(r, M).generators) == comb(m, r) * comb(n, r)


def test_cofactor_matches_leibniz_up_to_4x4():
    ring = ring_make(parse_variables("x_(1,1)..x_(4,4)"))
    M = generic_matrix(ring, 4, 4)
    for size in (2, 3, 4):
        expected = []
        for rowset in combinations(range(4), size):
            for colset in combinations(range(4), size):
                sub = [[M.entry(i, j) for j in colset] for i in rowset]
                expected.append(leibniz_det(ring, sub))
        assert list(minors(size, M).generators) == expected
    det4 = minors(4, M).generators[0]
    assert len(det4._terms) == 24


def test_jets_of_minors_generator_counts():
    for m, n in ((2, 2), (2, 3), (3, 3)):
        ring = ring_make(parse_variables(f"x_(1,1)..x_({m},{n})"))
        M = generic_matrix(ring, m, n)
        for r in range(1, min(m, n) + 1):
            for s in range(3):
                ji = jets_ideal(s, minors(r, M))
                assert len(ji.generators) == (s + 1) * comb(m, r) * comb(n, r)
