from math import comb

import pytest

from sealspace.cube import FaceForm, FaceSet, enumerate_faces, parse_face, proper_faces, xi, xi_perp
from sealspace.errors import IndexOutOfRange, ParseError


def test_xi_examples():
    assert xi(FaceSet(3, {1, -3})) == [1, -3]
    assert xi(FaceSet(3, set())) == []
    assert xi(FaceForm(3, (1, 2, 3))) == [1, 2, 3]


def test_xi_perp_examples():
    assert sorted(xi_perp(FaceSet(2, {1}))) == [-2, 2]
    assert xi_perp(FaceSet(4, {1, -2, 3, 4})) == []
    assert sorted(xi_perp(FaceSet(3, {2}))) == [-3, -1, 1, 3]


def test_enumerate_faces_examples():
    assert len(enumerate_faces(2, 1)) == 4
    assert len(enumerate_faces(3, 3)) == 8
    assert len(enumerate_faces(3, 2)) == 12


@pytest.mark.parametrize("n", range(1, 6))
def test_face_counts(n):
    for s in range(n + 1):
        faces = enumerate_faces(n, s)
        assert len(faces) == len(set(faces)) == comb(n, s) * 2 ** s
    assert len(proper_faces(n)) == 3 ** n - 1


@pytest.mark.parametrize("n", range(1, 5))
def test_xi_and_xi_perp_partition_coordinates(n):
    for f in proper_faces(n):
        assert len(xi(f)) + len(xi_perp(f)) // 2 == n
        assert {abs(j) for j in xi(f)}.isdisjoint(abs(j) for j in xi_perp(f))


def test_face_form_versus_face_set():
    a, b = FaceForm(3, (1, -3)), FaceForm(3, (-3, 1))
    assert a != b
    assert a.face_set() == b.face_set()
    assert a.dim == 1 and a.codim == 2


@pytest.mark.parametrize("indices", [(1, -1), (4,), (0,)])
def test_invalid_faces(indices):
    with pytest.raises((ValueError, IndexOutOfRange)):
        FaceForm(3, indices)


def test_parse_face():
    assert parse_face("1,-3", 3) == FaceForm(3, (1, -3))
    assert parse_face("", 2) == FaceForm(2, ())
    with pytest.raises(ParseError):
        parse_face("1,x", 3)
    with pytest.raises(ParseError):
        parse_face("1,-1", 3)


def test_lexicographic_order():
    faces = sorted(enumerate_faces(2, 1))
    assert [f.sorted_indices() for f in faces] == [(1,), (-1,), (2,), (-2,)]
