import itertools

import pytest
from hypothesis import given, settings, strategies as st

from diagramalg import errors
from diagramalg.diagrams import (
    FAMILIES,
    Diagram,
    algebra_dim,
    concat,
    enumerate_basis,
    format_diagram,
    generator,
    identity_diagram,
    in_family,
    is_planar,
    normalize_family,
    parse_diagram,
    perm_diagram,
    rank,
    transpose,
)

K12_LHS = (
    "1 2' | 2 3 5 | 4 1' | 6 7 | 8 9' | 9 11 6' | 10 12 11' | 3' 5' | 4' "
    "| 7' 12' | 8' 10'"
)
K12_RHS = (
    "1 2 2' | 3 6 | 4 | 5 6' 7' | 7 8 | 9 10' 11' | 10 12 | 11 8' "
    "| 1' 3' 4' | 5' | 9' 12'"
)
K12_PRODUCT = (
    "1 4 2' | 2 3 5 | 6 7 | 8 10' 11' | 9 11 6' 7' | 10 12 8' | 1' 3' 4' "
    "| 5' | 9' 12'"
)


def test_parse_canonical_form_and_roundtrip():
    d = parse_diagram("2 1' | 1 2'", 2)
    assert d.blocks == ((1, 4), (2, 3))
    assert format_diagram(d) == "1 2' | 2 1'"
    assert parse_diagram(format_diagram(d), 2) == d


def test_parse_seven_block_example():
    d = parse_diagram(
        "1' 2 | 2' 3' | 4' 1 3 | 5' 7' | 6' 4 7 8 | 8' 6 | 5", 8
    )
    assert len(d.blocks) == 7
    assert rank(d) == 4
    assert parse_diagram(format_diagram(d), 8) == d


def test_parse_errors():
    with pytest.raises(errors.MissingVertex):
        parse_diagram("1 2 1'", 2)
    with pytest.raises(errors.DuplicateVertex):
        parse_diagram("1 1 2 | 1' 2'", 2)
    with pytest.raises(errors.IndexOutOfRange):
        parse_diagram("1 3 | 2 | 1' 2'", 2)
    with pytest.raises(errors.DiagramSyntaxError):
        parse_diagram("1 x | 2 1' 2'", 2)
    with pytest.raises(errors.DiagramSyntaxError):
        parse_diagram("1 2 | | 1' 2'", 2)


def test_diagram_constructor_validates():
    with pytest.raises(ValueError):
        Diagram(2, [(1, 2), (3,)])
    with pytest.raises(errors.IndexOutOfRange):
        Diagram(0, [])


def test_concat_identity_and_deletion():
    ident = identity_diagram(3)
    d = parse_diagram("1 2 | 3 2' | 1' | 3'", 3)
    assert concat(ident, d) == (d, 0)
    assert concat(d, ident) == (d, 0)
    p1 = generator("P", 1, 1)
    assert concat(p1, p1) == (p1, 1)


def test_concat_large_worked_product():
    d1 = parse_diagram(K12_LHS, 12)
    d2 = parse_diagram(K12_RHS, 12)
    product, deleted = concat(d1, d2)
    assert product == parse_diagram(K12_PRODUCT, 12)
    assert deleted == 2


def test_concat_rank_mismatch():
    with pytest.raises(errors.RankMismatch):
        concat(identity_diagram(2), identity_diagram(3))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_concat_is_associative(data):
    basis = enumerate_basis("partition", 2)
    a = data.draw(st.sampled_from(basis))
    b = data.draw(st.sampled_from(basis))
    c = data.draw(st.sampled_from(basis))
    ab, n1 = concat(a, b)
    ab_c, n2 = concat(ab, c)
    bc, m1 = concat(b, c)
    a_bc, m2 = concat(a, bc)
    assert ab_c == a_bc
    assert n1 + n2 == m1 + m2


def test_transpose_involution_and_antihomomorphism():
    d1 = parse_diagram(K12_LHS, 12)
    d2 = parse_diagram(K12_RHS, 12)
    assert transpose(transpose(d1)) == d1
    lhs = concat(d1, d2)
    rhs = concat(transpose(d2), transpose(d1))
    assert transpose(lhs.product) == rhs.product
    assert lhs.deleted == rhs.deleted
    assert transpose(generator("L", 1, 3)) == generator("R", 1, 3)


def test_rank_examples():
    assert rank(identity_diagram(4)) == 4
    assert rank(generator("P", 2, 3)) == 2
    assert rank(generator("E", 1, 3)) == 1
    assert rank(generator("B", 1, 3)) == 2


def test_rank_does_not_grow_under_products():
    basis = enumerate_basis("partition", 2)
    for a, b in itertools.product(basis, repeat=2):
        r = rank(concat(a, b).product)
        assert r <= min(rank(a), rank(b))


def test_planarity():
    assert is_planar(identity_diagram(3))
    assert not is_planar(generator("S", 1, 2))
    assert not is_planar(parse_diagram("1 2' | 2 1'", 2))
    assert is_planar(generator("E", 1, 2))
    assert is_planar(generator("L", 2, 3))
    assert is_planar(parse_diagram("1 2 | 1' 2' | 3 3'", 3))
    # a singleton separates nothing, so {1,3} may arc over it
    assert is_planar(parse_diagram("1 3 | 2 | 1' 2' 3'", 3))
    assert not is_planar(parse_diagram("1 3 | 2 2' | 1' 3'", 3))
    assert not is_planar(parse_diagram("1 3 1' | 2 2' | 3'", 3))


def test_family_membership():
    s1 = generator("S", 1, 3)
    e1 = generator("E", 1, 3)
    p1 = generator("P", 1, 3)
    assert in_family(s1, "partition")
    assert in_family(s1, "brauer")
    assert in_family(s1, "symmetricgroup")
    assert not in_family(s1, "temperleylieb")
    assert in_family(e1, "temperleylieb")
    assert not in_family(e1, "rook")
    assert in_family(p1, "rook")
    assert in_family(p1, "motzkin")
    assert not in_family(p1, "brauer")
    wide = parse_diagram("1 2 3 1' 2' 3'", 3)
    assert in_family(wide, "partition")
    assert in_family(wide, "planarpartition")
    assert not in_family(wide, "rookbrauer")


def test_family_normalization():
    assert normalize_family("temperley-lieb") == "TemperleyLieb"
    assert normalize_family("TL") == "TemperleyLieb"
    assert normalize_family("Brauer") == "Brauer"
    with pytest.raises(ValueError):
        normalize_family("frobenius")


def test_generators():
    assert generator("S", 1, 2) == parse_diagram("1 2' | 2 1'", 2)
    assert generator("P", 2, 2) == parse_diagram("1 1' | 2 | 2'", 2)
    assert generator("B", 1, 2) == parse_diagram("1 2 1' 2'", 2)
    assert generator("E", 1, 2) == parse_diagram("1 2 | 1' 2'", 2)
    assert generator("L", 1, 2) == parse_diagram("1 2' | 2 | 1'", 2)
    assert generator("R", 1, 2) == parse_diagram("2 1' | 1 | 2'", 2)
    with pytest.raises(errors.IndexOutOfRange):
        generator("S", 3, 3)
    with pytest.raises(errors.IndexOutOfRange):
        generator("P", 4, 3)
    with pytest.raises(ValueError):
        generator("Q", 1, 3)


def test_generator_identities():
    k = 4
    for i in range(1, k):
        s = generator("S", i, k)
        p_i = generator("P", i, k)
        p_next = generator("P", i + 1, k)
        b = generator("B", i, k)
        e = generator("E", i, k)
        left = generator("L", i, k)
        right = generator("R", i, k)
        assert concat(s, s) == (identity_diagram(k), 0)
        # e_i = b_i p_i p_{i+1} b_i
        chain = concat(b, p_i).product
        chain = concat(chain, p_next).product
        chain = concat(chain, b).product
        assert chain == e
        assert concat(s, p_i).product == left
        assert concat(p_i, s).product == right
        assert transpose(left) == right


def test_perm_diagram_composition():
    for a in itertools.permutations((1, 2, 3)):
        for b in itertools.permutations((1, 2, 3)):
            ab = tuple(a[b[i] - 1] for i in range(3))
            got = concat(perm_diagram(a), perm_diagram(b))
            assert got == (perm_diagram(ab), 0)
    with pytest.raises(ValueError):
        perm_diagram((1, 1, 3))


EXPECTED_COUNTS = {
    "partition": [2, 15, 203, 4140],
    "brauer": [1, 3, 15, 105],
    "rookbrauer": [2, 10, 76, 764],
    "rook": [2, 7, 34, 209],
    "temperleylieb": [1, 2, 5, 14],
    "motzkin": [2, 9, 51, 323],
    "planarrook": [2, 6, 20, 70],
    "planarpartition": [2, 14, 132, 1430],
    "symmetricgroup": [1, 2, 6, 24],
}


def test_enumerate_basis_counts():
    for family, counts in EXPECTED_COUNTS.items():
        for k, expected in enumerate(counts, start=1):
            basis = enumerate_basis(family, k)
            assert len(basis) == expected, (family, k)
            assert len(set(basis)) == expected
            assert basis == sorted(basis)
            assert all(in_family(d, family) for d in basis)
            assert algebra_dim(family, k) == expected


def test_enumerate_basis_matches_filtered_partition_basis():
    for family in FAMILIES:
        for k in (1, 2, 3):
            full = enumerate_basis("partition", k)
            filtered = [d for d in full if in_family(d, family)]
            assert enumerate_basis(family, k) == filtered, (family, k)


def test_enumerate_basis_closed_under_multiplication():
    for family in ("brauer", "temperleylieb", "motzkin", "rook"):
        basis = set(enumerate_basis(family, 2))
        for a, b in itertools.product(sorted(basis), repeat=2):
            assert concat(a, b).product in basis


def test_enumeration_caps(monkeypatch):
    with pytest.raises(errors.CapExceeded):
        enumerate_basis("partition", 6)
    with pytest.raises(errors.CapExceeded):
        enumerate_basis("brauer", 8)
    monkeypatch.setenv("DIAGRAMALG_CAP", "8")
    assert len(enumerate_basis("temperleylieb", 8)) == 1430
    monkeypatch.setenv("DIAGRAMALG_CAP", "2")
    with pytest.raises(errors.CapExceeded):
        enumerate_basis("temperleylieb", 3)
