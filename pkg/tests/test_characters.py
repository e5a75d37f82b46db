import json

import pytest

from diagramalg import errors
from diagramalg.characters import (
    REFERENCE_TABLES,
    CharacterTable,
    character_oracle,
    character_table,
    class_diagram,
    class_labels,
    f_coeff,
    f_coeff_planar,
    fixed_points,
    format_partition,
    gamma_diagram,
    gamma_perm,
    irr_character,
    table_determinant_check,
)
from diagramalg.coeff import Element, LaurentPoly
from diagramalg.diagrams import (
    BRAUER,
    MOTZKIN,
    PARTITION,
    PLANAR_ROOK,
    ROOK,
    ROOK_BRAUER,
    SYMMETRIC_GROUP,
    TEMPERLEY_LIEB,
    parse_diagram,
    perm_diagram,
)
from diagramalg.irreps import SymmetricMDiagram
from diagramalg.partitions import lambda_star_labels
from diagramalg.symrep import cycle_type, sym_character

GAMMA_18 = (
    "1 2' | 2 3' | 3 4' | 4 5' | 5 6' | 6 1'"
    " | 7 8' | 8 9' | 9 10' | 10 11' | 11 7'"
    " | 12 13' | 13 12' | 14 14'"
)

S2_TABLE = [[1, 1], [-1, 1]]
S3_TABLE = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
S4_TABLE = [
    [1, 1, 1, 1, 1],
    [-1, 0, -1, 1, 3],
    [0, -1, 2, 0, 2],
    [1, 0, -1, -1, 3],
    [-1, 1, 1, -1, 1],
]

F_P3 = [
    [1, 1, 2, 2, 2, 3, 5],
    [0, 1, 1, 3, 1, 4, 10],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 1, 6],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
]
F_RB3 = [
    [1, 1, 2, 2, 1, 2, 4],
    [0, 1, 0, 2, 0, 2, 6],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 3],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
]
F_R3 = [
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 2, 0, 1, 3],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 3],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
]
F_B4 = [
    [1, 1, 1, 1, 0, 3, 1, 3],
    [0, 1, 0, 0, 0, 2, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 6],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]
F_FROZEN = {
    (PARTITION, 3): F_P3,
    (ROOK_BRAUER, 3): F_RB3,
    (ROOK, 3): F_R3,
    (BRAUER, 4): F_B4,
}


def block_diag(*blocks):
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[offset + i][offset + j] = v
        offset += len(b)
    return out


def matmul(a, b):
    return [
        [sum(a[i][l] * b[l][j] for l in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def test_gamma_perm():
    assert gamma_perm((6, 5, 2, 1)) == (
        6, 1, 2, 3, 4, 5, 11, 7, 8, 9, 10, 13, 12, 14,
    )
    assert gamma_perm((3, 2)) == (3, 1, 2, 5, 4)
    assert gamma_perm((1, 1)) == (1, 2)
    for kappa in ((4,), (3, 2), (2, 2, 1), (1, 1, 1)):
        assert cycle_type(gamma_perm(kappa)) == kappa
        assert gamma_diagram(kappa) == perm_diagram(gamma_perm(kappa))


def test_class_diagram_partition_18():
    elem = class_diagram("Partition", 18, (6, 5, 2, 1))
    tail = " | 15 | 16 | 17 | 18 | 15' | 16' | 17' | 18'"
    expected = parse_diagram(GAMMA_18 + tail, 18)
    assert elem == Element(
        18, PARTITION, {expected: LaurentPoly.monomial(-4)}
    )


def test_class_diagram_brauer_18():
    elem = class_diagram("Brauer", 18, (6, 5, 2, 1))
    tail = " | 15 16 | 17 18 | 15' 16' | 17' 18'"
    expected = parse_diagram(GAMMA_18 + tail, 18)
    assert elem == Element(
        18, BRAUER, {expected: LaurentPoly.monomial(-2)}
    )


def test_class_diagram_symmetric_group():
    elem = class_diagram("SymmetricGroup", 3, (2, 1))
    assert elem == Element(
        3, SYMMETRIC_GROUP, {gamma_diagram((2, 1)): LaurentPoly.const(1)}
    )


def test_class_diagram_planar_tails():
    elem = class_diagram("TemperleyLieb", 4, (1, 1))
    expected = parse_diagram("1 1' | 2 2' | 3 4 | 3' 4'", 4)
    assert elem == Element(
        4, TEMPERLEY_LIEB, {expected: LaurentPoly.monomial(-1)}
    )
    elem = class_diagram("Motzkin", 4, (1, 1))
    expected = parse_diagram("1 1' | 2 2' | 3 | 4 | 3' | 4'", 4)
    assert elem == Element(4, MOTZKIN, {expected: LaurentPoly.monomial(-2)})


def test_class_diagram_invalid_labels():
    with pytest.raises(errors.InvalidClassLabel):
        class_diagram("Partition", 3, (4,))
    with pytest.raises(errors.InvalidClassLabel):
        class_diagram("TemperleyLieb", 4, (2, 1))
    with pytest.raises(errors.InvalidClassLabel):
        class_diagram("Brauer", 4, (1,))
    with pytest.raises(errors.InvalidClassLabel):
        class_diagram("SymmetricGroup", 4, (2, 1))
    with pytest.raises(errors.InvalidClassLabel):
        class_diagram("Brauer", 4, (2,), s=2)
    with pytest.raises(errors.FamilyUnsupported):
        class_diagram("PlanarPartition", 3, (1, 1, 1))


def test_fixed_points_worked_example():
    found = fixed_points("Partition", 3, 1, (2, 1))
    assert set(found) == {(1,)}
    expected = {
        SymmetricMDiagram(3, [(1,), (2,), (3,)], [(3,)]),
        SymmetricMDiagram(3, [(1, 2, 3)], [(1, 2, 3)]),
        SymmetricMDiagram(3, [(1, 2), (3,)], [(1, 2)]),
        SymmetricMDiagram(3, [(1, 2), (3,)], [(3,)]),
    }
    assert set(found[(1,)]) == expected
    assert len(found[(1,)]) == 4
    rank0 = fixed_points("Partition", 3, 0, (2, 1))
    assert len(rank0[()]) == f_coeff("Partition", (2, 1), ()) == 3


def test_fixed_points_errors():
    with pytest.raises(errors.CapExceeded):
        fixed_points("Partition", 6, 0, (6,))
    with pytest.raises(errors.InvalidClassLabel):
        fixed_points("Partition", 3, 1, (2,))
    with pytest.raises(errors.InvalidRank):
        fixed_points("Brauer", 4, 1, (2, 2))
    with pytest.raises(errors.InvalidClassLabel):
        fixed_points("TemperleyLieb", 4, 2, (2, 1, 1))
    with pytest.raises(errors.FamilyUnsupported):
        fixed_points("PlanarPartition", 3, 0, (1, 1, 1))


def test_f_coeff_examples():
    assert f_coeff("Partition", (2, 1), (1,)) == 4
    assert f_coeff("Partition", (1, 1, 1), (1, 1)) == 6
    assert f_coeff("Brauer", (1, 1, 1, 1), (1, 1)) == 6
    assert f_coeff("Rook", (2, 1), (1,)) == 1
    assert f_coeff("SymmetricGroup", (2, 1), (2, 1)) == 1
    assert f_coeff("SymmetricGroup", (2, 1), (1, 1, 1)) == 0
    assert f_coeff("TemperleyLieb", (1, 1, 1, 1), (1, 1)) == 3
    assert f_coeff("Motzkin", (1, 1, 1), (1,)) == 5
    assert f_coeff("PlanarRook", (1, 1, 1), (1, 1)) == 3
    assert f_coeff("TemperleyLieb", (1, 1, 1), (2, 1)) == 0
    assert f_coeff_planar("Motzkin", 3, 1) == 5
    with pytest.raises(errors.InvalidClassLabel):
        f_coeff("Motzkin", (2, 1), (1,))
    with pytest.raises(errors.FamilyUnsupported):
        f_coeff("PlanarPartition", (1,), (1,))


def test_published_tables():
    for (family, k), ref in REFERENCE_TABLES.items():
        table = character_table(family, k)
        assert table.row_labels == ref["rows"]
        assert table.col_labels == ref["cols"]
        assert table.values == ref["values"]
        assert table == CharacterTable(
            family, k, ref["rows"], ref["cols"], ref["values"]
        )


def test_f_block_matches_published():
    for (family, k), frozen in F_FROZEN.items():
        fac = character_table(family, k).factor()
        assert fac.f_block == frozen


def test_s_block_is_symmetric_group_direct_sum():
    fac3 = character_table(PARTITION, 3).factor()
    assert fac3.s_block == block_diag([[1]], [[1]], S2_TABLE, S3_TABLE)
    assert character_table(ROOK, 3).factor().s_block == fac3.s_block
    assert character_table(ROOK_BRAUER, 3).factor().s_block == fac3.s_block
    fac4 = character_table(BRAUER, 4).factor()
    assert fac4.s_block == block_diag([[1]], S2_TABLE, S4_TABLE)


def test_table_factorization_product():
    for family, k in list(F_FROZEN) + [
        (TEMPERLEY_LIEB, 4),
        (MOTZKIN, 3),
        (PLANAR_ROOK, 3),
        (SYMMETRIC_GROUP, 4),
    ]:
        table = character_table(family, k)
        fac = table.factor()
        assert matmul(fac.s_block, fac.f_block) == table.values


def test_f_block_unitriangular():
    for family, k in list(F_FROZEN) + [(TEMPERLEY_LIEB, 4), (MOTZKIN, 3)]:
        table = character_table(family, k)
        f = table.factor().f_block
        size = len(f)
        assert all(f[i][i] == 1 for i in range(size))
        assert all(
            f[i][j] == 0 for i in range(size) for j in range(i)
        )
        ftable = CharacterTable(
            family, k, table.row_labels, table.col_labels, f
        )
        assert ftable.determinant() == 1


def test_determinants():
    cases = {
        (PARTITION, 3): 12,
        (BRAUER, 4): 192,
        (BRAUER, 2): 2,
        (SYMMETRIC_GROUP, 4): 96,
        (ROOK, 3): 12,
        (TEMPERLEY_LIEB, 4): 1,
        (MOTZKIN, 3): 1,
        (PLANAR_ROOK, 4): 1,
    }
    for (family, k), expected in cases.items():
        check = table_determinant_check(family, k)
        assert check.ok, (family, k, check)
        assert check.determinant == expected


def test_irr_character_values():
    assert irr_character("Partition", 3, (), (1, 1, 1)) == 5
    assert irr_character("Partition", 3, (1,), (2, 1)) == 4
    assert irr_character("Brauer", 4, (2, 1, 1), (4,)) == 1
    assert irr_character("Partition", 3, (2, 1), ()) == 0
    assert irr_character("Partition", 3, (1, 1, 1), (2,)) == 0
    assert irr_character("Partition", 5, (2,), (2, 1)) == irr_character(
        "Partition", 3, (2,), (2, 1)
    )
    for kappa in ((3,), (2, 1), (1, 1, 1)):
        assert irr_character("Partition", 3, (2, 1), kappa) == sym_character(
            (2, 1), kappa
        )
        assert irr_character(
            "SymmetricGroup", 3, (2, 1), kappa
        ) == sym_character((2, 1), kappa)
    with pytest.raises(errors.LabelNotInFamily):
        irr_character("TemperleyLieb", 4, (2, 1), (1, 1, 1))
    with pytest.raises(errors.InvalidClassLabel):
        irr_character("Partition", 3, (1,), (2, 1), s=2)


def test_class_labels_order():
    assert class_labels("Partition", 3) == [
        (), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1),
    ]
    assert class_labels("Brauer", 4) == REFERENCE_TABLES[(BRAUER, 4)]["cols"]
    assert class_labels("TemperleyLieb", 4) == [(), (1, 1), (1, 1, 1, 1)]
    assert class_labels("SymmetricGroup", 3) == [(3,), (2, 1), (1, 1, 1)]
    with pytest.raises(errors.FamilyUnsupported):
        class_labels("PlanarPartition", 3)


def test_character_oracle_matches_closed_form():
    cases = (
        (PARTITION, 2),
        (BRAUER, 3),
        (ROOK_BRAUER, 2),
        (ROOK, 2),
        (TEMPERLEY_LIEB, 3),
        (MOTZKIN, 2),
        (PLANAR_ROOK, 2),
        (SYMMETRIC_GROUP, 3),
    )
    for family, k in cases:
        for lam in lambda_star_labels(family, k):
            for kappa in class_labels(family, k):
                trace = character_oracle(family, k, lam, kappa)
                value = irr_character(family, k, lam, kappa)
                assert trace == LaurentPoly.const(value), (
                    family, k, lam, kappa,
                )
    with pytest.raises(errors.CapExceeded):
        character_oracle("Partition", 6, (1,), (1,) * 6)


def test_table_csv_golden():
    table = character_table("Brauer", 2)
    assert table.to_csv() == (
        "lambda*/kappa,[],[2],[1,1]\n"
        "[],1,1,1\n"
        "[2],0,1,1\n"
        "[1,1],0,-1,1\n"
    )


def test_table_json_golden():
    table = character_table("Brauer", 2)
    payload = json.loads(table.to_json(factor=True))
    assert payload["family"] == "Brauer"
    assert payload["k"] == 2
    assert payload["rows"] == [[], [2], [1, 1]]
    assert payload["cols"] == [[], [2], [1, 1]]
    assert payload["values"] == [[1, 1, 1], [0, 1, 1], [0, -1, 1]]
    assert payload["s_block"] == [[1, 0, 0], [0, 1, 1], [0, -1, 1]]
    assert payload["f_block"] == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]


def test_table_text_layout():
    text = character_table("Brauer", 2).to_text()
    lines = text.splitlines()
    assert lines[0].split() == ["lambda*\\kappa", "[]", "[2]", "[1,1]"]
    assert lines[1].split() == ["[]", "1", "1", "1"]
    assert lines[3].split() == ["[1,1]", "0", "-1", "1"]
    assert format_partition((2, 1)) == "[2,1]"
    assert format_partition(()) == "[]"
