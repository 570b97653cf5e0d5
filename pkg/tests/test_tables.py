"""Catalog integrity, row builders and the verification driver."""

import pytest

from sdcodes import tables
from sdcodes.constructions import binary_generator
from sdcodes.errors import UnknownTable
from sdcodes.rings import Alphabet
from sdcodes.tables import (
    CHECKSUMS,
    TABLES,
    Expected,
    build_example_bordered,
    build_example_extension,
    build_row,
    check_table_integrity,
    expected_row,
    table_checksum,
    verify_row,
    verify_table,
)
from sdcodes.weightdist import Family

ROW_COUNTS = {1: 10, 2: 22, 3: 7, 4: 10, 5: 5, 6: 4, 7: 16}


def test_row_counts():
    assert {t: len(rows) for t, rows in TABLES.items()} == ROW_COUNTS


@pytest.mark.parametrize("table_id", sorted(TABLES))
def test_checksums_match_data(table_id):
    assert table_checksum(table_id) == CHECKSUMS[table_id]
    check_table_integrity(table_id)


def test_tampered_data_is_caught(monkeypatch):
    rows = list(TABLES[1])
    rows[0] = (rows[0][0], rows[0][1], rows[0][2], 999)
    monkeypatch.setitem(TABLES, 1, tuple(rows))
    with pytest.raises(UnknownTable):
        check_table_integrity(1)
    with pytest.raises(UnknownTable):
        build_row(1, 1)


def test_unknown_table_and_row_errors():
    with pytest.raises(UnknownTable):
        table_checksum(8)
    with pytest.raises(UnknownTable):
        build_row(1, 0)
    with pytest.raises(UnknownTable):
        build_row(1, 11)
    with pytest.raises(UnknownTable):
        verify_table(8)
    with pytest.raises(UnknownTable):
        verify_table(1, [3, 99])
    with pytest.raises(UnknownTable):
        expected_row(9, 1)


def test_build_row_shapes():
    # every builder returns a record that already passed its gate; spot
    # check alphabet and binary size per table
    shapes = {
        1: (Alphabet.F2, 64),
        2: (Alphabet.R2, 64),
        3: (Alphabet.F2, 64),
        4: (Alphabet.F2, 66),
        5: (Alphabet.F2, 66),
        6: (Alphabet.F2, 68),
        7: (Alphabet.R1, 68),
    }
    for table_id, (alphabet, n) in shapes.items():
        record = build_row(table_id, 1)
        assert record.alphabet is alphabet
        g = binary_generator(record)
        assert (g.nrows, g.cols) == (n // 2, n)


def test_table4_x_padding():
    record = build_row(4, 1)
    listed = TABLES[4][0][1]
    assert len(record.ext_x) == 64
    assert record.ext_x.values[:32] == tuple(int(ch) for ch in listed)
    assert record.ext_x.values[32:] == (1,) * 32


def test_table7_chain():
    record = build_row(7, 1)
    assert record.construction == "extension"
    assert record.alphabet is Alphabet.R1
    assert record.parent_id is not None
    assert len(record.ext_x) == 32


def test_expected_row_wiring():
    assert expected_row(1, 1) == Expected(64, 12, Family.W64_2, 0)
    assert expected_row(2, 22) == Expected(64, 12, Family.W64_2, 80)
    assert expected_row(3, 7) == Expected(64, 12, Family.W64_1, 74)
    assert expected_row(4, 10) == Expected(66, 12, Family.W66_3, 92)
    assert expected_row(5, 1) == Expected(66, 12, Family.W66_3, 46)
    assert expected_row(6, 4) == Expected(68, 12, Family.W68_2, 255, 0)
    assert expected_row(7, 16) == Expected(68, 12, Family.W68_2, 194, 3)


def test_example_builders():
    bordered = build_example_bordered()
    assert bordered.alphabet is Alphabet.R1
    assert bordered.construction == "bordered-four-circulant"
    assert binary_generator(bordered).cols == 64

    ext = build_example_extension(0)
    assert ext.alphabet is Alphabet.R1
    assert binary_generator(ext).cols == 68


def test_verify_row_end_to_end():
    result = verify_row(1, 1)
    assert result.ok
    assert result.problems == ()
    assert result.profile.complete
    message = result.message()
    assert message.startswith("PASS table=1 row=1 label=B64,1")
    assert "n=64 d=12 family=W64_2 beta=0" in message


def test_verify_table_logs_each_row(monkeypatch):
    seen = []

    def fake_verify(table_id, index, *, workers=1):
        seen.append((table_id, index))
        return tables.RowResult(
            table_id, index, TABLES[table_id][index - 1][0], True,
            expected_row(table_id, index), None, None, (),
        )

    monkeypatch.setattr(tables, "verify_row", fake_verify)
    lines = []
    results = verify_table(1, [2, 5], log=lines.append)
    assert seen == [(1, 2), (1, 5)]
    assert lines == [r.message() for r in results]
    assert lines[0] == "PASS table=1 row=2 label=B64,2"


def test_failed_row_reports_problems(monkeypatch):
    monkeypatch.setattr(
        tables, "build_row", lambda t, i: (_ for _ in ()).throw(ValueError("boom"))
    )
    result = tables.verify_row(1, 1)
    assert not result.ok
    assert result.problems == ("ValueError: boom",)
    assert result.message().startswith("FAIL table=1 row=1 label=B64,1")
