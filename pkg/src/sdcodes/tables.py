"""Embedded catalog of published generator data, with verification.

Each table row carries the defining data of one code and its expected
classification; ``verify_table`` rebuilds every requested row from
scratch, enumerates its full weight distribution and compares distance,
family and parameters against the catalog.  The embedded data is
guarded by SHA-256 checksums so silent edits are caught at use time.

Catalog shapes:

* table 1: modified four-circulant over F2, block order 16, family
  W64_2.
* table 2: modified four-circulant over the 16-element ring with twist
  lambda, block order 4, family W64_2 of the Gray image.
* table 3: bordered four-circulant over F2, block order 15, family
  W64_1.
* tables 4 and 5: extensions of table-3 codes by a binary X (table 4
  lists the first 32 bits, the rest are ones; table 5 lists all 64),
  family W66_3.
* table 6: modified four-circulant over F2, block order 17, family
  W68_2 with gamma 0.
* table 7: extensions over F2+uF2 of phi_u projections of table-2
  codes, family W68_2 with gamma 3 of the binary image.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .codec import parse_element, parse_row
from .constructions import (
    CodeRecord,
    analyze_record,
    bordered_four_circulant,
    extend,
    modified_four_circulant,
    phi_u_record,
)
from .errors import UnknownTable
from .rings import Alphabet, one
from .weightdist import Family, WeightProfile

TABLE_64_F2 = (
    ("B64,1", "0101110001100111", "1011010101010100", 0),
    ("B64,2", "1010101011110101", "0110110001001001", 8),
    ("B64,3", "0111000010111110", "0011001111010010", 16),
    ("B64,4", "1011001001100101", "0110100101000000", 24),
    ("B64,5", "1100110010100010", "1110010010111110", 32),
    ("B64,6", "1000111110101000", "0110100011011101", 40),
    ("B64,7", "0100010000111100", "1011101010000001", 48),
    ("B64,8", "1111011010000100", "1101010101100011", 56),
    ("B64,9", "1000110110110001", "1011001001101011", 64),
    ("B64,10", "0101110111001111", "0001000111000110", 72),
)

TABLE_64_R2 = (
    ("D64,1", "5", "65AE", "D7D5", 0),
    ("D64,2", "B", "163B", "1874", 1),
    ("D64,3", "7", "979D", "5CAA", 4),
    ("D64,4", "7", "5239", "7438", 5),
    ("D64,5", "7", "6FAB", "C931", 8),
    ("D64,6", "D", "9EDB", "FA50", 9),
    ("D64,7", "7", "49F9", "78B6", 12),
    ("D64,8", "D", "FE33", "D2B4", 13),
    ("D64,9", "3", "335B", "8429", 16),
    ("D64,10", "B", "D479", "D6B0", 17),
    ("D64,11", "D", "379B", "32EE", 20),
    ("D64,12", "7", "E704", "B357", 21),
    ("D64,13", "7", "C119", "52F8", 24),
    ("D64,14", "7", "8B62", "11DF", 25),
    ("D64,15", "B", "CD03", "DE75", 28),
    ("D64,16", "B", "67C4", "FD9D", 29),
    ("D64,17", "3", "5414", "7B76", 32),
    ("D64,18", "D", "8542", "1B51", 33),
    ("D64,19", "B", "99C3", "81AF", 36),
    ("D64,20", "5", "EAD6", "F3BD", 48),
    ("D64,21", "D", "6903", "A931", 64),
    ("D64,22", "5", "A9D1", "F85E", 80),
)

TABLE_64_BORDERED = (
    ("C64,1", "001101000000011", "011000010011011", 14),
    ("C64,2", "010001101111110", "111111100011110", 14),
    ("C64,3", "001101111000010", "110010110110011", 29),
    ("C64,4", "111010001101101", "100101000001111", 44),
    ("C64,5", "101000110101111", "000000000011100", 44),
    ("C64,6", "101101011101111", "001000001110001", 59),
    ("C64,7", "011000100111111", "011000000000010", 74),
)

# X lists the first 32 coordinates; the remaining 32 are ones.
TABLE_66_SHORT_X = (
    ("C64,5", "11001101110010001101111011101100", 52),
    ("C64,4", "11110101011010111010110100000001", 61),
    ("C64,5", "00100101011000001000111010101100", 64),
    ("C64,7", "11110100100100011110100101100101", 81),
    ("C64,7", "11110011010001000000111101011110", 83),
    ("C64,7", "00101011111010100110001001011110", 84),
    ("C64,7", "00101111000111010000101010111101", 85),
    ("C64,7", "11001000011100000101010011000110", 87),
    ("C64,7", "11111000010000100011011010100101", 90),
    ("C64,7", "01010110000100110011000110000011", 92),
)

TABLE_66_FULL_X = (
    ("C64,3", "1100110010100000010111010111000010110000110011010000111001101100", 46),
    ("C64,5", "0010001010110101110110100110011000110110101100100000110000111101", 53),
    ("C64,7", "0000101100110000000001100100101110100001010010101111110011001001", 82),
    ("C64,7", "0011000101011100001001101011011000101100110100101110000011100010", 86),
    ("C64,7", "1110110000111111101101111011001110101101010101100100001101111001", 88),
)

TABLE_68_F2 = (
    ("C68,1", "01111110101111011", "11001000101001011", 17),
    ("C68,2", "11110001011001010", "11010100001011010", 187),
    ("C68,3", "00110001101111011", "01000010000000100", 221),
    ("C68,4", "11010010110010011", "10100001001111100", 255),
)

TABLE_68_R1_EXT = (
    ("D64,10", "1", "1u1001030u3103111u3130u01u0u0331", 103),
    ("D64,10", "3", "303u0101uu3301113u31300u1000u113", 105),
    ("D64,10", "1", "3u1u03u3u03303331u313u0u30uuu331", 115),
    ("D64,10", "1", "3010u1u10u1103313u111u0u3uu00113", 119),
    ("D64,10", "3", "301001030u1303131u31100u3u000133", 121),
    ("D64,10", "3", "uuu101u303u3u11uu3u1003uu1u1001u", 124),
    ("D64,10", "1", "1u1uu3030u11u3133u3330uu3u00u333", 125),
    ("D64,10", "3", "1u1003u10u33u313303330u01000u111", 129),
    ("D64,10", "3", "1u10u1030u13u31330331u001uu0u111", 131),
    ("D64,10", "3", "1u303011uu01000u10303133u0u10u33", 134),
    ("D64,10", "1", "000101u10103u110u1030u30u101uu30", 150),
    ("D64,22", "1", "3u000103031u00u30uu03u30u0uu11u1", 178),
    ("D64,22", "1", "3u0uu3u3u13uuuu3uuuu1u3uuu0031u3", 182),
    ("D64,22", "3", "u1100u001uu0uuu311331u101u03111u", 184),
    ("D64,22", "1", "1uu00301u33uuu03u00u3u1u0u0031u3", 190),
    ("D64,22", "1", "30000101013u00u100003u100u001303", 194),
)

# Bordered construction over F2+uF2 with block order 7; the binary image
# is a doubly-even self-dual [64, 32, 12] code.
EXAMPLE_BORDERED_R1 = ("u011u1u", "0001uuu", "1", "u")

# Extensions over F2+uF2 of the phi_u projection of D64,21; the binary
# images sit in W68_2 with gamma 0.
EXAMPLE_R1_EXTENSIONS = (
    ("D64,21", "3", "3u00001u303u1100u110131u130u0033", 155),
    ("D64,21", "1", "1uu00u10303013u0u11u331u11u0uu11", 157),
)

TABLES: dict[int, tuple] = {
    1: TABLE_64_F2,
    2: TABLE_64_R2,
    3: TABLE_64_BORDERED,
    4: TABLE_66_SHORT_X,
    5: TABLE_66_FULL_X,
    6: TABLE_68_F2,
    7: TABLE_68_R1_EXT,
}

CHECKSUMS = {
    1: "c72ea40e0fc4a473b18e0ea467e8ec0526bd5ec780403b2d0e7200f31ebfa368",
    2: "d20d0cb6b68fae99557149fcfdbec57bd4e26358df8854a81858ee1cde1467ed",
    3: "9ab4d26ac889bad409aab9b5d9f11e629750cce54c05a3d726236817d59a8694",
    4: "c01bdeb1027bacfd1265d3c4dde8a385515adf60b83087ef2baee21456655fee",
    5: "b26b7a4144669ab528d682d791e94144955cc1b209fd7ae28901a3fd052b85b2",
    6: "976a3f4ac06f7e28058f86e18d1031bb2d914da44a83930f3bd4b740a7536c46",
    7: "3d9e0d4c688139ff25b9c3f843688e502574dc494815f10667063efb3cb79189",
}


def table_checksum(table_id: int) -> str:
    if table_id not in TABLES:
        raise UnknownTable(f"no table {table_id}")
    payload = json.dumps(TABLES[table_id], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def check_table_integrity(table_id: int) -> None:
    digest = table_checksum(table_id)
    if digest != CHECKSUMS[table_id]:
        raise UnknownTable(
            f"table {table_id} data does not match its recorded checksum"
        )


def _row_by_label(table: Sequence[tuple], label: str) -> tuple:
    for row in table:
        if row[0] == label:
            return row
    raise UnknownTable(f"no row labeled {label}")


def build_table2_parent(label: str) -> CodeRecord:
    _, lam, r_a, r_b, _ = _row_by_label(TABLE_64_R2, label)
    r2 = Alphabet.R2
    return modified_four_circulant(
        parse_row(r_a, r2), parse_row(r_b, r2), parse_element(lam, r2)
    )


def build_table3_parent(label: str) -> CodeRecord:
    _, r_a, r_b, _ = _row_by_label(TABLE_64_BORDERED, label)
    f2 = Alphabet.F2
    return bordered_four_circulant(
        parse_row(r_a, f2),
        parse_row(r_b, f2),
        one(f2),
        parse_element("0", f2),
    )


def build_row(table_id: int, index: int) -> CodeRecord:
    """Rebuild row ``index`` (1-based) of a table from its defining data."""
    check_table_integrity(table_id)
    table = TABLES[table_id]
    if not 1 <= index <= len(table):
        raise UnknownTable(f"table {table_id} has no row {index}")
    row = table[index - 1]
    f2 = Alphabet.F2
    r1 = Alphabet.R1
    if table_id == 1:
        _, r_a, r_b, _ = row
        return modified_four_circulant(parse_row(r_a, f2), parse_row(r_b, f2), one(f2))
    if table_id == 2:
        return build_table2_parent(row[0])
    if table_id == 3:
        return build_table3_parent(row[0])
    if table_id in (4, 5):
        parent_label, x_text, _ = row
        if table_id == 4:
            x_text = x_text + "1" * 32
        parent = build_table3_parent(parent_label)
        return extend(parent, parse_row(x_text, f2), one(f2))
    if table_id == 6:
        _, r_a, r_b, _ = row
        return modified_four_circulant(parse_row(r_a, f2), parse_row(r_b, f2), one(f2))
    parent_label, c_text, x_text, _ = row
    projected = phi_u_record(build_table2_parent(parent_label))
    return extend(projected, parse_row(x_text, r1), parse_element(c_text, r1))


def build_example_bordered() -> CodeRecord:
    r_a, r_b, x, y = EXAMPLE_BORDERED_R1
    r1 = Alphabet.R1
    return bordered_four_circulant(
        parse_row(r_a, r1),
        parse_row(r_b, r1),
        parse_element(x, r1),
        parse_element(y, r1),
    )


def build_example_extension(index: int) -> CodeRecord:
    parent_label, c_text, x_text, _ = EXAMPLE_R1_EXTENSIONS[index]
    r1 = Alphabet.R1
    projected = phi_u_record(build_table2_parent(parent_label))
    return extend(projected, parse_row(x_text, r1), parse_element(c_text, r1))


@dataclass(frozen=True)
class Expected:
    n: int
    d: int
    family: Family
    beta: int
    gamma: int | None = None


def expected_row(table_id: int, index: int) -> Expected:
    if table_id not in TABLES:
        raise UnknownTable(f"no table {table_id}")
    table = TABLES[table_id]
    beta = table[index - 1][-1]
    if table_id in (1, 2):
        return Expected(64, 12, Family.W64_2, beta)
    if table_id == 3:
        return Expected(64, 12, Family.W64_1, beta)
    if table_id in (4, 5):
        return Expected(66, 12, Family.W66_3, beta)
    if table_id == 6:
        return Expected(68, 12, Family.W68_2, beta, 0)
    if table_id == 7:
        return Expected(68, 12, Family.W68_2, beta, 3)
    raise UnknownTable(f"no table {table_id}")


@dataclass(frozen=True)
class RowResult:
    table: int
    index: int
    label: str
    ok: bool
    expected: Expected
    record: CodeRecord | None
    profile: WeightProfile | None
    problems: tuple[str, ...]

    def message(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        head = f"{status} table={self.table} row={self.index} label={self.label}"
        if self.record is not None and self.record.analysis is not None:
            a = self.record.analysis
            family = a.family.value if a.family else "-"
            head += (
                f" n={a.n} d={a.d} family={family}"
                f" beta={a.beta if a.beta is not None else '-'}"
                f" gamma={a.gamma if a.gamma is not None else '-'}"
            )
        if self.problems:
            head += "  [" + "; ".join(self.problems) + "]"
        return head


def verify_row(
    table_id: int, index: int, *, workers: int = 1
) -> RowResult:
    expected = expected_row(table_id, index)
    label = TABLES[table_id][index - 1][0]
    problems: list[str] = []
    record = profile = None
    try:
        record = build_row(table_id, index)
        record, profile = analyze_record(record, workers=workers)
    except Exception as exc:  # build or enumeration failure is a row failure
        problems.append(f"{type(exc).__name__}: {exc}")
        return RowResult(
            table_id, index, label, False, expected, record, profile, tuple(problems)
        )
    a = record.analysis
    if a.n != expected.n:
        problems.append(f"length {a.n} != {expected.n}")
    if a.d != expected.d:
        problems.append(f"distance {a.d} != {expected.d}")
    if a.family is not expected.family:
        problems.append(
            f"family {a.family.value if a.family else None} != {expected.family.value}"
        )
    if a.beta != expected.beta:
        problems.append(f"beta {a.beta} != {expected.beta}")
    if expected.gamma is not None and a.gamma != expected.gamma:
        problems.append(f"gamma {a.gamma} != {expected.gamma}")
    return RowResult(
        table_id,
        index,
        label,
        not problems,
        expected,
        record,
        profile,
        tuple(problems),
    )


def verify_table(
    table_id: int,
    rows: Sequence[int] | None = None,
    *,
    workers: int = 1,
    log: Callable[[str], None] | None = None,
) -> list[RowResult]:
    """Rebuild and check catalog rows; all of them when ``rows`` is None."""
    if table_id not in TABLES:
        raise UnknownTable(f"no table {table_id}")
    check_table_integrity(table_id)
    indices = list(rows) if rows is not None else list(
        range(1, len(TABLES[table_id]) + 1)
    )
    for index in indices:
        if not 1 <= index <= len(TABLES[table_id]):
            raise UnknownTable(f"table {table_id} has no row {index}")
    results = []
    for index in indices:
        result = verify_row(table_id, index, workers=workers)
        if log is not None:
            log(result.message())
        results.append(result)
    return results
