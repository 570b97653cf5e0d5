"""Text and JSON Lines encoding of rows, elements and code records.

Row text is one character per coordinate: 0/1 for F2, the alphabet
{0, 1, u, 3} with 3 = 1+u for F2+uF2, and uppercase hexadecimal digits
under the ordered basis (uv, v, u, 1) for the 16-element ring.  Commas,
parentheses and whitespace are accepted on input and dropped.

A record line is a JSON object with a fixed field order; absent fields
are omitted.  Records are replayed from their provenance when parsed,
so a line whose construction refers to a parent can only be parsed with
that parent in scope; files written by this module list parents before
children, making them self-contained.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .bits import BitVector
from .constructions import (
    BORDERED_FOUR_CIRCULANT,
    EXTENSION,
    FOUR_CIRCULANT,
    GRAY_PHI1,
    GRAY_PHI2,
    MODIFIED_FOUR_CIRCULANT,
    PHI_U,
    PHI_U_ALT,
    CodeRecord,
    binary_generator,
    bordered_four_circulant,
    extend,
    four_circulant_classic,
    gray_image_record,
    modified_four_circulant,
    phi_u_record,
)
from .errors import BadCharacter, CodesError, EmptyRow
from .rings import Alphabet, RingElement, RingVector
from .weightdist import CodeAnalysis, Family

_R1_FORMAT = {0: "0", 1: "1", 2: "u", 3: "3"}
_R1_PARSE = {"0": 0, "1": 1, "u": 2, "U": 2, "3": 3}
_HEX = "0123456789ABCDEF"


def format_element(e: RingElement) -> str:
    if e.alphabet is Alphabet.R1:
        return _R1_FORMAT[e.value]
    return _HEX[e.value]


def parse_element(text: str, alphabet: Alphabet) -> RingElement:
    cleaned = text.strip()
    if len(cleaned) != 1:
        raise BadCharacter(f"expected a single coordinate, got {text!r}")
    return RingElement(alphabet, _parse_char(cleaned, alphabet))


def _parse_char(ch: str, alphabet: Alphabet) -> int:
    if alphabet is Alphabet.R1:
        if ch not in _R1_PARSE:
            raise BadCharacter(f"character {ch!r} is not in the F2+uF2 alphabet")
        return _R1_PARSE[ch]
    value = _HEX.find(ch.upper())
    if value < 0 or value > alphabet.mask:
        raise BadCharacter(f"character {ch!r} is not in the {alphabet.value} alphabet")
    return value


def format_row(vec: RingVector) -> str:
    if vec.alphabet is Alphabet.R1:
        return "".join(_R1_FORMAT[v] for v in vec.values)
    return "".join(_HEX[v] for v in vec.values)


def parse_row(text: str, alphabet: Alphabet) -> RingVector:
    values = []
    for ch in text:
        if ch in " \t(),":
            continue
        values.append(_parse_char(ch, alphabet))
    if not values:
        raise EmptyRow(f"row text {text!r} has no coordinates")
    return RingVector(alphabet, tuple(values))


def bits_to_hex(bv: BitVector) -> str:
    """Hex string reading coordinates left to right, four per digit.

    The first coordinate of each group is the most significant bit of
    its digit; the last group is padded with zeros on the right.
    """
    out = []
    for start in range(0, bv.length, 4):
        digit = 0
        for j in range(4):
            digit <<= 1
            if start + j < bv.length:
                digit |= bv.bit(start + j)
        out.append(_HEX[digit])
    return "".join(out)


def hex_to_bits(text: str, length: int) -> BitVector:
    if len(text) != (length + 3) // 4:
        raise CodesError(f"hex row of {len(text)} digits cannot hold {length} bits")
    value = 0
    for pos, ch in enumerate(text):
        digit = _HEX.find(ch.upper())
        if digit < 0:
            raise BadCharacter(f"character {ch!r} is not a hex digit")
        for j in range(4):
            i = 4 * pos + j
            bit = (digit >> (3 - j)) & 1
            if i >= length:
                if bit:
                    raise CodesError("padding bits must be zero")
                continue
            if bit:
                value |= 1 << i
    return BitVector(length, value)


_FIELD_ORDER = (
    "construction",
    "alphabet",
    "lambda",
    "rA",
    "rB",
    "x",
    "y",
    "X",
    "c",
    "parent_id",
    "seed",
    "n",
    "k",
    "d",
    "family",
    "beta",
    "gamma",
    "binary_generator_hex_rows",
    "timestamp",
)


def serialize_record(record: CodeRecord) -> str:
    """One JSON line; fixed field order, absent fields omitted."""
    g = binary_generator(record)
    fields: dict[str, object] = {
        "construction": record.construction,
        "alphabet": record.alphabet.value,
        "lambda": None if record.lam is None else format_element(record.lam),
        "rA": None if record.r_a is None else format_row(record.r_a),
        "rB": None if record.r_b is None else format_row(record.r_b),
        "x": None if record.x is None else format_element(record.x),
        "y": None if record.y is None else format_element(record.y),
        "X": None if record.ext_x is None else format_row(record.ext_x),
        "c": None if record.ext_c is None else format_element(record.ext_c),
        "parent_id": record.parent_id,
        "seed": record.seed,
        "binary_generator_hex_rows": [bits_to_hex(r) for r in g.rows],
        "timestamp": record.timestamp,
    }
    if record.analysis is not None:
        a = record.analysis
        fields.update(
            n=a.n,
            k=a.k,
            d=a.d,
            family=None if a.family is None else a.family.value,
            beta=a.beta,
            gamma=a.gamma,
        )
    ordered = {
        name: fields[name]
        for name in _FIELD_ORDER
        if fields.get(name) is not None
    }
    return json.dumps(ordered, separators=(",", ":"))


def parse_record(
    line: str, parents: Mapping[str, CodeRecord] | None = None
) -> CodeRecord:
    """Rebuild a record from its provenance and verify the stored image."""
    fields = json.loads(line)
    construction = fields.get("construction")
    alphabet = Alphabet(fields["alphabet"])

    def row(name: str) -> RingVector:
        return parse_row(fields[name], alphabet)

    def elt(name: str) -> RingElement:
        return parse_element(fields[name], alphabet)

    def parent() -> CodeRecord:
        pid = fields["parent_id"]
        if not parents or pid not in parents:
            raise CodesError(f"record needs unknown parent {pid}")
        return parents[pid]

    if construction == FOUR_CIRCULANT:
        record = four_circulant_classic(row("rA"), row("rB"))
    elif construction == MODIFIED_FOUR_CIRCULANT:
        record = modified_four_circulant(row("rA"), row("rB"), elt("lambda"))
    elif construction == BORDERED_FOUR_CIRCULANT:
        record = bordered_four_circulant(row("rA"), row("rB"), elt("x"), elt("y"))
    elif construction == EXTENSION:
        record = extend(parent(), row("X"), elt("c"))
    elif construction in (GRAY_PHI1, GRAY_PHI2):
        record = gray_image_record(parent())
    elif construction in (PHI_U, PHI_U_ALT):
        from .rings import PHI_U_DECOMPOSITIONS, PHI_U_DEFAULT

        alt = next(d for d in PHI_U_DECOMPOSITIONS if d != PHI_U_DEFAULT)
        record = phi_u_record(
            parent(), decomposition=None if construction == PHI_U else alt
        )
    else:
        raise CodesError(f"unknown construction {construction!r}")

    analysis = None
    if "n" in fields:
        family = fields.get("family")
        analysis = CodeAnalysis(
            n=fields["n"],
            k=fields["k"],
            d=fields.get("d"),
            family=None if family is None else Family(family),
            beta=fields.get("beta"),
            gamma=fields.get("gamma"),
        )
    from dataclasses import replace

    record = replace(
        record,
        seed=fields.get("seed"),
        timestamp=fields.get("timestamp"),
        analysis=analysis,
    )

    stored = fields.get("binary_generator_hex_rows")
    if stored is not None:
        g = binary_generator(record)
        rebuilt = [bits_to_hex(r) for r in g.rows]
        if rebuilt != stored:
            raise CodesError("stored binary generator does not match its provenance")
    return record


def write_records(path: str, records: Iterable[CodeRecord], *, append: bool = False) -> None:
    with open(path, "a" if append else "w", encoding="ascii") as fh:
        for record in records:
            fh.write(serialize_record(record))
            fh.write("\n")


def read_records(path: str) -> list[CodeRecord]:
    """Parse a record file, resolving parents from earlier lines."""
    out: list[CodeRecord] = []
    parents: dict[str, CodeRecord] = {}
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            record = parse_record(line, parents)
            parents[record.record_id] = record
            out.append(record)
    return out


def record_chain(record: CodeRecord, parents: Mapping[str, CodeRecord]) -> list[CodeRecord]:
    """The record preceded by its ancestors, oldest first."""
    chain: list[CodeRecord] = [record]
    current = record
    while current.parent_id is not None:
        if current.parent_id not in parents:
            raise CodesError(f"missing ancestor {current.parent_id}")
        current = parents[current.parent_id]
        chain.append(current)
    chain.reverse()
    return chain
