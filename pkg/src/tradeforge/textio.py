"""Plain-text trade documents.

Format: optional '#' comment lines; a line "W:" followed by one
whitespace-separated "row col sym" triple per line; an optional "B:" block.
Namespaces are inferred from the column position, tokens are bare, and the
file is UTF-8.  Serialisation sorts triples, so parse(serialize(x)) == x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .pls import Bitrade, Pls, triple, validate_bitrade, validate_pls

SECTIONS = ("W", "B")


@dataclass
class TradeDocument:
    sections: dict
    comments: list = field(default_factory=list)


def parse_document(text: str) -> TradeDocument:
    sections = {}
    comments = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        if line.endswith(":"):
            name = line[:-1].strip()
            if name not in SECTIONS:
                raise ParseError(f"unknown section {name!r}", lineno)
            if name in sections:
                raise ParseError(f"section {name!r} repeated", lineno)
            sections[name] = []
            current = sections[name]
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'row col sym', got {line!r}", lineno)
        if current is None:
            raise ParseError("triple before any section header", lineno)
        current.append(tuple(parts))
    if "W" not in sections:
        raise ParseError("missing 'W:' section")
    for name, rows in sections.items():
        if not rows:
            raise ParseError(f"section {name!r} is empty")
    return TradeDocument(sections=sections, comments=comments)


def document_to_pls(doc: TradeDocument, section: str = "W") -> Pls:
    return validate_pls(triple(r, c, s) for r, c, s in doc.sections[section])


def document_to_bitrade(doc: TradeDocument) -> Bitrade:
    if "B" not in doc.sections:
        raise ParseError("missing 'B:' section")
    return validate_bitrade(document_to_pls(doc, "W"), document_to_pls(doc, "B"))


def parse_pls(text: str) -> Pls:
    return document_to_pls(parse_document(text))


def parse_bitrade(text: str) -> Bitrade:
    return document_to_bitrade(parse_document(text))


def serialize_pls(p: Pls, section: str = "W", comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{section}:")
    lines.extend(str(t) for t in p)
    return "\n".join(lines) + "\n"


def serialize_bitrade(bt: Bitrade, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("W:")
    lines.extend(str(t) for t in bt.white)
    lines.append("B:")
    lines.extend(str(t) for t in bt.black)
    return "\n".join(lines) + "\n"
