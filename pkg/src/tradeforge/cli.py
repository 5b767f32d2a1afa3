"""Command-line frontend.

Exit codes: 0 when the checked property holds (or the report is purely
informational), 1 when a property fails or a search finds nothing, 2 on
input errors.  --json emits the report with sorted keys so output is
byte-stable across runs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field

from . import families, textio
from .embedding import (
    black_group,
    build_presentation,
    canonical_embedding,
    canonical_group,
    conjecture_check,
    verify_embedding,
)
from .errors import BadParameter, ParseError, TooLarge, TradeForgeError, UnknownFixture
from .matrix import determinant, permanent, permanent_expansion
from .pls import Triple, col, is_connected, is_separated, row, sym
from .search import cyclic_embed, minimal_abelian_embedding, quadrangle_violations
from .topology import find_mates, genus

OK = 0
FAIL = 1
INPUT_ERROR = 2


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    status: str = "ok"

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "status": self.status,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for key in sorted(self.results):
            lines.append(f"  {key}: {_plain(self.results[key])}")
        return "\n".join(lines)


def _plain(value):
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(_plain(v)) for v in value) + "]"
    return value


def _digest(path: str, text: str) -> dict:
    return {
        "file": path,
        "sha256": hashlib.sha256(text.encode()).hexdigest(),
    }


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(str(exc))
    return textio.parse_document(text), _digest(path, text)


def _bitrade(doc):
    return textio.document_to_bitrade(doc)


def _factors(group) -> list:
    return list(group.factors)


def _group_name(group) -> str:
    return str(group)


def cmd_validate(args) -> tuple:
    doc, inputs = _load(args.file)
    report = Report("validate", inputs)
    w = textio.document_to_pls(doc, "W")
    report.results["w_size"] = len(w)
    if "B" not in doc.sections:
        report.results["kind"] = "pls"
        return report, OK
    try:
        bt = _bitrade(doc)
    except TradeForgeError as exc:
        report.results["kind"] = "not a bitrade"
        report.results["reason"] = str(exc)
        report.status = "violation"
        return report, FAIL
    sep = is_separated(bt)
    conn = is_connected(bt)
    report.results.update(
        kind="bitrade",
        size=bt.size,
        separated=sep.separated,
        connected=conn.connected,
    )
    if not sep.separated:
        report.results["non_separated_labels"] = [str(x) for x in sep.offenders]
    if not conn.connected:
        report.results["component_count"] = len(conn.components)
    return report, OK


def cmd_genus(args) -> tuple:
    doc, inputs = _load(args.file)
    report = Report("genus", inputs)
    g = genus(_bitrade(doc))
    report.results.update(
        size=g.size, rows=g.rows, cols=g.cols, syms=g.syms, genus=g.genus
    )
    return report, OK


def _parse_special(text: str) -> Triple:
    parts = [p for p in text.split(",") if p]
    if len(parts) != 3:
        raise BadParameter(f"--special wants 'row,col,sym', got {text!r}")
    return Triple(row(parts[0]), col(parts[1]), sym(parts[2]))


def cmd_embed(args) -> tuple:
    doc, inputs = _load(args.file)
    bt = _bitrade(doc)
    special = _parse_special(args.special) if args.special else None
    emb = canonical_embedding(bt, special=special, unchecked=args.unchecked_genus)
    check = verify_embedding(emb, bt.white.triples)
    report = Report("embed", inputs)
    report.results.update(
        white_group=_group_name(emb.group),
        white_factors=_factors(emb.group),
        special=str(emb.special),
        i1={str(k): str(v) for k, v in sorted(emb.i1.items())},
        i2={str(k): str(v) for k, v in sorted(emb.i2.items())},
        i3={str(k): str(v) for k, v in sorted(emb.i3.items())},
        relations_checked=bt.size,
        relations_ok=not check.relation_failures,
        injective=not check.injectivity_failures,
    )
    try:
        bg = black_group(bt, unchecked=args.unchecked_genus)
        report.results["black_group"] = _group_name(bg)
        report.results["black_factors"] = _factors(bg)
    except TradeForgeError as exc:
        report.results["black_group_error"] = str(exc)
    if not check.ok:
        report.status = "violation"
        return report, FAIL
    return report, OK


def cmd_mates(args) -> tuple:
    doc, inputs = _load(args.file)
    w = textio.document_to_pls(doc, "W")
    result = find_mates(w, limit=args.limit)
    report = Report("mates", inputs)
    report.results.update(
        count=len(result.mates),
        truncated=result.truncated,
        flags=[
            {"separated": f.separated, "connected": f.connected}
            for f in result.classified
        ],
    )
    good = sum(1 for f in result.classified if f.separated and f.connected)
    report.results["separated_connected_count"] = good
    return report, OK


def cmd_detper(args) -> tuple:
    doc, inputs = _load(args.file)
    bt = _bitrade(doc)
    p = build_presentation(bt, unchecked=args.unchecked_genus)
    reduced = p.reduced_matrix
    det = determinant(reduced)
    try:
        per = permanent(reduced)
        method = "ryser"
    except TooLarge:
        per = permanent_expansion(reduced)
        method = "expansion"
    report = Report("detper", inputs)
    ok = abs(det) == per
    report.results.update(
        determinant=det,
        permanent=per,
        method=method,
        order=reduced.rows,
        verdict="PASS" if ok else "FAIL",
    )
    if not ok:
        report.status = "violation"
        return report, FAIL
    return report, OK


def cmd_conjecture(args) -> tuple:
    doc, inputs = _load(args.file)
    result = conjecture_check(_bitrade(doc), unchecked=args.unchecked_genus)
    report = Report("conjecture", inputs)
    report.results.update(
        orders_equal=result.orders_equal,
        isomorphic=result.isomorphic,
        white_factors=list(result.white_factors),
        black_factors=list(result.black_factors),
    )
    if not result.orders_equal or not result.isomorphic:
        report.status = "violation"
        return report, FAIL
    return report, OK


def cmd_quadrangle(args) -> tuple:
    doc, inputs = _load(args.file)
    report = Report("quadrangle", inputs)
    any_violation = False
    for section in ("W", "B"):
        if section not in doc.sections:
            continue
        p = textio.document_to_pls(doc, section)
        found = quadrangle_violations(p)
        report.results[f"{section}_violations"] = len(found)
        if found:
            any_violation = True
            report.results[f"{section}_first"] = str(found[0])
    if any_violation:
        report.status = "violation"
        return report, FAIL
    return report, OK


def cmd_search(args) -> tuple:
    doc, inputs = _load(args.file)
    w = textio.document_to_pls(doc, "W")
    report = Report("search", inputs)
    cyclic_found = None
    for m in range(2, args.cyclic_max + 1):
        if cyclic_embed(w, m) is not None:
            cyclic_found = m
            break
    report.results["cyclic_max_tried"] = args.cyclic_max
    report.results["cyclic_order"] = cyclic_found
    minimal = minimal_abelian_embedding(w, args.abelian_max)
    if minimal is None:
        report.results["abelian_group"] = None
        report.status = "none-found"
        return report, FAIL
    group, assignment = minimal
    report.results.update(
        abelian_group=_group_name(group),
        abelian_factors=_factors(group),
        assignment_rows={str(k): str(v) for k, v in sorted(assignment.rows.items())},
        assignment_cols={str(k): str(v) for k, v in sorted(assignment.cols.items())},
        assignment_syms={str(k): str(v) for k, v in sorted(assignment.syms.items())},
    )
    return report, OK


_FAMILIES = {
    "intercalate": (families.intercalate, 0),
    "two_rows": (families.two_rows, 1),
    "three_rows": (families.three_rows, 1),
    "non_embeddable": (families.non_embeddable, 1),
    "torank": (families.torank, 1),
    "fixture": (families.fixture, "name"),
}


def cmd_family(args) -> tuple:
    name = args.name
    if name not in _FAMILIES:
        raise BadParameter(
            f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}"
        )
    builder, arity = _FAMILIES[name]
    if arity == 0:
        if args.param is not None:
            raise BadParameter(f"{name} takes no parameter")
        bt = builder()
        label = name
    elif arity == "name":
        if args.param is None:
            raise BadParameter(
                f"fixture needs a name; known: {', '.join(families.fixture_ids())}"
            )
        bt = builder(args.param)
        label = f"fixture {args.param}"
    else:
        if args.param is None:
            raise BadParameter(f"{name} needs one integer parameter")
        bt = builder(int(args.param))
        label = f"{name}({args.param})"
    document = textio.serialize_bitrade(bt, comments=[label])
    report = Report("family", {"family": label})
    report.results.update(size=bt.size, document=document)
    return report, OK, document


def _add_common(parser):
    parser.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tradeforge",
        description="Validate latin bitrades, compute their genus and "
        "canonical abelian-group embeddings, and search for embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("validate", "classify a trade document"),
        ("genus", "genus of a separated connected bitrade"),
        ("mates", "enumerate disjoint mates of the W section"),
        ("detper", "check |det| = per on the reduced presentation matrix"),
        ("conjecture", "compare the white and black canonical groups"),
        ("quadrangle", "scan for quadrangle-criterion violations"),
        ("search", "cyclic and minimal abelian embedding search"),
        ("embed", "canonical group embedding of the white trade"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        _add_common(p)
        if name == "mates":
            p.add_argument("--limit", type=int, default=64)
        if name == "search":
            p.add_argument("--cyclic-max", type=int, default=16)
            p.add_argument("--abelian-max", type=int, default=16)
        if name == "embed":
            p.add_argument("--special", help="special triple as 'row,col,sym'")
        if name in ("embed", "detper", "conjecture"):
            p.add_argument("--unchecked-genus", action="store_true")

    p = sub.add_parser("family", help="write a constructed bitrade as a document")
    p.add_argument("name")
    p.add_argument("param", nargs="?")
    p.add_argument("-o", "--output", help="write the document to a file")
    _add_common(p)
    return parser


_HANDLERS = {
    "validate": cmd_validate,
    "genus": cmd_genus,
    "embed": cmd_embed,
    "mates": cmd_mates,
    "detper": cmd_detper,
    "conjecture": cmd_conjecture,
    "quadrangle": cmd_quadrangle,
    "search": cmd_search,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "family":
            report, code, document = cmd_family(args)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as handle:
                    handle.write(document)
                print(f"wrote {args.output}")
            elif args.json:
                print(report.to_json())
            else:
                sys.stdout.write(document)
            return code
        report, code = _HANDLERS[args.command](args)
    except (ParseError, UnknownFixture, BadParameter, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except TradeForgeError as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAIL
    print(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
