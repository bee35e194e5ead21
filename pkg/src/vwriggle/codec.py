"""Text format for tangle diagrams and canonical text/JSON for polynomials.

Tangle files look like::

    tangle
    closed : O1+ O2+ U1+ U2+
    long start=T.1 end=B.1 : O3+ U3+ P4* Q4*

One component per line, passages in orientation order.  ``O``/``U`` mark
the over/under passage of a classical crossing and carry its sign; ``P``/``Q``
mark a double point, ``P`` being the over strand of its positive
resolution.  Runs of spaces or tabs are accepted wherever a space is
expected, lines starting with ``#`` are ignored, and output is always
single-spaced with LF line endings.
"""

from __future__ import annotations

import json
import re

from .errors import TangleError
from .laurent import LaurentPolynomial
from .tangle import (
    SIGN_INCONSISTENCY, Component, Kind, Role, TangleDiagram, ValidationReport, Violation,
    relabel_canonical, validate,
)

__all__ = [
    "GaussSyntaxError", "SemanticError", "parse_tangle", "serialize_tangle",
    "closed_knot", "long_knot", "polynomial_to_text", "parse_polynomial",
    "polynomial_to_json", "polynomial_from_json",
]


class GaussSyntaxError(TangleError):
    def __init__(self, line: int, column: int, expected: str):
        self.line, self.column, self.expected = line, column, expected
        super().__init__(f"line {line}, column {column}: expected {expected}")


class SemanticError(TangleError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


_WS = re.compile(r"[ \t]+")
_PASSAGE = re.compile(r"([OU])(\d+)([+-])|([PQ])(\d+)\*")
_END = re.compile(r"(start|end)=([TB])\.(\d+)")


class _Line:
    """Cursor over one line of input, tracking 1-based columns."""

    def __init__(self, text: str, lineno: int):
        self.text, self.lineno, self.pos = text, lineno, 0

    def fail(self, expected: str):
        raise GaussSyntaxError(self.lineno, self.pos + 1, expected)

    def space(self, required=True):
        m = _WS.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        elif required:
            self.fail("space")

    def literal(self, word: str):
        if not self.text.startswith(word, self.pos):
            self.fail(repr(word))
        self.pos += len(word)

    def regex(self, pattern: re.Pattern, expected: str) -> re.Match:
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(expected)
        self.pos = m.end()
        return m

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def boundary(self):
        if not self.at_end() and not _WS.match(self.text, self.pos):
            self.fail("space or end of line")


def _positive(digits: str, line: _Line, start: int) -> int:
    value = int(digits)
    if value < 1:
        raise GaussSyntaxError(line.lineno, start + 1, "positive integer")
    return value


def _parse_component(line: _Line, passage_signs: dict) -> Component:
    line.space(required=False)
    if line.text.startswith("closed", line.pos):
        line.literal("closed")
        kind, ends = Kind.CLOSED, {}
    elif line.text.startswith("long", line.pos):
        line.literal("long")
        kind, ends = Kind.LONG, {}
        for which in ("start", "end"):
            line.space()
            col = line.pos
            m = line.regex(_END, f"'{which}=' side '.' position")
            if m.group(1) != which:
                raise GaussSyntaxError(line.lineno, col + 1, f"'{which}='")
            ends[which] = (m.group(2), _positive(m.group(3), line, m.start(3)))
    else:
        line.fail("'closed' or 'long'")
    line.space()
    line.literal(":")
    line.boundary()
    passages = []
    while True:
        line.space(required=False)
        if line.at_end():
            break
        m = line.regex(_PASSAGE, "passage such as O1+, U2- or P3*")
        line.boundary()
        if m.group(1):
            cid = _positive(m.group(2), line, m.start(2))
            passages.append((cid, Role(m.group(1))))
            passage_signs.setdefault(cid, []).append(1 if m.group(3) == "+" else -1)
        else:
            cid = _positive(m.group(5), line, m.start(5))
            passages.append((cid, Role(m.group(4))))
    if kind is Kind.CLOSED:
        return Component.closed(passages)
    return Component.long(passages, ends["start"], ends["end"])


def parse_tangle(text: str) -> TangleDiagram:
    """Parse tangle text into a validated diagram.

    Raises :class:`GaussSyntaxError` for malformed text and
    :class:`SemanticError` when the text is well formed but describes an
    invalid diagram.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GaussSyntaxError(1, 1, "'tangle'")
    header = _Line(lines[0].rstrip("\r"), 1)
    header.space(required=False)
    header.literal("tangle")
    header.space(required=False)
    if not header.at_end():
        header.fail("end of line")

    passage_signs: dict[int, list[int]] = {}
    comps = []
    for lineno, raw in enumerate(lines[1:], start=2):
        raw = raw.rstrip("\r")
        if raw.lstrip(" \t").startswith("#"):
            continue
        comps.append(_parse_component(_Line(raw, lineno), passage_signs))

    violations = []
    signs = {}
    for cid, seen in sorted(passage_signs.items()):
        signs[cid] = seen[0]
        if len(set(seen)) > 1:
            violations.append(Violation(SIGN_INCONSISTENCY, "sign tokens disagree", cid))
    diagram = TangleDiagram(tuple(comps), signs)
    report = validate(diagram)
    if violations:
        # the stored sign is arbitrary, so drop report lines that merely echo it
        rest = [v for v in report.violations
                if not (v.category == SIGN_INCONSISTENCY and v.crossing in signs)]
        report = ValidationReport(tuple(violations + rest))
    if not report.ok:
        raise SemanticError(report)
    return diagram


def _passage_token(cid: int, role: Role, signs) -> str:
    if role.singular:
        return f"{role.value}{cid}*"
    return f"{role.value}{cid}{'+' if signs[cid] > 0 else '-'}"


def serialize_tangle(diagram: TangleDiagram) -> str:
    diagram = relabel_canonical(diagram)
    out = ["tangle"]
    for comp in diagram.components:
        if comp.is_closed:
            head = "closed :"
        else:
            head = (f"long start={comp.start.side}.{comp.start.position} "
                    f"end={comp.end.side}.{comp.end.position} :")
        tokens = [_passage_token(cid, role, diagram.signs) for cid, role in comp.passages]
        out.append(" ".join([head] + tokens))
    return "\n".join(out) + "\n"


def closed_knot(code: str) -> TangleDiagram:
    """One closed component from a passage string like ``"O1+ O2+ U1+ U2+"``."""
    return parse_tangle(f"tangle\nclosed : {code}\n")


def long_knot(code: str) -> TangleDiagram:
    return parse_tangle(f"tangle\nlong start=T.1 end=B.1 : {code}\n")


# -- polynomials -------------------------------------------------------------

def _monomial_text(mono) -> str:
    parts = []
    for var, e in mono:
        parts.append(f"t{var}" if e == 1 else f"t{var}^{e}")
    return "".join(parts)


def polynomial_to_text(p: LaurentPolynomial) -> str:
    """Canonical text, e.g. ``"t1 + t1^-1 - 2"``; the zero polynomial is ``"0"``."""
    chunks = []
    for mono, coeff in p.items():
        body = _monomial_text(mono)
        mag = abs(coeff)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}{body}"
        if not chunks:
            chunks.append(("-" if coeff < 0 else "") + body)
        else:
            chunks.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(chunks) if chunks else "0"


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?((?:t\d+(?:\^-?\d+)?)*)\s*")
_FACTOR = re.compile(r"t(\d+)(?:\^(-?\d+))?")


def parse_polynomial(text: str) -> LaurentPolynomial:
    """Inverse of :func:`polynomial_to_text`; also accepts unsorted input."""
    s = text.strip()
    if s == "0":
        return LaurentPolynomial()
    terms, pos = [], 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if terms and m.group(1) is None:
            raise ValueError(f"missing sign in {text!r} at offset {pos}")
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coeff = -coeff
        mono = [(int(v), int(e) if e else 1) for v, e in _FACTOR.findall(m.group(3))]
        terms.append((mono, coeff))
        pos = m.end()
    return LaurentPolynomial(terms)


def polynomial_to_json(p: LaurentPolynomial) -> str:
    terms = [{"coeff": c, "exps": {str(v): e for v, e in mono}} for mono, c in p.items()]
    return json.dumps(terms, separators=(",", ":"))


def polynomial_from_json(text: str) -> LaurentPolynomial:
    return LaurentPolynomial(
        ({int(v): e for v, e in term["exps"].items()}, term["coeff"])
        for term in json.loads(text))
