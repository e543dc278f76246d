"""Multivector expression parsing and text/CSV/LaTeX/JSON formatting.

Grammar (whitespace-insensitive, '*' optional between factors)::

    expr      := ('+'|'-')? term (('+'|'-') term)*
    term      := rational ('*'? factors)? | factors
    factors   := generator ('*'? generator)*
    generator := 'e' digits | 'e[' digits ']'
    rational  := integer ('/' integer)?

For n <= 9 the digits after a bare ``e`` are concatenated single-digit
indices (``e12`` means ``e1*e2``); for n >= 10 the bracket form is required.
Products of generators are reduced on the fly, so the parse result is a
fully simplified multivector.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import NamedTuple

from .blades import (
    Multivector,
    Signature,
    basis_ordinal,
    grade,
    indices_of,
    ordinal_to_indexset,
)
from .errors import IndexOutOfRange, ParseError, ZeroDenominator
from .matrep import RepMatrix
from .tables import MultTable, ScalarTable


# ---------------------------------------------------------------------------
# Tokenizer


class _Token(NamedTuple):
    kind: str  # NUM, GEN, BRACKET_GEN, OP, END
    value: object
    pos: int


# str.isdigit accepts non-ASCII digits that int() rejects
_DIGITS = "0123456789"


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/":
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        if ch in _DIGITS:
            start = i
            while i < length and text[i] in _DIGITS:
                i += 1
            tokens.append(_Token("NUM", int(text[start:i]), start))
            continue
        if ch == "e":
            start = i
            i += 1
            if i < length and text[i] == "[":
                i += 1
                digit_start = i
                while i < length and text[i] in _DIGITS:
                    i += 1
                if i == digit_start:
                    raise ParseError("expected digits inside brackets", i)
                if i >= length or text[i] != "]":
                    raise ParseError("unclosed bracket in generator", start)
                tokens.append(_Token("BRACKET_GEN", int(text[digit_start:i]), start))
                i += 1
                continue
            digit_start = i
            while i < length and text[i] in _DIGITS:
                i += 1
            if i == digit_start:
                raise ParseError("expected generator index after 'e'", start)
            tokens.append(_Token("GEN", text[digit_start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", None, length))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Multivector:
        result = Multivector.zero(self.sig)
        sign = 1
        tok = self.peek()
        if tok.kind == "OP" and tok.value in "+-":
            self.advance()
            sign = -1 if tok.value == "-" else 1
        elif tok.kind == "END":
            raise ParseError("empty expression", tok.pos)
        result = result + sign * self.term()
        while True:
            tok = self.peek()
            if tok.kind == "END":
                return result
            if tok.kind == "OP" and tok.value in "+-":
                self.advance()
                sign = -1 if tok.value == "-" else 1
                result = result + sign * self.term()
                continue
            raise ParseError(f"expected '+' or '-', got {tok.value!r}", tok.pos)

    def term(self) -> Multivector:
        tok = self.peek()
        coeff = Fraction(1)
        have_coeff = False
        if tok.kind == "NUM":
            coeff = Fraction(self.rational())
            have_coeff = True
            if self.peek().kind == "OP" and self.peek().value == "*":
                self.advance()
                if self.peek().kind not in ("GEN", "BRACKET_GEN"):
                    raise ParseError("expected generator after '*'", self.peek().pos)
        value = Multivector.scalar(self.sig, coeff)
        saw_factor = False
        while self.peek().kind in ("GEN", "BRACKET_GEN"):
            value = value * self.generator_factor()
            saw_factor = True
            if self.peek().kind == "OP" and self.peek().value == "*":
                nxt = self.tokens[self.i + 1]
                if nxt.kind in ("GEN", "BRACKET_GEN"):
                    self.advance()
                else:
                    raise ParseError("expected generator after '*'", nxt.pos)
        if not have_coeff and not saw_factor:
            tok = self.peek()
            raise ParseError(f"expected a term, got {tok.value!r}", tok.pos)
        return value

    def rational(self) -> Fraction:
        tok = self.advance()
        num = tok.value
        nxt = self.peek()
        if nxt.kind == "OP" and nxt.value == "/":
            # only a division of two adjacent integers is a rational literal
            after = self.tokens[self.i + 1]
            if after.kind == "NUM":
                self.advance()
                den_tok = self.advance()
                if den_tok.value == 0:
                    raise ZeroDenominator(
                        f"zero denominator at position {den_tok.pos}"
                    )
                return Fraction(num, den_tok.value)
            raise ParseError("expected integer denominator after '/'", after.pos)
        return Fraction(num)

    def generator_factor(self) -> Multivector:
        tok = self.advance()
        if tok.kind == "BRACKET_GEN":
            indices = [tok.value]
        else:
            digits = tok.value
            if len(digits) > 1 and self.sig.n > 9:
                raise ParseError(
                    "concatenated indices are ambiguous for n > 9; "
                    "use the bracket form e[k]",
                    tok.pos,
                )
            indices = [int(d) for d in digits]
        value = Multivector.scalar(self.sig, 1)
        for k in indices:
            if not 1 <= k <= self.sig.n:
                raise IndexOutOfRange(
                    f"generator e{k} outside 1..{self.sig.n} for {self.sig}"
                )
            value = value * Multivector.generator(self.sig, k)
        return value


def parse(text: str, sig: Signature) -> Multivector:
    """Parse an expression into a fully simplified multivector."""
    return _Parser(text, sig).parse()


# ---------------------------------------------------------------------------
# Multivector formatting


def _blade_plain(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"e{k}" if k <= 9 else f"e[{k}]" for k in indices_of(mask))


def _blade_latex(mask: int) -> str:
    if mask == 0:
        return "1"
    body = " ".join(f"e_{{{k}}}" for k in indices_of(mask))
    if grade(mask) == 1:
        return body
    return rf"\left({body}\right)"


def format_multivector(u: Multivector, style: str = "plain") -> str:
    """Render terms in graded-lex order; zero coefficients are skipped and
    unit coefficients elided on non-scalar blades."""
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown style {style!r}")
    pieces = []
    for _, mask, coeff in u.terms():
        mag = abs(coeff)
        if mask == 0:
            body = str(mag)
        else:
            blade = _blade_plain(mask) if style == "plain" else _blade_latex(mask)
            if mag == 1:
                body = blade
            elif style == "plain":
                body = f"{mag}*{blade}"
            else:
                body = rf"{mag}\,{blade}"
        pieces.append(("-" if coeff < 0 else "+", body))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Matrix and table formatting


def _frac_str(x: Fraction) -> str:
    return str(x)


def _grid(rows: list[list[str]], pad: bool) -> str:
    if pad:
        widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
        rows = [[cell.rjust(w) for cell, w in zip(r, widths)] for r in rows]
        return "".join("  ".join(r) + "\n" for r in rows)
    return "".join(",".join(r) + "\n" for r in rows)


def format_rep_matrix(matrix: RepMatrix, fmt: str = "text") -> str:
    if fmt == "text":
        return _grid([[_frac_str(x) for x in row] for row in matrix.entries], True)
    if fmt == "csv":
        return _grid([[_frac_str(x) for x in row] for row in matrix.entries], False)
    if fmt == "json":
        payload = [
            [int(x) if x.denominator == 1 else str(x) for x in row]
            for row in matrix.entries
        ]
        return json.dumps(payload) + "\n"
    if fmt == "latex":
        body = " \\\\\n".join(
            " & ".join(_frac_str(x) for x in row) for row in matrix.entries
        )
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"
    raise ValueError(f"unknown format {fmt!r}")


def rep_matrix_from_json(sig: Signature, text: str) -> RepMatrix:
    payload = json.loads(text)
    return RepMatrix.from_rows(sig, [[Fraction(x) for x in row] for row in payload])


def parse_matrix_text(sig: Signature, text: str) -> RepMatrix:
    """One row per line, whitespace-separated rationals."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([Fraction(tok) for tok in line.split()])
    if len(rows) != sig.dim or any(len(r) != sig.dim for r in rows):
        raise ValueError(f"expected a {sig.dim}x{sig.dim} matrix for {sig}")
    return RepMatrix.from_rows(sig, rows)


def _table_cell_name(table: MultTable, sign: int, ordinal: int, latex: bool) -> str:
    if sign == 0:
        return "0"
    mask = ordinal_to_indexset(table.sig.n, ordinal)
    body = _blade_latex(mask) if latex else _blade_plain(mask)
    return ("-" if sign < 0 else "") + body


def format_mult_table(table: MultTable, fmt: str = "text") -> str:
    if fmt == "text":
        rows = [
            [_table_cell_name(table, s, o, False) for s, o in row]
            for row in table.entries
        ]
        return _grid(rows, True)
    if fmt == "csv":
        rows = [
            ["0" if s == 0 else f"{'-' if s < 0 else ''}{o}" for s, o in row]
            for row in table.entries
        ]
        return _grid(rows, False)
    if fmt == "json":
        payload = [
            [{"sign": s, "ordinal": o} for s, o in row] for row in table.entries
        ]
        return json.dumps(payload) + "\n"
    if fmt == "latex":
        dim = table.dim
        colspec = "c|" + "c" * (dim - 1)
        lines = [f"\\left(\\begin{{array}}{{{colspec}}}"]
        for i, row in enumerate(table.entries):
            cells = " & ".join(_table_cell_name(table, s, o, True) for s, o in row)
            lines.append(cells + r"\\")
            if i == 0:
                lines.append(r"\hline")
        lines.append("\\end{array}\\right)")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def mult_table_from_json(sig: Signature, text: str) -> MultTable:
    payload = json.loads(text)
    entries = tuple(
        tuple((cell["sign"], cell["ordinal"]) for cell in row) for row in payload
    )
    return MultTable(sig, entries)


def format_scalar_table(g: ScalarTable, fmt: str = "text") -> str:
    vals = [str(v) for v in g.diag]
    if fmt == "text":
        return "  ".join(vals) + "\n"
    if fmt == "csv":
        return ",".join(vals) + "\n"
    if fmt == "json":
        return json.dumps(list(g.diag)) + "\n"
    if fmt == "latex":
        body = " & ".join(vals)
        return "\\begin{pmatrix}" + body + "\\end{pmatrix}\n"
    raise ValueError(f"unknown format {fmt!r}")


def format_matrix(obj, fmt: str = "text") -> str:
    """Dispatch on RepMatrix / MultTable / ScalarTable."""
    if isinstance(obj, RepMatrix):
        return format_rep_matrix(obj, fmt)
    if isinstance(obj, MultTable):
        return format_mult_table(obj, fmt)
    if isinstance(obj, ScalarTable):
        return format_scalar_table(obj, fmt)
    raise TypeError(f"cannot format {type(obj).__name__}")
