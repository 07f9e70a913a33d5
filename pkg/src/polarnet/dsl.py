"""Line-oriented net description language: parser and canonical formatter.

One statement per line; ``#`` starts a comment; blank lines are ignored.
The header must be the first statement::

    header : "net" MODE QUOTED_NAME [ "scale" NUM NUM NUM ] [ "undirected" ]
    MODE   : "fnsn" | "pnsn" | "pfnsn"
    vertex : "vertex" IDENT triple [ "indeterminate" ]
    edge   : "edge" IDENT "->" IDENT [ "label" QUOTED ] triple [ "indeterminate" ]
    triple : "(" value "," value "," value ")"
    value  : NUM | NUM "I" | "I"

IDENT is an identifier (letters, digits, underscore; not starting with a
digit).  NUM is a nonnegative decimal; "0.5I" denotes the indeterminacy
0.5*I and a bare "I" has coefficient 1.  Quoted strings support the escapes
\\" \\\\ \\n \\r \\t.  Files are UTF-8 with LF or CRLF line endings; the
suggested extension is ``.pnet``.

Every input either parses to a net or raises :class:`ParseError` with a
1-based line and column; semantic problems (duplicate vertex, unknown edge
endpoint, out-of-range degree) are reported at the offending token.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import ChannelTriple, NetError, NetMode, NeutroValue, SemanticNet, fmt_number

__all__ = ["ParseError", "parse_net", "format_net"]

_MODES = {m.value.lower(): m for m in NetMode}
_NUM_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "r": "\r", "t": "\t"}
_UNESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


class ParseError(Exception):
    """A syntax or semantic error located in the input text."""

    def __init__(self, line: int, column: int, message: str, snippet: str = ""):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.snippet = snippet

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


@dataclass(frozen=True)
class _Token:
    kind: str  # word | num | inum | quoted | ( | ) | , | ->
    text: str
    col: int  # 1-based
    value: float | None = None
    string: str | None = None


def _tokenize(line: str, lineno: int) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    n = len(line)
    while pos < n:
        ch = line[pos]
        if ch in " \t":
            pos += 1
            continue
        if ch == "#":
            break
        col = pos + 1
        if ch in "(),":
            tokens.append(_Token(ch, ch, col))
            pos += 1
            continue
        if ch == "-":
            if pos + 1 < n and line[pos + 1] == ">":
                tokens.append(_Token("->", "->", col))
                pos += 2
                continue
            raise ParseError(lineno, col, "expected '->'", line)
        if ch == '"':
            pos += 1
            out: list[str] = []
            while pos < n:
                c = line[pos]
                if c == "\\":
                    if pos + 1 >= n:
                        raise ParseError(lineno, pos + 1,
                                         "dangling escape in string", line)
                    esc = line[pos + 1]
                    if esc not in _ESCAPES:
                        raise ParseError(lineno, pos + 2,
                                         f"unknown escape '\\{esc}'", line)
                    out.append(_ESCAPES[esc])
                    pos += 2
                    continue
                if c == '"':
                    pos += 1
                    break
                out.append(c)
                pos += 1
            else:
                raise ParseError(lineno, n + 1, "unterminated string", line)
            tokens.append(_Token("quoted", line[col - 1:pos], col,
                                 string="".join(out)))
            continue
        m = _NUM_RE.match(line, pos)
        if m:
            text = m.group(0)
            end = m.end()
            kind = "num"
            if end < n and line[end] == "I":
                kind = "inum"
                end += 1
                text = line[pos:end]
            if end < n and (line[end].isalnum() or line[end] in "_."):
                raise ParseError(lineno, col, f"malformed number starting "
                                 f"at {line[pos:end + 1]!r}", line)
            tokens.append(_Token(kind, text, col, value=float(m.group(0))))
            pos = end
            continue
        m = _WORD_RE.match(line, pos)
        if m:
            tokens.append(_Token("word", m.group(0), col))
            pos = m.end()
            continue
        raise ParseError(lineno, col, f"unexpected character {ch!r}", line)
    return tokens


class _Cursor:
    """Token stream for one statement line."""

    def __init__(self, tokens: list[_Token], lineno: int, line: str):
        self.tokens = tokens
        self.lineno = lineno
        self.line = line
        self.pos = 0

    def peek(self) -> _Token | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def _fail(self, message: str, tok: _Token | None = None) -> ParseError:
        col = tok.col if tok is not None else len(self.line) + 1
        return ParseError(self.lineno, col, message, self.line)

    def take(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = f", found {tok.text!r}" if tok is not None else ""
            raise self._fail(f"{what} expected{found}", tok)
        self.pos += 1
        return tok

    def take_keyword(self, keyword: str) -> _Token:
        tok = self.take("word", f"'{keyword}'")
        if tok.text != keyword:
            raise ParseError(self.lineno, tok.col,
                             f"'{keyword}' expected, found {tok.text!r}", self.line)
        return tok

    def accept_keyword(self, keyword: str) -> bool:
        tok = self.peek()
        if tok is not None and tok.kind == "word" and tok.text == keyword:
            self.pos += 1
            return True
        return False

    def expect_end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise self._fail(f"unexpected trailing token {tok.text!r}", tok)


def _parse_value(cur: _Cursor) -> tuple[NeutroValue, _Token]:
    tok = cur.peek()
    if tok is None:
        raise cur._fail("degree value expected")
    if tok.kind == "num":
        cur.pos += 1
        return NeutroValue.determinate(tok.value), tok
    if tok.kind == "inum":
        cur.pos += 1
        try:
            return NeutroValue.indeterminacy(tok.value), tok
        except NetError as exc:
            raise ParseError(cur.lineno, tok.col, str(exc), cur.line) from exc
    if tok.kind == "word" and tok.text == "I":
        cur.pos += 1
        return NeutroValue.indeterminacy(1.0), tok
    raise cur._fail(f"degree value expected, found {tok.text!r}", tok)


def _parse_triple(cur: _Cursor) -> tuple[ChannelTriple, list[_Token]]:
    cur.take("(", "'('")
    values: list[NeutroValue] = []
    tokens: list[_Token] = []
    for k in range(3):
        if k:
            cur.take(",", "','")
        val, tok = _parse_value(cur)
        values.append(val)
        tokens.append(tok)
    cur.take(")", "')'")
    return ChannelTriple(*values), tokens


def _check_range(cur: _Cursor, net: SemanticNet, triple: ChannelTriple,
                 tokens: list[_Token]) -> None:
    for k, (val, mx, tok) in enumerate(zip(triple, net.scale, tokens), start=1):
        if not val.indeterminate and val.magnitude > mx:
            raise ParseError(
                cur.lineno, tok.col,
                f"channel {k} degree {fmt_number(val.magnitude)} exceeds "
                f"scale {fmt_number(mx)}", cur.line)


def _parse_header(cur: _Cursor) -> SemanticNet:
    mode_tok = cur.take("word", "net mode")
    mode = _MODES.get(mode_tok.text)
    if mode is None:
        raise ParseError(cur.lineno, mode_tok.col,
                         f"unknown net mode {mode_tok.text!r} "
                         "(expected fnsn, pnsn or pfnsn)", cur.line)
    name = cur.take("quoted", "quoted net name").string
    scale = None
    if cur.accept_keyword("scale"):
        components = []
        for k in range(1, 4):
            tok = cur.take("num", f"channel {k} scale")
            if not tok.value > 0.0:
                raise ParseError(cur.lineno, tok.col,
                                 f"channel {k} scale must be positive", cur.line)
            components.append(tok.value)
        scale = tuple(components)
    directed = not cur.accept_keyword("undirected")
    if scale is None:
        return SemanticNet(mode, name, directed=directed)
    return SemanticNet(mode, name, scale, directed=directed)


def _parse_vertex(cur: _Cursor, net: SemanticNet) -> None:
    ident = cur.take("word", "vertex label")
    triple, tokens = _parse_triple(cur)
    indeterminate = cur.accept_keyword("indeterminate")
    if net.find_vertex(ident.text) is not None:
        raise ParseError(cur.lineno, ident.col,
                         f"duplicate vertex label {ident.text!r}", cur.line)
    _check_range(cur, net, triple, tokens)
    try:
        net.add_vertex(ident.text, triple, indeterminate=indeterminate)
    except NetError as exc:  # backstop; specific checks above give better columns
        raise ParseError(cur.lineno, ident.col, str(exc), cur.line) from exc


def _parse_edge(cur: _Cursor, net: SemanticNet) -> None:
    src_tok = cur.take("word", "source vertex label")
    cur.take("->", "'->'")
    dst_tok = cur.take("word", "destination vertex label")
    label = ""
    if cur.accept_keyword("label"):
        label = cur.take("quoted", "quoted edge label").string
    triple, tokens = _parse_triple(cur)
    indeterminate = cur.accept_keyword("indeterminate")
    src = net.find_vertex(src_tok.text)
    if src is None:
        raise ParseError(cur.lineno, src_tok.col,
                         f"unknown vertex {src_tok.text!r}", cur.line)
    dst = net.find_vertex(dst_tok.text)
    if dst is None:
        raise ParseError(cur.lineno, dst_tok.col,
                         f"unknown vertex {dst_tok.text!r}", cur.line)
    if src.id == dst.id:
        raise ParseError(cur.lineno, dst_tok.col,
                         f"loop on vertex {src_tok.text!r} rejected", cur.line)
    if any(e.src == src.id and e.dst == dst.id for e in net.edges):
        raise ParseError(cur.lineno, src_tok.col,
                         f"duplicate edge {src_tok.text!r} -> {dst_tok.text!r}",
                         cur.line)
    _check_range(cur, net, triple, tokens)
    try:
        net.add_edge(src.id, dst.id, triple, label=label,
                     indeterminate=indeterminate)
    except NetError as exc:
        raise ParseError(cur.lineno, src_tok.col, str(exc), cur.line) from exc


def parse_net(source: str) -> SemanticNet:
    """Parse net description text into a :class:`SemanticNet`.

    Raises:
        ParseError: on the first syntax or semantic violation, carrying the
            1-based line and column of the offending token.
    """
    net: SemanticNet | None = None
    lines = source.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, line)
        head = tokens[0]
        if net is None:
            if head.kind != "word" or head.text != "net":
                raise ParseError(lineno, head.col, "net header expected", line)
            cur.pos += 1
            net = _parse_header(cur)
        elif head.kind == "word" and head.text == "net":
            raise ParseError(lineno, head.col, "duplicate net header", line)
        elif head.kind == "word" and head.text == "vertex":
            cur.pos += 1
            _parse_vertex(cur, net)
        elif head.kind == "word" and head.text == "edge":
            cur.pos += 1
            _parse_edge(cur, net)
        else:
            raise ParseError(lineno, head.col,
                             f"statement expected (vertex or edge), "
                             f"found {head.text!r}", line)
        cur.expect_end()
    if net is None:
        raise ParseError(1, 1, "net header expected",
                         lines[0] if lines else "")
    return net


def _quote(text: str) -> str:
    return '"' + "".join(_UNESCAPES.get(c, c) for c in text) + '"'


def format_net(net: SemanticNet) -> str:
    """Render a net in canonical form; the output re-parses to an equal net.

    Canonical means: header with explicit scale, vertices then edges in
    insertion order, numbers printed with minimal digits, empty edge labels
    omitted.
    """
    header = (f"net {net.mode.value.lower()} {_quote(net.name)} scale "
              + " ".join(fmt_number(s) for s in net.scale))
    if not net.directed:
        header += " undirected"
    lines = [header]
    for v in net.vertices:
        line = f"vertex {v.label} {v.membership}"
        if v.indeterminate:
            line += " indeterminate"
        lines.append(line)
    labels = {v.id: v.label for v in net.vertices}
    for e in net.edges:
        line = f"edge {labels[e.src]} -> {labels[e.dst]}"
        if e.label:
            line += f" label {_quote(e.label)}"
        line += f" {e.weight}"
        if e.indeterminate:
            line += " indeterminate"
        lines.append(line)
    return "\n".join(lines) + "\n"
