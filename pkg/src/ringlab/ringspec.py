"""The ring-construction DSL: lexer, parser, elaborator, element literals.

Grammar (whitespace-insensitive)::

    expr  := term (('x' | '×') term)*          -- n-ary direct product
    term  := 'Z' INT
           | 'M' INT '(' expr ')'
           | 'T' INT '(' expr ')' ['^' 'upper']
           | 'corner' '(' expr ',' INT ')'
           | '(' expr ')'
           | term '[' group ']'                -- group ring
           | term '[' 'x' ']' '/' 'x' '^' INT  -- truncated polynomials
           | term '/' '(' INT,* ')'            -- quotient by generated ideal
    group := 'C' INT | STRING                  -- cyclic, or a Cayley JSON file

Products bind loosest; the construction heads take explicit parentheses, so
the grammar needs no precedence table.  Element indices appearing in corner
and quotient positions refer to the inner ring's canonical encoding.

``parse_ring`` never raises anything but :class:`ParseError` on any input;
``parse_element`` resolves element literals (plain index, ``(a,b)`` tuples,
``[[a,b],[c,d]]`` matrices) through a ring's codec.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core.expr import (
    CornerExpr,
    CyclicGroup,
    FileGroup,
    GroupNode,
    GroupRingExpr,
    InlineGroup,
    MatrixExpr,
    ProductExpr,
    QuotientExpr,
    RingExpr,
    TriangularExpr,
    TruncPolyExpr,
    ZModExpr,
    print_expr,
)
from .core.groups import GroupSpec
from .core.ideals import ideal_closure, make_quotient
from .core.ring import (
    FiniteRing,
    make_corner,
    make_group_ring,
    make_matrix_ring,
    make_product,
    make_trunc_poly,
    make_triangular_ring,
    make_zmod,
)
from .errors import ConstructionError, ElaborationError, ParseError, RingLabError


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "int" | "symbol" | "string" | "eof"
    text: str
    start: int
    end: int


_SYMBOLS = set("()[],/^×")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_INT_RE = re.compile(r"[0-9]+")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("symbol", ch, i, i + 1))
            i += 1
            continue
        if ch == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError(i, frozenset({"closing '\"'"}), text[i:i + 1],
                                 "unterminated string")
            tokens.append(Token("string", text[i + 1 : j], i, j + 1))
            i = j + 1
            continue
        m = _INT_RE.match(text, i)
        if m:
            tokens.append(Token("int", m.group(), i, m.end()))
            i = m.end()
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(Token("ident", m.group(), i, m.end()))
            i = m.end()
            continue
        raise ParseError(i, frozenset({"ring expression"}), ch,
                         f"unexpected character {ch!r}")
    tokens.append(Token("eof", "", n, n))
    return tokens


_ZMOD_RE = re.compile(r"Z([0-9]+)$")
_MAT_RE = re.compile(r"M([0-9]+)$")
_TRI_RE = re.compile(r"T([0-9]+)$")
_CYC_RE = re.compile(r"C([0-9]+)$")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, expected: set[str]) -> ParseError:
        tok = self.peek()
        found = tok.text if tok.kind != "eof" else "end of input"
        return ParseError(
            tok.start, frozenset(expected), found,
            f"expected {', '.join(sorted(expected))}, found {found!r}",
        )

    def expect_symbol(self, sym: str) -> Token:
        tok = self.peek()
        if tok.kind == "symbol" and tok.text == sym:
            return self.advance()
        raise self.error({f"'{sym}'"})

    def expect_int(self, what: str = "integer") -> int:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return int(tok.text)
        raise self.error({what})

    def parse(self) -> RingExpr:
        expr = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise self.error({"'x'", "end of input"})
        return expr

    def expr(self) -> RingExpr:
        terms = [self.term()]
        while True:
            tok = self.peek()
            if tok.kind == "ident" and tok.text == "x":
                self.advance()
                terms.append(self.term())
            elif tok.kind == "symbol" and tok.text == "×":
                self.advance()
                terms.append(self.term())
            else:
                break
        if len(terms) == 1:
            return terms[0]
        return ProductExpr(tuple(terms))

    def term(self) -> RingExpr:
        expr = self.primary()
        while True:
            tok = self.peek()
            if tok.kind == "symbol" and tok.text == "[":
                expr = self.postfix_bracket(expr)
            elif (
                tok.kind == "symbol"
                and tok.text == "/"
                and self.peek(1).kind == "symbol"
                and self.peek(1).text == "("
            ):
                self.advance()
                self.advance()
                gens = []
                if not (self.peek().kind == "symbol" and self.peek().text == ")"):
                    gens.append(self.expect_int("generator index"))
                    while self.peek().kind == "symbol" and self.peek().text == ",":
                        self.advance()
                        gens.append(self.expect_int("generator index"))
                self.expect_symbol(")")
                expr = QuotientExpr(expr, tuple(gens))
            else:
                break
        return expr

    def postfix_bracket(self, inner: RingExpr) -> RingExpr:
        self.expect_symbol("[")
        tok = self.peek()
        if tok.kind == "ident" and tok.text == "x" and \
                self.peek(1).kind == "symbol" and self.peek(1).text == "]":
            self.advance()
            self.advance()
            self.expect_symbol("/")
            xtok = self.peek()
            if not (xtok.kind == "ident" and xtok.text == "x"):
                raise self.error({"'x'"})
            self.advance()
            self.expect_symbol("^")
            k = self.expect_int("truncation exponent")
            return TruncPolyExpr(inner, k)
        group = self.group()
        self.expect_symbol("]")
        return GroupRingExpr(inner, group)

    def group(self) -> GroupNode:
        tok = self.peek()
        if tok.kind == "ident":
            m = _CYC_RE.match(tok.text)
            if m:
                self.advance()
                return CyclicGroup(int(m.group(1)))
        if tok.kind == "string":
            self.advance()
            return FileGroup(tok.text)
        raise self.error({"'C<n>'", "cayley file string"})

    def primary(self) -> RingExpr:
        tok = self.peek()
        if tok.kind == "symbol" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_symbol(")")
            return inner
        if tok.kind == "ident":
            m = _ZMOD_RE.match(tok.text)
            if m:
                self.advance()
                return ZModExpr(int(m.group(1)))
            m = _MAT_RE.match(tok.text)
            if m:
                self.advance()
                self.expect_symbol("(")
                inner = self.expr()
                self.expect_symbol(")")
                return MatrixExpr(int(m.group(1)), inner)
            m = _TRI_RE.match(tok.text)
            if m:
                self.advance()
                self.expect_symbol("(")
                inner = self.expr()
                self.expect_symbol(")")
                shape = "lower"
                nxt = self.peek()
                if nxt.kind == "symbol" and nxt.text == "^":
                    self.advance()
                    suffix = self.peek()
                    if suffix.kind == "ident" and suffix.text == "upper":
                        self.advance()
                        shape = "upper"
                    else:
                        raise self.error({"'upper'"})
                return TriangularExpr(int(m.group(1)), inner, shape)
            if tok.text == "corner":
                self.advance()
                self.expect_symbol("(")
                inner = self.expr()
                self.expect_symbol(",")
                e = self.expect_int("idempotent index")
                self.expect_symbol(")")
                return CornerExpr(inner, e)
        raise self.error({"'Z<n>'", "'M<n>('", "'T<n>('", "'corner('", "'('"})


def parse_ring(text: str) -> RingExpr:
    """Parse DSL text to a ring expression; raises only ParseError."""
    return _Parser(text).parse()


def _load_group(node: GroupNode) -> GroupSpec:
    if isinstance(node, CyclicGroup):
        if node.n < 1:
            raise ConstructionError("cyclic group order must be >= 1")
        return GroupSpec.cyclic(node.n)
    if isinstance(node, FileGroup):
        try:
            with open(node.path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConstructionError(f"cannot read Cayley file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConstructionError(f"Cayley file is not valid JSON: {exc}") from exc
        table = data.get("table") if isinstance(data, dict) else data
        if not isinstance(table, list):
            raise ConstructionError("Cayley file must hold a table (list of rows)")
        return GroupSpec.from_table(table)
    if isinstance(node, InlineGroup):
        return GroupSpec.from_table(node.table)
    raise ConstructionError(f"unknown group node {node!r}")


def elaborate(expr: RingExpr, *, size_cap: int | None = None,
              table_cap: int | None = None) -> FiniteRing:
    """Build the ring a parsed expression denotes, validating as it goes.

    Semantic failures carry the printed failing sub-expression.
    """
    kw = {"size_cap": size_cap, "table_cap": table_cap}
    try:
        if isinstance(expr, ZModExpr):
            return make_zmod(expr.n, **kw)
        if isinstance(expr, ProductExpr):
            factors = [
                elaborate(f, size_cap=size_cap, table_cap=table_cap)
                for f in expr.factors
            ]
            return make_product(factors, **kw)
        if isinstance(expr, MatrixExpr):
            inner = elaborate(expr.inner, size_cap=size_cap, table_cap=table_cap)
            return make_matrix_ring(inner, expr.n, **kw)
        if isinstance(expr, TriangularExpr):
            inner = elaborate(expr.inner, size_cap=size_cap, table_cap=table_cap)
            return make_triangular_ring(inner, expr.n, expr.shape, **kw)
        if isinstance(expr, GroupRingExpr):
            inner = elaborate(expr.inner, size_cap=size_cap, table_cap=table_cap)
            group = _load_group(expr.group)
            return make_group_ring(inner, group, construction=expr, **kw)
        if isinstance(expr, TruncPolyExpr):
            inner = elaborate(expr.inner, size_cap=size_cap, table_cap=table_cap)
            return make_trunc_poly(inner, expr.k, **kw)
        if isinstance(expr, CornerExpr):
            inner = elaborate(expr.inner, size_cap=size_cap, table_cap=table_cap)
            if not 0 <= expr.idempotent < inner.order:
                raise ConstructionError(
                    f"index {expr.idempotent} out of range 0..{inner.order - 1}"
                )
            return make_corner(inner, expr.idempotent, table_cap=table_cap)
        if isinstance(expr, QuotientExpr):
            inner = elaborate(expr.inner, size_cap=size_cap, table_cap=table_cap)
            for g in expr.generators:
                if not 0 <= g < inner.order:
                    raise ConstructionError(
                        f"generator index {g} out of range 0..{inner.order - 1}"
                    )
            ideal = ideal_closure(inner, expr.generators)
            return make_quotient(inner, ideal, table_cap=table_cap)
    except ElaborationError:
        raise
    except RingLabError as exc:
        raise ElaborationError(str(exc), print_expr(expr)) from exc
    raise ElaborationError("unknown expression kind", repr(expr))


def parse_and_elaborate(text: str, *, size_cap: int | None = None,
                        table_cap: int | None = None) -> FiniteRing:
    return elaborate(parse_ring(text), size_cap=size_cap, table_cap=table_cap)


# -- element literals -------------------------------------------------------------


def _parse_literal(text: str, pos: int = 0):
    """Parse int | '(' items ')' | '[' rows ']' into the tagged-tree form."""
    n = len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def parse_at(i: int):
        i = skip_ws(i)
        if i >= n:
            raise ValueError("unexpected end of element literal")
        ch = text[i]
        if ch == "(":
            items = []
            i += 1
            i = skip_ws(i)
            if i < n and text[i] == ")":
                return ("tuple", tuple(items)), i + 1
            while True:
                item, i = parse_at(i)
                items.append(item)
                i = skip_ws(i)
                if i < n and text[i] == ",":
                    i += 1
                    continue
                if i < n and text[i] == ")":
                    return ("tuple", tuple(items)), i + 1
                raise ValueError(f"expected ',' or ')' at position {i}")
        if ch == "[":
            rows = []
            i += 1
            while True:
                item, i = parse_at(i)
                rows.append(item)
                i = skip_ws(i)
                if i < n and text[i] == ",":
                    i += 1
                    continue
                if i < n and text[i] == "]":
                    i += 1
                    # A matrix literal is a bracket of brackets; normalize rows.
                    if all(isinstance(r, tuple) and r and r[0] == "row" for r in rows):
                        return ("matrix", tuple(tuple(r[1]) for r in rows)), i
                    return ("row", tuple(rows)), i
                raise ValueError(f"expected ',' or ']' at position {i}")
        m = _INT_RE.match(text, i)
        if m:
            return int(m.group()), m.end()
        raise ValueError(f"unexpected character {ch!r} at position {i}")

    value, end = parse_at(pos)
    end = skip_ws(end)
    if end != n:
        raise ValueError(f"trailing input at position {end}")
    return value


def parse_element(ring: FiniteRing, text: str) -> int:
    """Resolve an element literal against a ring's construction codec.

    Plain integers are raw indices for every ring; tuples address products,
    group rings and truncated polynomials; ``[[..],[..]]`` matrices address
    matrix and triangular rings (entries recursively in the inner ring's
    literal syntax).
    """
    try:
        lit = _parse_literal(text.strip())
    except ValueError as exc:
        raise ValueError(f"bad element literal {text!r}: {exc}") from exc
    if isinstance(lit, tuple) and lit and lit[0] == "row":
        # A flat bracket list is only meaningful as a 1xN or Nx1 matrix; treat
        # it as a malformed literal rather than guessing.
        raise ValueError(f"bad element literal {text!r}: expected [[...],[...]] rows")
    return ring.element_from_literal(lit)
