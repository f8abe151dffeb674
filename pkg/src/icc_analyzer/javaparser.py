"""Line-accurate statement-level parser for decompiled Java sources.

The grammar is deliberately a subset. Local declarations with initializers,
expression statements (call chains, field accesses, assignments) and returns
are modeled structurally; control-flow constructs keep their header as an
opaque statement while the statements inside are parsed individually;
anything else degrades to an opaque statement plus a diagnostic rather than
failing the file. Parsing never raises: decompiler junk, stray bytes and
unfinished constructs must not lose the lines around them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .lexer import Token, TokenKind, tokenize

_MODIFIERS = frozenset(
    {
        "public", "private", "protected", "static", "final", "abstract",
        "native", "synchronized", "transient", "volatile", "strictfp",
        "default",
    }
)
_PRIMITIVES = frozenset(
    {"boolean", "byte", "char", "short", "int", "long", "float", "double", "void"}
)
_CONTROL_WITH_PARENS = frozenset(
    {"if", "for", "while", "switch", "synchronized", "catch"}
)
_ASSIGN_OPS = frozenset(
    {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="}
)
_BINARY_OPS = frozenset(
    {
        "+", "-", "*", "/", "%", "<", ">", "<=", ">=", "==", "!=", "&&",
        "||", "&", "|", "^", "<<", ">>", ">>>", "?", ":",
    }
)

Diagnostic = tuple[int, str]


# ---------------------------------------------------------------------------
# expressions


@dataclass(eq=False)
class Expr:
    """Base expression node; identity-hashed so marks can key on nodes."""

    def children(self) -> tuple[Expr, ...]:
        return ()

    def own_names(self) -> frozenset[str]:
        return frozenset()

    def walk(self) -> Iterator[Expr]:
        yield self
        for child in self.children():
            yield from child.walk()

    def referenced_names(self) -> set[str]:
        names: set[str] = set()
        for node in self.walk():
            names |= node.own_names()
        return names


@dataclass(eq=False)
class Name(Expr):
    ident: str

    def own_names(self) -> frozenset[str]:
        return frozenset((self.ident,))


@dataclass(eq=False)
class StringLit(Expr):
    value: str


@dataclass(eq=False)
class Literal(Expr):
    text: str


@dataclass(eq=False)
class New(Expr):
    type_name: str
    args: list[Expr] = field(default_factory=list)

    def children(self) -> tuple[Expr, ...]:
        return tuple(self.args)


@dataclass(eq=False)
class Call(Expr):
    receiver: Expr | None
    method: str
    args: list[Expr] = field(default_factory=list)

    def children(self) -> tuple[Expr, ...]:
        base = (self.receiver,) if self.receiver is not None else ()
        return base + tuple(self.args)


@dataclass(eq=False)
class FieldAccess(Expr):
    receiver: Expr
    fld: str

    def children(self) -> tuple[Expr, ...]:
        return (self.receiver,)


@dataclass(eq=False)
class Cast(Expr):
    type_name: str
    expr: Expr

    def children(self) -> tuple[Expr, ...]:
        return (self.expr,)


@dataclass(eq=False)
class Assign(Expr):
    """Simple assignment; compound forms fold the target into the value."""

    target: Expr
    value: Expr

    def children(self) -> tuple[Expr, ...]:
        return (self.target, self.value)


@dataclass(eq=False)
class OtherExpr(Expr):
    """Opaque expression region keeping its identifier tokens conservatively."""

    text: str
    names: frozenset[str] = frozenset()

    def own_names(self) -> frozenset[str]:
        return self.names


# ---------------------------------------------------------------------------
# statements


@dataclass(eq=False)
class Statement:
    line: int
    end_line: int
    raw: str

    def referenced_names(self) -> set[str]:
        return set()


@dataclass(eq=False)
class LocalDecl(Statement):
    type_name: str = ""
    var: str = ""
    init: Expr | None = None

    def referenced_names(self) -> set[str]:
        return self.init.referenced_names() if self.init is not None else set()


@dataclass(eq=False)
class ExprStmt(Statement):
    expr: Expr = None  # type: ignore[assignment]

    def referenced_names(self) -> set[str]:
        return self.expr.referenced_names()


@dataclass(eq=False)
class Return(Statement):
    expr: Expr | None = None

    def referenced_names(self) -> set[str]:
        return self.expr.referenced_names() if self.expr is not None else set()


@dataclass(eq=False)
class Other(Statement):
    """Opaque statement (control header, junk run, unmodeled construct)."""

    children: list[Statement] = field(default_factory=list)


# ---------------------------------------------------------------------------
# declarations


@dataclass(eq=False)
class MethodDecl:
    name: str
    params: list[tuple[str, str]]
    return_type: str | None
    body: list[Statement]
    decl_line: int
    end_line: int


@dataclass(eq=False)
class ClassDecl:
    name: str
    decl_line: int
    methods: list[MethodDecl] = field(default_factory=list)
    fields: list[Statement] = field(default_factory=list)
    nested: list[ClassDecl] = field(default_factory=list)


@dataclass
class SourceFile:
    path: str
    app_id: str
    text: str
    decode_errors: bool = False

    @classmethod
    def from_path(cls, path: str | Path, app_id: str | None = None) -> "SourceFile":
        p = Path(path)
        data = p.read_bytes()
        decode_errors = False
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            text = data.decode("utf-8", errors="replace")
            decode_errors = True
        if app_id is None:
            app_id = p.parent.name
        return cls(path=str(p), app_id=app_id, text=text, decode_errors=decode_errors)


@dataclass(eq=False)
class ParsedFile:
    source: SourceFile
    classes: list[ClassDecl]
    parse_diagnostics: list[Diagnostic]

    def iter_classes(self) -> Iterator[ClassDecl]:
        stack = list(self.classes)
        while stack:
            cls = stack.pop(0)
            yield cls
            stack = cls.nested + stack

    def iter_methods(self) -> Iterator[MethodDecl]:
        for cls in self.iter_classes():
            yield from cls.methods

    def method_table(self) -> dict[str, MethodDecl]:
        """Map method name to its first declaration anywhere in the file."""
        table: dict[str, MethodDecl] = {}
        for method in self.iter_methods():
            table.setdefault(method.name, method)
        return table


def iter_statements(stmts: Iterable[Statement]) -> Iterator[Statement]:
    """Flatten a statement list depth-first, headers before their children."""
    for stmt in stmts:
        yield stmt
        if isinstance(stmt, Other) and stmt.children:
            yield from iter_statements(stmt.children)


def simple_type_name(type_name: str) -> str:
    """Reduce a type reference to its simple name: a.b.C<D>[] -> C."""
    name = type_name.strip()
    depth = 0
    bare = []
    for c in name:
        if c == "<":
            depth += 1
        elif c == ">":
            depth = max(0, depth - 1)
        elif depth == 0:
            bare.append(c)
    name = "".join(bare).replace("[", "").replace("]", "").strip()
    return name.rsplit(".", 1)[-1]


def parse_file(source: SourceFile) -> ParsedFile:
    """Parse a source file; never raises, degrades to diagnostics instead."""
    parser = _Parser(source.text)
    classes = parser.parse_compilation_unit()
    diagnostics = list(parser.diagnostics)
    if source.decode_errors:
        diagnostics.insert(0, (1, "invalid UTF-8 byte sequences replaced"))
    if not classes:
        diagnostics.append((1, "no class declaration recognized"))
    return ParsedFile(source=source, classes=classes, parse_diagnostics=diagnostics)


# ---------------------------------------------------------------------------
# parser internals


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []
        self._junk_run = False

    # --- token helpers

    def peek(self, off: int = 0) -> Token | None:
        idx = self.pos + off
        return self.tokens[idx] if idx < len(self.tokens) else None

    def at_op(self, lexeme: str, off: int = 0) -> bool:
        tok = self.peek(off)
        return tok is not None and tok.kind is TokenKind.OP and tok.lexeme == lexeme

    def at_keyword(self, word: str, off: int = 0) -> bool:
        tok = self.peek(off)
        return tok is not None and tok.kind is TokenKind.KEYWORD and tok.lexeme == word

    def advance(self) -> Token | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def accept_op(self, lexeme: str) -> bool:
        if self.at_op(lexeme):
            self.pos += 1
            return True
        return False

    def diag(self, line: int, message: str) -> None:
        self.diagnostics.append((line, message))

    def raw_between(self, start_idx: int, end_idx: int) -> str:
        if start_idx >= end_idx or start_idx >= len(self.tokens):
            return ""
        first = self.tokens[start_idx]
        last = self.tokens[min(end_idx, len(self.tokens)) - 1]
        return self.text[first.start:last.end]

    def end_line_of(self, start_idx: int, fallback: int) -> int:
        if self.pos > start_idx and self.pos - 1 < len(self.tokens):
            return self.tokens[self.pos - 1].line
        return fallback

    def skip_balanced(self, open_op: str, close_op: str) -> None:
        """Consume from an opening bracket through its matching close."""
        depth = 0
        while True:
            tok = self.advance()
            if tok is None:
                return
            if tok.kind is not TokenKind.OP:
                continue
            if tok.lexeme == open_op:
                depth += 1
            elif tok.lexeme == close_op:
                depth -= 1
                if depth <= 0:
                    return

    def consume_to_semicolon(self) -> None:
        """Consume tokens through the next ';' at bracket depth zero.

        Stops before a '}' at depth zero so a broken statement cannot eat
        the enclosing block.
        """
        depth = 0
        while True:
            tok = self.peek()
            if tok is None:
                return
            if tok.kind is TokenKind.OP:
                if tok.lexeme in "([{":
                    depth += 1
                elif tok.lexeme in ")]}":
                    if tok.lexeme == "}" and depth == 0:
                        return
                    depth = max(0, depth - 1)
                elif tok.lexeme == ";" and depth == 0:
                    self.advance()
                    return
            self.advance()

    def ident_names_between(self, start_idx: int, end_idx: int) -> frozenset[str]:
        return frozenset(
            t.lexeme
            for t in self.tokens[start_idx:end_idx]
            if t.kind is TokenKind.IDENT
        )

    # --- compilation unit

    def parse_compilation_unit(self) -> list[ClassDecl]:
        classes: list[ClassDecl] = []
        while self.peek() is not None:
            if self.at_keyword("package") or self.at_keyword("import"):
                self.advance()
                self.consume_to_semicolon()
                continue
            if self.at_op("@"):
                self.skip_annotation()
                continue
            tok = self.peek()
            if tok.kind is TokenKind.KEYWORD and tok.lexeme in _MODIFIERS:
                self.advance()
                continue
            if tok.kind is TokenKind.KEYWORD and tok.lexeme in ("class", "interface", "enum"):
                cls = self.parse_class()
                if cls is not None:
                    classes.append(cls)
                continue
            if self.at_op(";"):
                self.advance()
                continue
            if not self._junk_run:
                self.diag(tok.line, "unrecognized top-level content skipped")
                self._junk_run = True
            self.advance()
        return classes

    def skip_annotation(self) -> None:
        self.advance()  # '@'
        while self.peek() is not None and self.peek().kind in (TokenKind.IDENT, TokenKind.KEYWORD):
            self.advance()
            if not self.accept_op("."):
                break
        if self.at_op("("):
            self.skip_balanced("(", ")")

    def parse_class(self) -> ClassDecl | None:
        decl_tok = self.advance()  # class / interface / enum
        self._junk_run = False
        name_tok = self.peek()
        if name_tok is None or name_tok.kind is not TokenKind.IDENT:
            self.diag(decl_tok.line, "class declaration without a name skipped")
            return None
        self.advance()
        # skip type parameters and extends/implements clauses up to the body
        while self.peek() is not None and not self.at_op("{"):
            if self.at_op("<"):
                if not self.skip_generic_args():
                    self.advance()
            elif self.at_op(";"):  # e.g. stub declarations
                self.advance()
                return ClassDecl(name=name_tok.lexeme, decl_line=decl_tok.line)
            else:
                self.advance()
        if not self.accept_op("{"):
            return ClassDecl(name=name_tok.lexeme, decl_line=decl_tok.line)
        cls = ClassDecl(name=name_tok.lexeme, decl_line=decl_tok.line)
        self.parse_class_body(cls)
        return cls

    def parse_class_body(self, cls: ClassDecl) -> None:
        while True:
            tok = self.peek()
            if tok is None:
                return
            if self.at_op("}"):
                self.advance()
                return
            if self.at_op(";"):
                self.advance()
                continue
            if self.at_op("@"):
                self.skip_annotation()
                continue
            if tok.kind is TokenKind.KEYWORD and tok.lexeme in _MODIFIERS:
                self.advance()
                continue
            if tok.kind is TokenKind.KEYWORD and tok.lexeme in ("class", "interface", "enum"):
                nested = self.parse_class()
                if nested is not None:
                    cls.nested.append(nested)
                continue
            if self.at_op("{"):
                # instance / static initializer block: out of the subset
                start = self.pos
                self.skip_balanced("{", "}")
                raw = self.raw_between(start, self.pos)
                cls.fields.append(Other(tok.line, self.end_line_of(start, tok.line), raw))
                self.diag(tok.line, "initializer block kept as opaque member")
                continue
            if self.at_op("<"):
                if not self.skip_generic_args():  # generic method type params
                    self.advance()
                continue
            member = self.parse_member(cls.name)
            if member is None:
                continue
            if isinstance(member, MethodDecl):
                cls.methods.append(member)
            else:
                cls.fields.append(member)

    def parse_member(self, class_name: str) -> MethodDecl | Statement | None:
        start = self.pos
        tok = self.peek()
        # constructor: ClassName (
        if (
            tok is not None
            and tok.kind is TokenKind.IDENT
            and tok.lexeme == class_name
            and self.at_op("(", 1)
        ):
            self.advance()
            return self.parse_method(class_name, None, tok.line, start)
        type_name = self.parse_type_ref()
        name_tok = self.peek()
        if type_name is not None and name_tok is not None and name_tok.kind is TokenKind.IDENT:
            self.advance()
            if self.at_op("("):
                return self.parse_method(name_tok.lexeme, type_name, tok.line, start)
            if self.at_op("=") or self.at_op(";") or self.at_op(","):
                return self.parse_field(tok, start, type_name, name_tok.lexeme)
        # unrecognized member: recover to the next ';' or '}' at depth zero
        self.pos = start
        self.diag(tok.line, "unrecognized class member skipped")
        self.consume_to_semicolon()
        if self.pos == start:  # stuck right before '}' or EOF
            self.advance()
        raw = self.raw_between(start, self.pos)
        return Other(tok.line, self.end_line_of(start, tok.line), raw)

    def parse_field(
        self, first: Token, start: int, type_name: str, var: str
    ) -> Statement:
        init: Expr | None = None
        if self.accept_op("="):
            init_start = self.pos
            init = self.parse_expression()
            if init is None:
                self.consume_to_semicolon()
                raw = self.raw_between(start, self.pos)
                return Other(first.line, self.end_line_of(start, first.line), raw)
            if not self.at_op(";"):
                # multi-declarator or trailing construct: keep tokens, degrade
                self.consume_to_semicolon()
                names = self.ident_names_between(init_start, self.pos)
                init = OtherExpr(self.raw_between(init_start, self.pos), names)
        self.accept_op(";") or self.accept_op(",")
        raw = self.raw_between(start, self.pos)
        return LocalDecl(
            first.line, self.end_line_of(start, first.line), raw,
            type_name=type_name, var=var, init=init,
        )

    def parse_type_ref(self) -> str | None:
        tok = self.peek()
        if tok is None:
            return None
        parts: list[str] = []
        if tok.kind is TokenKind.KEYWORD and tok.lexeme in _PRIMITIVES:
            self.advance()
            parts.append(tok.lexeme)
        elif tok.kind is TokenKind.IDENT:
            self.advance()
            parts.append(tok.lexeme)
            while self.at_op(".") and self.peek(1) is not None and self.peek(1).kind is TokenKind.IDENT:
                self.advance()
                parts.append(".")
                parts.append(self.advance().lexeme)
        else:
            return None
        if self.at_op("<"):
            start = self.pos
            if self.skip_generic_args():
                parts.append(self.raw_between(start, self.pos))
        while self.at_op("[") and self.at_op("]", 1):
            self.advance()
            self.advance()
            parts.append("[]")
        return "".join(parts)

    def skip_generic_args(self) -> bool:
        """Consume '<...>' type arguments; False (no movement) if the '<'
        cannot be a generic bracket (no close before ; { } ( ) or '=')."""
        depth = 0
        idx = self.pos
        steps = 0
        while idx < len(self.tokens) and steps < 64:
            t = self.tokens[idx]
            if t.kind is TokenKind.OP:
                lex = t.lexeme
                if lex == "<":
                    depth += 1
                elif lex == ">":
                    depth -= 1
                elif lex == ">>":
                    depth -= 2
                elif lex == ">>>":
                    depth -= 3
                elif lex in (";", "{", "}", "(", ")") or lex in _ASSIGN_OPS:
                    return False
                if depth <= 0:
                    self.pos = idx + 1
                    return True
            idx += 1
            steps += 1
        return False

    def parse_method(
        self, name: str, return_type: str | None, decl_line: int, start: int
    ) -> MethodDecl:
        params = self.parse_params()
        while self.peek() is not None and not self.at_op("{") and not self.at_op(";"):
            self.advance()  # throws clause
        body: list[Statement] = []
        if self.accept_op("{"):
            body = self.parse_block()
        else:
            self.accept_op(";")
        return MethodDecl(
            name=name,
            params=params,
            return_type=return_type,
            body=body,
            decl_line=decl_line,
            end_line=self.end_line_of(start, decl_line),
        )

    def parse_params(self) -> list[tuple[str, str]]:
        params: list[tuple[str, str]] = []
        if not self.accept_op("("):
            return params
        while self.peek() is not None and not self.at_op(")"):
            if self.at_op("@"):
                self.skip_annotation()
                continue
            if self.at_keyword("final"):
                self.advance()
                continue
            type_name = self.parse_type_ref()
            if type_name is None:
                self.advance()
                continue
            if self.at_op(".") and self.at_op(".", 1) and self.at_op(".", 2):
                self.advance(); self.advance(); self.advance()  # varargs
                type_name += "[]"
            name_tok = self.peek()
            if name_tok is not None and name_tok.kind is TokenKind.IDENT:
                self.advance()
                params.append((type_name, name_tok.lexeme))
            self.accept_op(",")
        self.accept_op(")")
        return params

    # --- statements

    def parse_block(self) -> list[Statement]:
        """Parse statements until the matching '}' (already consumed '{')."""
        stmts: list[Statement] = []
        while True:
            tok = self.peek()
            if tok is None:
                return stmts
            if self.at_op("}"):
                self.advance()
                return stmts
            before = self.pos
            stmt = self.parse_statement()
            if stmt is not None:
                stmts.append(stmt)
            if self.pos == before:  # defensive: never loop without progress
                bad = self.advance()
                self.diag(bad.line, f"stray token {bad.lexeme!r} skipped")

    def parse_statement(self) -> Statement | None:
        tok = self.peek()
        if tok is None:
            return None
        if self.at_op(";"):
            self.advance()
            return None
        if self.at_op("{"):
            self.advance()
            children = self.parse_block()
            end = children[-1].end_line if children else tok.line
            return Other(tok.line, end, "{", children=children)
        if tok.kind is TokenKind.KEYWORD:
            word = tok.lexeme
            if word == "return":
                return self.parse_return()
            if word in _CONTROL_WITH_PARENS or word in ("try", "else", "do", "finally"):
                return self.parse_control(word)
            if word in ("case", "default"):
                return self.parse_case_label(word)
            if word in ("break", "continue", "throw", "assert"):
                return self.parse_opaque_simple(word)
            if word in ("class", "interface", "enum"):
                # local class: out of the subset, consume its whole body
                start = self.pos
                nested = self.parse_class()
                raw = self.raw_between(start, self.pos)
                self.diag(tok.line, "local class kept as opaque statement")
                del nested
                return Other(tok.line, self.end_line_of(start, tok.line), raw)
        # loop label: IDENT ':' not part of an expression
        if (
            tok.kind is TokenKind.IDENT
            and self.at_op(":", 1)
            and not self.at_op(":", 2)
        ):
            self.advance()
            self.advance()
            self.diag(tok.line, "statement label kept as opaque statement")
            return Other(tok.line, tok.line, tok.lexeme + ":")
        return self.parse_simple_statement()

    def parse_return(self) -> Statement:
        start = self.pos
        tok = self.advance()
        expr: Expr | None = None
        if not self.at_op(";") and not self.at_op("}"):
            expr = self.parse_expression()
            if expr is None or not self.at_op(";"):
                expr_start = start + 1
                self.consume_to_semicolon()
                names = self.ident_names_between(expr_start, self.pos)
                expr = OtherExpr(self.raw_between(expr_start, self.pos), names)
                raw = self.raw_between(start, self.pos)
                return Return(tok.line, self.end_line_of(start, tok.line), raw, expr=expr)
        self.accept_op(";")
        raw = self.raw_between(start, self.pos)
        return Return(tok.line, self.end_line_of(start, tok.line), raw, expr=expr)

    def parse_control(self, word: str) -> Statement:
        start = self.pos
        tok = self.advance()
        if self.at_op("("):
            self.skip_balanced("(", ")")
        header_raw = self.raw_between(start, self.pos)
        children: list[Statement] = []
        if self.accept_op("{"):
            children = self.parse_block()
        elif word != "switch" and not self.at_op("}"):
            child = self.parse_statement()
            if child is not None:
                children = [child]
        end = children[-1].end_line if children else self.end_line_of(start, tok.line)
        self.diag(tok.line, f"'{word}' header kept as opaque statement")
        return Other(tok.line, end, header_raw, children=children)

    def parse_case_label(self, word: str) -> Statement:
        start = self.pos
        tok = self.advance()
        depth = 0
        while self.peek() is not None:
            if self.at_op("(") or self.at_op("["):
                depth += 1
            elif self.at_op(")") or self.at_op("]"):
                depth -= 1
            elif depth == 0 and (self.at_op(":") or self.at_op("}")):
                break
            self.advance()
        self.accept_op(":")
        raw = self.raw_between(start, self.pos)
        self.diag(tok.line, f"'{word}' label kept as opaque statement")
        return Other(tok.line, self.end_line_of(start, tok.line), raw)

    def parse_opaque_simple(self, word: str) -> Statement:
        start = self.pos
        tok = self.advance()
        self.consume_to_semicolon()
        raw = self.raw_between(start, self.pos)
        self.diag(tok.line, f"'{word}' statement kept as opaque statement")
        return Other(tok.line, self.end_line_of(start, tok.line), raw)

    def parse_simple_statement(self) -> Statement:
        start = self.pos
        tok = self.peek()
        decl = self.try_parse_local_decl(start)
        if decl is not None:
            return decl
        expr = self.parse_expression()
        if expr is not None and self.at_op(";"):
            self.advance()
            raw = self.raw_between(start, self.pos)
            return ExprStmt(tok.line, self.end_line_of(start, tok.line), raw, expr=expr)
        # could not parse cleanly: consume the rest of the statement.
        # Statement-level opaque regions contribute no referenced names.
        self.pos = start
        self.consume_to_semicolon()
        if self.pos == start:
            self.advance()
        raw = self.raw_between(start, self.pos)
        self.diag(tok.line, "statement outside the supported subset kept opaque")
        return Other(tok.line, self.end_line_of(start, tok.line), raw)

    def try_parse_local_decl(self, start: int) -> Statement | None:
        tok = self.peek()
        if self.at_keyword("final"):
            self.advance()
            tok = self.peek()
        type_name = self.parse_type_ref()
        if type_name is None:
            self.pos = start
            return None
        name_tok = self.peek()
        if name_tok is None or name_tok.kind is not TokenKind.IDENT:
            self.pos = start
            return None
        self.advance()
        if self.at_op(";"):
            self.advance()
            raw = self.raw_between(start, self.pos)
            return LocalDecl(
                tok.line, self.end_line_of(start, tok.line), raw,
                type_name=type_name, var=name_tok.lexeme, init=None,
            )
        if not self.at_op("="):
            self.pos = start
            return None
        self.advance()
        init = self.parse_expression()
        if init is None:
            self.pos = start
            return None
        if self.at_op(";"):
            self.advance()
            raw = self.raw_between(start, self.pos)
            return LocalDecl(
                tok.line, self.end_line_of(start, tok.line), raw,
                type_name=type_name, var=name_tok.lexeme, init=init,
            )
        if self.at_op(","):
            # multiple declarators in one statement: out of the subset
            self.consume_to_semicolon()
            raw = self.raw_between(start, self.pos)
            self.diag(tok.line, "multi-variable declaration kept as opaque statement")
            return Other(tok.line, self.end_line_of(start, tok.line), raw)
        self.pos = start
        return None

    # --- expressions

    def parse_expression(self) -> Expr | None:
        left = self.parse_unary()
        if left is None:
            return None
        tok = self.peek()
        if tok is not None and tok.kind is TokenKind.OP and tok.lexeme in _ASSIGN_OPS:
            op = tok.lexeme
            self.advance()
            right = self.parse_expression()
            if right is None:
                right = OtherExpr("", frozenset())
            if op == "=":
                return Assign(target=left, value=right)
            folded = OtherExpr(
                op,
                frozenset(left.referenced_names() | right.referenced_names()),
            )
            return Assign(target=left, value=folded)
        return self.parse_binary_tail(left)

    def parse_binary_tail(self, left: Expr) -> Expr:
        names: set[str] = set()
        merged = False
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok.kind is TokenKind.KEYWORD and tok.lexeme == "instanceof":
                self.advance()
                self.parse_type_ref()  # type test adds no variable names
                merged = True
                continue
            if tok.kind is not TokenKind.OP or tok.lexeme not in _BINARY_OPS:
                break
            self.advance()
            merged = True
            operand = self.parse_unary()
            if operand is None:
                break
            names |= operand.referenced_names()
        if not merged:
            return left
        return OtherExpr("<expr>", frozenset(left.referenced_names() | names))

    def parse_unary(self) -> Expr | None:
        tok = self.peek()
        if tok is None:
            return None
        if tok.kind is TokenKind.OP and tok.lexeme in ("!", "~", "+", "-", "++", "--"):
            self.advance()
            operand = self.parse_unary()
            if operand is None:
                return None
            return OtherExpr(tok.lexeme, frozenset(operand.referenced_names()))
        if tok.kind is TokenKind.OP and tok.lexeme == "(":
            cast = self.try_parse_cast()
            if cast is not None:
                return cast
            lam = self.try_parse_lambda()
            if lam is not None:
                return lam
            self.advance()
            inner = self.parse_expression()
            if inner is None:
                inner = self.consume_opaque_region(")")
            else:
                self.accept_op(")")
            return self.parse_postfix(inner)
        return self.parse_primary()

    def try_parse_cast(self) -> Expr | None:
        start = self.pos
        if not self.accept_op("("):
            return None
        type_name = self.parse_type_ref()
        if type_name is None or not self.at_op(")"):
            self.pos = start
            return None
        nxt = self.peek(1)
        if nxt is None or not self._starts_primary(nxt):
            self.pos = start
            return None
        self.advance()  # ')'
        inner = self.parse_unary()
        if inner is None:
            self.pos = start
            return None
        return self.parse_postfix(Cast(type_name=type_name, expr=inner))

    def _starts_primary(self, tok: Token) -> bool:
        if tok.kind in (TokenKind.IDENT, TokenKind.NUMBER, TokenKind.STRING, TokenKind.CHAR):
            return True
        if tok.kind is TokenKind.KEYWORD:
            return tok.lexeme in ("new", "this", "super", "true", "false", "null")
        return tok.kind is TokenKind.OP and tok.lexeme == "("

    def try_parse_lambda(self) -> Expr | None:
        start = self.pos
        depth = 0
        idx = self.pos
        while idx < len(self.tokens):
            t = self.tokens[idx]
            if t.kind is TokenKind.OP:
                if t.lexeme == "(":
                    depth += 1
                elif t.lexeme == ")":
                    depth -= 1
                    if depth == 0:
                        break
            idx += 1
        after = self.tokens[idx + 1] if idx + 1 < len(self.tokens) else None
        if after is None or after.kind is not TokenKind.OP or after.lexeme != "->":
            return None
        self.pos = idx + 2  # past '->'
        return self.consume_lambda_body(start)

    def consume_lambda_body(self, start: int) -> Expr:
        line = self.tokens[start].line if start < len(self.tokens) else 1
        if self.at_op("{"):
            self.skip_balanced("{", "}")
        else:
            depth = 0
            while self.peek() is not None:
                if self.at_op("(") or self.at_op("["):
                    depth += 1
                elif self.at_op(")") or self.at_op("]"):
                    if depth == 0:
                        break
                    depth -= 1
                elif depth == 0 and (self.at_op(",") or self.at_op(";")):
                    break
                self.advance()
        self.diag(line, "lambda kept as opaque expression")
        names = self.ident_names_between(start, self.pos)
        return OtherExpr(self.raw_between(start, self.pos), names)

    def consume_opaque_region(self, close_op: str) -> Expr:
        """Consume junk up to (and including) close_op at depth zero."""
        start = self.pos
        depth = 0
        while self.peek() is not None:
            if self.at_op("(") or self.at_op("[") or self.at_op("{"):
                depth += 1
            elif self.at_op(")") or self.at_op("]") or self.at_op("}"):
                if depth == 0:
                    if self.at_op(close_op):
                        self.advance()
                    break
                depth -= 1
            elif depth == 0 and (self.at_op(",") or self.at_op(";")):
                break
            self.advance()
        names = self.ident_names_between(start, self.pos)
        return OtherExpr(self.raw_between(start, self.pos), names)

    def parse_primary(self) -> Expr | None:
        tok = self.peek()
        if tok is None:
            return None
        if tok.kind is TokenKind.STRING:
            self.advance()
            return self.parse_postfix(StringLit(value=tok.lexeme.strip('"')))
        if tok.kind in (TokenKind.NUMBER, TokenKind.CHAR):
            self.advance()
            return self.parse_postfix(Literal(text=tok.lexeme))
        if tok.kind is TokenKind.KEYWORD:
            if tok.lexeme in ("this", "super") and self.at_op("(", 1):
                self.advance()
                args = self.parse_args()
                return self.parse_postfix(Call(receiver=None, method=tok.lexeme, args=args))
            if tok.lexeme in ("true", "false", "null", "this", "super"):
                self.advance()
                return self.parse_postfix(Literal(text=tok.lexeme))
            if tok.lexeme == "new":
                return self.parse_new()
            if tok.lexeme in _PRIMITIVES:
                # e.g. int.class, boolean[].class
                self.advance()
                return self.parse_postfix(Literal(text=tok.lexeme))
            return None
        if tok.kind is TokenKind.IDENT:
            if self.at_op("->", 1):
                start = self.pos
                self.pos += 2
                return self.consume_lambda_body(start)
            self.advance()
            if self.at_op("("):
                args = self.parse_args()
                return self.parse_postfix(Call(receiver=None, method=tok.lexeme, args=args))
            return self.parse_postfix(Name(ident=tok.lexeme))
        return None

    def parse_new(self) -> Expr | None:
        new_tok = self.advance()
        type_name = self.parse_type_ref()
        if type_name is None:
            return OtherExpr("new", frozenset())
        if self.at_op("("):
            args = self.parse_args()
            node: Expr = New(type_name=type_name, args=args)
            if self.at_op("{"):
                start = self.pos
                self.skip_balanced("{", "}")
                self.diag(new_tok.line, "anonymous class body kept opaque")
                del start
            return self.parse_postfix(node)
        if self.at_op("[") or self.at_op("{"):
            start = self.pos
            while self.at_op("["):
                self.skip_balanced("[", "]")
            if self.at_op("{"):
                self.skip_balanced("{", "}")
            names = self.ident_names_between(start, self.pos)
            return self.parse_postfix(OtherExpr("new " + type_name, names))
        return OtherExpr("new " + type_name, frozenset())

    def parse_args(self) -> list[Expr]:
        args: list[Expr] = []
        self.accept_op("(")
        while self.peek() is not None and not self.at_op(")"):
            arg = self.parse_expression()
            if arg is None:
                arg = self.consume_opaque_region(")")
                args.append(arg)
                break
            args.append(arg)
            if not self.accept_op(","):
                break
        self.accept_op(")")
        return args

    def parse_postfix(self, base: Expr) -> Expr:
        node = base
        while True:
            if self.at_op(".") :
                nxt = self.peek(1)
                if nxt is None:
                    self.advance()
                    return node
                if nxt.kind is TokenKind.IDENT:
                    if self.at_op("(", 2):
                        self.advance()
                        name = self.advance().lexeme
                        args = self.parse_args()
                        node = Call(receiver=node, method=name, args=args)
                        continue
                    self.advance()
                    fld = self.advance().lexeme
                    node = FieldAccess(receiver=node, fld=fld)
                    continue
                if nxt.kind is TokenKind.KEYWORD and nxt.lexeme in ("class", "this", "new"):
                    self.advance()
                    kw = self.advance().lexeme
                    node = FieldAccess(receiver=node, fld=kw)
                    continue
                self.advance()
                return node
            if self.at_op("::"):
                self.advance()
                if self.peek() is not None and self.peek().kind in (TokenKind.IDENT, TokenKind.KEYWORD):
                    self.advance()
                node = OtherExpr("::", frozenset(node.referenced_names()))
                continue
            if self.at_op("["):
                start = self.pos
                self.skip_balanced("[", "]")
                names = self.ident_names_between(start, self.pos)
                node = OtherExpr("[]", frozenset(node.referenced_names() | names))
                continue
            if self.at_op("++") or self.at_op("--"):
                self.advance()
                node = OtherExpr("++", frozenset(node.referenced_names()))
                continue
            return node
