"""Tokenizer for decompiled Java sources.

Whitespace and comments are skipped; every other character belongs to some
token that remembers its line and character offset, so the original text can
always be reconstructed from the stream and every statement can be traced
back to an exact source line. Bytes that fit no token class are kept as
OTHER tokens instead of being dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

KEYWORDS = frozenset(
    {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "do", "double",
        "else", "enum", "extends", "final", "finally", "float", "for",
        "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private",
        "protected", "public", "return", "short", "static", "strictfp",
        "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while",
        "true", "false", "null",
    }
)

# Longest-match operator table; multi-character operators must come first.
_OPERATORS = (
    ">>>=", "<<=", ">>=", ">>>",
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->", "::",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "<", ">", "=", "+",
    "-", "*", "/", "%", "!", "&", "|", "^", "~", "?", ":", "@",
)

_IDENT_START = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")
_IDENT_PART = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")
_SPACE = frozenset(" \t\r\f\v")


class TokenKind(Enum):
    IDENT = "ident"
    KEYWORD = "keyword"
    NUMBER = "number"
    STRING = "string"
    CHAR = "char"
    OP = "op"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.lexeme)


def tokenize(text: str) -> list[Token]:
    """Split source text into tokens, skipping whitespace and comments."""
    tokens: list[Token] = []
    i = 0
    line = 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            continue
        if c in _SPACE:
            i += 1
            continue
        if c == "/" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "/":
                j = text.find("\n", i)
                i = n if j < 0 else j
                continue
            if nxt == "*":
                j = text.find("*/", i + 2)
                if j < 0:
                    line += text.count("\n", i)
                    i = n
                else:
                    line += text.count("\n", i, j)
                    i = j + 2
                continue
        if c in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_PART:
                j += 1
            word = text[i:j]
            kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.IDENT
            tokens.append(Token(kind, word, line, i))
            i = j
            continue
        if c in _DIGITS:
            i = _lex_number(text, i, line, tokens)
            continue
        if c == '"':
            i, line = _lex_quoted(text, i, line, '"', TokenKind.STRING, tokens)
            continue
        if c == "'":
            i, line = _lex_quoted(text, i, line, "'", TokenKind.CHAR, tokens)
            continue
        op = _match_operator(text, i)
        if op is not None:
            tokens.append(Token(TokenKind.OP, op, line, i))
            i += len(op)
            continue
        # Unrecognized bytes: keep a run of them as a single OTHER token.
        j = i + 1
        while j < n and not _is_token_start(text, j):
            j += 1
        tokens.append(Token(TokenKind.OTHER, text[i:j], line, i))
        i = j
    return tokens


def _is_token_start(text: str, i: int) -> bool:
    c = text[i]
    if c == "\n" or c in _SPACE or c in _IDENT_START or c in _DIGITS:
        return True
    if c in ('"', "'"):
        return True
    return _match_operator(text, i) is not None


def _match_operator(text: str, i: int) -> str | None:
    for op in _OPERATORS:
        if text.startswith(op, i):
            return op
    return None


def _lex_number(text: str, i: int, line: int, tokens: list[Token]) -> int:
    n = len(text)
    j = i + 1
    while j < n:
        c = text[j]
        if c in _IDENT_PART or c == ".":
            j += 1
        elif c in "+-" and text[j - 1] in "eEpP" and text[i] != "0":
            # exponent sign, e.g. 1.5e-3 (hex literals never reach here)
            j += 1
        else:
            break
    tokens.append(Token(TokenKind.NUMBER, text[i:j], line, i))
    return j


def _lex_quoted(
    text: str,
    i: int,
    line: int,
    quote: str,
    kind: TokenKind,
    tokens: list[Token],
) -> tuple[int, int]:
    n = len(text)
    j = i + 1
    while j < n:
        c = text[j]
        if c == "\\" and j + 1 < n:
            j += 2
            continue
        if c == quote:
            j += 1
            break
        if c == "\n":
            # unterminated literal: close it at end of line
            break
        j += 1
    tokens.append(Token(kind, text[i:j], line, i))
    return j, line
