"""Pure-Python token scanner.

Reference implementation of the per-character scan loop. The compiled
backend (faultlint._scanner) is a line-for-line Cython port and must
produce identical output; tests compare the two when both are available.

scan() returns raw (kind, lexeme, line, column) tuples so the two
backends stay trivially comparable.
"""

from __future__ import annotations

from faultlint.tokens import (
    CHAR,
    IDENTIFIER,
    KEYWORD,
    KEYWORDS,
    LexError,
    NUMBER,
    ONE_CHAR_OPERATORS,
    OPERATOR,
    PUNCTUATOR,
    STRING,
    TWO_CHAR_OPERATORS,
)

_HEX_DIGITS = "0123456789abcdefABCDEF"
_NUM_SUFFIXES = "lLfFdD"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_" or ch == "$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch == "_" or ch == "$"


def scan(text: str) -> list[tuple[str, str, int, int]]:
    tokens: list[tuple[str, str, int, int]] = []
    n = len(text)
    pos = 0
    line = 1
    col = 1
    while pos < n:
        ch = text[pos]

        if ch == "\n":
            pos += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r\f\v":
            pos += 1
            col += 1
            continue

        if ch == "/" and pos + 1 < n and text[pos + 1] == "/":
            while pos < n and text[pos] != "\n":
                pos += 1
                col += 1
            continue

        if ch == "/" and pos + 1 < n and text[pos + 1] == "*":
            start_line, start_col = line, col
            pos += 2
            col += 2
            while True:
                if pos >= n:
                    raise LexError("unterminated block comment", start_line, start_col)
                if text[pos] == "*" and pos + 1 < n and text[pos + 1] == "/":
                    pos += 2
                    col += 2
                    break
                if text[pos] == "\n":
                    pos += 1
                    line += 1
                    col = 1
                else:
                    pos += 1
                    col += 1
            continue

        if ch == '"' or ch == "'":
            quote = ch
            start_line, start_col = line, col
            start_pos = pos
            pos += 1
            col += 1
            while True:
                if pos >= n or text[pos] == "\n":
                    kind = "string" if quote == '"' else "char"
                    raise LexError(f"unterminated {kind} literal", start_line, start_col)
                if text[pos] == "\\" and pos + 1 < n and text[pos + 1] != "\n":
                    pos += 2
                    col += 2
                    continue
                if text[pos] == quote:
                    pos += 1
                    col += 1
                    break
                pos += 1
                col += 1
            lexeme = text[start_pos:pos]
            tokens.append((STRING if quote == '"' else CHAR, lexeme, start_line, start_col))
            continue

        if ch.isdigit():
            start_pos = pos
            start_col = col
            if ch == "0" and pos + 1 < n and text[pos + 1] in "xX":
                pos += 2
                while pos < n and text[pos] in _HEX_DIGITS:
                    pos += 1
            else:
                while pos < n and text[pos].isdigit():
                    pos += 1
                if pos + 1 < n and text[pos] == "." and text[pos + 1].isdigit():
                    pos += 1
                    while pos < n and text[pos].isdigit():
                        pos += 1
                if pos < n and text[pos] in "eE":
                    mark = pos
                    pos += 1
                    if pos < n and text[pos] in "+-":
                        pos += 1
                    if pos < n and text[pos].isdigit():
                        while pos < n and text[pos].isdigit():
                            pos += 1
                    else:
                        pos = mark
            if pos < n and text[pos] in _NUM_SUFFIXES:
                pos += 1
            lexeme = text[start_pos:pos]
            tokens.append((NUMBER, lexeme, line, start_col))
            col += pos - start_pos
            continue

        if _is_ident_start(ch):
            start_pos = pos
            start_col = col
            pos += 1
            while pos < n and _is_ident_part(text[pos]):
                pos += 1
            lexeme = text[start_pos:pos]
            kind = KEYWORD if lexeme in KEYWORDS else IDENTIFIER
            tokens.append((kind, lexeme, line, start_col))
            col += pos - start_pos
            continue

        if pos + 1 < n:
            pair = text[pos:pos + 2]
            if pair in TWO_CHAR_OPERATORS:
                tokens.append((OPERATOR, pair, line, col))
                pos += 2
                col += 2
                continue

        if ch in ONE_CHAR_OPERATORS:
            tokens.append((OPERATOR, ch, line, col))
        else:
            # Anything else (including out-of-subset characters like '#')
            # becomes a one-character punctuator; the parser's recovery
            # deals with it.
            tokens.append((PUNCTUATOR, ch, line, col))
        pos += 1
        col += 1

    return tokens
