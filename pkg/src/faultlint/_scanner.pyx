# cython: language_level=3
"""Compiled token scanner.

Cython port of faultlint._scanner_py.scan; the two must produce identical
token streams and identical LexError positions on every input. Keep any
change here in lockstep with the pure version.
"""

from faultlint.tokens import (
    CHAR,
    IDENTIFIER,
    KEYWORD,
    KEYWORDS,
    LexError,
    NUMBER,
    OPERATOR,
    PUNCTUATOR,
    STRING,
    TWO_CHAR_OPERATORS,
)

cdef frozenset _KEYWORDS = KEYWORDS
cdef frozenset _TWO_CHAR = frozenset(TWO_CHAR_OPERATORS)

cdef str _KIND_KEYWORD = KEYWORD
cdef str _KIND_IDENTIFIER = IDENTIFIER
cdef str _KIND_STRING = STRING
cdef str _KIND_CHAR = CHAR
cdef str _KIND_NUMBER = NUMBER
cdef str _KIND_OPERATOR = OPERATOR
cdef str _KIND_PUNCTUATOR = PUNCTUATOR


cdef inline bint _is_ident_start(Py_UCS4 ch):
    return ch.isalpha() or ch == u"_" or ch == u"$"


cdef inline bint _is_ident_part(Py_UCS4 ch):
    return ch.isalnum() or ch == u"_" or ch == u"$"


cdef inline bint _is_hex_digit(Py_UCS4 ch):
    return (u"0" <= ch <= u"9") or (u"a" <= ch <= u"f") or (u"A" <= ch <= u"F")


cdef inline bint _is_num_suffix(Py_UCS4 ch):
    return ch == u"l" or ch == u"L" or ch == u"f" or ch == u"F" or ch == u"d" or ch == u"D"


def scan(str text):
    cdef list tokens = []
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t pos = 0
    cdef Py_ssize_t line = 1
    cdef Py_ssize_t col = 1
    cdef Py_ssize_t start_pos, start_line, start_col, mark
    cdef Py_UCS4 ch, quote
    cdef str lexeme, pair, kind_label

    while pos < n:
        ch = text[pos]

        if ch == u"\n":
            pos += 1
            line += 1
            col = 1
            continue
        if ch == u" " or ch == u"\t" or ch == u"\r" or ch == u"\f" or ch == u"\v":
            pos += 1
            col += 1
            continue

        if ch == u"/" and pos + 1 < n and text[pos + 1] == u"/":
            while pos < n and text[pos] != u"\n":
                pos += 1
                col += 1
            continue

        if ch == u"/" and pos + 1 < n and text[pos + 1] == u"*":
            start_line = line
            start_col = col
            pos += 2
            col += 2
            while True:
                if pos >= n:
                    raise LexError("unterminated block comment", start_line, start_col)
                if text[pos] == u"*" and pos + 1 < n and text[pos + 1] == u"/":
                    pos += 2
                    col += 2
                    break
                if text[pos] == u"\n":
                    pos += 1
                    line += 1
                    col = 1
                else:
                    pos += 1
                    col += 1
            continue

        if ch == u'"' or ch == u"'":
            quote = ch
            start_line = line
            start_col = col
            start_pos = pos
            pos += 1
            col += 1
            while True:
                if pos >= n or text[pos] == u"\n":
                    kind_label = "string" if quote == u'"' else "char"
                    raise LexError(
                        f"unterminated {kind_label} literal", start_line, start_col
                    )
                if text[pos] == u"\\" and pos + 1 < n and text[pos + 1] != u"\n":
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
            tokens.append((
                _KIND_STRING if quote == u'"' else _KIND_CHAR,
                lexeme, start_line, start_col,
            ))
            continue

        if ch.isdigit():
            start_pos = pos
            start_col = col
            if ch == u"0" and pos + 1 < n and (text[pos + 1] == u"x" or text[pos + 1] == u"X"):
                pos += 2
                while pos < n and _is_hex_digit(text[pos]):
                    pos += 1
            else:
                while pos < n and text[pos].isdigit():
                    pos += 1
                if pos + 1 < n and text[pos] == u"." and text[pos + 1].isdigit():
                    pos += 1
                    while pos < n and text[pos].isdigit():
                        pos += 1
                if pos < n and (text[pos] == u"e" or text[pos] == u"E"):
                    mark = pos
                    pos += 1
                    if pos < n and (text[pos] == u"+" or text[pos] == u"-"):
                        pos += 1
                    if pos < n and text[pos].isdigit():
                        while pos < n and text[pos].isdigit():
                            pos += 1
                    else:
                        pos = mark
            if pos < n and _is_num_suffix(text[pos]):
                pos += 1
            lexeme = text[start_pos:pos]
            tokens.append((_KIND_NUMBER, lexeme, line, start_col))
            col += pos - start_pos
            continue

        if _is_ident_start(ch):
            start_pos = pos
            start_col = col
            pos += 1
            while pos < n and _is_ident_part(text[pos]):
                pos += 1
            lexeme = text[start_pos:pos]
            tokens.append((
                _KIND_KEYWORD if lexeme in _KEYWORDS else _KIND_IDENTIFIER,
                lexeme, line, start_col,
            ))
            col += pos - start_pos
            continue

        if pos + 1 < n:
            pair = text[pos:pos + 2]
            if pair in _TWO_CHAR:
                tokens.append((_KIND_OPERATOR, pair, line, col))
                pos += 2
                col += 2
                continue

        if (ch == u"=" or ch == u"<" or ch == u">" or ch == u"+" or ch == u"-"
                or ch == u"*" or ch == u"/" or ch == u"%" or ch == u"!"
                or ch == u"&" or ch == u"|" or ch == u"^" or ch == u"~" or ch == u"?"):
            tokens.append((_KIND_OPERATOR, text[pos:pos + 1], line, col))
        else:
            tokens.append((_KIND_PUNCTUATOR, text[pos:pos + 1], line, col))
        pos += 1
        col += 1

    return tokens
