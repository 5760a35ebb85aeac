"""Tokenizer entry point with backend selection.

Prefers the compiled scanner (faultlint._scanner, built from Cython) and
falls back to the pure-Python one when the extension is absent or when
FAULTLINT_PURE is set in the environment. Both backends implement the same
scan() contract and are checked for identical output in the test suite.
"""

from __future__ import annotations

import os

from faultlint import _scanner_py
from faultlint.tokens import LexError, Token

__all__ = ["tokenize", "LexError", "Token", "scanner_backend"]

if os.environ.get("FAULTLINT_PURE"):
    _scan = _scanner_py.scan
    _BACKEND = "python"
else:
    try:
        from faultlint import _scanner  # type: ignore[attr-defined]

        _scan = _scanner.scan
        _BACKEND = "c"
    except ImportError:
        _scan = _scanner_py.scan
        _BACKEND = "python"


def scanner_backend() -> str:
    """Name of the active scan loop: "c" (compiled) or "python"."""
    return _BACKEND


def tokenize(source_text: str) -> list[Token]:
    """Tokenize source text.

    Comments and whitespace are consumed but not emitted; string and char
    literals keep their quotes in the lexeme. Raises LexError (with line
    and column) on an unterminated string/char literal or block comment.
    """
    return [Token(*raw) for raw in _scan(source_text)]
