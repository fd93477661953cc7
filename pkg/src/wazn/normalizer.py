"""Text normalization and tokenization for unvocalized Arabic.

Normalization is deliberately minimal: short vowels, tanwin, shadda, sukun
and the other Arabic combining marks are dropped, as is tatweel.  Hamza
carriers (أ إ آ ؤ ئ) and ta marbuta are left alone because the affix
inventories tell them apart.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

TATWEEL = "\u0640"

# Arabic combining marks: Quranic signs, harakat/tanwin/shadda/sukun and the
# extended marks up to U+065F, superscript alef, Quranic annotation marks.
_MARKS = re.compile(
    "[\u0610-\u061a\u064b-\u065f\u0670\u06d6-\u06dc\u06df-\u06e4"
    "\u06e7\u06e8\u06ea-\u06ed\u0640]"
)

# Hamza, the 28 letters and their carriers, up to and including yeh.
_ARABIC_LETTER = re.compile("[\u0621-\u063a\u0641-\u064a]")
_ARABIC_WORD = re.compile("[\u0621-\u063a\u0641-\u064a]+")

_WORD = re.compile(r"[\w\u0610-\u061a\u064b-\u065f\u0670\u06d6-\u06ed]+")
_SPACE = re.compile(r"\s+")


def normalize(raw: str) -> str:
    """Strip diacritics and tatweel from ``raw``.

    Input is composed to NFC first so that a decomposed alef + combining
    hamza ends up as the precomposed letter rather than a bare alef.

    >>> normalize("فَعَلَ")
    'فعل'
    >>> normalize("الـكـتـاب")
    'الكتاب'
    """
    text = unicodedata.normalize("NFC", raw)
    return unicodedata.normalize("NFC", _MARKS.sub("", text))


def is_arabic_word(text: str) -> bool:
    """True when ``text`` is non-empty and made only of Arabic letters."""
    return _ARABIC_WORD.fullmatch(text) is not None


def arabic_letters(text: str) -> str:
    return "".join(_ARABIC_LETTER.findall(text))


@dataclass(frozen=True)
class Token:
    raw: str
    normalized: str
    position: int
    arabic: bool = True
    offset: int = 0  # character offset of ``raw`` in the source text

    @classmethod
    def from_text(cls, text: str, position: int = 0) -> "Token":
        norm = normalize(text)
        return cls(text, norm, position, is_arabic_word(norm))


def tokenize(text: str, start: int = 0) -> list[Token]:
    """Split ``text`` into word and punctuation tokens.

    Word runs (letters, digits and their combining marks) become one token
    each; every other non-space character is a token of its own.  Runs that
    are not purely Arabic after normalization, digits or Latin letters for
    instance, are flagged ``arabic=False`` and left for the caller to pass
    through.  ``start`` is the position given to the first token, which lets
    a caller number tokens across several lines.
    """
    tokens = []
    pos = start
    i = 0
    n = len(text)
    while i < n:
        m = _SPACE.match(text, i)
        if m:
            i = m.end()
            continue
        m = _WORD.match(text, i)
        end = m.end() if m else i + 1
        raw = text[i:end]
        norm = normalize(raw)
        arabic = bool(m) and is_arabic_word(norm)
        tokens.append(Token(raw, norm, pos, arabic, i))
        pos += 1
        i = end
    return tokens
