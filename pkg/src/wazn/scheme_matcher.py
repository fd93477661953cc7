"""Root and pattern matching against the scheme dictionary.

Positions in a scheme are 1-based, as in the dictionary file.  A base
matches a scheme when the lengths agree and the base carries the scheme's
own letters at every infix position; the remaining three letters, in
order, are the root.
"""

from __future__ import annotations

import functools
from operator import itemgetter
from typing import Callable, NamedTuple

from .lexicons import LexiconSet, SchemeEntry


class SchemeMatch(NamedTuple):
    scheme: SchemeEntry
    root: str
    base: str


@functools.lru_cache(maxsize=None)
def _root_slots(scheme: SchemeEntry) -> tuple[int, ...]:
    infix = set(scheme.infix_positions)
    return tuple(i for i in range(len(scheme.wazn)) if i + 1 not in infix)


def _no_letters(word: str) -> tuple:
    return ()


@functools.lru_cache(maxsize=None)
def _compiled(scheme: SchemeEntry) -> tuple[Callable[[str], object], object, Callable[[str], tuple]]:
    # (base -> its letters at the infix positions, the scheme's letters there,
    #  base -> its three root letters); the first two compare with ==
    fixed = [p - 1 for p in scheme.infix_positions]
    pick = itemgetter(*fixed) if fixed else _no_letters
    return pick, pick(scheme.wazn), itemgetter(*_root_slots(scheme))


def fixed_letters_match(base: str, scheme: SchemeEntry) -> bool:
    if len(base) != len(scheme.wazn):
        return False
    pick, letters, _ = _compiled(scheme)
    return pick(base) == letters


def extract_root(base: str, scheme: SchemeEntry) -> str:
    """Delete the infix-position letters of ``base``.

    >>> from wazn.lexicons import Category
    >>> extract_root("صالح", SchemeEntry("فاعل", (2,), Category.BOTH))
    'صلح'
    """
    if len(base) != len(scheme.wazn):
        raise ValueError(
            f"base {base!r} has length {len(base)}, scheme {scheme.wazn} has {len(scheme.wazn)}"
        )
    return "".join(base[i] for i in _root_slots(scheme))


def apply_scheme(root: str, scheme: SchemeEntry) -> str:
    """Interleave ``root`` into the root slots of ``scheme``."""
    if len(root) != 3:
        raise ValueError(f"root {root!r} is not triliteral")
    letters = list(scheme.wazn)
    for i, ch in zip(_root_slots(scheme), root):
        letters[i] = ch
    return "".join(letters)


def match_schemes(base: str, lex: LexiconSet) -> list[SchemeMatch]:
    """Schemes of the same length whose fixed letters and root both check out.

    Results follow the order of the scheme file.  A scheme that fits but
    yields a root missing from the root dictionary is dropped.
    """
    out = []
    roots = lex.roots
    for scheme, pick, letters, root_of in lex.derived("scheme_table", _scheme_table).get(len(base), ()):
        if pick(base) != letters:
            continue
        root = "".join(root_of(base))
        if root in roots:
            out.append(SchemeMatch(scheme, root, base))
    return out


def _scheme_table(lex: LexiconSet) -> dict[int, list[tuple]]:
    table: dict[int, list[tuple]] = {}
    for scheme in lex.schemes:
        table.setdefault(len(scheme.wazn), []).append((scheme, *_compiled(scheme)))
    return table
