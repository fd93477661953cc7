"""Exhaustive two-layer stripping of clitics and inflectional affixes.

Nothing is committed greedily: a letter such as س may be a future-tense
proclitic or the first radical of سمع, so every split allowed by the
inventories and the compatibility tables is returned, and the scheme
matcher decides later which bases are real.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from .lexicons import LexiconSet


class CliticDecomposition(NamedTuple):
    proclitic: str
    base1: str
    enclitic: str


class AffixDecomposition(NamedTuple):
    prefix: str
    base: str
    suffix: str


def clitics_compatible(proclitic: str, enclitic: str, lex: LexiconSet) -> bool:
    # The table stores incompatible pairs as one fused string.
    return proclitic + enclitic not in lex.clitic_incompat


def affixes_compatible(prefix: str, suffix: str, lex: LexiconSet) -> bool:
    return (prefix, suffix) not in lex.affix_incompat


def _splits(
    word: str,
    lex: LexiconSet,
    heads: str,
    tails: str,
    compatible: Callable[[str, str, LexiconSet], bool],
) -> list[tuple[str, str, str]]:
    # Sorted longest stripping first, then longer head, then by string.
    keyed = []
    size = len(word)
    for head in lex.leading(word, heads):
        h = len(head)
        rest = word[h:]
        for tail in lex.trailing(rest, tails):
            t = len(tail)
            if h + t < size and compatible(head, tail, lex):
                keyed.append((-h - t, -h, head, tail, rest[: len(rest) - t]))
    keyed.sort()
    return [(head, mid, tail) for _, _, head, tail, mid in keyed]


def strip_clitics(token: str, lex: LexiconSet) -> list[CliticDecomposition]:
    """All proclitic + base1 + enclitic splits of ``token``.

    Longest stripping comes first; ties go to the longer proclitic and then
    to plain string order.  The unsplit token is always the last entry.
    """
    return [
        CliticDecomposition(*t)
        for t in _splits(token, lex, "proclitics", "enclitics", clitics_compatible)
    ]


def strip_affixes(base1: str, lex: LexiconSet) -> list[AffixDecomposition]:
    """All prefix + base + suffix splits of ``base1``, ordered like strip_clitics."""
    return [
        AffixDecomposition(*t)
        for t in _splits(base1, lex, "prefixes", "suffixes", affixes_compatible)
    ]


def enumerate_all(
    token: str, lex: LexiconSet
) -> list[tuple[CliticDecomposition, AffixDecomposition]]:
    return [
        (clitic, affix)
        for clitic in strip_clitics(token, lex)
        for affix in strip_affixes(clitic.base1, lex)
    ]
