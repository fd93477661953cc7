"""Brute-force references used to check the segmenter and the analyzer.

Nothing here goes through :mod:`wazn.segmenter`: decompositions are found
by plain nested loops over the inventories and the two incompatibility
tables are read directly, so agreement with the segmenter means something.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .lexicons import LexiconSet
from .scheme_matcher import apply_scheme

Decomposition = tuple[tuple[str, str, str], tuple[str, str, str]]


def brute_force_decompositions(token: str, lex: LexiconSet) -> set[Decomposition]:
    found = set()
    for proclitic in lex.proclitics:
        if not token.startswith(proclitic):
            continue
        for enclitic in lex.enclitics:
            if len(proclitic) + len(enclitic) >= len(token) or not token.endswith(enclitic):
                continue
            if proclitic + enclitic in lex.clitic_incompat:
                continue
            base1 = token[len(proclitic):len(token) - len(enclitic)]
            for prefix in lex.prefixes:
                for suffix in lex.suffixes:
                    if len(prefix) + len(suffix) >= len(base1):
                        continue
                    if not (base1.startswith(prefix) and base1.endswith(suffix)):
                        continue
                    if (prefix, suffix) in lex.affix_incompat:
                        continue
                    base = base1[len(prefix):len(base1) - len(suffix)]
                    found.add(((proclitic, base1, enclitic), (prefix, base, suffix)))
    return found


@dataclass
class OracleReport:
    token: str
    main_set: set = field(default_factory=set)
    oracle_set: set = field(default_factory=set)

    @property
    def missing(self) -> list:
        """Decompositions the oracle finds but the segmenter does not."""
        return sorted(self.oracle_set - self.main_set)

    @property
    def extra(self) -> list:
        return sorted(self.main_set - self.oracle_set)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


def compare(token: str, lex: LexiconSet) -> OracleReport:
    from .segmenter import enumerate_all

    main = {(tuple(c), tuple(a)) for c, a in enumerate_all(token, lex)}
    return OracleReport(token, main, brute_force_decompositions(token, lex))


class FuzzSample(NamedTuple):
    word: str
    root: str
    scheme: str
    # (proclitic, prefix, suffix, enclitic)
    affixes: tuple[str, str, str, str]


def fuzz_generate(lex: LexiconSet, seed: int, n: int) -> list[FuzzSample]:
    """Compose ``n`` inflected words from compatible clitics, affixes, roots and schemes.

    Draws whose word or base is listed whole in the stop, function or
    specific word lists are redrawn: the analyzer treats those surfaces as
    non-derived by design.
    """
    if n <= 0:
        return []
    roots = sorted(lex.roots)
    schemes = list(lex.schemes)
    if not roots or not schemes:
        raise ValueError("fuzzing needs at least one root and one scheme")
    clitics = [
        (p, e) for p in lex.proclitics for e in lex.enclitics if p + e not in lex.clitic_incompat
    ]
    affixes = [
        (p, s) for p in lex.prefixes for s in lex.suffixes if (p, s) not in lex.affix_incompat
    ]
    listed = set(lex.function_words) | set(lex.specific_words)
    whole = listed | set(lex.stop_words)

    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 100 * n:
            raise ValueError("lexicon cannot produce enough distinct analyzable words")
        root = rng.choice(roots)
        scheme = rng.choice(schemes)
        proclitic, enclitic = rng.choice(clitics)
        prefix, suffix = rng.choice(affixes)
        base = apply_scheme(root, scheme)
        word = proclitic + prefix + base + suffix + enclitic
        if word in whole or base in listed:
            continue
        out.append(FuzzSample(word, root, scheme.wazn, (proclitic, prefix, suffix, enclitic)))
    return out


def main(argv: list[str] | None = None) -> int:
    """Diff the segmenter against the brute-force oracle for each word given."""
    import argparse

    from .lexicons import load_lexicons, load_seed
    from .normalizer import normalize

    p = argparse.ArgumentParser(prog="python -m wazn.oracle", description=main.__doc__)
    p.add_argument("words", nargs="+")
    p.add_argument("--lexicons")
    args = p.parse_args(argv)
    lex = load_lexicons(args.lexicons) if args.lexicons else load_seed()
    status = 0
    for word in args.words:
        report = compare(normalize(word), lex)
        print(f"{report.token}\t{'ok' if report.ok else 'MISMATCH'}\t{len(report.oracle_set)}")
        for d in report.missing:
            print(f"  missing {d}")
        for d in report.extra:
            print(f"  extra   {d}")
        status |= not report.ok
    return status


if __name__ == "__main__":
    raise SystemExit(main())
