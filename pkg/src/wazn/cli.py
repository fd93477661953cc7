"""Command-line front end: analyze a text stream token by token.

    wazn [--lexicons DIR] [--mode root|light|segment|full] [--format tsv|jsonl]
         [--drop-stop-words] [--all-candidates] [--stats] [INPUT]

Output is one line per token (one per candidate with --all-candidates) in
input order.  TSV columns::

    position [rank] raw normalized kind proclitic prefix stem suffix enclitic
    root scheme category class

``stem`` is the root in root mode for derived words and the base
otherwise.  --stats writes a JSON summary to stderr.  The lexicon directory
defaults to $WAZN_LEXICONS, then to the seed lexicon bundled with the
package.
"""

from __future__ import annotations

import argparse
import collections
import functools
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .analyzer import Analysis, AnalysisSet, Kind, analyze
from .lexicons import LexiconError, LexiconSet, load_lexicons, seed_directory
from .normalizer import Token, tokenize

ENV_LEXICONS = "WAZN_LEXICONS"
MODES = ("root", "light", "segment", "full")
FORMATS = ("tsv", "jsonl")

_TSV_ESCAPES = str.maketrans({"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"})


@dataclass(frozen=True)
class RunConfig:
    lexicon_dir: Path
    mode: str = "root"
    output_format: str = "tsv"
    drop_stop_words: bool = False
    all_candidates: bool = False
    input: Path | None = None  # None reads standard input
    stats: bool = False


def _stem(a: Analysis, mode: str) -> str:
    if mode == "root" and a.kind is Kind.DERIVED:
        return a.root
    return a.base


def _tsv(fields: Iterable) -> str:
    return "\t".join("" if f is None else str(f).translate(_TSV_ESCAPES) for f in fields)


def format_rows(aset: AnalysisSet, config: RunConfig) -> Iterator[str]:
    tok = aset.token
    ranked = enumerate(aset.candidates if config.all_candidates else aset.candidates[:1], 1)
    for n, a in ranked:
        if config.output_format == "jsonl":
            rec = {"position": tok.position}
            if config.all_candidates:
                rec["rank"] = n
            rec.update(raw=tok.raw, normalized=tok.normalized, stem=_stem(a, config.mode))
            rec.update(a.to_dict())
            yield json.dumps(rec, ensure_ascii=False)
        else:
            d = a.to_dict()
            lead = [tok.position, n] if config.all_candidates else [tok.position]
            yield _tsv(lead + [
                tok.raw, tok.normalized, d["kind"], a.proclitic, a.prefix,
                _stem(a, config.mode), a.suffix, a.enclitic, d["root"], d["scheme"],
                d["category"], d["successor_class"],
            ])


def _tokens(lines: Iterable[str]) -> Iterator[Token]:
    position = 0
    for line in lines:
        toks = tokenize(line, start=position)
        position += len(toks)
        yield from toks


def process(
    lines: Iterable[str], lex: LexiconSet, config: RunConfig, out: TextIO
) -> tuple[collections.Counter, set[str]]:
    """Analyze every token of ``lines`` and write the formatted rows to ``out``.

    Returns the count of best-candidate kinds and the roots seen.
    """
    @functools.lru_cache(maxsize=1 << 16)
    def candidates(normalized: str, arabic: bool) -> tuple[Analysis, ...]:
        return analyze(Token(normalized, normalized, 0, arabic), lex).candidates

    kinds: collections.Counter = collections.Counter()
    roots: set[str] = set()
    for tok in _tokens(lines):
        aset = AnalysisSet(tok, candidates(tok.normalized, tok.arabic))
        best = aset.best
        kinds[best.kind.value] += 1
        if best.root:
            roots.add(best.root)
        if config.drop_stop_words and best.kind is Kind.STOP_WORD:
            continue
        for row in format_rows(aset, config):
            out.write(row + "\n")
    return kinds, roots


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        lex = load_lexicons(config.lexicon_dir)
    except LexiconError as e:
        print(f"wazn: lexicon error: {e}", file=err)
        return 1
    try:
        if config.input is None:
            kinds, roots = process(sys.stdin, lex, config, out)
        else:
            with open(config.input, encoding="utf-8") as f:
                kinds, roots = process(f, lex, config, out)
    except (OSError, UnicodeDecodeError) as e:
        print(f"wazn: cannot read input: {e}", file=err)
        return 1
    out.flush()
    if config.stats:
        summary = {
            "tokens": sum(kinds.values()),
            "kinds": dict(sorted(kinds.items())),
            "distinct_roots": len(roots),
        }
        print(json.dumps(summary, ensure_ascii=False), file=err)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wazn", description="Root-and-pattern analysis of unvocalized Arabic text."
    )
    p.add_argument("input", nargs="?", type=Path, help="input file (default: standard input)")
    p.add_argument("--lexicons", type=Path, help=f"lexicon directory (default: ${ENV_LEXICONS} or the seed lexicon)")
    p.add_argument("--mode", choices=MODES, default="root")
    p.add_argument("--format", dest="output_format", choices=FORMATS, default="tsv")
    p.add_argument("--drop-stop-words", action="store_true")
    p.add_argument("--all-candidates", action="store_true", help="one line per candidate, with a rank column")
    p.add_argument("--stats", action="store_true", help="write a JSON summary to stderr")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    lexicon_dir = args.lexicons or os.environ.get(ENV_LEXICONS) or seed_directory()
    config = RunConfig(
        lexicon_dir=Path(lexicon_dir),
        mode=args.mode,
        output_format=args.output_format,
        drop_stop_words=args.drop_stop_words,
        all_candidates=args.all_candidates,
        input=args.input,
        stats=args.stats,
    )
    if config.input is None:
        sys.stdin = io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8")
    out = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8", newline="\n", write_through=False)
    try:
        return run(config, out=out)
    finally:
        out.flush()
        out.detach()


if __name__ == "__main__":
    sys.exit(main())
