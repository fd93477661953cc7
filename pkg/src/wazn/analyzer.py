"""Word analysis: lexical lookup, segmentation, scheme matching, ranking.

A token is first looked up whole in the stop, function and specific word
lists.  On a miss every clitic/affix split is tried; each base is either a
function or specific word in its own right or is matched against the
schemes, one Derived candidate per scheme whose root is in the dictionary.
A word nothing explains is taken to be a specific word (a name or
loanword), so every token gets at least one candidate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .lexicons import Category, LexiconSet, SuccessorClass, WordClass
from .normalizer import Token
from .scheme_matcher import match_schemes
from .segmenter import enumerate_all


class Kind(enum.Enum):
    DERIVED = "Derived"
    FUNCTION_WORD = "FunctionWord"
    SPECIFIC = "Specific"
    STOP_WORD = "StopWord"
    UNANALYZED = "Unanalyzed"


class Mode(enum.Enum):
    ROOT = "root"
    LIGHT = "light"
    SEGMENT = "segment"


_KIND_RANK = {k: i for i, k in enumerate(Kind)}

_WHOLE_WORD_KIND = {
    WordClass.STOP_WORD: Kind.STOP_WORD,
    WordClass.FUNCTION_WORD: Kind.FUNCTION_WORD,
    WordClass.SPECIFIC: Kind.SPECIFIC,
}


@dataclass(frozen=True)
class Analysis:
    base: str
    kind: Kind
    proclitic: str = ""
    prefix: str = ""
    suffix: str = ""
    enclitic: str = ""
    root: str | None = None
    scheme: str | None = None
    category: Category | None = None
    successor_class: SuccessorClass | None = None
    # position of the scheme in the scheme file, the last ranking tie-break
    scheme_index: int = field(default=0, compare=False, repr=False)

    @property
    def segments(self) -> tuple[str, str, str, str, str]:
        return (self.proclitic, self.prefix, self.base, self.suffix, self.enclitic)

    @property
    def surface(self) -> str:
        return "".join(self.segments)

    @property
    def pattern_letters(self) -> int:
        """Letters the scheme adds around the root; zero when there is no scheme."""
        if self.scheme is None or self.root is None:
            return 0
        return len(self.scheme) - len(self.root)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "proclitic": self.proclitic,
            "prefix": self.prefix,
            "base": self.base,
            "suffix": self.suffix,
            "enclitic": self.enclitic,
            "root": self.root,
            "scheme": self.scheme,
            "category": self.category.value if self.category else None,
            "successor_class": self.successor_class.value if self.successor_class else None,
        }


@dataclass(frozen=True)
class AnalysisSet:
    token: Token
    candidates: tuple[Analysis, ...]

    @property
    def best(self) -> Analysis:
        return self.candidates[0]

    @property
    def roots(self) -> set[str]:
        return {a.root for a in self.candidates if a.root}


def _rank_key(a: Analysis) -> tuple:
    return (
        _KIND_RANK[a.kind],
        a.pattern_letters,
        -len(a.base),
        len(a.proclitic) + len(a.prefix) + len(a.suffix) + len(a.enclitic),
        a.scheme_index,
        a.segments,
    )


def rank(candidates: list[Analysis]) -> list[Analysis]:
    """Order candidates best first.

    Derived analyses come before function words, specific words, stop words
    and unanalyzed tokens.  Among derived ones, the analysis whose scheme adds
    the fewest letters wins, so a letter that the prefix layer can explain is
    not absorbed into a scheme; then the longer base, then the fewer
    stripped letters, then the earlier scheme in the file.
    """
    return sorted(candidates, key=_rank_key)


def interpret(analysis: Analysis, lex: LexiconSet) -> Analysis:
    if analysis.kind is Kind.DERIVED:
        category = lex.scheme(analysis.scheme).category
    else:
        category = None
    if category is analysis.category:
        return analysis
    return replace(analysis, category=category)


def _candidates(word: str, lex: LexiconSet) -> list[Analysis]:
    out = []
    function_words = lex.function_words
    for (proclitic, _, enclitic), (prefix, base, suffix) in enumerate_all(word, lex):
        fw = function_words.get(base)
        if fw is not None:
            out.append(Analysis(
                base, Kind.FUNCTION_WORD, proclitic, prefix, suffix, enclitic,
                successor_class=fw.successor_class,
            ))
        elif base in lex.specific_words:
            out.append(Analysis(base, Kind.SPECIFIC, proclitic, prefix, suffix, enclitic))
        else:
            for scheme, root, _ in match_schemes(base, lex):
                out.append(Analysis(
                    base, Kind.DERIVED, proclitic, prefix, suffix, enclitic,
                    root, scheme.wazn, scheme.category,
                    scheme_index=lex.scheme_order(scheme.wazn),
                ))
    return out


def analyze(token: Token | str, lex: LexiconSet) -> AnalysisSet:
    if isinstance(token, str):
        token = Token.from_text(token)
    word = token.normalized
    if not token.arabic:
        return AnalysisSet(token, (Analysis(word, Kind.UNANALYZED),))

    cls, successor = lex.classify_whole_word(word)
    if cls is not WordClass.NOT_FOUND:
        only = Analysis(word, _WHOLE_WORD_KIND[cls], successor_class=successor)
        return AnalysisSet(token, (only,))

    candidates = _candidates(word, lex) or [Analysis(word, Kind.SPECIFIC)]
    return AnalysisSet(token, tuple(interpret(a, lex) for a in rank(candidates)))


def stem(token: Token | str, mode: Mode | str, lex: LexiconSet) -> str | tuple[str, ...]:
    """Root, light stem (base with infixes kept) or five-part split of the best analysis."""
    mode = Mode(mode)
    best = analyze(token, lex).best
    if mode is Mode.SEGMENT:
        return best.segments
    if mode is Mode.ROOT and best.kind is Kind.DERIVED:
        return best.root
    return best.base
