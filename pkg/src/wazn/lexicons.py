"""The dictionaries the analyzer consults, bundled into one immutable set.

A lexicon directory holds seven TAB-separated UTF-8 files plus an optional
``affixes.tsv`` overriding the built-in clitic and affix inventories::

    schemes.tsv          wazn  positions  verb|noun|both
    roots.txt            root                       (sorted)
    function_words.tsv   surface  nominal|verbal|common
    specific_words.txt   surface
    stop_words.txt       surface
    clitic_incompat.txt  proclitic+enclitic fused into one string
    affix_incompat.tsv   prefix  suffix
    affixes.tsv          proclitic|enclitic|prefix|suffix  form

Blank lines and lines starting with ``#`` are skipped everywhere.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .normalizer import is_arabic_word, normalize

REFERENCE_ROOT = "فعل"

PROCLITICS = (
    "", "ب", "ك", "ل", "ف", "س", "أ", "ال", "بال", "كال", "لل", "فب", "فس",
    "فال", "فك", "فل", "فلل", "أف", "أس", "فبال", "فكال",
)
ENCLITICS = ("", "ه", "ها", "هما", "هم", "هن", "ك", "كما", "كم", "كن", "ي", "ني", "نا")
PREFIXES = ("", "ا", "ت", "ن", "ي", "إ", "أ")
SUFFIXES = (
    "", "ات", "ية", "ة", "يات", "نا", "ت", "تما", "تم", "تن", "ن", "ين", "ان",
    "ون", "وا", "ا", "ي",
)

FILES = {
    "schemes": "schemes.tsv",
    "roots": "roots.txt",
    "function_words": "function_words.tsv",
    "specific_words": "specific_words.txt",
    "stop_words": "stop_words.txt",
    "clitic_incompat": "clitic_incompat.txt",
    "affix_incompat": "affix_incompat.tsv",
}
AFFIX_FILE = "affixes.tsv"


class Category(enum.Enum):
    VERB = "verb"
    NOUN = "noun"
    BOTH = "both"


class SuccessorClass(enum.Enum):
    NOMINAL = "nominal"
    VERBAL = "verbal"
    COMMON = "common"


class WordClass(enum.Enum):
    STOP_WORD = "StopWord"
    FUNCTION_WORD = "FunctionWord"
    SPECIFIC = "Specific"
    NOT_FOUND = "NotFound"


class LexiconError(Exception):
    pass


class MissingLexiconFile(LexiconError, FileNotFoundError):
    def __init__(self, path: Path):
        self.path = path
        name = path.name.split(".")[0].replace("_", " ")
        super().__init__(f"{name} file not found: {path}")


class LexiconFormatError(LexiconError):
    def __init__(self, path: Path, lineno: int, message: str):
        self.path = path
        self.lineno = lineno
        super().__init__(f"{path.name}:{lineno}: {message}")


class LexiconValidationError(LexiconError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__(
            f"{len(problems)} lexicon problem(s):\n" + "\n".join(f"  {p}" for p in problems)
        )


@dataclass(frozen=True)
class SchemeEntry:
    """A pattern over the reference root, e.g. ``فاعل`` with infix at 2."""

    wazn: str
    infix_positions: tuple[int, ...]
    category: Category

    def __post_init__(self):
        object.__setattr__(self, "infix_positions", tuple(self.infix_positions))

    def __len__(self) -> int:
        return len(self.wazn)

    def problems(self) -> list[str]:
        out = []
        pos = self.infix_positions
        if any(p < 1 or p > len(self.wazn) for p in pos):
            out.append(f"scheme {self.wazn}: position out of range in {list(pos)}")
        if any(a >= b for a, b in zip(pos, pos[1:])):
            out.append(f"scheme {self.wazn}: positions not strictly increasing {list(pos)}")
        if len(self.wazn) - len(pos) != 3:
            out.append(f"scheme {self.wazn}: leaves {len(self.wazn) - len(pos)} root slots, expected 3")
        elif not out:
            slots = "".join(ch for i, ch in enumerate(self.wazn, 1) if i not in pos)
            if slots != REFERENCE_ROOT:
                out.append(f"scheme {self.wazn}: root slots spell {slots}, expected {REFERENCE_ROOT}")
        if not is_arabic_word(self.wazn):
            out.append(f"scheme {self.wazn!r}: not a diacritic-free Arabic string")
        return out


@dataclass(frozen=True)
class FunctionWord:
    surface: str
    successor_class: SuccessorClass


@dataclass(frozen=True, eq=True)
class LexiconSet:
    schemes: tuple[SchemeEntry, ...]
    roots: frozenset[str]
    function_words: Mapping[str, FunctionWord]
    specific_words: frozenset[str]
    stop_words: frozenset[str]
    clitic_incompat: frozenset[str]
    affix_incompat: frozenset[tuple[str, str]]
    proclitics: tuple[str, ...] = PROCLITICS
    enclitics: tuple[str, ...] = ENCLITICS
    prefixes: tuple[str, ...] = PREFIXES
    suffixes: tuple[str, ...] = SUFFIXES
    _by_length: Mapping[int, tuple[SchemeEntry, ...]] = field(
        init=False, repr=False, compare=False
    )
    _order: Mapping[str, int] = field(init=False, repr=False, compare=False)
    _index: Mapping[str, tuple[tuple[int, frozenset[str]], ...]] = field(
        init=False, repr=False, compare=False
    )
    _derived: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        setattr_ = functools.partial(object.__setattr__, self)
        setattr_("schemes", tuple(self.schemes))
        setattr_("roots", frozenset(self.roots))
        setattr_("function_words", MappingProxyType(dict(self.function_words)))
        for name in ("specific_words", "stop_words", "clitic_incompat", "affix_incompat"):
            setattr_(name, frozenset(getattr(self, name)))
        for name in ("proclitics", "enclitics", "prefixes", "suffixes"):
            setattr_(name, tuple(getattr(self, name)))
        by_length: dict[int, list[SchemeEntry]] = {}
        for s in self.schemes:
            by_length.setdefault(len(s.wazn), []).append(s)
        setattr_("_by_length", MappingProxyType({k: tuple(v) for k, v in by_length.items()}))
        setattr_("_order", MappingProxyType({s.wazn: i for i, s in enumerate(self.schemes)}))
        index = {}
        for name in ("proclitics", "enclitics", "prefixes", "suffixes"):
            by_len: dict[int, set[str]] = {}
            for form in getattr(self, name):
                by_len.setdefault(len(form), set()).add(form)
            index[name] = tuple((n, frozenset(f)) for n, f in sorted(by_len.items()))
        setattr_("_index", MappingProxyType(index))

    def derived(self, key: str, build):
        """Memoize a lookup structure computed from this set by ``build(self)``."""
        try:
            return self._derived[key]
        except KeyError:
            value = self._derived[key] = build(self)
            return value

    def leading(self, word: str, inventory: str) -> list[str]:
        """Forms of ``inventory`` that ``word`` starts with, shortest first."""
        return [word[:n] for n, forms in self._index[inventory] if word[:n] in forms]

    def trailing(self, word: str, inventory: str) -> list[str]:
        """Forms of ``inventory`` that ``word`` ends with, shortest first."""
        size = len(word)
        return [word[size - n:] for n, forms in self._index[inventory] if word[size - n:] in forms]

    def schemes_of_length(self, n: int) -> tuple[SchemeEntry, ...]:
        return self._by_length.get(n, ())

    def scheme_order(self, wazn: str) -> int:
        return self._order[wazn]

    def scheme(self, wazn: str) -> SchemeEntry:
        return self.schemes[self._order[wazn]]

    def has_root(self, candidate: str) -> bool:
        return candidate in self.roots

    def classify_whole_word(self, surface: str) -> tuple[WordClass, SuccessorClass | None]:
        """Look ``surface`` up in the stop, function and specific word lists.

        Stop words win over function words, which win over specific words.
        The successor class is only set for function words.
        """
        if surface in self.stop_words:
            return WordClass.STOP_WORD, None
        fw = self.function_words.get(surface)
        if fw is not None:
            return WordClass.FUNCTION_WORD, fw.successor_class
        if surface in self.specific_words:
            return WordClass.SPECIFIC, None
        return WordClass.NOT_FOUND, None

    def with_specific_words(self, words: Iterable[str]) -> "LexiconSet":
        """Return a copy whose specific-word list also holds ``words``."""
        added = [normalize(w) for w in words]
        bad = [w for w in added if not is_arabic_word(w)]
        if bad:
            raise LexiconValidationError([f"specific word {w!r}: not an Arabic word" for w in bad])
        return replace(self, specific_words=self.specific_words | set(added))

    def validate(self) -> None:
        problems = []
        seen: set[str] = set()
        for s in self.schemes:
            problems += s.problems()
            if s.wazn in seen:
                problems.append(f"scheme {s.wazn}: duplicate entry")
            seen.add(s.wazn)
        for r in sorted(self.roots):
            if len(r) != 3 or not is_arabic_word(r):
                problems.append(f"root {r!r}: must be exactly three Arabic letters")
        for kind, words in (
            ("function word", self.function_words),
            ("specific word", self.specific_words),
            ("stop word", self.stop_words),
        ):
            for w in sorted(words):
                if not is_arabic_word(w):
                    problems.append(f"{kind} {w!r}: not a diacritic-free Arabic word")
        for name in ("proclitics", "enclitics", "prefixes", "suffixes"):
            items = getattr(self, name)
            if "" not in items:
                problems.append(f"{name}: missing the empty form")
            for a in items:
                if a and not is_arabic_word(a):
                    problems.append(f"{name}: {a!r} is not an Arabic string")
        for c in sorted(self.clitic_incompat):
            if not c:
                problems.append("clitic_incompat: empty entry")
        for p, s in sorted(self.affix_incompat):
            if p not in self.prefixes:
                problems.append(f"affix_incompat: unknown prefix {p!r}")
            if s not in self.suffixes:
                problems.append(f"affix_incompat: unknown suffix {s!r}")
        if problems:
            raise LexiconValidationError(problems)


def _records(path: Path) -> Iterator[tuple[int, list[str]]]:
    if not path.is_file():
        raise MissingLexiconFile(path)
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            yield lineno, line.split("\t")


def _fields(path: Path, n: int) -> Iterator[tuple[int, list[str]]]:
    for lineno, fields in _records(path):
        if len(fields) != n:
            raise LexiconFormatError(path, lineno, f"expected {n} TAB-separated fields, got {len(fields)}")
        yield lineno, fields


def _enum(cls, value: str, path: Path, lineno: int):
    try:
        return cls(value.strip().lower())
    except ValueError:
        allowed = "|".join(m.value for m in cls)
        raise LexiconFormatError(path, lineno, f"{value!r} is not one of {allowed}") from None


def _words(path: Path) -> list[str]:
    return [fields[0] for _, fields in _fields(path, 1)]


def _read_schemes(path: Path) -> list[SchemeEntry]:
    out = []
    for lineno, (wazn, positions, category) in _fields(path, 3):
        try:
            pos = tuple(int(p) for p in positions.split(",") if p.strip())
        except ValueError:
            raise LexiconFormatError(path, lineno, f"bad position list {positions!r}") from None
        out.append(SchemeEntry(wazn, pos, _enum(Category, category, path, lineno)))
    return out


def _read_affixes(path: Path) -> dict[str, tuple[str, ...]]:
    kinds = {"proclitic": "proclitics", "enclitic": "enclitics", "prefix": "prefixes", "suffix": "suffixes"}
    found: dict[str, list[str]] = {v: [""] for v in kinds.values()}
    for lineno, (kind, form) in _fields(path, 2):
        if kind not in kinds:
            raise LexiconFormatError(path, lineno, f"unknown affix kind {kind!r}")
        if form not in found[kinds[kind]]:
            found[kinds[kind]].append(form)
    return {k: tuple(v) for k, v in found.items()}


def load_lexicons(directory: str | Path) -> LexiconSet:
    """Read and validate the lexicon files under ``directory``."""
    d = Path(directory)
    paths = {k: d / v for k, v in FILES.items()}
    for p in paths.values():
        if not p.is_file():
            raise MissingLexiconFile(p)

    roots = _words(paths["roots"])
    problems = []
    if roots != sorted(roots):
        problems.append("roots: file is not sorted")
    if len(set(roots)) != len(roots):
        problems.append("roots: duplicate entries")

    function_words = {}
    fw_path = paths["function_words"]
    for lineno, (surface, cls) in _fields(fw_path, 2):
        function_words[surface] = FunctionWord(surface, _enum(SuccessorClass, cls, fw_path, lineno))

    inventories = {}
    if (d / AFFIX_FILE).is_file():
        inventories = _read_affixes(d / AFFIX_FILE)

    lex = LexiconSet(
        schemes=_read_schemes(paths["schemes"]),
        roots=roots,
        function_words=function_words,
        specific_words=_words(paths["specific_words"]),
        stop_words=_words(paths["stop_words"]),
        clitic_incompat=_words(paths["clitic_incompat"]),
        affix_incompat=[tuple(f) for _, f in _fields(paths["affix_incompat"], 2)],
        **inventories,
    )
    try:
        lex.validate()
    except LexiconValidationError as e:
        problems += e.problems
    if problems:
        raise LexiconValidationError(problems)
    return lex


def save_lexicons(lex: LexiconSet, directory: str | Path) -> None:
    """Write ``lex`` in the on-disk format read by :func:`load_lexicons`."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)

    def write(name: str, rows: Iterable[str]) -> None:
        with open(d / name, "w", encoding="utf-8", newline="\n") as f:
            for row in rows:
                f.write(row + "\n")

    write(FILES["schemes"], (
        f"{s.wazn}\t{','.join(map(str, s.infix_positions))}\t{s.category.value}" for s in lex.schemes
    ))
    write(FILES["roots"], sorted(lex.roots))
    write(FILES["function_words"], (
        f"{fw.surface}\t{fw.successor_class.value}" for fw in lex.function_words.values()
    ))
    write(FILES["specific_words"], sorted(lex.specific_words))
    write(FILES["stop_words"], sorted(lex.stop_words))
    write(FILES["clitic_incompat"], sorted(lex.clitic_incompat))
    write(FILES["affix_incompat"], (f"{p}\t{s}" for p, s in sorted(lex.affix_incompat)))
    write(AFFIX_FILE, (
        f"{kind}\t{form}"
        for kind, forms in (
            ("proclitic", lex.proclitics), ("enclitic", lex.enclitics),
            ("prefix", lex.prefixes), ("suffix", lex.suffixes),
        )
        for form in forms if form
    ))


def seed_directory() -> Path:
    return Path(str(resources.files("wazn") / "data" / "seed"))


@functools.lru_cache(maxsize=None)
def load_seed() -> LexiconSet:
    """The small lexicon shipped with the package."""
    return load_lexicons(seed_directory())
