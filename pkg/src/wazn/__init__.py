"""Root-and-pattern morphological analysis and stemming for unvocalized Arabic."""

from .analyzer import Analysis, AnalysisSet, Kind, Mode, analyze, interpret, rank, stem
from .lexicons import (
    Category,
    LexiconError,
    LexiconSet,
    SchemeEntry,
    SuccessorClass,
    WordClass,
    load_lexicons,
    load_seed,
    save_lexicons,
)
from .normalizer import Token, normalize, tokenize
from .scheme_matcher import SchemeMatch, apply_scheme, extract_root, match_schemes
from .segmenter import (
    AffixDecomposition,
    CliticDecomposition,
    affixes_compatible,
    clitics_compatible,
    enumerate_all,
    strip_affixes,
    strip_clitics,
)

__version__ = "0.1.0"
