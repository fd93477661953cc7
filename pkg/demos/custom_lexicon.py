"""Extend the seed lexicon with names and a new root, then analyze with it.

Lexicons are immutable; changes go through a copy on disk or
``with_specific_words``, which returns a new set.
"""

import tempfile
from pathlib import Path

from wazn import analyze, load_lexicons, load_seed, save_lexicons

seed = load_seed()

# Unknown words fall back to Specific; registering the name makes it explicit.
print("before:", analyze("تمنراست", seed).best.kind.value)
named = seed.with_specific_words(["تمنراست"])
print("after: ", analyze("بتمنراست", named).best.segments)

# Roots live in a plain sorted text file, so adding one is a file edit.
with tempfile.TemporaryDirectory() as tmp:
    save_lexicons(seed, tmp)
    roots = Path(tmp, "roots.txt")
    lines = roots.read_text(encoding="utf-8").splitlines()
    entries = sorted({line for line in lines if line and not line.startswith("#")} | {"رقن"})
    roots.write_text("\n".join(entries) + "\n", encoding="utf-8")
    lex = load_lexicons(tmp)
    print("مرقون ->", analyze("مرقون", lex).best.root)
