"""Walk through the analyses of a few classic inflected forms.

Run with ``python3 demos/worked_examples.py``.
"""

from wazn import analyze, load_seed, strip_clitics

lex = load_seed()

# A scheme with a single infix: the alef of فاعل is dropped to expose the root.
best = analyze("صالح", lex).best
print("صالح", "->", best.scheme, best.root)

# Clitics come off before affixes; every split is kept, not just the greedy one.
for split in strip_clitics("فسمعهم", lex):
    print("  clitic split:", split)

# The analyzer picks سمع even though فس + مع + هم is also a legal split,
# because مع on its own is a function word.
for a in analyze("فسمعهم", lex).candidates[:4]:
    print("  candidate:", a.kind.value, a.segments, a.root, a.scheme)

# Five-way split of a prefixed future verb with an object pronoun.
print("فسأعلنه", "->", analyze("فسأعلنه", lex).best.segments)
