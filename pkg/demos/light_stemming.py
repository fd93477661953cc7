"""Compare the three stemming modes on a short sentence.

Light stems keep the infixes (useful for retrieval indexes); root stems
collapse every derived form onto its triliteral root.
"""

from wazn import Mode, load_seed, stem, tokenize

lex = load_seed()
sentence = "سيكتبون فكاتيبهم المكتوب في مساجد المدرسة"

print(f"{'token':<12}{'root':<10}{'light':<10}segments")
for tok in tokenize(sentence):
    root = stem(tok, Mode.ROOT, lex)
    light = stem(tok, Mode.LIGHT, lex)
    parts = "+".join(p for p in stem(tok, Mode.SEGMENT, lex) if p)
    print(f"{tok.raw:<12}{root:<10}{light:<10}{parts}")

# و is not in the proclitic inventory, so a conjunction-prefixed word is
# left whole as a specific word unless the inventory is extended.
print("وكتب ->", stem("وكتب", Mode.SEGMENT, lex))
