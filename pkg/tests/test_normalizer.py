import unicodedata

from hypothesis import given, strategies as st

from wazn.normalizer import Token, arabic_letters, is_arabic_word, normalize, tokenize

# Arabic block, combining marks and tatweel included, plus some Latin and spaces.
arabic_text = st.text(
    alphabet=st.one_of(
        st.characters(min_codepoint=0x0600, max_codepoint=0x06FF),
        st.sampled_from("abc 123.,\u0653\u0654\u0655"),
    ),
    max_size=40,
)


def test_strips_short_vowels():
    assert normalize("فَعَلَ") == "فعل"


def test_identity_on_plain_text():
    assert normalize("كتاب") == "كتاب"


def test_removes_tatweel():
    assert normalize("الـكـتـاب") == "الكتاب"


def test_keeps_hamza_carriers_and_ta_marbuta():
    assert normalize("أإآؤئة") == "أإآؤئة"


def test_shadda_and_tanwin():
    assert normalize("مُدَرِّسَةٌ") == "مدرسة"


def test_decomposed_hamza_is_composed():
    assert normalize("\u0627\u0654علن") == "\u0623علن"


@given(arabic_text)
def test_idempotent(x):
    assert normalize(normalize(x)) == normalize(x)


@given(arabic_text)
def test_never_longer(x):
    assert len(normalize(x)) <= len(x)


@given(arabic_text)
def test_base_letters_preserved(x):
    # Letters are compared after canonical composition: alef followed by a
    # combining hamza is the letter أ.
    assert arabic_letters(normalize(x)) == arabic_letters(unicodedata.normalize("NFC", x))


@given(arabic_text)
def test_no_marks_left(x):
    out = normalize(x)
    assert "ـ" not in out
    assert not any(0x064B <= ord(c) <= 0x065F or c == "ٰ" for c in out)


def test_tokenize_splits_punctuation():
    toks = tokenize("ذهب الولد.")
    assert [t.raw for t in toks] == ["ذهب", "الولد", "."]
    assert [t.arabic for t in toks] == [True, True, False]
    assert [t.position for t in toks] == [0, 1, 2]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_script_partition():
    toks = tokenize("abc ضرب")
    assert [(t.raw, t.arabic) for t in toks] == [("abc", False), ("ضرب", True)]


def test_tokenize_keeps_raw_and_normalized():
    (tok,) = tokenize("الـكِتَابُ")
    assert tok.raw == "الـكِتَابُ"
    assert tok.normalized == "الكتاب"


def test_digits_make_a_token_non_arabic():
    (tok,) = tokenize("ضرب123")
    assert not tok.arabic


def test_start_offsets_positions():
    assert [t.position for t in tokenize("a b", start=7)] == [7, 8]


@given(arabic_text)
def test_raw_forms_rebuild_input(x):
    toks = tokenize(x)
    rebuilt = []
    last = 0
    for t in toks:
        gap = x[last:t.offset]
        assert gap.strip() == ""
        rebuilt.append(gap + t.raw)
        last = t.offset + len(t.raw)
    assert x[last:].strip() == ""
    assert "".join(rebuilt) + x[last:] == x


@given(arabic_text)
def test_arabic_tokens_are_clean(x):
    for t in tokenize(x):
        if t.arabic:
            assert t.normalized and is_arabic_word(t.normalized)


def test_from_text():
    assert Token.from_text("كَتَبَ", 3) == Token("كَتَبَ", "كتب", 3, True)
