import pytest
from hypothesis import given, settings, strategies as st

from wazn.analyzer import Analysis, Kind, Mode, analyze, interpret, rank, stem
from wazn.lexicons import Category, SuccessorClass
from wazn.normalizer import Token, tokenize
from wazn.oracle import fuzz_generate


def test_function_word(lex):
    (a,) = analyze("في", lex).candidates
    assert a.kind is Kind.FUNCTION_WORD
    assert a.successor_class is SuccessorClass.NOMINAL
    assert a.root is None and a.scheme is None


def test_fig11_word(lex):
    best = analyze("فسأعلنه", lex).best
    assert best.kind is Kind.DERIVED
    assert best.segments == ("فس", "أ", "علن", "", "ه")
    assert best.root == "علن"


def test_radical_is_not_taken_for_a_clitic(lex):
    result = analyze("فسمعهم", lex)
    assert result.best.root == "سمع"
    # مع survives segmentation as a function word but loses the ranking
    assert any(a.kind is Kind.FUNCTION_WORD and a.base == "مع" for a in result.candidates)


def test_specific_word(lex):
    (a,) = analyze("أحمد", lex).candidates
    assert a.kind is Kind.SPECIFIC


def test_stop_word_is_reported(lex):
    (a,) = analyze("هذا", lex).candidates
    assert a.kind is Kind.STOP_WORD


def test_unexplained_word_falls_back_to_specific(lex):
    (a,) = analyze("غدامس", lex).candidates
    assert (a.kind, a.base) == (Kind.SPECIFIC, "غدامس")


def test_specific_word_under_suffix(lex):
    best = analyze("سطيفي", lex).best
    assert (best.kind, best.base) == (Kind.SPECIFIC, "سطيف")


def test_non_arabic(lex):
    (a,) = analyze(Token.from_text("abc"), lex).candidates
    assert (a.kind, a.base) == (Kind.UNANALYZED, "abc")


def test_function_word_under_clitic(lex):
    best = analyze("فمن", lex).best
    assert (best.kind, best.proclitic, best.base) == (Kind.FUNCTION_WORD, "ف", "من")


def derived(base, **kw):
    kw.setdefault("root", "حسن")
    kw.setdefault("scheme", "فعل")
    return Analysis(base, Kind.DERIVED, **kw)


def test_rank_prefers_longer_base():
    short, long_ = derived("حس", suffix="ن"), derived("حسن")
    assert rank([short, long_]) == [long_, short]


def test_rank_singleton():
    a = derived("حسن")
    assert rank([a]) == [a]


def test_rank_kind_first():
    s, d = Analysis("كلمة", Kind.SPECIFIC), derived("حس")
    assert rank([s, d]) == [d, s]


def test_rank_prefers_plain_scheme_over_absorbed_prefix():
    absorbed = derived("أعلن", root="علن", scheme="أفعل", proclitic="فس", enclitic="ه")
    split = derived("علن", root="علن", prefix="أ", proclitic="فس", enclitic="ه")
    assert rank([absorbed, split]) == [split, absorbed]


def test_rank_falls_back_to_scheme_order():
    a = derived("كاتب", root="كتب", scheme="فاعل", scheme_index=1)
    b = derived("كاتب", root="كتب", scheme="فاعل", scheme_index=0)
    assert rank([a, b]) == [b, a]


@pytest.mark.parametrize("word,scheme,category", [
    ("مكتوب", "مفعول", Category.NOUN),
    ("انكسر", "انفعل", Category.VERB),
    ("كاتب", "فاعل", Category.BOTH),
])
def test_category_from_scheme(lex, word, scheme, category):
    best = analyze(word, lex).best
    assert best.scheme == scheme
    assert best.category is category


def test_interpret_is_idempotent(lex):
    a = Analysis("مكتوب", Kind.DERIVED, root="كتب", scheme="مفعول")
    once = interpret(a, lex)
    assert once.category is Category.NOUN
    assert interpret(once, lex) == once
    assert interpret(Analysis("في", Kind.FUNCTION_WORD), lex).category is None


def test_stem_root(lex):
    assert stem("صالح", Mode.ROOT, lex) == "صلح"


def test_stem_light(lex):
    assert stem("فكاتيبهم", Mode.LIGHT, lex) == "كاتيب"


def test_stem_segment(lex):
    assert stem("فسأعلنه", "segment", lex) == ("فس", "أ", "علن", "", "ه")


def test_stem_root_of_non_derived_is_base(lex):
    assert stem("أحمد", "root", lex) == "أحمد"


def check_invariants(result):
    assert result.candidates
    for a in result.candidates:
        assert a.surface == result.token.normalized
        assert (a.kind is Kind.DERIVED) == (a.root is not None and a.scheme is not None)
        if a.kind in (Kind.FUNCTION_WORD, Kind.SPECIFIC, Kind.STOP_WORD):
            assert a.root is None and a.scheme is None


@settings(max_examples=300)
@given(st.text(max_size=15))
def test_total_on_any_input(lex, text):
    for tok in tokenize(text) or [Token.from_text(text)]:
        check_invariants(analyze(tok, lex))


@settings(max_examples=300)
@given(st.text(alphabet="فبكلسأالهمنيتاإوةعردصحج", min_size=1, max_size=12))
def test_total_on_arabic(lex, word):
    result = analyze(word, lex)
    check_invariants(result)
    for a in result.candidates:
        if a.kind is Kind.DERIVED:
            assert a.category is lex.scheme(a.scheme).category


def test_generated_words_are_recognised(lex):
    for sample in fuzz_generate(lex, seed=11, n=500):
        assert sample.root in analyze(sample.word, lex).roots, sample


def test_stable(lex):
    words = [s.word for s in fuzz_generate(lex, seed=3, n=50)]
    assert [analyze(w, lex) for w in words] == [analyze(w, lex) for w in words]
