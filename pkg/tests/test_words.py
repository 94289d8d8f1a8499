import pytest
from hypothesis import given, settings, strategies as st

from freeprod import FreeProduct, MixedContexts, preset
from freeprod.groups import Side, cyclic, sym3
from freeprod.words import (
    IndexOutOfRange,
    SyllableType,
    WordSyntaxError,
    classify_type,
    concat_mul,
    invert,
    iter_words,
    power,
    reduce,
    syllable_length,
)

H, G = Side.H, Side.G


def raw_words(ctx, max_size=20):
    letter = st.one_of(
        st.tuples(st.just(H), st.integers(0, ctx.h.order - 1)),
        st.tuples(st.just(G), st.integers(0, ctx.g.order - 1)),
    )
    return st.lists(letter, max_size=max_size)


Z2Z3 = FreeProduct(cyclic(2), cyclic(3))
S3Z3 = FreeProduct(sym3(), cyclic(3))


def test_reduce_examples():
    h, g = cyclic(2), cyclic(3)
    assert reduce([], h, g).codes == ()
    assert str(reduce([(H, 1), (G, 0), (H, 1)], h, g)) == "e"
    assert str(reduce([(H, 1), (G, 1), (G, 2)], h, g)) == "h1"


def test_reduce_rejects_bad_index(z2z3):
    with pytest.raises(IndexOutOfRange):
        z2z3.word([(H, 2)])
    with pytest.raises(IndexOutOfRange):
        z2z3.parse("g3")


def test_parse_and_format(z2z3):
    assert str(z2z3.parse("h1 g0 g1 e")) == "h1 g1"
    assert str(z2z3.parse("e")) == "e"
    assert str(z2z3.parse("")) == "e"
    with pytest.raises(WordSyntaxError):
        z2z3.parse("x1")


def test_mul_examples(z2z3):
    p = z2z3.parse
    assert concat_mul(z2z3.identity, p("h1 g1")) == p("h1 g1")
    assert concat_mul(p("h1 g1"), p("g2 h1")) == z2z3.identity
    assert str(concat_mul(p("h1 g1"), p("h1 g1"))) == "h1 g1 h1 g1"


def test_invert_examples(z2z3):
    p = z2z3.parse
    assert invert(z2z3.identity) == z2z3.identity
    assert invert(p("h1")) == p("h1")
    assert str(invert(p("h1 g1"))) == "g2 h1"


def test_pow_examples(z2z3):
    p = z2z3.parse
    assert power(p("h1 g1 h1"), 0) == z2z3.identity
    assert str(power(p("h1 g1"), 2)) == "h1 g1 h1 g1"
    assert power(p("h1"), 2) == z2z3.identity
    assert power(p("h1 g1"), -2) == invert(p("h1 g1 h1 g1"))


def test_type_and_length_examples(z2z3):
    p = z2z3.parse
    assert classify_type(p("h1 g1")) is SyllableType.TYPE1
    assert classify_type(p("g1")) is SyllableType.TYPE5
    assert classify_type(p("g1 h1")) is SyllableType.TYPE7
    assert classify_type(p("h1")) is SyllableType.TYPE6
    assert classify_type(p("h1 g1 h1")) is SyllableType.TYPE2
    assert classify_type(p("g1 h1 g1")) is SyllableType.TYPE3
    assert classify_type(p("g1 h1 g1 h1")) is SyllableType.TYPE4
    assert classify_type(z2z3.identity) is SyllableType.EMPTY
    assert [syllable_length(p(s)) for s in ("e", "h1 g1", "g1 h1 g2")] == [0, 2, 3]


def test_mixed_contexts(z2z3, z2z2):
    with pytest.raises(MixedContexts):
        z2z3.parse("h1") * z2z2.parse("h1")
    # equal tables make equal contexts
    other = FreeProduct(preset("cyclic2"), preset("cyclic3"))
    assert (z2z3.parse("h1") * other.parse("g1")) == z2z3.parse("h1 g1")


def test_iter_words_counts(z2z3):
    # length n words: alternating choices of 1 H-letter and 2 G-letters
    counts = [sum(1 for w in iter_words(z2z3, n, n)) for n in range(5)]
    assert counts == [1, 3, 4, 6, 8]


@pytest.mark.parametrize("ctx", [Z2Z3, S3Z3], ids=["z2z3", "s3z3"])
@settings(max_examples=300)
@given(data=st.data())
def test_reduce_invariants(ctx, data):
    raw = data.draw(raw_words(ctx))
    w = ctx.word(raw)
    letters = w.letters
    assert all(x.index != 0 for x in letters)
    assert all(a.side != b.side for a, b in zip(letters, letters[1:]))
    assert ctx.word(letters) == w
    # inserting an identity letter anywhere changes nothing
    pos = data.draw(st.integers(0, len(raw)))
    side = data.draw(st.sampled_from([H, G]))
    assert ctx.word(raw[:pos] + [(side, 0)] + raw[pos:]) == w
    # splitting a letter into two factors on the same side changes nothing
    if raw:
        i = data.draw(st.integers(0, len(raw) - 1))
        side, idx = raw[i]
        t = ctx.table(side)
        a = data.draw(st.integers(0, t.order - 1))
        b = t.mul(t.inv(a), idx)
        assert ctx.word(raw[:i] + [(side, a), (side, b)] + raw[i + 1 :]) == w


@pytest.mark.parametrize("ctx", [Z2Z3, S3Z3], ids=["z2z3", "s3z3"])
@settings(max_examples=300)
@given(data=st.data())
def test_group_laws(ctx, data):
    a, b, c = (ctx.word(data.draw(raw_words(ctx, 12))) for _ in range(3))
    e = ctx.identity
    assert (a * b) * c == a * (b * c)
    assert a * ~a == e == ~a * a
    assert a * e == a == e * a
    m = data.draw(st.integers(-4, 4))
    n = data.draw(st.integers(-4, 4))
    assert a ** m * a ** n == a ** (m + n)


def test_words_are_hashable_values(z2z3):
    p = z2z3.parse
    assert len({p("h1 g1"), p("h1 g1 g0"), p("h1 g2")}) == 2
    assert sorted([p("h1 g2"), p("g1"), p("h1 g1")])[0] == p("h1 g1")
