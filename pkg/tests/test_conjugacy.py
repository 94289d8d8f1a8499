import pytest
from hypothesis import given, settings, strategies as st

from freeprod import FreeProduct, MixedContexts
from freeprod.conjugacy import (
    ClassKind,
    are_conjugate,
    canonical_class,
    cyclic_reduce,
    enumerate_U_classes,
    enumerate_U_classes_bruteforce,
)
from freeprod.groups import cyclic, klein_four, sym3
from freeprod.words import SyllableType, classify_type, iter_words

from oracles import conjugate_bruteforce, dihedral_class, to_dihedral
from test_words import raw_words

CONTEXTS = {
    "z2z3": FreeProduct(cyclic(2), cyclic(3)),
    "s3z2": FreeProduct(sym3(), cyclic(2)),
    "v4z3": FreeProduct(klein_four(), cyclic(3)),
}


def test_cyclic_reduce_examples(z2z3):
    p = z2z3.parse
    form = cyclic_reduce(p("h1 g1"))
    assert form.core == p("h1 g1") and form.conjugator == z2z3.identity
    form = cyclic_reduce(p("g1 h1 g2"))
    assert form.core == p("h1") and form.conjugator == p("g1")
    w = p("g2 h1 g1 h1")
    form = cyclic_reduce(w)
    # brute force over all conjugators of length <= 2 finds nothing shorter than 4
    assert len(form.core) == 4 == min(len(u * w * ~u) for u in iter_words(z2z3, 2))


@pytest.mark.parametrize("name", CONTEXTS)
def test_cyclic_form_invariants(name):
    ctx = CONTEXTS[name]
    for w in iter_words(ctx, 5):
        form = cyclic_reduce(w)
        core, u = form.core, form.conjugator
        assert u * core * ~u == w
        if len(core) >= 2:
            assert core.first_side() != core.last_side()
        # minimal length across short conjugates
        assert len(core) <= min(len(v * w * ~v) for v in iter_words(ctx, 2))


def test_canonical_class_examples(z2z3):
    p = z2z3.parse
    assert canonical_class(z2z3.identity).kind is ClassKind.IDENTITY
    c = canonical_class(p("g1 h1 g2"))
    assert c.kind is ClassKind.H and c.rep == p("h1")
    c = canonical_class(p("g1 h1"))
    assert c.kind is ClassKind.MIXED and c.rep == p("h1 g1")


def test_canonical_rep_is_least_type1_rotation(s3z2):
    for w in iter_words(s3z2, 6, 2):
        c = canonical_class(w)
        if c.kind is not ClassKind.MIXED:
            continue
        rep = c.rep
        assert classify_type(rep) is SyllableType.TYPE1
        rotations = [rep.context.from_codes(rep.codes[i:] + rep.codes[:i]) for i in range(0, len(rep), 2)]
        assert rep == min(rotations)


def test_are_conjugate_examples(z2z3):
    p = z2z3.parse
    a, b = p("h1 g1"), p("h1 g2")
    assert are_conjugate(a, b) is False
    assert conjugate_bruteforce(a, b, 4) is False
    assert not are_conjugate(p("h1"), p("g1"))
    assert are_conjugate(p("g1"), p("h1 g1 h1"))


def test_are_conjugate_mixed_contexts(z2z3, z2z2):
    with pytest.raises(MixedContexts):
        are_conjugate(z2z3.parse("h1"), z2z2.parse("h1"))


@pytest.mark.parametrize("name", CONTEXTS)
@settings(max_examples=200)
@given(data=st.data())
def test_class_constant_on_orbits(name, data):
    ctx = CONTEXTS[name]
    w = ctx.word(data.draw(raw_words(ctx, 10)))
    u = ctx.word(data.draw(raw_words(ctx, 10)))
    assert canonical_class(u * w * ~u) == canonical_class(w)
    assert are_conjugate(w, u * w * ~u)


@pytest.mark.parametrize("name", ["z2z3", "s3z2"])
def test_class_equality_matches_bruteforce_conjugacy(name):
    ctx = CONTEXTS[name]
    words = list(iter_words(ctx, 3))
    for a in words:
        for b in words:
            if len(a) % 2 != len(b) % 2 and min(len(a), len(b)) >= 2:
                continue
            # conjugators up to length 3 suffice for words of length <= 3
            assert are_conjugate(a, b) == conjugate_bruteforce(a, b, 3), (a, b)


@pytest.mark.parametrize("name", CONTEXTS)
def test_stratum_matches_core_length(name):
    ctx = CONTEXTS[name]
    for w in iter_words(ctx, 5):
        c = canonical_class(w)
        core = cyclic_reduce(w).core
        assert (c.kind is ClassKind.MIXED) == (len(core) >= 2)
        assert (c.kind is ClassKind.IDENTITY) == (len(core) == 0)


def test_enumerate_examples(z2z2, z2z3):
    assert [str(w) for w in enumerate_U_classes(z2z2, 3)] == [
        "h1 g1", "h1 g1 h1 g1", "h1 g1 h1 g1 h1 g1",
    ]
    assert [str(w) for w in enumerate_U_classes(z2z3, 1)] == ["h1 g1", "h1 g2"]
    assert enumerate_U_classes(FreeProduct(cyclic(1), cyclic(5)), 3) == []
    assert enumerate_U_classes(FreeProduct(sym3(), cyclic(1)), 3) == []


@pytest.mark.parametrize("name,bound", [("z2z3", 4), ("s3z2", 3), ("v4z3", 2)])
def test_enumerate_matches_dedupe_oracle(name, bound):
    ctx = CONTEXTS[name]
    fast = enumerate_U_classes(ctx, bound)
    assert fast == enumerate_U_classes_bruteforce(ctx, bound)
    assert len(set(fast)) == len(fast)
    assert all(canonical_class(w).rep == w for w in fast)
    for smaller in range(1, bound):
        assert fast[: len(enumerate_U_classes(ctx, smaller))] == enumerate_U_classes(ctx, smaller)


def test_enumeration_count_is_necklace_count(z2z3):
    # necklaces of length m over 2 symbols: 2, 3, 4, 6, 8, 14
    counts = [len(enumerate_U_classes(z2z3, m)) for m in range(1, 7)]
    assert [b - a for a, b in zip([0] + counts, counts)] == [2, 3, 4, 6, 8, 14]


def test_dihedral_model_class_count(z2z2):
    for bound in range(1, 5):
        assert len(enumerate_U_classes(z2z2, bound)) == bound
        translations = {
            dihedral_class((t, 1), bound) for t in range(-bound, bound + 1) if t
        }
        assert len(translations) == bound
