import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurmono import (
    HurwitzSpec,
    MarkedTuple,
    SpecError,
    TooLargeError,
    canonicalize,
    component_signature,
    enumerate_markings,
    marked_tuple_json,
    marked_tuple_str,
    marking_key,
    node_product,
    transport_marking,
    tuple_key,
    validate_marked_tuple,
)
from hurmono.marked import CANON_MAX_DEGREE, signature_of_perms, valid_marking
from hurmono.perms import (
    compose_all,
    cycle_type,
    identity,
    inverse,
    parse_perm,
)


def perms_of_degree(d):
    return st.permutations(list(range(d))).map(tuple)


@st.composite
def marked_tuples(draw, max_degree=5, m=4):
    """Random valid marked tuples: free prefix, forced last factor."""
    d = draw(st.integers(1, max_degree))
    prefix = [draw(perms_of_degree(d)) for _ in range(m - 1)]
    last = inverse(compose_all(prefix))
    perms = tuple(prefix) + (last,)
    labels = []
    for p in perms:
        options = enumerate_markings(p, cycle_type(p))
        labels.append(options[draw(st.integers(0, len(options) - 1))])
    return MarkedTuple(perms=perms, labels=tuple(labels))


@st.composite
def tuples_with_conjugator(draw, max_degree=5, m=4):
    t = draw(marked_tuples(max_degree=max_degree, m=m))
    w = draw(perms_of_degree(t.degree))
    return t, w


# ---------------------------------------------------------------------------
# markings


def test_enumerate_markings_examples():
    p = parse_perm("(1 2)(3 4)", 5)
    got = enumerate_markings(p, (2, 2, 1))
    assert len(got) == 2
    assert got[0] == (1, 1, 2, 2, 3)
    assert got[1] == (2, 2, 1, 1, 3)
    assert [marking_key(p, lab) for lab in got] == [(1, 2, 3), (2, 1, 3)]


def test_enumerate_markings_rejects_wrong_profile():
    with pytest.raises(ValueError):
        enumerate_markings(identity(3), (2, 1))


@given(st.integers(1, 6).flatmap(perms_of_degree))
def test_enumerate_markings_count_and_order(p):
    mu = cycle_type(p)
    got = enumerate_markings(p, mu)
    expected = 1
    for _, block in itertools.groupby(mu):
        expected *= math.factorial(len(list(block)))
    assert len(got) == expected
    assert len(set(got)) == len(got)
    keys = [marking_key(p, lab) for lab in got]
    assert keys == sorted(keys)
    for lab in got:
        assert valid_marking(p, lab, mu)


@given(tuples_with_conjugator())
def test_transport_preserves_marked_cycle_lengths(tw):
    t, w = tw
    moved = transport_marking(w, t)
    for p, lab, q, lab2 in zip(t.perms, t.labels, moved.perms, moved.labels):
        mu = cycle_type(p)
        assert cycle_type(q) == mu
        assert valid_marking(q, lab2, mu)
        # the label rides with its cycle: label j marks w(original cycle j)
        for x in range(t.degree):
            assert lab2[w[x]] == lab[x]


@given(tuples_with_conjugator())
def test_transport_composes(tw):
    t, w = tw
    from hurmono.perms import compose

    v = tuple(reversed(range(t.degree)))  # an involution of the same degree
    assert transport_marking(compose(v, w), t) == transport_marking(
        v, transport_marking(w, t)
    )


# ---------------------------------------------------------------------------
# canonical forms


@given(marked_tuples())
def test_canonicalize_idempotent(t):
    c = canonicalize(t)
    assert canonicalize(c) == c
    assert tuple_key(c) <= tuple_key(t)


@settings(deadline=None)
@given(tuples_with_conjugator())
def test_canonicalize_constant_on_orbits(tw):
    t, w = tw
    assert canonicalize(transport_marking(w, t)) == canonicalize(t)


def test_canonicalize_degree_guard():
    d = CANON_MAX_DEGREE + 1
    e = tuple(range(d))
    t = MarkedTuple(perms=(e,) * 4, labels=(tuple(range(1, d + 1)),) * 4)
    with pytest.raises(TooLargeError):
        canonicalize(t)


# ---------------------------------------------------------------------------
# specs and validation


def test_spec_normalization():
    spec = HurwitzSpec(degrees=(1, 2), genera=(0, 1), profiles=((1, 2), (3,), (2, 1), (1, 1, 1)))
    # (degree, genus) pairs sort together; parts sort inside each profile;
    # the fibers themselves stay in the given order (they are positional).
    assert spec.degrees == (2, 1)
    assert spec.genera == (1, 0)
    assert spec.profiles == ((2, 1), (3,), (2, 1), (1, 1, 1))
    assert spec.d == 3
    assert spec.m == 4
    assert spec.signature == ((1, 0), (2, 1))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(degrees=(), genera=(), profiles=((1,),) * 4),
        dict(degrees=(2,), genera=(0, 0), profiles=((2,),) * 4),
        dict(degrees=(2,), genera=(-1,), profiles=((2,),) * 4),
        dict(degrees=(2,), genera=(0,), profiles=((3,),) * 4),
        dict(degrees=(2,), genera=(0,), profiles=((2,), (2,))),
        dict(degrees=(0, 2), genera=(0, 0), profiles=((2,),) * 4),
        dict(degrees=(2,), genera=(0,), profiles=((2, 0),) * 4),
    ],
)
def test_spec_rejects(kwargs):
    with pytest.raises(SpecError):
        HurwitzSpec(**kwargs)


def test_validate_marked_tuple():
    t = MarkedTuple(
        perms=(parse_perm("(1 2)", 2),) * 4,
        labels=((1, 1),) * 4,
    )
    validate_marked_tuple(t)
    bad_product = MarkedTuple(
        perms=(parse_perm("(1 2)", 2),) * 3 + (identity(2),),
        labels=((1, 1),) * 3 + ((1, 2),),
    )
    with pytest.raises(Exception):
        validate_marked_tuple(bad_product)
    bad_labels = MarkedTuple(
        perms=(parse_perm("(1 2)", 2),) * 4,
        labels=((1, 1),) * 3 + ((1, 2),),
    )
    with pytest.raises(Exception):
        validate_marked_tuple(bad_labels)


@given(marked_tuples())
def test_signature_is_sorted_and_sums(t):
    sig = component_signature(t)
    assert sum(size for size, _ in sig) == t.degree
    assert list(sig) == sorted(sig)
    assert all(genus >= 0 for _, genus in sig)
    assert sig == signature_of_perms(t.perms, t.degree)


# ---------------------------------------------------------------------------
# node products


def test_node_product_requires_four_fibers():
    e = identity(2)
    t = MarkedTuple(perms=(e,) * 3, labels=((1, 2),) * 3)
    with pytest.raises(SpecError, match="exactly 4"):
        node_product(t, "infty")


def test_node_product_values():
    s1 = parse_perm("(1 2)", 4)
    s2 = parse_perm("(2 3)", 4)
    s3 = parse_perm("(3 4)", 4)
    s4 = inverse(compose_all([s1, s2, s3]))
    labels = tuple(
        enumerate_markings(p, cycle_type(p))[0] for p in (s1, s2, s3, s4)
    )
    t = MarkedTuple(perms=(s1, s2, s3, s4), labels=labels)
    validate_marked_tuple(t)
    from hurmono.perms import compose, conjugate

    assert node_product(t, "infty") == compose(s3, s4)
    assert node_product(t, "one") == compose(s2, conjugate(s3, s4))
    assert node_product(t, "zero") == compose(s1, conjugate(s2, conjugate(s3, s4)))
    with pytest.raises(Exception):
        node_product(t, "two")


@given(marked_tuples(max_degree=4))
def test_node_products_multiply_to_identity_pairwise(t):
    # the product over a node equals the inverse of the complementary product:
    # sigma_1 sigma_2 (sigma_3 sigma_4) = e over infty, and cyclically.
    from hurmono.perms import compose

    e = identity(t.degree)
    s1, s2, _, _ = t.perms
    assert compose(compose(s1, s2), node_product(t, "infty")) == e


# ---------------------------------------------------------------------------
# display


def test_marked_tuple_str_and_json():
    s1 = parse_perm("(1 2)", 3)
    t = MarkedTuple(
        perms=(s1, s1, identity(3), identity(3)),
        labels=((1, 1, 2), (1, 1, 2), (1, 2, 3), (3, 2, 1)),
    )
    text = marked_tuple_str(t)
    assert text == "(1 2)^1 (3)^2 | (1 2)^1 (3)^2 | (1)^1 (2)^2 (3)^3 | (1)^3 (2)^2 (3)^1"
    blob = marked_tuple_json(t)
    assert blob[0] == [{"cycle": [1, 2], "label": 1}, {"cycle": [3], "label": 2}]
    assert blob[3] == [
        {"cycle": [1], "label": 3},
        {"cycle": [2], "label": 2},
        {"cycle": [3], "label": 1},
    ]
