"""Fully-marked monodromy representations and their simultaneous conjugacy.

A *marked tuple* is a tuple (sigma_1, ..., sigma_m) of permutations of common
degree d whose left-to-right product is the identity, together with one
*marking* per fiber: a bijection from the cycles of sigma_i (fixed points
included) onto the labels {1..n_i}, where the cycle labeled j must have
length mu_i^j for the governing ramification profile mu_i.

Markings are stored as point-label vectors: ``labels[i][x]`` is the label of
the cycle of sigma_i containing the point x.  Conjugating the tuple by w
transports every marking forward along cycle images: the cycle
(w(a_1) ... w(a_r)) of w sigma_i w^-1 inherits the label of (a_1 ... a_r),
i.e. the new vector is ``lab . w^-1``.

Two marked tuples are equivalent iff one is a transport of the other by some
w in S_d; ``canonicalize`` picks the minimum of the orbit under a fixed total
order, so equality of canonical forms decides equivalence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .perms import (
    Partition,
    Perm,
    all_perms,
    compose,
    compose_all,
    conjugate,
    cycle_decomposition,
    cycle_type,
    identity,
    inverse,
    is_partition,
    orbits,
)

CANON_MAX_DEGREE = 9

BOUNDARY_LABELS = ("zero", "one", "infty")


class SpecError(ValueError):
    """A malformed Hurwitz space description."""


class TooLargeError(ValueError):
    """Instance exceeds the enumeration/canonicalization guards."""


class InvariantViolation(RuntimeError):
    """An internal invariant failed; indicates a defect, not a user error."""


LabelVector = tuple[int, ...]


@dataclass(frozen=True)
class MarkedTuple:
    """Permutations (sigma_1..sigma_m) with one point-label vector per fiber."""

    perms: tuple[Perm, ...]
    labels: tuple[LabelVector, ...]

    @property
    def degree(self) -> int:
        return len(self.perms[0])

    @property
    def m(self) -> int:
        return len(self.perms)


@dataclass(frozen=True)
class HurwitzSpec:
    """A Hurwitz space of fully-marked covers: (degrees, genera, profiles).

    ``degrees`` and ``genera`` pair up componentwise (degree d_l, genus g_l of
    the l-th source component); the pairs are normalized to nonincreasing
    order since no output distinguishes source components beyond the multiset
    {(d_l, g_l)}.  ``profiles`` are the m ramification profiles mu_i, each a
    partition of d = sum(degrees).
    """

    degrees: tuple[int, ...]
    genera: tuple[int, ...]
    profiles: tuple[Partition, ...]

    def __post_init__(self):
        if not self.degrees or any(not isinstance(x, int) or x < 1 for x in self.degrees):
            raise SpecError(f"degrees must be positive integers, got {self.degrees}")
        if len(self.genera) != len(self.degrees):
            raise SpecError(
                f"genera length {len(self.genera)} != degrees length {len(self.degrees)}"
            )
        if any(not isinstance(g, int) or g < 0 for g in self.genera):
            raise SpecError(f"genera must be nonnegative integers, got {self.genera}")
        pairs = sorted(zip(self.degrees, self.genera), reverse=True)
        object.__setattr__(self, "degrees", tuple(p[0] for p in pairs))
        object.__setattr__(self, "genera", tuple(p[1] for p in pairs))
        if len(self.profiles) < 3:
            raise SpecError(f"need at least 3 marked fibers, got {len(self.profiles)}")
        d = self.d
        norm = []
        for mu in self.profiles:
            mu = tuple(sorted(mu, reverse=True))
            if not is_partition(mu):
                raise SpecError(f"profile {mu} is not a partition")
            if sum(mu) != d:
                raise SpecError(f"profile {mu} has weight {sum(mu)}, expected {d}")
            norm.append(mu)
        object.__setattr__(self, "profiles", tuple(norm))

    @property
    def d(self) -> int:
        return sum(self.degrees)

    @property
    def m(self) -> int:
        return len(self.profiles)

    @property
    def signature(self) -> tuple[tuple[int, int], ...]:
        """The multiset {(d_l, g_l)} as a sorted tuple of pairs."""
        return tuple(sorted(zip(self.degrees, self.genera)))


# ---------------------------------------------------------------------------
# markings


def marking_key(p: Perm, lab: LabelVector) -> tuple[int, ...]:
    """Labels of the cycles of p read in canonical cycle order."""
    return tuple(lab[c[0]] for c in cycle_decomposition(p))


def enumerate_markings(p: Perm, mu: Partition) -> tuple[LabelVector, ...]:
    """All valid point-label vectors for p under profile mu, ascending.

    The count is the product over distinct cycle lengths l of
    (multiplicity of l in mu)!.  Ascending means ascending marking_key.

    >>> len(enumerate_markings((1, 0, 2, 4, 3), (2, 2, 1)))
    2
    """
    mu = tuple(mu)
    cycles = cycle_decomposition(p)
    if cycle_type(p) != mu:
        raise ValueError(f"cycle type {cycle_type(p)} does not match profile {mu}")
    # Canonical cycle order puts equal lengths contiguously (lengths descend),
    # so a marking is a choice, per length, of a permutation of that length's
    # label indices; iterating each block's permutations lexicographically
    # yields vectors in ascending marking_key order.
    blocks = [
        [j + 1 for j, part in enumerate(mu) if part == length]
        for length, _ in itertools.groupby(len(c) for c in cycles)
    ]
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        flat = itertools.chain.from_iterable(choice)
        lab = [0] * len(p)
        for cyc, label in zip(cycles, flat):
            for x in cyc:
                lab[x] = label
        out.append(tuple(lab))
    return tuple(out)


def marking_map(p: Perm, lab: LabelVector) -> dict[int, int]:
    """The marking as {cycle minimum (1-indexed): label}."""
    return {c[0] + 1: lab[c[0]] for c in cycle_decomposition(p)}


def valid_marking(p: Perm, lab: LabelVector, mu: Partition) -> bool:
    """Check lab is constant on cycles and bijects them onto labels of mu."""
    if len(lab) != len(p):
        return False
    seen = {}
    for cyc in cycle_decomposition(p):
        label = lab[cyc[0]]
        if any(lab[x] != label for x in cyc):
            return False
        if label in seen:
            return False
        seen[label] = len(cyc)
    mu = tuple(mu)
    if sorted(seen) != list(range(1, len(mu) + 1)):
        return False
    return all(seen[j + 1] == part for j, part in enumerate(mu))


# ---------------------------------------------------------------------------
# transport and canonical forms


def transport_labels(w: Perm, labels: tuple[LabelVector, ...]) -> tuple[LabelVector, ...]:
    wi = inverse(w)
    return tuple(tuple(lab[x] for x in wi) for lab in labels)


def transport_marking(w: Perm, t: MarkedTuple) -> MarkedTuple:
    """Conjugate every sigma_i by w and carry each label along cycle images."""
    if len(w) != t.degree:
        raise ValueError(f"degree mismatch: {len(w)} vs {t.degree}")
    return MarkedTuple(
        perms=tuple(conjugate(w, p) for p in t.perms),
        labels=transport_labels(w, t.labels),
    )


def tuple_key(t: MarkedTuple):
    """Total order key: concatenated images, then markings in cycle order."""
    return (
        tuple(itertools.chain.from_iterable(t.perms)),
        tuple(
            itertools.chain.from_iterable(
                marking_key(p, lab) for p, lab in zip(t.perms, t.labels)
            )
        ),
    )


@lru_cache(maxsize=65536)
def _unmarked_minimum(perms: tuple[Perm, ...]) -> tuple[tuple[Perm, ...], tuple[Perm, ...]]:
    """Minimum of the conjugacy orbit of ``perms`` and all w achieving it."""
    d = len(perms[0])
    best = None
    achievers = []
    for w in all_perms(d):
        imgs = tuple(conjugate(w, p) for p in perms)
        if best is None or imgs < best:
            best = imgs
            achievers = [w]
        elif imgs == best:
            achievers.append(w)
    return best, tuple(achievers)


def canonicalize(t: MarkedTuple) -> MarkedTuple:
    """Minimum of {transport_marking(w, t) : w in S_d} under tuple_key.

    Exhaustive over all d! conjugators (two-stage: images first, then
    markings over the achievers).  Guarded to d <= CANON_MAX_DEGREE.
    """
    d = t.degree
    if d > CANON_MAX_DEGREE:
        raise TooLargeError("instance too large: canonical forms need d <= 9")
    cu, achievers = _unmarked_minimum(t.perms)
    best_key = None
    best_labels = None
    for w in achievers:
        labels = transport_labels(w, t.labels)
        key = tuple(
            itertools.chain.from_iterable(
                marking_key(p, lab) for p, lab in zip(cu, labels)
            )
        )
        if best_key is None or key < best_key:
            best_key = key
            best_labels = labels
    return MarkedTuple(perms=cu, labels=best_labels)


def validate_marked_tuple(t: MarkedTuple, spec: HurwitzSpec | None = None) -> None:
    """Raise InvariantViolation unless t is a valid marked tuple (for spec)."""
    d = t.degree
    if any(len(p) != d for p in t.perms) or len(t.labels) != t.m:
        raise InvariantViolation("ragged marked tuple")
    if compose_all(t.perms) != identity(d):
        raise InvariantViolation("product of tuple is not the identity")
    for i, (p, lab) in enumerate(zip(t.perms, t.labels)):
        mu = spec.profiles[i] if spec is not None else cycle_type(p)
        if spec is not None and cycle_type(p) != mu:
            raise InvariantViolation(f"fiber {i + 1} has cycle type {cycle_type(p)}, expected {mu}")
        if not valid_marking(p, lab, mu):
            raise InvariantViolation(f"fiber {i + 1} carries an invalid marking")
    if spec is not None and component_signature(t) != spec.signature:
        raise InvariantViolation("component signature does not match spec")


# ---------------------------------------------------------------------------
# source-curve invariants


def signature_of_perms(perms: tuple[Perm, ...], d: int) -> tuple[tuple[int, int], ...]:
    """Multiset of (orbit size, orbit genus) pairs, as a sorted tuple.

    The genus of an orbit O is given by Riemann-Hurwitz over a genus-0 target:
    g(O) = 1 - |O| + (1/2) * sum over fibers of sum over cycles c inside O of
    (|c| - 1).
    """
    cycles_per_fiber = [cycle_decomposition(p) for p in perms]
    sig = []
    for orbit in orbits(perms, d):
        members = set(orbit)
        n = len(orbit)
        ram = sum(
            len(c) - 1
            for cycles in cycles_per_fiber
            for c in cycles
            if c[0] in members
        )
        two_g = 2 - 2 * n + ram
        if two_g % 2 or two_g < 0:
            raise InvariantViolation(
                f"orbit {tuple(x + 1 for x in orbit)} has invalid genus ({two_g}/2)"
            )
        sig.append((n, two_g // 2))
    return tuple(sorted(sig))


def component_signature(t: MarkedTuple) -> tuple[tuple[int, int], ...]:
    """Signature of a marked tuple's permutation part; see signature_of_perms."""
    return signature_of_perms(t.perms, t.degree)


def node_product(t: MarkedTuple, boundary: str) -> Perm:
    """The permutation whose cycle type is the ramification profile over the
    node appearing at the named boundary degeneration (m = 4 only).

    infty -> sigma_3 sigma_4; one -> sigma_2 (sigma_3 sigma_4 sigma_3^-1);
    zero -> sigma_1 (sigma_2 sigma_3 sigma_4 sigma_3^-1 sigma_2^-1).
    """
    if t.m != 4:
        raise SpecError("node products require exactly 4 marked fibers")
    s1, s2, s3, s4 = t.perms
    if boundary == "infty":
        return compose(s3, s4)
    if boundary == "one":
        return compose(s2, conjugate(s3, s4))
    if boundary == "zero":
        return compose(s1, conjugate(s2, conjugate(s3, s4)))
    raise ValueError(f"unknown boundary label {boundary!r}")


# ---------------------------------------------------------------------------
# text forms


def marked_fiber_str(p: Perm, lab: LabelVector) -> str:
    """One fiber as labeled cycles, e.g. ``"(1 2)^1 (3)^2 (4 5)^3"``."""
    return " ".join(
        "(" + " ".join(str(x + 1) for x in cyc) + ")^" + str(lab[cyc[0]])
        for cyc in cycle_decomposition(p)
    )


def marked_tuple_str(t: MarkedTuple) -> str:
    """All fibers of a marked tuple, joined by `` | ``."""
    return " | ".join(marked_fiber_str(p, lab) for p, lab in zip(t.perms, t.labels))


def marked_tuple_json(t: MarkedTuple) -> list[list[dict]]:
    """JSON form: per fiber, a list of {"cycle": [...], "label": j}."""
    return [
        [
            {"cycle": [x + 1 for x in cyc], "label": lab[cyc[0]]}
            for cyc in cycle_decomposition(p)
        ]
        for p, lab in zip(t.perms, t.labels)
    ]
