"""Sheet enumeration: one canonical marked tuple per simultaneous-conjugacy
class compatible with a Hurwitz spec.

Generation iterates sigma_1..sigma_{m-1} over their conjugacy classes and
forces sigma_m to close the product; candidates failing the last cycle type
or the component-signature filter are dropped.  Distinct candidates landing
in the same unmarked conjugacy class are merged, and per unmarked class the
markings are swept in ascending order while knocking out the orbit of each
new representative under the class centralizer.  The first-seen marking of
each orbit is therefore exactly the canonical one, so the sweep emits
canonical sheets directly.

``reduce_symmetry`` restricts sigma_1 to a single class representative
(every conjugacy class of tuples contains one of that shape); results are
bit-identical with the flag on or off, only the number of candidate tuples
visited changes.
"""

from __future__ import annotations

import itertools

from .marked import (
    HurwitzSpec,
    MarkedTuple,
    TooLargeError,
    _unmarked_minimum,
    enumerate_markings,
    signature_of_perms,
    transport_labels,
    tuple_key,
)
from .perms import compose_all, conjugacy_class, cycle_type, inverse

MAX_ENUM_DEGREE = 9
MAX_ENUM_FIBERS = 6


def _check_guards(spec: HurwitzSpec) -> None:
    if spec.d > MAX_ENUM_DEGREE:
        raise TooLargeError(
            f"instance too large: enumeration supports d <= {MAX_ENUM_DEGREE}, got {spec.d}"
        )
    if spec.m > MAX_ENUM_FIBERS:
        raise TooLargeError(
            f"instance too large: enumeration supports m <= {MAX_ENUM_FIBERS}, got {spec.m}"
        )


def enumerate_sheets(spec: HurwitzSpec, reduce_symmetry: bool = True) -> tuple[MarkedTuple, ...]:
    """All sheets of the space over the open target moduli, sorted canonically.

    Exactly one representative per simultaneous-conjugacy class of marked
    tuples with cycle_type(sigma_i) = mu_i, identity product, and component
    signature equal to the spec's {(d_l, g_l)}.  May be empty.
    """
    _check_guards(spec)
    d = spec.d
    want = spec.signature
    classes = [conjugacy_class(mu, d) for mu in spec.profiles]
    first = classes[0][:1] if reduce_symmetry else classes[0]
    last_mu = spec.profiles[-1]

    sheets: list[MarkedTuple] = []
    seen_unmarked: set[tuple] = set()
    for prefix in itertools.product(first, *classes[1:-1]):
        last = inverse(compose_all(prefix))
        if cycle_type(last) != last_mu:
            continue
        perms = (*prefix, last)
        if signature_of_perms(perms, d) != want:
            continue
        canonical, _ = _unmarked_minimum(perms)
        if canonical in seen_unmarked:
            continue
        seen_unmarked.add(canonical)
        sheets.extend(_sheets_of_unmarked_class(canonical, spec))
    sheets.sort(key=tuple_key)
    return tuple(sheets)


def _sheets_of_unmarked_class(perms, spec: HurwitzSpec) -> list[MarkedTuple]:
    """Canonical sheets whose permutation part is the (canonical) ``perms``.

    Sweeps the full marking product in ascending order; each unseen vector is
    the minimum of its orbit under the centralizer of ``perms``, hence
    canonical, and its whole orbit is marked seen.
    """
    _, stabilizer = _unmarked_minimum(perms)
    stab_inverses = [inverse(z) for z in stabilizer if z != tuple(range(len(z)))]
    fibers = [enumerate_markings(p, mu) for p, mu in zip(perms, spec.profiles)]
    out = []
    seen: set[tuple] = set()
    for labels in itertools.product(*fibers):
        key = tuple(itertools.chain.from_iterable(labels))
        if key in seen:
            continue
        out.append(MarkedTuple(perms=perms, labels=labels))
        for zi in stab_inverses:
            seen.add(tuple(lab[x] for lab in labels for x in zi))
    return out


def count_sheets(spec: HurwitzSpec, reduce_symmetry: bool = True) -> int:
    """Number of sheets of the space; 0 for empty spaces."""
    return len(enumerate_sheets(spec, reduce_symmetry=reduce_symmetry))
