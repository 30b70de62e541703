"""Monodromy of the target map for m = 4 marked fibers.

Transporting a 4-marked target around each of the three boundary points of
its moduli induces a move on monodromy tuples.  Each move conjugates every
fiber by an explicit word in the sigma_i -- the *conjugator tuple* w below --
so sigma_i becomes tau_i = w_i sigma_i w_i^-1 and the fiber's marking is
transported through w_i.  The three moves are:

  around infty:  w = (e, e, s3 s4, s3)
  around one:    w = (e, s2 s3 s4 s3^-1, e, s3^-1 s2 s3)
  around zero:   w = (s1 W, e, e, s3^-1 s2^-1 s1 s2 s3),  W = s2 s3 s4 s3^-1 s2^-1

Each move permutes the canonical sheet set of a space; the resulting three
permutations generate the monodromy group of the target map, whose orbits
are the connected components of the space.  Per component, Riemann-Hurwitz
over the genus-0 moduli of 4-marked targets gives the component genus from
the three ramification partitions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .marked import (
    BOUNDARY_LABELS,
    HurwitzSpec,
    InvariantViolation,
    MarkedTuple,
    SpecError,
    canonicalize,
    node_product,
    transport_labels,
    tuple_key,
)
from .perms import (
    Partition,
    Perm,
    compose,
    compose_all,
    conjugate,
    cycle_type,
    identity,
    inverse,
    orbits,
)
from .sheets import enumerate_sheets


def _apply_conjugators(ws: tuple[Perm, ...], t: MarkedTuple) -> MarkedTuple:
    return MarkedTuple(
        perms=tuple(conjugate(w, p) for w, p in zip(ws, t.perms)),
        labels=tuple(
            transport_labels(w, (lab,))[0] for w, lab in zip(ws, t.labels)
        ),
    )


def _require_four(t: MarkedTuple) -> None:
    if t.m != 4:
        raise SpecError("monodromy requires exactly 4 marked fibers")


def move_infty(t: MarkedTuple) -> MarkedTuple:
    """The move around infty: conjugators (e, e, s3 s4, s3)."""
    _require_four(t)
    s1, s2, s3, s4 = t.perms
    e = identity(t.degree)
    return _apply_conjugators((e, e, compose(s3, s4), s3), t)


def move_one(t: MarkedTuple) -> MarkedTuple:
    """The move around one: conjugators (e, s2 s3 s4 s3^-1, e, s3^-1 s2 s3)."""
    _require_four(t)
    s1, s2, s3, s4 = t.perms
    e = identity(t.degree)
    w2 = compose_all((s2, s3, s4, inverse(s3)))
    w4 = compose_all((inverse(s3), s2, s3))
    return _apply_conjugators((e, w2, e, w4), t)


def move_zero(t: MarkedTuple) -> MarkedTuple:
    """The move around zero: conjugators (s1 W, e, e, s3^-1 s2^-1 s1 s2 s3)."""
    _require_four(t)
    s1, s2, s3, s4 = t.perms
    e = identity(t.degree)
    w_big = compose_all((s2, s3, s4, inverse(s3), inverse(s2)))
    w1 = compose(s1, w_big)
    w4 = compose_all((inverse(s3), inverse(s2), s1, s2, s3))
    return _apply_conjugators((w1, e, e, w4), t)


MOVES = {"zero": move_zero, "one": move_one, "infty": move_infty}


@dataclass(frozen=True)
class SheetGraph:
    """Canonical sheets plus the three induced permutations of their indices."""

    spec: HurwitzSpec
    sheets: tuple[MarkedTuple, ...]
    s_zero: tuple[int, ...]
    s_one: tuple[int, ...]
    s_infty: tuple[int, ...]

    def s(self, boundary: str) -> tuple[int, ...]:
        return {"zero": self.s_zero, "one": self.s_one, "infty": self.s_infty}[boundary]

    @property
    def boundary_product_is_identity(self) -> bool:
        """Empirical record: does applying s_zero, then s_one, then s_infty
        give the identity?  (The loops around the three boundary points
        compose, in that order, to a contractible loop.)

        Not asserted anywhere; reported for the curious.
        """
        n = len(self.sheets)
        if n == 0:
            return True
        return compose_all((self.s_infty, self.s_one, self.s_zero)) == tuple(range(n))


@dataclass(frozen=True)
class ComponentReport:
    """One connected component of the space as a cover of the target moduli."""

    sheet_indices: tuple[int, ...]
    degree: int
    genus: int
    ram_zero: Partition
    ram_one: Partition
    ram_infty: Partition
    nodes_zero: tuple[Partition, ...]
    nodes_one: tuple[Partition, ...]
    nodes_infty: tuple[Partition, ...]

    def ram(self, boundary: str) -> Partition:
        return {"zero": self.ram_zero, "one": self.ram_one, "infty": self.ram_infty}[boundary]

    def nodes(self, boundary: str) -> tuple[Partition, ...]:
        return {"zero": self.nodes_zero, "one": self.nodes_one, "infty": self.nodes_infty}[boundary]


def build_sheet_graph(spec: HurwitzSpec, reduce_symmetry: bool = True) -> SheetGraph:
    """Enumerate the sheets and the action of the three moves on them."""
    if spec.m != 4:
        raise SpecError("monodromy requires exactly 4 marked fibers")
    sheets = enumerate_sheets(spec, reduce_symmetry=reduce_symmetry)
    index = {tuple_key(t): k for k, t in enumerate(sheets)}
    maps = {}
    for boundary, mover in MOVES.items():
        images = []
        for t in sheets:
            moved = mover(t)
            k = index.get(tuple_key(moved))
            if k is None:
                k = index.get(tuple_key(canonicalize(moved)))
            if k is None:
                raise InvariantViolation(
                    f"move around {boundary} left the sheet set of {spec}"
                )
            images.append(k)
        if sorted(images) != list(range(len(sheets))):
            raise InvariantViolation(f"move around {boundary} is not a bijection of sheets")
        maps[boundary] = tuple(images)
    return SheetGraph(
        spec=spec,
        sheets=sheets,
        s_zero=maps["zero"],
        s_one=maps["one"],
        s_infty=maps["infty"],
    )


def _restricted_cycles(perm: tuple[int, ...], members: set[int]) -> list[list[int]]:
    seen = set()
    cycles = []
    for start in sorted(members):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles


def components(graph: SheetGraph) -> tuple[ComponentReport, ...]:
    """Connected components with target-map degree, ramification, and genus.

    Per component of the group generated by s_zero, s_one, s_infty: degree is
    the orbit size, ram over each boundary is the cycle type of the
    restricted permutation, the genus comes from
    2g - 2 = -2 degree + sum over boundaries of sum of (part - 1), and the
    node profiles collect cycle_type(node_product(.)) for one sheet per cycle.
    Sorted by (degree, genus, ram) for reproducibility.
    """
    n = len(graph.sheets)
    if n == 0:
        return ()
    reports = []
    for orbit in orbits([graph.s_zero, graph.s_one, graph.s_infty], n):
        members = set(orbit)
        degree = len(orbit)
        rams = {}
        nodes = {}
        ram_sum = 0
        for boundary in BOUNDARY_LABELS:
            cycles = _restricted_cycles(graph.s(boundary), members)
            rams[boundary] = tuple(sorted((len(c) for c in cycles), reverse=True))
            ram_sum += sum(len(c) - 1 for c in cycles)
            nodes[boundary] = tuple(
                sorted(
                    (cycle_type(node_product(graph.sheets[c[0]], boundary)) for c in cycles),
                    reverse=True,
                )
            )
        two_g = 2 - 2 * degree + ram_sum
        if two_g % 2 or two_g < 0:
            raise InvariantViolation(
                f"component of degree {degree} has invalid genus ({two_g}/2)"
            )
        reports.append(
            ComponentReport(
                sheet_indices=tuple(orbit),
                degree=degree,
                genus=two_g // 2,
                ram_zero=rams["zero"],
                ram_one=rams["one"],
                ram_infty=rams["infty"],
                nodes_zero=nodes["zero"],
                nodes_one=nodes["one"],
                nodes_infty=nodes["infty"],
            )
        )
    reports.sort(
        key=lambda r: (r.degree, r.genus, r.ram_zero, r.ram_one, r.ram_infty, r.sheet_indices)
    )
    return tuple(reports)


def component_multiset(reports) -> tuple[tuple[int, int, int], ...]:
    """Aggregate components to sorted (count, genus, degree) triples."""
    counts: dict[tuple[int, int], int] = {}
    for r in reports:
        counts[(r.genus, r.degree)] = counts.get((r.genus, r.degree), 0) + 1
    return tuple(sorted((c, g, deg) for (g, deg), c in counts.items()))
