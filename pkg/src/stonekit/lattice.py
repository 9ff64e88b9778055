"""Finite posets, lattices and frames over integer carriers.

Elements are ints 0..n-1. Order is stored as bitmask rows: ``below[i]``
has bit j set exactly when j <= i. Down-sets, opens and element subsets
are all masks in the same convention. Every value here is immutable;
operations build new objects.

The element count is soft-capped (default 4096, override with the
STONE_MAX_LATTICE environment variable, read per call). Meet and join
tables are materialized up front, so lattices near the cap are memory
hungry; the sizes this package sweeps stay far below it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _accel
from ._kernels import bits
from .errors import LatticeTooLarge, NotALattice, NotAPoset

DEFAULT_MAX_LATTICE = 4096


def max_lattice_size() -> int:
    raw = os.environ.get("STONE_MAX_LATTICE", "")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_MAX_LATTICE


def mask_of(items) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset as reflexive-transitive ``below`` masks."""

    n: int
    below: tuple[int, ...]

    def __post_init__(self):
        if self.n != len(self.below):
            raise NotAPoset(f"expected {self.n} rows, got {len(self.below)}")
        bad = _accel.check_poset(list(self.below))
        if bad is not None:
            reason, i, j = bad
            raise NotAPoset(f"{reason} at elements ({i}, {j})")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "FinitePoset":
        """Poset generated by ``i <= j`` pairs (closure is taken here)."""
        below = [1 << i for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise NotAPoset(f"pair ({i}, {j}) out of range for n={n}")
            below[j] |= 1 << i
        return cls(n, tuple(_accel.closure(below)))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls(n, tuple((1 << (i + 1)) - 1 for i in range(n)))

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls(n, tuple(1 << i for i in range(n)))

    def leq(self, i: int, j: int) -> bool:
        return (self.below[j] >> i) & 1 == 1

    def above(self) -> tuple[int, ...]:
        return tuple(_accel.transpose(list(self.below)))

    def is_down_closed(self, mask: int) -> bool:
        for i in bits(mask):
            if self.below[i] & ~mask:
                return False
        return True

    def down_closure(self, mask: int) -> int:
        out = mask
        for i in bits(mask):
            out |= self.below[i]
        return out

    def up_closure(self, mask: int) -> int:
        out = mask
        above = self.above()
        for i in bits(mask):
            out |= above[i]
        return out

    def subposet(self, elements) -> "FinitePoset":
        """Induced subposet; element k is ``elements[k]`` of the parent."""
        elements = list(elements)
        pos = {e: k for k, e in enumerate(elements)}
        below = []
        for e in elements:
            m = 0
            for f in bits(self.below[e]):
                if f in pos:
                    m |= 1 << pos[f]
            below.append(m)
        return FinitePoset(len(elements), tuple(below))

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with j covering i, for rendering."""
        out = []
        for j in range(self.n):
            strict = self.below[j] & ~(1 << j)
            for i in bits(strict):
                between = strict & ~self.below[i]
                if all((self.below[k] >> i) & 1 == 0 for k in bits(between)):
                    out.append((i, j))
        return out

    def minimal_elements(self) -> list[int]:
        return [i for i in range(self.n) if self.below[i] == 1 << i]

    def maximal_elements(self) -> list[int]:
        above = self.above()
        return [i for i in range(self.n) if above[i] == 1 << i]


@dataclass(frozen=True)
class FiniteLattice:
    """A finite bounded lattice with materialized meet and join tables.

    ``labels`` optionally names each element (down-set masks for Birkhoff
    duals, ambient indices for sublattices); it never affects semantics.
    """

    order: FinitePoset
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    labels: tuple | None = None

    def __post_init__(self):
        n = self.order.n
        if len(self.meet_table) != n or len(self.join_table) != n:
            raise NotALattice("table size does not match the carrier")
        if self.labels is not None and len(self.labels) != n:
            raise NotALattice("label count does not match the carrier")

    @property
    def n(self) -> int:
        return self.order.n

    def leq(self, x: int, y: int) -> bool:
        return self.order.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def big_meet(self, xs) -> int:
        out = self.top
        for x in xs:
            out = self.meet_table[out][x]
        return out

    def big_join(self, xs) -> int:
        out = self.bottom
        for x in xs:
            out = self.join_table[out][x]
        return out

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    def index_of_label(self, label) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)


@dataclass(frozen=True)
class FrameWitness:
    """Outcome of the exhaustive distributivity scan of one lattice."""

    lattice: FiniteLattice
    distributive: bool
    witness: tuple[int, int, int] | None = None


def validate_lattice(order: FinitePoset, labels=None) -> FiniteLattice:
    """Certify that ``order`` is a lattice and build the table form.

    Raises NotALattice with a witness pair when some meet or join is
    missing, and LatticeTooLarge past the soft cap.
    """
    cap = max_lattice_size()
    if order.n > cap:
        raise LatticeTooLarge(f"{order.n} elements exceeds the cap of {cap}")
    if order.n == 0:
        raise NotALattice("empty carrier has no bounds", witness=None)
    meet, join, bad = _accel.bound_tables(list(order.below))
    if bad is not None:
        kind, x, y = bad
        raise NotALattice(f"elements {x} and {y} have no {kind}", witness=bad)
    bottom = 0
    top = 0
    for x in range(order.n):
        bottom = meet[bottom][x]
        top = join[top][x]
    return FiniteLattice(
        order=order,
        meet_table=tuple(tuple(row) for row in meet),
        join_table=tuple(tuple(row) for row in join),
        bottom=bottom,
        top=top,
        labels=tuple(labels) if labels is not None else None,
    )


def big_meet(lat: FiniteLattice, xs) -> int:
    """Meet of any element subset; the empty subset gives the top."""
    return lat.big_meet(xs)


def big_join(lat: FiniteLattice, xs) -> int:
    """Join of any element subset; the empty subset gives the bottom."""
    return lat.big_join(xs)


def is_frame(lat: FiniteLattice) -> FrameWitness:
    """Exhaustive triple check of the distributive law.

    On finite carriers distributivity over binary joins is the whole
    frame condition, since every join is a finite one.
    """
    witness = _accel.distributive_witness(lat.meet_table, lat.join_table)
    return FrameWitness(lat, witness is None, witness)


def downset_lattice(poset: FinitePoset) -> FiniteLattice:
    """The lattice of down-sets, labeled by their masks.

    Always a frame; the exhaustive scan in is_frame confirms this in
    tests rather than being assumed here.
    """
    cap = max_lattice_size()
    masks = _accel.downset_masks(list(poset.below), cap)
    if masks is None:
        raise LatticeTooLarge(
            f"more than {cap} down-sets; raise STONE_MAX_LATTICE to allow"
        )
    index = {m: k for k, m in enumerate(masks)}
    n = len(masks)
    below = []
    for m in masks:
        row = 0
        for k, other in enumerate(masks):
            if other & ~m == 0:
                row |= 1 << k
        below.append(row)
    order = FinitePoset(n, tuple(below))
    meet = tuple(
        tuple(index[a & b] for b in masks) for a in masks
    )
    join = tuple(
        tuple(index[a | b] for b in masks) for a in masks
    )
    full = masks[-1]
    return FiniteLattice(
        order=order,
        meet_table=meet,
        join_table=join,
        bottom=index[0],
        top=index[full],
        labels=tuple(masks),
    )


def boolean_lattice(k: int) -> FiniteLattice:
    """All subsets of k points, labeled by subset masks."""
    return downset_lattice(FinitePoset.antichain(k))


def sublattice(lat: FiniteLattice, elements) -> FiniteLattice:
    """The induced order on ``elements``, certified as a lattice.

    Labels are the ambient element indices. Meets and joins are those of
    the subposet, which need not agree with the ambient ones.
    """
    elements = sorted(set(elements))
    if not elements:
        raise NotALattice("empty carrier has no bounds")
    sub = lat.order.subposet(elements)
    return validate_lattice(sub, labels=elements)


def _invariant_keys(poset: FinitePoset):
    above = poset.above()
    return [
        (poset.below[i].bit_count(), above[i].bit_count())
        for i in range(poset.n)
    ]


def poset_isomorphism(a: FinitePoset, b: FinitePoset):
    """An order isomorphism a -> b as a tuple, or None.

    Backtracking over degree-compatible candidates; fine at the sizes
    this package handles, not meant for large carriers.
    """
    if a.n != b.n:
        return None
    ka = _invariant_keys(a)
    kb = _invariant_keys(b)
    if sorted(ka) != sorted(kb):
        return None
    candidates = [
        [j for j in range(b.n) if kb[j] == ka[i]] for i in range(a.n)
    ]
    order = sorted(range(a.n), key=lambda i: len(candidates[i]))
    assign = [-1] * a.n
    used = [False] * b.n

    def place(k: int) -> bool:
        if k == a.n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for prev in order[:k]:
                if a.leq(i, prev) != b.leq(j, assign[prev]) or a.leq(
                    prev, i
                ) != b.leq(assign[prev], j):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if place(k + 1):
                    return True
                assign[i] = -1
                used[j] = False
        return False

    return tuple(assign) if place(0) else None


def lattice_isomorphism(a: FiniteLattice, b: FiniteLattice):
    """An isomorphism between the underlying orders, or None.

    For lattices an order isomorphism automatically respects meets and
    joins, so no table check is needed.
    """
    return poset_isomorphism(a.order, b.order)
