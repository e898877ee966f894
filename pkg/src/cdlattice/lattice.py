"""
Subgroup lattices: enumeration, meet/join, Hasse diagram and the
modularity / self-duality predicates used on Chermak-Delgado sublattices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .group_core import GroupTable, SubgroupSet, cyclic_subgroup, generate

__all__ = [
    "LatticeError",
    "NotASublatticeError",
    "SubgroupLattice",
    "Sublattice",
    "SelfDuality",
    "enumerate_subgroups",
    "meet",
    "join",
    "is_modular",
    "is_self_dual",
    "to_dot",
    "DEFAULT_SUBGROUP_CAP",
]

DEFAULT_SUBGROUP_CAP = 100_000


class LatticeError(RuntimeError):
    pass


class NotASublatticeError(LatticeError):
    """Member set is not closed under the parent lattice's meet and join."""


class SubgroupLattice:
    """
    All subgroups of a group, sorted by ``(size, mask)``.

    Indices into :attr:`subgroups` are the lattice elements; ``bottom`` is the
    trivial subgroup (always 0) and ``top`` the whole group (always last).
    """

    def __init__(self, group: GroupTable, subgroups: Iterable[SubgroupSet]):
        self.group = group
        self.subgroups = tuple(sorted(subgroups, key=lambda h: (h.order, h.mask)))
        self._index = {h.mask: i for i, h in enumerate(self.subgroups)}
        if len(self._index) != len(self.subgroups):
            raise LatticeError("duplicate subgroups in lattice")
        self.bottom = self._index[1]
        self.top = self._index[group.full_mask]
        self._join_cache: dict[tuple[int, int], int] = {}

    def __len__(self):
        return len(self.subgroups)

    def __getitem__(self, i: int) -> SubgroupSet:
        return self.subgroups[i]

    def __repr__(self):
        return f"SubgroupLattice(order={self.group.order}, subgroups={len(self)})"

    def index(self, h: SubgroupSet | int) -> int:
        mask = h if isinstance(h, int) else h.mask
        try:
            return self._index[mask]
        except KeyError:
            raise KeyError(f"mask {mask:#x} is not a subgroup in this lattice") from None

    def leq(self, x: int, y: int) -> bool:
        a, b = self.subgroups[x].mask, self.subgroups[y].mask
        return a & b == a

    def _check(self, *idx: int) -> None:
        n = len(self.subgroups)
        for i in idx:
            if not 0 <= i < n:
                raise IndexError(f"subgroup index {i} out of range [0, {n})")

    @cached_property
    def upsets(self) -> tuple[int, ...]:
        """``upsets[x]`` is a bit mask over subgroup indices of all y >= x."""
        masks = [h.mask for h in self.subgroups]
        out = []
        for a in masks:
            bits = 0
            for j, b in enumerate(masks):
                if a & b == a:
                    bits |= 1 << j
            out.append(bits)
        return tuple(out)

    @cached_property
    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs ``(lower, upper)`` in canonical order."""
        up = self.upsets
        edges = []
        for x in range(len(self)):
            strict = up[x] & ~(1 << x)
            for y in _bit_indices(strict):
                # y covers x iff nothing strictly between
                between = strict & ~up[y]
                between_leq_y = [z for z in _bit_indices(between) if up[z] >> y & 1]
                if not between_leq_y:
                    edges.append((x, y))
        return tuple(edges)

    def sublattice(self, indices: Iterable[int]) -> "Sublattice":
        return Sublattice(self, frozenset(indices))

    def whole(self) -> "Sublattice":
        return Sublattice(self, frozenset(range(len(self))))


def _bit_indices(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class Sublattice:
    """A subset of a subgroup lattice; closure is computed, never assumed."""

    parent: SubgroupLattice
    member_indices: frozenset[int]
    _sorted: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.parent._check(*self.member_indices)
        object.__setattr__(self, "_sorted", tuple(sorted(self.member_indices)))

    def __len__(self):
        return len(self.member_indices)

    def __iter__(self):
        return iter(self._sorted)

    def __contains__(self, i):
        return i in self.member_indices

    @property
    def members(self) -> tuple[int, ...]:
        return self._sorted

    def closure_violation(self) -> tuple[str, int, int] | None:
        """First pair whose meet or join leaves the member set, if any."""
        lat = self.parent
        for i, x in enumerate(self._sorted):
            for y in self._sorted[i:]:
                if meet(lat, x, y) not in self.member_indices:
                    return ("meet", x, y)
                if join(lat, x, y) not in self.member_indices:
                    return ("join", x, y)
        return None

    @cached_property
    def is_sublattice(self) -> bool:
        return bool(self.member_indices) and self.closure_violation() is None


def enumerate_subgroups(g: GroupTable, cap: int = DEFAULT_SUBGROUP_CAP) -> SubgroupLattice:
    """
    Every subgroup of ``g`` exactly once.

    Seeds with the cyclic subgroups, then joins each newly found subgroup
    with every cyclic seed until no new subgroup appears.  Every subgroup is
    a join of cyclic subgroups, so the fixed point is all of L(G).
    """
    seeds: dict[int, int] = {}
    for x in range(g.order):
        c = cyclic_subgroup(g, x)
        seeds.setdefault(c.mask, x)
    found: set[int] = set(seeds)
    work = sorted(found)
    gens = sorted(seeds.items())
    while work:
        h = work.pop()
        for cmask, x in gens:
            if cmask & h == cmask:
                continue
            j = generate(g, [x], start=h).mask
            if j not in found:
                found.add(j)
                work.append(j)
                if len(found) > cap:
                    raise LatticeError(
                        f"subgroup count exceeded the safety cap of {cap} for a group of order {g.order}"
                    )
    return SubgroupLattice(g, (SubgroupSet(m) for m in found))


def meet(lat: SubgroupLattice, x: int, y: int) -> int:
    """Index of the intersection of subgroups ``x`` and ``y``."""
    lat._check(x, y)
    return lat._index[lat.subgroups[x].mask & lat.subgroups[y].mask]


def join(lat: SubgroupLattice, x: int, y: int) -> int:
    """Index of the subgroup generated by subgroups ``x`` and ``y``."""
    lat._check(x, y)
    key = (x, y) if x <= y else (y, x)
    cached = lat._join_cache.get(key)
    if cached is not None:
        return cached
    a, b = lat.subgroups[x], lat.subgroups[y]
    if a <= b:
        r = y
    elif b <= a:
        r = x
    else:
        r = lat._index[generate(lat.group, b.mask & ~a.mask, start=a.mask).mask]
    lat._join_cache[key] = r
    return r


def _require_closed(sub: Sublattice) -> None:
    bad = sub.closure_violation()
    if bad is not None or not len(sub):
        raise NotASublatticeError(
            f"member set is not a sublattice: {bad[0]} of {bad[1]} and {bad[2]} is outside it"
            if bad
            else "empty member set"
        )


def is_modular(sub: Sublattice) -> tuple[bool, tuple[int, int, int] | None]:
    """
    Check ``x <= z  =>  x v (y ^ z) == (x v y) ^ z`` over all member triples.

    Returns ``(True, None)`` or ``(False, (x, y, z))`` with the first failing
    triple in canonical order.  Raises NotASublatticeError if the member set
    is not meet/join closed.
    """
    _require_closed(sub)
    lat = sub.parent
    members = sub.members
    for x in members:
        for z in members:
            if not lat.leq(x, z):
                continue
            for y in members:
                if join(lat, x, meet(lat, y, z)) != meet(lat, join(lat, x, y), z):
                    return False, (x, y, z)
    return True, None


class SelfDuality(enum.Enum):
    SELF_DUAL = "self-dual"
    NOT_SELF_DUAL = "not self-dual"
    UNDECIDED = "undecided at cap"

    def __bool__(self):
        if self is SelfDuality.UNDECIDED:
            raise ValueError("self-duality undecided at search cap")
        return self is SelfDuality.SELF_DUAL


def is_self_dual(sub: Sublattice, cap: int = 20) -> SelfDuality:
    """
    Search for an order-reversing bijection of the member set onto itself.

    Candidates for the image of x are restricted to members whose depth
    (longest chain to the top) equals the height of x and whose down-set
    size equals the up-set size of x.  Members beyond ``cap`` are not
    searched; the result is then ``UNDECIDED``.
    """
    _require_closed(sub)
    if len(sub) > cap:
        return SelfDuality.UNDECIDED
    lat = sub.parent
    members = sub.members
    k = len(members)
    leq = [[lat.leq(a, b) for b in members] for a in members]

    height = [0] * k
    for i in range(k):  # members sorted by size, so predecessors come first
        height[i] = max((height[j] + 1 for j in range(i) if leq[j][i]), default=0)
    depth = [0] * k
    for i in reversed(range(k)):
        depth[i] = max((depth[j] + 1 for j in range(i + 1, k) if leq[i][j]), default=0)
    n_up = [sum(leq[i]) for i in range(k)]
    n_down = [sum(leq[j][i] for j in range(k)) for i in range(k)]

    cands = [[j for j in range(k) if depth[j] == height[i] and n_down[j] == n_up[i]] for i in range(k)]
    order = sorted(range(k), key=lambda i: len(cands[i]))
    image = [-1] * k
    used = [False] * k

    def consistent(i, fi):
        for j in range(k):
            fj = image[j]
            if fj < 0:
                continue
            if leq[i][j] != leq[fj][fi] or leq[j][i] != leq[fi][fj]:
                return False
        return True

    def search(pos):
        if pos == k:
            return True
        i = order[pos]
        for fi in cands[i]:
            if used[fi] or not consistent(i, fi):
                continue
            image[i], used[fi] = fi, True
            if search(pos + 1):
                return True
            image[i], used[fi] = -1, False
        return False

    return SelfDuality.SELF_DUAL if search(0) else SelfDuality.NOT_SELF_DUAL


def to_dot(lat: SubgroupLattice, highlight: Iterable[int] = (), name: str = "L") -> str:
    """Hasse diagram in DOT; nodes ``H<index>`` labelled ``H<index>:<size>``."""
    marked = set(highlight)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, h in enumerate(lat.subgroups):
        attrs = f'label="H{i}:{h.order}"'
        if i in marked:
            attrs += ", style=filled"
        lines.append(f"  H{i} [{attrs}];")
    for a, b in lat.hasse_edges:
        lines.append(f"  H{a} -> H{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
