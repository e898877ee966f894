"""
Finite groups as validated Cayley tables over element indices 0..n-1.

The identity is always index 0.  Subgroups are stored as integer bit masks
(bit ``i`` set iff element ``i`` is a member), so intersection is ``&`` and
equality is integer comparison.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "CayleyParseError",
    "NotAGroupError",
    "NotASubgroupError",
    "GroupTable",
    "SubgroupSet",
    "GroupSpec",
    "parse_spec",
    "build_group",
    "cyclic",
    "dihedral",
    "dicyclic",
    "alternating4",
    "direct_product",
    "load_cayley_table",
    "read_cayley_file",
    "format_cayley_table",
    "relabel",
    "subgroup",
    "generate",
    "cyclic_subgroup",
    "centralizer",
    "center",
    "element_order",
    "is_abelian",
    "induced_group",
]


class GroupError(ValueError):
    """Invalid group construction parameters or malformed group data."""


class CayleyParseError(GroupError):
    pass


class NotAGroupError(GroupError):
    """The table violates a group axiom; ``triple`` holds the first witness."""

    def __init__(self, message: str, triple: tuple[int, ...] = ()):
        super().__init__(message)
        self.triple = triple


class NotASubgroupError(GroupError):
    pass


def _mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class GroupTable:
    """
    A finite group given by its Cayley table.

    ``table[i, j]`` is the index of the product of elements ``i`` and ``j``.
    The table is checked for closure, identity at 0, two-sided inverses and
    associativity on construction; there is no unchecked path.
    """

    __slots__ = ("order", "table", "inverses", "_commute", "_rows")

    identity = 0

    def __init__(self, table):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotAGroupError(f"Cayley table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        _validate(arr)
        arr = arr.astype(np.int16 if n < 2**15 else np.int64)
        arr.flags.writeable = False
        self.order = n
        self.table = arr
        inv = np.argmax(arr == 0, axis=1)
        self.inverses = tuple(int(j) for j in inv)
        self._rows = [tuple(int(v) for v in row) for row in arr]
        commute = arr == arr.T
        self._commute = tuple(_mask_of(np.flatnonzero(row)) for row in commute)

    def __repr__(self):
        return f"GroupTable(order={self.order})"

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, GroupTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def mul(self, x: int, y: int) -> int:
        return self._rows[x][y]

    def inv(self, x: int) -> int:
        return self.inverses[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverses[x], -k
        result = 0
        row = self._rows
        for _ in range(k):
            result = row[result][x]
        return result

    def commuting_mask(self, x: int) -> int:
        """Mask of all elements commuting with ``x``."""
        return self._commute[x]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def whole(self) -> "SubgroupSet":
        return SubgroupSet(self.full_mask)

    def trivial(self) -> "SubgroupSet":
        return SubgroupSet(1)


def _validate(t: np.ndarray) -> None:
    n = t.shape[0]
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NotAGroupError(f"closure violated: entry ({i}, {j}) = {int(t[i, j])} not in [0, {n})", (i, j))
    ar = np.arange(n)
    bad = np.flatnonzero((t[0] != ar) | (t[:, 0] != ar))
    if bad.size:
        j = int(bad[0])
        raise NotAGroupError(f"identity violated: element 0 is not a two-sided identity at {j}", (0, j))
    for i in range(n):
        right = np.flatnonzero(t[i] == 0)
        if right.size != 1:
            raise NotAGroupError(f"inverse violated: element {i} has {right.size} right inverses", (i,))
        j = int(right[0])
        if t[j, i] != 0:
            raise NotAGroupError(f"inverse violated: ({i}, {j}) gives 0 but ({j}, {i}) does not", (i, j))
    # (i*j)*k vs i*(j*k), vectorised over blocks of i to bound memory
    step = max(1, 2**22 // (n * n))
    for start in range(0, n, step):
        rows = t[start : start + step]
        bad = np.argwhere(t[rows, :] != rows[:, t])
        if bad.size:
            i, j, k = (int(v) for v in bad[0])
            i += start
            raise NotAGroupError(f"associativity violated at triple ({i}, {j}, {k})", (i, j, k))


@dataclass(frozen=True)
class SubgroupSet:
    """Membership bit mask of a subgroup; ``order`` is its cardinality."""

    mask: int
    order: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "order", bin(self.mask).count("1"))

    @classmethod
    def from_members(cls, members: Iterable[int]) -> "SubgroupSet":
        return cls(_mask_of(members))

    @property
    def size(self) -> int:
        return self.order

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self):
        return self.order

    def __le__(self, other):
        return self.mask & other.mask == self.mask

    def __lt__(self, other):
        return self.mask != other.mask and self <= other

    def issubset(self, other: "SubgroupSet") -> bool:
        return self <= other

    def __and__(self, other):
        return SubgroupSet(self.mask & other.mask)

    def __repr__(self):
        return f"SubgroupSet({list(self.members)})"


def _is_closed(g: GroupTable, mask: int) -> bool:
    if not mask & 1:
        return False
    members = list(_bits(mask))
    if members[-1] >= g.order:
        return False
    rows = g._rows
    for x in members:
        row = rows[x]
        for y in members:
            if not mask >> row[y] & 1:
                return False
    return True


def subgroup(g: GroupTable, members) -> SubgroupSet:
    """Validate ``members`` (indices or a SubgroupSet) as a subgroup of ``g``."""
    h = members if isinstance(members, SubgroupSet) else SubgroupSet.from_members(members)
    if not _is_closed(g, h.mask):
        raise NotASubgroupError(f"{sorted(h.members)} is not a subgroup of the order-{g.order} group")
    # finite + closed under product => closed under inverses; Lagrange as a sanity check
    assert g.order % h.order == 0
    return h


def generate(g: GroupTable, generators: Iterable[int] | int, start: int = 1) -> SubgroupSet:
    """
    Subgroup generated by ``generators`` together with the subgroup ``start``
    (a mask, assumed already closed; the trivial subgroup by default).
    """
    gens = list(_bits(generators)) if isinstance(generators, int) else list(generators)
    mask = start
    gens = [x for x in gens if not mask >> x & 1]
    if not gens:
        return SubgroupSet(mask)
    rows = g._rows
    frontier = list(_bits(mask))
    gens = sorted(set(gens) | set(frontier) - {0})
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for s in gens:
                y = row[s]
                if not mask >> y & 1:
                    mask |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return SubgroupSet(mask)


def cyclic_subgroup(g: GroupTable, x: int) -> SubgroupSet:
    mask = 1
    y = x
    rows = g._rows
    while y != 0:
        mask |= 1 << y
        y = rows[y][x]
    return SubgroupSet(mask)


def centralizer(g: GroupTable, h: SubgroupSet) -> SubgroupSet:
    """All elements commuting with every element of the subgroup ``h``."""
    subgroup(g, h)
    mask = g.full_mask
    for y in h:
        mask &= g.commuting_mask(y)
    return SubgroupSet(mask)


def center(g: GroupTable) -> SubgroupSet:
    return centralizer(g, g.whole())


def is_abelian(g: GroupTable) -> bool:
    return center(g).order == g.order


def element_order(g: GroupTable, x: int) -> int:
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} out of range for a group of order {g.order}")
    return cyclic_subgroup(g, x).order


def induced_group(g: GroupTable, h: SubgroupSet) -> tuple[GroupTable, tuple[int, ...]]:
    """
    Sub-table of ``g`` restricted to ``h``, relabelled to 0..|h|-1.

    Returns the new table and the embedding (new index -> index in ``g``).
    Members keep their relative order, so the identity stays at 0.
    """
    subgroup(g, h)
    embed = h.members
    pos = {x: i for i, x in enumerate(embed)}
    t = [[pos[g.mul(x, y)] for y in embed] for x in embed]
    return GroupTable(t), embed


def relabel(g: GroupTable, perm: Sequence[int]) -> GroupTable:
    """Isomorphic copy where old element ``i`` is renamed ``perm[i]``; ``perm[0]`` must be 0."""
    p = np.asarray(perm, dtype=np.int64)
    if sorted(p.tolist()) != list(range(g.order)) or p[0] != 0:
        raise GroupError("perm must be a permutation of 0..n-1 fixing 0")
    t = np.empty_like(g.table, dtype=np.int64)
    t[np.ix_(p, p)] = p[g.table]
    return GroupTable(t)


# ---------------------------------------------------------------------------
# builders


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError(f"cyclic: order n must be >= 1, got n={n}")
    ar = np.arange(n)
    return GroupTable((ar[:, None] + ar[None, :]) % n)


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n; element ``r^i s^j`` has index ``i + n*j``."""
    if n < 1:
        raise GroupError(f"dihedral: parameter n must be >= 1, got n={n}")
    t = np.empty((2 * n, 2 * n), dtype=np.int64)
    for (i, j), (k, l) in itertools.product(itertools.product(range(n), range(2)), repeat=2):
        # s r^k = r^-k s
        e = (i + (k if j == 0 else -k)) % n
        t[i + n * j, k + n * l] = e + n * ((j + l) % 2)
    return GroupTable(t)


def dicyclic(m: int) -> GroupTable:
    """
    Dicyclic group of order 4m: ``a^(2m) = 1``, ``b^2 = a^m``, ``b^-1 a b = a^-1``.

    Element ``a^i b^j`` (0 <= i < 2m, j in {0, 1}) has index ``i + 2m*j``, so
    ``a`` is 1, ``b`` is 2m and ``ab`` is 2m + 1.  For m a power of two this
    is the generalized quaternion group of order 4m.
    """
    if m < 2:
        raise GroupError(f"dicyclic: parameter m must be >= 2, got m={m}")
    n = 2 * m
    t = np.empty((2 * n, 2 * n), dtype=np.int64)
    for (i, j), (k, l) in itertools.product(itertools.product(range(n), range(2)), repeat=2):
        if j == 0:
            t[i + n * j, k + n * l] = (i + k) % n + n * l
        elif l == 0:
            # a^i b a^k = a^(i-k) b
            t[i + n * j, k + n * l] = (i - k) % n + n
        else:
            # a^i b a^k b = a^(i-k) b^2 = a^(i-k+m)
            t[i + n * j, k + n * l] = (i - k + m) % n
    return GroupTable(t)


def alternating4() -> GroupTable:
    """A4 as the even permutations of four points, in lexicographic order."""
    perms = [p for p in itertools.permutations(range(4)) if _parity(p) == 0]
    pos = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    t = [[pos[tuple(p[q[x]] for x in range(4))] for q in perms] for p in perms]
    return GroupTable(t)


def _parity(p) -> int:
    inversions = sum(1 for a, b in itertools.combinations(p, 2) if a > b)
    return inversions % 2


def direct_product(*factors: GroupTable) -> GroupTable:
    """Direct product; the pair (x, y) has index ``x * |H| + y`` (row-major)."""
    if len(factors) < 2:
        raise GroupError(f"direct product needs >= 2 factors, got {len(factors)}")
    t = factors[0].table.astype(np.int64)
    for f in factors[1:]:
        m = f.order
        ft = f.table.astype(np.int64)
        t = (t[:, None, :, None] * m + ft[None, :, None, :]).reshape(t.shape[0] * m, -1)
    return GroupTable(t)


# ---------------------------------------------------------------------------
# specs


_KINDS = ("cyclic", "dihedral", "dicyclic", "alternating4", "directProduct", "fromFile")


@dataclass(frozen=True)
class GroupSpec:
    """
    Recipe for a built-in group.

    String form (used by the CLI): ``cyclic:12``, ``dihedral:4``,
    ``dicyclic:2``, ``alternating4``, ``product:cyclic:2,cyclic:4``.
    """

    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["GroupSpec", ...] = ()
    path: str | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise GroupError(f"unknown group kind {self.kind!r}; expected one of {', '.join(_KINDS)}")
        if any(p < 1 for p in self.params):
            raise GroupError(f"{self.kind}: parameters must be positive, got {self.params}")
        if self.kind in ("cyclic", "dihedral", "dicyclic") and len(self.params) != 1:
            raise GroupError(f"{self.kind}: expects exactly one parameter, got {len(self.params)}")
        if self.kind == "dicyclic" and self.params[0] < 2:
            raise GroupError(f"dicyclic: parameter m must be >= 2, got m={self.params[0]}")
        if self.kind == "directProduct" and len(self.factors) < 2:
            raise GroupError(f"directProduct: needs >= 2 factors, got {len(self.factors)}")
        if self.kind == "fromFile" and not self.path:
            raise GroupError("fromFile: a path is required")

    def __str__(self):
        if self.kind == "alternating4":
            return "alternating4"
        if self.kind == "directProduct":
            return "product:" + ",".join(str(f) for f in self.factors)
        if self.kind == "fromFile":
            return str(self.path)
        return f"{self.kind}:{self.params[0]}"


_SIMPLE = re.compile(r"^(cyclic|dihedral|dicyclic):(\d+)$")


def parse_spec(text: str) -> GroupSpec:
    text = text.strip()
    if text.startswith("product:"):
        parts = [p for p in text[len("product:"):].split(",")]
        return GroupSpec("directProduct", factors=tuple(parse_spec(p) for p in parts))
    if text in ("alternating4", "a4", "A4"):
        return GroupSpec("alternating4")
    m = _SIMPLE.match(text)
    if not m:
        raise GroupError(f"cannot parse group spec {text!r}")
    return GroupSpec(m.group(1), (int(m.group(2)),))


def build_group(spec: GroupSpec | str) -> GroupTable:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind = spec.kind
    if kind == "cyclic":
        return cyclic(*spec.params)
    if kind == "dihedral":
        return dihedral(*spec.params)
    if kind == "dicyclic":
        return dicyclic(*spec.params)
    if kind == "alternating4":
        return alternating4()
    if kind == "directProduct":
        return direct_product(*(build_group(f) for f in spec.factors))
    return read_cayley_file(spec.path)


# ---------------------------------------------------------------------------
# Cayley-table files


def load_cayley_table(text) -> GroupTable:
    """
    Parse the plain-text Cayley-table format.

    Line 1 is n, then n rows of n indices.  ``#`` lines are comments.  If the
    identity is not element 0 it is swapped with element 0; every other index
    keeps its label.
    """
    if not isinstance(text, str):
        text = text.read()
    lines = [ln.strip() for ln in text.replace("\r\n", "\n").split("\n")]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CayleyParseError("empty Cayley table")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise CayleyParseError(f"non-integer token: {exc}") from None
    if n < 1:
        raise CayleyParseError(f"order must be positive, got {n}")
    if len(rows) != n:
        raise CayleyParseError(f"expected {n} rows, got {len(rows)}")
    for r, row in enumerate(rows):
        if len(row) != n:
            raise CayleyParseError(f"row {r} has {len(row)} entries, expected {n}")
    t = np.array(rows, dtype=np.int64)
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NotAGroupError(f"closure violated: entry ({i}, {j}) = {int(t[i, j])} not in [0, {n})", (i, j))
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise NotAGroupError("identity violated: no two-sided identity element")
    e = ids[0]
    if e != 0:
        perm = ar.copy()
        perm[[0, e]] = [e, 0]
        swapped = np.empty_like(t)
        swapped[np.ix_(perm, perm)] = perm[t]
        t = swapped
    return GroupTable(t)


def read_cayley_file(path) -> GroupTable:
    with open(path, encoding="ascii", newline="") as fh:
        return load_cayley_table(fh.read())


def format_cayley_table(g: GroupTable) -> str:
    lines = [str(g.order)]
    lines += [" ".join(str(int(v)) for v in row) for row in g.table]
    return "\n".join(lines) + "\n"
