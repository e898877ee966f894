"""
Small-group catalog and exhaustive checks of the classification results.

The catalog holds one representative of every isomorphism type of order at
most 15 (28 groups), plus generalized quaternion groups Q_{2^n} for a range
of n.  Labels are recomputed from the tables, never taken from the recipes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .chermak_delgado import (
    CDReport,
    cd_report,
    check_theorem_b,
    prime_factors,
    sylow_center_profile,
    verify_cd_properties,
)
from .group_core import GroupSpec, GroupTable, build_group, cyclic_subgroup, element_order, is_abelian
from .lattice import SubgroupLattice, enumerate_subgroups
from .records import VerificationRecord

__all__ = [
    "IncompleteCatalogError",
    "GroupLabel",
    "CatalogEntry",
    "Catalog",
    "CLASSIFICATION_COUNTS",
    "build_catalog",
    "identify_group",
    "fingerprint",
    "verify_theorem_1_1",
    "verify_lemma_2_1",
    "verify_theorem_a",
    "verify_entry",
    "run_verification",
    "deficiency_sets",
]

# number of groups of order 1..15 up to isomorphism
CLASSIFICATION_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1)
COMPLETE_MAX_ORDER = len(CLASSIFICATION_COUNTS)


class IncompleteCatalogError(ValueError):
    pass


def _cyc(n):
    return GroupSpec("cyclic", (n,))


def _prod(*ns):
    return GroupSpec("directProduct", factors=tuple(_cyc(n) for n in ns))


# (name, spec) for every group of order <= 15
_CLASSIFICATION: tuple[tuple[str, GroupSpec], ...] = (
    ("1", _cyc(1)),
    ("Z2", _cyc(2)),
    ("Z3", _cyc(3)),
    ("Z4", _cyc(4)),
    ("Z2xZ2", _prod(2, 2)),
    ("Z5", _cyc(5)),
    ("Z6", _cyc(6)),
    ("D6", GroupSpec("dihedral", (3,))),
    ("Z7", _cyc(7)),
    ("Z8", _cyc(8)),
    ("Z4xZ2", _prod(4, 2)),
    ("Z2xZ2xZ2", _prod(2, 2, 2)),
    ("D8", GroupSpec("dihedral", (4,))),
    ("Q8", GroupSpec("dicyclic", (2,))),
    ("Z9", _cyc(9)),
    ("Z3xZ3", _prod(3, 3)),
    ("Z10", _cyc(10)),
    ("D10", GroupSpec("dihedral", (5,))),
    ("Z11", _cyc(11)),
    ("Z12", _cyc(12)),
    ("Z6xZ2", _prod(6, 2)),
    ("D12", GroupSpec("dihedral", (6,))),
    ("A4", GroupSpec("alternating4")),
    ("Q12", GroupSpec("dicyclic", (3,))),
    ("Z13", _cyc(13)),
    ("Z14", _cyc(14)),
    ("D14", GroupSpec("dihedral", (7,))),
    ("Z15", _cyc(15)),
)


@dataclass(frozen=True)
class GroupLabel:
    """
    ``kind`` is ``Trivial``, ``Cyclic``, ``GeneralizedQuaternion`` or ``Other``.

    The certificate is a generator index for cyclic groups and the pair
    ``(a, b)`` satisfying the quaternion relations otherwise.
    """

    kind: str
    order: int
    certificate: tuple[int, ...] = ()

    def __str__(self):
        return {
            "Trivial": "1",
            "Cyclic": f"Z{self.order}",
            "GeneralizedQuaternion": f"Q{self.order}",
        }.get(self.kind, f"Other({self.order})")


def _two_power(n: int) -> int | None:
    k = n.bit_length() - 1
    return k if n == 1 << k else None


def identify_group(g: GroupTable) -> GroupLabel:
    n = g.order
    if n == 1:
        return GroupLabel("Trivial", 1)
    orders = [element_order(g, x) for x in range(n)]
    if n in orders:
        return GroupLabel("Cyclic", n, (orders.index(n),))
    k = _two_power(n)
    if k is not None and k >= 3 and orders.count(2) == 1 and not is_abelian(g):
        a = orders.index(n // 2)
        inside = cyclic_subgroup(g, a)
        b = next(x for x in range(n) if x not in inside)
        # b^2 = a^(2^(k-2)) and b^-1 a b = a^-1
        assert g.mul(b, b) == g.power(a, n // 4)
        assert g.mul(g.mul(g.inv(b), a), b) == g.inv(a)
        return GroupLabel("GeneralizedQuaternion", n, (a, b))
    return GroupLabel("Other", n)


def fingerprint(g: GroupTable, lat: SubgroupLattice | None = None) -> tuple:
    """Cheap isomorphism invariant: element-order multiset, abelian flag, |L(G)|."""
    lat = lat if lat is not None else enumerate_subgroups(g)
    orders = tuple(sorted(element_order(g, x) for x in range(g.order)))
    return (g.order, orders, is_abelian(g), len(lat))


@dataclass
class CatalogEntry:
    name: str
    spec: GroupSpec | None
    group: GroupTable
    source: str = "builtin"

    def __iter__(self):
        return iter((self.name, self.spec, self.group))


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    max_order: int = 0

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def __getitem__(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def counts_by_order(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.entries:
            out[e.group.order] = out.get(e.group.order, 0) + 1
        return out


def build_catalog(
    max_order: int = 15,
    quaternion_range: Iterable[int] = range(3, 7),
    extra: str | os.PathLike | Sequence | None = None,
) -> Catalog:
    """
    Every group of order <= ``max_order`` plus Q_{2^n} for n in
    ``quaternion_range`` (skipped when already present).

    ``extra`` is a directory of Cayley-table files or a list of paths; it is
    the only way to go past order 15, and then completeness is not claimed.
    """
    from .group_core import read_cayley_file

    if max_order > COMPLETE_MAX_ORDER and extra is None:
        raise IncompleteCatalogError(
            f"incomplete catalog: built-in classification covers orders <= {COMPLETE_MAX_ORDER}, "
            f"got max_order={max_order}; supply extra Cayley-table files"
        )
    cat = Catalog(max_order=max_order)
    for name, spec in _CLASSIFICATION:
        g = build_group(spec)
        if g.order <= max_order:
            cat.entries.append(CatalogEntry(name, spec, g))
    if max_order <= COMPLETE_MAX_ORDER:
        counts = cat.counts_by_order()
        expected = {n + 1: c for n, c in enumerate(CLASSIFICATION_COUNTS[:max_order])}
        assert counts == expected, (counts, expected)
    present = {e.name for e in cat.entries}
    for n in quaternion_range:
        if n < 3:
            raise ValueError(f"quaternion exponent n must be >= 3, got {n}")
        name = f"Q{2**n}"
        if name not in present:
            cat.entries.append(CatalogEntry(name, GroupSpec("dicyclic", (2 ** (n - 2),)), build_group(GroupSpec("dicyclic", (2 ** (n - 2),)))))
            present.add(name)
    if extra is not None:
        paths = sorted(Path(extra).iterdir()) if not isinstance(extra, (list, tuple)) else [Path(p) for p in extra]
        for p in paths:
            if p.is_dir() or p.name.startswith("."):
                continue
            cat.entries.append(CatalogEntry(p.stem, GroupSpec("fromFile", path=str(p)), read_cayley_file(p), source=str(p)))
    return cat


# ---------------------------------------------------------------------------
# per-entry analysis


@dataclass
class EntryAnalysis:
    name: str
    label: GroupLabel
    report: CDReport
    records: list[VerificationRecord]


def _is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == {n: 1}


def _prime_power(n: int) -> tuple[int, int] | None:
    f = prime_factors(n)
    return next(iter(f.items())) if len(f) == 1 else None


def verify_entry(entry: CatalogEntry) -> EntryAnalysis:
    """CD property checks and the measure-image bound for one catalog group."""
    g = entry.group
    lat = enumerate_subgroups(g)
    report = cd_report(g, lat)
    records = verify_cd_properties(report, entry.name)
    records.append(check_theorem_b(report, sylow_center_profile(g, lat), entry.name))
    return EntryAnalysis(entry.name, identify_group(g), report, records)


def _analyze(cat: Catalog, jobs: int = 1) -> list[EntryAnalysis]:
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(verify_entry, cat.entries))
    return [verify_entry(e) for e in cat.entries]


def _expected_deficiency(label: GroupLabel) -> int | None:
    """1 for Z_p and Q8, 2 for Z_{p^2}; None when neither applies."""
    if label.kind == "Cyclic":
        pp = _prime_power(label.order)
        if pp and pp[1] in (1, 2):
            return pp[1]
    if label.kind == "GeneralizedQuaternion" and label.order == 8:
        return 1
    return None


def deficiency_sets(analyses: Sequence[EntryAnalysis]) -> dict[int, list[str]]:
    out: dict[int, list[str]] = {}
    for a in analyses:
        out.setdefault(a.report.deficiency, []).append(a.name)
    return out


def verify_theorem_1_1(cat: Catalog, analyses: Sequence[EntryAnalysis] | None = None) -> list[VerificationRecord]:
    """
    Deficiency |L(G)| - |CD(G)| is 1 exactly for Z_p and Q8, 2 exactly for
    Z_{p^2}, and 0 only for the trivial group.  One record per entry plus
    summaries for k = 0, 1, 2.  Evidence over the catalog only.
    """
    analyses = analyses if analyses is not None else _analyze(cat)
    records = []
    predicted: dict[int, list[str]] = {0: [], 1: [], 2: []}
    for a in analyses:
        k = a.report.deficiency
        want = 0 if a.label.kind == "Trivial" else _expected_deficiency(a.label)
        if want is not None:
            predicted[want].append(a.name)
        ok = (k in (0, 1, 2)) == (want is not None) and (want is None or k == want)
        records.append(
            VerificationRecord.check(
                f"deficiency-classification {a.name}", ok, [] if ok else [a.name, str(a.label)], deficiency=k, m_star=a.report.m_star
            )
        )
    got = deficiency_sets(analyses)
    for k in (0, 1, 2):
        have = got.get(k, [])
        ok = have == predicted[k]
        records.append(
            VerificationRecord.check(
                f"deficiency-set k={k} verified over catalog: {{{','.join(have)}}}",
                ok,
                [] if ok else [sorted(set(have) ^ set(predicted[k]))],
                count=len(have),
            )
        )
    return records


def verify_lemma_2_1(n: int) -> VerificationRecord:
    """
    Q_{2^n}: m* = 2^(2n-2); CD is the five subgroups <a^2>, <a>, <b>, <ab>, Q8
    for n = 3 and just <a> for n >= 4; deficiency is never 2.
    """
    if not 3 <= n <= 6:
        raise ValueError(f"quaternion exponent n must be in 3..6, got {n}")
    half = 2 ** (n - 1)
    g = build_group(GroupSpec("dicyclic", (2 ** (n - 2),)))
    report = cd_report(g)
    lat = report.lattice
    a, b, ab, a2 = 1, half, half + 1, 2
    if n == 3:
        expected = {cyclic_subgroup(g, x).mask for x in (a2, a, b, ab)} | {g.full_mask}
    else:
        expected = {cyclic_subgroup(g, a).mask}
    got = {h.mask for h in report.cd_subgroups}
    problems = []
    if report.m_star != 2 ** (2 * n - 2):
        problems.append(("m_star", report.m_star))
    if got != expected:
        problems.append(("cd", sorted(lat.index(m) for m in got)))
    if report.deficiency == 2:
        problems.append(("deficiency", 2))
    if (report.deficiency == 1) != (n == 3):
        problems.append(("deficiency", report.deficiency))
    return VerificationRecord.check(
        f"quaternion-cd Q{2**n}",
        not problems,
        problems,
        m_star=report.m_star,
        cd_size=len(report.cd_members),
        subgroups=len(lat),
        deficiency=report.deficiency,
    )


def verify_theorem_a(cat: Catalog, analyses: Sequence[EntryAnalysis] | None = None) -> list[VerificationRecord]:
    """
    For p-groups: exactly one subgroup of order p iff cyclic or generalized
    quaternion; and the number of order-p subgroups is 1 mod p.
    """
    analyses = analyses if analyses is not None else _analyze(cat)
    records = []
    for a in analyses:
        pp = _prime_power(a.report.group.order)
        if pp is None:
            continue
        p = pp[0]
        count = sum(1 for h in a.report.lattice.subgroups if h.order == p)
        special = a.label.kind in ("Cyclic", "GeneralizedQuaternion")
        unique_ok = (count == 1) == special
        cong_ok = count % p == 1 % p
        records.append(
            VerificationRecord.check(
                f"unique-order-p-subgroup {a.name}",
                unique_ok and cong_ok,
                [] if unique_ok and cong_ok else [a.name, str(a.label), count],
                p=p,
                order_p_subgroups=count,
            )
        )
    return records


def run_verification(
    cat: Catalog, quaternion_ns: Iterable[int] = range(3, 7), jobs: int = 1
) -> tuple[list[VerificationRecord], dict[int, list[str]]]:
    """Every check over a catalog; returns records in a fixed order and the deficiency sets."""
    analyses = _analyze(cat, jobs)
    records = []
    records += verify_theorem_1_1(cat, analyses)
    records += [verify_lemma_2_1(n) for n in quaternion_ns]
    records += verify_theorem_a(cat, analyses)
    for a in analyses:
        records += a.records
    return records, deficiency_sets(analyses)
