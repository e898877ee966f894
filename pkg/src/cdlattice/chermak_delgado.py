"""
Chermak-Delgado measure and lattice.

The measure of a subgroup H of G is ``|H| * |C_G(H)|``.  The subgroups of
maximal measure form a sublattice CD(G) of L(G); this module computes it and
checks the structural facts it is known to satisfy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .group_core import GroupTable, SubgroupSet, center, centralizer, induced_group
from .lattice import SubgroupLattice, Sublattice, enumerate_subgroups, is_modular, join, meet
from .records import NOT_CHECKED, VerificationRecord

__all__ = [
    "CDReport",
    "SylowCenterProfile",
    "cd_measure",
    "cd_report",
    "verify_cd_properties",
    "sylow_center_profile",
    "check_theorem_b",
    "prime_factors",
]


def cd_measure(g: GroupTable, h: SubgroupSet) -> int:
    m = h.order * centralizer(g, h).order
    assert 0 < m < 2**63
    return m


@dataclass(frozen=True)
class CDReport:
    lattice: SubgroupLattice
    measures: tuple[int, ...]
    centralizers: tuple[int, ...]
    m_star: int
    cd_members: Sublattice
    measure_image: tuple[int, ...]
    min_member: int
    max_member: int
    deficiency: int

    @property
    def group(self) -> GroupTable:
        return self.lattice.group

    @property
    def cd_subgroups(self) -> tuple[SubgroupSet, ...]:
        return tuple(self.lattice[i] for i in self.cd_members)

    def to_dict(self) -> dict:
        lat = self.lattice
        return {
            "order": lat.group.order,
            "subgroup_count": len(lat),
            "subgroups": [
                {"size": h.order, "mask": f"{h.mask:#x}", "measure": m}
                for h, m in zip(lat.subgroups, self.measures)
            ],
            "m_star": self.m_star,
            "cd_members": list(self.cd_members.members),
            "min_member": self.min_member,
            "max_member": self.max_member,
            "measure_image": list(self.measure_image),
            "deficiency": self.deficiency,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def cd_report(g: GroupTable, lattice: SubgroupLattice | None = None) -> CDReport:
    lat = lattice if lattice is not None else enumerate_subgroups(g)
    if lat.group is not g:
        raise ValueError("lattice belongs to a different group")
    cents = []
    measures = []
    for h in lat.subgroups:
        c = centralizer(g, h)
        cents.append(lat.index(c))
        measures.append(h.order * c.order)
    m_star = max(measures)
    members = [i for i, m in enumerate(measures) if m == m_star]
    cd = lat.sublattice(members)
    if not cd.is_sublattice:
        raise AssertionError(f"CD set is not meet/join closed: {cd.closure_violation()}")
    lo = hi = members[0]
    for i in members[1:]:
        lo, hi = meet(lat, lo, i), join(lat, hi, i)
    return CDReport(
        lattice=lat,
        measures=tuple(measures),
        centralizers=tuple(cents),
        m_star=m_star,
        cd_members=cd,
        measure_image=tuple(sorted(set(measures))),
        min_member=lo,
        max_member=hi,
        deficiency=len(lat) - len(members),
    )


def verify_cd_properties(report: CDReport, name: str = "G") -> list[VerificationRecord]:
    """
    Run the six structural checks on a report, one record each, followed by
    two not-checked records for the characteristic-subgroup claims.
    """
    lat = report.lattice
    g = lat.group
    meas = report.measures
    cent = report.centralizers
    cd = report.cd_members
    out = []

    bad = []
    for h in range(len(lat)):
        c = cent[h]
        if meas[h] > meas[c] or (meas[h] == meas[c] and cent[c] != h):
            bad.append(h)
    out.append(VerificationRecord.check(f"cd-measure-vs-centralizer {name}", not bad, bad, subgroups=len(lat)))

    bad = [h for h in cd if cent[h] not in cd or cent[cent[h]] != h]
    out.append(VerificationRecord.check(f"cd-centralizer-closure {name}", not bad, bad, cd_size=len(cd)))

    images = {cent[h] for h in cd}
    bad = []
    if images != set(cd.members):
        bad.append(sorted(images ^ set(cd.members)))
    for x in cd:
        for y in cd:
            if lat.leq(x, y) != lat.leq(cent[y], cent[x]):
                bad.append((x, y))
    out.append(VerificationRecord.check(f"cd-self-duality {name}", not bad, bad, cd_size=len(cd)))

    violation = cd.closure_violation()
    if violation is not None:
        out.append(VerificationRecord.check(f"cd-modular-sublattice {name}", False, [violation]))
    else:
        ok, witness = is_modular(cd)
        out.append(VerificationRecord.check(f"cd-modular-sublattice {name}", ok, [witness] if witness else []))

    mn = lat[report.min_member]
    abelian = mn <= centralizer(g, mn)
    has_center = center(g) <= mn
    ok = abelian and has_center and all(lat.leq(report.min_member, i) for i in cd)
    out.append(
        VerificationRecord.check(
            f"cd-minimal-member {name}", ok, [] if ok else [report.min_member], abelian=int(abelian), contains_center=int(has_center)
        )
    )

    sub, embed = induced_group(g, lat[report.max_member])
    inner = cd_report(sub)
    lifted = {SubgroupSet.from_members(embed[x] for x in inner.lattice[i]).mask for i in inner.cd_members}
    outer = {h.mask for h in report.cd_subgroups}
    out.append(
        VerificationRecord.check(
            f"cd-of-maximal-member {name}",
            lifted == outer,
            [] if lifted == outer else [sorted(lifted ^ outer)],
            max_member_order=lat[report.max_member].order,
        )
    )

    for what in ("maximal", "minimal"):
        out.append(VerificationRecord(f"cd-{what}-member-characteristic {name}", NOT_CHECKED))
    return out


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class SylowCenterProfile:
    """``entries`` are ``(p, n_p)`` with ``|Z(P)| = p**n_p`` for a Sylow p-subgroup P."""

    entries: tuple[tuple[int, int], ...]

    @property
    def bound(self) -> int:
        return 1 + sum(n for _, n in self.entries)


def sylow_center_profile(g: GroupTable, lat: SubgroupLattice) -> SylowCenterProfile:
    entries = []
    for p, v in sorted(prime_factors(g.order).items()):
        size = p**v
        sylow = next((h for h in lat.subgroups if h.order == size), None)
        if sylow is None:
            raise AssertionError(f"no subgroup of order {size} in the lattice; enumeration is broken")
        z = (sylow & centralizer(g, sylow)).order
        n = 0
        while z > 1:
            assert z % p == 0
            z //= p
            n += 1
        assert n >= 1
        entries.append((p, n))
    return SylowCenterProfile(tuple(entries))


def check_theorem_b(report: CDReport, profile: SylowCenterProfile, name: str = "G") -> VerificationRecord:
    """Number of distinct measure values is at least 1 + sum of the n_p."""
    image = len(report.measure_image)
    return VerificationRecord.check(
        f"measure-image-bound {name}",
        image >= profile.bound,
        [list(report.measure_image)],
        image=image,
        bound=profile.bound,
    )
