"""Subgroup lattices and Chermak-Delgado lattices of finite groups given by Cayley tables."""

from .chermak_delgado import (
    CDReport,
    SylowCenterProfile,
    cd_measure,
    cd_report,
    check_theorem_b,
    sylow_center_profile,
    verify_cd_properties,
)
from .group_core import (
    GroupError,
    GroupSpec,
    GroupTable,
    NotAGroupError,
    SubgroupSet,
    build_group,
    center,
    centralizer,
    element_order,
    load_cayley_table,
    parse_spec,
)
from .lattice import SelfDuality, SubgroupLattice, Sublattice, enumerate_subgroups, is_modular, is_self_dual, join, meet, to_dot
from .records import VerificationRecord
from .verifier import (
    Catalog,
    GroupLabel,
    build_catalog,
    identify_group,
    run_verification,
    verify_lemma_2_1,
    verify_theorem_1_1,
    verify_theorem_a,
)

__version__ = "0.1.0"
