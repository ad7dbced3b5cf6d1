"""Root systems, Weyl groups, multiplicities and convex hulls."""

from .convex_hull import (
    convex_combination,
    hull_contains_dual_cone,
    hull_contains_lp,
)
from .multiplicity import Multiplicity
from .root_system import (
    RootSystem,
    build_root_system,
    gram_matrix,
    root_system_from_code,
)
from .weyl_group import WeylElement, weyl_group_order
