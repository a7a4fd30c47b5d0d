"""Exact computational toolkit for Weyl-group slices of spherical sheets.

Builds the slice wdot_S T^{w_S} U^{w_S} attached to each sheet of
spherical conjugacy classes in a simple algebraic group, certifies its
component decomposition over exact fields, and cross-checks everything
against a brute-force enumeration of tiny groups of Lie type.
"""

from .rootsys import (
    build_root_system,
    bruhat_leq,
    is_bruhat_max_in_class,
    longest_element,
    minus_one_rank,
    w0_wPi,
)
from .sheetcat import sheet_catalog, smoothness_verdict
from .toruslat import TorusData, fixed_part, gamma_w, s_w_group

__version__ = "0.1.0"

__all__ = [
    "build_root_system",
    "bruhat_leq",
    "is_bruhat_max_in_class",
    "longest_element",
    "minus_one_rank",
    "w0_wPi",
    "sheet_catalog",
    "smoothness_verdict",
    "TorusData",
    "fixed_part",
    "gamma_w",
    "s_w_group",
    "__version__",
]
