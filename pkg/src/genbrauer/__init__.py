"""Generalized Brauer algebras of complex reflection groups: exact construction and checks."""

from __future__ import annotations

from .gbrauer import Algebra, Params, build_algebra, semisimplicity_report
from .groups import Group, GroupSpec, build_group

__all__ = ["Algebra", "Group", "GroupSpec", "Params", "build_algebra", "build_group", "semisimplicity_report"]
__version__ = "0.1.0"
