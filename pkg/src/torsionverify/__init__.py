"""Finite, exact checks of the group-theoretic and algebraic ingredients behind
open-image results for torsion of elliptic curves over F_p(s, t)."""

from .report import ARTIFACT_VERSION as __version__

__all__ = ["__version__"]
