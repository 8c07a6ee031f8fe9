"""
Factory Tool

Constructive simple covers: p-fold covers from 1-factorizations, covers that
keep a bridge, covers that are not 3-edge-colorable and covers without a
perfect matching. Every construction re-verifies its own output.
"""

from .simple_cover import FoldSpec, simple_pfold_cover, dipole_odd_cover
from .bridged import bridged_simple_cover
from .snark import snark_cover
from .nopm import no_pm_cover, witness_not_F11

__all__ = [
    'FoldSpec',
    'simple_pfold_cover',
    'dipole_odd_cover',
    'bridged_simple_cover',
    'snark_cover',
    'no_pm_cover',
    'witness_not_F11',
]
