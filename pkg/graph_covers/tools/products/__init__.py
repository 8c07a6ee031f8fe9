"""
Products Tool

The canonical double covers G^x (times_k2) and G^odot (odot).
"""

from .products import times_k2, odot, lift_vertex, base_of

__all__ = [
    'times_k2',
    'odot',
    'lift_vertex',
    'base_of',
]
