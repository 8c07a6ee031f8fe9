"""
Covers Tool

Verification, search and composition of covering and semi-covering projections.
"""

from .projection import (
    CoverProjection, ProjectionKind, VerifyResult,
    verify_cover, verify_semicover, verify, compose, fold_count,
    identity_projection, projection_certificate, parse_certificate,
)
from .search import find_cover, covers, semi_covers

__all__ = [
    'CoverProjection',
    'ProjectionKind',
    'VerifyResult',
    'verify_cover',
    'verify_semicover',
    'verify',
    'compose',
    'fold_count',
    'identity_projection',
    'projection_certificate',
    'parse_certificate',
    'find_cover',
    'covers',
    'semi_covers',
]
