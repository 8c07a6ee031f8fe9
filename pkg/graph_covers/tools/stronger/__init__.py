"""
Stronger Tool

Evidence for the relation A |> B ("every simple cover of A covers B"),
bounded witness enumeration and the cover poset report.
"""

from .evidence import Verdict, RefutationRecord, StrongerEvidence, PosetReport, hasse_edges
from .decide import divisibility_ok, classify_2regular, decide_stronger, refute
from .enumerate import enumerate_simple_covers
from .poset import cover_poset, small_cubic_report

__all__ = [
    'Verdict',
    'RefutationRecord',
    'StrongerEvidence',
    'PosetReport',
    'hasse_edges',
    'divisibility_ok',
    'classify_2regular',
    'decide_stronger',
    'refute',
    'enumerate_simple_covers',
    'cover_poset',
    'small_cubic_report',
]
