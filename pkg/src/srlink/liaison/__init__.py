"""Basic double G-links, refutation engines and elementary G-biliaison."""

from .bdl import (
    BDLVerdict,
    BDLWitness,
    CheckResult,
    VertexBDL,
    degree_window,
    fisxi_necessary,
    verify_bdl,
    vertex_bdl,
)
from .biliaison import (
    BiliaisonVerdict,
    BiliaisonWitness,
    check_linked,
    linked_witnesses,
    verify_biliaison,
)
from .certificate import RefutationCertificate, ReplayReport, replay
from .edge_search import EdgeSearchResult, realizing_supports, search_edge_bdl
from .refute import GENERAL, MODES, SQUAREFREE, RefutationResult, refute_deg1, refute_deg2

__all__ = [
    "BDLVerdict",
    "BDLWitness",
    "BiliaisonVerdict",
    "BiliaisonWitness",
    "CheckResult",
    "EdgeSearchResult",
    "GENERAL",
    "MODES",
    "RefutationCertificate",
    "RefutationResult",
    "ReplayReport",
    "SQUAREFREE",
    "VertexBDL",
    "check_linked",
    "degree_window",
    "fisxi_necessary",
    "linked_witnesses",
    "realizing_supports",
    "refute_deg1",
    "refute_deg2",
    "replay",
    "search_edge_bdl",
    "verify_bdl",
    "verify_biliaison",
    "vertex_bdl",
]
