"""Topological data analysis: Rips persistence, projections, classification."""

from mazelab.tda.classify import (
    Behaviour,
    BettiSignature,
    Classification,
    SlidingWindowParams,
    TdaParams,
    classify,
    classify_cloud,
    persistent_betti,
    sliding_window,
)
from mazelab.tda.projection import distance_matrix, pca3, svd_project
from mazelab.tda.rips import PersistenceDiagram, rips_persistence

__all__ = [
    "Behaviour",
    "BettiSignature",
    "Classification",
    "PersistenceDiagram",
    "SlidingWindowParams",
    "TdaParams",
    "classify",
    "classify_cloud",
    "distance_matrix",
    "pca3",
    "persistent_betti",
    "rips_persistence",
    "sliding_window",
    "svd_project",
]
