"""Behaviour classification of latent trajectories via persistent Betti numbers.

A windowed trajectory is treated as a point cloud.  Clouds whose diameter
fits inside twice the fixed-point ball radius are labelled FixedPoint
outright; everything else is projected, run through the Rips filtration,
and mapped from the persistent Betti signature:

    [1, 0] -> FixedPoint,  [2, 0] -> TwoPointCycle,  [2, 2] -> TwoLoopCycle,

with any other signature reported as Other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from mazelab.errors import RangeError
from mazelab.tda.projection import distance_matrix, svd_project
from mazelab.tda.rips import PersistenceDiagram, rips_persistence

__all__ = [
    "Behaviour",
    "BettiSignature",
    "Classification",
    "SlidingWindowParams",
    "TdaParams",
    "classify",
    "classify_cloud",
    "persistent_betti",
    "sliding_window",
]


class Behaviour(Enum):
    FIXED_POINT = "fixed_point"
    TWO_POINT_CYCLE = "two_point_cycle"
    TWO_LOOP_CYCLE = "two_loop_cycle"
    OTHER = "other"


@dataclass(frozen=True)
class BettiSignature:
    """Persistent Betti numbers [B0, B1] at a given threshold."""

    b0: int
    b1: int
    thresh: float

    def as_pair(self) -> tuple[int, int]:
        return (self.b0, self.b1)


@dataclass(frozen=True)
class Classification:
    """Outcome of classifying one trajectory window."""

    behaviour: Behaviour
    signature: BettiSignature
    via_ball: bool = False


@dataclass(frozen=True)
class TdaParams:
    """Knobs for the classification pipeline.

    ``alpha`` scales the cloud diameter into the persistence threshold;
    ``thresh`` overrides it with an absolute value when set.  ``ball_radius``
    is the fixed-point convention: any cloud with diameter at most
    2 * ball_radius is a fixed point regardless of micro-structure.
    """

    alpha: float = 0.25
    ball_radius: float = 0.01
    thresh: float | None = None


@dataclass(frozen=True)
class SlidingWindowParams:
    """Delay-embedding parameters: depth ``window_depth``, lag ``delay``."""

    window_depth: int
    delay: int = 1


def persistent_betti(diagram: PersistenceDiagram, thresh: float) -> BettiSignature:
    """Count classes whose bar length strictly exceeds ``thresh`` per dimension.

    Essential classes (death = inf) always count.
    """
    if thresh < 0:
        raise RangeError(f"thresh must be nonnegative, got {thresh}")
    b0 = int(np.count_nonzero((diagram.deaths - diagram.births > thresh) & (diagram.dims == 0)))
    b1 = int(np.count_nonzero((diagram.deaths - diagram.births > thresh) & (diagram.dims == 1)))
    return BettiSignature(b0=b0, b1=b1, thresh=thresh)


def _signature_to_behaviour(sig: BettiSignature) -> Behaviour:
    if sig.as_pair() == (1, 0):
        return Behaviour.FIXED_POINT
    if sig.as_pair() == (2, 0):
        return Behaviour.TWO_POINT_CYCLE
    if sig.as_pair() == (2, 2):
        return Behaviour.TWO_LOOP_CYCLE
    return Behaviour.OTHER


def classify_cloud(points: np.ndarray, params: TdaParams = TdaParams()) -> Classification:
    """Classify the limiting behaviour of a point cloud of latent iterates."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 2:
        raise RangeError(f"classification needs at least 2 points, got shape {pts.shape}")
    m, dim = pts.shape

    d0 = distance_matrix(pts)
    diam = float(d0.max())
    if diam <= 2.0 * params.ball_radius:
        sig = BettiSignature(b0=1, b1=0, thresh=params.thresh if params.thresh is not None else params.alpha * diam)
        return Classification(Behaviour.FIXED_POINT, sig, via_ball=True)

    proj = svd_project(pts, min(m, dim))
    d = distance_matrix(proj)
    diagram = rips_persistence(d, max_dim=1)
    thresh = params.thresh if params.thresh is not None else params.alpha * float(d.max())
    sig = persistent_betti(diagram, thresh)
    return Classification(_signature_to_behaviour(sig), sig, via_ball=False)


def classify(traj, params: TdaParams = TdaParams()) -> Classification:
    """Classify a trajectory (or raw (m, n) array of iterates)."""
    points = getattr(traj, "points", traj)
    return classify_cloud(points, params)


def sliding_window(traj, params: SlidingWindowParams) -> np.ndarray:
    """Delay embedding: point j is the stack of iterates j, j+d, ..., j+depth*d.

    For a trajectory of K points the output has K - window_depth * delay
    points of dimension (window_depth + 1) * n.  Shipped for periodicity
    analysis but not used by :func:`classify`.
    """
    points = np.asarray(getattr(traj, "points", traj), dtype=np.float64)
    if points.ndim != 2:
        raise RangeError(f"trajectory points must be 2-d, got shape {points.shape}")
    if params.window_depth < 0:
        raise RangeError(f"window_depth must be nonnegative, got {params.window_depth}")
    if params.delay < 1:
        raise RangeError(f"delay must be positive, got {params.delay}")
    k = points.shape[0]
    count = k - params.window_depth * params.delay
    if count < 1:
        raise RangeError(
            f"window_depth={params.window_depth}, delay={params.delay} leave no points "
            f"from a trajectory of length {k}"
        )
    stacked = [
        points[i * params.delay : i * params.delay + count]
        for i in range(params.window_depth + 1)
    ]
    return np.hstack(stacked)
