"""Point-cloud preprocessing: SVD projection, PCA, distance matrices."""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import pdist, squareform

from mazelab.errors import RangeError

__all__ = ["svd_project", "pca3", "distance_matrix"]


def svd_project(cloud: np.ndarray, k: int) -> np.ndarray:
    """Project a cloud onto its top-k right singular vectors.

    The cloud is mean-centered first; pairwise distances are translation
    invariant, so centering only affects the coordinates, not downstream
    distance matrices.  With k >= rank of the centered cloud the projection
    is a rigid rotation and preserves all pairwise distances.
    """
    pts = np.asarray(cloud, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise RangeError(f"cloud must be a nonempty 2-d array, got shape {pts.shape}")
    m, n = pts.shape
    if not 1 <= k <= min(m, n):
        raise RangeError(f"k={k} outside [1, min(m={m}, n={n})]")
    centered = pts - pts.mean(axis=0)
    _, s, vt = np.linalg.svd(centered, full_matrices=False)
    return centered @ vt[:k].T


def pca3(cloud: np.ndarray) -> np.ndarray:
    """First three principal components, zero-padded when rank < 3."""
    pts = np.asarray(cloud, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise RangeError(f"cloud must be a nonempty 2-d array, got shape {pts.shape}")
    k = min(3, pts.shape[0], pts.shape[1])
    proj = svd_project(pts, k)
    if proj.shape[1] < 3:
        proj = np.hstack([proj, np.zeros((proj.shape[0], 3 - proj.shape[1]))])
    return proj


def distance_matrix(cloud: np.ndarray) -> np.ndarray:
    """Euclidean pairwise distances, exactly symmetric with zero diagonal."""
    pts = np.asarray(cloud, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise RangeError(f"cloud must be a nonempty 2-d array, got shape {pts.shape}")
    if pts.shape[0] == 1:
        return np.zeros((1, 1))
    return squareform(pdist(pts))
