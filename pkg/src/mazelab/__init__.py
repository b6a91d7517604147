"""Maze extrapolation laboratory.

Generates out-of-distribution lattice mazes (size, percolation, deadend
start), evaluates classical solver oracles, and classifies the limiting
behaviour of latent-iterate trajectories via Vietoris-Rips persistent
homology.
"""

__version__ = "0.1.0"
