# src/models/spectral_models.py
from dataclasses import dataclass
from typing import ClassVar, Literal

import numpy as np


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """
    Largest eigenvalue of Q_D(G) and its Perron vector.

    The Perron vector has unit 2-norm and strictly positive entries.
    `residual` is the max-norm of Q x - rho x for the returned pair.
    """
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int
    method: Literal["power", "oracle"]


@dataclass(frozen=True)
class Comparison:
    """Outcomes of comparing two spectral radii under the tie tolerance"""

    GREATER: ClassVar[str] = "greater"
    LESS: ClassVar[str] = "less"
    TIED: ClassVar[str] = "tied"
