# src/models/settings.py
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, ClassVar, Dict


@dataclass(frozen=True)
class SpectraSettings:
    """
    Every tunable of the library in one place.

    Defaults are chosen so that extremal margins at n <= 14 (well above 1e-8)
    are never confused with numerical noise.
    """

    tol: float = 1e-12                   # relative eigen-residual for power iteration
    max_iterations: int = 10**6          # power iteration cap before the oracle fallback
    tie_tolerance: float = 1e-9          # relative tolerance under which two rho values are tied
    oracle_tolerance: float = 1e-12      # relative off-diagonal norm target of the Jacobi oracle
    oracle_max_sweeps: int = 100
    enumeration_cap: int = 16
    prufer_cap: int = 9
    jobs: int = 1
    seed: int = 0                        # only drives random vectors and branch-move sampling
    qf_vectors: int = 100                # random vectors per tree for the quadratic form identity
    samples: int = 200                   # configurations per tree in sampled mode
    cache_enabled: bool = False
    cache_path: Path = field(default_factory=lambda: Path.home() / ".cache" / "spectra_graft" / "spectrum_cache.db")

    # environment variables that may override a setting
    ENV_VARS: ClassVar[Dict[str, str]] = {
        "enumeration_cap": "SPECTRA_GRAFT_CAP",
        "jobs": "SPECTRA_GRAFT_JOBS",
        "seed": "SPECTRA_GRAFT_SEED",
    }

    @classmethod
    def option_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def with_overrides(self, **overrides: Any) -> "SpectraSettings":
        """Copy with the given (non-None) values replaced"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
