"""Run configuration for the property and acceptance suites."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20240
    jacobi_samples: int = 20_000  # basis triples per E-type
    grading_pairs: int = 100_000  # sampled bracket pairs per E-type
    weyl_depth: int = 200  # depth cap of the bounded Weyl searches
    hypothesis_examples: int = 60

    @classmethod
    def from_env(cls, prefix: str = "FOURSYM_") -> "SuiteConfig":
        """Override fields from FOURSYM_SEED, FOURSYM_JACOBI_SAMPLES, ..."""
        cfg = cls()
        over = {}
        for name, val in vars(cfg).items():
            raw = os.environ.get(prefix + name.upper())
            if raw is not None:
                over[name] = type(val)(raw)
        return replace(cfg, **over)


# exceptional types and their sigma nodes (mark 3 or 4), Bourbaki numbering
SCOPE: dict[str, tuple[int, ...]] = {"E8": (3, 6, 2, 7), "E7": (4, 3, 5), "E6": (4,), "F4": (3, 2), "G2": (1,)}
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")
