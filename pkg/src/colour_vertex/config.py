import argparse
import enum
from dataclasses import dataclass

from mpmath import mp


class Method(str, enum.Enum):
    """Evaluation strategy requested for a partition function."""

    ENUMERATION = "enumeration"
    DP = "dp"
    DETERMINANT = "determinant"
    LIMIT = "limit"
    ALL = "all"


@dataclass(frozen=True)
class EngineConfig:
    """Runtime knobs shared by the CLI, the tool server and the verification suites.

    Parameters
    ----------
    precision_bits:
        Working precision (bits) of every float evaluation.
    seed:
        Seed for the random sources of the Bethe solver and the suites.
    method:
        Evaluator requested by the front ends.
    tolerance_bits:
        Float results count as equal when they differ by less than ``2**-tolerance_bits``.
    max_restarts:
        Random restarts allowed to the multivariate Bethe solver.
    sample_retries:
        Fresh sample points tried by exact limit extraction before giving up.

    Examples
    --------
    >>> cfg = EngineConfig(precision_bits=128)
    >>> with cfg.float_context():
    ...     pass
    """

    precision_bits: int = 256
    seed: int = 0
    method: Method = Method.ALL
    tolerance_bits: int = 150
    max_restarts: int = 64
    sample_retries: int = 64

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError(f"precision_bits must be at least 53, got {self.precision_bits}")
        if self.sample_retries < 0 or self.max_restarts < 0:
            raise ValueError(
                f"sample_retries and max_restarts must be non-negative, got {self.sample_retries}, {self.max_restarts}"
            )
        if self.tolerance_bits >= self.precision_bits:
            raise ValueError(
                f"tolerance_bits ({self.tolerance_bits}) must stay below precision_bits ({self.precision_bits})"
            )

    @property
    def tolerance(self):
        return mp.mpf(2) ** (-self.tolerance_bits)

    def float_context(self):
        return mp.workprec(self.precision_bits)

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "EngineConfig":
        kwargs = {}
        for name in ("precision_bits", "seed", "tolerance_bits", "max_restarts", "sample_retries"):
            value = getattr(args, name, None)
            if value is not None:
                kwargs[name] = value
        method = getattr(args, "method", None)
        if method is not None:
            kwargs["method"] = Method(method)
        if "precision_bits" in kwargs and "tolerance_bits" not in kwargs:
            kwargs["tolerance_bits"] = min(150, kwargs["precision_bits"] * 3 // 5)
        return cls(**kwargs)


DEFAULT_CONFIG = EngineConfig()
