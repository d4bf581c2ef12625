"""Exact symmetric Kronecker, plethysm and trace-power stabilizer computations."""

__version__ = "0.1.0"

from .partitions import Partition, conjugate, format_partition, parse_partition  # noqa: E402
from .characters import character, dimension  # noqa: E402
from .coefficients import alt_kron, am, kostka, kronecker, sm, sym_kron  # noqa: E402

__all__ = [
    "Partition", "alt_kron", "am", "character", "conjugate", "dimension", "format_partition",
    "kostka", "kronecker", "parse_partition", "sm", "sym_kron",
]
