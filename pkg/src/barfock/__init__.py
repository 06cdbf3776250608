"""Exact combinatorics of h-strict partitions, the level-1 q-deformed
Fock space attached to an odd bar length h = 2n+1, its canonical basis,
and closed formulas for the small-weight decomposition matrices."""

__version__ = "0.1.0"

from .laurent import Laurent, q_power, parse as parse_laurent
from .partitions import (
	BlockId,
	bar_core,
	bar_weight,
	enumerate_block,
	enumerate_h_strict,
	is_h_strict,
	is_restricted,
	parse_partition,
	partition_str,
)

__all__ = [
	"Laurent", "q_power", "parse_laurent",
	"BlockId", "bar_core", "bar_weight", "enumerate_block",
	"enumerate_h_strict", "is_h_strict", "is_restricted",
	"parse_partition", "partition_str",
]
