"""(I,F)-partitions of plane graphs."""

__version__ = "0.1.0"
