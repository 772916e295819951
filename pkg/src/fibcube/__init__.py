"""Fibonacci and Lucas cubes and their maximal induced hypercubes."""

from .bitstring import (
    BitString,
    Family,
    OneBlockDecomposition,
    ZeroBlockDecomposition,
    count_by_weight,
    decompose_one_blocks,
    decompose_zero_blocks,
    generate,
    hamming,
    is_fibonacci,
    is_lucas,
)
from .exceptions import DomainError, ResourceError
from .graph import CubeGraph, bfs_distance, build, verify_isometric
from .hypercube import InducedHypercube, extensions, is_induced_in, oracle_maximal, vertex_set
from .maximal import count_f, count_g, enumerate_maximal, enumerate_tops, nonzero_range
from .poly import (
    CountingPolynomial,
    SeriesTable,
    expand_generating_function,
    poly_by_formula,
    poly_by_recurrence,
)

__version__ = "0.1.0"
