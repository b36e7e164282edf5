"""Explicit stepping-up edge-colorings chi_2, chi_3, ..., chi_k of complete
k-uniform hypergraphs, with exhaustive and sampled (p, q)-coloring checks."""

from .base import Color2, canonical_fB, chi2, choose_params, restrict
from .chain import LevelChain, PowerOfTwo
from .errors import (
    AdjacentEqual,
    EqualVertices,
    IllFormed,
    LevelMismatch,
    NotASubset,
    NotEnoughDistinct,
    RamseyTowerError,
    RankOutOfRange,
    ResourceLimit,
    TooFewVertices,
)
from .props import fuzz_properties
from .sampling import SampleSpec, sample_vertices
from .step import ColorK, Phi, Repeat, chi3, chik, color_space_bound, phi, tower
from .verify import VerifyReport, census, verify_pq
from .vertex import BaseVertex, BitVertex, compare, delta, index_to_bitvertex, rank_base, unrank_base

__all__ = [
    "AdjacentEqual", "BaseVertex", "BitVertex", "Color2", "ColorK", "EqualVertices", "IllFormed",
    "LevelChain", "LevelMismatch", "NotASubset", "NotEnoughDistinct", "Phi", "PowerOfTwo",
    "RamseyTowerError", "RankOutOfRange", "Repeat", "ResourceLimit", "SampleSpec", "TooFewVertices",
    "VerifyReport", "canonical_fB", "census", "chi2", "chi3", "chik", "choose_params",
    "color_space_bound", "compare", "delta", "fuzz_properties", "index_to_bitvertex", "phi",
    "rank_base", "restrict", "sample_vertices", "tower", "unrank_base", "verify_pq",
]
