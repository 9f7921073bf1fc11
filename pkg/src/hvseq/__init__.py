"""Shift-equivariant, similarity-preserving hypervectors of symbol sequences."""

from .encoder import (
    Codebook,
    EncoderConfig,
    PositionedSequence,
    double_edges,
    encode_sequence,
    encode_symbol,
    shift_hv,
)
from .fhrr import DimensionError, NotAtomicError, atomic, bind, dot, power, superpose
from .similarity import Measure, UndefinedSimilarityError, sim, sim_shifted

__version__ = "0.1.0"
