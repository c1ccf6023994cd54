"""Viterbi decoding of circuit-defined quantum convolutional codes.

The library builds codes from a random Clifford seed transformation,
extracts syndromes by Pauli-frame un-encoding, and decodes them with two
trellis decoders: the standard one that finds the most probable single
error, and a degenerate one that merges trellis edges so whole classes of
errors differing by stabilizer elements are scored by their summed
probability.  A brute-force oracle and a Monte Carlo benchmark harness
validate and compare the two.
"""

from .pauli import Pauli, all_paulis, anticommutes, tensor
from .symplectic import (
    SymplecticMap,
    cnot,
    gates_to_map,
    hadamard,
    phase,
    preserves_symplectic_form,
    random_clifford,
)
from .code import (
    BlockGenerators,
    ConvolutionalCode,
    Decomposition,
    decompose,
    derive_generators,
    load_code,
    pure_error_for,
    random_code,
    save_code,
)
from .noise import IidPauliNoise, depolarizing
from .trellis import (
    DEGENERATE,
    NONDEGENERATE,
    SyndromeTrellis,
    TrellisBuilder,
    TrellisEdge,
    build_frame,
    enumerate_frame_tuples,
    super_edge_weight,
)
from .decoder import (
    DecodeOutcome,
    Decoder,
    UncorrectableSyndromeError,
    decode_degenerate,
    decode_nondegenerate,
    viterbi,
)
from .oracle import OracleCapExceeded, OracleReport, enumerate_coset, exhaustive_path_optimum, oracle_check
from .bench import BenchPoint, run_point, run_sweep, write_csv

__version__ = "0.1.0"

__all__ = [
    "BenchPoint",
    "BlockGenerators",
    "ConvolutionalCode",
    "DecodeOutcome",
    "Decoder",
    "Decomposition",
    "DEGENERATE",
    "IidPauliNoise",
    "NONDEGENERATE",
    "OracleCapExceeded",
    "OracleReport",
    "Pauli",
    "SymplecticMap",
    "SyndromeTrellis",
    "TrellisBuilder",
    "TrellisEdge",
    "UncorrectableSyndromeError",
    "all_paulis",
    "anticommutes",
    "build_frame",
    "cnot",
    "decode_degenerate",
    "decode_nondegenerate",
    "decompose",
    "depolarizing",
    "derive_generators",
    "enumerate_coset",
    "enumerate_frame_tuples",
    "gates_to_map",
    "hadamard",
    "load_code",
    "exhaustive_path_optimum",
    "oracle_check",
    "phase",
    "preserves_symplectic_form",
    "pure_error_for",
    "random_clifford",
    "random_code",
    "run_point",
    "run_sweep",
    "save_code",
    "super_edge_weight",
    "tensor",
    "viterbi",
    "write_csv",
]
