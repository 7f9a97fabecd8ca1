"""Subsystem quantum error-correcting codes from pairs of classical codes.

Two classical binary linear codes [n1,k1,d1] and [n2,k2,d2] combine on an
n1 x n2 qubit grid into a subsystem code [[n1*n2, k1*k2, min(d1,d2)]] that
needs only (n1-k1)*k2 + k1*(n2-k2) stabilizer measurements per round; the
comparable Shor-style subspace code needs (n1-k1)*n2 + k1*(n2-k2).
"""

__version__ = "0.1.0"

from . import gf2
from .classical import LinearCode, builtin, hamming_7_4, repetition
from .pauli import PauliGrid
from .builder import PauliDecomposition, ShorCode, SubsystemCode
from .recovery import (
    RecoveryOutcome,
    Syndrome,
    decode_bitflip,
    decode_phaseflip,
    distance_bruteforce,
    extract_syndrome,
    recover,
)
from .simulate import (
    NoiseModel,
    TrialReport,
    compare_report,
    exact_rate_enumeration,
    run_trials,
)

__all__ = [
    "__version__",
    "gf2",
    "LinearCode",
    "builtin",
    "hamming_7_4",
    "repetition",
    "PauliGrid",
    "PauliDecomposition",
    "SubsystemCode",
    "ShorCode",
    "Syndrome",
    "RecoveryOutcome",
    "extract_syndrome",
    "decode_bitflip",
    "decode_phaseflip",
    "recover",
    "distance_bruteforce",
    "NoiseModel",
    "TrialReport",
    "run_trials",
    "exact_rate_enumeration",
    "compare_report",
]
