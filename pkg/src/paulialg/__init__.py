"""Bit-packed symplectic Pauli-string algebra.

Core pieces: PauliString words with XOR products and popcount phase
tracking, PauliOperator term maps with numeric or symbolic coefficients
(see ``paulialg.coeff``), rotation/folding transforms, Lie closures with
sparse structure constants, commuting-clique partitions, a dense-matrix
oracle (``paulialg.dense``, imported lazily to keep startup light), and
the ``bench`` CLI.
"""

from . import coeff
from .bench import (
    BenchConfig,
    BenchRecord,
    SplitMix64,
    derive_seed,
    fit_scaling,
    random_hamiltonian,
    run_benchmark,
)
from .cliques import CliquePartition, format_partition, partition_commuting, verify_partition
from .dla import (
    DlaBasis,
    StructureConstants,
    build_so2n_generators,
    lie_closure,
    structure_constants,
)
from .operator import DEFAULT_PRUNE_TOL, PauliOperator, max_abs_diff, multiply_with_stats
from .pauli import (
    PHASES,
    PauliString,
    commutator,
    commutes,
    format_word,
    multiply,
    parse_word,
    phase_masks,
)
from .transforms import (
    Circuit,
    Gate,
    clifford_fold,
    controlled_generator,
    fold_circuit,
    gradient_operator,
    rotate_conjugate,
)

__version__ = "0.1.0"

__all__ = [
    "coeff",
    "dense",
    "PauliString",
    "PHASES",
    "phase_masks",
    "multiply",
    "commutes",
    "commutator",
    "parse_word",
    "format_word",
    "PauliOperator",
    "DEFAULT_PRUNE_TOL",
    "multiply_with_stats",
    "max_abs_diff",
    "Gate",
    "Circuit",
    "rotate_conjugate",
    "clifford_fold",
    "fold_circuit",
    "controlled_generator",
    "gradient_operator",
    "DlaBasis",
    "StructureConstants",
    "lie_closure",
    "structure_constants",
    "build_so2n_generators",
    "CliquePartition",
    "partition_commuting",
    "verify_partition",
    "format_partition",
    "SplitMix64",
    "derive_seed",
    "random_hamiltonian",
    "BenchConfig",
    "BenchRecord",
    "run_benchmark",
    "fit_scaling",
]


def __getattr__(name):
    # paulialg.dense pulls in numpy; load it only on first use.
    if name == "dense":
        import importlib

        return importlib.import_module(".dense", __name__)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
