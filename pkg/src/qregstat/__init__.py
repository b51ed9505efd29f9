"""Dense simulation of qubit-register preparation: product vs. symmetric pictures."""
from .errors import (
    CellIndexError,
    DomainError,
    InvalidSpecError,
    NotAStateError,
    QRegError,
    ShapeError,
    SizeError,
    ZeroProjectionError,
)
from .statespace import (
    MAX_QUBITS,
    DensityMatrix,
    QubitSpec,
    StateVector,
    all_zero,
    equal_up_to_phase,
    fidelity,
    make_qubit,
    partial_trace,
    product_density,
    pure_density,
    purity,
    tensor,
    uniform,
)
from .symmetry import (
    DickeCoordinates,
    SymmetryReport,
    antisymmetrizer_bruteforce,
    check_realizable,
    dicke,
    dicke_projector,
    symmetric_dim,
    symmetrize,
    symmetrizer_bruteforce,
    to_dicke,
)
from .thermo import (
    BOLTZMANN,
    EntropyBudget,
    budget_for_register,
    entropy_reduction,
    landauer_energy,
    shannon_entropy,
    von_neumann_entropy,
)
from .assembly import (
    AssemblyReport,
    DelayStats,
    PictureComparison,
    PipelineConfig,
    SourceModel,
    analytic_mean_rounds,
    assemble,
    compare_pictures,
    delay_simulate,
    emit,
)

__version__ = "0.1.0"
