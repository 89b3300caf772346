"""Entanglement of pure multipartite states through contraction ranks.

Tensors over a single-particle space of dimension ``n`` carry a symmetry tag
(general, symmetric, antisymmetric or young).  The S-rank of a tensor is the
largest dimension of its single-slot contraction image; a state is simple
(not entangled) exactly when its S-rank is the smallest one its class allows.
"""

from .config import DEFAULT_EPSILON, epsilon_context, get_epsilon, set_epsilon
from .contraction import contract, contract_products, contraction_matrix
from .decompositions import (
    SchmidtDecomposition,
    SlaterDecomposition,
    numerical_rank,
    random_unitary,
    schmidt,
    singular_values,
    slater,
    takagi,
    youla,
)
from .entanglement import (
    QuadraticWitness,
    Verdict,
    flattening_ranks,
    is_simple,
    minimal_rank,
    overlap_score,
    quadratic_witness,
    s_rank,
    tensor_square_test,
)
from .errors import (
    SRankError,
    IndexOutOfRange,
    DuplicateEntry,
    SymmetryViolation,
    DimensionMismatch,
    OrderMismatch,
    SizeGuardExceeded,
    ZeroTensor,
    WrongOrder,
    WrongClass,
    UnsupportedClass,
    NotNormalized,
    NotSymmetric,
    NotAntisymmetric,
    DependentVectors,
    NotInIrreducible,
    DegenerateProbe,
    NumericalFailure,
)
from .jamiolkowski import (
    FourLegTensor,
    classify_sa,
    jam_J,
    jam_J1,
    jam_J2,
    map_rank,
    pure_state,
    state_to_map,
)
from .symmetry import (
    antisymmetrize,
    determinant,
    induced_basis,
    permanent,
    symmetrize,
    vee,
    vee_vectors,
    wedge,
    wedge_vectors,
)
from .tensor import (
    Permutation,
    Tensor,
    inner_product,
    make_tensor,
    permute,
    product_of_vectors,
    tensor_from_dict,
    tensor_power,
    tensor_product,
    tensor_to_dict,
)
from .young import (
    Partition,
    SymmetrizerOperator,
    YoungTableau,
    alpha_is_simple,
    alpha_simple,
    central_symmetrizer,
    enumerate_partitions,
    enumerate_tableaux,
    mu_constant,
    multiplicity,
    young_projector,
    young_symmetrizer,
)

__version__ = "0.1.0"
