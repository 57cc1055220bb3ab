"""Finite-difference relativistic model of the N-dimensional isotropic
singular oscillator.

The model lives in relativistic configurational space, where the free
Hamiltonian is a finite-difference operator whose step is the Compton
wavelength. This package provides the special-function kernels, the shift
operator calculus, the bound states and spectrum, the su(1,1) ladder
structure, the plane-wave groundwork, and a verification suite that
numerically certifies every identity the model asserts.
"""

from .specfun import (
    CdhParams,
    cdh_norm,
    cdh_poly,
    cdh_weight,
    generalized_degree,
    log_gamma,
    pochhammer,
    reciprocal_gamma,
)
from .operators import (
    AnalyticFunction,
    LinearOperator,
    SingularPointError,
    StripExhaustedError,
    apply,
    compose,
    cosh_shift,
    linear_combination,
    memoized,
    multiply_by,
    op_sum,
    scale,
    shift,
    sinh_shift,
    taylor_limit_check,
)
from .quadrature import (
    DecayHint,
    QuadratureConvergenceError,
    QuadratureRule,
    gram_matrix,
    inner_product,
    integrate_halfline,
)
from .oscillator import (
    CONVENTIONS,
    Conventions,
    DerivedParams,
    InvalidParametersError,
    ModelParams,
    RadialState,
    derive_params,
    eigen_residual,
    energy,
    hamiltonian_radial_N,
    hamiltonian_reduced,
    nonrel_energy,
    quasipotential_op,
    radial_wavefunction,
)
from .symmetry import (
    CoefficientState,
    K_action,
    LadderCoefficients,
    build_A_minus,
    build_A_plus,
    build_a_minus,
    build_a_plus,
    build_momentum,
    casimir,
    commutator_residual,
    generate_state_via_ladder,
)
from .planewaves import (
    PlaneWaveParams,
    free_hamiltonian_residual,
    reduction_multiplier,
    weight_wN,
    xi_3d,
    xi_Nd,
)

__version__ = "0.1.0"
