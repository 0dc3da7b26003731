"""Closed-form ground state of the complex Morse potential with a
position-dependent complex mass on the extended (x1, p2) plane, with a
numerical audit layer (identity suites, finite-difference residuals,
quadrature norms, printed-formula cross-checks) and a CSV-scanning CLI.
"""
from .errors import (
    ConfigError,
    DegenerateDenominator,
    DegenerateIdentically,
    DegenerateLambda2,
    DivisionByZero,
    DomainError,
    IoError,
    MassPositivityViolation,
    NegativeRadicand,
    NegativeUnderRoot,
    NoRealRoots,
    NonFiniteField,
    NotNormalizable,
    OverflowSignal,
)
from .model import (
    MassKind,
    MassProfile,
    MassState,
    MorseParams,
    ScaledCoordinates,
    case_ia,
    case_iia,
    constant_mass,
    mass_at,
    potential_at,
    potential_complex,
    scaled_coords,
)
from .phasespace import PhasePoint, complex_derivative, cr_residual, default_step
from .reality import (
    RealityState,
    ReCase,
    SpecialCaseCoeffs,
    ei_quadratic_coeffs,
    reality_condition_product,
    real_energy_at_root,
    reality_roots,
    special_case_roots,
)
from .solution import (
    AnsatzParams,
    AnsatzPhase,
    EnergyPair,
    NormalizationInfo,
    Region,
    SpecialCase,
    WaveSample,
    ansatz_from_beta3,
    ansatz_params,
    beta3,
    classify_region,
    compute_JK,
    constraint_ratio,
    density_at,
    energy_at,
    norm_constant,
    phase_at,
    psi_at,
    region_by_inequalities,
    special_case_energy,
)

__version__ = "0.1.0"
