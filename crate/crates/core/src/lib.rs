//! Fractional-order dynamics of the Chen-Lee family: vector fields,
//! equilibrium stability under the fractional cone test, feedback-control
//! classification, and explicit integration against an exponential
//! power-law kernel.

pub mod cubic;
pub mod error;
pub mod fractional;
pub mod integrator;
pub mod stability;
pub mod systems;

pub use error::Error;
pub use num_complex::Complex64;
pub use fractional::{caputo_derivative, gamma, kernel_g, rl_integral, FractionalOrder, KernelParams};
pub use integrator::{
    convergence_report, euler_step, initial_condition, simulate, step_weight, ControlMode,
    ConvergenceReport, IntegratorConfig, KernelMode, SimulationError, Trajectory, TrajectoryPoint,
    DIVERGENCE_LIMIT,
};
pub use stability::{
    char_poly, classify_e0, classify_e2m, discriminant, eigenvalues3, equilibria_special,
    jacobian, matignon_classify, DiscriminantReport, EigenTriple, EigenWitness,
    EquilibriumFamily, PairRegime, StabilityVerdict, VerdictKind, DEFAULT_BOUNDARY_TOL,
    ZERO_EIGENVALUE_TOL,
};
pub use systems::{
    eval_controlled, eval_full, eval_special, lipschitz_bound, matrix_form, ChenLeeParams,
    ControlSpec, LipschitzNorm, MatrixForm, State, SystemSpec, ANCHOR_RESIDUAL_TOL,
};
