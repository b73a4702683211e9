//! Numerical verification: sampled axiom residuals, bracket recovery by
//! central differences, RK4 flows against closed forms, and Noether checks.

mod axioms;
mod bracket;
mod controls;
mod flow;
mod noether;

pub use axioms::{
    verify_axioms, verify_convex_right_distributivity, verify_spindle, Axiom, AxiomReport,
    WorstCase, T_RANGE,
};
pub use bracket::{bracket_error, numeric_bracket, DEFAULT_STEP};
pub use controls::{Corrupted, CORRUPTION};
pub use flow::{
    closed_form_trajectory, integrate_bloch_flow, integrate_convex_flow, integrate_flow, rk4,
    OdeState, Trajectory,
};
pub use noether::{
    noether_check, noether_suite, t_grid, NoetherMode, NoetherResiduals, NoetherSummary,
    NoetherVerdict, DEFAULT_T_SAMPLES, NOETHER_TOLERANCE,
};

/// Axiom tolerance for matrix and Bloch realizations.
pub const MATRIX_TOLERANCE: f64 = 1e-8;

/// Axiom tolerance for affine realizations.
pub const AFFINE_TOLERANCE: f64 = 1e-12;
