//! Plane-stress analysis of voltage-activated elastomer membranes.
//!
//! Thin dielectric films between compliant electrodes cannot carry in-plane
//! compression: they wrinkle. This crate computes the in-plane principal
//! stresses of an incompressible isotropic membrane under an applied voltage,
//! classifies stretch states as tense, wrinkled or slack, traces the
//! voltage-dependent domain of tensile states and finds the activation at
//! which that domain disappears (pull-in), together with the prestretch that
//! postpones it the longest.
//!
//! ```
//! use tensile_domain::{critical_activation, MaterialModel};
//!
//! let nh = MaterialModel::neo_hookean(1.0).unwrap();
//! let cp = critical_activation(&nh).unwrap();
//! assert!((cp.lambda_crit - 2f64.cbrt()).abs() < 1e-12);
//! ```

pub mod domain;
pub mod error;
pub mod material;
pub mod scenarios;
pub mod solve;
pub mod stress;

pub use domain::{
    asymptote, boundary, contains, critical_activation, critical_activation_closed_form,
    critical_activation_numeric, equibiaxial_activation, natural_width, vertices, BoundarySample,
    BoundaryWarning, CriticalMethod, CriticalPoint, DomainBoundary, RESIDUAL_TOLERANCE,
    STRETCH_CAP,
};
pub use error::{Error, Result};
pub use material::{MaterialKind, MaterialModel};
pub use scenarios::{
    free_actuation, max_activation_for_prestretch, optimal_prestretch, prestretched_actuation,
    pull_in, Branch, EquilibriumBranch, EquilibriumState, OptimalPrestretch, PrestretchDiagnostic,
    PrestretchSolution,
};
pub use stress::{
    activation_parameter, classify, plane_stress, reduced_energy, relaxed_stress, Classification,
    ElectricLoad, PlaneStress, Regime, RelaxationDiagnostic, StretchState, BOUNDARY_TOLERANCE,
};
