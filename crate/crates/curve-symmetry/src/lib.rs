//! Exact symmetry detection for rational space curves.
//!
//! A symmetry of the curve is an isometry of space mapping the curve onto
//! itself. Every such isometry induces a Möbius change of parameter, so the
//! search is organised in two stages: `detect` finds all admissible Möbius
//! transformations by matching the differential invariants of the curve
//! against themselves, and `reconstruct` turns each admitted transformation
//! into the explicit isometry `x -> Qx + b`, verifies it exactly, and
//! classifies it (rotation, mirror, central inversion, ...). All arithmetic
//! is exact: rational numbers, rational functions, and real algebraic
//! numbers represented by minimal polynomial plus isolating interval.

pub mod detect;
pub mod reconstruct;

use curve_invariants::{CurveError, DegeneracyKind};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SymmetryError {
    /// The curve is a line, a circle, or planar: the symmetry group is
    /// infinite or out of scope, so the run is refused rather than answered.
    Degenerate(DegeneracyKind),
    /// The parametrization is constant or otherwise ill-posed.
    IllPosed,
    /// An internal exactness check failed; indicates a bug, never expected.
    Internal(String),
}

impl fmt::Display for SymmetryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryError::Degenerate(k) => write!(f, "degenerate curve: {:?}", k),
            SymmetryError::IllPosed => write!(f, "constant or ill-posed parametrization"),
            SymmetryError::Internal(m) => write!(f, "internal inconsistency: {}", m),
        }
    }
}

impl std::error::Error for SymmetryError {}

impl From<CurveError> for SymmetryError {
    fn from(_: CurveError) -> Self {
        SymmetryError::IllPosed
    }
}

pub use detect::{
    build_equations, candidates_d0, candidates_d1, choose_probe, divides_gcd_surface,
    implicit_derivs, probe_at, run_sign, speed_filter, speed_witness, strip_pure_t_factors, symm,
    symm_both, Branch, ImplicitDerivs,
    MobiusCandidate, ProbeLine, SignResult, SpeedWitness, SymbolicMobius, SymmetryEquations,
};
pub use reconstruct::{
    classify, fixed_points, prepare_frame, reconstruct, verify_parametric_identity, FixedSet,
    FrameMatrices, Isometry, SymmetryKind, SymmetryRecord,
};
