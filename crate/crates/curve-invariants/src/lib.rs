//! Rational space curves with exact rational-function components:
//! derivatives, differential invariants (squared curvature, torsion, squared
//! speed), degeneracy classification, a small corpus of named curves, and
//! the exact JSON curve format.

pub mod corpus;
pub mod curve;
pub mod invariants;
pub mod io;

pub use corpus::{
    crunode, daisy, random_central_curve, random_curve, random_mobius, random_orthogonal,
    random_vector, twisted_cubic,
};
pub use curve::{find_regular_shift, CurveError, ParamCurve3};
pub use invariants::{degeneracy, invariants, CurveInvariants, DegeneracyKind};
pub use io::{curve_from_json, curve_to_json};
