//! Exact arithmetic kernel: arbitrary-precision rationals, univariate and
//! bivariate polynomials over the rationals, gcds, squarefree decomposition,
//! full rational factorization, Sturm-based real root isolation, and
//! arithmetic in real algebraic number fields.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so all types are freely transferable between threads.

pub mod bipoly;
pub mod error;
pub mod factor;
pub mod field;
pub mod intpoly;
pub mod linalg;
pub mod numfield;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod roots;

pub use bipoly::{poly_gcd_bi, resultant_mobius, BiPoly};
pub use error::AlgebraError;
pub use field::Field;
pub use numfield::{field_eval, FieldElem};
pub use poly::{poly_gcd_uni, squarefree_part, Poly, UniPoly};
pub use rat::{rat, rat_int, Int, Rat};
pub use ratfunc::{compose_frac, RatFunc, RatX};
pub use roots::{isolate_real_roots, AlgebraicNumber};

pub use factor::factor_rationals;
