use std::fmt;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// gcd of two zero polynomials is undefined.
    BothZero,
    /// The zero polynomial has no squarefree part, factorization, or roots.
    ZeroPolynomial,
    /// A denominator vanishes at the algebraic number being substituted.
    /// Signals that the candidate root must be discarded.
    DenominatorVanishes,
    /// Division by zero in a field.
    DivisionByZero,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::BothZero => write!(f, "gcd of two zero polynomials"),
            AlgebraError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            AlgebraError::DenominatorVanishes => {
                write!(f, "denominator vanishes at the given algebraic number")
            }
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for AlgebraError {}
