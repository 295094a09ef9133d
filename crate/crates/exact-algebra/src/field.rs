//! A minimal field abstraction so polynomial and matrix code can run over
//! the rationals, rational functions, and algebraic number fields alike.

use crate::poly::Poly;
use crate::rat::Rat;
use num_traits::Zero;
use std::fmt::{Debug, Display};

pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero; callers are expected to have
    /// performed an exact zero test first.
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    /// Embedding of the rationals.
    fn from_rat(r: &Rat) -> Self;

    /// Monic gcd of two polynomials over this field. The default is the
    /// Euclidean algorithm; fields with a faster route (the rationals, via
    /// modular images) override it.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        Poly::gcd_euclid(a, b)
    }

    /// Exact polynomial division (`b` must divide `a`). Fields with a
    /// faster route than coefficientwise division override this.
    fn poly_divexact(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        a.exact_div(b).expect("exact polynomial division")
    }

    /// Polynomial product. Fields with a faster route than the schoolbook
    /// convolution override this.
    fn poly_mul(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        a.mul_schoolbook(b)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        if Zero::is_zero(self) {
            panic!("inverse of zero");
        }
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        crate::intpoly::rat_poly_gcd_fast(a, b)
    }

    fn poly_divexact(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        crate::intpoly::rat_poly_divexact(a, b)
    }

    fn poly_mul(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        crate::intpoly::rat_poly_mul(a, b)
    }
}
