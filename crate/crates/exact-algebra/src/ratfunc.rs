//! Reduced fractions of univariate polynomials over a field. With `F = Rat`
//! this is the field of rational functions in one variable, the coefficient
//! ring used for the symbolic probe-line computations.

use crate::field::Field;
use crate::poly::Poly;
use crate::rat::Rat;
use std::fmt;

/// Rational functions of the symbolic probe variable.
pub type RatX = RatFunc<Rat>;

/// A reduced fraction `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = F::poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (F::poly_divexact(&num, &g), F::poly_divexact(&den, &g))
        };
        let lead_inv = den.leading().inv();
        den = den.scale(&lead_inv);
        num = num.scale(&lead_inv);
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Derivative by the quotient rule, reduced.
    pub fn derivative(&self) -> Self {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(num, self.den.mul(&self.den))
    }

    /// Evaluation; `None` when the denominator vanishes at `x`.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).div(&d))
    }

    /// Composition `self(phi(x))` with another rational function.
    pub fn compose(&self, phi: &Self) -> Self {
        let n = self.num.deg().max(self.den.deg()).max(0) as usize;
        let cn = compose_frac(&self.num, &phi.num, &phi.den, n);
        let cd = compose_frac(&self.den, &phi.num, &phi.den, n);
        RatFunc::new(cn, cd)
    }

    /// `self(x + alpha)`.
    pub fn shift(&self, alpha: &F) -> Self {
        RatFunc::new(self.num.shift(alpha), self.den.shift(alpha))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            self.num.to_string_var(var)
        } else {
            format!(
                "({}) / ({})",
                self.num.to_string_var(var),
                self.den.to_string_var(var)
            )
        }
    }
}

/// `r^n * p(q/r)` for `n >= deg p`: the denominator-cleared composition of a
/// polynomial with a fraction.
pub fn compose_frac<F: Field>(p: &Poly<F>, q: &Poly<F>, r: &Poly<F>, n: usize) -> Poly<F> {
    assert!(p.deg() <= n as isize);
    // Horner in q/r with precomputed powers of r.
    let mut r_pows = Vec::with_capacity(n + 1);
    r_pows.push(Poly::one());
    for _ in 0..n {
        let next = r_pows.last().unwrap().mul(r);
        r_pows.push(next);
    }
    let mut acc = Poly::zero();
    for k in (0..=n).rev() {
        acc = acc.mul(q);
        let c = p.coeff(k);
        if !c.is_zero() {
            acc = acc.add(&r_pows[n - k].scale(&c));
        }
    }
    acc
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .sub(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den))
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of the zero function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn from_rat(r: &Rat) -> Self {
        RatFunc::constant(F::from_rat(r))
    }
}
