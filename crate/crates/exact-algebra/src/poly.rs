//! Dense univariate polynomials over a field, lowest degree first.

use crate::error::AlgebraError;
use crate::field::Field;
use crate::rat::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Univariate polynomial over the rationals.
pub type UniPoly = Poly<Rat>;

/// A dense univariate polynomial with coefficients in a field `F`.
///
/// Invariant: the leading coefficient is nonzero unless the polynomial is
/// zero, in which case the coefficient list is empty.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(F::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg(0) = -1, convenient for loops.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&other.coeff(k)));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&other.coeff(k)));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        F::poly_mul(self, other)
    }

    /// Coefficientwise schoolbook product; the generic fallback behind
    /// `Field::poly_mul`.
    pub fn mul_schoolbook(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead_inv = divisor.leading().inv();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].mul(&dlead_inv);
            for j in 0..dd {
                rem[k - dd + j] = rem[k - dd + j].sub(&q.mul(&divisor.coeffs[j]));
            }
            rem[k] = F::zero();
            quot[k - dd] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let k_elt = F::from_rat(&Rat::from_integer(Int::from(k)));
            out.push(c.mul(&k_elt));
        }
        Poly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation into a larger field through the rational embedding
    /// of the coefficients.
    pub fn eval_in<G: Field>(&self, x: &G, embed: impl Fn(&F) -> G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&embed(c));
        }
        acc
    }

    /// Composition `self(other(x))` by Horner.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `self(x + alpha)`.
    pub fn shift(&self, alpha: &F) -> Self {
        self.compose(&Poly::new(vec![alpha.clone(), F::one()]))
    }

    /// Coefficients reversed with respect to the degree bound `n`:
    /// `x^n * self(1/x)`. Requires `n >= deg(self)`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.deg() <= n as isize);
        let mut out = vec![F::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[n - k] = c.clone();
        }
        Poly::new(out)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().inv();
        self.scale(&inv)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd_euclid(a: &Self, b: &Self) -> Self {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            let (_, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
        }
        r0.monic()
    }

    /// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let lead_inv = r0.leading().inv();
        (
            r0.scale(&lead_inv),
            s0.scale(&lead_inv),
            t0.scale(&lead_inv),
        )
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = format!("{}", c);
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            let mag = if mag.contains(['+', ' ']) {
                format!("({})", mag)
            } else {
                mag
            };
            let term = match k {
                0 => mag,
                1 if mag == "1" => var.to_string(),
                1 => format!("{}*{}", mag, var),
                _ if mag == "1" => format!("{}^{}", var, k),
                _ => format!("{}*{}^{}", mag, var, k),
            };
            if parts.is_empty() {
                if sign == "-" {
                    parts.push(format!("-{}", term));
                } else {
                    parts.push(term);
                }
            } else {
                parts.push(format!(" {} {}", if sign == "-" { "-" } else { "+" }, term));
            }
        }
        parts.concat()
    }
}

impl Poly<Rat> {
    /// Polynomial with machine-integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return <Rat as Zero>::zero();
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = Int::zero();
        for c in &self.coeffs {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        Rat::new(num, den)
    }

    /// Integer-primitive associate: divide by the content and normalize the
    /// leading coefficient to be positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        let inv = c.recip();
        self.scale(&inv)
    }

    /// Integer coefficient vector of the primitive associate, plus the
    /// content (with sign matching the original leading coefficient).
    pub fn to_int_primitive(&self) -> (Vec<Int>, Rat) {
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        if self.is_zero() {
            return (Vec::new(), <Rat as Zero>::zero());
        }
        let inv = c.recip();
        let ints = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &inv;
                debug_assert!(v.denom().is_one());
                v.numer().clone()
            })
            .collect();
        (ints, c)
    }

    pub fn from_int_coeffs(coeffs: Vec<Int>) -> Self {
        Poly::new(coeffs.into_iter().map(Rat::from_integer).collect())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

/// Monic greatest common divisor over the rationals.
pub fn poly_gcd_uni(p: &UniPoly, q: &UniPoly) -> Result<UniPoly, AlgebraError> {
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    Ok(<Rat as Field>::poly_gcd(p, q))
}

/// Product of the distinct irreducible factors, monic.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Poly::one());
    }
    let g = poly_gcd_uni(p, &p.derivative())?;
    Ok(p.exact_div(&g)
        .expect("gcd divides its argument")
        .monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn div_rem_roundtrip() {
        let p = Poly::from_ints(&[2, 0, -3, 1]); // x^3 - 3x^2 + 2
        let d = Poly::from_ints(&[-1, 1]); // x - 1
        let (q, r) = p.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), p);
        assert_eq!(r, Poly::from_ints(&[0]));
    }

    #[test]
    fn gcd_shared_root() {
        // (t^2 - 1, t^2 - 2t + 1) -> t - 1
        let p = Poly::from_ints(&[-1, 0, 1]);
        let q = Poly::from_ints(&[1, -2, 1]);
        let g = poly_gcd_uni(&p, &q).unwrap();
        assert_eq!(g, Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let p = Poly::from_ints(&[2, 4]);
        let g = poly_gcd_uni(&p, &Poly::zero()).unwrap();
        assert_eq!(g, Poly::new(vec![rat(1, 2), rat_int(1)]));
    }

    #[test]
    fn gcd_both_zero_errors() {
        assert_eq!(
            poly_gcd_uni(&Poly::zero(), &Poly::zero()),
            Err(AlgebraError::BothZero)
        );
    }

    #[test]
    fn gcd_of_squarefree_quartic_and_derivative_is_one() {
        // 12 x^4 - 97 x^2 + 8 is squarefree
        let p = Poly::from_ints(&[8, 0, -97, 0, 12]);
        let g = poly_gcd_uni(&p, &p.derivative()).unwrap();
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn squarefree_part_examples() {
        // (t-1)^2 (t+2) -> (t-1)(t+2)
        let p = Poly::from_ints(&[-1, 1])
            .pow(2)
            .mul(&Poly::from_ints(&[2, 1]));
        let s = squarefree_part(&p).unwrap();
        assert_eq!(s, Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[2, 1])));

        let q = Poly::from_ints(&[8, 0, -97, 0, 12]);
        let sq = squarefree_part(&q).unwrap();
        assert_eq!(sq, q.monic());

        let t4 = Poly::from_ints(&[0, 0, 0, 0, 1]);
        assert_eq!(squarefree_part(&t4).unwrap(), Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn display() {
        let p = Poly::from_ints(&[8, 0, -97, 0, 12]);
        assert_eq!(p.to_string_var("x"), "12*x^4 - 97*x^2 + 8");
    }

    #[test]
    fn compose_and_shift() {
        let p = Poly::from_ints(&[0, 0, 1]); // x^2
        let q = p.shift(&rat_int(1)); // (x+1)^2
        assert_eq!(q, Poly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn xgcd_identity() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[1, -2, 1]);
        let (g, u, v) = Poly::xgcd(&a, &b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }
}
