//! Arithmetic in Q(xi) where xi is a real algebraic number: elements are
//! polynomials in xi reduced modulo the (irreducible) minimal polynomial.
//! Plain rationals embed with no base number attached, so the generic
//! `Field::zero`/`one` constructors work without a field in scope.

use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::{Poly, UniPoly};
use crate::rat::{Int, Rat};
use crate::ratfunc::RatX;
use crate::roots::AlgebraicNumber;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// An element of Q(xi). Invariants: `rep` has degree below the minimal
/// polynomial of `base`; when `base` is `None` the element is a plain
/// rational and `rep` is constant.
#[derive(Clone)]
pub struct FieldElem {
    base: Option<Arc<AlgebraicNumber>>,
    rep: UniPoly,
}

fn same_base(a: &Arc<AlgebraicNumber>, b: &Arc<AlgebraicNumber>) -> bool {
    Arc::ptr_eq(a, b) || a.compare(b) == Ordering::Equal
}

impl FieldElem {
    pub fn from_rep(base: Arc<AlgebraicNumber>, rep: UniPoly) -> Self {
        let m = base.min_poly().monic();
        let rep = rep.div_rem(&m).1;
        if rep.is_constant() {
            return FieldElem {
                base: None,
                rep,
            };
        }
        FieldElem {
            base: Some(base),
            rep,
        }
    }

    /// The generator xi itself.
    pub fn generator(base: Arc<AlgebraicNumber>) -> Self {
        FieldElem::from_rep(base, Poly::x())
    }

    pub fn rational(r: Rat) -> Self {
        FieldElem {
            base: None,
            rep: Poly::constant(r),
        }
    }

    pub fn base(&self) -> Option<&Arc<AlgebraicNumber>> {
        self.base.as_ref()
    }

    pub fn rep(&self) -> &UniPoly {
        &self.rep
    }

    /// Exact rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.rep.is_constant() {
            return Some(self.rep.coeff(0));
        }
        None
    }

    fn merged_base(&self, other: &Self) -> Option<Arc<AlgebraicNumber>> {
        match (&self.base, &other.base) {
            (None, b) => b.clone(),
            (b, None) => b.clone(),
            (Some(a), Some(b)) => {
                assert!(same_base(a, b), "elements from different fields");
                Some(a.clone())
            }
        }
    }

    fn rebuild(base: Option<Arc<AlgebraicNumber>>, rep: UniPoly) -> Self {
        match base {
            Some(b) => FieldElem::from_rep(b, rep),
            None => {
                debug_assert!(rep.is_constant());
                FieldElem { base: None, rep }
            }
        }
    }

    /// Enclosing interval with width below `width`, by refining the base
    /// number and evaluating `rep` with interval arithmetic.
    pub fn approx_interval(&self, width: &Rat) -> (Rat, Rat) {
        if let Some(r) = self.as_rational() {
            return (r.clone(), r);
        }
        let base = self.base.as_ref().expect("nonconstant rep needs a base");
        let mut target = width.clone();
        loop {
            let iv = base.refine_to(&target);
            let (lo, hi) = interval_horner(&self.rep, &iv);
            if &(&hi - &lo) < width {
                return (lo, hi);
            }
            target /= Rat::from_integer(Int::from(16));
        }
    }

    pub fn approx_f64(&self) -> f64 {
        let w = Rat::new(Int::from(1), Int::from(1_000_000_000_000u64));
        let (lo, hi) = self.approx_interval(&w);
        crate::rat::to_f64(&((lo + hi) / Rat::from_integer(Int::from(2))))
    }

    /// Sign of the element: -1, 0 or 1, decided exactly.
    pub fn sign(&self) -> i32 {
        if self.rep.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r > Rat::zero() { 1 } else { -1 };
        }
        // nonzero element of Q(xi): its interval separates from zero after
        // enough refinement
        let mut w = Rat::new(Int::from(1), Int::from(1024));
        loop {
            let (lo, hi) = self.approx_interval(&w);
            if lo > Rat::zero() {
                return 1;
            }
            if hi < Rat::zero() {
                return -1;
            }
            w /= Rat::from_integer(Int::from(1024));
        }
    }
}

fn interval_mul(a: &(Rat, Rat), b: &(Rat, Rat)) -> (Rat, Rat) {
    let products = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let mut lo = products[0].clone();
    let mut hi = products[0].clone();
    for p in &products[1..] {
        if p < &lo {
            lo = p.clone();
        }
        if p > &hi {
            hi = p.clone();
        }
    }
    (lo, hi)
}

fn interval_horner(p: &UniPoly, x: &(Rat, Rat)) -> (Rat, Rat) {
    let n = p.deg();
    let mut acc = (Rat::zero(), Rat::zero());
    for k in (0..=n.max(0) as usize).rev() {
        acc = interval_mul(&acc, x);
        let c = p.coeff(k);
        acc = (acc.0 + c.clone(), acc.1 + c);
    }
    acc
}

/// Evaluate a rational function of the probe variable at xi; fails when the
/// denominator vanishes there.
pub fn field_eval(f: &RatX, xi: &Arc<AlgebraicNumber>) -> Result<FieldElem, AlgebraError> {
    let m = xi.min_poly().monic();
    let den = f.den().div_rem(&m).1;
    if den.is_zero() {
        return Err(AlgebraError::DenominatorVanishes);
    }
    let num = f.num().div_rem(&m).1;
    let num_e = FieldElem::from_rep(xi.clone(), num);
    let den_e = FieldElem::from_rep(xi.clone(), den);
    Ok(num_e.div(&den_e))
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        match (&self.base, &other.base) {
            (Some(a), Some(b)) if !same_base(a, b) => false,
            _ => self.rep == other.rep,
        }
    }
}

impl Field for FieldElem {
    fn zero() -> Self {
        FieldElem::rational(Rat::zero())
    }
    fn one() -> Self {
        FieldElem::rational(Rat::from_integer(Int::from(1)))
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        FieldElem::rebuild(self.merged_base(other), self.rep.add(&other.rep))
    }
    fn sub(&self, other: &Self) -> Self {
        FieldElem::rebuild(self.merged_base(other), self.rep.sub(&other.rep))
    }
    fn mul(&self, other: &Self) -> Self {
        FieldElem::rebuild(self.merged_base(other), self.rep.mul(&other.rep))
    }
    fn neg(&self) -> Self {
        FieldElem {
            base: self.base.clone(),
            rep: self.rep.neg(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.rep.is_zero(), "inverse of zero");
        match &self.base {
            None => FieldElem::rational(Rat::from_integer(Int::from(1)) / self.rep.coeff(0)),
            Some(b) => {
                // xgcd against the irreducible minimal polynomial gives
                // u with u*rep = 1 (mod m)
                let m = b.min_poly().monic();
                let (g, _, v) = Poly::xgcd(&m, &self.rep);
                assert!(g.is_constant(), "minimal polynomial must be irreducible");
                FieldElem::from_rep(b.clone(), v)
            }
        }
    }
    fn from_rat(r: &Rat) -> Self {
        FieldElem::rational(r.clone())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.to_string_var("xi"))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{}", r)
        } else {
            write!(f, "{} (~{:.9})", self.rep.to_string_var("xi"), self.approx_f64())
        }
    }
}
