//! Real root isolation by Sturm chains and exactly-represented real
//! algebraic numbers (irreducible minimal polynomial plus a shrinkable
//! isolating interval).

use crate::error::AlgebraError;
use crate::poly::{squarefree_part, Poly, UniPoly};
use crate::rat::{Rat, Int};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

/// Sturm chain of a squarefree polynomial; terms are kept integer-primitive
/// (up to sign) to control coefficient growth.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

fn signed_primitive(p: &UniPoly) -> UniPoly {
    // strip the positive content, keep the sign
    if p.is_zero() {
        return p.clone();
    }
    let prim = p.primitive();
    if (p.leading() > Rat::zero()) == (prim.leading() > Rat::zero()) {
        prim
    } else {
        prim.neg()
    }
}

impl SturmChain {
    /// Chain for a squarefree nonconstant polynomial.
    pub fn new(p: &UniPoly) -> Self {
        assert!(p.deg() >= 1, "chain needs a nonconstant polynomial");
        let mut chain = vec![signed_primitive(p), signed_primitive(&p.derivative())];
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(signed_primitive(&r.neg()));
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let s = v > Rat::zero();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    fn variations_at_neg_inf(&self) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let lead_pos = p.leading() > Rat::zero();
            let s = if p.deg() % 2 == 0 { lead_pos } else { !lead_pos };
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    fn variations_at_pos_inf(&self) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let s = p.leading() > Rat::zero();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    pub fn count_all_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Upper bound on the absolute value of every complex root.
pub fn root_bound(p: &UniPoly) -> Rat {
    let lead = p.leading().abs();
    let mut max = Rat::zero();
    let n = p.deg() as usize;
    for k in 0..n {
        let v = p.coeff(k).abs() / lead.clone();
        if v > max {
            max = v;
        }
    }
    max + Rat::from_integer(Int::from(1))
}

/// Isolating intervals for all distinct real roots of `p`, sorted in
/// increasing order. Each half-open interval `(lo, hi]` contains exactly one
/// real root of `p` and the intervals are pairwise disjoint.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<(Rat, Rat)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let sf = squarefree_part(p)?;
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let b = root_bound(&sf);
    let lo = -b.clone();
    let total = chain.count_roots(&lo, &b);
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(lo, b, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / Rat::from_integer(Int::from(2));
        let left = chain.count_roots(&a, &mid);
        stack.push((mid.clone(), b, n - left));
        stack.push((a, mid, left));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// A real root of an irreducible integer polynomial, pinned down by an
/// isolating interval that can be refined on demand.
pub struct AlgebraicNumber {
    min_poly: UniPoly,
    chain: SturmChain,
    interval: Mutex<(Rat, Rat)>,
}

impl AlgebraicNumber {
    /// `min_poly` must be irreducible over Q (degree >= 1) and `(lo, hi]`
    /// must contain exactly one of its real roots.
    pub fn new(min_poly: UniPoly, lo: Rat, hi: Rat) -> Self {
        assert!(min_poly.deg() >= 1);
        let chain = SturmChain::new(&min_poly);
        debug_assert_eq!(chain.count_roots(&lo, &hi), 1, "interval must isolate");
        AlgebraicNumber {
            min_poly,
            chain,
            interval: Mutex::new((lo, hi)),
        }
    }

    pub fn from_rat(r: &Rat) -> Self {
        // minimal polynomial q x - p for r = p/q
        let p = Poly::new(vec![-r.clone(), Rat::from_integer(Int::from(1))]);
        AlgebraicNumber::new(
            p,
            r - Rat::from_integer(Int::from(1)),
            r.clone(),
        )
    }

    pub fn min_poly(&self) -> &UniPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg() as usize
    }

    /// The exact rational value when the degree is one.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.degree() == 1 {
            Some(-self.min_poly.coeff(0) / self.min_poly.coeff(1))
        } else {
            None
        }
    }

    pub fn interval(&self) -> (Rat, Rat) {
        self.interval.lock().unwrap().clone()
    }

    /// Shrink the isolating interval below `width` and return it.
    pub fn refine_to(&self, width: &Rat) -> (Rat, Rat) {
        if let Some(r) = self.as_rational() {
            // keep the stored interval shrinking so comparisons terminate
            let mut guard = self.interval.lock().unwrap();
            if &(&guard.1 - &guard.0) >= width {
                *guard = (&r - width / Rat::from_integer(Int::from(2)), r.clone());
            }
            return (r.clone(), r);
        }
        let mut guard = self.interval.lock().unwrap();
        let two = Rat::from_integer(Int::from(2));
        while &(&guard.1 - &guard.0) >= width {
            let mid = (&guard.0 + &guard.1) / two.clone();
            if self.chain.count_roots(&guard.0, &mid) == 1 {
                guard.1 = mid;
            } else {
                guard.0 = mid;
            }
        }
        guard.clone()
    }

    pub fn approx_f64(&self) -> f64 {
        let w = Rat::new(Int::from(1), Int::from(1_000_000_000_000u64));
        let (lo, hi) = self.refine_to(&w);
        let mid = (lo + hi) / Rat::from_integer(Int::from(2));
        crate::rat::to_f64(&mid)
    }

    /// Exact comparison by interval refinement. Two numbers are equal iff
    /// they share a minimal polynomial and their intervals pin the same root.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        let same_poly = self.min_poly == other.min_poly;
        loop {
            let (a_lo, a_hi) = self.interval();
            let (b_lo, b_hi) = other.interval();
            if a_hi < b_lo {
                return Ordering::Less;
            }
            if b_hi < a_lo {
                return Ordering::Greater;
            }
            if same_poly {
                // the overlap lies inside both isolating intervals, each of
                // which contains exactly one root, so a root in the overlap
                // is the root of both
                let lo = if a_lo > b_lo { a_lo.clone() } else { b_lo.clone() };
                let hi = if a_hi < b_hi { a_hi.clone() } else { b_hi.clone() };
                if lo < hi && self.chain.count_roots(&lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
            let half_a = (&a_hi - &a_lo) / Rat::from_integer(Int::from(2));
            let half_b = (&b_hi - &b_lo) / Rat::from_integer(Int::from(2));
            self.refine_to(&if half_a.is_zero() {
                Rat::new(Int::from(1), Int::from(2))
            } else {
                half_a
            });
            other.refine_to(&if half_b.is_zero() {
                Rat::new(Int::from(1), Int::from(2))
            } else {
                half_b
            });
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.interval();
        write!(
            f,
            "root of {} in ({}, {}]",
            self.min_poly.to_string_var("x"),
            lo,
            hi
        )
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12}", self.approx_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn isolate_quadratics() {
        // 12 x^4 - 97 x^2 + 8 has four real roots: ±sqrt(8), ±sqrt(1/12)
        // after factoring; the quartic's roots are ±2.8284.., ±0.2886..
        let p = Poly::from_ints(&[8, 0, -97, 0, 12]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 4);
        let approx: Vec<f64> = roots
            .iter()
            .map(|(a, b)| {
                let n = AlgebraicNumber::new(p.clone(), a.clone(), b.clone());
                // p is squarefree but reducible; only interval logic is
                // exercised here
                n.approx_f64()
            })
            .collect();
        let expected = [-(8f64).sqrt(), -(1f64 / 12.0).sqrt(), (1f64 / 12.0).sqrt(), (8f64).sqrt()];
        for (a, e) in approx.iter().zip(expected.iter()) {
            assert!((a - e).abs() < 1e-9, "{} vs {}", a, e);
        }
    }

    #[test]
    fn no_real_roots() {
        let p = Poly::from_ints(&[1, 0, 1]);
        assert!(isolate_real_roots(&p).unwrap().is_empty());
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-1)^2 (x+2)
        let p = Poly::from_ints(&[-1, 1]).pow(2).mul(&Poly::from_ints(&[2, 1]));
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn rational_number_roundtrip() {
        let r = rat(7, 3);
        let a = AlgebraicNumber::from_rat(&r);
        assert_eq!(a.as_rational(), Some(r));
        assert!((a.approx_f64() - 7.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn compare_distinct_and_equal() {
        let p = Poly::from_ints(&[-2, 0, 1]); // x^2 - 2
        let pos = AlgebraicNumber::new(p.clone(), rat_int(1), rat_int(2));
        let neg = AlgebraicNumber::new(p.clone(), rat_int(-2), rat_int(-1));
        assert_eq!(neg.compare(&pos), Ordering::Less);
        let pos2 = AlgebraicNumber::new(p.clone(), rat_int(0), rat_int(3));
        assert_eq!(pos.compare(&pos2), Ordering::Equal);
        let r = AlgebraicNumber::from_rat(&rat(3, 2));
        assert_eq!(r.compare(&pos), Ordering::Greater);
    }

    #[test]
    fn refine_shrinks() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let a = AlgebraicNumber::new(p, rat_int(1), rat_int(2));
        let w = rat(1, 1_000_000);
        let (lo, hi) = a.refine_to(&w);
        assert!(&hi - &lo < w);
        assert!((a.approx_f64() - 2f64.sqrt()).abs() < 1e-10);
    }
}
