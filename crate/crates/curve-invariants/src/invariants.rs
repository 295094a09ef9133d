//! Differential invariants as reduced rational functions, and the
//! degeneracy classification that decides whether the symmetry machinery
//! applies at all.

use crate::curve::{CurveError, ParamCurve3};
use exact_algebra::{Field, RatX};

/// Squared curvature, torsion and squared speed of a curve. `tau` is `None`
/// exactly when the curve is a straight line (`x' x x''` vanishes
/// identically), where torsion is undefined.
#[derive(Clone, Debug)]
pub struct CurveInvariants {
    /// kappa^2 = |x' x x''|^2 / |x'|^6
    pub kappa2: RatX,
    /// tau = <x' x x'', x'''> / |x' x x''|^2
    pub tau: Option<RatX>,
    /// |x'|^2
    pub speed2: RatX,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegeneracyKind {
    NonDegenerate,
    Line,
    Circle,
    Planar,
}

/// Derivative data of one component `n/d` with integer coefficients:
/// x' = p/d^2, x'' = q/d^3, x''' = r/d^4.
struct CompDerivs {
    d: exact_algebra::UniPoly,
    p: exact_algebra::UniPoly,
    q: exact_algebra::UniPoly,
    r: exact_algebra::UniPoly,
}

fn comp_derivs(f: &RatX) -> CompDerivs {
    // equal-value fraction with integer coefficients
    let (nc, nscale) = f.num().to_int_primitive();
    let (dc, dscale) = f.den().to_int_primitive();
    let scale = nscale / dscale;
    use exact_algebra::Poly;
    let n = Poly::from_int_coeffs(nc.iter().map(|c| c * scale.numer()).collect());
    let d = if dc.is_empty() {
        Poly::one()
    } else {
        Poly::from_int_coeffs(dc.iter().map(|c| c * scale.denom()).collect())
    };
    let dp = d.derivative();
    let p = n.derivative().mul(&d).sub(&n.mul(&dp));
    let q = p.derivative().mul(&d).sub(&p.mul(&dp).scale(&exact_algebra::rat_int(2)));
    let r = q.derivative().mul(&d).sub(&q.mul(&dp).scale(&exact_algebra::rat_int(3)));
    CompDerivs { d, p, q, r }
}

// The invariants are assembled with plain polynomial arithmetic over
// explicit common denominators and reduced once at the end; reducing after
// every field operation is orders of magnitude slower.
pub fn invariants(c: &ParamCurve3) -> Result<CurveInvariants, CurveError> {
    use exact_algebra::{Poly, RatFunc, UniPoly};
    let cd: Vec<CompDerivs> = [&c.x, &c.y, &c.z].iter().map(|f| comp_derivs(f)).collect();
    let pow = |p: &UniPoly, k: usize| p.pow(k);
    let d_all = cd[0].d.mul(&cd[1].d).mul(&cd[2].d);

    // |x'|^2 = sum p_i^2 / d_i^4
    let mut speed_num = Poly::zero();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let term = pow(&cd[i].p, 2).mul(&pow(&cd[j].d, 4)).mul(&pow(&cd[k].d, 4));
        speed_num = speed_num.add(&term);
    }
    let speed2 = RatFunc::new(speed_num, pow(&d_all, 4));
    if speed2.is_zero() {
        return Err(CurveError::IllPosed);
    }

    // cross product entries: (x' x x'')_i = e_i / (d_j d_k)^3 with
    // e_i = p_j q_k d_j - p_k q_j d_k
    let e: Vec<UniPoly> = (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            cd[j]
                .p
                .mul(&cd[k].q)
                .mul(&cd[j].d)
                .sub(&cd[k].p.mul(&cd[j].q).mul(&cd[k].d))
        })
        .collect();

    // |x' x x''|^2 = sum e_i^2 d_i^6 / (d1 d2 d3)^6
    let mut n2_num = Poly::zero();
    for i in 0..3 {
        n2_num = n2_num.add(&pow(&e[i], 2).mul(&pow(&cd[i].d, 6)));
    }
    let n2 = RatFunc::new(n2_num, pow(&d_all, 6));

    let kappa2 = n2.div(&speed2.mul(&speed2).mul(&speed2));
    let tau = if n2.is_zero() {
        None
    } else {
        // <x' x x'', x'''> = sum e_i r_i d_i^3 (d_j d_k)^4 / (d1 d2 d3)^7
        let mut dot_num = Poly::zero();
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let term = e[i]
                .mul(&cd[i].r)
                .mul(&pow(&cd[i].d, 3))
                .mul(&pow(&cd[j].d, 4))
                .mul(&pow(&cd[k].d, 4));
            dot_num = dot_num.add(&term);
        }
        let dot = RatFunc::new(dot_num, pow(&d_all, 7));
        Some(dot.div(&n2))
    };
    Ok(CurveInvariants { kappa2, tau, speed2 })
}

pub fn degeneracy(inv: &CurveInvariants) -> DegeneracyKind {
    if inv.kappa2.is_zero() || inv.tau.is_none() {
        return DegeneracyKind::Line;
    }
    let tau = inv.tau.as_ref().unwrap();
    if tau.is_zero() {
        if inv.kappa2.is_constant() {
            DegeneracyKind::Circle
        } else {
            DegeneracyKind::Planar
        }
    } else {
        DegeneracyKind::NonDegenerate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::{rat_int, Poly, RatFunc};

    fn poly_curve(x: &[i64], y: &[i64], z: &[i64]) -> ParamCurve3 {
        ParamCurve3::new(
            RatFunc::from_poly(Poly::from_ints(x)),
            RatFunc::from_poly(Poly::from_ints(y)),
            RatFunc::from_poly(Poly::from_ints(z)),
        )
    }

    #[test]
    fn twisted_cubic_invariants() {
        let c = poly_curve(&[0, 1], &[0, 0, 1], &[0, 0, 0, 1]);
        let inv = invariants(&c).unwrap();
        // kappa^2 = 4(9t^4+9t^2+1)/(9t^4+4t^2+1)^3, tau = 3/(9t^4+9t^2+1)
        let k_expect = RatFunc::new(
            Poly::from_ints(&[4, 0, 36, 0, 36]),
            Poly::from_ints(&[1, 0, 4, 0, 9]).pow(3),
        );
        let t_expect = RatFunc::new(Poly::from_ints(&[3]), Poly::from_ints(&[1, 0, 9, 0, 9]));
        assert_eq!(inv.kappa2, k_expect);
        assert_eq!(inv.tau.as_ref().unwrap(), &t_expect);
        assert_eq!(
            inv.speed2,
            RatFunc::from_poly(Poly::from_ints(&[1, 0, 4, 0, 9]))
        );
        assert_eq!(degeneracy(&inv), DegeneracyKind::NonDegenerate);
    }

    #[test]
    fn straight_line() {
        let c = poly_curve(&[0, 1], &[0, 2], &[0, 3]);
        let inv = invariants(&c).unwrap();
        assert!(inv.kappa2.is_zero());
        assert!(inv.tau.is_none());
        assert_eq!(degeneracy(&inv), DegeneracyKind::Line);
    }

    #[test]
    fn unit_circle() {
        // ((1-t^2)/(1+t^2), 2t/(1+t^2), 0)
        let den = Poly::from_ints(&[1, 0, 1]);
        let c = ParamCurve3::new(
            RatFunc::new(Poly::from_ints(&[1, 0, -1]), den.clone()),
            RatFunc::new(Poly::from_ints(&[0, 2]), den),
            RatFunc::from_poly(Poly::zero()),
        );
        let inv = invariants(&c).unwrap();
        assert_eq!(inv.kappa2, RatFunc::constant(rat_int(1)));
        assert!(inv.tau.as_ref().unwrap().is_zero());
        assert_eq!(degeneracy(&inv), DegeneracyKind::Circle);
    }

    #[test]
    fn planar_parabola() {
        let c = poly_curve(&[0, 1], &[0, 0, 1], &[0]);
        let inv = invariants(&c).unwrap();
        assert!(!inv.kappa2.is_constant());
        assert!(inv.tau.as_ref().unwrap().is_zero());
        assert_eq!(degeneracy(&inv), DegeneracyKind::Planar);
    }

    #[test]
    fn constant_curve_rejected() {
        let c = poly_curve(&[1], &[2], &[3]);
        assert!(matches!(invariants(&c), Err(CurveError::IllPosed)));
    }

    #[test]
    fn speed2_nonnegative_at_samples() {
        let c = crate::corpus::crunode();
        let inv = invariants(&c).unwrap();
        for k in -6i64..=6 {
            let t = rat_int(k);
            if let Some(v) = inv.speed2.eval(&t) {
                assert!(v >= rat_int(0));
            }
        }
    }
}
