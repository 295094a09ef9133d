//! The curve data model: three reduced rational functions of a common
//! parameter. The parametrization is assumed proper (injective for almost
//! all parameter values); this is an input contract and is not verified.
//! On non-proper input the detected symmetry set may be too large.

use exact_algebra::linalg::Vector3;
use exact_algebra::{Rat, RatX};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct ParamCurve3 {
    pub x: RatX,
    pub y: RatX,
    pub z: RatX,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurveError {
    /// The first derivative vanishes identically.
    IllPosed,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::IllPosed => write!(f, "constant or ill-posed parametrization"),
        }
    }
}

impl std::error::Error for CurveError {}

impl ParamCurve3 {
    pub fn new(x: RatX, y: RatX, z: RatX) -> Self {
        ParamCurve3 { x, y, z }
    }

    pub fn components(&self) -> Vector3<RatX> {
        Vector3::new(self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn from_components(v: Vector3<RatX>) -> Self {
        ParamCurve3::new(v.x, v.y, v.z)
    }

    /// Maximal degree over all numerators and denominators.
    pub fn degree(&self) -> usize {
        [&self.x, &self.y, &self.z]
            .iter()
            .map(|c| c.num().deg().max(c.den().deg()).max(0) as usize)
            .max()
            .unwrap()
    }

    /// Componentwise derivative of the given order (1, 2 or 3).
    pub fn derivatives(&self, order: u32) -> Vector3<RatX> {
        assert!((1..=3).contains(&order), "order must be 1, 2 or 3");
        let mut v = self.components();
        for _ in 0..order {
            v = v.map(|c| c.derivative());
        }
        v
    }

    /// Point at a rational parameter value; `None` at a pole of any
    /// component.
    pub fn eval(&self, t: &Rat) -> Option<Vector3<Rat>> {
        Some(Vector3::new(
            self.x.eval(t)?,
            self.y.eval(t)?,
            self.z.eval(t)?,
        ))
    }

    /// Reparametrization by a rational function of the parameter.
    pub fn compose(&self, phi: &RatX) -> Self {
        ParamCurve3::from_components(self.components().map(|c| c.compose(phi)))
    }

    /// The curve `t -> x(t + alpha)`.
    pub fn shift_parameter(&self, alpha: &Rat) -> Self {
        ParamCurve3::from_components(self.components().map(|c| c.shift(alpha)))
    }

    /// The curve `t -> Q x(t) + b` for a constant matrix and vector.
    pub fn transform(
        &self,
        q: &exact_algebra::linalg::Matrix3<Rat>,
        b: &Vector3<Rat>,
    ) -> Self {
        let qr = q.map(|e| RatX::constant(e.clone()));
        let br = b.map(|e| RatX::constant(e.clone()));
        ParamCurve3::from_components(qr.mul_vec(&self.components()).add(&br))
    }
}

/// Smallest-magnitude integer shift `alpha` (0, 1, -1, 2, -2, ...) such that
/// the shifted curve has `x(0)`, `x'(0)`, `x''(0)` defined and
/// `x'(0) x x''(0)` nonzero. Returns the shifted curve and the shift.
pub fn find_regular_shift(c: &ParamCurve3) -> (ParamCurve3, Rat) {
    let d1 = c.derivatives(1);
    let d2 = c.derivatives(2);
    let cross_ok = |xp: &Vector3<Rat>, xpp: &Vector3<Rat>| !xp.cross(xpp).is_zero();
    let mut k: i64 = 0;
    loop {
        for alpha in if k == 0 { vec![0] } else { vec![k, -k] } {
            let a = Rat::from_integer(alpha.into());
            let ok = c.eval(&a).is_some()
                && match (eval_vec(&d1, &a), eval_vec(&d2, &a)) {
                    (Some(xp), Some(xpp)) => cross_ok(&xp, &xpp),
                    _ => false,
                };
            if ok {
                return (c.shift_parameter(&a), a);
            }
        }
        k += 1;
        assert!(k < 10_000, "no regular parameter value found");
    }
}

fn eval_vec(v: &Vector3<RatX>, t: &Rat) -> Option<Vector3<Rat>> {
    Some(Vector3::new(v.x.eval(t)?, v.y.eval(t)?, v.z.eval(t)?))
}
