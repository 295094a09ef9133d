//! From an admitted Möbius transformation to the explicit isometry.
//!
//! If `Q x(t) + b = x(φ(t))` with `φ = (at+b)/(ct+d)`, differentiating and
//! evaluating at t = 0 expresses Q as `C·B⁻¹`, where
//! `B = [x′(0), x″(0), x′(0)×x″(0)]` and C collects the corresponding data
//! of the reparametrized curve at the image point. The translation part
//! follows from the identity at t = 0. A parameter shift `t -> t + α` is
//! applied first when 0 is a pole or an inflection of the parametrization;
//! the Möbius transformation is conjugated by the same shift and the
//! resulting (Q, b) — which do not depend on the parametrization — are
//! reported against the original parameter.
//!
//! Every reconstructed isometry is verified exactly (orthogonality,
//! determinant, and the defining identity as rational functions) before it
//! is returned, then classified by its fixed-point set.

use crate::detect::MobiusCandidate;
use crate::SymmetryError;
use curve_invariants::ParamCurve3;
use exact_algebra::linalg::{solve_affine, AffineSolution, Matrix3, Vector3};
use exact_algebra::{compose_frac, rat_int, Field, FieldElem, Poly, Rat, RatX};

/// An isometry of space, `x -> Qx + b`, with entries in the real algebraic
/// field of the originating Möbius candidate.
#[derive(Debug, Clone)]
pub struct Isometry {
    pub q: Matrix3<FieldElem>,
    pub b: Vector3<FieldElem>,
    pub det_sign: i32,
}

/// The frame matrices the reconstruction solved with: `q = c_mat · b_mat⁻¹`.
#[derive(Debug, Clone)]
pub struct FrameMatrices {
    pub b_mat: Matrix3<FieldElem>,
    pub c_mat: Matrix3<FieldElem>,
}

#[derive(Debug, Clone)]
pub enum FixedSet {
    Empty,
    Point(Vector3<FieldElem>),
    Line {
        point: Vector3<FieldElem>,
        direction: Vector3<FieldElem>,
    },
    Plane {
        normal: Vector3<FieldElem>,
        offset: FieldElem,
    },
    AllSpace,
}

#[derive(Debug, Clone)]
pub enum SymmetryKind {
    Identity,
    /// Rotation about an axis by the angle with the given exact cosine.
    Rotation { cos_theta: FieldElem },
    /// Rotation by π about an axis.
    HalfTurn,
    MirrorPlane,
    CentralInversion,
    /// Rotation composed with a reflection in the plane orthogonal to the
    /// axis.
    RotatoryReflection,
}

#[derive(Debug, Clone)]
pub struct SymmetryRecord {
    pub mobius: MobiusCandidate,
    pub isometry: Isometry,
    pub frame: FrameMatrices,
    pub kind: SymmetryKind,
    pub fixed: FixedSet,
}

fn fe(r: Rat) -> FieldElem {
    FieldElem::rational(r)
}

fn fe_int(n: i64) -> FieldElem {
    fe(rat_int(n))
}

fn embed(c: &Rat) -> FieldElem {
    FieldElem::rational(c.clone())
}

/// Evaluates a rational function with rational coefficients at an algebraic
/// point; `None` at a pole.
fn eval_rf(f: &RatX, x: &FieldElem) -> Option<FieldElem> {
    let den = f.den().eval_in(x, embed);
    if den.is_zero() {
        return None;
    }
    Some(f.num().eval_in(x, embed).div(&den))
}

fn eval_vec(v: &Vector3<RatX>, x: &FieldElem) -> Option<Vector3<FieldElem>> {
    Some(Vector3::new(
        eval_rf(&v.x, x)?,
        eval_rf(&v.y, x)?,
        eval_rf(&v.z, x)?,
    ))
}

fn mat_eq(a: &Matrix3<FieldElem>, b: &Matrix3<FieldElem>) -> bool {
    a.sub(b).m.iter().all(|row| row.iter().all(|e| e.is_zero()))
}

/// The frame `B = [x′(0), x″(0), x′(0)×x″(0)]` after the smallest parameter
/// shift making it well defined and invertible. Returns the shifted curve,
/// the shift, and B with rational entries.
pub fn prepare_frame(c: &ParamCurve3) -> (ParamCurve3, Rat, Matrix3<Rat>) {
    let (shifted, alpha) = curve_invariants::find_regular_shift(c);
    let zero = rat_int(0);
    let ev = |v: &Vector3<RatX>| -> Vector3<Rat> {
        Vector3::new(
            v.x.eval(&zero).unwrap(),
            v.y.eval(&zero).unwrap(),
            v.z.eval(&zero).unwrap(),
        )
    };
    let xp = ev(&shifted.derivatives(1));
    let xpp = ev(&shifted.derivatives(2));
    let cross = xp.cross(&xpp);
    (shifted, alpha, Matrix3::from_columns(&xp, &xpp, &cross))
}

/// One reconstruction attempt at a fixed parameter shift α. Returns the
/// isometry and the frame matrices, or `None` when some required value is
/// undefined at this shift.
fn reconstruct_at(
    c: &ParamCurve3,
    cand: &MobiusCandidate,
    alpha: &Rat,
) -> Option<(Isometry, FrameMatrices)> {
    let shifted = c.shift_parameter(alpha);
    // rational frame at t = 0
    let zero = rat_int(0);
    let x0 = shifted.eval(&zero)?;
    let d1 = shifted.derivatives(1);
    let d2 = shifted.derivatives(2);
    let ev0 = |v: &Vector3<RatX>| -> Option<Vector3<Rat>> {
        Some(Vector3::new(
            v.x.eval(&zero)?,
            v.y.eval(&zero)?,
            v.z.eval(&zero)?,
        ))
    };
    let xp0 = ev0(&d1)?;
    let xpp0 = ev0(&d2)?;
    let cross0 = xp0.cross(&xpp0);
    if cross0.is_zero() {
        return None;
    }
    let b_mat = Matrix3::from_columns(&xp0, &xpp0, &cross0).map(embed);
    let b_inv = b_mat.inverse().expect("B is invertible when x′(0)×x″(0) ≠ 0");

    // conjugate the Möbius transformation by the shift:
    // φ_α(t) = φ(t+α) − α, with coefficients still in ℚ(ξ)
    let af = fe(alpha.clone());
    let na = cand.a.sub(&cand.c.mul(&af));
    let nd = cand.c.mul(&af).add(&cand.d);
    let nb = cand.a.mul(&af).add(&cand.b).sub(&af.mul(&nd));
    let nc = cand.c.clone();

    let det_fe = fe_int(cand.det_sign as i64);
    let (c_mat, image0) = if !nd.is_zero() {
        // d ≠ 0 after the shift: normalize d = 1 and evaluate at the image
        // of 0, which is the coefficient b
        let inv = nd.inv();
        let (a, b, cc) = (na.mul(&inv), nb.mul(&inv), nc.mul(&inv));
        let delta = a.sub(&b.mul(&cc));
        let p = b.clone();
        let xp = eval_vec(&d1, &p)?;
        let xpp = eval_vec(&d2, &p)?;
        let x_at = eval_vec(&shifted.components(), &p)?;
        let delta2 = delta.mul(&delta);
        let delta3 = delta2.mul(&delta);
        let col1 = xp.scale(&delta);
        let col2 = xpp
            .scale(&delta2)
            .sub(&xp.scale(&fe_int(2).mul(&cc).mul(&delta)));
        let col3 = xp.cross(&xpp).scale(&det_fe.mul(&delta3));
        (Matrix3::from_columns(&col1, &col2, &col3), x_at)
    } else {
        // d = 0 after the shift: with φ_α = (at+b)/(ct), substitute
        // t -> 1/t, so x̃(t) = x(1/t) and the image of 0 is b/c under x̃
        // after swapping the roles of the coefficients
        let inv = nc.inv();
        let a_tilde = nb.mul(&inv);
        let b_tilde = na.mul(&inv);
        let inv_t = exact_algebra::RatFunc::new(Poly::from_ints(&[1]), Poly::from_ints(&[0, 1]));
        let xt = ParamCurve3::from_components(shifted.components().map(|f| f.compose(&inv_t)));
        let xt1 = xt.derivatives(1);
        let xt2 = xt.derivatives(2);
        let xp = eval_vec(&xt1, &b_tilde)?;
        let xpp = eval_vec(&xt2, &b_tilde)?;
        let x_at = eval_vec(&xt.components(), &b_tilde)?;
        let a2 = a_tilde.mul(&a_tilde);
        let a3 = a2.mul(&a_tilde);
        let col1 = xp.scale(&a_tilde);
        let col2 = xpp.scale(&a2);
        let col3 = xp.cross(&xpp).scale(&det_fe.mul(&a3));
        (Matrix3::from_columns(&col1, &col2, &col3), x_at)
    };
    let q = c_mat.mul(&b_inv);
    let bvec = image0.sub(&q.mul_vec(&x0.map(embed)));
    Some((
        Isometry {
            q,
            b: bvec,
            det_sign: cand.det_sign,
        },
        FrameMatrices { b_mat, c_mat },
    ))
}

/// Checks `Q x(t) + b = x(φ(t))` as an identity of rational functions, by
/// cross-multiplying so that no reduction (hence no gcd over ℚ(ξ)) is
/// needed.
pub fn verify_parametric_identity(
    c: &ParamCurve3,
    cand: &MobiusCandidate,
    q: &Matrix3<FieldElem>,
    b: &Vector3<FieldElem>,
) -> bool {
    let comps = c.components();
    let nums: Vec<Poly<FieldElem>> = comps.as_array().iter().map(|f| f.num().map(embed)).collect();
    let dens: Vec<Poly<FieldElem>> = comps.as_array().iter().map(|f| f.den().map(embed)).collect();
    let qp = Poly::new(vec![cand.b.clone(), cand.a.clone()]);
    let rp = Poly::new(vec![cand.d.clone(), cand.c.clone()]);
    let big_d = dens[0].mul(&dens[1]).mul(&dens[2]);
    for i in 0..3 {
        let e = comps.as_array()[i]
            .num()
            .deg()
            .max(comps.as_array()[i].den().deg())
            .max(0) as usize;
        let cn = compose_frac(&nums[i], &qp, &rp, e);
        let cd = compose_frac(&dens[i], &qp, &rp, e);
        // LHS_i over the common denominator d1·d2·d3
        let mut lhs = big_d.scale(b.as_array()[i]);
        for j in 0..3 {
            let other = dens[(j + 1) % 3].mul(&dens[(j + 2) % 3]);
            lhs = lhs.add(&nums[j].mul(&other).scale(&q.m[i][j]));
        }
        // Q_i·x + b_i = cn/cd  ⟺  lhs·cd = d1d2d3·cn
        if !lhs.mul(&cd).sub(&big_d.mul(&cn)).is_zero() {
            return false;
        }
    }
    true
}

/// Fixed points of the isometry: the solution set of `(Q − I) p = −b`.
pub fn fixed_points(iso: &Isometry) -> FixedSet {
    let m = iso.q.sub(&Matrix3::identity());
    match solve_affine(&m, &iso.b.neg()) {
        AffineSolution::Empty => FixedSet::Empty,
        AffineSolution::Flat { point, directions } => match directions.len() {
            0 => FixedSet::Point(point),
            1 => FixedSet::Line {
                point,
                direction: directions.into_iter().next().unwrap(),
            },
            2 => {
                let normal = directions[0].cross(&directions[1]);
                let offset = normal.dot(&point);
                FixedSet::Plane { normal, offset }
            }
            _ => FixedSet::AllSpace,
        },
    }
}

/// Classification by determinant sign, trace, and fixed set.
pub fn classify(iso: &Isometry, fixed: &FixedSet) -> SymmetryKind {
    let tr = iso.q.trace();
    if iso.det_sign == 1 {
        if mat_eq(&iso.q, &Matrix3::identity()) && iso.b.is_zero() {
            return SymmetryKind::Identity;
        }
        if tr.add(&fe_int(1)).is_zero() {
            return SymmetryKind::HalfTurn;
        }
        // cos θ = (trace − 1)/2, exactly
        let cos_theta = tr.sub(&fe_int(1)).mul(&fe(exact_algebra::rat(1, 2)));
        SymmetryKind::Rotation { cos_theta }
    } else {
        if mat_eq(&iso.q, &Matrix3::identity().neg()) {
            return SymmetryKind::CentralInversion;
        }
        if matches!(fixed, FixedSet::Plane { .. }) || tr.sub(&fe_int(1)).is_zero() {
            return SymmetryKind::MirrorPlane;
        }
        SymmetryKind::RotatoryReflection
    }
}

/// Full reconstruction of one accepted candidate: find an admissible
/// parameter shift, solve for (Q, b), verify exactly, and classify.
pub fn reconstruct(
    c: &ParamCurve3,
    cand: &MobiusCandidate,
) -> Result<SymmetryRecord, SymmetryError> {
    let mut found = None;
    let mut k: i64 = 0;
    'search: while k <= 1000 {
        for alpha_i in if k == 0 { vec![0] } else { vec![k, -k] } {
            let alpha = rat_int(alpha_i);
            if let Some(r) = reconstruct_at(c, cand, &alpha) {
                found = Some(r);
                break 'search;
            }
        }
        k += 1;
    }
    let (iso, frame) = found.ok_or_else(|| {
        SymmetryError::Internal("no admissible parameter shift for reconstruction".into())
    })?;
    // exact verification: orthogonality, determinant, defining identity
    if !mat_eq(&iso.q.transpose().mul(&iso.q), &Matrix3::identity()) {
        return Err(SymmetryError::Internal(
            "reconstructed matrix is not orthogonal".into(),
        ));
    }
    if !iso.q.det().sub(&fe_int(cand.det_sign as i64)).is_zero() {
        return Err(SymmetryError::Internal(
            "reconstructed matrix has the wrong determinant".into(),
        ));
    }
    if !verify_parametric_identity(c, cand, &iso.q, &iso.b) {
        return Err(SymmetryError::Internal(
            "reconstructed isometry does not satisfy the defining identity".into(),
        ));
    }
    let fixed = fixed_points(&iso);
    if matches!(fixed, FixedSet::Empty) {
        return Err(SymmetryError::Internal(
            "fixed-point-free isometry cannot be a curve symmetry".into(),
        ));
    }
    let kind = classify(&iso, &fixed);
    Ok(SymmetryRecord {
        mobius: cand.clone(),
        isometry: iso,
        frame,
        kind,
        fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{symm, symm_both, Branch};
    use curve_invariants::{crunode, daisy, twisted_cubic};
    use exact_algebra::rat;

    fn fe_mat(entries: [[i64; 3]; 3]) -> Matrix3<FieldElem> {
        Matrix3::new(entries.map(|row| row.map(fe_int)))
    }

    fn rat_mat(entries: [[i64; 3]; 3]) -> Matrix3<Rat> {
        Matrix3::new(entries.map(|row| row.map(rat_int)))
    }

    fn vec_parallel(a: &Vector3<FieldElem>, b: &Vector3<FieldElem>) -> bool {
        a.cross(b).is_zero() && !a.is_zero() && !b.is_zero()
    }

    #[test]
    fn crunode_frame_matrix() {
        let (_, alpha, b) = prepare_frame(&crunode());
        assert_eq!(alpha, rat_int(0));
        assert_eq!(b, rat_mat([[1, 0, 0], [0, 2, 0], [0, 0, 2]]));
    }

    #[test]
    fn daisy_frame_matrix() {
        let (_, alpha, b) = prepare_frame(&daisy(1));
        assert_eq!(alpha, rat_int(0));
        assert_eq!(b, rat_mat([[0, -20, 0], [2, 0, 0], [0, 0, 40]]));
    }

    #[test]
    fn crunode_direct_records() {
        let c = crunode();
        let plus = symm(&c, 1).unwrap();
        assert_eq!(plus.count, 2);
        let records: Vec<_> = plus
            .candidates
            .iter()
            .map(|cand| reconstruct(&c, cand).unwrap())
            .collect();
        let ident = records
            .iter()
            .find(|r| matches!(r.kind, SymmetryKind::Identity))
            .unwrap();
        assert!(mat_eq(&ident.isometry.q, &Matrix3::identity()));
        assert!(ident.isometry.b.is_zero());
        assert!(matches!(ident.fixed, FixedSet::AllSpace));
        let half = records
            .iter()
            .find(|r| matches!(r.kind, SymmetryKind::HalfTurn))
            .unwrap();
        assert!(mat_eq(
            &half.isometry.q,
            &fe_mat([[-1, 0, 0], [0, 1, 0], [0, 0, -1]])
        ));
        assert!(half.isometry.b.is_zero());
        // the half-turn axis is the y-axis
        match &half.fixed {
            FixedSet::Line { point, direction } => {
                assert!(point.is_zero());
                assert!(vec_parallel(
                    direction,
                    &Vector3::new(fe_int(0), fe_int(1), fe_int(0))
                ));
            }
            other => panic!("expected a line of fixed points, got {:?}", other),
        }
    }

    #[test]
    fn crunode_mirror_records() {
        let c = crunode();
        let minus = symm(&c, -1).unwrap();
        assert_eq!(minus.count, 2);
        for cand in &minus.candidates {
            let rec = reconstruct(&c, cand).unwrap();
            assert!(matches!(rec.kind, SymmetryKind::MirrorPlane));
            assert!(rec.isometry.b.is_zero());
            // candidate with b = +1 is φ(t) = 1/t, mirror in z − x = 0;
            // b = −1 is φ(t) = −1/t, mirror in z + x = 0
            let positive = cand.b.sub(&fe_int(1)).is_zero();
            let expect_q = if positive {
                fe_mat([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
            } else {
                fe_mat([[0, 0, -1], [0, 1, 0], [-1, 0, 0]])
            };
            assert!(mat_eq(&rec.isometry.q, &expect_q));
            let expect_normal = if positive {
                Vector3::new(fe_int(-1), fe_int(0), fe_int(1))
            } else {
                Vector3::new(fe_int(1), fe_int(0), fe_int(1))
            };
            match &rec.fixed {
                FixedSet::Plane { normal, offset } => {
                    assert!(vec_parallel(normal, &expect_normal));
                    assert!(offset.is_zero());
                }
                other => panic!("expected a fixed plane, got {:?}", other),
            }
        }
    }

    #[test]
    fn daisy_records() {
        let c = daisy(1);
        let (plus, minus) = symm_both(&c).unwrap();
        // direct: identity and the half-turn about the y-axis via φ(t)=1/t
        let inv_t = plus.candidates.iter().find(|c| !c.is_identity()).unwrap();
        assert_eq!(inv_t.branch, Branch::D0);
        let rec = reconstruct(&c, inv_t).unwrap();
        assert!(matches!(rec.kind, SymmetryKind::HalfTurn));
        assert!(mat_eq(
            &rec.isometry.q,
            &fe_mat([[-1, 0, 0], [0, 1, 0], [0, 0, -1]])
        ));
        assert!(rec.isometry.b.is_zero());
        // the frame matrices match the known values
        assert!(mat_eq(
            &rec.frame.b_mat,
            &fe_mat([[0, -20, 0], [2, 0, 0], [0, 0, 40]])
        ));
        assert!(mat_eq(
            &rec.frame.c_mat,
            &fe_mat([[0, 20, 0], [2, 0, 0], [0, 0, -40]])
        ));
        // opposite: a mirror in y = 0 and the central inversion about the
        // origin
        assert_eq!(minus.count, 2);
        let recs: Vec<_> = minus
            .candidates
            .iter()
            .map(|cand| reconstruct(&c, cand).unwrap())
            .collect();
        let mirror = recs
            .iter()
            .find(|r| matches!(r.kind, SymmetryKind::MirrorPlane))
            .unwrap();
        match &mirror.fixed {
            FixedSet::Plane { normal, offset } => {
                assert!(vec_parallel(
                    normal,
                    &Vector3::new(fe_int(0), fe_int(1), fe_int(0))
                ));
                assert!(offset.is_zero());
            }
            other => panic!("expected the plane y = 0, got {:?}", other),
        }
        let inversion = recs
            .iter()
            .find(|r| matches!(r.kind, SymmetryKind::CentralInversion))
            .unwrap();
        match &inversion.fixed {
            FixedSet::Point(p) => assert!(p.is_zero()),
            other => panic!("expected the origin as fixed point, got {:?}", other),
        }
    }

    #[test]
    fn twisted_cubic_half_turn() {
        let c = twisted_cubic();
        let plus = symm(&c, 1).unwrap();
        let half = plus.candidates.iter().find(|c| !c.is_identity()).unwrap();
        let rec = reconstruct(&c, half).unwrap();
        assert!(matches!(rec.kind, SymmetryKind::HalfTurn));
        assert!(mat_eq(
            &rec.isometry.q,
            &fe_mat([[-1, 0, 0], [0, 1, 0], [0, 0, -1]])
        ));
    }

    #[test]
    fn forced_wrong_sign_fails_verification() {
        let c = crunode();
        let plus = symm(&c, 1).unwrap();
        let half = plus.candidates.iter().find(|c| !c.is_identity()).unwrap();
        let mut wrong = half.clone();
        wrong.det_sign = -1;
        assert!(reconstruct(&c, &wrong).is_err());
    }

    #[test]
    fn fixed_points_satisfy_equation() {
        let c = crunode();
        let (plus, minus) = symm_both(&c).unwrap();
        for cand in plus.candidates.iter().chain(minus.candidates.iter()) {
            let rec = reconstruct(&c, cand).unwrap();
            let iso = &rec.isometry;
            let check = |p: &Vector3<FieldElem>| {
                let image = iso.q.mul_vec(p).add(&iso.b);
                assert!(image.sub(p).is_zero());
            };
            match &rec.fixed {
                FixedSet::Empty => panic!("curve symmetries always have fixed points"),
                FixedSet::Point(p) => check(p),
                FixedSet::Line { point, direction } => {
                    check(point);
                    check(&point.add(direction));
                }
                FixedSet::Plane { normal, offset } => {
                    // any point with normal·p = offset is fixed; build two
                    let p0 = normal.scale(&offset.div(&normal.dot(normal)));
                    check(&p0);
                }
                FixedSet::AllSpace => {
                    check(&Vector3::new(fe_int(1), fe_int(2), fe_int(3)));
                }
            }
        }
    }

    #[test]
    fn cross_product_transformation_identity() {
        // (Ma)×(Mb) = det(M)·M⁻ᵀ·(a×b) for invertible M
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let m = Matrix3::new(std::array::from_fn(|_| {
                std::array::from_fn(|_| rat(rng.gen_range(-5..=5), 1 + rng.gen_range(0..3)))
            }));
            let Some(m_inv) = m.inverse() else { continue };
            let a = Vector3::new(
                rat(rng.gen_range(-5..=5), 1),
                rat(rng.gen_range(-5..=5), 1),
                rat(rng.gen_range(-5..=5), 1),
            );
            let b = Vector3::new(
                rat(rng.gen_range(-5..=5), 1),
                rat(rng.gen_range(-5..=5), 1),
                rat(rng.gen_range(-5..=5), 1),
            );
            let lhs = m.mul_vec(&a).cross(&m.mul_vec(&b));
            let rhs = m_inv.transpose().mul_vec(&a.cross(&b)).scale(&m.det());
            assert!(lhs.sub(&rhs).is_zero());
        }
    }
}
