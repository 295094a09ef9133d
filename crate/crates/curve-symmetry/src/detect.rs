//! Finding all Möbius changes of parameter compatible with a symmetry.
//!
//! If `x -> Qx + b` maps the curve onto itself with Möbius parameter change
//! `s = φ(t) = (at+b)/(ct+d)`, then the squared curvature satisfies
//! `κ²(t) = κ²(s)` and the torsion `τ(t) = ±τ(s)` (sign +1 for direct, −1
//! for opposite isometries). Clearing denominators with `κ² = A/B` and
//! `τ = C/D` gives the bivariate matching polynomials
//!
//!   K(t,s)  = A(t)B(s) − A(s)B(t)
//!   T±(t,s) = C(t)D(s) ∓ C(s)D(t)
//!
//! and the graph of every admissible φ lies inside the zero set of
//! G± = gcd(K, T±). Each graph is the zero set of a "Möbius-like" factor
//! F(t,s) = (ct+d)s − (at+b). Rather than factoring G over the reals, we
//! pick a vertical probe line t = t₀ crossing the zero set transversally,
//! name the intersection ordinate ξ, and recover candidate coefficients
//! a, b, c (with d = 1 or (c,d) = (1,0)) as rational expressions in ξ from
//! the first two implicit derivatives of G along its zero set. Substituting
//! F back into G and collecting the conditions produces a univariate
//! polynomial R_d(ξ) whose real roots are the candidates. A final
//! arc-length compatibility filter (equal speed before and after the
//! reparametrization) removes spurious roots.

use crate::SymmetryError;
use curve_invariants::{degeneracy, invariants, CurveInvariants, DegeneracyKind, ParamCurve3};
use exact_algebra::{
    compose_frac, factor_rationals, field_eval, isolate_real_roots, poly_gcd_bi, rat_int,
    resultant_mobius, AlgebraicNumber, BiPoly, Field, FieldElem, Poly, Rat, RatFunc, RatX,
    UniPoly,
};
use std::sync::Arc;

/// The bivariate matching polynomials of a non-degenerate curve.
#[derive(Debug, Clone)]
pub struct SymmetryEquations {
    pub k: BiPoly,
    pub tplus: BiPoly,
    pub tminus: BiPoly,
    pub gplus: BiPoly,
    pub gminus: BiPoly,
}

/// A probe line `t = t0` crossing the zero set of G transversally: the
/// section `g(ξ) = G(t0, ξ)` is squarefree of full degree, so the partial
/// derivative G_s does not vanish at any intersection point.
#[derive(Debug, Clone)]
pub struct ProbeLine {
    pub t0: Rat,
    pub g: UniPoly,
    pub attempts: usize,
}

/// First and second derivative of the implicit function s(t) defined by
/// `G(t, s(t)) = 0`, evaluated at `(t0, ξ)` with ξ left symbolic.
#[derive(Debug, Clone)]
pub struct ImplicitDerivs {
    pub s1: RatX,
    pub s2: RatX,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    /// d ≠ 0, normalized to d = 1.
    D1,
    /// d = 0, normalized to c = 1.
    D0,
}

/// Möbius coefficients as rational expressions in the symbolic ordinate ξ,
/// before any root of R_d is substituted.
#[derive(Debug, Clone)]
pub struct SymbolicMobius {
    pub a: RatX,
    pub b: RatX,
    pub c: RatX,
    pub d: RatX,
}

/// One admissible Möbius transformation `φ(t) = (at+b)/(ct+d)` with
/// coefficients in the real algebraic field ℚ(ξ).
#[derive(Debug, Clone)]
pub struct MobiusCandidate {
    pub xi: Arc<AlgebraicNumber>,
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
    pub branch: Branch,
    pub det_sign: i32,
}

impl MobiusCandidate {
    /// ad − bc, guaranteed nonzero.
    pub fn delta(&self) -> FieldElem {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn phi(&self) -> RatFunc<FieldElem> {
        RatFunc::new(
            Poly::new(vec![self.b.clone(), self.a.clone()]),
            Poly::new(vec![self.d.clone(), self.c.clone()]),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a.sub(&self.d).is_zero()
    }

    /// Renders `(at+b)/(ct+d)` with algebraic coefficients.
    pub fn phi_string(&self) -> String {
        self.phi().to_string_var("t")
    }
}

/// Equal-speed filter data for one (branch, sign) pipeline: the gcd of
/// R_d with the coefficients (in ξ) of the cleared-denominator difference
/// `‖x′(t)‖² − ‖(x∘φ_ξ)′(t)‖²`. A root ξ survives iff its minimal
/// polynomial divides the filtered gcd.
#[derive(Debug, Clone)]
pub struct SpeedWitness {
    pub r_filtered: UniPoly,
    pub w_degree: isize,
}

/// Builds K, T± and their gcds G± from the curve invariants. Refuses
/// degenerate curves (line / circle / planar), whose symmetry groups are
/// infinite or require plane-curve methods.
pub fn build_equations(inv: &CurveInvariants) -> Result<SymmetryEquations, SymmetryError> {
    match degeneracy(inv) {
        DegeneracyKind::NonDegenerate => {}
        k => return Err(SymmetryError::Degenerate(k)),
    }
    let a = inv.kappa2.num();
    let b = inv.kappa2.den();
    let tau = inv
        .tau
        .as_ref()
        .ok_or_else(|| SymmetryError::Internal("torsion missing on non-degenerate curve".into()))?;
    let c = tau.num();
    let d = tau.den();
    // computed up to nonzero rational factors, which neither the gcds nor
    // the symmetry structure of these polynomials depend on
    let k = BiPoly::outer_anti(a, b);
    let tplus = BiPoly::outer_anti(c, d);
    let tminus = BiPoly::outer_sym(c, d);
    let gcd_or = |p: &BiPoly, q: &BiPoly| -> Result<BiPoly, SymmetryError> {
        poly_gcd_bi(p, q)
            .map(|g| g.normalized())
            .map_err(|e| SymmetryError::Internal(format!("bivariate gcd failed: {:?}", e)))
    };
    Ok(SymmetryEquations {
        gplus: gcd_or(&k, &tplus)?,
        gminus: gcd_or(&k, &tminus)?,
        k,
        tplus,
        tminus,
    })
}

/// Removes the factors of G that do not involve s: a Möbius-like factor is
/// linear in s, so pure-t factors can never contain the graph of a
/// reparametrization.
pub fn strip_pure_t_factors(g: &BiPoly) -> BiPoly {
    let content = g.swap_vars().content_wrt_t();
    if content.is_constant() {
        return g.clone();
    }
    g.swap_vars()
        .exact_div_uni_s(&content)
        .expect("content divides")
        .swap_vars()
        .normalized()
}

/// Searches t0 = 0, 1, −1, 2, −2, ... for an admissible probe line:
/// `g = G(t0, ·)` must keep the full s-degree of G and be squarefree. At
/// most `(2·deg_s − 1)·deg_t + 1` abscissas can fail, so the search
/// terminates.
pub fn choose_probe(g: &BiPoly) -> ProbeLine {
    let ms = g.deg_s().expect("G must involve s") as isize;
    assert!(ms >= 1, "G must have positive s-degree");
    let mt = g.deg_t().unwrap_or(0) as usize;
    let bound = (2 * ms as usize - 1) * mt + 1;
    let mut attempts = 0usize;
    let mut k: i64 = 0;
    loop {
        for t0 in if k == 0 { vec![0] } else { vec![k, -k] } {
            attempts += 1;
            if let Some(mut p) = probe_at(g, t0) {
                debug_assert!(attempts <= bound, "probe search exceeded its bound");
                p.attempts = attempts;
                return p;
            }
        }
        k += 1;
        assert!(
            (k as usize) <= bound + 1,
            "probe search exceeded its bound"
        );
    }
}

/// Tests a single abscissa for admissibility: the section must keep the
/// full s-degree of G and be squarefree.
pub fn probe_at(g: &BiPoly, t0: i64) -> Option<ProbeLine> {
    let ms = g.deg_s().expect("G must involve s") as isize;
    let t0r = rat_int(t0);
    let section = g.eval_t(&t0r);
    if section.deg() != ms {
        return None;
    }
    let sq = <Rat as Field>::poly_gcd(&section, &section.derivative());
    if !sq.is_constant() {
        return None;
    }
    Some(ProbeLine {
        t0: t0r,
        g: int_normal(&section),
        attempts: 1,
    })
}

/// Positive-leading-coefficient primitive integer associate.
fn int_normal(p: &UniPoly) -> UniPoly {
    let (ints, _) = p.to_int_primitive();
    Poly::from_int_coeffs(ints)
}

/// Implicit differentiation of `G(t, s(t)) = 0` along the probe line:
/// `s′ = −G_t/G_s` and `s″ = −(G_tt + 2 G_ts s′ + G_ss s′²)/G_s`, all
/// evaluated at `(t0, ξ)` with ξ symbolic.
pub fn implicit_derivs(g: &BiPoly, p: &ProbeLine) -> ImplicitDerivs {
    let gt = g.partial_t();
    let gs = g.partial_s();
    let at = |b: &BiPoly| RatFunc::from_poly(b.eval_t(&p.t0));
    let gt0 = at(&gt);
    let gs0 = at(&gs);
    let gtt0 = at(&gt.partial_t());
    let gts0 = at(&gt.partial_s());
    let gss0 = at(&gs.partial_s());
    let s1 = gt0.div(&gs0).neg();
    let two = RatX::constant(rat_int(2));
    let s2 = gtt0
        .add(&two.mul(&gts0).mul(&s1))
        .add(&gss0.mul(&s1).mul(&s1))
        .div(&gs0)
        .neg();
    ImplicitDerivs { s1, s2 }
}

/// Möbius coefficients for the d ≠ 0 branch (d = 1). Returns `None` when
/// the defining denominator vanishes identically, in which case the branch
/// contributes no candidates.
pub fn mobius_symbolic_d1(p: &ProbeLine, derivs: &ImplicitDerivs) -> Option<SymbolicMobius> {
    let t0 = RatX::constant(p.t0.clone());
    let xi = RatX::x();
    let denom = derivs.s1.add(&derivs.s1).add(&t0.mul(&derivs.s2));
    if denom.is_zero() {
        return None;
    }
    let c = derivs.s2.div(&denom).neg();
    let a = derivs.s1.add(&c.mul(&xi.add(&t0.mul(&derivs.s1))));
    let b = a.mul(&t0).neg().add(&xi).add(&c.mul(&t0).mul(&xi));
    Some(SymbolicMobius {
        a,
        b,
        c,
        d: RatX::constant(rat_int(1)),
    })
}

/// Möbius coefficients for the d = 0 branch (c = 1).
pub fn mobius_symbolic_d0(p: &ProbeLine, derivs: &ImplicitDerivs) -> SymbolicMobius {
    let t0 = RatX::constant(p.t0.clone());
    let xi = RatX::x();
    let a = xi.add(&t0.mul(&derivs.s1));
    let b = a.mul(&t0).neg().add(&t0.mul(&xi));
    SymbolicMobius {
        a,
        b,
        c: RatX::constant(rat_int(1)),
        d: RatX::zero(),
    }
}

/// Substitutes `s = (aξ t + bξ)/(cξ t + dξ)` into G, clears denominators,
/// and intersects the resulting conditions on ξ with the probe section g:
/// `R = gcd(g, numerators of all t-coefficients)`. The real roots of R are
/// the candidate ordinates for this branch.
pub fn candidate_polynomial(g: &BiPoly, p: &ProbeLine, sym: &SymbolicMobius) -> UniPoly {
    let res: Poly<RatX> = resultant_mobius(g, &sym.a, &sym.b, &sym.c, &sym.d);
    let mut r = p.g.clone();
    for coeff in res.coeffs() {
        if r.is_constant() {
            break;
        }
        if coeff.is_zero() {
            continue;
        }
        r = <Rat as Field>::poly_gcd(&r, coeff.num());
    }
    int_normal(&r)
}

/// Turns the real roots of R into candidates: each root becomes an
/// algebraic number ξ, the coefficients a, b, c, d are evaluated in ℚ(ξ)
/// (roots where a denominator vanishes are not well defined and are
/// dropped), and the nondegeneracy ad − bc ≠ 0 is enforced exactly.
fn roots_to_candidates(
    r: &UniPoly,
    sym: &SymbolicMobius,
    branch: Branch,
    det_sign: i32,
) -> Vec<MobiusCandidate> {
    let mut out = Vec::new();
    if r.is_constant() {
        return out;
    }
    let factors = factor_rationals(r).expect("nonzero polynomial");
    for (f, _) in factors {
        if f.deg() < 1 {
            continue;
        }
        let intervals = isolate_real_roots(&f).expect("nonzero polynomial");
        for (lo, hi) in intervals {
            let xi = Arc::new(AlgebraicNumber::new(f.clone(), lo, hi));
            let eval = |x: &RatX| field_eval(x, &xi);
            let (a, b, c, d) = match (eval(&sym.a), eval(&sym.b), eval(&sym.c), eval(&sym.d)) {
                (Ok(a), Ok(b), Ok(c), Ok(d)) => (a, b, c, d),
                _ => continue, // some coefficient is not well defined at this root
            };
            let delta = a.mul(&d).sub(&b.mul(&c));
            if delta.is_zero() {
                continue;
            }
            out.push(MobiusCandidate {
                xi,
                a,
                b,
                c,
                d,
                branch,
                det_sign,
            });
        }
    }
    out
}

/// Candidates of the d ≠ 0 branch: `(R₁, candidates)`.
pub fn candidates_d1(
    g: &BiPoly,
    p: &ProbeLine,
    derivs: &ImplicitDerivs,
    det_sign: i32,
) -> (UniPoly, Vec<MobiusCandidate>) {
    match mobius_symbolic_d1(p, derivs) {
        Some(sym) => {
            let r = candidate_polynomial(g, p, &sym);
            let cands = roots_to_candidates(&r, &sym, Branch::D1, det_sign);
            (r, cands)
        }
        None => (Poly::one(), Vec::new()),
    }
}

/// Candidates of the d = 0 branch: `(R₀, candidates)`.
pub fn candidates_d0(
    g: &BiPoly,
    p: &ProbeLine,
    derivs: &ImplicitDerivs,
    det_sign: i32,
) -> (UniPoly, Vec<MobiusCandidate>) {
    let sym = mobius_symbolic_d0(p, derivs);
    let r = candidate_polynomial(g, p, &sym);
    let cands = roots_to_candidates(&r, &sym, Branch::D0, det_sign);
    (r, cands)
}

/// Equal-speed polynomial of one candidate, evaluated in its field ℚ(ξ):
/// the cleared-denominator form of `‖x′(t)‖² − ‖(x∘φ)′(t)‖²` as a
/// polynomial in t with coefficients in ℚ(ξ). The candidate satisfies the
/// arc-length condition iff this polynomial is identically zero.
fn speed_polynomial(speed2: &RatX, cand: &MobiusCandidate) -> Poly<FieldElem> {
    let lift = |p: &UniPoly| -> Poly<FieldElem> {
        p.map(|c| FieldElem::rational(c.clone()))
    };
    let sn = lift(speed2.num());
    let sd = lift(speed2.den());
    // φ as a fraction of linear polynomials in t over ℚ(ξ)
    let q = Poly::new(vec![cand.b.clone(), cand.a.clone()]);
    let r = Poly::new(vec![cand.d.clone(), cand.c.clone()]);
    let e = speed2.num().deg().max(speed2.den().deg()).max(0) as usize;
    let u = compose_frac(&sn, &q, &r, e);
    let v = compose_frac(&sd, &q, &r, e);
    let delta = cand.delta();
    let delta2 = delta.mul(&delta);
    // speed²(t) = speed²(φ(t))·φ′(t)²  cross-multiplied:
    //   Sn·V·(ct+d)⁴ − Sd·U·Δ² = 0
    sn.mul(&v).mul(&r.pow(4)).sub(&sd.mul(&u).scale(&delta2))
}

/// Builds the equal-speed witness for a branch. The coefficients w_i of
/// the cleared-denominator speed difference are rational polynomials in ξ,
/// so an irreducible factor of R_d divides all of them iff the difference
/// vanishes at one (hence every) root of that factor; the test is run in
/// the quotient field ℚ(ξ) of each factor, which keeps every intermediate
/// reduced modulo the minimal polynomial. `r_filtered` is the product of
/// the surviving irreducible factors, i.e. the gcd of the squarefree part
/// of R_d with all the w_i. `curve_degree` only feeds the debug
/// degree-bound check.
pub fn speed_witness(
    speed2: &RatX,
    cands: &[MobiusCandidate],
    r_d: &UniPoly,
    curve_degree: usize,
) -> SpeedWitness {
    let mut r_filtered = Poly::one();
    let mut w_degree = -1isize;
    let mut seen: Vec<&UniPoly> = Vec::new();
    for cand in cands {
        let min_poly = cand.xi.min_poly();
        if seen.iter().any(|p| *p == min_poly) {
            continue; // conjugate roots share the verdict
        }
        seen.push(min_poly);
        debug_assert!(r_d.div_rem(min_poly).1.is_zero());
        let w = speed_polynomial(speed2, cand);
        w_degree = w_degree.max(w.deg());
        debug_assert!(
            w.deg() <= 24 * curve_degree as isize - 4,
            "equal-speed polynomial degree exceeds its bound"
        );
        if w.is_zero() {
            r_filtered = r_filtered.mul(min_poly);
        }
    }
    SpeedWitness {
        r_filtered: int_normal(&r_filtered),
        w_degree,
    }
}

/// A candidate passes the equal-speed filter iff its minimal polynomial
/// divides the filtered gcd.
pub fn speed_filter(cand: &MobiusCandidate, w: &SpeedWitness) -> bool {
    if w.r_filtered.is_zero() {
        return true;
    }
    let (_, rem) = w.r_filtered.div_rem(cand.xi.min_poly());
    rem.is_zero()
}

/// Exact check that the Möbius-like polynomial `F = (ct+d)s − (at+b)` of a
/// candidate divides G: since F is linear in s, divisibility is equivalent
/// to `G(t, φ(t)) ≡ 0` after clearing the denominator of φ.
pub fn divides_gcd_surface(cand: &MobiusCandidate, g: &BiPoly) -> bool {
    let res: Poly<FieldElem> = resultant_mobius(g, &cand.a, &cand.b, &cand.c, &cand.d);
    res.is_zero()
}

/// All accepted Möbius transformations for one determinant sign.
#[derive(Debug, Clone)]
pub struct SignResult {
    pub candidates: Vec<MobiusCandidate>,
    pub count: usize,
    /// Candidates that satisfied the invariant-matching conditions but were
    /// rejected solely by the equal-speed filter. Logged because whether
    /// this can happen at all is an open question.
    pub rejected_by_speed: Vec<MobiusCandidate>,
}

/// Full detection pipeline for one determinant sign, given the matching gcd
/// for that sign and the squared speed of the curve.
pub fn run_sign(
    g_sign: &BiPoly,
    speed2: &RatX,
    curve_degree: usize,
    det_sign: i32,
) -> SignResult {
    let g = strip_pure_t_factors(g_sign);
    if g.deg_s().map_or(0, |d| d) < 1 {
        return SignResult {
            candidates: Vec::new(),
            count: 0,
            rejected_by_speed: Vec::new(),
        };
    }
    let probe = choose_probe(&g);
    let derivs = implicit_derivs(&g, &probe);
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for branch in [Branch::D1, Branch::D0] {
        let (r_d, cands) = match branch {
            Branch::D1 => candidates_d1(&g, &probe, &derivs, det_sign),
            Branch::D0 => candidates_d0(&g, &probe, &derivs, det_sign),
        };
        if cands.is_empty() {
            continue;
        }
        let witness = speed_witness(speed2, &cands, &r_d, curve_degree);
        for cand in cands {
            if speed_filter(&cand, &witness) {
                accepted.push(cand);
            } else {
                rejected.push(cand);
            }
        }
    }
    accepted.sort_by(|x, y| x.branch.cmp(&y.branch).then_with(|| x.xi.compare(&y.xi)));
    SignResult {
        count: accepted.len(),
        candidates: accepted,
        rejected_by_speed: rejected,
    }
}

/// Runs the full detection pipeline for one determinant sign (+1 direct,
/// −1 opposite isometries).
pub fn symm(c: &ParamCurve3, det_sign: i32) -> Result<SignResult, SymmetryError> {
    assert!(det_sign == 1 || det_sign == -1);
    let inv = invariants(c)?;
    let eqs = build_equations(&inv)?;
    let g = if det_sign == 1 { &eqs.gplus } else { &eqs.gminus };
    Ok(run_sign(g, &inv.speed2, c.degree(), det_sign))
}

/// Runs both signs, sharing the invariant and gcd computations and
/// processing the two signs concurrently.
pub fn symm_both(c: &ParamCurve3) -> Result<(SignResult, SignResult), SymmetryError> {
    let inv = invariants(c)?;
    let eqs = build_equations(&inv)?;
    let deg = c.degree();
    let (plus, minus) = std::thread::scope(|scope| {
        let plus = scope.spawn(|| run_sign(&eqs.gplus, &inv.speed2, deg, 1));
        let minus = scope.spawn(|| run_sign(&eqs.gminus, &inv.speed2, deg, -1));
        (plus.join().expect("detect thread"), minus.join().expect("detect thread"))
    });
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use curve_invariants::{crunode, daisy, twisted_cubic};
    use exact_algebra::linalg::{Matrix3, Vector3};
    use exact_algebra::rat;

    /// Up-to-positive-constant comparison of bivariate polynomials.
    fn bi_eq_up_to_constant(p: &BiPoly, q: &BiPoly) -> bool {
        p.normalized() == q.normalized() || p.normalized() == q.normalized().neg()
    }

    fn uni_eq_up_to_constant(p: &UniPoly, q: &UniPoly) -> bool {
        int_normal(p) == int_normal(q)
    }

    /// The quartic matching-gcd of a curve given directly by its terms:
    /// 3s⁴t⁴ − 6s⁴t³ + 3s⁴t² − 6s²t⁴ − s²t² + 2s²t − s² + 2t².
    fn quartic_surface() -> BiPoly {
        BiPoly::from_terms([
            ((4, 4), rat_int(3)),
            ((3, 4), rat_int(-6)),
            ((2, 4), rat_int(3)),
            ((4, 2), rat_int(-6)),
            ((2, 2), rat_int(-1)),
            ((1, 2), rat_int(2)),
            ((0, 2), rat_int(-1)),
            ((2, 0), rat_int(2)),
        ])
    }

    #[test]
    fn quartic_surface_probe_line() {
        let g = quartic_surface();
        // t0 = 2 is admissible and gives the section 12ξ⁴ − 97ξ² + 8
        let p = probe_at(&g, 2).unwrap();
        assert_eq!(p.t0, rat_int(2));
        assert_eq!(p.g, Poly::from_ints(&[8, 0, -97, 0, 12]));
        // the default search stops earlier: t0 = 0 and 1 drop the s-degree,
        // while t0 = −1 gives the admissible section 12ξ⁴ − 10ξ² + 2
        assert!(probe_at(&g, 0).is_none());
        assert!(probe_at(&g, 1).is_none());
        let auto = choose_probe(&g);
        assert_eq!(auto.t0, rat_int(-1));
        assert_eq!(auto.g, Poly::from_ints(&[1, 0, -5, 0, 6]));
        assert_eq!(auto.attempts, 3);
    }

    #[test]
    fn quartic_surface_implicit_derivatives() {
        let g = quartic_surface();
        let p = probe_at(&g, 2).unwrap();
        let d = implicit_derivs(&g, &p);
        // s′₀ = −(18ξ⁴−97ξ²+4)/(ξ(24ξ²−97))
        let expect_s1 = RatFunc::new(
            Poly::from_ints(&[4, 0, -97, 0, 18]).neg(),
            Poly::from_ints(&[0, -97, 0, 24]),
        );
        assert_eq!(d.s1, expect_s1);
        // s″₀ = −(16416ξ¹⁰ − 206316ξ⁸ + 879669ξ⁶ − 1387682ξ⁴ + 55302ξ²
        //         + 1552) / (ξ³(24ξ²−97)³)
        let num = Poly::from_ints(&[1552, 0, 55302, 0, -1387682, 0, 879669, 0, -206316, 0, 16416]);
        let den = Poly::from_ints(&[0, 0, 0, 1]).mul(&Poly::from_ints(&[-97, 0, 24]).pow(3));
        assert_eq!(d.s2, RatFunc::new(num, den));
    }

    #[test]
    fn quartic_surface_symbolic_d0_coefficients() {
        let g = quartic_surface();
        let p = probe_at(&g, 2).unwrap();
        let d = implicit_derivs(&g, &p);
        let sym = mobius_symbolic_d0(&p, &d);
        // a₀ = −(ξ²−8)(12ξ²−1)/(ξ(24ξ²−97)), b₀ = 4(18ξ⁴−97ξ²+4)/(ξ(24ξ²−97))
        let den = Poly::from_ints(&[0, -97, 0, 24]);
        let a_num = Poly::from_ints(&[-8, 0, 1]).mul(&Poly::from_ints(&[-1, 0, 12])).neg();
        assert_eq!(sym.a, RatFunc::new(a_num, den.clone()));
        let b_num = Poly::from_ints(&[4, 0, -97, 0, 18]).scale(&rat_int(4));
        assert_eq!(sym.b, RatFunc::new(b_num, den));
    }

    #[test]
    fn quartic_surface_candidates_both_branches() {
        let g = quartic_surface();
        let p = probe_at(&g, 2).unwrap();
        let d = implicit_derivs(&g, &p);
        let (r1, c1) = candidates_d1(&g, &p, &d, 1);
        assert!(uni_eq_up_to_constant(&r1, &Poly::from_ints(&[-8, 0, 1])));
        assert_eq!(c1.len(), 2);
        let (r0, c0) = candidates_d0(&g, &p, &d, 1);
        assert!(uni_eq_up_to_constant(&r0, &Poly::from_ints(&[-1, 0, 12])));
        assert_eq!(c0.len(), 2);
        // d = 1 factors: F = s(−t+1) + √2·t with a = ∓√2, b = 0, c = −1
        for cand in &c1 {
            assert!(cand.b.is_zero());
            assert!(cand.c.add(&FieldElem::rational(rat_int(1))).is_zero());
            let a2 = cand.a.mul(&cand.a);
            assert!(a2.sub(&FieldElem::rational(rat_int(2))).is_zero());
            assert!(divides_gcd_surface(cand, &g));
        }
        // the two conjugate roots carry opposite values of a (they live in
        // distinct fields, so compare signs)
        assert_eq!(c1[0].a.sign() * c1[1].a.sign(), -1);
        // d = 0 factors: F = st ∓ √3/3 with a = 0, b = ±√3/3
        for cand in &c0 {
            assert!(cand.a.is_zero());
            let b2 = cand.b.mul(&cand.b);
            assert!(b2.sub(&FieldElem::rational(rat(1, 3))).is_zero());
            assert!(!cand.delta().is_zero());
            assert!(divides_gcd_surface(cand, &g));
        }
        assert_eq!(c0[0].b.sign() * c0[1].b.sign(), -1);
    }

    #[test]
    fn crunode_matching_gcds() {
        let inv = invariants(&crunode()).unwrap();
        let eqs = build_equations(&inv).unwrap();
        // G⁺ = (t−s)(t+s), G⁻ = (st−1)(st+1) up to constants
        let gplus = BiPoly::from_terms([((2, 0), rat_int(1)), ((0, 2), rat_int(-1))]);
        let gminus = BiPoly::from_terms([((2, 2), rat_int(1)), ((0, 0), rat_int(-1))]);
        assert!(bi_eq_up_to_constant(&strip_pure_t_factors(&eqs.gplus), &gplus));
        assert!(bi_eq_up_to_constant(&strip_pure_t_factors(&eqs.gminus), &gminus));
        // antisymmetry / symmetry
        assert_eq!(eqs.k.swap_vars(), eqs.k.neg());
        assert_eq!(eqs.tplus.swap_vars(), eqs.tplus.neg());
        assert_eq!(eqs.tminus.swap_vars(), eqs.tminus);
    }

    #[test]
    fn daisy_matching_gcds() {
        let inv = invariants(&daisy(1)).unwrap();
        let eqs = build_equations(&inv).unwrap();
        // G⁺ = (t−s)(st−1), G⁻ = (s+t)(st+1)
        let gplus = BiPoly::from_terms([
            ((2, 1), rat_int(1)),
            ((1, 2), rat_int(-1)),
            ((1, 0), rat_int(-1)),
            ((0, 1), rat_int(1)),
        ]);
        let gminus = BiPoly::from_terms([
            ((2, 1), rat_int(1)),
            ((1, 2), rat_int(1)),
            ((1, 0), rat_int(1)),
            ((0, 1), rat_int(1)),
        ]);
        assert!(bi_eq_up_to_constant(&strip_pure_t_factors(&eqs.gplus), &gplus));
        assert!(bi_eq_up_to_constant(&strip_pure_t_factors(&eqs.gminus), &gminus));
    }

    #[test]
    fn probe_on_simple_surfaces() {
        // G = s − t: t0 = 0 works immediately, g = ξ
        let g = BiPoly::from_terms([((0, 1), rat_int(1)), ((1, 0), rat_int(-1))]);
        let p = choose_probe(&g);
        assert_eq!(p.t0, rat_int(0));
        assert_eq!(p.g, Poly::from_ints(&[0, 1]));
        assert_eq!(p.attempts, 1);
        let d = implicit_derivs(&g, &p);
        assert_eq!(d.s1, RatX::constant(rat_int(1)));
        assert!(d.s2.is_zero());
        // G = (t−s)(t+s): t0 = 0 gives the double root ξ = 0 and is
        // rejected; t0 = 1 gives 1 − ξ²
        let g2 = BiPoly::from_terms([((2, 0), rat_int(1)), ((0, 2), rat_int(-1))]);
        let p2 = choose_probe(&g2);
        assert_eq!(p2.t0, rat_int(1));
        assert!(uni_eq_up_to_constant(&p2.g, &Poly::from_ints(&[-1, 0, 1])));
        assert_eq!(p2.attempts, 2);
    }

    #[test]
    fn crunode_direct_and_opposite() {
        let c = crunode();
        let (plus, minus) = symm_both(&c).unwrap();
        assert_eq!(plus.count, 2);
        assert_eq!(minus.count, 2);
        assert!(plus.rejected_by_speed.is_empty());
        assert!(minus.rejected_by_speed.is_empty());
        // direct: identity and φ(t) = −t, both with d = 1
        assert!(plus.candidates.iter().any(|c| c.is_identity()));
        let neg_t = plus.candidates.iter().find(|c| !c.is_identity()).unwrap();
        assert_eq!(neg_t.branch, Branch::D1);
        assert!(neg_t.a.add(&FieldElem::rational(rat_int(1))).is_zero());
        assert!(neg_t.b.is_zero() && neg_t.c.is_zero());
        // opposite: φ(t) = 1/t and φ(t) = −1/t, both with (c, d) = (1, 0)
        for cand in &minus.candidates {
            assert_eq!(cand.branch, Branch::D0);
            assert!(cand.a.is_zero());
            let b2 = cand.b.mul(&cand.b);
            assert!(b2.sub(&FieldElem::rational(rat_int(1))).is_zero());
        }
        assert!(minus.candidates[0].b.add(&minus.candidates[1].b).is_zero());
    }

    #[test]
    fn daisy_counts() {
        let (plus, minus) = symm_both(&daisy(1)).unwrap();
        assert_eq!(plus.count, 2);
        assert_eq!(minus.count, 2);
        // direct non-identity candidate is φ(t) = 1/t (d = 0 branch)
        let inv_t = plus.candidates.iter().find(|c| !c.is_identity()).unwrap();
        assert_eq!(inv_t.branch, Branch::D0);
        assert!(inv_t.a.is_zero());
        assert!(inv_t.b.sub(&FieldElem::rational(rat_int(1))).is_zero());
    }

    #[test]
    fn twisted_cubic_counts_cross_checked() {
        let c = twisted_cubic();
        let (plus, minus) = symm_both(&c).unwrap();
        // Independent check: x(−t) = diag(−1, 1, −1)·x(t) exactly, so the
        // direct set is {identity, half-turn}; and no opposite candidate
        // can exist because the torsion 3/(9t⁴+9t²+1) is positive for all
        // real t while an opposite symmetry would need τ∘φ = −τ.
        let q = Matrix3::new([
            [rat_int(-1), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(1), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(-1)],
        ]);
        let b = Vector3::zero();
        let neg = c.compose(&RatFunc::new(
            Poly::from_ints(&[0, -1]),
            Poly::from_ints(&[1]),
        ));
        assert_eq!(neg, c.transform(&q, &b));
        assert_eq!(plus.count, 2);
        assert_eq!(minus.count, 0);
    }

    #[test]
    fn identity_always_accepted() {
        for c in [twisted_cubic(), crunode(), daisy(1)] {
            let plus = symm(&c, 1).unwrap();
            assert!(plus.candidates.iter().any(|c| c.is_identity()));
            assert!(plus.count >= 1);
        }
    }

    #[test]
    fn accepted_factors_divide_gcd_surface() {
        let c = crunode();
        let inv = invariants(&c).unwrap();
        let eqs = build_equations(&inv).unwrap();
        let (plus, minus) = symm_both(&c).unwrap();
        for cand in &plus.candidates {
            assert!(divides_gcd_surface(cand, &eqs.gplus));
        }
        for cand in &minus.candidates {
            assert!(divides_gcd_surface(cand, &eqs.gminus));
        }
    }

    #[test]
    fn degenerate_inputs_are_refused() {
        use exact_algebra::RatFunc;
        let line = ParamCurve3::new(
            RatFunc::from_poly(Poly::from_ints(&[0, 1])),
            RatFunc::from_poly(Poly::from_ints(&[1, 2])),
            RatFunc::from_poly(Poly::from_ints(&[3, -1])),
        );
        assert!(matches!(
            symm(&line, 1),
            Err(SymmetryError::Degenerate(DegeneracyKind::Line))
        ));
        let planar = ParamCurve3::new(
            RatFunc::from_poly(Poly::from_ints(&[0, 1])),
            RatFunc::from_poly(Poly::from_ints(&[0, 0, 1])),
            RatFunc::from_poly(Poly::from_ints(&[0])),
        );
        assert!(matches!(
            symm(&planar, 1),
            Err(SymmetryError::Degenerate(DegeneracyKind::Planar))
        ));
    }
}
