//! Sparse bivariate polynomials over the rationals, with a deterministic
//! interpolation-based gcd (evaluate in `s`, gcd in `t`, interpolate, verify
//! by exact division) and the denominator-cleared substitution of a Möbius
//! transformation for `s`.

use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::{poly_gcd_uni, Poly, UniPoly};
use crate::rat::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Bivariate polynomial; keys are `(deg_t, deg_s)`, no zero coefficients
/// are stored.
#[derive(Clone, PartialEq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut t = BTreeMap::new();
        t.insert((0, 0), <Rat as One>::one());
        BiPoly { terms: t }
    }

    pub fn from_terms(entries: impl IntoIterator<Item = ((u32, u32), Rat)>) -> Self {
        let mut p = BiPoly::zero();
        for (k, c) in entries {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if Zero::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(<Rat as Zero>::zero);
        *entry += c;
        if Zero::is_zero(entry) {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn deg_s(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// A polynomial in `t` only.
    pub fn from_uni_t(p: &UniPoly) -> Self {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((k as u32, 0), c.clone())),
        )
    }

    /// A polynomial in `s` only.
    pub fn from_uni_s(p: &UniPoly) -> Self {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        )
    }

    /// Outer product `p(t) * q(s)`.
    pub fn outer(p: &UniPoly, q: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (i, a) in p.coeffs().iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in q.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), a * b);
            }
        }
        out
    }

    /// `p(t)q(s) − q(t)p(s)`, computed over the primitive integer associates
    /// of `p` and `q`: the result equals the true value up to a nonzero
    /// rational factor, which gcd-based callers do not care about. Avoiding
    /// rational arithmetic (each product would otherwise renormalize) makes
    /// this far faster than two `outer` calls on large inputs.
    pub fn outer_anti(p: &UniPoly, q: &UniPoly) -> Self {
        Self::outer_combination(p, q, false)
    }

    /// `p(t)q(s) + q(t)p(s)` up to a nonzero rational factor; see
    /// [`BiPoly::outer_anti`].
    pub fn outer_sym(p: &UniPoly, q: &UniPoly) -> Self {
        Self::outer_combination(p, q, true)
    }

    fn outer_combination(p: &UniPoly, q: &UniPoly, plus: bool) -> Self {
        let (pi, _) = p.to_int_primitive();
        let (qi, _) = q.to_int_primitive();
        let n = pi.len().max(qi.len());
        let zero = Int::zero();
        let at = |v: &[Int], k: usize| -> Int { v.get(k).cloned().unwrap_or_else(|| zero.clone()) };
        let mut out = BiPoly::zero();
        for i in 0..n {
            let p_i = at(&pi, i);
            let q_i = at(&qi, i);
            for j in 0..n {
                let first = &p_i * at(&qi, j);
                let second = &q_i * at(&pi, j);
                let v = if plus { first + second } else { first - second };
                if !v.is_zero() {
                    out.add_term((i as u32, j as u32), Rat::from_integer(v));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if Zero::is_zero(c) {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    /// Swap the roles of `t` and `s`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Coefficients as polynomials in `t`, indexed by the power of `s`:
    /// `G = sum_k G_k(t) s^k`.
    pub fn coeffs_in_s(&self) -> Vec<UniPoly> {
        let ms = self.deg_s().map_or(0, |d| d as usize);
        let mt = self.deg_t().map_or(0, |d| d as usize);
        let mut out = vec![vec![<Rat as Zero>::zero(); mt + 1]; ms + 1];
        for (&(i, j), c) in &self.terms {
            out[j as usize][i as usize] = c.clone();
        }
        out.into_iter().map(Poly::new).collect()
    }

    /// Coefficients as polynomials in `s`, indexed by the power of `t`.
    pub fn coeffs_in_t(&self) -> Vec<UniPoly> {
        self.swap_vars().coeffs_in_s()
    }

    pub fn from_coeffs_in_s(coeffs: &[UniPoly]) -> Self {
        let mut out = BiPoly::zero();
        for (j, p) in coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), c.clone());
            }
        }
        out
    }

    /// Evaluate `s = s0`, leaving a polynomial in `t`.
    pub fn eval_s(&self, s0: &Rat) -> UniPoly {
        let mt = self.deg_t().map_or(0, |d| d as usize);
        let mut out = vec![<Rat as Zero>::zero(); mt + 1];
        // group terms by t-degree, Horner over s within each group
        let mut by_t: BTreeMap<u32, Vec<(u32, &Rat)>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            by_t.entry(i).or_default().push((j, c));
        }
        for (i, terms) in by_t {
            let mut acc = <Rat as Zero>::zero();
            let mut pow = <Rat as One>::one();
            let mut last = 0u32;
            for (j, c) in terms {
                for _ in last..j {
                    pow *= s0;
                }
                last = j;
                acc += c * &pow;
            }
            out[i as usize] = acc;
        }
        Poly::new(out)
    }

    /// Evaluate `t = t0`, leaving a polynomial in `s`.
    pub fn eval_t(&self, t0: &Rat) -> UniPoly {
        self.swap_vars().eval_s(t0)
    }

    pub fn eval(&self, t0: &Rat, s0: &Rat) -> Rat {
        self.eval_s(s0).eval(t0)
    }

    pub fn partial_t(&self) -> Self {
        BiPoly::from_terms(self.terms.iter().filter(|(&(i, _), _)| i > 0).map(
            |(&(i, j), c)| ((i - 1, j), c * Rat::from_integer(Int::from(i))),
        ))
    }

    pub fn partial_s(&self) -> Self {
        BiPoly::from_terms(self.terms.iter().filter(|(&(_, j), _)| j > 0).map(
            |(&(i, j), c)| ((i, j - 1), c * Rat::from_integer(Int::from(j))),
        ))
    }

    /// Lexicographically (t, s) largest monomial and its coefficient.
    fn lex_lead(&self) -> Option<((u32, u32), Rat)> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i, j))
            .map(|(&k, c)| (k, c.clone()))
    }

    /// Positive rational content (coprime integer coefficients when divided
    /// out).
    pub fn content(&self) -> Rat {
        let mut den = Int::one();
        for c in self.terms.values() {
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        let mut num = Int::zero();
        if den.is_one() {
            // common case: integer coefficients; the gcd chain usually
            // collapses to 1 after a handful of terms
            for c in self.terms.values() {
                num = num.gcd(c.numer());
                if num.is_one() {
                    break;
                }
            }
        } else {
            for c in self.terms.values() {
                num = num.gcd(&(c.numer() * (&den / c.denom())));
            }
        }
        if num.is_zero() {
            return <Rat as Zero>::zero();
        }
        Rat::new(num, den)
    }

    /// Integer-content-free associate with positive leading term in
    /// lexicographic (t, s) order.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut c = self.content();
        if self.lex_lead().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Content with respect to `t`: the monic gcd in `s` of the coefficient
    /// polynomials of the powers of `t`.
    pub fn content_wrt_t(&self) -> UniPoly {
        let mut g = Poly::zero();
        for p in self.coeffs_in_t() {
            if p.is_zero() {
                continue;
            }
            g = <Rat as Field>::poly_gcd(&g, &p);
            if g.is_constant() && !g.is_zero() {
                return Poly::one();
            }
        }
        g
    }

    /// Exact division by a polynomial in `s` alone.
    pub fn exact_div_uni_s(&self, d: &UniPoly) -> Option<Self> {
        let coeffs = self.coeffs_in_t();
        let mut out = Vec::with_capacity(coeffs.len());
        for p in coeffs {
            if p.is_zero() {
                out.push(Poly::zero());
            } else {
                out.push(p.exact_div(d)?);
            }
        }
        Some(BiPoly::from_coeffs_in_s(&out).swap_vars())
    }

    /// Primitive integer associate and the rational scale with
    /// `self = scale · associate`. The associate has coprime integer
    /// coefficients and a positive lex-leading one.
    fn to_int_terms(&self) -> (BTreeMap<(u32, u32), Int>, Rat) {
        let mut scale = self.content();
        if self.is_zero() {
            return (BTreeMap::new(), <Rat as One>::one());
        }
        if self.lex_lead().unwrap().1.is_negative() {
            scale = -scale;
        }
        let map = if scale.is_one() {
            self.terms
                .iter()
                .map(|(&k, c)| (k, c.numer().clone()))
                .collect()
        } else if (-&scale).is_one() {
            self.terms
                .iter()
                .map(|(&k, c)| (k, -c.numer()))
                .collect()
        } else {
            let inv = scale.recip();
            self.terms
                .iter()
                .map(|(&k, c)| (k, (c * &inv).to_integer()))
                .collect()
        };
        (map, scale)
    }

    /// Integer terms of `m · self` for the least integer multiplier `m`
    /// clearing all denominators, without extracting the integer content.
    /// For callers that only use the result up to a constant factor (section
    /// evaluation, divisibility tests against a primitive divisor) this
    /// avoids a gcd per coefficient.
    fn to_int_terms_raw(&self) -> BTreeMap<(u32, u32), Int> {
        let mut den = Int::one();
        for c in self.terms.values() {
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        if den.is_one() {
            self.terms
                .iter()
                .map(|(&k, c)| (k, c.numer().clone()))
                .collect()
        } else {
            self.terms
                .iter()
                .map(|(&k, c)| (k, c.numer() * (&den / c.denom())))
                .collect()
        }
    }

    /// Exact quotient in Q[t, s], or `None` when not divisible. Lex (t, s)
    /// leading-term division, run over primitive integer associates: by
    /// Gauss's lemma the quotient of two primitive integer polynomials is an
    /// integer polynomial, so every division step stays in the integers and
    /// no rational normalization is needed.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero());
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let (pn, ps) = self.to_int_terms();
        let (dn, ds) = divisor.to_int_terms();
        let quot = int_exact_div_bi(pn, &dn)?;
        let scale = ps / ds;
        Some(BiPoly {
            terms: quot
                .into_iter()
                .map(|(k, c)| (k, Rat::from_integer(c) * &scale))
                .collect(),
        })
    }

    pub fn to_string_vars(&self, vt: &str, vs: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| std::cmp::Reverse((i, j)));
        for &key in &keys {
            let c = &self.terms[key];
            let cs = c.to_string();
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || (key.0 == 0 && key.1 == 0) {
                factors.push(mag);
            }
            for (var, &e) in [(vt, &key.0), (vs, &key.1)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{}^{}", var, e)),
                }
            }
            let term = factors.join("*");
            if parts.is_empty() {
                parts.push(if sign == "-" {
                    format!("-{}", term)
                } else {
                    term
                });
            } else {
                parts.push(format!(" {} {}", sign, term));
            }
        }
        parts.concat()
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars("t", "s"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars("t", "s"))
    }
}

/// Lex (t, s) leading-term division of integer polynomials. Returns the
/// quotient when `d` divides `p` exactly, `None` otherwise. For primitive
/// inputs every intermediate coefficient division is exact whenever the
/// quotient exists (Gauss's lemma), so a single failed `div_rem` or degree
/// check settles non-divisibility.
fn int_exact_div_bi(
    mut rem: BTreeMap<(u32, u32), Int>,
    d: &BTreeMap<(u32, u32), Int>,
) -> Option<BTreeMap<(u32, u32), Int>> {
    let (&(dt, ds), dc) = d.last_key_value().unwrap();
    let mut quot: BTreeMap<(u32, u32), Int> = BTreeMap::new();
    while let Some((&(rt, rs), rc)) = rem.last_key_value() {
        if rt < dt || rs < ds {
            return None;
        }
        let (qc, r) = rc.div_rem(dc);
        if !r.is_zero() {
            return None;
        }
        let qkey = (rt - dt, rs - ds);
        for (&(i, j), c) in d {
            let key = (i + qkey.0, j + qkey.1);
            let delta = c * &qc;
            match rem.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        quot.insert(qkey, qc);
    }
    Some(quot)
}

/// Evaluate an integer-coefficient bivariate polynomial at `s = s0`, leaving a
/// polynomial in `t` (returned with rational coefficients, unreduced scale).
fn eval_s_int(terms: &BTreeMap<(u32, u32), Int>, s0: &Int) -> UniPoly {
    let deg_s = terms.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
    let deg_t = terms.keys().map(|&(i, _)| i).max().unwrap_or(0) as usize;
    let mut powers = Vec::with_capacity(deg_s + 1);
    powers.push(<Int as One>::one());
    for _ in 0..deg_s {
        powers.push(powers.last().unwrap() * s0);
    }
    let mut out = vec![<Int as Zero>::zero(); deg_t + 1];
    for (&(i, j), c) in terms {
        out[i as usize] += c * &powers[j as usize];
    }
    Poly::from_int_coeffs(out)
}

// ---------------------------------------------------------------------------
// gcd

/// Integer evaluation points 0, 1, -1, 2, -2, ...
struct EvalPoints {
    k: i64,
}

impl Iterator for EvalPoints {
    type Item = Rat;
    fn next(&mut self) -> Option<Rat> {
        let v = self.k;
        self.k = if self.k > 0 { -self.k } else { -self.k + 1 };
        Some(crate::rat::rat_int(v))
    }
}

fn lagrange_interpolate(points: &[(Rat, UniPoly)]) -> BiPoly {
    // sum_j val_j(t) * L_j(s)
    let mut out = BiPoly::zero();
    for (j, (xj, val)) in points.iter().enumerate() {
        let mut lj = Poly::one();
        let mut denom = <Rat as One>::one();
        for (i, (xi, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            lj = lj.mul(&Poly::new(vec![-xi.clone(), <Rat as One>::one()]));
            denom *= &(xj - xi);
        }
        lj = lj.scale(&denom.recip());
        out = out.add(&BiPoly::outer(val, &lj));
    }
    out
}

/// gcd of two bivariate polynomials, both primitive with respect to `t`, by
/// evaluation at rational points in `s`, gcd in `t`, interpolation, and
/// exact-division verification.
fn gcd_primitive_parts(p: &BiPoly, q: &BiPoly) -> BiPoly {
    let lcp = p.coeffs_in_t().pop().unwrap();
    let lcq = q.coeffs_in_t().pop().unwrap();
    let gamma = <Rat as Field>::poly_gcd(&lcp, &lcq);
    let min_ds = p.deg_s().unwrap_or(0).min(q.deg_s().unwrap_or(0)) as usize;
    let bound = gamma.deg().max(0) as usize + min_ds + 2;
    // Integer associates: sections are only needed up to a constant factor
    // for the univariate gcds, so integer Horner evaluation replaces the much
    // slower rational one.
    let p_int = p.to_int_terms_raw();
    let q_int = q.to_int_terms_raw();

    let mut collected: Vec<(Rat, UniPoly)> = Vec::new();
    let mut cur_deg = usize::MAX;
    let mut prev: Option<BiPoly> = None;
    let mut tried = 0usize;

    for s0 in (EvalPoints { k: 0 }) {
        tried += 1;
        assert!(
            tried < 8 * bound + 64,
            "bivariate gcd interpolation failed to converge"
        );
        if Zero::is_zero(&lcp.eval(&s0)) || Zero::is_zero(&lcq.eval(&s0)) {
            continue;
        }
        let s0i = s0.to_integer();
        let pj = eval_s_int(&p_int, &s0i);
        let qj = eval_s_int(&q_int, &s0i);
        let gj = poly_gcd_uni(&pj, &qj).expect("nonzero by leading coefficient check");
        let dj = gj.degree().unwrap();
        if dj == 0 {
            return BiPoly::one();
        }
        if dj > cur_deg {
            continue; // unlucky point
        }
        if dj < cur_deg {
            collected.clear();
            cur_deg = dj;
            prev = None;
        }
        let gval = gamma.eval(&s0);
        collected.push((s0, gj.scale(&gval)));

        let candidate = lagrange_interpolate(&collected);
        let stable = prev.as_ref() == Some(&candidate);
        prev = Some(candidate.clone());
        if stable || collected.len() >= bound {
            // strip the s-content introduced by the gamma scaling
            let cont = candidate.content_wrt_t();
            let stripped = if cont.is_constant() {
                candidate
            } else {
                candidate.exact_div_uni_s(&cont).expect("content divides")
            };
            let norm = stripped.normalized();
            let (n_int, _) = norm.to_int_terms();
            if int_exact_div_bi(p_int.clone(), &n_int).is_some()
                && int_exact_div_bi(q_int.clone(), &n_int).is_some()
            {
                return norm;
            }
        }
    }
    unreachable!()
}

/// Primitive-part gcd over Q[t, s], integer-content-free with positive
/// leading term in lexicographic (t, s) order.
pub fn poly_gcd_bi(p: &BiPoly, q: &BiPoly) -> Result<BiPoly, AlgebraError> {
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    if p.is_zero() {
        return Ok(q.normalized());
    }
    if q.is_zero() {
        return Ok(p.normalized());
    }
    if p.is_constant() || q.is_constant() {
        return Ok(BiPoly::one());
    }
    // split off the content with respect to t (a polynomial in s)
    let cont_p = p.content_wrt_t();
    let cont_q = q.content_wrt_t();
    let pp = if cont_p.is_constant() {
        p.clone()
    } else {
        p.exact_div_uni_s(&cont_p).expect("content divides")
    };
    let qq = if cont_q.is_constant() {
        q.clone()
    } else {
        q.exact_div_uni_s(&cont_q).expect("content divides")
    };
    let cont_g = poly_gcd_uni(&cont_p, &cont_q)?;

    let core = if pp.deg_t().unwrap_or(0) == 0 || qq.deg_t().unwrap_or(0) == 0 {
        // one argument is free of t after content removal
        if pp.deg_t().unwrap_or(0) == 0 && qq.deg_t().unwrap_or(0) == 0 {
            let a = pp.coeffs_in_t().pop().unwrap();
            let b = qq.coeffs_in_t().pop().unwrap();
            BiPoly::from_uni_s(&poly_gcd_uni(&a, &b)?)
        } else {
            BiPoly::one()
        }
    } else {
        gcd_primitive_parts(&pp, &qq)
    };
    Ok(core.mul(&BiPoly::from_uni_s(&cont_g)).normalized())
}

// ---------------------------------------------------------------------------
// Möbius substitution

/// The polynomial in `t` obtained from `G(t, s)` by replacing `s` with
/// `(a t + b)/(c t + d)` and clearing denominators:
/// `sum_k G_k(t) (a t + b)^k (c t + d)^(m0 - k)` with `m0 = deg_s G`.
/// The coefficient ring is pluggable through `F`.
pub fn resultant_mobius<F: Field>(g: &BiPoly, a: &F, b: &F, c: &F, d: &F) -> Poly<F> {
    let coeffs = g.coeffs_in_s();
    let m0 = coeffs.len().saturating_sub(1);
    let lin_ab = Poly::new(vec![b.clone(), a.clone()]);
    let lin_cd = Poly::new(vec![d.clone(), c.clone()]);
    let mut pow_ab = Vec::with_capacity(m0 + 1);
    let mut pow_cd = Vec::with_capacity(m0 + 1);
    pow_ab.push(Poly::<F>::one());
    pow_cd.push(Poly::<F>::one());
    for _ in 0..m0 {
        pow_ab.push(pow_ab.last().unwrap().mul(&lin_ab));
        pow_cd.push(pow_cd.last().unwrap().mul(&lin_cd));
    }
    let mut acc = Poly::<F>::zero();
    for (k, gk) in coeffs.iter().enumerate() {
        if gk.is_zero() {
            continue;
        }
        let gk_f = gk.map(|r| F::from_rat(r));
        acc = acc.add(&gk_f.mul(&pow_ab[k]).mul(&pow_cd[m0 - k]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, Rat};

    fn tpoly(c: &[i64]) -> UniPoly {
        Poly::from_ints(c)
    }

    /// (t - s)(t + s) = t^2 - s^2
    fn t2_minus_s2() -> BiPoly {
        BiPoly::from_terms([
            ((2, 0), rat_int(1)),
            ((0, 2), rat_int(-1)),
        ])
    }

    #[test]
    fn gcd_equal_inputs_normalized() {
        let p = t2_minus_s2().scale(&crate::rat::rat(-6, 4));
        let g = poly_gcd_bi(&p, &p).unwrap();
        // normalized: integer content free, positive lex-leading term
        assert_eq!(g, t2_minus_s2());
    }

    #[test]
    fn gcd_shared_factor() {
        // (t - s)(t + s) vs (t - s)(t s - 1)
        let f1 = t2_minus_s2();
        let ts_m1 = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(-1))]);
        let t_m_s = BiPoly::from_terms([((1, 0), rat_int(1)), ((0, 1), rat_int(-1))]);
        let f2 = t_m_s.mul(&ts_m1);
        let g = poly_gcd_bi(&f1, &f2).unwrap();
        assert_eq!(g, t_m_s);
    }

    #[test]
    fn gcd_with_zero() {
        let p = t2_minus_s2().scale(&rat_int(3));
        assert_eq!(poly_gcd_bi(&p, &BiPoly::zero()).unwrap(), t2_minus_s2());
        assert!(poly_gcd_bi(&BiPoly::zero(), &BiPoly::zero()).is_err());
    }

    #[test]
    fn gcd_divides_exactly() {
        let t_m_s = BiPoly::from_terms([((1, 0), rat_int(1)), ((0, 1), rat_int(-1))]);
        let st_p1 = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(1))]);
        let a = t_m_s.mul(&st_p1).mul(&t2_minus_s2());
        let b = t_m_s.mul(&st_p1).mul(&st_p1);
        let g = poly_gcd_bi(&a, &b).unwrap();
        assert!(a.exact_div(&g).is_some());
        assert!(b.exact_div(&g).is_some());
        assert_eq!(g, t_m_s.mul(&st_p1).normalized());
    }

    #[test]
    fn resultant_identity_coefficients_is_diagonal_substitution() {
        // G = s - t with (a,b,c,d) = (1,0,0,1) -> 0
        let g = BiPoly::from_terms([((0, 1), rat_int(1)), ((1, 0), rat_int(-1))]);
        let r = resultant_mobius::<Rat>(&g, &rat_int(1), &rat_int(0), &rat_int(0), &rat_int(1));
        assert!(r.is_zero());
    }

    #[test]
    fn resultant_generic_expansion() {
        // G = s^2 - t, generic (a,b,c,d) -> (a t + b)^2 - t (c t + d)^2
        let g = BiPoly::from_terms([((0, 2), rat_int(1)), ((1, 0), rat_int(-1))]);
        let (a, b, c, d) = (rat_int(2), rat_int(3), rat_int(5), rat_int(7));
        let r = resultant_mobius::<Rat>(&g, &a, &b, &c, &d);
        let atb = tpoly(&[3, 2]);
        let ctd = tpoly(&[7, 5]);
        let expect = atb.mul(&atb).sub(&tpoly(&[0, 1]).mul(&ctd.pow(2)));
        assert_eq!(r, expect);
    }

    #[test]
    fn eval_and_partials() {
        let g = t2_minus_s2();
        assert_eq!(g.eval_s(&rat_int(2)), tpoly(&[-4, 0, 1]));
        assert_eq!(g.partial_t(), BiPoly::from_terms([((1, 0), rat_int(2))]));
        assert_eq!(g.partial_s(), BiPoly::from_terms([((0, 1), rat_int(-2))]));
    }
}
