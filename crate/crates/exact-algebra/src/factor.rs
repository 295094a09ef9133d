//! Factorization of univariate polynomials over the rationals: Yun's
//! squarefree decomposition, factorization modulo a word-size prime
//! (distinct-degree plus Cantor-Zassenhaus), Hensel lifting, and subset
//! recombination. Degrees here stay small, so no lattice reduction is needed.

use crate::error::AlgebraError;
use crate::intpoly::{
    mp_deg, mp_derivative, mp_div_rem, mp_from_int, mp_gcd, mp_monic, mp_mul, mp_sub, mp_trim,
    next_prime,
};
use crate::poly::{poly_gcd_uni, Poly, UniPoly};
use crate::rat::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Complete factorization into irreducibles over Q. Factors are returned as
/// integer-primitive polynomials with positive leading coefficient; their
/// product matches the input up to a rational constant. A constant input
/// yields an empty list; the zero polynomial is an error.
pub fn factor_rationals(p: &UniPoly) -> Result<Vec<(UniPoly, u32)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(p)? {
        for irred in factor_squarefree(&sqf) {
            out.push((irred.primitive(), mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| format!("{:?}", a).cmp(&format!("{:?}", b)))
    });
    Ok(out)
}

/// Yun's algorithm: returns pairwise-coprime squarefree `a_i` with
/// `p = const * prod a_i^i`.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, u32)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let f = p.monic();
    let fp = f.derivative();
    let d = poly_gcd_uni(&f, &fp)?;
    if d.is_constant() {
        return Ok(vec![(f, 1)]);
    }
    let mut b = f.exact_div(&d).unwrap();
    let c = fp.exact_div(&d).unwrap();
    let mut z = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1u32;
    while !b.is_constant() {
        let a = poly_gcd_uni(&b, &z)?;
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        let y = z.exact_div(&a).unwrap();
        z = y.sub(&b.derivative());
        i += 1;
    }
    Ok(out)
}

/// Factor a squarefree, nonconstant polynomial into irreducibles over Q.
fn factor_squarefree(g: &UniPoly) -> Vec<UniPoly> {
    let (f, _) = g.to_int_primitive();
    let n = f.len() - 1;
    if n == 1 {
        return vec![Poly::from_int_coeffs(f)];
    }
    let lc = f.last().unwrap().clone();

    // prime with invertible leading coefficient and squarefree image
    let mut p = 101u64;
    let (p, fm) = loop {
        p = next_prime(p);
        let pm = Int::from(p);
        if (&lc % &pm).is_zero() {
            p += 1;
            continue;
        }
        let fm = mp_from_int(&f, p);
        let d = mp_gcd(&fm, &mp_derivative(&fm, p), p);
        if mp_deg(&d) == 0 {
            break (p, mp_monic(&fm, p));
        }
        p += 1;
    };

    let modular = mp_factor_squarefree(fm, p);
    if modular.len() == 1 {
        return vec![Poly::from_int_coeffs(f)];
    }

    // Landau-Mignotte style bound on candidate coefficients, times two for
    // the symmetric representation
    let norm2: Int = f.iter().map(|c| c * c).sum::<Int>().sqrt() + 1;
    let bound: Int = (Int::one() << (n + 1)) * norm2 * lc.abs();
    let mut modulus = Int::from(p);
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= Int::from(p);
        k += 1;
    }

    let lifted = hensel_lift_all(&f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

// ---------------------------------------------------------------------------
// factorization mod p

/// Deterministic xorshift generator for Cantor-Zassenhaus splitting.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

fn mp_powmod_u64(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = mp_div_rem(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = mp_div_rem(&mp_mul(&result, &b, p), f, p).1;
        }
        b = mp_div_rem(&mp_mul(&b, &b, p), f, p).1;
        e >>= 1;
    }
    result
}

fn mp_powmod_big(base: &[u64], e: &num_bigint::BigUint, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = mp_div_rem(base, f, p).1;
    for i in 0..e.bits() {
        if e.bit(i) {
            result = mp_div_rem(&mp_mul(&result, &b, p), f, p).1;
        }
        b = mp_div_rem(&mp_mul(&b, &b, p), f, p).1;
    }
    result
}

/// Distinct-degree then equal-degree factorization of a monic squarefree
/// polynomial mod an odd prime.
fn mp_factor_squarefree(mut f: Vec<u64>, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 1usize;
    let mut rng = Rng(0x9e3779b97f4a7c15);
    while mp_deg(&f) >= 2 * d as isize {
        h = mp_powmod_u64(&h, p, &f, p);
        let g = mp_gcd(&mp_sub(&h, &x, p), &f, p);
        if mp_deg(&g) > 0 {
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            f = mp_div_rem(&f, &g, p).0;
            h = mp_div_rem(&h, &f, p).1;
        }
        d += 1;
    }
    if mp_deg(&f) > 0 {
        out.push(mp_monic(&f, p));
    }
    out
}

fn equal_degree_split(f: &[u64], d: usize, p: u64, rng: &mut Rng, out: &mut Vec<Vec<u64>>) {
    let deg = mp_deg(f) as usize;
    if deg == d {
        out.push(mp_monic(f, p));
        return;
    }
    let exponent = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = mp_trim((0..deg).map(|_| rng.next() % p).collect());
        if mp_deg(&a) < 1 {
            continue;
        }
        let g = mp_gcd(&a, f, p);
        let split = if mp_deg(&g) > 0 && mp_deg(&g) < deg as isize {
            g
        } else {
            let b = mp_powmod_big(&a, &exponent, f, p);
            let g = mp_gcd(&mp_sub(&b, &[1], p), f, p);
            if mp_deg(&g) > 0 && mp_deg(&g) < deg as isize {
                g
            } else {
                continue;
            }
        };
        let rest = mp_div_rem(f, &split, p).0;
        equal_degree_split(&split, d, p, rng, out);
        equal_degree_split(&rest, d, p, rng, out);
        return;
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting (coefficients mod m as big integers in [0, m))

fn zk_reduce(v: &mut Vec<Int>, m: &Int) {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn zk_add(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for k in 0..n {
        out[k] = (a.get(k).unwrap_or(&Int::zero()) + b.get(k).unwrap_or(&Int::zero())).mod_floor(m);
    }
    let mut out = out;
    zk_reduce(&mut out, m);
    out
}

fn zk_sub(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for k in 0..n {
        out[k] = (a.get(k).unwrap_or(&Int::zero()) - b.get(k).unwrap_or(&Int::zero())).mod_floor(m);
    }
    let mut out = out;
    zk_reduce(&mut out, m);
    out
}

fn zk_mul(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zk_reduce(&mut out, m);
    out
}

/// Division with monic divisor.
fn zk_div_rem(a: &[Int], b: &[Int], m: &Int) -> (Vec<Int>, Vec<Int>) {
    assert!(b.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem: Vec<Int> = a.to_vec();
    if rem.len() < b.len() {
        zk_reduce(&mut rem, m);
        return (Vec::new(), rem);
    }
    let mut quot = vec![Int::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let q = rem[k].mod_floor(m);
        if q.is_zero() {
            rem[k] = Int::zero();
            continue;
        }
        for j in 0..db {
            rem[k - db + j] = (&rem[k - db + j] - &q * &b[j]).mod_floor(m);
        }
        rem[k] = Int::zero();
        quot[k - db] = q;
    }
    zk_reduce(&mut quot, m);
    zk_reduce(&mut rem, m);
    (quot, rem)
}

fn u64_poly_to_int(v: &[u64]) -> Vec<Int> {
    v.iter().map(|&c| Int::from(c)).collect()
}

/// Extended gcd mod p for u64 polynomials: (g, s, t) with s a + t b = g monic.
fn mp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0: Vec<u64> = vec![1];
    let mut s1: Vec<u64> = vec![];
    let mut t0: Vec<u64> = vec![];
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = mp_div_rem(&r0, &r1, p);
        let s = mp_sub(&s0, &mp_mul(&q, &s1, p), p);
        let t = mp_sub(&t0, &mp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let lc = *r0.last().expect("nonzero gcd");
    let inv = crate::intpoly::mp_inv(lc, p);
    (
        crate::intpoly::mp_scale(&r0, inv, p),
        crate::intpoly::mp_scale(&s0, inv, p),
        crate::intpoly::mp_scale(&t0, inv, p),
    )
}

/// One quadratic Hensel step: from `f = g h (mod m)`, `s g + t h = 1 (mod m)`
/// to the same relations mod `m^2`.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[Int],
    g: &[Int],
    h: &[Int],
    s: &[Int],
    t: &[Int],
    m: &Int,
) -> (Vec<Int>, Vec<Int>, Vec<Int>, Vec<Int>) {
    let m2 = m * m;
    let e = zk_sub(f, &zk_mul(g, h, &m2), &m2);
    let (q, r) = zk_div_rem(&zk_mul(s, &e, &m2), h, &m2);
    let g_new = zk_add(&zk_add(g, &zk_mul(t, &e, &m2), &m2), &zk_mul(&q, g, &m2), &m2);
    let h_new = zk_add(h, &r, &m2);
    let b = zk_sub(
        &zk_add(&zk_mul(s, &g_new, &m2), &zk_mul(t, &h_new, &m2), &m2),
        &[Int::one()],
        &m2,
    );
    let (c, d) = zk_div_rem(&zk_mul(s, &b, &m2), &h_new, &m2);
    let s_new = zk_sub(s, &d, &m2);
    let t_new = zk_sub(
        t,
        &zk_add(&zk_mul(t, &b, &m2), &zk_mul(&c, &g_new, &m2), &m2),
        &m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lift a two-factor split of a monic polynomial from mod p to mod p^(2^j)
/// covering p^k.
fn lift_pair(f: &[Int], g0: &[u64], h0: &[u64], p: u64, k: u32) -> (Vec<Int>, Vec<Int>, Int) {
    let (one, s0, t0) = mp_xgcd(g0, h0, p);
    assert_eq!(mp_deg(&one), 0, "factors must be coprime mod p");
    let mut m = Int::from(p);
    let target = Int::from(p).pow(k);
    let mut g = u64_poly_to_int(g0);
    let mut h = u64_poly_to_int(h0);
    let mut s = u64_poly_to_int(&s0);
    let mut t = u64_poly_to_int(&t0);
    while m < target {
        let mut fm = f.to_vec();
        let m2 = &m * &m;
        zk_reduce(&mut fm, &m2);
        let (gn, hn, sn, tn) = hensel_step(&fm, &g, &h, &s, &t, &m);
        g = gn;
        h = hn;
        s = sn;
        t = tn;
        m = m2;
    }
    (g, h, m)
}

/// Lift all modular factors of `f` (nonmonic allowed) to mod p^k, peeling
/// one factor at a time. Returns monic lifted factors mod the final modulus.
fn hensel_lift_all(f: &[Int], modular: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<Int>> {
    // work with the monic associate of f modulo p^k
    let target = Int::from(p).pow(k);
    // final modulus produced by repeated squaring may exceed p^k; compute it
    let mut m = Int::from(p);
    while m < target {
        m = &m * &m;
    }
    let lc = f.last().unwrap();
    let lc_inv = mod_inverse(lc, &m);
    let mut fm: Vec<Int> = f.iter().map(|c| (c * &lc_inv).mod_floor(&m)).collect();
    zk_reduce(&mut fm, &m);

    let mut out = Vec::with_capacity(modular.len());
    let mut rest_mod: Vec<Vec<u64>> = modular.to_vec();
    let mut current = fm;
    while rest_mod.len() > 1 {
        let g0 = rest_mod.remove(0);
        let mut h0: Vec<u64> = vec![1];
        for r in &rest_mod {
            h0 = mp_mul(&h0, r, p);
        }
        let (g, h, _) = lift_pair(&current, &g0, &h0, p, k);
        out.push(g);
        current = h;
    }
    out.push(current);
    out
}

fn mod_inverse(a: &Int, m: &Int) -> Int {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

// ---------------------------------------------------------------------------
// recombination

fn symmetric(v: &Int, m: &Int) -> Int {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn recombine(f: Vec<Int>, lifted: Vec<Vec<Int>>, modulus: &Int) -> Vec<UniPoly> {
    let mut remaining = Poly::from_int_coeffs(f);
    let mut active: Vec<Vec<Int>> = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= active.len() {
        for combo in combinations(active.len(), size) {
            let lc = {
                let (ints, _) = remaining.to_int_primitive();
                ints.last().unwrap().clone()
            };
            let mut cand: Vec<Int> = vec![lc.clone()];
            for &i in &combo {
                cand = zk_mul(&cand, &active[i], modulus);
            }
            let cand_sym: Vec<Int> = cand.iter().map(|c| symmetric(c, modulus)).collect();
            let cand_poly = Poly::from_int_coeffs(cand_sym).primitive();
            if cand_poly.is_constant() {
                continue;
            }
            if let Some(q) = remaining.exact_div(&cand_poly) {
                out.push(cand_poly);
                remaining = q.primitive();
                // remove used modular factors, highest index first
                for &i in combo.iter().rev() {
                    active.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.deg() >= 1 {
        out.push(remaining.primitive());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn prod(factors: &[(UniPoly, u32)]) -> UniPoly {
        let mut acc = Poly::one();
        for (f, m) in factors {
            acc = acc.mul(&f.pow(*m as usize));
        }
        acc
    }

    #[test]
    fn factor_difference_of_squares() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let fs = factor_rationals(&p).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        assert_eq!(prod(&fs).monic(), p.monic());
    }

    #[test]
    fn irreducible_quadratics_stay_whole() {
        // xi^2 - 8 and 12 xi^2 - 1 are irreducible over Q
        for coeffs in [vec![-8i64, 0, 1], vec![-1, 0, 12]] {
            let p = Poly::from_ints(&coeffs);
            let fs = factor_rationals(&p).unwrap();
            assert_eq!(fs.len(), 1);
            assert_eq!(fs[0].1, 1);
            assert_eq!(fs[0].0, p.primitive());
        }
    }

    #[test]
    fn multiplicities() {
        // (x-1)^2 (x+2)^3 (x^2+1)
        let p = Poly::from_ints(&[-1, 1])
            .pow(2)
            .mul(&Poly::from_ints(&[2, 1]).pow(3))
            .mul(&Poly::from_ints(&[1, 0, 1]));
        let fs = factor_rationals(&p).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(prod(&fs).monic(), p.monic());
        let mut mults: Vec<u32> = fs.iter().map(|(_, m)| *m).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn constant_input_empty() {
        assert_eq!(
            factor_rationals(&Poly::constant(rat_int(5))).unwrap(),
            Vec::new()
        );
        assert!(factor_rationals(&Poly::zero()).is_err());
    }

    #[test]
    fn bigger_product_roundtrip() {
        // product of several irreducibles of varying degrees
        let f1 = Poly::from_ints(&[2, 0, 1]); // x^2+2
        let f2 = Poly::from_ints(&[-2, 0, 1]); // x^2-2
        let f3 = Poly::from_ints(&[1, 1, 0, 1]); // x^3+x+1 (irreducible)
        let f4 = Poly::from_ints(&[-3, 1]); // x-3
        let p = f1.mul(&f2).mul(&f3).mul(&f4);
        let fs = factor_rationals(&p).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(prod(&fs).monic(), p.monic());
        for (f, _) in &fs {
            let again = factor_rationals(f).unwrap();
            assert_eq!(again.len(), 1, "{:?} should be irreducible", f);
        }
    }

    #[test]
    fn cyclotomic_like() {
        // x^4 + 1 is irreducible over Q but splits mod every prime:
        // forces genuine recombination
        let p = Poly::from_ints(&[1, 0, 0, 0, 1]);
        let fs = factor_rationals(&p).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, p);
    }

    #[test]
    fn squarefree_decomposition_shape() {
        let p = Poly::from_ints(&[0, 1]).pow(4); // t^4
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0], (Poly::from_ints(&[0, 1]), 4));
    }
}
