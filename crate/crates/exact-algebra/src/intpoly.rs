//! Integer polynomial helpers: modular images, primes, and a small-primes
//! modular gcd with exact trial-division verification. This is the fast path
//! behind the monic rational gcd.

use crate::poly::Poly;
use crate::rat::{Int, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

// ---------------------------------------------------------------------------
// primes

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes descending from just below 2^31; moduli products are accumulated
/// as big integers, individual arithmetic stays in u64.
pub struct PrimesDesc {
    next: u64,
}

impl PrimesDesc {
    pub fn new() -> Self {
        PrimesDesc { next: (1 << 31) - 1 }
    }
}

impl Default for PrimesDesc {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PrimesDesc {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 2 {
            let n = self.next;
            self.next -= 1;
            if is_prime(n) {
                return Some(n);
            }
        }
        None
    }
}

/// Smallest prime >= n.
pub fn next_prime(mut n: u64) -> u64 {
    loop {
        if is_prime(n) {
            return n;
        }
        n += 1;
    }
}

// ---------------------------------------------------------------------------
// polynomials mod p (coefficients in [0, p), p < 2^31, dense, low order first)

pub(crate) fn mp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn mp_deg(v: &[u64]) -> isize {
    v.len() as isize - 1
}

pub(crate) fn mp_inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub(crate) fn mp_scale(v: &[u64], c: u64, p: u64) -> Vec<u64> {
    mp_trim(v.iter().map(|&a| mulmod(a, c, p)).collect())
}

pub(crate) fn mp_monic(v: &[u64], p: u64) -> Vec<u64> {
    match v.last() {
        None => Vec::new(),
        Some(&lc) => mp_scale(v, mp_inv(lc, p), p),
    }
}

pub(crate) fn mp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = *a.get(k).unwrap_or(&0);
        let y = *b.get(k).unwrap_or(&0);
        out[k] = (x + p - y) % p;
    }
    mp_trim(out)
}

pub(crate) fn mp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
        }
    }
    mp_trim(out.into_iter().map(|v| v as u64).collect())
}

pub(crate) fn mp_div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    let db = b.len() - 1;
    let mut rem: Vec<u64> = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), mp_trim(rem));
    }
    let lead_inv = mp_inv(b[db], p);
    let mut quot = vec![0u64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k] == 0 {
            continue;
        }
        let q = mulmod(rem[k], lead_inv, p);
        for j in 0..db {
            let sub = mulmod(q, b[j], p);
            rem[k - db + j] = (rem[k - db + j] + p - sub) % p;
        }
        rem[k] = 0;
        quot[k - db] = q;
    }
    (mp_trim(quot), mp_trim(rem))
}

pub(crate) fn mp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    while !r1.is_empty() {
        let (_, r) = mp_div_rem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    mp_monic(&r0, p)
}

pub(crate) fn mp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (k, &c) in a.iter().enumerate().skip(1) {
        out.push(mulmod(c, (k as u64) % p, p));
    }
    mp_trim(out)
}

/// Reduce an integer polynomial modulo p.
pub(crate) fn mp_from_int(coeffs: &[Int], p: u64) -> Vec<u64> {
    let pm = BigInt::from(p);
    mp_trim(
        coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pm);
                r.to_u64().expect("residue fits u64")
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// modular integer gcd

fn symmetric_lift(v: &Int, m: &Int) -> Int {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn int_content(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn int_primitive(v: &[Int]) -> Vec<Int> {
    let mut g = int_content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    if v.last().map_or(false, |lc| lc.is_negative()) {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

/// Exact division of integer polynomials; `None` when the quotient is not
/// an integer polynomial dividing without remainder.
pub(crate) fn int_exact_div(a: &[Int], b: &[Int]) -> Option<Vec<Int>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut rem = a.to_vec();
    let mut q = vec![Int::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        let (qq, r) = rem[k].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if !qq.is_zero() {
            for j in 0..db {
                rem[k - db + j] -= &qq * &b[j];
            }
        }
        rem[k] = Int::zero();
        q[k - db] = qq;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

fn trial_divides(p: &[Int], d: &[Int]) -> bool {
    int_exact_div(p, d).is_some()
}

/// Exact division over Q through primitive integer polynomials; avoids
/// per-coefficient rational normalization. Panics when `b` does not divide
/// `a`.
pub fn rat_poly_divexact(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    assert!(!b.is_zero(), "division by the zero polynomial");
    if a.is_zero() {
        return Poly::zero();
    }
    let (ia, sa) = a.to_int_primitive();
    let (ib, sb) = b.to_int_primitive();
    let q = int_exact_div(&ia, &ib).expect("exact polynomial division");
    Poly::from_int_coeffs(q).scale(&(sa / sb))
}

/// Primitive gcd (positive leading coefficient) of the primitive parts of two
/// nonzero integer polynomials, by gcds modulo word-size primes, Chinese
/// remaindering, and exact trial-division verification.
fn int_poly_gcd_primitive(pa: &[Int], pb: &[Int]) -> Vec<Int> {
    let a = int_primitive(pa);
    let b = int_primitive(pb);
    if a.len() == 1 || b.len() == 1 {
        return vec![Int::one()];
    }
    let lc_a = a.last().unwrap().clone();
    let lc_b = b.last().unwrap().clone();
    let gamma = lc_a.gcd(&lc_b);

    let mut modulus = Int::zero();
    let mut cand: Vec<Int> = Vec::new();
    let mut cand_deg = usize::MAX;
    let mut stable = false;

    for p in PrimesDesc::new() {
        let pm = Int::from(p);
        if (&lc_a % &pm).is_zero() || (&lc_b % &pm).is_zero() {
            continue;
        }
        let ma = mp_from_int(&a, p);
        let mb = mp_from_int(&b, p);
        let g = mp_gcd(&ma, &mb, p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![Int::one()];
        }
        let gamma_p = (&gamma % &pm).mod_floor(&pm).to_u64().unwrap();
        let scaled = mp_scale(&g, gamma_p, p);

        if cand.is_empty() || d < cand_deg {
            cand_deg = d;
            modulus = pm.clone();
            cand = scaled.iter().map(|&c| symmetric_lift(&Int::from(c), &pm)).collect();
            cand.resize(d + 1, Int::zero());
            stable = false;
        } else if d > cand_deg {
            continue; // unlucky prime
        } else {
            // CRT combine coefficientwise
            let m_inv = {
                let mm = modulus.mod_floor(&pm).to_u64().unwrap();
                mp_inv(mm, p)
            };
            let new_mod = &modulus * &pm;
            let mut changed = false;
            for (k, c) in cand.iter_mut().enumerate() {
                let target = Int::from(*scaled.get(k).unwrap_or(&0));
                let diff = (&target - &*c).mod_floor(&pm);
                let mult = mulmod(diff.to_u64().unwrap(), m_inv, p);
                let lifted = symmetric_lift(&(&*c + &modulus * Int::from(mult)), &new_mod);
                if lifted != *c {
                    changed = true;
                    *c = lifted;
                }
            }
            modulus = new_mod;
            if !changed {
                if stable {
                    // already verified once and failed; keep accumulating
                }
                let pp = int_primitive(&cand);
                if trial_divides(&a, &pp) && trial_divides(&b, &pp) {
                    return pp;
                }
                stable = true;
            }
        }
    }
    unreachable!("prime supply exhausted in modular gcd");
}

/// Product over Q through integer convolution; avoids per-coefficient
/// rational normalization.
pub fn rat_poly_mul(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let (ia, sa) = a.to_int_primitive();
    let (ib, sb) = b.to_int_primitive();
    let mut out = vec![Int::zero(); ia.len() + ib.len() - 1];
    for (i, x) in ia.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in ib.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Poly::from_int_coeffs(out).scale(&(sa * sb))
}

/// Monic gcd over the rationals via the modular integer gcd.
pub fn rat_poly_gcd_fast(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.is_zero() && b.is_zero() {
        return Poly::zero();
    }
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let (ia, _) = a.to_int_primitive();
    let (ib, _) = b.to_int_primitive();
    let g = int_poly_gcd_primitive(&ia, &ib);
    Poly::from_int_coeffs(g).monic()
}
