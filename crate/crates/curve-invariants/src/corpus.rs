//! Named example curves and deterministic random generators used by the
//! CLI builtins and the test suites.

use crate::curve::ParamCurve3;
use crate::invariants::{degeneracy, invariants, DegeneracyKind};
use exact_algebra::linalg::{Matrix3, Vector3};
use exact_algebra::{rat, rat_int, Field, Int, Poly, Rat, RatFunc, RatX, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The twisted cubic `(t, t^2, t^3)`.
pub fn twisted_cubic() -> ParamCurve3 {
    ParamCurve3::new(
        RatFunc::from_poly(Poly::from_ints(&[0, 1])),
        RatFunc::from_poly(Poly::from_ints(&[0, 0, 1])),
        RatFunc::from_poly(Poly::from_ints(&[0, 0, 0, 1])),
    )
}

/// The crunode curve `(t, t^2, t^3) / (t^4 + 1)`.
pub fn crunode() -> ParamCurve3 {
    let den = Poly::from_ints(&[1, 0, 0, 0, 1]);
    ParamCurve3::new(
        RatFunc::new(Poly::from_ints(&[0, 1]), den.clone()),
        RatFunc::new(Poly::from_ints(&[0, 0, 1]), den.clone()),
        RatFunc::new(Poly::from_ints(&[0, 0, 0, 1]), den),
    )
}

fn binomial(n: u64, k: u64) -> Int {
    let mut b = Int::from(1);
    for i in 0..k {
        b = b * Int::from(n - i) / Int::from(i + 1);
    }
    b
}

/// Daisy of degree `4j + 4`: with `u = (1-t^2)/(1+t^2)` and
/// `v = 2t/(1+t^2)`, the x and y components are
/// `u * S(u, v)` and `v * S(u, v)` where
/// `S = sum_i (-1)^i C(2j, 2i) u^(2j-2i) v^(2i)`, and
/// `z = (1 - t^(4j+4)) / (1 + t^(4j+4))`.
pub fn daisy(j: u32) -> ParamCurve3 {
    let den = Poly::from_ints(&[1, 0, 1]);
    let u = RatFunc::new(Poly::from_ints(&[1, 0, -1]), den.clone());
    let v = RatFunc::new(Poly::from_ints(&[0, 2]), den);
    let mut s = RatX::zero();
    for i in 0..=j {
        let coeff = binomial(2 * j as u64, 2 * i as u64);
        let sign = if i % 2 == 0 { coeff } else { -coeff };
        let term = pow_rf(&u, 2 * (j - i))
            .mul(&pow_rf(&v, 2 * i))
            .mul(&RatX::constant(Rat::from_integer(sign)));
        s = s.add(&term);
    }
    let m = 4 * j as usize + 4;
    let mut zn = vec![Rat::zero(); m + 1];
    let mut zd = vec![Rat::zero(); m + 1];
    zn[0] = rat_int(1);
    zn[m] = rat_int(-1);
    zd[0] = rat_int(1);
    zd[m] = rat_int(1);
    ParamCurve3::new(
        u.mul(&s),
        v.mul(&s),
        RatFunc::new(Poly::new(zn), Poly::new(zd)),
    )
}

fn pow_rf(f: &RatX, n: u32) -> RatX {
    let mut acc = RatX::one();
    for _ in 0..n {
        acc = acc.mul(f);
    }
    acc
}

fn random_int(rng: &mut ChaCha8Rng, bits: u32, nonzero: bool) -> Int {
    // magnitude at most 2^(bits-1)
    let bound = 1i64 << (bits.clamp(1, 32) - 1);
    loop {
        let v = rng.gen_range(-bound..=bound);
        if !nonzero || v != 0 {
            return Int::from(v);
        }
    }
}

/// Random curve with antisymmetric numerators and palindromic denominators
/// of even degree `m`, so that `x(1/t) = -x(t)` holds identically and the
/// curve has a central inversion about the origin. Coefficient magnitudes
/// stay below `2^(tau_bits - 1)`; output is deterministic in `seed`.
pub fn random_central_curve(m: usize, tau_bits: u32, seed: u64) -> ParamCurve3 {
    assert!(m >= 2 && m % 2 == 0, "degree must be even and at least 2");
    let mut attempt = 0u64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9e37)));
        let mut comp = Vec::with_capacity(3);
        for _ in 0..3 {
            let h = m / 2;
            let mut num = vec![Rat::zero(); m + 1];
            let mut den = vec![Rat::zero(); m + 1];
            for k in 0..h {
                let c = Rat::from_integer(random_int(&mut rng, tau_bits, k == 0));
                num[k] = c.clone();
                num[m - k] = -c;
            }
            // middle numerator coefficient is forced to zero by antisymmetry
            for k in 0..=h {
                let d = Rat::from_integer(random_int(&mut rng, tau_bits, k == 0));
                den[k] = d.clone();
                den[m - k] = d;
            }
            comp.push(RatFunc::new(Poly::new(num), Poly::new(den)));
        }
        let c = ParamCurve3::new(comp[0].clone(), comp[1].clone(), comp[2].clone());
        if let Ok(inv) = invariants(&c) {
            if degeneracy(&inv) == DegeneracyKind::NonDegenerate {
                return c;
            }
        }
        attempt += 1;
        assert!(attempt < 64, "failed to draw a nondegenerate curve");
    }
}

/// Random dense rational curve of degree at most `m`, deterministic in
/// `seed`, redrawn until nondegenerate.
pub fn random_curve(m: usize, tau_bits: u32, seed: u64) -> ParamCurve3 {
    assert!(m >= 2);
    let mut attempt = 0u64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x51d7)));
        let mut comp = Vec::with_capacity(3);
        for _ in 0..3 {
            let num: Vec<Rat> = (0..=m)
                .map(|k| Rat::from_integer(random_int(&mut rng, tau_bits, k == m)))
                .collect();
            let den: Vec<Rat> = (0..=m)
                .map(|k| Rat::from_integer(random_int(&mut rng, tau_bits, k == 0 || k == m)))
                .collect();
            comp.push(RatFunc::new(Poly::new(num), Poly::new(den)));
        }
        let c = ParamCurve3::new(comp[0].clone(), comp[1].clone(), comp[2].clone());
        if let Ok(inv) = invariants(&c) {
            if degeneracy(&inv) == DegeneracyKind::NonDegenerate {
                return c;
            }
        }
        attempt += 1;
        assert!(attempt < 64, "failed to draw a nondegenerate curve");
    }
}

/// Random rational linear fractional reparametrization with nonzero
/// determinant, deterministic in `seed`.
pub fn random_mobius(seed: u64) -> RatX {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = rng.gen_range(-5i64..=5);
        let b = rng.gen_range(-5i64..=5);
        let c = rng.gen_range(-5i64..=5);
        let d = rng.gen_range(-5i64..=5);
        if a * d - b * c != 0 {
            let num: UniPoly = Poly::from_ints(&[b, a]);
            let den: UniPoly = Poly::from_ints(&[d, c]);
            return RatFunc::new(num, den);
        }
    }
}

/// Random rational orthogonal matrix built from an integer quaternion;
/// `det_sign` of -1 composes with the reflection `z -> -z`.
pub fn random_orthogonal(seed: u64, det_sign: i32) -> Matrix3<Rat> {
    assert!(det_sign == 1 || det_sign == -1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b, c, d) = loop {
        let q: Vec<i64> = (0..4).map(|_| rng.gen_range(-5i64..=5)).collect();
        if q.iter().any(|&v| v != 0) {
            break (q[0], q[1], q[2], q[3]);
        }
    };
    let n = a * a + b * b + c * c + d * d;
    let e = |num: i64| rat(num, n);
    let rot = Matrix3::new([
        [
            e(a * a + b * b - c * c - d * d),
            e(2 * (b * c - a * d)),
            e(2 * (b * d + a * c)),
        ],
        [
            e(2 * (b * c + a * d)),
            e(a * a - b * b + c * c - d * d),
            e(2 * (c * d - a * b)),
        ],
        [
            e(2 * (b * d - a * c)),
            e(2 * (c * d + a * b)),
            e(a * a - b * b - c * c + d * d),
        ],
    ]);
    if det_sign == 1 {
        rot
    } else {
        let refl = Matrix3::new([
            [rat_int(1), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(1), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(-1)],
        ]);
        rot.mul(&refl)
    }
}

/// Random rational translation vector, deterministic in `seed`.
pub fn random_vector(seed: u64) -> Vector3<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let n = rng.gen_range(-9i64..=9);
        let d = rng.gen_range(1i64..=4);
        rat(n, d)
    };
    Vector3::new(draw(), draw(), draw())
}
