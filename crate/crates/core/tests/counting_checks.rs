use std::f64::consts::PI;

use cdop::counting::{
    counting, counting_disk_average, counting_exp, counting_polynomial, cov_residual, polynomial_roots, RootMethod,
};
use cdop::{Complex64, DiskQuadrature, SelfMap, SpaceParams};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn params(a: f64) -> SpaceParams {
    SpaceParams::new(a).unwrap()
}

#[test]
fn square_counts_both_square_roots() {
    let m = SelfMap::polynomial_real(&[0.0, 0.0, 1.0]).unwrap();
    let p = params(0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let w = Complex64::from_polar(0.9 * rng.gen::<f64>().sqrt().max(1e-3), rng.gen_range(0.0..2.0 * PI));
        let root = w.sqrt();
        let expected = 2.0 * (1.0 - root.norm_sqr()).sqrt();
        let got = counting(&m, p, w).unwrap().value;
        assert!((got - expected).abs() <= 1e-12, "{w}: {got} vs {expected}");
    }
}

#[test]
fn exp_map_first_term_and_rotation() {
    let p = params(0.75);
    // at |w| = 1/e the k = 0 term is (4 / 4)^α = 1
    let w = c((-1.0f64).exp(), 0.0);
    let v = counting_exp(p, w).unwrap().value;
    assert!(v > 1.0);
    for k in 0..8 {
        let rotated = counting_exp(p, w * Complex64::from_polar(1.0, k as f64)).unwrap().value;
        assert!((rotated - v).abs() <= 1e-13 * v);
    }
    assert!(counting_exp(params(0.5), w).is_err());
    assert!(counting_exp(params(0.3), w).is_err());
}

/// `Σ_{k=0}^{10⁶-1}` term by term, plus `∫_{10⁶ - 1/2}^∞` of the term as a
/// function of real `k`, from the binomial expansion of the integrand.
fn exp_brute_force(alpha: f64, modulus: f64) -> f64 {
    let l = modulus.ln();
    let cc = -4.0 * l;
    let b = (l - 1.0) * (l - 1.0);
    let q = 4.0 * PI * PI;
    let n = 1_000_000usize;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let y = (cc / (b + q * kf * kf)).powf(alpha) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let x = n as f64 - 0.5;
    let mut tail = 0.0;
    let mut binom = 1.0;
    for j in 0..20 {
        let e = 2.0 * alpha + 2.0 * j as f64;
        tail += binom * (b / q).powi(j) * x.powf(1.0 - e) / (e - 1.0);
        binom *= (-alpha - j as f64) / (j as f64 + 1.0);
    }
    sum + (cc / q).powf(alpha) * tail
}

#[test]
fn exp_map_matches_long_sum() {
    for (alpha, r) in [(0.75, 0.99), (0.75, 0.5), (0.6, 0.9), (0.9, 0.999)] {
        let brute = exp_brute_force(alpha, r);
        let v = counting_exp(params(alpha), c(r, 0.0)).unwrap().value;
        assert!((v - brute).abs() <= 1e-8 * brute, "α={alpha} |w|={r}: {v} vs {brute}");
    }
}

#[test]
fn sub_mean_value_constant_is_moderate() {
    let m = SelfMap::polynomial_real(&[0.0, 0.0, 1.0]).unwrap();
    let p = params(0.5);
    let q = DiskQuadrature::new(48, 96, 2.0).unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..12 {
        let r = 0.35 + 0.05 * i as f64;
        for j in 0..6 {
            let w = Complex64::from_polar(r, j as f64 * PI / 3.0 + 0.1);
            let avg = counting_disk_average(&m, p, w, 0.5 * (1.0 - r), &q).unwrap();
            worst = worst.max(counting(&m, p, w).unwrap().value / avg);
        }
    }
    println!("sub-mean-value constant: {worst:.4}");
    assert!(worst.is_finite() && worst < 50.0);
}

#[test]
fn conjugation_by_involution_stays_in_band() {
    let alpha = 0.5;
    let p = params(alpha);
    let beta = c(0.3, 0.0);
    let phi = SelfMap::polynomial_real(&[0.0, 0.0, 1.0]).unwrap();
    let inv = SelfMap::involution(beta).unwrap();
    let s = alpha + 2.0;
    let denom = (1.0 - beta.norm_sqr()).powf(s);
    let lo = (1.0 - beta.norm()).powf(2.0 * s) / denom;
    let hi = (1.0 + beta.norm()).powf(2.0 * s) / denom;
    let one = c(1.0, 0.0);
    for i in 1..10 {
        for j in 0..12 {
            let w = Complex64::from_polar(0.1 * i as f64, j as f64 * PI / 6.0);
            let u = inv.eval(w).unwrap();
            if u.norm() < 1e-9 {
                continue;
            }
            let left = counting(&phi, p, u).unwrap().value / (1.0 - u.norm_sqr()).powf(s);
            // φ_β ∘ φ = w  ⇔  (β - w) + (w conj(β) - 1) z² = 0
            let roots = polynomial_roots(&[beta - w, c(0.0, 0.0), w * beta.conj() - one], RootMethod::Companion)
                .unwrap();
            let n: f64 = roots.iter().filter(|z| z.norm() < 1.0).map(|z| (1.0 - z.norm_sqr()).powf(alpha)).sum();
            let right = n / (1.0 - w.norm_sqr()).powf(s);
            let ratio = left / right;
            assert!(ratio >= lo * (1.0 - 1e-12) && ratio <= hi * (1.0 + 1e-12), "{w}: {ratio} not in [{lo}, {hi}]");
        }
    }
}

#[test]
fn cov_examples() {
    let q = DiskQuadrature::default();
    let dil = SelfMap::dilation(c(0.5, 0.0)).unwrap();
    assert!(cov_residual(&dil, params(0.5), 1, &q).unwrap() <= 1e-3);
    let sq = SelfMap::polynomial_real(&[0.0, 0.0, 1.0]).unwrap();
    assert!(cov_residual(&sq, params(0.5), 0, &q).unwrap() <= 1e-3);
    let near_identity = SelfMap::dilation(c(0.999, 0.0)).unwrap();
    assert!(cov_residual(&near_identity, params(0.5), 0, &q).unwrap() <= 1e-6);
}

fn small_poly() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 2..=6).prop_map(|v| {
        let total: f64 = v.iter().map(|(a, b)| a.hypot(*b)).sum();
        v.into_iter().map(|(a, b)| c(a, b) * (0.95 / total)).collect()
    })
}

proptest! {
    #[test]
    fn root_methods_agree(coeffs in small_poly(), r in 0.0f64..0.99, t in 0.0f64..std::f64::consts::TAU) {
        let m = SelfMap::polynomial(coeffs).unwrap();
        let w = Complex64::from_polar(r, t);
        prop_assume!((w - m.at_origin()).norm() > 1e-6);
        let p = params(0.5);
        let a = counting_polynomial(&m, p, w, RootMethod::Companion).unwrap();
        let b = counting_polynomial(&m, p, w, RootMethod::Aberth).unwrap();
        prop_assert!(a.value >= 0.0);
        prop_assert!((a.value - b.value).abs() <= 1e-8 * (1.0 + a.value));
    }

    #[test]
    fn counting_vanishes_beyond_sup_bound(coeffs in small_poly(), t in 0.0f64..std::f64::consts::TAU, a in 0.05f64..0.95) {
        let m = SelfMap::polynomial(coeffs).unwrap();
        let rho = m.sup_norm_bound();
        let w = Complex64::from_polar(rho + 0.5 * (1.0 - rho), t);
        prop_assert_eq!(counting(&m, params(a), w).unwrap().value, 0.0);
    }
}
