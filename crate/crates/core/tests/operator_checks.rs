use cdop::operator::{
    apply, basis_e, build_matrix, closed_form_dilation_norm, operator_norm, tail_derivative_bound, tail_projection,
    test_function, test_function_order, DEFAULT_NORM_TOL,
};
use cdop::series::PowerSeries;
use cdop::space::dirichlet_norm;
use cdop::{Complex64, SelfMap, SpaceParams};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn params(a: f64) -> SpaceParams {
    SpaceParams::new(a).unwrap()
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| c(re, im))
}

proptest! {
    #[test]
    fn apply_is_derivative_after_map(
        f in prop::collection::vec(complex(), 1..12),
        phi in prop::collection::vec(complex(), 1..5),
        r in 0.0f64..0.5,
        t in 0.0f64..std::f64::consts::TAU,
    ) {
        let total: f64 = phi.iter().map(|z| z.norm()).sum();
        let phi: Vec<Complex64> = phi.into_iter().map(|z| z * (0.9 / total.max(0.9))).collect();
        let m = SelfMap::polynomial(phi.clone()).unwrap();
        let f = PowerSeries::new(f);
        let d = phi.len() - 1;
        let out = apply(&m, &f, (f.order().max(1) - 1) * d.max(1)).unwrap();
        let z = Complex64::from_polar(r, t);
        let expected = f.derive().evaluate(m.eval(z).unwrap());
        prop_assert!((out.evaluate(z) - expected).norm() <= 1e-8 * (1.0 + expected.norm()));
    }
}

#[test]
fn dilation_sends_basis_to_previous_basis_vector() {
    for a in [0.25, 0.5, 0.75] {
        let p = params(a);
        let r = 0.6;
        let m = SelfMap::dilation(c(r, 0.0)).unwrap();
        for n in 1..40usize {
            let img = apply(&m, &basis_e(n, p), n).unwrap();
            let nf = n as f64;
            let factor = nf.powf(0.5 * (3.0 - a)) * (nf + 1.0).powf(0.5 * (a - 1.0)) * r.powi(n as i32 - 1);
            let expected = basis_e(n - 1, p).scale(c(factor, 0.0));
            for k in 0..=n {
                assert!((img.coeff(k) - expected.coeff(k)).norm() <= 1e-13 * factor.max(1.0));
            }
        }
    }
}

#[test]
fn galerkin_norm_is_nondecreasing_and_converges() {
    let p = params(0.5);
    let m = SelfMap::dilation(c(0.85, 0.0)).unwrap();
    let exact = closed_form_dilation_norm(c(0.85, 0.0), p).unwrap().norm;
    let mut prev = 0.0;
    for n in [2, 4, 6, 8, 16, 50, 200] {
        let v = operator_norm(&build_matrix(&m, p, n, n).unwrap(), DEFAULT_NORM_TOL).unwrap();
        assert!(v >= prev - 1e-12, "N = {n}: {v} < {prev}");
        assert!(v <= exact + 1e-9);
        prev = v;
    }
    assert!((prev - exact).abs() <= 1e-6);
}

#[test]
fn basis_images_bound_the_truncated_norm() {
    let p = params(0.5);
    let maps = [
        SelfMap::polynomial_real(&[0.1, 0.3, 0.4]).unwrap(),
        SelfMap::lens(0.2).unwrap(),
        SelfMap::involution(c(0.3, 0.1)).unwrap(),
    ];
    for m in &maps {
        let n = 40;
        let mat = build_matrix(m, p, n, 2 * n).unwrap();
        let norm = operator_norm(&mat, DEFAULT_NORM_TOL).unwrap();
        let best = (0..=n)
            .map(|k| (0..=2 * n).map(|row| mat.entry(row, k).norm_sqr()).sum::<f64>().sqrt())
            .fold(0.0, f64::max);
        let direct = (1..=n)
            .map(|k| {
                let img = apply(m, &basis_e(k, p), 2 * n).unwrap();
                dirichlet_norm(&img, p)
            })
            .fold(0.0, f64::max);
        assert!((best - direct).abs() <= 1e-9 * direct, "{m}");
        assert!(direct <= norm + 1e-9, "{m}: {direct} > {norm}");
    }
}

/// `(R_n f)'(z)` for `|z| ≤ r` against `‖f‖ sqrt(S)` and `‖f‖ S`.
#[test]
fn tail_derivative_bound_needs_the_square_root() {
    let p = params(0.5);
    let r = 0.5;
    let order = 120;
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for n in [1usize, 3, 10, 25] {
        let bound = tail_derivative_bound(p, n, r).unwrap();
        for _ in 0..40 {
            let f = PowerSeries::new((0..=order).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect());
            let d = tail_projection(&f, n).derive();
            let norm = dirichlet_norm(&f, p);
            for j in 0..16 {
                let z = Complex64::from_polar(r, j as f64 * 0.4);
                assert!(d.evaluate(z).norm() <= norm * bound.sqrt_sum * (1.0 + 1e-12));
            }
        }
        // R_n keeps z^{n+1}, z^{n+2}, ...: Cauchy-Schwarz is sharp with the sum from n + 1
        let sharp = tail_derivative_bound(p, n + 1, r).unwrap();
        let extremal = PowerSeries::new(
            (0..=order)
                .map(|k| if k <= n { c(0.0, 0.0) } else { c(k as f64 * r.powi(k as i32 - 1) / p.weight(k), 0.0) })
                .collect(),
        );
        let value = tail_projection(&extremal, n).derive().evaluate(c(r, 0.0)).norm();
        let norm = dirichlet_norm(&extremal, p);
        assert!(value <= norm * bound.sqrt_sum * (1.0 + 1e-10));
        assert!((value - norm * sharp.sqrt_sum).abs() <= 1e-10 * value);
        if n == 10 {
            assert!(bound.sum < 1.0);
            assert!(value > norm * bound.sum, "printed form without the root would hold");
        }
    }
}

#[test]
fn test_functions_are_uniformly_bounded() {
    let p = params(0.5);
    let mut sup: f64 = 0.0;
    for i in 0..=19 {
        for j in 0..8 {
            let w = Complex64::from_polar(0.05 * i as f64, j as f64 * 0.785);
            let f = test_function(w, p, test_function_order(w.norm())).unwrap();
            sup = sup.max(dirichlet_norm(&f, p));
        }
    }
    assert!(sup < 10.0, "{sup}");
}
