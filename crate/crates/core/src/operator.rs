//! The operator `D_φ f = f' ∘ φ` on `D_α`.
//!
//! Functions are power series; the operator acts by differentiating and
//! composing. Its Galerkin truncation is written in the orthonormal basis
//! `e_n(z) = (n+1)^{(α-1)/2} z^n`, where
//! `D_φ e_n = n (n+1)^{(α-1)/2} φ^{n-1}`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::SelfMap;
use crate::series::{self, compose, PowerSeries};
use crate::space::{self, dirichlet_norm, DiskQuadrature, Measure, SpaceParams};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Largest `(N+1)(M+1)` accepted by [`build_matrix`].
pub const MATRIX_ENTRY_CAP: usize = 4_000_000;
pub const DEFAULT_MATRIX_ORDER: usize = 200;
pub const DEFAULT_HS_TERMS: usize = 2000;
pub const DEFAULT_NORM_TOL: f64 = 1e-14;
pub const MAX_POWER_ITERATIONS: usize = 500_000;

/// `e_n(z) = (n+1)^{(α-1)/2} z^n`, unit norm in `D_α`.
pub fn basis_e(n: usize, p: SpaceParams) -> PowerSeries {
    let c = ((n + 1) as f64).powf(0.5 * (p.alpha() - 1.0));
    PowerSeries::monomial(n, Complex64::new(c, 0.0), n)
}

/// `D_φ f = f' ∘ φ`, truncated at `out_order`.
pub fn apply(m: &SelfMap, f: &PowerSeries, out_order: usize) -> Result<PowerSeries> {
    let phi = m.as_series(out_order)?;
    compose(&f.derive(), &phi, out_order)
}

/// Successive powers `φ^0, φ^1, ...` truncated at a fixed order.
struct Powers {
    phi: PowerSeries,
    current: PowerSeries,
    order: usize,
}

impl Powers {
    fn new(m: &SelfMap, order: usize) -> Result<Self> {
        Ok(Self {
            phi: m.as_series(order)?,
            current: PowerSeries::constant(ONE, order),
            order,
        })
    }
}

impl Iterator for Powers {
    type Item = PowerSeries;
    fn next(&mut self) -> Option<PowerSeries> {
        let next = series::multiply_to(&self.current, &self.phi, self.order);
        Some(std::mem::replace(&mut self.current, next))
    }
}

#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    /// `entries[(m, n)]` is the `e_m` coefficient of `D_φ e_n`.
    pub entries: DMatrix<Complex64>,
    pub alpha: f64,
    pub map: SelfMap,
    pub col_order: usize,
    pub row_order: usize,
}

impl OperatorMatrix {
    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        self.entries[(m, n)]
    }
}

/// Galerkin truncation of `D_φ`: columns `e_0..e_N`, rows `e_0..e_M`.
pub fn build_matrix(m: &SelfMap, p: SpaceParams, cols: usize, rows: usize) -> Result<OperatorMatrix> {
    let size = (cols + 1).saturating_mul(rows + 1);
    if size > MATRIX_ENTRY_CAP {
        return Err(Error::OrderCap { requested: size, cap: MATRIX_ENTRY_CAP });
    }
    let alpha = p.alpha();
    let mut entries = DMatrix::<Complex64>::zeros(rows + 1, cols + 1);
    let row_scale: Vec<f64> = (0..=rows).map(|k| p.beta(k)).collect();
    // column n uses φ^{n-1}
    for (k, power) in Powers::new(m, rows)?.take(cols).enumerate() {
        let n = k + 1;
        let c = n as f64 * ((n + 1) as f64).powf(0.5 * (alpha - 1.0));
        for (row, coeff) in power.coeffs().iter().enumerate() {
            entries[(row, n)] = coeff * c * row_scale[row];
        }
    }
    Ok(OperatorMatrix { entries, alpha, map: m.clone(), col_order: cols, row_order: rows })
}

/// Largest singular value by power iteration on `A^H A`, started from the
/// normalized all-ones vector and stopped when the Rayleigh quotient changes
/// by less than `tol` relative.
pub fn operator_norm(mat: &OperatorMatrix, tol: f64) -> Result<f64> {
    matrix_norm(&mat.entries, tol)
}

pub fn matrix_norm(a: &DMatrix<Complex64>, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let (rows, cols) = a.shape();
    let nonzeros: Vec<(usize, usize, Complex64)> = (0..cols)
        .flat_map(|j| (0..rows).map(move |i| (i, j)))
        .filter_map(|(i, j)| {
            let v = a[(i, j)];
            (v != ZERO).then_some((i, j, v))
        })
        .collect();
    if nonzeros.is_empty() {
        return Ok(0.0);
    }
    let mut v = vec![Complex64::new(1.0 / (cols as f64).sqrt(), 0.0); cols];
    let mut y = vec![ZERO; rows];
    let mut z = vec![ZERO; cols];
    let mut previous = 0.0;
    for _ in 0..MAX_POWER_ITERATIONS {
        y.iter_mut().for_each(|x| *x = ZERO);
        for &(i, j, val) in &nonzeros {
            y[i] += val * v[j];
        }
        z.iter_mut().for_each(|x| *x = ZERO);
        for &(i, j, val) in &nonzeros {
            z[j] += val.conj() * y[i];
        }
        // Rayleigh quotient of A^H A at the unit vector v
        let rayleigh: f64 = y.iter().map(|x| x.norm_sqr()).sum();
        let znorm = z.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if znorm == 0.0 {
            return Ok(0.0);
        }
        for (vi, zi) in v.iter_mut().zip(&z) {
            *vi = zi / znorm;
        }
        if (rayleigh - previous).abs() <= tol * rayleigh {
            return Ok(rayleigh.sqrt());
        }
        previous = rayleigh;
    }
    Err(Error::NonConvergence { iterations: MAX_POWER_ITERATIONS, last: previous.sqrt() })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormNormResult {
    pub x0: f64,
    pub eta: u64,
    pub norm: f64,
    pub f_at_floor: f64,
    pub f_at_floor_plus_one: f64,
}

/// `x^{(3-α)/2} (x+1)^{(α-1)/2} |r|^{x-1}`, the norm of `D_φ e_x` for the
/// dilation `φ(z) = r z` at integer `x`.
pub fn dilation_profile(x: f64, r_abs: f64, alpha: f64) -> f64 {
    x.powf(0.5 * (3.0 - alpha)) * (x + 1.0).powf(0.5 * (alpha - 1.0)) * r_abs.powf(x - 1.0)
}

/// Exact `‖D_φ‖` for `φ(z) = r z`: the maximum of [`dilation_profile`] over
/// the positive integers, located from the critical point
/// `x₀ = (-(1 + log|r|) - sqrt((1 + log|r|)² - 2(3-α) log|r|)) / (2 log|r|)`.
pub fn closed_form_dilation_norm(r: Complex64, p: SpaceParams) -> Result<ClosedFormNormResult> {
    let r_abs = r.norm();
    if !(r_abs > 0.0 && r_abs < 1.0) {
        return Err(Error::Precondition(format!("dilation factor |r| = {r_abs} not in (0, 1)")));
    }
    let alpha = p.alpha();
    let l = r_abs.ln();
    let x0 = (-(1.0 + l) - ((1.0 + l).powi(2) - 2.0 * (3.0 - alpha) * l).sqrt()) / (2.0 * l);
    let floor = x0.floor();
    // f(0) = 0, so x₀ < 1 selects η = 1
    let f_floor = dilation_profile(floor, r_abs, alpha);
    let f_next = dilation_profile(floor + 1.0, r_abs, alpha);
    let (eta, norm) = if f_floor < f_next { (floor + 1.0, f_next) } else { (floor, f_floor) };
    Ok(ClosedFormNormResult {
        x0,
        eta: eta as u64,
        norm,
        f_at_floor: f_floor,
        f_at_floor_plus_one: f_next,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HsNormResult {
    pub norm: f64,
    /// `‖D_φ e_N‖`, a truncation indicator.
    pub last_term: f64,
    pub terms: usize,
    pub series_order: usize,
}

/// Series order for `φ^{n-1}` with `n ≤ terms`: exact for polynomial maps,
/// four times the term count otherwise.
fn hs_series_order(m: &SelfMap, terms: usize) -> usize {
    match m.polynomial_degree() {
        Some(d) => (d * terms.saturating_sub(1)).max(1),
        None => 4 * terms,
    }
}

/// `sqrt(Σ_{n=1}^{N} ‖D_φ e_n‖²)`, the Hilbert-Schmidt norm of `D_φ`
/// restricted to the first `N` basis vectors.
pub fn hs_norm_basis(m: &SelfMap, p: SpaceParams, terms: usize) -> Result<HsNormResult> {
    let order = hs_series_order(m, terms);
    let alpha = p.alpha();
    let mut total = 0.0;
    let mut last = 0.0;
    for (k, power) in Powers::new(m, order)?.take(terms).enumerate() {
        let n = (k + 1) as f64;
        let scale = n * n * (n + 1.0).powf(alpha - 1.0);
        last = scale * dirichlet_norm(&power, p).powi(2);
        total += last;
    }
    Ok(HsNormResult { norm: total.sqrt(), last_term: last.sqrt(), terms, series_order: order })
}

fn hs_integrand_reliable(m: &SelfMap) -> bool {
    m.sup_norm_bound() < 1.0
}

/// `sqrt(∫ |φ'|² / (1 - |φ|²)^{α+4} dA_α)` by disk quadrature.
///
/// Reliable only when `sup|φ| < 1`; otherwise the integrand is unbounded near
/// the circle and a warning is returned alongside the value.
pub fn hs_norm_integral(m: &SelfMap, p: SpaceParams, q: &DiskQuadrature) -> Result<f64> {
    hs_norm_integral_checked(m, p, q).map(|(v, _)| v)
}

pub fn hs_norm_integral_checked(
    m: &SelfMap,
    p: SpaceParams,
    q: &DiskQuadrature,
) -> Result<(f64, Option<String>)> {
    let warning = (!hs_integrand_reliable(m)).then(|| {
        format!("sup|φ| bound for {m} is 1; quadrature of the Hilbert-Schmidt integral is unreliable")
    });
    let s = p.alpha() + 4.0;
    let value = space::try_integrate_disk(
        |z| {
            let w = m.eval(z)?;
            Ok(m.eval_derivative(z)?.norm_sqr() / (1.0 - w.norm_sqr()).powf(s))
        },
        Measure::Weighted(p.alpha()),
        q,
    )?;
    Ok((value.sqrt(), warning))
}

/// The same integral as [`hs_norm_integral`] by coefficients: expanding
/// `(1 - x)^{-(α+4)} = Σ C_n x^n` gives
/// `Σ_n C_n Σ_k |[φ' φ^n]_k|² B(k+1, α+1)`, using
/// `∫ |z|^{2k} dA_α = B(k+1, α+1)`. Needs a polynomial map with `sup|φ| < 1`.
pub fn hs_integral_series(m: &SelfMap, p: SpaceParams) -> Result<f64> {
    let Some(d) = m.polynomial_degree() else {
        return Err(Error::UnsupportedVariant { op: "hs_integral_series", variant: m.variant_name() });
    };
    let rho = m.sup_norm_bound();
    if !(rho < 1.0) {
        return Err(Error::Precondition(format!("hs_integral_series needs sup|φ| < 1 for {m}")));
    }
    let alpha = p.alpha();
    let s = alpha + 4.0;
    let phi = m.as_series(d)?;
    let dphi = phi.derive();
    // beta[k] = B(k+1, α+1)
    let mut beta = vec![1.0 / (alpha + 1.0)];
    let mut total = 0.0;
    let mut c_n = 1.0;
    let mut power = PowerSeries::constant(ONE, 0);
    for n in 0..1_000_000usize {
        let order = d * n + d.saturating_sub(1);
        let g = series::multiply_to(&dphi, &power, order);
        while beta.len() <= order {
            let k = beta.len() as f64;
            let next = beta[beta.len() - 1] * k / (k + alpha + 1.0);
            beta.push(next);
        }
        let inner: f64 = g.coeffs().iter().zip(&beta).map(|(c, b)| c.norm_sqr() * b).sum();
        let term = c_n * inner;
        total += term;
        // term_n ≲ C_n ρ^{2n}; stop once the geometric majorant is negligible
        let majorant = c_n * rho.powi(2 * n as i32) * (n as f64 + 1.0);
        if n > 8 && term <= 1e-17 * total && majorant <= 1e-15 * total {
            break;
        }
        power = series::multiply_to(&power, &phi, d * (n + 1));
        c_n *= (n as f64 + s) / (n as f64 + 1.0);
    }
    Ok(total.sqrt())
}

/// `R_n f`: drops the coefficients of `z^0, ..., z^n`.
pub fn tail_projection(f: &PowerSeries, n: usize) -> PowerSeries {
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &c)| if k <= n { ZERO } else { c })
        .collect();
    PowerSeries::new(coeffs)
}

/// `S = Σ_{k≥n} k² r^{2k-2} / β(k)²` together with `sqrt(S)`. By
/// Cauchy-Schwarz `|(R_n f)'(z)| ≤ ‖f‖ sqrt(S)` for `|z| ≤ r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailBound {
    pub sum: f64,
    pub sqrt_sum: f64,
}

pub fn tail_derivative_bound(p: SpaceParams, n: usize, r: f64) -> Result<TailBound> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Precondition(format!("radius {r} not in [0, 1)")));
    }
    let x = r * r;
    let mut sum = 0.0;
    let mut k = n.max(1);
    loop {
        let kf = k as f64;
        let term = kf * kf * x.powi(k as i32 - 1) / p.weight(k);
        sum += term;
        let q = ((kf + 1.0) / kf).powi(2) * x;
        if term == 0.0 || (q < 1.0 && term * q / (1.0 - q) < 1e-17 * sum) {
            break;
        }
        k += 1;
    }
    Ok(TailBound { sum, sqrt_sum: sum.sqrt() })
}

/// `f_w(z) = (1-|w|²)^{(2+α)/2} ∫_0^z (1 - conj(w) ξ)^{-(α+2)} dξ`, from the
/// binomial series of the integrand through degree `order - 1`.
pub fn test_function(w: Complex64, p: SpaceParams, order: usize) -> Result<PowerSeries> {
    if !(w.norm() < 1.0) {
        return Err(Error::OutsideDisk { point: w });
    }
    let s = p.alpha() + 2.0;
    let scale = (1.0 - w.norm_sqr()).powf(0.5 * s);
    let wb = w.conj();
    let mut coeffs = Vec::with_capacity(order.max(1));
    let mut c = Complex64::new(scale, 0.0);
    for n in 0..order.max(1) {
        coeffs.push(c);
        c *= wb * ((n as f64 + s) / (n as f64 + 1.0));
    }
    Ok(PowerSeries::new(coeffs).integrate_from_zero())
}

/// Default truncation for `f_w`: `40 / (1 - |w|)` terms.
pub fn test_function_order(w_abs: f64) -> usize {
    space::kernel_order(w_abs, 1)
}

/// Output order for `D_φ f_w`: exact-rate for polynomial maps with
/// `sup|φ| < 1`, `40 / (1 - |w|)` otherwise.
pub fn test_image_order(m: &SelfMap, w_abs: f64) -> usize {
    match m.polynomial_degree() {
        Some(d) => d.max(1) * space::kernel_order(m.sup_norm_bound() * w_abs, 1),
        None => test_function_order(w_abs),
    }
}

/// `‖D_φ f_w‖`, using `D_φ f_w = (1-|w|²)^{(2+α)/2} (1 - conj(w) φ)^{-(α+2)}`.
/// Returns [`Error::OrderCap`] when the needed order exceeds `max_order`.
pub fn test_image_norm(m: &SelfMap, p: SpaceParams, w: Complex64, max_order: usize) -> Result<f64> {
    let order = test_image_order(m, w.norm());
    if order > max_order {
        return Err(Error::OrderCap { requested: order, cap: max_order });
    }
    test_image_norm_from_series(&m.as_series(order)?, p, w)
}

/// As [`test_image_norm`] with `φ` given as a series; the output order is
/// that of `phi`.
pub fn test_image_norm_from_series(phi: &PowerSeries, p: SpaceParams, w: Complex64) -> Result<f64> {
    if !(w.norm() < 1.0) {
        return Err(Error::OutsideDisk { point: w });
    }
    let s = p.alpha() + 2.0;
    let h = &PowerSeries::constant(ONE, phi.order()) - &phi.scale(w.conj());
    let image = h.powf(-s)?.scale(Complex64::new((1.0 - w.norm_sqr()).powf(0.5 * s), 0.0));
    Ok(dirichlet_norm(&image, p))
}

/// Squared HS series for the dilation, summed directly.
pub fn dilation_hs_series(r_abs: f64, alpha: f64, terms: usize) -> f64 {
    (1..=terms)
        .map(|n| {
            let nf = n as f64;
            nf.powf(3.0 - alpha) * (nf + 1.0).powf(alpha - 1.0) * r_abs.powf(2.0 * (nf - 1.0))
        })
        .sum::<f64>()
        .sqrt()
}
