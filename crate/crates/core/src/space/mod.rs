//! The weighted Dirichlet space `D_α`, `0 < α < 1`.
//!
//! Norms and inner products are the exact coefficient forms
//! `‖f‖² = Σ (n+1)^{1-α} |a_n|²`. The integral norm
//! `|f(0)|² + ∫ |f'|² dA_α` is only equivalent to it and is exposed for
//! comparison, never used as a substitute.

pub mod quadrature;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

pub use quadrature::{integrate_disk, try_integrate_disk, DiskQuadrature, Measure, QuadConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SpaceParams {
    alpha: f64,
}

impl SpaceParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(Self { alpha })
        } else {
            Err(Error::InvalidAlpha(alpha))
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `‖z^n‖² = (n+1)^{1-α}`.
    pub fn weight(&self, n: usize) -> f64 {
        ((n + 1) as f64).powf(1.0 - self.alpha)
    }

    /// `β(n) = (n+1)^{(1-α)/2}`.
    pub fn beta(&self, n: usize) -> f64 {
        ((n + 1) as f64).powf(0.5 * (1.0 - self.alpha))
    }
}

impl TryFrom<f64> for SpaceParams {
    type Error = Error;
    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

impl From<SpaceParams> for f64 {
    fn from(p: SpaceParams) -> f64 {
        p.alpha
    }
}

pub fn dirichlet_norm(f: &PowerSeries, p: SpaceParams) -> f64 {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| p.weight(n) * c.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// `Σ (n+1)^{1-α} a_n conj(b_n)` over the common truncation.
pub fn inner(f: &PowerSeries, g: &PowerSeries, p: SpaceParams) -> Complex64 {
    f.coeffs()
        .iter()
        .zip(g.coeffs())
        .enumerate()
        .map(|(n, (a, b))| a * b.conj() * p.weight(n))
        .sum()
}

fn check_in_disk(w: Complex64) -> Result<()> {
    if w.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk { point: w })
    }
}

/// Truncation order large enough for kernel expansions at `|w|` to reproduce
/// polynomials of degree `degree` to roughly machine precision.
pub fn kernel_order(w_abs: f64, degree: usize) -> usize {
    degree + 40 * (1.0 / (1.0 - w_abs)).ceil() as usize
}

/// Reproducing kernel `k_w(z) = Σ (conj(w) z)^n / (n+1)^{1-α}`, truncated.
pub fn kernel(w: Complex64, p: SpaceParams, order: usize) -> Result<PowerSeries> {
    check_in_disk(w)?;
    let wb = w.conj();
    let mut pow = Complex64::new(1.0, 0.0);
    let coeffs = (0..=order)
        .map(|n| {
            let c = pow / p.weight(n);
            pow *= wb;
            c
        })
        .collect();
    Ok(PowerSeries::new(coeffs))
}

/// Kernel for the first derivative, `Σ_{n≥1} n conj(w)^{n-1} z^n / (n+1)^{1-α}`.
pub fn dkernel(w: Complex64, p: SpaceParams, order: usize) -> Result<PowerSeries> {
    check_in_disk(w)?;
    let wb = w.conj();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    let mut pow = Complex64::new(1.0, 0.0);
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        *slot = pow * n as f64 / p.weight(n);
        pow *= wb;
    }
    Ok(PowerSeries::new(coeffs))
}

/// `‖k_w^{(1)}‖ = sqrt(Σ_{n≥1} n² |w|^{2(n-1)} / (n+1)^{1-α})`.
///
/// The sum starts at `n = 1`; the `n = 1` term `2^{α-1}` is what makes the
/// value at `w = 0` nonzero. Summation stops once the geometric majorant of
/// the tail drops below `1e-14`.
pub fn dkernel_norm(w: Complex64, p: SpaceParams) -> Result<f64> {
    check_in_disk(w)?;
    let x = w.norm_sqr();
    let mut sum = 0.0;
    let mut pow = 1.0;
    let mut n = 1usize;
    loop {
        let nf = n as f64;
        let term = nf * nf * pow / p.weight(n);
        sum += term;
        let q = ((nf + 1.0) / nf).powi(2) * x;
        if q < 1.0 && term * q / (1.0 - q) < 1e-14 {
            break;
        }
        pow *= x;
        n += 1;
    }
    Ok(sum.sqrt())
}

/// `sqrt(|f(0)|² + ∫_D |f'|² dA_α)` by quadrature.
pub fn equivalent_norm(f: &PowerSeries, p: SpaceParams, q: &DiskQuadrature) -> Result<f64> {
    let df = f.derive();
    let integral = integrate_disk(|z| df.evaluate(z).norm_sqr(), Measure::Weighted(p.alpha), q)?;
    Ok((f.coeff(0).norm_sqr() + integral).sqrt())
}
