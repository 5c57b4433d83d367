//! Dense truncated power series with complex coefficients.
//!
//! A [`PowerSeries`] of order `N` stores `c_0, ..., c_N` and stands for the
//! polynomial `c_0 + c_1 z + ... + c_N z^N`. Every binary operation truncates
//! to the smaller of the input orders, so the precision of a result is never
//! overstated.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the output order accepted by [`compose`].
pub const DEFAULT_COMPOSE_CAP: usize = 1 << 20;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series from its coefficients. An empty vector gives the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![ZERO; order + 1] }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c z^n` carried to order `max(order, n)`.
    pub fn monomial(n: usize, c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order.max(n));
        s.coeffs[n] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Index of the highest nonzero coefficient, `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != ZERO)
    }

    /// Cuts or zero-pads to exactly `order`.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        Self { coeffs }
    }

    pub fn derive(&self) -> Self {
        derive(self)
    }

    pub fn integrate_from_zero(&self) -> Self {
        integrate_from_zero(self)
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        evaluate(self, z)
    }

    pub fn scale(&self, a: Complex64) -> Self {
        scale(self, a)
    }

    /// Multiplicative inverse through the current order. Requires `c_0 != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 == ZERO {
            return Err(Error::Precondition(
                "reciprocal of a series with zero constant term".into(),
            ));
        }
        let n = self.order();
        let inv0 = ONE / c0;
        let mut out = vec![ZERO; n + 1];
        out[0] = inv0;
        for k in 1..=n {
            let mut acc = ZERO;
            for j in 1..=k {
                acc += self.coeffs[j] * out[k - j];
            }
            out[k] = -acc * inv0;
        }
        Ok(Self { coeffs: out })
    }

    /// `exp(self)` via the recurrence `n g_n = sum_k k h_k g_{n-k}`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let mut out = vec![ZERO; n + 1];
        out[0] = self.coeffs[0].exp();
        for m in 1..=n {
            let mut acc = ZERO;
            for k in 1..=m {
                acc += self.coeffs[k] * out[m - k] * k as f64;
            }
            out[m] = acc / m as f64;
        }
        Self { coeffs: out }
    }
}

impl PowerSeries {
    /// `self^a` for real `a` with the principal branch at `c_0 != 0`, by the
    /// recurrence `n h_0 g_n = Σ_k ((a+1) k - n) h_k g_{n-k}`.
    pub fn powf(&self, a: f64) -> Result<Self> {
        let h0 = self.coeffs[0];
        if h0 == ZERO {
            return Err(Error::Precondition("real power of a series with zero constant term".into()));
        }
        let n = self.order();
        let nonzero: Vec<(usize, Complex64)> =
            self.coeffs.iter().enumerate().skip(1).filter(|(_, c)| **c != ZERO).map(|(k, c)| (k, *c)).collect();
        let inv0 = ONE / h0;
        let mut out = vec![ZERO; n + 1];
        out[0] = h0.powf(a);
        for m in 1..=n {
            let mut acc = ZERO;
            for &(k, hk) in nonzero.iter().take_while(|(k, _)| *k <= m) {
                acc += hk * out[m - k] * ((a + 1.0) * k as f64 - m as f64);
            }
            out[m] = acc * inv0 / m as f64;
        }
        Ok(Self { coeffs: out })
    }
}

/// Termwise derivative; the order drops by one (order 0 stays order 0).
pub fn derive(f: &PowerSeries) -> PowerSeries {
    let n = f.order();
    if n == 0 {
        return PowerSeries::zero(0);
    }
    let coeffs = (0..n).map(|k| f.coeffs[k + 1] * (k + 1) as f64).collect();
    PowerSeries { coeffs }
}

/// Antiderivative vanishing at the origin; the order grows by one.
pub fn integrate_from_zero(f: &PowerSeries) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(f.coeffs.len() + 1);
    coeffs.push(ZERO);
    coeffs.extend(f.coeffs.iter().enumerate().map(|(k, c)| c / (k + 1) as f64));
    PowerSeries { coeffs }
}

/// Horner evaluation of the truncated polynomial.
pub fn evaluate(f: &PowerSeries, z: Complex64) -> Complex64 {
    f.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
}

pub fn add(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    let n = f.order().min(g.order());
    let coeffs = (0..=n).map(|k| f.coeffs[k] + g.coeffs[k]).collect();
    PowerSeries { coeffs }
}

pub fn scale(f: &PowerSeries, a: Complex64) -> PowerSeries {
    PowerSeries { coeffs: f.coeffs.iter().map(|c| c * a).collect() }
}

/// Cauchy product truncated to the smaller input order.
pub fn multiply(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    multiply_to(f, g, f.order().min(g.order()))
}

/// Cauchy product truncated to an explicit order. Zero coefficients of the
/// sparser factor are skipped, so products with low-degree maps stay linear
/// in `order`.
pub(crate) fn multiply_to(f: &PowerSeries, g: &PowerSeries, order: usize) -> PowerSeries {
    let nnz = |s: &PowerSeries| s.coeffs.iter().filter(|c| **c != ZERO).count();
    let (sparse, dense) = if nnz(f) <= nnz(g) { (f, g) } else { (g, f) };
    let mut out = vec![ZERO; order + 1];
    for (i, &a) in sparse.coeffs.iter().enumerate().take(order + 1) {
        if a == ZERO {
            continue;
        }
        let upper = (order - i).min(dense.order());
        for (j, &b) in dense.coeffs[..=upper].iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    PowerSeries { coeffs: out }
}

/// Coefficients of `f(g(z))` through degree `out_order`, using the default cap.
pub fn compose(f: &PowerSeries, g: &PowerSeries, out_order: usize) -> Result<PowerSeries> {
    compose_with_cap(f, g, out_order, DEFAULT_COMPOSE_CAP)
}

/// Formal composition by nested multiply-truncate (Horner in `g`).
///
/// No analyticity check is made; `g(0)` may be nonzero, in which case the
/// result is the formal truncated composition.
pub fn compose_with_cap(
    f: &PowerSeries,
    g: &PowerSeries,
    out_order: usize,
    cap: usize,
) -> Result<PowerSeries> {
    if out_order > cap {
        return Err(Error::OrderCap { requested: out_order, cap });
    }
    let g = g.with_order(out_order);

    // g = c z: coefficients scale by c^n.
    let pure_linear = g.coeffs[0] == ZERO
        && g.coeffs.iter().skip(2).all(|c| *c == ZERO)
        && out_order >= 1;
    if pure_linear {
        let c = g.coeffs[1];
        let mut out = vec![ZERO; out_order + 1];
        let mut pow = ONE;
        for (k, slot) in out.iter_mut().enumerate() {
            if k > f.order() {
                break;
            }
            *slot = f.coeffs[k] * pow;
            pow *= c;
        }
        return Ok(PowerSeries { coeffs: out });
    }

    let mut acc = PowerSeries::zero(out_order);
    for &c in f.coeffs.iter().rev() {
        acc = multiply_to(&acc, &g, out_order);
        acc.coeffs[0] += c;
    }
    Ok(acc)
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        add(self, &-rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        scale(self, -ONE)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        multiply(self, rhs)
    }
}
