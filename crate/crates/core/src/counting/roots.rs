//! Roots of complex polynomials.
//!
//! Two solvers: eigenvalues of the companion matrix (via a complex Schur
//! decomposition) and Ehrlich-Aberth simultaneous iteration. Both finish with
//! a short Newton polish and a backward-error check.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Relative backward error above which a root set is rejected.
pub const MAX_BACKWARD_ERROR: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootMethod {
    #[default]
    Companion,
    Aberth,
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = ZERO;
    let mut dp = ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `|P(z)| / Σ |c_k| |z|^k`, the componentwise backward error of a root.
pub fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner_with_derivative(coeffs, z);
    let scale = coeffs.iter().rev().fold(0.0, |acc, c| acc * z.norm() + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// All roots of `Σ c_k z^k`, with multiplicity. Trailing zero coefficients
/// are dropped; a constant polynomial has no roots.
pub fn polynomial_roots(coeffs: &[Complex64], method: RootMethod) -> Result<Vec<Complex64>> {
    let Some(deg) = coeffs.iter().rposition(|c| *c != ZERO) else {
        return Err(Error::Precondition("the zero polynomial has no isolated roots".into()));
    };
    let coeffs = &coeffs[..=deg];
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        return Ok(vec![-coeffs[0] / coeffs[1]]);
    }
    let mut roots = match method {
        RootMethod::Companion => companion_roots(coeffs).map_or_else(|| aberth_roots(coeffs), Ok)?,
        RootMethod::Aberth => aberth_roots(coeffs)?,
    };
    for z in roots.iter_mut() {
        polish(coeffs, z);
    }
    let worst = roots.iter().map(|&z| backward_error(coeffs, z)).fold(0.0, f64::max);
    if !(worst <= MAX_BACKWARD_ERROR) {
        return Err(Error::RootSolver { residual: worst });
    }
    Ok(roots)
}

fn polish(coeffs: &[Complex64], z: &mut Complex64) {
    let mut err = backward_error(coeffs, *z);
    for _ in 0..3 {
        let (p, dp) = horner_with_derivative(coeffs, *z);
        if dp == ZERO || p == ZERO {
            return;
        }
        let cand = *z - p / dp;
        let cand_err = backward_error(coeffs, cand);
        if cand_err < err {
            *z = cand;
            err = cand_err;
        } else {
            return;
        }
    }
}

fn companion_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = ONE;
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i] / lead;
    }
    let eig = m.schur().eigenvalues()?;
    Some(eig.iter().copied().collect())
}

fn aberth_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].norm();
    // Cauchy bound on the root moduli
    let bound = 1.0 + coeffs[..n].iter().map(|c| c.norm() / lead).fold(0.0, f64::max);
    let start = 0.5 * bound;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(start, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner_with_derivative(coeffs, z[k]);
            if p == ZERO {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 =
                (0..n).filter(|&j| j != k).map(|j| ONE / (z[k] - z[j])).sum();
            let step = ratio / (ONE - ratio * repulsion);
            z[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if max_step < 1e-15 {
            return Ok(z);
        }
    }
    let worst = z.iter().map(|&r| backward_error(coeffs, r)).fold(0.0, f64::max);
    if worst <= MAX_BACKWARD_ERROR {
        Ok(z)
    } else {
        Err(Error::RootSolver { residual: worst })
    }
}
