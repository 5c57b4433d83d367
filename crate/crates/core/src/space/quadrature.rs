//! Tensor-product quadrature on a disk centred at the origin.
//!
//! Radial direction: Gauss-Legendre in `t` on `[0, 1]` pulled back through
//! `r = R (1 - (1 - t)^p)`, which packs nodes against the rim. Angular
//! direction: the uniform trapezoid rule, spectrally accurate for periodic
//! integrands. The area element is the normalized one, `dA = r dr dθ / π`,
//! so the unit disk has mass one.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_RADIAL: usize = 256;
pub const DEFAULT_ANGULAR: usize = 512;
pub const DEFAULT_CLUSTER_EXPONENT: f64 = 2.0;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// three-term recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Which area measure an integral is taken against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    /// Normalized Lebesgue measure `dA`.
    Plain,
    /// `dA_a(z) = (1 - |z|^2)^a dA(z)` with `a > -1`.
    Weighted(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub radial: usize,
    pub angular: usize,
    pub cluster_exponent: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            radial: DEFAULT_RADIAL,
            angular: DEFAULT_ANGULAR,
            cluster_exponent: DEFAULT_CLUSTER_EXPONENT,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiskQuadrature {
    config: QuadConfig,
    radius: f64,
    /// `(r_i, w_i)` with `w_i` already including the Jacobian, the `2r/π`
    /// polar factor and the angular step.
    rings: Vec<(f64, f64)>,
    angles: Vec<Complex64>,
}

impl Default for DiskQuadrature {
    fn default() -> Self {
        Self::from_config(&QuadConfig::default()).expect("default quadrature is valid")
    }
}

impl DiskQuadrature {
    pub fn new(radial: usize, angular: usize, cluster_exponent: f64) -> Result<Self> {
        Self::with_radius(radial, angular, cluster_exponent, 1.0)
    }

    pub fn from_config(cfg: &QuadConfig) -> Result<Self> {
        Self::new(cfg.radial, cfg.angular, cfg.cluster_exponent)
    }

    /// Quadrature over the disk `|z| < radius` (still normalized so that the
    /// unit disk would have mass one), clustering nodes near `radius`.
    pub fn with_radius(
        radial: usize,
        angular: usize,
        cluster_exponent: f64,
        radius: f64,
    ) -> Result<Self> {
        if radial == 0 || angular == 0 {
            return Err(Error::Precondition("quadrature resolution must be positive".into()));
        }
        if !(cluster_exponent >= 1.0) {
            return Err(Error::Precondition(format!(
                "cluster exponent must be >= 1, got {cluster_exponent}"
            )));
        }
        if !(radius > 0.0 && radius <= 1.0) {
            return Err(Error::Precondition(format!("quadrature radius {radius} not in (0, 1]")));
        }
        let (x, u) = gauss_legendre(radial);
        let p = cluster_exponent;
        let dtheta = 1.0 / angular as f64;
        let rings = x
            .iter()
            .zip(&u)
            .map(|(&xi, &ui)| {
                let t = 0.5 * (xi + 1.0);
                let s = 1.0 - t;
                let r = radius * (1.0 - s.powf(p));
                let jac = radius * p * s.powf(p - 1.0) * 0.5;
                // (1/π) r dr dθ with dθ = 2π/M
                (r, 2.0 * r * jac * ui * dtheta)
            })
            .collect();
        let angles = (0..angular)
            .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / angular as f64))
            .collect();
        Ok(Self {
            config: QuadConfig { radial, angular, cluster_exponent },
            radius,
            rings,
            angles,
        })
    }

    /// Same node pattern on the disk of radius `radius`.
    pub fn rescaled(&self, radius: f64) -> Result<Self> {
        Self::with_radius(
            self.config.radial,
            self.config.angular,
            self.config.cluster_exponent,
            radius,
        )
    }

    pub fn config(&self) -> &QuadConfig {
        &self.config
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn node_count(&self) -> usize {
        self.rings.len() * self.angles.len()
    }

    /// Radial nodes in increasing order.
    pub fn radial_nodes(&self) -> impl Iterator<Item = f64> + '_ {
        self.rings.iter().map(|(r, _)| *r)
    }
}

/// Integrates an infallible real function. See [`try_integrate_disk`].
pub fn integrate_disk<F>(g: F, measure: Measure, q: &DiskQuadrature) -> Result<f64>
where
    F: Fn(Complex64) -> f64 + Sync,
{
    try_integrate_disk(|z| Ok(g(z)), measure, q)
}

/// Quadrature sum approximating `∫ g dμ` over the quadrature disk.
///
/// Rings are evaluated in parallel; partial sums are combined in ring order so
/// the result does not depend on scheduling.
pub fn try_integrate_disk<F>(g: F, measure: Measure, q: &DiskQuadrature) -> Result<f64>
where
    F: Fn(Complex64) -> Result<f64> + Sync,
{
    if let Measure::Weighted(a) = measure {
        if !(a > -1.0) {
            return Err(Error::Precondition(format!("measure exponent {a} must exceed -1")));
        }
    }
    let ring_sums: Vec<Result<f64>> = q
        .rings
        .par_iter()
        .map(|&(r, w)| {
            let weight = match measure {
                Measure::Plain => 1.0,
                Measure::Weighted(a) => ((1.0 - r) * (1.0 + r)).powf(a),
            };
            let mut acc = 0.0;
            for &e in &q.angles {
                let z = e * r;
                let v = g(z)?;
                if !v.is_finite() {
                    return Err(Error::NonFinite { node: z });
                }
                acc += v;
            }
            Ok(acc * w * weight)
        })
        .collect();
    let mut total = 0.0;
    for s in ring_sums {
        total += s?;
    }
    Ok(total)
}
