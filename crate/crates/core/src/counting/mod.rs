//! The generalized Nevanlinna counting function
//! `N_{φ,α}(w) = Σ_{φ(z)=w} (1 - |z|²)^α`, preimages counted with multiplicity.
//!
//! Three routes, picked by map variant:
//!
//! * univalent maps (dilation, automorphism, lens, affine polynomial) invert
//!   in closed form;
//! * polynomials solve `φ(z) - w = 0`;
//! * the singular inner map `exp((z+1)/(z-1))` uses an explicit series over
//!   its preimages.

pub mod roots;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::SelfMap;
use crate::space::{try_integrate_disk, DiskQuadrature, Measure, SpaceParams};

pub use roots::{polynomial_roots, RootMethod};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Preimages with `| |z| - 1 | <` this are dropped and the sample is flagged.
pub const BOUNDARY_BAND: f64 = 1e-10;

/// Relative accuracy targeted by the exp-map series.
pub const EXP_SERIES_RTOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountingRoute {
    UnivalentClosedForm,
    PolynomialRoots,
    ExpSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CountingSample {
    pub w: Complex64,
    pub value: f64,
    pub route: CountingRoute,
    /// Set when a preimage sat within [`BOUNDARY_BAND`] of the unit circle.
    pub boundary_ambiguous: bool,
}

fn check_w(m: &SelfMap, w: Complex64) -> Result<()> {
    if !(w.norm() < 1.0) {
        return Err(Error::OutsideDisk { point: w });
    }
    if (w - m.at_origin()).norm() <= 1e-15 {
        return Err(Error::Precondition(format!(
            "counting function is not defined at w = φ(0) = {}",
            m.at_origin()
        )));
    }
    Ok(())
}

/// `N_{φ,α}(w)` by whichever route suits the variant of `m`.
pub fn counting(m: &SelfMap, p: SpaceParams, w: Complex64) -> Result<CountingSample> {
    match m {
        SelfMap::SingularExp => counting_exp(p, w),
        SelfMap::Polynomial { .. } if !m.is_univalent() => {
            counting_polynomial(m, p, w, RootMethod::Companion)
        }
        _ => counting_univalent(m, p, w),
    }
}

/// Closed-form inverse for univalent maps; `(1 - |φ^{-1}(w)|²)^α` or zero
/// when `w` is outside the image.
pub fn counting_univalent(m: &SelfMap, p: SpaceParams, w: Complex64) -> Result<CountingSample> {
    if !m.is_univalent() {
        return Err(Error::UnsupportedVariant { op: "counting_univalent", variant: m.variant_name() });
    }
    check_w(m, w)?;
    // one_minus: 1 - |z|² for the unique preimage z (nonpositive if none)
    let one_minus = match m {
        SelfMap::Dilation { r } => 1.0 - (w / r).norm_sqr(),
        SelfMap::Automorphism { eta, beta } => {
            // z = φ_β(conj(η) w); use the exact disk identity for 1 - |z|²
            let u = eta.conj() * w;
            (1.0 - beta.norm_sqr()) * (1.0 - u.norm_sqr()) / (ONE - beta.conj() * u).norm_sqr()
        }
        SelfMap::Lens { delta } => {
            let sigma = (ONE + w) / (ONE - w);
            if sigma.arg().abs() / delta >= 0.5 * PI {
                0.0
            } else {
                let s = sigma.powf(1.0 / delta);
                4.0 * s.re / (s + ONE).norm_sqr()
            }
        }
        SelfMap::Polynomial { coeffs } => {
            let z = (w - coeffs[0]) / coeffs[1];
            1.0 - z.norm_sqr()
        }
        SelfMap::SingularExp => unreachable!("not univalent"),
    };
    let value = if one_minus > 0.0 { one_minus.powf(p.alpha()) } else { 0.0 };
    Ok(CountingSample {
        w,
        value,
        route: CountingRoute::UnivalentClosedForm,
        boundary_ambiguous: one_minus.abs() < BOUNDARY_BAND,
    })
}

/// Sum over the roots of `φ(z) - w` inside the disk, with multiplicity.
pub fn counting_polynomial(
    m: &SelfMap,
    p: SpaceParams,
    w: Complex64,
    method: RootMethod,
) -> Result<CountingSample> {
    let SelfMap::Polynomial { coeffs } = m else {
        return Err(Error::UnsupportedVariant { op: "counting_polynomial", variant: m.variant_name() });
    };
    if m.polynomial_degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition("counting needs a polynomial of degree >= 1".into()));
    }
    check_w(m, w)?;
    let mut shifted = coeffs.clone();
    shifted[0] -= w;
    let roots = polynomial_roots(&shifted, method)?;
    let mut value = 0.0;
    let mut boundary_ambiguous = false;
    for z in roots {
        let modulus = z.norm();
        if (modulus - 1.0).abs() < BOUNDARY_BAND {
            boundary_ambiguous = true;
        } else if modulus < 1.0 {
            value += ((1.0 - modulus) * (1.0 + modulus)).powf(p.alpha());
        }
    }
    Ok(CountingSample { w, value, route: CountingRoute::PolynomialRoots, boundary_ambiguous })
}

/// Hurwitz zeta `ζ(s, a) = Σ_{k≥0} (k + a)^{-s}` for `s > 1` and large `a`,
/// by Euler-Maclaurin with six Bernoulli corrections.
fn hurwitz_zeta_large_a(s: f64, a: f64) -> f64 {
    const B2K_OVER_FACT: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
    ];
    let mut total = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // rising factorial s (s+1) ... (s+2j-2) times a^{-s-2j+1}
    let mut rising = s;
    let mut apow = a.powf(-s - 1.0);
    for (j, b) in B2K_OVER_FACT.iter().enumerate() {
        total += b * rising * apow;
        let k = 2.0 * j as f64;
        rising *= (s + k + 1.0) * (s + k + 2.0);
        apow /= a * a;
    }
    total
}

/// `N_{φ,α}(w)` for `φ(z) = exp((z+1)/(z-1))` as the series
/// `Σ_{k≥0} (-4 log|w| / ((log|w| - 1)² + 4π² k²))^α`, convergent for
/// `α > 1/2`.
///
/// The first `K` terms are summed directly; the remainder is expanded as
/// `(c/4π²)^α Σ_j C(-α, j) (b/4π²)^j ζ(2α + 2j, K + 1)` with `c = -4 log|w|`,
/// `b = (log|w| - 1)²`, which converges geometrically once `b ≪ 4π²K²`.
pub fn counting_exp(p: SpaceParams, w: Complex64) -> Result<CountingSample> {
    let alpha = p.alpha();
    if alpha <= 0.5 {
        return Err(Error::DivergentSeries { alpha });
    }
    let modulus = w.norm();
    if !(modulus < 1.0) {
        return Err(Error::OutsideDisk { point: w });
    }
    if modulus == 0.0 {
        return Err(Error::Precondition("w = 0 is not attained by exp((z+1)/(z-1))".into()));
    }
    let log_w = modulus.ln();
    let c = -4.0 * log_w;
    let b = (log_w - 1.0) * (log_w - 1.0);
    let four_pi2 = 4.0 * PI * PI;
    let term = |k: f64| (c / (b + four_pi2 * k * k)).powf(alpha);

    let cutoff = 64usize.max((10.0 * b.sqrt() / (2.0 * PI)).ceil() as usize);
    let head: f64 = (0..=cutoff).map(|k| term(k as f64)).sum();

    let u = b / four_pi2;
    let a = (cutoff + 1) as f64;
    let prefactor = (c / four_pi2).powf(alpha);
    let mut tail = 0.0;
    let mut binom = 1.0; // C(-α, j)
    let mut upow = 1.0;
    for j in 0..40 {
        let piece = binom * upow * hurwitz_zeta_large_a(2.0 * alpha + 2.0 * j as f64, a);
        tail += piece;
        if piece.abs() < 1e-3 * EXP_SERIES_RTOL * tail.abs() {
            break;
        }
        binom *= (-alpha - j as f64) / (j as f64 + 1.0);
        upow *= u;
    }
    Ok(CountingSample {
        w,
        value: head + prefactor * tail,
        route: CountingRoute::ExpSeries,
        boundary_ambiguous: false,
    })
}

/// Both sides of the change-of-variable identity
/// `∫ f(φ(z)) |φ'(z)|² dA_α(z) = ∫ f(w) N_{φ,α}(w) dA(w)` for the test
/// function `f(w) = (1 - |w|²)^m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

pub fn cov_check(
    m: &SelfMap,
    p: SpaceParams,
    test_exponent: u32,
    q: &DiskQuadrature,
) -> Result<CovCheck> {
    let countable = match m {
        SelfMap::Dilation { .. } => true,
        SelfMap::Polynomial { .. } => m.polynomial_degree().unwrap_or(0) >= 1,
        _ => false,
    };
    if !countable {
        return Err(Error::UnsupportedVariant { op: "cov_residual", variant: m.variant_name() });
    }
    let f = |w: Complex64| (1.0 - w.norm_sqr()).powi(test_exponent as i32);
    let lhs = try_integrate_disk(
        |z| Ok(f(m.eval(z)?) * m.eval_derivative(z)?.norm_sqr()),
        Measure::Weighted(p.alpha()),
        q,
    )?;
    // N vanishes outside |w| ≤ sup|φ|, so the image side only needs that disk.
    let image_q = q.rescaled(m.sup_norm_bound())?;
    let origin = m.at_origin();
    let rhs = try_integrate_disk(
        |w| {
            if (w - origin).norm() <= 1e-15 {
                return Ok(0.0);
            }
            Ok(f(w) * counting(m, p, w)?.value)
        },
        Measure::Plain,
        &image_q,
    )?;
    Ok(CovCheck { lhs, rhs, residual: (lhs - rhs).abs() / rhs.abs() })
}

/// Relative residual `|LHS - RHS| / RHS` of the change-of-variable identity.
pub fn cov_residual(
    m: &SelfMap,
    p: SpaceParams,
    test_exponent: u32,
    q: &DiskQuadrature,
) -> Result<f64> {
    cov_check(m, p, test_exponent, q).map(|c| c.residual)
}

/// Average of `N_{φ,α}` over the disk of the given radius about `center`
/// (normalized area measure). The point `φ(0)` is skipped.
pub fn counting_disk_average(
    m: &SelfMap,
    p: SpaceParams,
    center: Complex64,
    radius: f64,
    q: &DiskQuadrature,
) -> Result<f64> {
    if !(radius > 0.0 && center.norm() + radius <= 1.0) {
        return Err(Error::Precondition(format!(
            "disk of radius {radius} about {center} is not inside the unit disk"
        )));
    }
    let origin = m.at_origin();
    let scale = radius / q.radius();
    let total = try_integrate_disk(
        |u| {
            let w = center + u * scale;
            if (w - origin).norm() <= 1e-15 {
                return Ok(0.0);
            }
            Ok(counting(m, p, w)?.value)
        },
        Measure::Plain,
        q,
    )?;
    Ok(total / q.radius().powi(2))
}
