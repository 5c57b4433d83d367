//! Numerical evidence for boundedness and compactness of `D_φ`.
//!
//! Everything here is built on the functional
//! `B(w) = N_{φ,α}(w) / (1 - |w|²)^{α+2}`: its supremum tracks boundedness,
//! its behaviour as `|w| → 1` tracks compactness. Radial profiles sample `B`
//! on circles and classify the outer trend with a fixed rule; the raw samples
//! are always kept in the report.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::counting;
use crate::error::{Error, Result};
use crate::maps::SelfMap;
use crate::operator::{test_image_norm, test_image_norm_from_series, test_image_order};
use crate::space::SpaceParams;

pub const REPORT_SCHEMA: u32 = 1;
pub const DEFAULT_POINTS_PER_SHELL: usize = 256;
pub const DEFAULT_SHELL_COUNT: u32 = 14;
/// Slowest outer decay `B ~ (1 - |w|)^γ` still read as decaying.
pub const MIN_DECAY_EXPONENT: f64 = 0.05;
/// Truncation cap for `D_φ f_w` when `φ` reaches the circle.
pub const LOWER_PROXY_CAP: usize = 4096;
const LOWER_PROXY_ANGLES: usize = 8;

/// `1 - 2^{-k}`, `k = 1..=count`.
pub fn default_shells(count: u32) -> Vec<f64> {
    (1..=count).map(|k| 1.0 - 0.5f64.powi(k as i32)).collect()
}

/// Radii `0.05, 0.10, ..., 0.95` followed by `1 - 2^{-k}`, `k = 5..=14`.
pub fn standard_grid_radii() -> Vec<f64> {
    let mut radii: Vec<f64> = (1..=19).map(|k| 0.05 * k as f64).collect();
    radii.extend((5..=14).map(|k| 1.0 - 0.5f64.powi(k)));
    radii
}

fn shell_points(radius: f64, count: usize) -> impl Iterator<Item = Complex64> {
    (0..count).map(move |j| Complex64::from_polar(radius, 2.0 * PI * j as f64 / count as f64))
}

/// `B(w) = N_{φ,α}(w) / (1 - |w|²)^{α+2}`.
pub fn b_functional(m: &SelfMap, p: SpaceParams, w: Complex64) -> Result<f64> {
    Ok(b_sample(m, p, w)?.0)
}

fn b_sample(m: &SelfMap, p: SpaceParams, w: Complex64) -> Result<(f64, bool)> {
    let s = counting(m, p, w)?;
    Ok((s.value / (1.0 - w.norm_sqr()).powf(p.alpha() + 2.0), s.boundary_ambiguous))
}

/// `1 - |φ(z)|²` without cancellation for the univalent catalog maps.
fn image_defect(m: &SelfMap, z: Complex64) -> Result<f64> {
    let one = Complex64::new(1.0, 0.0);
    match m {
        SelfMap::Dilation { r } => Ok(1.0 - (r * z).norm_sqr()),
        SelfMap::Automorphism { beta, .. } => {
            Ok((1.0 - beta.norm_sqr()) * (1.0 - z.norm_sqr()) / (one - beta.conj() * z).norm_sqr())
        }
        SelfMap::Lens { delta } => {
            let s = ((one + z) / (one - z)).powf(*delta);
            Ok(4.0 * s.re / (s + one).norm_sqr())
        }
        SelfMap::Polynomial { .. } if m.is_univalent() => Ok(1.0 - m.eval(z)?.norm_sqr()),
        _ => Err(Error::UnsupportedVariant { op: "univalent_b", variant: m.variant_name() }),
    }
}

/// `(1 - |z|²)^α / (1 - |φ(z)|²)^{α+2}`, which is `B(φ(z))` for univalent
/// `φ` with no inversion needed.
pub fn univalent_b(m: &SelfMap, p: SpaceParams, z: Complex64) -> Result<f64> {
    if !m.is_univalent() {
        return Err(Error::UnsupportedVariant { op: "univalent_b", variant: m.variant_name() });
    }
    if !(z.norm() < 1.0) {
        return Err(Error::OutsideDisk { point: z });
    }
    let a = p.alpha();
    Ok((1.0 - z.norm_sqr()).powf(a) / image_defect(m, z)?.powf(a + 2.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileRoute {
    /// `B` on circles `|w| = ρ` through the counting function.
    Counting,
    /// [`univalent_b`] on circles `|z| = ρ` in the domain.
    Univalent,
}

impl ProfileRoute {
    /// The lens map only touches the circle at `±1`, so its image misses
    /// almost all of an outer `w`-circle; sampling in `z` follows the contact
    /// points instead.
    pub fn default_for(m: &SelfMap) -> Self {
        match m {
            SelfMap::Lens { .. } => Self::Univalent,
            _ => Self::Counting,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    DecayingToZero,
    BoundedPlateau,
    Diverging,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CompactEvidence,
    BoundedNoncompactEvidence,
    UnboundedEvidence,
    Inconclusive,
}

impl From<Trend> for Verdict {
    fn from(t: Trend) -> Self {
        match t {
            Trend::DecayingToZero => Self::CompactEvidence,
            Trend::BoundedPlateau => Self::BoundedNoncompactEvidence,
            Trend::Diverging => Self::UnboundedEvidence,
            Trend::Inconclusive => Self::Inconclusive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShellSample {
    pub radius: f64,
    /// Largest `B` on the shell; `None` if every point failed.
    pub max_b: Option<f64>,
    pub argmax_angle: Option<f64>,
    pub failures: usize,
    pub boundary_flags: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundednessReport {
    pub schema: u32,
    pub map: String,
    pub alpha: f64,
    pub route: ProfileRoute,
    pub points_per_shell: usize,
    pub shells: Vec<ShellSample>,
    pub sup_estimate: f64,
    pub outer_trend: Trend,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

impl BoundednessReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One `shell,max_b` row per shell; failed shells leave `max_b` empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Precondition(format!("csv output failed: {e}"));
        w.write_record(["shell", "max_b"]).map_err(io)?;
        for s in &self.shells {
            let max = s.max_b.map(|v| format!("{v:e}")).unwrap_or_default();
            w.write_record([format!("{}", s.radius), max]).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Precondition(format!("csv output failed: {e}")))?;
        Ok(())
    }
}

/// Outer-trend rule on `(radius, max)` pairs, radii increasing. With
/// `m1, m2, m3` the maxima on the three outermost shells:
///
/// * diverging if `m3 > 10 m1` and `m3 > 1e3`;
/// * decaying if all three are zero, or `m3 < 0.1 m1` and `m3 < 1e-3 sup`,
///   or `m1 > m2 > m3` with fitted exponent `γ ≥` [`MIN_DECAY_EXPONENT`] in
///   `m ~ (1 - r)^γ`;
/// * plateau if `max / min ≤ 2`;
/// * inconclusive otherwise, or with fewer than three shells.
pub fn classify_trend(samples: &[(f64, f64)], sup_estimate: f64) -> Trend {
    let [.., (r1, m1), (_, m2), (r3, m3)] = samples else {
        return Trend::Inconclusive;
    };
    let (m1, m2, m3) = (*m1, *m2, *m3);
    if m3 > 10.0 * m1 && m3 > 1e3 {
        return Trend::Diverging;
    }
    if m1 == 0.0 && m2 == 0.0 && m3 == 0.0 {
        return Trend::DecayingToZero;
    }
    if m3 < 0.1 * m1 && m3 < 1e-3 * sup_estimate {
        return Trend::DecayingToZero;
    }
    if m1 > m2 && m2 > m3 && m3 > 0.0 {
        let gamma = (m1 / m3).ln() / ((1.0 - r1) / (1.0 - r3)).ln();
        if gamma >= MIN_DECAY_EXPONENT {
            return Trend::DecayingToZero;
        }
    }
    let hi = m1.max(m2).max(m3);
    let lo = m1.min(m2).min(m3);
    if lo > 0.0 && hi / lo <= 2.0 {
        return Trend::BoundedPlateau;
    }
    Trend::Inconclusive
}

fn check_shells(shells: &[f64]) -> Result<()> {
    let Some(&last) = shells.last() else {
        return Err(Error::Precondition("no shells given".into()));
    };
    if shells.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
        return Err(Error::Precondition("shell radii must lie in (0, 1)".into()));
    }
    if shells.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("shell radii must be strictly increasing".into()));
    }
    if last < 1.0 - 1e-4 {
        return Err(Error::Precondition(format!("outermost shell {last} is below 1 - 1e-4")));
    }
    Ok(())
}

/// Per-shell maxima of `B` and the outer-trend verdict, using
/// [`ProfileRoute::default_for`].
pub fn radial_profile(
    m: &SelfMap,
    p: SpaceParams,
    shells: &[f64],
    points_per_shell: usize,
) -> Result<BoundednessReport> {
    radial_profile_with_route(m, p, shells, points_per_shell, ProfileRoute::default_for(m))
}

pub fn radial_profile_with_route(
    m: &SelfMap,
    p: SpaceParams,
    shells: &[f64],
    points_per_shell: usize,
    route: ProfileRoute,
) -> Result<BoundednessReport> {
    check_shells(shells)?;
    if points_per_shell == 0 {
        return Err(Error::Precondition("points per shell must be positive".into()));
    }
    let points: Vec<(usize, usize, Complex64)> = shells
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| shell_points(r, points_per_shell).enumerate().map(move |(j, w)| (i, j, w)))
        .collect();
    let values: Vec<Result<(f64, bool)>> = points
        .par_iter()
        .map(|&(_, _, w)| match route {
            ProfileRoute::Counting => b_sample(m, p, w),
            ProfileRoute::Univalent => univalent_b(m, p, w).map(|v| (v, false)),
        })
        .collect();

    let mut diagnostics = Vec::new();
    let mut samples = Vec::with_capacity(shells.len());
    for (i, &radius) in shells.iter().enumerate() {
        let mut shell = ShellSample { radius, max_b: None, argmax_angle: None, failures: 0, boundary_flags: 0 };
        let mut first_error = None;
        for (k, v) in values.iter().enumerate().skip(i * points_per_shell).take(points_per_shell) {
            match v {
                Ok((b, flagged)) => {
                    shell.boundary_flags += *flagged as usize;
                    if !b.is_finite() {
                        shell.failures += 1;
                    } else if shell.max_b.is_none_or(|cur| *b > cur) {
                        shell.max_b = Some(*b);
                        shell.argmax_angle = Some(points[k].2.arg());
                    }
                }
                Err(e) => {
                    shell.failures += 1;
                    first_error.get_or_insert_with(|| e.to_string());
                }
            }
        }
        if let Some(e) = first_error {
            diagnostics.push(format!("shell {radius}: {} of {points_per_shell} points failed ({e})", shell.failures));
        }
        samples.push(shell);
    }

    let valid: Vec<(f64, f64)> = samples.iter().filter_map(|s| s.max_b.map(|b| (s.radius, b))).collect();
    let sup_estimate = valid.iter().map(|v| v.1).fold(0.0, f64::max);
    let outer_trend = if valid.is_empty() {
        diagnostics.push("counting failed on every shell".into());
        Trend::Inconclusive
    } else {
        classify_trend(&valid, sup_estimate)
    };
    Ok(BoundednessReport {
        schema: REPORT_SCHEMA,
        map: m.to_string(),
        alpha: p.alpha(),
        route,
        points_per_shell,
        shells: samples,
        sup_estimate,
        outer_trend,
        verdict: outer_trend.into(),
        diagnostics,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EssentialNormBracket {
    /// `sqrt` of the outermost-shell maximum of `B`.
    pub upper: f64,
    /// `max ‖D_φ f_w‖` over angles on the outermost reachable shell.
    pub lower: f64,
    pub upper_radius: f64,
    pub lower_radius: f64,
    /// `(|w|, max over angles of ‖D_φ f_w‖)` per reachable shell.
    pub lower_profile: Vec<(f64, f64)>,
}

impl EssentialNormBracket {
    pub fn pair(&self) -> (f64, f64) {
        (self.upper, self.lower)
    }
}

/// Two numbers tied to `‖D_φ‖_e` up to unquantified constants: the outer
/// value of `sqrt(B)` and the outer value of `‖D_φ f_w‖`. No containment is
/// claimed.
pub fn essential_norm_bracket(m: &SelfMap, p: SpaceParams) -> Result<EssentialNormBracket> {
    let supported = match m {
        SelfMap::Dilation { .. } | SelfMap::Lens { .. } => true,
        SelfMap::Polynomial { .. } => m.sup_norm_bound() < 1.0,
        _ => false,
    };
    if !supported {
        return Err(Error::UnsupportedVariant { op: "essential_norm_bracket", variant: m.variant_name() });
    }
    let shells = default_shells(DEFAULT_SHELL_COUNT);
    let report = radial_profile(m, p, &shells, DEFAULT_POINTS_PER_SHELL)?;
    let outer = report
        .shells
        .iter()
        .rev()
        .find_map(|s| s.max_b.map(|b| (s.radius, b)))
        .ok_or_else(|| Error::Precondition("no shell of the profile could be evaluated".into()))?;

    // polynomial orders stay bounded because sup|φ| < 1
    let cap = if phi_reaches_circle(m) { LOWER_PROXY_CAP } else { usize::MAX };
    let reachable: Vec<f64> = shells.iter().copied().filter(|&r| test_image_order(m, r) <= cap).collect();
    let phi = match m {
        SelfMap::Lens { .. } => Some(m.as_series(LOWER_PROXY_CAP)?),
        _ => None,
    };
    let lower_profile = reachable
        .par_iter()
        .map(|&r| {
            let mut best: f64 = 0.0;
            for w in shell_points(r, LOWER_PROXY_ANGLES) {
                let v = match &phi {
                    Some(series) => test_image_norm_from_series(&series.with_order(test_image_order(m, r)), p, w)?,
                    None => test_image_norm(m, p, w, cap)?,
                };
                best = best.max(v);
            }
            Ok((r, best))
        })
        .collect::<Result<Vec<_>>>()?;
    let &(lower_radius, lower) = lower_profile
        .last()
        .ok_or_else(|| Error::OrderCap { requested: test_image_order(m, shells[0]), cap })?;
    Ok(EssentialNormBracket { upper: outer.1.sqrt(), lower, upper_radius: outer.0, lower_radius, lower_profile })
}

fn phi_reaches_circle(m: &SelfMap) -> bool {
    m.sup_norm_bound() >= 1.0
}

fn grid_points() -> Vec<Complex64> {
    standard_grid_radii().into_iter().flat_map(|r| shell_points(r, DEFAULT_POINTS_PER_SHELL)).collect()
}

/// `max (B_γ(w) - B_α(w))` over [`standard_grid_radii`] with 256 angles.
/// For `φ(0) = 0` and `α ≤ γ` the difference is nonpositive pointwise.
pub fn monotonicity_check(m: &SelfMap, alpha: f64, gamma: f64) -> Result<f64> {
    if !m.fixes_origin() {
        return Err(Error::Precondition(format!("{m} does not fix the origin")));
    }
    let pa = SpaceParams::new(alpha)?;
    let pg = SpaceParams::new(gamma)?;
    if alpha > gamma {
        return Err(Error::Precondition(format!("need alpha <= gamma, got {alpha} > {gamma}")));
    }
    let diffs = grid_points()
        .par_iter()
        .map(|&w| Ok(b_functional(m, pg, w)? - b_functional(m, pa, w)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(diffs.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

/// Checks that `B` vanishes at every grid point with `|w|` above the sup
/// bound of `φ`.
pub fn small_supnorm_compactness(m: &SelfMap, p: SpaceParams) -> Result<bool> {
    let rho = m.sup_norm_bound();
    if !(rho < 1.0) {
        return Err(Error::Precondition(format!("sup|φ| bound for {m} is not below 1")));
    }
    let outside: Vec<Complex64> = grid_points().into_iter().filter(|w| w.norm() > rho).collect();
    let values = outside.par_iter().map(|&w| b_functional(m, p, w)).collect::<Result<Vec<f64>>>()?;
    Ok(values.iter().all(|&v| v == 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(a: f64) -> SpaceParams {
        SpaceParams::new(a).unwrap()
    }

    #[test]
    fn b_dilation_values() {
        let m = SelfMap::dilation(c(0.5, 0.0)).unwrap();
        let p = params(0.5);
        assert_eq!(b_functional(&m, p, c(0.6, 0.0)).unwrap(), 0.0);
        let expected = 0.75f64.sqrt() / (1.0 - 0.0625f64).powf(2.5);
        assert_abs_diff_eq!(b_functional(&m, p, c(0.25, 0.0)).unwrap(), expected, epsilon = 1e-14);
        assert!(b_functional(&m, p, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn b_exp_large_near_circle() {
        let b = b_functional(&SelfMap::singular_exp(), params(0.75), c(0.999, 0.0)).unwrap();
        assert!(b > 1e2, "{b}");
    }

    #[test]
    fn univalent_b_matches_b_at_image() {
        let maps = [
            SelfMap::dilation(c(0.6, 0.2)).unwrap(),
            SelfMap::involution(c(0.3, 0.0)).unwrap(),
            SelfMap::automorphism(c(0.0, 1.0), c(-0.2, 0.4)).unwrap(),
            SelfMap::lens(0.3).unwrap(),
            SelfMap::polynomial_real(&[0.1, 0.5]).unwrap(),
        ];
        let p = params(0.5);
        for m in &maps {
            for k in 0..200 {
                let z = Complex64::from_polar(0.02 + 0.9 * (k as f64 / 200.0), 0.7 * k as f64);
                let w = m.eval(z).unwrap();
                if (w - m.at_origin()).norm() < 1e-12 {
                    continue;
                }
                let a = univalent_b(m, p, z).unwrap();
                let b = b_functional(m, p, w).unwrap();
                assert!((a - b).abs() <= 1e-9 * a.max(1.0), "{m} {z}: {a} {b}");
            }
        }
        assert!(univalent_b(&SelfMap::singular_exp(), p, c(0.1, 0.0)).is_err());
    }

    #[test]
    fn univalent_b_examples() {
        let p = params(0.5);
        let dil = SelfMap::dilation(c(0.7, 0.0)).unwrap();
        for k in 0..50 {
            let z = c(k as f64 / 50.0, 0.0);
            let v = univalent_b(&dil, p, z).unwrap();
            let expected = (1.0 - z.norm_sqr()).powf(0.5) / (1.0 - 0.49 * z.norm_sqr()).powf(2.5);
            assert_abs_diff_eq!(v, expected, epsilon = 1e-13);
            assert!(v <= 1.0 / (1.0f64 - 0.49).powf(2.5));
        }
        let beta = c(0.3, 0.0);
        let auto = SelfMap::involution(beta).unwrap();
        for k in 0..40 {
            let z = Complex64::from_polar(1.0 - 0.5f64.powi(k / 4 + 1), k as f64);
            let ratio =
                univalent_b(&auto, p, z).unwrap() / ((1.0 - 0.09f64).powf(2.5) / (1.0 - z.norm_sqr()).powi(2));
            assert!((1.0 / 16.0..=16.0).contains(&ratio), "{ratio}");
        }
        let lens = SelfMap::lens(0.1).unwrap();
        let outer: Vec<f64> = (8..=14)
            .map(|k| univalent_b(&lens, p, c(1.0 - 0.5f64.powi(k), 0.0)).unwrap())
            .collect();
        assert!(outer.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn trend_rule() {
        let r = default_shells(3);
        let pack = |m: [f64; 3]| r.iter().copied().zip(m).collect::<Vec<_>>();
        assert_eq!(classify_trend(&pack([0.0, 0.0, 0.0]), 1.0), Trend::DecayingToZero);
        assert_eq!(classify_trend(&pack([1e3, 5e3, 2e4]), 2e4), Trend::Diverging);
        assert_eq!(classify_trend(&pack([1.0, 1.5, 1.2]), 3.0), Trend::BoundedPlateau);
        assert_eq!(classify_trend(&pack([1.0, 1e-3, 1e-5]), 5.0), Trend::DecayingToZero);
        // γ = log2(0.5 / 0.3) / 2 ≈ 0.37
        assert_eq!(classify_trend(&pack([0.5, 0.4, 0.3]), 5.0), Trend::DecayingToZero);
        assert_eq!(classify_trend(&pack([0.5, 0.499, 0.498]), 5.0), Trend::BoundedPlateau);
        assert_eq!(classify_trend(&pack([1.0, 10.0, 50.0]), 50.0), Trend::Inconclusive);
        assert_eq!(classify_trend(&pack([1.0, 1.0, 1.0])[..2], 1.0), Trend::Inconclusive);
    }

    #[test]
    fn shells_validated() {
        let m = SelfMap::dilation(c(0.5, 0.0)).unwrap();
        let p = params(0.5);
        assert!(radial_profile(&m, p, &[0.5, 0.9], 8).is_err());
        assert!(radial_profile(&m, p, &[0.5, 0.4, 0.99999], 8).is_err());
        assert!(radial_profile(&m, p, &[], 8).is_err());
        assert!(radial_profile(&m, p, &[0.5, 0.99999], 0).is_err());
    }

    #[test]
    fn dilation_profile_is_compact() {
        let shells = default_shells(DEFAULT_SHELL_COUNT);
        for a in [0.25, 0.5, 0.75] {
            for k in 1..=9 {
                let m = SelfMap::dilation(c(0.1 * k as f64, 0.0)).unwrap();
                let rep = radial_profile(&m, params(a), &shells, 64).unwrap();
                assert_eq!(rep.verdict, Verdict::CompactEvidence, "r = {}", 0.1 * k as f64);
                let sup = rep.shells.iter().filter_map(|s| s.max_b).fold(0.0, f64::max);
                assert_eq!(rep.sup_estimate, sup);
            }
        }
    }

    #[test]
    fn report_serialization() {
        let m = SelfMap::dilation(c(0.5, 0.0)).unwrap();
        let rep = radial_profile(&m, params(0.5), &default_shells(14), 16).unwrap();
        let json = rep.to_json();
        assert_eq!(json, radial_profile(&m, params(0.5), &default_shells(14), 16).unwrap().to_json());
        let back: BoundednessReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["verdict"], "compact-evidence");
        assert_eq!(v["map"], "dilation:0.5");
        let mut buf = Vec::new();
        rep.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 15);
        assert!(text.starts_with("shell,max_b\n"));
    }

    #[test]
    fn monotonicity_examples() {
        let m = SelfMap::polynomial_real(&[0.0, 0.0, 0.9]).unwrap();
        assert!(monotonicity_check(&m, 0.3, 0.7).unwrap() <= 1e-12);
        let d = SelfMap::dilation(c(0.5, 0.0)).unwrap();
        assert!(monotonicity_check(&d, 0.25, 0.75).unwrap() <= 1e-12);
        assert_eq!(monotonicity_check(&d, 0.4, 0.4).unwrap(), 0.0);
        assert!(monotonicity_check(&d, 0.7, 0.3).is_err());
        let shifted = SelfMap::polynomial_real(&[0.1, 0.5]).unwrap();
        assert!(monotonicity_check(&shifted, 0.3, 0.7).is_err());
    }

    #[test]
    fn small_supnorm_examples() {
        let p = params(0.5);
        assert!(small_supnorm_compactness(&SelfMap::dilation(c(0.5, 0.0)).unwrap(), p).unwrap());
        let poly = SelfMap::polynomial_real(&[0.0, 0.4, 0.3]).unwrap();
        assert_eq!(poly.sup_norm_bound(), 0.7);
        assert!(small_supnorm_compactness(&poly, p).unwrap());
        assert!(small_supnorm_compactness(&SelfMap::lens(0.1).unwrap(), p).is_err());
    }

    #[test]
    fn bracket_for_dilation() {
        let b = essential_norm_bracket(&SelfMap::dilation(c(0.5, 0.0)).unwrap(), params(0.5)).unwrap();
        assert_eq!(b.upper, 0.0);
        assert!(b.lower < 1e-2, "{}", b.lower);
        assert!(b.lower_profile.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-15));
        assert!(essential_norm_bracket(&SelfMap::singular_exp(), params(0.5)).is_err());
    }
}
