//! Catalog of analytic self-maps of the unit disk.
//!
//! Each entry evaluates exactly, differentiates in closed form and carries
//! the metadata the diagnostics rely on (univalence, `φ(0) = 0`, a bound on
//! `sup |φ|`). Maps are written and read as short spec strings:
//!
//! | spec | map |
//! |------|-----|
//! | `dilation:0.5` | `z ↦ r z` |
//! | `auto:0.3+0.1i` | `z ↦ η (β - z)/(1 - conj(β) z)`, `η = 1` |
//! | `auto:0.3,0+1i` | same with explicit unimodular `η` |
//! | `lens:0.1` | lens map `(σ^δ - 1)/(σ^δ + 1)`, `σ = (1+z)/(1-z)` |
//! | `exp` | `exp((z+1)/(z-1))` |
//! | `poly:0,0.5,0.25` | `Σ c_k z^k` |

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Number of sample points in the self-map screen.
pub const SCREEN_POINTS: usize = 500;
/// Radius of the closed disk the screen samples from.
pub const SCREEN_RADIUS: f64 = 0.999;
const SCREEN_SEED: u64 = 0x5eed_d15c;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SelfMap {
    Dilation { r: Complex64 },
    Automorphism { eta: Complex64, beta: Complex64 },
    Lens { delta: f64 },
    SingularExp,
    Polynomial { coeffs: Vec<Complex64> },
}

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

fn check_in_disk(z: Complex64) -> Result<()> {
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk { point: z })
    }
}

/// Deterministic sample of the closed disk `|z| ≤ 0.999` used to screen
/// self-maps. A screen, not a proof.
pub fn screen_points() -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(SCREEN_SEED);
    (0..SCREEN_POINTS)
        .map(|_| {
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            Complex64::from_polar(SCREEN_RADIUS * u.sqrt(), 2.0 * PI * v)
        })
        .collect()
}

impl SelfMap {
    pub fn dilation(r: Complex64) -> Result<Self> {
        let m = r.norm();
        if finite(r) && m > 0.0 && m < 1.0 {
            Ok(Self::Dilation { r })
        } else {
            Err(Error::InvalidMap(format!("dilation factor {r} must satisfy 0 < |r| < 1")))
        }
    }

    pub fn automorphism(eta: Complex64, beta: Complex64) -> Result<Self> {
        if !finite(eta) || (eta.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidMap(format!("automorphism rotation {eta} is not unimodular")));
        }
        if !finite(beta) || beta.norm() >= 1.0 {
            return Err(Error::InvalidMap(format!("automorphism point {beta} is not in the disk")));
        }
        Ok(Self::Automorphism { eta, beta })
    }

    /// The involution `φ_β(z) = (β - z)/(1 - conj(β) z)`.
    pub fn involution(beta: Complex64) -> Result<Self> {
        Self::automorphism(ONE, beta)
    }

    pub fn lens(delta: f64) -> Result<Self> {
        if delta > 0.0 && delta < 1.0 {
            Ok(Self::Lens { delta })
        } else {
            Err(Error::InvalidMap(format!("lens exponent {delta} must lie in (0, 1)")))
        }
    }

    pub fn singular_exp() -> Self {
        Self::SingularExp
    }

    /// Polynomial map `Σ c_k z^k`, accepted only if it passes the sampled
    /// self-map screen.
    pub fn polynomial(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() || !coeffs.iter().all(|c| finite(*c)) {
            return Err(Error::InvalidMap("polynomial needs finite coefficients".into()));
        }
        let m = Self::Polynomial { coeffs };
        for z in screen_points() {
            let w = m.eval_unchecked(z);
            if !(w.norm() < 1.0) {
                return Err(Error::InvalidMap(format!(
                    "polynomial is not a self-map of the disk: |φ({z})| = {} ≥ 1",
                    w.norm()
                )));
            }
        }
        Ok(m)
    }

    pub fn polynomial_real(coeffs: &[f64]) -> Result<Self> {
        Self::polynomial(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            Self::Dilation { .. } => "dilation",
            Self::Automorphism { .. } => "automorphism",
            Self::Lens { .. } => "lens",
            Self::SingularExp => "singular-exp",
            Self::Polynomial { .. } => "polynomial",
        }
    }

    pub fn is_univalent(&self) -> bool {
        match self {
            Self::Dilation { .. } | Self::Automorphism { .. } | Self::Lens { .. } => true,
            Self::SingularExp => false,
            Self::Polynomial { coeffs } => {
                let deg = coeffs.iter().rposition(|c| *c != ZERO);
                deg == Some(1)
            }
        }
    }

    pub fn fixes_origin(&self) -> bool {
        self.at_origin() == ZERO
    }

    /// Upper bound on `sup_D |φ|`: `|r|` for dilations, `min(1, Σ|c_k|)` for
    /// polynomials, `1` otherwise.
    pub fn sup_norm_bound(&self) -> f64 {
        match self {
            Self::Dilation { r } => r.norm(),
            Self::Polynomial { coeffs } => coeffs.iter().map(|c| c.norm()).sum::<f64>().min(1.0),
            _ => 1.0,
        }
    }

    /// `φ(0)`.
    pub fn at_origin(&self) -> Complex64 {
        self.eval_unchecked(ZERO)
    }

    pub fn polynomial_degree(&self) -> Option<usize> {
        match self {
            Self::Dilation { .. } => Some(1),
            Self::Polynomial { coeffs } => Some(coeffs.iter().rposition(|c| *c != ZERO).unwrap_or(0)),
            _ => None,
        }
    }

    fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        match self {
            Self::Dilation { r } => r * z,
            Self::Automorphism { eta, beta } => eta * (beta - z) / (ONE - beta.conj() * z),
            Self::Lens { delta } => {
                let s = ((ONE + z) / (ONE - z)).powf(*delta);
                (s - ONE) / (s + ONE)
            }
            Self::SingularExp => ((z + ONE) / (z - ONE)).exp(),
            Self::Polynomial { coeffs } => coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c),
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    pub fn eval_derivative(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        Ok(match self {
            Self::Dilation { r } => *r,
            Self::Automorphism { eta, beta } => {
                let d = ONE - beta.conj() * z;
                -eta * (1.0 - beta.norm_sqr()) / (d * d)
            }
            Self::Lens { delta } => {
                let sigma = (ONE + z) / (ONE - z);
                let s = sigma.powf(*delta);
                let dsigma = 2.0 / ((ONE - z) * (ONE - z));
                let ds = s * *delta / sigma * dsigma;
                ds * 2.0 / ((s + ONE) * (s + ONE))
            }
            Self::SingularExp => {
                let e = ((z + ONE) / (z - ONE)).exp();
                e * (-2.0) / ((z - ONE) * (z - ONE))
            }
            Self::Polynomial { coeffs } => coeffs
                .iter()
                .enumerate()
                .skip(1)
                .rev()
                .fold(ZERO, |acc, (k, &c)| acc * z + c * k as f64),
        })
    }

    /// Taylor coefficients of `φ` at the origin through `order`.
    pub fn as_series(&self, order: usize) -> Result<PowerSeries> {
        let mut out = vec![ZERO; order + 1];
        match self {
            Self::Dilation { r } => {
                if order >= 1 {
                    out[1] = *r;
                }
            }
            Self::Polynomial { coeffs } => {
                for (slot, c) in out.iter_mut().zip(coeffs) {
                    *slot = *c;
                }
            }
            Self::Automorphism { eta, beta } => {
                // η (β + (|β|² - 1) Σ_{n≥1} conj(β)^{n-1} z^n)
                out[0] = eta * beta;
                let k = eta * (beta.norm_sqr() - 1.0);
                let mut pow = ONE;
                for slot in out.iter_mut().skip(1) {
                    *slot = k * pow;
                    pow *= beta.conj();
                }
            }
            Self::Lens { delta } => {
                // log σ = 2 Σ_{k odd} z^k / k, then σ^δ = exp(δ log σ)
                let mut log_sigma = vec![ZERO; order + 1];
                for (k, slot) in log_sigma.iter_mut().enumerate() {
                    if k % 2 == 1 {
                        *slot = Complex64::new(2.0 * delta / k as f64, 0.0);
                    }
                }
                let s = PowerSeries::new(log_sigma).exp();
                let num = &s - &PowerSeries::constant(ONE, order);
                let den = &s + &PowerSeries::constant(ONE, order);
                return Ok(&num * &den.reciprocal()?);
            }
            Self::SingularExp => {
                return Err(Error::UnsupportedVariant {
                    op: "as_series",
                    variant: self.variant_name(),
                })
            }
        }
        Ok(PowerSeries::new(out))
    }
}

pub(crate) fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 && !z.im.is_sign_negative() {
        format!("{}", z.re)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{}{}{}i", z.re, sign, z.im.abs())
    }
}

/// Parses `a`, `a+bi`, `a-bi` or `bi`.
pub(crate) fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a complex number");
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

impl fmt::Display for SelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Dilation { r } => write!(f, "dilation:{}", format_complex(*r)),
            Self::Automorphism { eta, beta } => {
                if *eta == ONE && !eta.im.is_sign_negative() {
                    write!(f, "auto:{}", format_complex(*beta))
                } else {
                    write!(f, "auto:{},{}", format_complex(*beta), format_complex(*eta))
                }
            }
            Self::Lens { delta } => write!(f, "lens:{delta}"),
            Self::SingularExp => write!(f, "exp"),
            Self::Polynomial { coeffs } => {
                let parts: Vec<String> = coeffs.iter().map(|c| format_complex(*c)).collect();
                write!(f, "poly:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for SelfMap {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let spec_err = |reason: String| Error::MapSpec { input: input.to_string(), reason };
        let (kind, arg) = match input.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (input.trim(), None),
        };
        let need = |what: &str| arg.ok_or_else(|| spec_err(format!("`{kind}` needs {what}")));
        match kind {
            "dilation" => {
                let r = parse_complex(need("a factor")?).map_err(spec_err)?;
                Self::dilation(r)
            }
            "auto" => {
                let a = need("a point beta")?;
                let (beta, eta) = match a.split_once(',') {
                    Some((b, e)) => (
                        parse_complex(b).map_err(spec_err)?,
                        parse_complex(e).map_err(spec_err)?,
                    ),
                    None => (parse_complex(a).map_err(spec_err)?, ONE),
                };
                Self::automorphism(eta, beta)
            }
            "lens" => {
                let d = need("an exponent")?;
                let delta = d.parse::<f64>().map_err(|_| spec_err(format!("`{d}` is not a number")))?;
                Self::lens(delta)
            }
            "exp" => match arg {
                None | Some("") => Ok(Self::SingularExp),
                Some(_) => Err(spec_err("`exp` takes no argument".into())),
            },
            "poly" => {
                let coeffs = need("coefficients")?
                    .split(',')
                    .map(parse_complex)
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(spec_err)?;
                Self::polynomial(coeffs)
            }
            other => Err(spec_err(format!("unknown map kind `{other}`"))),
        }
    }
}

impl TryFrom<String> for SelfMap {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SelfMap> for String {
    fn from(m: SelfMap) -> String {
        m.to_string()
    }
}
