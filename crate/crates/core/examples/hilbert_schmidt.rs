//! Hilbert-Schmidt quantities: the basis sum and the area integral.
//!
//! The two are comparable only up to constants; the integral itself is
//! computed twice, by quadrature and by coefficients.

use cdop::operator::{hs_integral_series, hs_norm_basis, hs_norm_integral};
use cdop::{Complex64, DiskQuadrature, SelfMap, SpaceParams};

fn main() -> cdop::Result<()> {
    let q = DiskQuadrature::default();
    println!("map              α     basis sum  integral(quad)  integral(series)");
    for a in [0.25, 0.5, 0.75] {
        let p = SpaceParams::new(a)?;
        let maps = [
            SelfMap::dilation(Complex64::new(0.3, 0.0))?,
            SelfMap::dilation(Complex64::new(0.7, 0.0))?,
            SelfMap::polynomial_real(&[0.0, 0.0, 0.5])?,
        ];
        for m in &maps {
            let basis = hs_norm_basis(m, p, 2000)?;
            let quad = hs_norm_integral(m, p, &q)?;
            let series = hs_integral_series(m, p)?;
            println!("{:<16} {a:<5} {:9.6}  {quad:14.10}  {series:16.10}", m.to_string(), basis.norm);
        }
    }
    Ok(())
}
