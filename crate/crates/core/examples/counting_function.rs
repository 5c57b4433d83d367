//! N_{φ,α}(w) by each route, and the change-of-variable check.

use cdop::counting::{counting, counting_polynomial, cov_check, RootMethod};
use cdop::{Complex64, DiskQuadrature, SelfMap, SpaceParams};

fn main() -> cdop::Result<()> {
    let p = SpaceParams::new(0.5)?;
    let w = Complex64::new(0.25, 0.0);
    let maps = [
        SelfMap::dilation(Complex64::new(0.5, 0.0))?,
        SelfMap::involution(Complex64::new(0.3, 0.0))?,
        SelfMap::lens(0.1)?,
        SelfMap::polynomial_real(&[0.0, 0.0, 1.0])?,
    ];
    for m in &maps {
        let s = counting(m, p, w)?;
        println!("{:<16} N(0.25) = {:.6}  via {:?}", m.to_string(), s.value, s.route);
    }

    let sq = &maps[3];
    let aberth = counting_polynomial(sq, p, w, RootMethod::Aberth)?;
    println!("z² with Aberth roots: {:.6}", aberth.value);

    let exp_p = SpaceParams::new(0.75)?;
    for r in [0.5, 0.9, 0.99, 0.999] {
        let s = counting(&SelfMap::singular_exp(), exp_p, Complex64::new(r, 0.0))?;
        println!("exp map, α = 0.75, |w| = {r:<5}: N = {:.6}", s.value);
    }

    let q = DiskQuadrature::default();
    for m in [&maps[0], sq] {
        for k in 0..=2 {
            let c = cov_check(m, p, k, &q)?;
            println!("{:<16} m = {k}: lhs {:.8} rhs {:.8} residual {:.2e}", m.to_string(), c.lhs, c.rhs, c.residual);
        }
    }
    Ok(())
}
