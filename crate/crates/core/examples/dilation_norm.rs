//! ‖D_φ‖ for φ(z) = r z: closed form against the Galerkin truncation.

use cdop::operator::{build_matrix, closed_form_dilation_norm, operator_norm, DEFAULT_NORM_TOL};
use cdop::{Complex64, SelfMap, SpaceParams};

fn main() -> cdop::Result<()> {
    let p = SpaceParams::new(0.5)?;
    for r in [0.5, 0.85] {
        let c = closed_form_dilation_norm(Complex64::new(r, 0.0), p)?;
        println!(
            "r = {r}: x0 = {:.6}, f({}) = {:.4}, f({}) = {:.4}, η = {}, norm = {:.4}",
            c.x0,
            c.x0.floor(),
            c.f_at_floor,
            c.x0.floor() + 1.0,
            c.f_at_floor_plus_one,
            c.eta,
            c.norm
        );
    }

    println!("\n   r    α   closed form  N=200 matrix   gap");
    for a in [0.25, 0.5, 0.75] {
        let p = SpaceParams::new(a)?;
        for r in [0.3, 0.5, 0.7, 0.85] {
            let m = SelfMap::dilation(Complex64::new(r, 0.0))?;
            let exact = closed_form_dilation_norm(Complex64::new(r, 0.0), p)?.norm;
            let approx = operator_norm(&build_matrix(&m, p, 200, 200)?, DEFAULT_NORM_TOL)?;
            println!("{r:5} {a:5} {exact:12.8} {approx:13.8} {:9.1e}", (exact - approx).abs());
        }
    }

    let zero = SelfMap::polynomial_real(&[0.0])?;
    let n0 = operator_norm(&build_matrix(&zero, p, 10, 10)?, DEFAULT_NORM_TOL)?;
    println!("\nφ ≡ 0: ‖D_φ‖ = {n0:.4} = 2^((α-1)/2)");
    Ok(())
}
