//! B decreases in α when φ(0) = 0, and vanishes beyond sup|φ|.

use cdop::diagnostics::{monotonicity_check, small_supnorm_compactness};
use cdop::{Complex64, SelfMap, SpaceParams};

fn main() -> cdop::Result<()> {
    let maps = [SelfMap::polynomial_real(&[0.0, 0.0, 0.9])?, SelfMap::dilation(Complex64::new(0.5, 0.0))?];
    for m in &maps {
        for (a, g) in [(0.3, 0.7), (0.25, 0.75)] {
            println!("{m}: max(B_{g} - B_{a}) = {:.3e}", monotonicity_check(m, a, g)?);
        }
    }

    let p = SpaceParams::new(0.5)?;
    let small = SelfMap::polynomial_real(&[0.0, 0.4, 0.3])?;
    println!("{small} (sup bound {}): B = 0 beyond it: {}", small.sup_norm_bound(), small_supnorm_compactness(&small, p)?);
    if let Err(e) = small_supnorm_compactness(&SelfMap::lens(0.1)?, p) {
        println!("lens:0.1 rejected: {e}");
    }
    Ok(())
}
