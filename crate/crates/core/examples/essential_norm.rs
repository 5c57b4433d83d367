//! Essential-norm indicators: outer sqrt(B) and ‖D_φ f_w‖ as |w| → 1.

use cdop::diagnostics::essential_norm_bracket;
use cdop::operator::{test_function, test_function_order};
use cdop::space::dirichlet_norm;
use cdop::{Complex64, SelfMap, SpaceParams};

fn main() -> cdop::Result<()> {
    let p = SpaceParams::new(0.5)?;

    let mut sup: f64 = 0.0;
    for k in 0..=19 {
        let w = Complex64::new(0.05 * k as f64, 0.0);
        let f = test_function(w, p, test_function_order(w.norm()))?;
        sup = sup.max(dirichlet_norm(&f, p));
    }
    println!("max ‖f_w‖ over |w| ≤ 0.95: {sup:.4}");

    let maps = [
        SelfMap::dilation(Complex64::new(0.5, 0.0))?,
        SelfMap::lens(0.1)?,
        SelfMap::polynomial_real(&[0.0, 0.0, 0.99])?,
    ];
    for m in &maps {
        let b = essential_norm_bracket(m, p)?;
        println!("{m}: outer sqrt(B) {:.4e} at |w| = {:.6}", b.upper, b.upper_radius);
        for (r, v) in &b.lower_profile {
            println!("    |w| = {r:.6}  ‖D_φ f_w‖ = {v:.4e}");
        }
    }
    Ok(())
}
