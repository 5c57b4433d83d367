//! Truncated power series: arithmetic, derivative, composition, real powers.

use cdop::series::{compose, PowerSeries};
use cdop::Complex64;

fn show(label: &str, f: &PowerSeries) {
    let terms: Vec<String> = f.coeffs().iter().map(|c| format!("{:.4}", c.re)).collect();
    println!("{label:>14}: [{}]", terms.join(", "));
}

fn main() -> cdop::Result<()> {
    let f = PowerSeries::from_real(&[1.0, 2.0, 3.0]);
    let g = PowerSeries::from_real(&[0.0, 1.0, 1.0]);
    show("f", &f);
    show("g", &g);
    show("f + g", &(&f + &g));
    show("f * g", &(&f * &g));
    show("f'", &f.derive());
    show("∫ f", &f.integrate_from_zero());

    // f(g(z)) through degree 6
    show("f ∘ g", &compose(&f, &g, 6)?);

    // 1/(1 - z) and (1 - z)^{-5/2}
    let one_minus_z = PowerSeries::from_real(&[1.0, -1.0]).with_order(8);
    show("1/(1-z)", &one_minus_z.reciprocal()?);
    show("(1-z)^-2.5", &one_minus_z.powf(-2.5)?);

    let z = Complex64::new(0.3, 0.1);
    println!("f(0.3+0.1i) = {:.6}", f.evaluate(z));
    Ok(())
}
