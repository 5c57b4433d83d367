//! The self-map catalog: parsing, evaluation, series and metadata.

use cdop::{Complex64, SelfMap};

fn main() -> cdop::Result<()> {
    let specs = ["dilation:0.5", "auto:0.3", "auto:0.2+0.1i,0+1i", "lens:0.1", "exp", "poly:0,0.4,0.3"];
    let z = Complex64::new(0.3, 0.2);
    for spec in specs {
        let m: SelfMap = spec.parse()?;
        println!(
            "{:<22} univalent {:<5} fixes 0 {:<5} sup bound {:.2}  φ(z) = {:.6}  φ'(z) = {:.6}",
            m.to_string(),
            m.is_univalent(),
            m.fixes_origin(),
            m.sup_norm_bound(),
            m.eval(z)?,
            m.eval_derivative(z)?,
        );
    }

    let lens = SelfMap::lens(0.25)?;
    let s = lens.as_series(12)?;
    println!("lens:0.25 series through z^12: {:?}", s.coeffs().iter().map(|c| (c.re * 1e4).round() / 1e4).collect::<Vec<_>>());

    match "poly:0,0.9,0.5".parse::<SelfMap>() {
        Ok(m) => println!("unexpected: {m}"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
