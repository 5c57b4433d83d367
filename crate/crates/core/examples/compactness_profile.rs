//! Radial profiles of B(w) = N(w)/(1-|w|²)^{α+2} and their verdicts.
//!
//! Pass a path to also write the lens profile as CSV.

use cdop::diagnostics::{default_shells, radial_profile, DEFAULT_POINTS_PER_SHELL};
use cdop::{Complex64, SelfMap, SpaceParams};

fn main() -> cdop::Result<()> {
    let shells = default_shells(14);
    let half = SpaceParams::new(0.5)?;
    let cases = [
        (SelfMap::dilation(Complex64::new(0.5, 0.0))?, half),
        (SelfMap::lens(0.1)?, half),
        (SelfMap::lens(0.19)?, half),
        (SelfMap::lens(0.25)?, half),
        (SelfMap::lens(0.4)?, half),
        (SelfMap::involution(Complex64::new(0.3, 0.0))?, half),
        (SelfMap::singular_exp(), SpaceParams::new(0.75)?),
    ];
    for (m, p) in &cases {
        let rep = radial_profile(m, *p, &shells, DEFAULT_POINTS_PER_SHELL)?;
        let outer: Vec<String> =
            rep.shells.iter().rev().take(3).rev().map(|s| format!("{:.3e}", s.max_b.unwrap_or(f64::NAN))).collect();
        println!("{:<14} α={:<4} outer [{}] -> {:?}", m.to_string(), p.alpha(), outer.join(", "), rep.verdict);
    }

    if let Some(path) = std::env::args().nth(1) {
        let rep = radial_profile(&SelfMap::lens(0.1)?, half, &shells, DEFAULT_POINTS_PER_SHELL)?;
        let file = std::fs::File::create(&path).expect("create output file");
        rep.write_csv(file)?;
        println!("wrote {path}");
    }
    Ok(())
}
