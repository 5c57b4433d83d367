//! Norms, the orthonormal basis and the reproducing kernels of D_α.

use cdop::operator::basis_e;
use cdop::series::PowerSeries;
use cdop::space::{dirichlet_norm, dkernel, dkernel_norm, equivalent_norm, inner, kernel, kernel_order};
use cdop::{Complex64, DiskQuadrature, SpaceParams};

fn main() -> cdop::Result<()> {
    let p = SpaceParams::new(0.5)?;
    let f = PowerSeries::from_real(&[1.0, -0.5, 0.25, 0.0, 2.0]);

    println!("‖f‖ (coefficients)   = {:.6}", dirichlet_norm(&f, p));
    let q = DiskQuadrature::default();
    println!("‖f‖ (area, equiv.)   = {:.6}", equivalent_norm(&f, p, &q)?);

    for n in [0, 1, 10, 100] {
        println!("‖e_{n}‖ = {:.15}", dirichlet_norm(&basis_e(n, p), p));
    }

    let w = Complex64::new(0.4, -0.3);
    let order = kernel_order(w.norm(), 4);
    let k = kernel(w, p, order)?;
    let dk = dkernel(w, p, order)?;
    println!("⟨f, k_w⟩    = {:.12}   f(w)  = {:.12}", inner(&f, &k, p), f.evaluate(w));
    println!("⟨f, k_w'⟩   = {:.12}   f'(w) = {:.12}", inner(&f, &dk, p), f.derive().evaluate(w));

    for r in [0.0, 0.5, 0.9, 0.99] {
        let v = dkernel_norm(Complex64::new(r, 0.0), p)?;
        println!("‖k_w^(1)‖ at |w| = {r:<4} : {v:.4}");
    }
    Ok(())
}
