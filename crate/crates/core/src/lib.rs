//! Numerical toolkit for composition-differentiation operators
//! `D_φ f = f' ∘ φ` on the weighted Dirichlet spaces `D_α`, `0 < α < 1`.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`] truncated complex power series, the representation of every
//!   function in `D_α`;
//! * [`space`] norms, inner products, reproducing kernels and disk quadrature;
//! * [`maps`] a catalog of analytic self-maps of the disk;
//! * [`counting`] the generalized Nevanlinna counting function `N_{φ,α}`;
//! * [`operator`] truncated matrices, operator and Hilbert-Schmidt norms,
//!   the closed-form norm for dilations and the test-function family `f_w`;
//! * [`diagnostics`] radial profiles of `N_{φ,α}(w)/(1-|w|²)^{α+2}` and the
//!   compactness/boundedness verdicts built on them;
//! * [`cli`] the batch front end behind the `cdop` binary.

// `!(x < y)` guards are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod counting;
pub mod diagnostics;
pub mod error;
pub mod maps;
pub mod operator;
pub mod series;
pub mod space;

pub use error::{Error, Result};
pub use maps::SelfMap;
pub use num_complex::Complex64;
pub use series::PowerSeries;
pub use space::{DiskQuadrature, SpaceParams};
