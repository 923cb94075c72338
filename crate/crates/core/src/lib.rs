//! Exact arithmetic for Noether-Lefschetz numbers of one-parameter K3 families.
//!
//! The crate computes Noether-Lefschetz numbers in two independent ways:
//!
//! * from vector-valued modular forms of weight 21/2 built out of Rankin-Cohen
//!   brackets of Siegel theta series with Eisenstein series ([`modforms`]);
//! * from genus-0 mirror symmetry of the (4,2) Calabi-Yau hypersurface in
//!   P^3 x P^1 ([`mirror`]), combined with reduced K3 BPS counts ([`bpsk3`]) through
//!   the linear relation n_{g,d} = sum_h r_{g,h} NL_{h,d} ([`bridge`]).
//!
//! Everything that feeds an equality check is exact (`BigRational`). Floating
//! point appears only in diagnostics: Weil representation matrices, numeric
//! modularity residuals and the Gauss-sum rank formula in [`picrank`].

pub mod bpsk3;
pub mod bridge;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod mirror;
pub mod modforms;
pub mod picrank;
pub mod qseries;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use qseries::FracSeries;
