//! Exact analysis of pencils of quadrics in `CP_4`.
//!
//! Given two quadratic forms, compute the Segre symbol of the pencil they
//! span without factoring polynomials, decide whether the intersection is a
//! Segre quartic surface, and report its singularities, class, double-cover
//! presentations and degenerations.
//!
//! ```
//! use segre::cli::pencil_from_forms;
//! use segre::{classify_symbol, compute_symbol};
//!
//! let p = pencil_from_forms(
//!     "4*X0*X1 + X1^2 + 3*X2^2 + 4*X3^2 + 5*X4^2; 2*X0*X1 + X2^2 + X3^2 + X4^2",
//! )
//! .unwrap();
//! let s = compute_symbol(&p).unwrap();
//! assert_eq!(s.to_string(), "[2111]");
//! assert_eq!(classify_symbol(&s).unwrap().class_degree, Some(10));
//! ```

pub mod arith;
pub mod classify;
pub mod cli;
pub mod cover;
pub mod error;
pub mod numeric;
pub mod pencil;
pub mod symbol;
pub mod verify;

pub use arith::{Poly, QMatrix, Rational};
pub use classify::{catalog, class_degree, classify_symbol, transitions, SingularityType, SurfaceReport};
pub use cover::{branch_dual_degree, covers_of, dual_section, CoverReport};
pub use error::{Error, Result};
pub use numeric::numeric_exponent_partitions;
pub use pencil::{invariant_factors, select_nonsingular_member, QuadricPencil};
pub use symbol::{build_normal_form, compute_symbol, random_instance, SegreSymbol};
