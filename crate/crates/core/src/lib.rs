//! Exact construction and certification of properly posed node sets for
//! Lagrange interpolation along algebraic manifolds.
//!
//! All arithmetic is over the rationals. A node set is properly posed for
//! degree `m` along `s(f_1..f_s)` when the evaluation map from polynomials
//! of degree at most `m` onto values at the nodes is surjective and the
//! node count matches the dimension of that space restricted to the
//! manifold.

pub mod cli;
pub mod construct;
pub mod dimension;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod macaulay;
pub mod mpoly;
pub mod nodes;

pub use construct::{Certified, InterpolationProblem, SuperpositionStep};
pub use dimension::{dim_along, hilbert_table, DegreeProfile, HilbertTable};
pub use error::{Error, Result};
pub use macaulay::{reduce_modulo, select_monomials, Manifold};
pub use mpoly::{parse_polynomial, MultiIndex, Point, Polynomial, Scalar};
pub use nodes::{verify_ppsn, FactorableSystem, NodeSet, PpsnCertificate, Verdict};
