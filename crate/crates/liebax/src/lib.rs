//! Exact-arithmetic toolkit for Rota-Baxter operators with centroid-valued
//! weights and the classification of coboundary Lie bialgebra structures on
//! quadratic Lie algebras.
//!
//! Everything is computed over exact scalars: the rationals, or a single
//! quadratic extension Q(sqrt(d)) when the classification demands one. The
//! core is generic over the [`Scalar`] field trait; the aliases below fix
//! the two concrete instances.
//!
//! ```
//! use liebax::bialg::{classify, Verdict};
//! use liebax::fixtures::fixture;
//!
//! let f = fixture("sl2q").unwrap();
//! let report = classify(&f.algebra, &f.form, f.tensor("r2").unwrap()).unwrap();
//! assert_eq!(report.verdict, Verdict::Factorizable);
//!
//! // the mu witness squares to -nu
//! let mu = report.mu.unwrap();
//! assert_eq!(&mu * &mu, -&report.nu.unwrap());
//! ```

mod error;

pub mod bialg;
pub mod centroid;
pub mod cli;
pub mod fixtures;
pub mod forms;
pub mod io;
pub mod liealg;
pub mod linalg;
pub mod rota;
pub mod scalars;
pub mod tensor;

pub use error::{Error, Result};
pub use scalars::{quad_inverse, rational_sqrt, squarefree_part, Quad, Rat, Scalar, ScalarSqrt};

/// Matrices over the base field Q.
pub type QMatrix = linalg::Matrix<Rat>;
/// Lie algebras over Q.
pub type QAlgebra = liealg::LieAlgebra<Rat>;
/// Bilinear forms over Q.
pub type QForm = forms::BilinearForm<Rat>;
/// Subspaces of Q-vector spaces.
pub type QSubspace = linalg::Subspace<Rat>;

/// Matrices over a quadratic extension Q(sqrt(d)).
pub type QuadMatrix = linalg::Matrix<Quad>;
/// Lie algebras over a quadratic extension.
pub type QuadAlgebra = liealg::LieAlgebra<Quad>;
/// Bilinear forms over a quadratic extension.
pub type QuadForm = forms::BilinearForm<Quad>;
