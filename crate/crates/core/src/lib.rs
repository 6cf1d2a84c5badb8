//! Exact spectral analysis of square matrices from traces of their powers.
//!
//! For a square matrix `G` over a field, the two-parameter family
//! `M_{t,l}(G)` collects the `t x t` matrices with entries
//! `tr G^{i+j+l-2}`. Their determinants obey a closed form over the distinct
//! eigenvalues of `G`, and that single identity yields, without ever
//! computing an eigenvalue:
//!
//! * the **spectral size** (number of distinct eigenvalues) as the largest
//!   `t` with `det M_{t,0} != 0` ([`spectral::spectral_size`]);
//! * a **degeneracy test**: `det M_{m,1} = 0` iff `G` is singular
//!   ([`spectral::degeneracy_test`]);
//! * the **spectral polynomial** — the monic polynomial with exactly the
//!   distinct eigenvalues as roots, equal to the minimal polynomial for real
//!   symmetric matrices — as `det M_{m,1}(xI - G) / det M_m(G)`
//!   ([`spectral::spectral_polynomial`]).
//!
//! All arithmetic is exact, over arbitrary-precision rationals or GF(p),
//! and every identity is cross-checked against an independent
//! characteristic-polynomial oracle ([`matrix::Matrix::char_poly`] plus
//! [`poly::Poly::squarefree_part`]). Adjacency matrices of graphs, the
//! motivating application, load from edge-list and Matrix Market files.
//!
//! ```
//! use trace_hankel::{hankel_det, spectral_polynomial, spectral_size, HankelSpec, Matrix, Rational};
//!
//! let rat = |n: i64| Rational::from_integer(n.into());
//! let g = Matrix::diagonal(vec![rat(1), rat(1), rat(2)]);
//!
//! // Two distinct eigenvalues, found from determinants of trace matrices.
//! assert_eq!(spectral_size(&g), 2);
//! assert_eq!(hankel_det(&g, HankelSpec::new(2, 0)?), rat(2));
//!
//! // The monic polynomial with exactly those eigenvalues as roots:
//! // x^2 - 3x + 2, coefficients constant term first.
//! let p = spectral_polynomial(&g)?;
//! assert_eq!(p.coeffs(), &[rat(2), rat(-3), rat(1)]);
//! # Ok::<(), trace_hankel::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod field;
pub mod graph;
pub mod hankel;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod sampling;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, GfElement, Rational};
pub use hankel::{
    build_hankel, hankel_det, rhs_closed_form, vandermonde_det, verify_theorem, HankelSpec,
    Spectrum, TheoremWitness,
};
pub use matrix::{Matrix, PolyMatrix};
pub use poly::Poly;
pub use spectral::{
    analyze, degeneracy_test, oracle_spectral_size, spectral_polynomial, spectral_size,
    spectral_size_symmetric, verify_scaling, AnalysisReport,
};
