//! Complex-deformed Heisenberg algebras on a truncated Fock space.
//!
//! The algebra of interest is generated by a lowering operator `a_q` and a
//! raising operator `a_q^♮` subject to
//!
//! ```text
//! a_q a_q^♮ − q a_q^♮ a_q = I,      q ∈ ℂ, q ≠ 0,
//! ```
//!
//! with `q = 1` the ordinary boson, `q = −1` a fermion-like pair, and `q = 0`
//! a mutually-inverse pair. Every expression built from such generators
//! carries a *grade tag*, a real degree `√(φ_q/π)` per generator (additive
//! over products) and a radius `√(r_q)` (multiplicative over products), and
//! pairs of graded monomials close under the generalized bracket
//!
//! ```text
//! [A, B]_G = AB − G(A,B)·BA,      G(A,B) = e^{iπ|A||B|} ℓ(A) ℓ(B),
//! ```
//!
//! which interpolates commutator, anticommutator and q-commutator.
//!
//! The crate provides:
//!
//! * [`param`]: deformation parameters and the degree/radius calculus;
//! * [`fock`]: dense matrix representations on a D-level truncated Fock
//!   space, with per-operator tracking of the truncation-safe window;
//! * [`word`]: formal words in the generators and an exact `ℤ[q]`
//!   normal-ordering rewriter used as an independent oracle;
//! * [`bracket`]: the generalized graded bracket on represented operators;
//! * [`susy`]: the (1,−1) and (q,q̄) deformed supersymmetry models and
//!   their verification suites;
//! * [`partner`]: enumeration of admissible partner parameters q̄ that make
//!   the quadratic charge a symmetry of its Hamiltonian;
//! * [`report`]: named verification suites with machine-readable reports.
//!
//! Core numerics are generic over the scalar type through [`scalar::Real`];
//! concrete `f64` aliases are exported at the crate root.

pub mod bracket;
pub mod error;
pub mod fock;
pub mod param;
pub mod partner;
pub mod report;
pub mod scalar;
pub mod susy;
pub mod word;

pub use error::{Error, Result};
pub use scalar::Real;

/// Complex scalar over `f64`.
pub type C64 = num_complex::Complex<f64>;
/// Deformation parameter over `f64`.
pub type QParam64 = param::QParam<f64>;
/// Grade tag over `f64`.
pub type GradeTag64 = param::GradeTag<f64>;
/// Represented operator over `f64`.
pub type FockOperator64 = fock::FockOperator<f64>;
/// Diagonal operator over `f64`.
pub type DiagonalOperator64 = fock::DiagonalOperator<f64>;
/// Formal word over `f64`.
pub type Word64 = word::Word<f64>;
/// Supersymmetry model over `f64`.
pub type SusyModel64 = susy::SusyModel<f64>;
/// Partner solution over `f64`.
pub type PartnerSolution64 = partner::PartnerSolution<f64>;
