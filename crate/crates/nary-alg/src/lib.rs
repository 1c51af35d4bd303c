//! Exact computation of derivation-type operator spaces for
//! finite-dimensional color n-ary algebras given by structure constants.
//!
//! The crate provides:
//!
//! - exact linear algebra over the rationals or a prime field
//!   ([`scalar`], [`matrix`], [`subspace`]);
//! - color n-ary algebras with grading and bicharacter, an identity
//!   evaluation engine, and a small catalog of standard algebras
//!   ([`algebra`], [`identity`], [`catalog`]);
//! - solvers for the operator-space classes (derivations, generalized
//!   derivations, quasiderivation pairs, centroid, quasicentroid, central
//!   derivations) plus the closure and structure batteries on them
//!   ([`opspace`], [`closures`]);
//! - the doubled algebra construction, the embedding of quasiderivations
//!   as derivations of the double, and the direct-sum decomposition check
//!   ([`extension`]);
//! - induced module actions on exterior, symmetric, and tensor powers with
//!   the kernel criterion and endomorphism classification checks
//!   ([`modact`]);
//! - a JSON document schema for algebras ([`io`]).
//!
//! Heavy inner loops run data-parallel under the `parallel` feature
//! (enabled by default); disabling it yields a dependency-free sequential
//! build with identical results.

pub mod algebra;
pub mod bicharacter;
pub mod catalog;
pub mod closures;
pub mod error;
pub mod exec;
pub mod extension;
pub mod group;
pub mod homs;
pub mod identity;
pub mod io;
pub mod matrix;
pub mod modact;
pub mod opspace;
pub mod scalar;
pub mod subspace;

pub use algebra::{Closure, GradedAlgebra};
pub use bicharacter::Bicharacter;
pub use error::Error;
pub use exec::Exec;
pub use group::{AbelianGroup, GroupElement};
pub use homs::HomMap;
pub use matrix::Matrix;
pub use opspace::{OperatorClass, OperatorFamily, OperatorSpace, PairSide};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
