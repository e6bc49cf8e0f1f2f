//! Exact symbolic engine and decision toolkit for cuspidality of
//! GL(2) x GL(3) functorial products.
//!
//! The crate is organized around three independent models of the same
//! local data, plus the decision layer that ties them together:
//!
//! * [`charalg`] / [`isobaric`] — unramified local parameters as multisets
//!   of abelian characters over a free-with-torsion generator basis, with
//!   the isobaric sum/functorial product calculus (`boxplus`, `boxtimes`,
//!   `sym_k`, `ext_k`, adjoint, twisted fourth symmetric power) and the
//!   identity verifiers the decision layer leans on.
//! * [`galois`] — finite groups as stand-ins for Weil groups: exact
//!   character theory over cyclotomic integers (induction, restriction,
//!   Adams operations, self-twists, dihedral/tetrahedral/octahedral
//!   classification) together with a catalog of the groups that matter
//!   at this degree.
//! * [`lfactor`] / [`hecke`] / [`arch`] — the numeric plumbing: Euler
//!   factors and partial Dirichlet series, Hecke eigenvalue tables with
//!   the non-selfduality witness scan, and archimedean parameter
//!   bookkeeping (regularity, cohomological types, degree windows).
//!
//! [`criterion`] implements the cuspidality decision trees over symbolic
//! descriptors and cross-validates them against brute-force decomposition
//! in the finite-group model. [`numlemma`] checks the elementary
//! complex-number facts the chain of reasoning bottoms out in, both on
//! exact root-of-unity data and on random floating-point samples.

pub mod charalg;
pub mod cyclotomic;
pub mod error;
pub mod galois;
pub mod isobaric;
pub mod report;
pub mod arch;
pub mod criterion;
pub mod lfactor;
pub mod numlemma;
pub mod hecke;

pub use charalg::{Character, EvalValue, GeneratorBasis, NumericEmbedding, RootOfUnity};
pub use criterion::{Decision, Gl2Descriptor, Gl3Descriptor, Verdict};
pub use cyclotomic::Cyclotomic;
pub use error::Error;
pub use galois::{ClassFunction, FiniteGroup, Subgroup};
pub use isobaric::LocalParameter;
pub use hecke::{FieldTag, FieldValue, GroupTag, HeckeTable, RemoteConfig, WitnessReport};
pub use lfactor::{DenomPolynomial, EulerFactor, PartialLSeries};
pub use report::{CheckRecord, RunReport};

/// Default relative tolerance for floating-point identity checks.
///
/// Everything exact stays exact; this only applies where an embedding or
/// an input table hands us genuine complex numbers.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
