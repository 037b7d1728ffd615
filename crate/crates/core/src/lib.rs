//! Subword complexes of finite Coxeter groups and their elementary
//! transformations.
//!
//! The crate is organized around five layers:
//!
//! - [`coxeter`]: exact finite Coxeter systems (root permutation model for
//!   the crystallographic and `H` families, a direct dihedral model for
//!   `I2(m)`), group elements, lengths, descents.
//! - [`words`]: words over the generator alphabet, elementary moves
//!   (Hecke nil, doubling, braid), Demazure products, embedded reduced
//!   expressions, rewriting to the 0-Hecke normal form, c-sorting words.
//! - [`simplicial`]: facet-based simplicial complexes with link, star,
//!   join, suspension, edge subdivision and its inverse, f-vectors and
//!   isomorphism testing.
//! - [`subword`]: the subword complex `Δ(Q; ρ)`, the sphericity criterion,
//!   link specs, cluster and multi-cluster families.
//! - [`transforms`]: the doubling transformation of a subword complex, its
//!   verification (suspension vs. inverse edge subdivision dichotomy, link
//!   identification), and replayable scripts from the 0-Hecke normal form
//!   of `Q` back up to `Q`.

pub mod coxeter;
pub mod io;
pub mod simplicial;
pub mod subword;
pub mod transforms;
pub mod words;

mod error;

pub use error::{Error, Result};
