//! Recursive block-resolution edge-colorings of complete graphs on `{0,1}^α`
//! and the machinery to check their `(p, q)`-coloring properties.
//!
//! A `(p, q)`-coloring of `K_n` is an edge-coloring in which every `K_p`
//! receives at least `q` distinct colors. The coloring `c_p` built here on
//! `{0,1}^α` is a `(p+3, p+2)`-coloring for every resolution chain, while
//! using few colors when `r_d = β^d`.
//!
//! * [`vectors`]: bit vectors, projections, block decompositions.
//! * [`colorings`]: `η_d`, `ξ_d`, `c_p`, the `h_d` variant, `γ_d`, Mubayi's coloring.
//! * [`analysis`]: refinement checks, subset decompositions, color censuses,
//!   parameter choice, counterexamples, the exact `f(n,p,q)` oracle.
//! * [`verifier`]: exhaustive and sampled `(p, q)` verification.

pub mod analysis;
pub mod colorings;
mod error;
pub mod table;
pub mod vectors;
pub mod verifier;

pub use error::{Error, Result};
