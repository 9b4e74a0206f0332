//! Context-free grammar calculus on Laurent polynomials.
//!
//! A grammar assigns to each letter a Laurent polynomial; the induced
//! formal derivative `D` is linear and satisfies the Leibniz rule. Iterating
//! `D` on a starting word produces generating polynomials for permutations,
//! Stirling permutations, partitions into lists and increasing trees. This
//! crate computes those iterates exactly, checks them against brute-force
//! enumeration, and implements a bijection between permutations with `k`
//! exterior peaks and increasing trees with `2k+1` vertices of even degree.

pub mod bijection;
pub mod cli;
pub mod combinat;
pub mod grammar;
pub mod laurent;
pub mod series;
pub mod verify;

pub use laurent::{LaurentError, LaurentPoly, Monomial, VarId};
