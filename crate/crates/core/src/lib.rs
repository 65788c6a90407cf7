//! Computational toolkit for Brunnian braids on the disk and the projective
//! plane: free-group words, Stallings folding, kernel bases for projection
//! families, finitely presented groups with coset enumeration, Garside normal
//! forms for Artin braids, and the semidirect model of `P₃(ℝP²)`.

// coset tables and integer matrices are indexed in lockstep
#![allow(clippy::needless_range_loop)]

pub mod disk_braids;
pub mod error;
pub mod free_words;
pub mod kernel_basis;
pub mod presentations;
pub mod rp2_braids;
pub mod stallings;
pub mod syntax;

pub use error::{Error, Result};
pub use free_words::{commutator, Alphabet, FreeHom, Letter, Word};
