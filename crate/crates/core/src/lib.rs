//! Monoids `S_{n,l}(H)` and groups `G_{n,l}(H)` presented by permutation
//! relations of fixed length
//!
//! ```text
//! x_{i_1} ⋯ x_{i_l} = x_{σ(i_1)} ⋯ x_{σ(i_l)}     (σ ∈ H ≤ Sym_n)
//! ```
//!
//! with word problems, Todd–Coxeter enumeration of the cosets of the
//! subgroup generated by orbit representatives, normal forms, growth
//! functions, and bounded checks of cancellativity and embedding.
//!
//! Points and generators are 0-based in the API and 1-based in all text
//! (`x1`, cycle notation, reports).

pub mod cli;
pub mod error;
pub mod freemonoid;
pub mod group;
pub mod monoid;
pub mod perm;
pub mod permgroup;
pub mod presentation;

pub mod unionfind;
pub mod word;

pub use error::{Error, Result};
pub use perm::{parse_perm, Perm};
pub use permgroup::{all_subgroups, Classification, PermGroup};
pub use presentation::Presentation;
pub use word::{all_signed_words, Letter, PosWord, SignedWord};
