//! The universal group `G_{n,l}(H)`.
//!
//! `G` has the same generators and relations as the monoid, read as a group
//! presentation. Two facts make its word problem decidable here:
//!
//! * the map `π` sending each `x_i` to the representative of its orbit is an
//!   epimorphism onto the free group on the representatives, and it is
//!   injective on the subgroup `F` they generate, so `ker π ∩ F = 1`;
//! * `F` has finite index, so Todd–Coxeter enumeration of `F\G` terminates.
//!
//! If `π(g) = π(h)` and `Fg = Fh`, then `gh⁻¹ ∈ F ∩ ker π = 1`. The pair
//! (`π(g)`, coset of `Fg`) is therefore a complete invariant; see
//! [`GInvariant`].

mod analysis;
mod connectivity;
mod coset;
mod invariant;
mod lemmas;
mod normal_form;

pub use analysis::{
    embedding_check, growth_g, index_report, EmbeddingVerdict, IndexReport, DEFAULT_STATE_CAP,
};
pub use connectivity::{completeness_check, relation_components, CompletenessReport};
pub use coset::{default_coset_cap, todd_coxeter, todd_coxeter_with_cap, CosetTable};
pub use invariant::{equal_g, invariant, GInvariant, UniversalGroup};
pub use lemmas::{
    verify_lemma_identities, Identity, IdentityFailure, LemmaReport, DEFAULT_LEMMA_SEED,
};
pub use normal_form::{canonical_tails, normal_form, NormalForm, TailTable};

use std::collections::HashSet;

use crate::presentation::Presentation;
use crate::word::{Letter, SignedWord};

/// Free reduction.
pub fn reduce(w: &SignedWord) -> SignedWord {
    w.reduce()
}

/// Image under `π`: every letter replaced by its orbit representative, then
/// freely reduced.
pub fn pi(w: &SignedWord, p: &Presentation) -> SignedWord {
    SignedWord(
        w.letters()
            .iter()
            .map(|c| c.with_gen(p.rep_of(c.gen())))
            .collect(),
    )
    .reduce()
}

/// Defining relators `x_{i_1}⋯x_{i_l} (x_{σ(i_1)}⋯x_{σ(i_l)})⁻¹` for every
/// non-identity generator `σ` of `H` and every tuple, in generator-then-lex
/// order, freely reduced, with empty and repeated relators dropped.
pub fn relators(p: &Presentation) -> Vec<SignedWord> {
    let n = p.n();
    let l = p.l();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let total = n.pow(l as u32);
    for sigma in p.group().generators() {
        if sigma.is_identity() {
            continue;
        }
        for idx in 0..total {
            let mut tuple = vec![0usize; l];
            let mut x = idx;
            for slot in tuple.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            let lhs: Vec<Letter> = tuple.iter().map(|&i| Letter::pos(i)).collect();
            let rhs: Vec<Letter> = tuple
                .iter()
                .rev()
                .map(|&i| Letter::neg(sigma.apply(i)))
                .collect();
            let r = SignedWord([lhs, rhs].concat()).reduce();
            if !r.is_empty() && seen.insert(r.clone()) {
                out.push(r);
            }
        }
    }
    out
}
