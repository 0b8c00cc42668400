//! Normal forms `g = f · x_{σ_1(1)} ⋯ x_{σ_{l-1}(1)}` with `f ∈ F`.
//!
//! [`normal_form`] first runs the constructive procedure letter by letter:
//!
//! * empty word: `1 = x_1^{1-l} · x_1^{l-1}`;
//! * first letter `x_{σ(k)}`: `x_k x_1^{1-l} · x_1^{l-2} x_{σ(1)}`, and
//!   `x_{σ(k)}^{-1}`: `x_k^{-1} x_1^{1-l} · x_{σ(1)}^{l-1}`;
//! * every further letter is absorbed into the tail with the identities
//!   `x_{σ_1(1)}⋯x_{σ_{l-1}(1)} x_{σ_l(j)} = x_1^{l-1} x_j x_1^{1-l} · x_{σ_1^{-1}σ_2(1)}⋯x_{σ_1^{-1}σ_l(1)}`
//!   and
//!   `x_{σ_1(1)}⋯x_{σ_{l-1}(1)} x_{σ_l(j)}^{-1} = x_1^{l-1} x_j^{-1} x_1^{1-l} · x_{ρ(1)} x_{ρσ_1(1)}⋯x_{ρσ_{l-2}(1)}`
//!   with `ρ = σ_l σ_{l-1}^{-1}`.
//!
//! The tail it produces depends on the word, not only on the element, so the
//! result is then canonicalised: the tail is replaced by the lexicographically
//! least tail reaching the same coset of `F`, and `f` becomes
//! `π(w) x_1^{1-l}` (the only element of `F` that fits, since `π` is injective
//! on `F` and every tail maps to `x_1^{l-1}`).

use serde::Serialize;

use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::word::{Letter, SignedWord};

use super::coset::CosetTable;
use super::pi;

/// Output of [`normal_form`]. Tail entries are 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    /// Reduced word over the orbit representatives.
    pub f: SignedWord,
    /// Canonical tail: lexicographically least among tails in the same coset.
    pub tail: Vec<usize>,
    /// Tail produced by the letter-by-letter procedure before canonicalisation.
    pub derived_tail: Vec<usize>,
    /// `F`-part produced by the procedure.
    pub derived_f: SignedWord,
}

impl NormalForm {
    /// `f · x_tail` as a signed word.
    pub fn word(&self) -> SignedWord {
        compose(&self.f, &self.tail)
    }

    pub fn derived_word(&self) -> SignedWord {
        compose(&self.derived_f, &self.derived_tail)
    }
}

fn compose(f: &SignedWord, tail: &[usize]) -> SignedWord {
    let t: Vec<usize> = tail.iter().map(|&k| k - 1).collect();
    f.concat(&SignedWord::positive(&t))
}

/// For every coset of `F`, the least tail (over the orbit of 1) reaching it,
/// and how many tails do.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailTable {
    /// 0-based points, indexed by 0-based coset.
    pub canonical: Vec<Vec<usize>>,
    /// Number of tails landing in each coset.
    pub multiplicity: Vec<usize>,
}

impl TailTable {
    /// Cosets reached by more than one tail.
    pub fn collisions(&self) -> usize {
        self.multiplicity.iter().filter(|&&m| m > 1).count()
    }
}

pub fn canonical_tails(p: &Presentation, ct: &CosetTable) -> TailTable {
    let orbit = p.group().orbit_of(0).to_vec();
    let len = p.l() - 1;
    let mut canonical: Vec<Option<Vec<usize>>> = vec![None; ct.num_cosets()];
    let mut multiplicity = vec![0; ct.num_cosets()];
    let total = orbit.len().pow(len as u32);
    for idx in 0..total {
        let mut tail = vec![0usize; len];
        let mut x = idx;
        for slot in tail.iter_mut().rev() {
            *slot = orbit[x % orbit.len()];
            x /= orbit.len();
        }
        let c = ct.trace(0, &SignedWord::positive(&tail));
        multiplicity[c] += 1;
        if canonical[c].is_none() {
            canonical[c] = Some(tail);
        }
    }
    TailTable {
        canonical: canonical
            .into_iter()
            .map(|t| t.expect("every coset of F is reached by some tail"))
            .collect(),
        multiplicity,
    }
}

/// State of the procedure: `g = f · x_{σ_1(1)} ⋯ x_{σ_{l-1}(1)}`.
struct Decomposition {
    f: Vec<Letter>,
    sigmas: Vec<Perm>,
}

impl Decomposition {
    fn tail_points(&self) -> Vec<usize> {
        self.sigmas.iter().map(|s| s.apply(0)).collect()
    }
}

fn push_power(f: &mut Vec<Letter>, gen: usize, exp: i64) {
    f.extend(SignedWord::power(gen, exp).0);
}

/// Element of `H` taking the representative of `y`'s orbit to `y`.
fn transversal(p: &Presentation, y: usize) -> (usize, Perm) {
    let j = p.rep_of(y);
    let sigma = p
        .group()
        .element_mapping(j, y)
        .expect("orbit membership guarantees a transversal element")
        .clone();
    (j, sigma)
}

fn start(p: &Presentation, first: Option<Letter>) -> Decomposition {
    let l = p.l() as i64;
    let n = p.n();
    let id = Perm::identity(n);
    let mut f = Vec::new();
    match first {
        None => {
            push_power(&mut f, 0, 1 - l);
            Decomposition {
                f,
                sigmas: vec![id; p.l() - 1],
            }
        }
        Some(x) => {
            let (k, sigma) = transversal(p, x.gen());
            if !x.is_inverse() {
                f.push(Letter::pos(k));
                push_power(&mut f, 0, 1 - l);
                let mut sigmas = vec![id; p.l() - 2];
                sigmas.push(sigma);
                Decomposition { f, sigmas }
            } else {
                f.push(Letter::neg(k));
                push_power(&mut f, 0, 1 - l);
                Decomposition {
                    f,
                    sigmas: vec![sigma; p.l() - 1],
                }
            }
        }
    }
}

fn absorb(p: &Presentation, state: &mut Decomposition, x: Letter) {
    let l = p.l() as i64;
    let (j, sigma_l) = transversal(p, x.gen());
    push_power(&mut state.f, 0, l - 1);
    state.f.push(Letter::new(j, x.is_inverse()));
    push_power(&mut state.f, 0, 1 - l);
    let sigmas = &state.sigmas;
    let next: Vec<Perm> = if !x.is_inverse() {
        // σ_1^{-1} σ_i for i = 2..l
        let s1_inv = sigmas[0].inverse();
        sigmas[1..]
            .iter()
            .chain(std::iter::once(&sigma_l))
            .map(|s| s.then(&s1_inv))
            .collect()
    } else {
        // ρ = σ_l σ_{l-1}^{-1}; then ρ, ρσ_1, …, ρσ_{l-2}
        let rho = sigmas[sigmas.len() - 1].inverse().then(&sigma_l);
        std::iter::once(rho.clone())
            .chain(sigmas[..sigmas.len() - 1].iter().map(|s| s.then(&rho)))
            .collect()
    };
    state.sigmas = next;
}

/// Runs the procedure on the freely reduced form of `w`, then canonicalises.
pub fn normal_form(
    w: &SignedWord,
    p: &Presentation,
    ct: &CosetTable,
    tails: &TailTable,
) -> NormalForm {
    let reduced = w.reduce();
    let letters = reduced.letters();
    let mut state = start(p, letters.first().copied());
    for &x in letters.iter().skip(1) {
        absorb(p, &mut state, x);
    }
    let derived_f = SignedWord(state.f.clone()).reduce();
    let derived_tail: Vec<usize> = state.tail_points().iter().map(|k| k + 1).collect();

    let coset = ct.trace(0, w);
    let tail: Vec<usize> = tails.canonical[coset].iter().map(|k| k + 1).collect();
    let f = pi(w, p)
        .concat(&SignedWord::power(0, 1 - p.l() as i64))
        .reduce();
    NormalForm {
        f,
        tail,
        derived_tail,
        derived_f,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::invariant::{equal_g, UniversalGroup};

    fn setup(n: usize, l: usize, gens: &[&str]) -> (UniversalGroup, TailTable) {
        let g = UniversalGroup::new(Presentation::from_cycles(n, l, gens).unwrap()).unwrap();
        let t = canonical_tails(g.presentation(), g.table());
        (g, t)
    }

    #[test]
    fn empty_word() {
        let (g, t) = setup(2, 2, &["(1 2)"]);
        let nf = normal_form(&SignedWord::empty(), g.presentation(), g.table(), &t);
        assert_eq!(nf.derived_f, SignedWord::parse("x1^-1", 2).unwrap());
        assert_eq!(nf.derived_tail, vec![1]);
        assert_eq!(nf.f, nf.derived_f);
        assert_eq!(nf.tail, vec![1]);
    }

    #[test]
    fn single_letter_cyclic() {
        let (g, t) = setup(3, 2, &["(1 2 3)"]);
        let w = SignedWord::parse("x2", 3).unwrap();
        let nf = normal_form(&w, g.presentation(), g.table(), &t);
        assert!([1, 2, 3].contains(&nf.tail[0]));
        assert!(equal_g(&nf.word(), &w, g.presentation(), g.table()));
        assert!(equal_g(&nf.derived_word(), &w, g.presentation(), g.table()));
    }

    #[test]
    fn round_trips_on_short_words() {
        for (n, l, gens) in [
            (2, 2, vec!["(1 2)"]),
            (3, 2, vec!["(1 2 3)"]),
            (3, 2, vec!["(1 2)", "(1 3)"]),
            (3, 3, vec!["(1 2)"]),
            (3, 3, vec!["(1 2)", "(1 3)"]),
        ] {
            let (g, t) = setup(n, l, &gens);
            let p = g.presentation();
            let orbit1: Vec<usize> = p.group().orbit_of(0).iter().map(|k| k + 1).collect();
            for len in 0..=3 {
                for code in 0..(2 * n).pow(len) {
                    let mut x = code;
                    let mut letters = Vec::new();
                    for _ in 0..len {
                        letters.push(Letter::from_code(x % (2 * n)));
                        x /= 2 * n;
                    }
                    let w = SignedWord(letters);
                    let nf = normal_form(&w, p, g.table(), &t);
                    assert!(equal_g(&nf.derived_word(), &w, p, g.table()), "{p} {w}");
                    assert!(equal_g(&nf.word(), &w, p, g.table()), "{p} {w}");
                    assert_eq!(nf.tail.len(), l - 1);
                    assert!(nf.derived_tail.iter().all(|k| orbit1.contains(k)));
                    assert!(nf.tail.iter().all(|k| orbit1.contains(k)));
                    assert_eq!(nf.f, nf.derived_f);
                }
            }
        }
    }
}
