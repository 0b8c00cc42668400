//! Mechanical checks of the rewriting identities that hold in `G`.
//!
//! Conjugation-type identities, for `u ≥ 1` and every `σ ∈ H`:
//!
//! ```text
//! x_{j_1}⋯x_{j_u} x_{k_u}^{-1}⋯x_{k_1}^{-1}  =  x_{σ(j_1)}⋯x_{σ(j_u)} x_{σ(k_u)}^{-1}⋯x_{σ(k_1)}^{-1}
//! x_{j_1}^{-1}⋯x_{j_u}^{-1} x_{k_u}⋯x_{k_1}  =  x_{σ(j_1)}^{-1}⋯x_{σ(j_u)}^{-1} x_{σ(k_u)}⋯x_{σ(k_1)}
//! ```
//!
//! and the tail-shifting identities used by the normal form, for all
//! `σ_1, …, σ_l ∈ H` and every `j` (see [`super::normal_form`]).
//!
//! A family is checked exhaustively when it has at most
//! [`EXHAUSTIVE_LIMIT`] instances, otherwise on that many instances drawn
//! uniformly with a seeded ChaCha generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::word::{Letter, SignedWord};

use super::coset::CosetTable;
use super::invariant::equal_g;

pub const EXHAUSTIVE_LIMIT: usize = 10_000;
pub const DEFAULT_LEMMA_SEED: u64 = 0x5eed_1e44a;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Positive block followed by an inverted block.
    ConjugationPosNeg,
    /// Inverted block followed by a positive block.
    ConjugationNegPos,
    /// Tail followed by a generator.
    TailShiftPos,
    /// Tail followed by an inverse generator.
    TailShiftNeg,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub lhs: SignedWord,
    pub rhs: SignedWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub identity: Identity,
    /// Block length for the conjugation identities.
    pub u: Option<usize>,
    pub instances: usize,
    pub exhaustive: bool,
    pub failures: usize,
    pub first_failure: Option<IdentityFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub families: Vec<FamilyReport>,
    pub seed: u64,
}

impl LemmaReport {
    pub fn checked(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }

    pub fn failures(&self) -> usize {
        self.families.iter().map(|f| f.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// Decodes instance `idx` into `digits.len()` mixed-radix digits.
fn decode(mut idx: usize, radices: &[usize], digits: &mut [usize]) {
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d = idx % r;
        idx /= r;
    }
}

fn run_family(
    identity: Identity,
    u: Option<usize>,
    radices: Vec<usize>,
    rng: &mut ChaCha8Rng,
    mut check: impl FnMut(&[usize]) -> Option<IdentityFailure>,
) -> FamilyReport {
    let total = radices
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .unwrap_or(usize::MAX);
    let exhaustive = total <= EXHAUSTIVE_LIMIT;
    let instances = if exhaustive { total } else { EXHAUSTIVE_LIMIT };
    let mut digits = vec![0usize; radices.len()];
    let mut failures = 0;
    let mut first_failure = None;
    for k in 0..instances {
        if exhaustive {
            decode(k, &radices, &mut digits);
        } else {
            for (d, &r) in digits.iter_mut().zip(&radices) {
                *d = rng.gen_range(0..r);
            }
        }
        if let Some(fail) = check(&digits) {
            failures += 1;
            first_failure.get_or_insert(fail);
        }
    }
    FamilyReport {
        identity,
        u,
        instances,
        exhaustive,
        failures,
        first_failure,
    }
}

fn word(parts: &[(usize, bool)]) -> SignedWord {
    SignedWord(parts.iter().map(|&(g, inv)| Letter::new(g, inv)).collect())
}

/// Checks every identity family for block lengths `1..=u_max`.
pub fn verify_lemma_identities(
    p: &Presentation,
    ct: &CosetTable,
    u_max: usize,
    seed: u64,
) -> LemmaReport {
    let n = p.n();
    let l = p.l();
    let elements: Vec<Perm> = p.group().elements().to_vec();
    let h = elements.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut families = Vec::new();
    let holds = |lhs: SignedWord, rhs: SignedWord| {
        if equal_g(&lhs, &rhs, p, ct) {
            None
        } else {
            Some(IdentityFailure { lhs, rhs })
        }
    };

    for u in 1..=u_max {
        for (identity, first_inv) in [
            (Identity::ConjugationPosNeg, false),
            (Identity::ConjugationNegPos, true),
        ] {
            let mut radices = vec![n; 2 * u];
            radices.push(h);
            let report = run_family(identity, Some(u), radices, &mut rng, |d| {
                let sigma = &elements[d[2 * u]];
                let (js, ks) = d[..2 * u].split_at(u);
                let build = |map: &dyn Fn(usize) -> usize| {
                    let mut parts: Vec<(usize, bool)> =
                        js.iter().map(|&j| (map(j), first_inv)).collect();
                    parts.extend(ks.iter().map(|&k| (map(k), !first_inv)));
                    word(&parts)
                };
                holds(build(&|i| i), build(&|i| sigma.apply(i)))
            });
            families.push(report);
        }
    }

    let mut radices = vec![h; l];
    radices.push(n);
    let pow1 = |exp: i64| SignedWord::power(0, exp);
    families.push(run_family(
        Identity::TailShiftPos,
        None,
        radices.clone(),
        &mut rng,
        |d| {
            let s: Vec<&Perm> = d[..l].iter().map(|&i| &elements[i]).collect();
            let j = d[l];
            let mut lhs: Vec<(usize, bool)> =
                s[..l - 1].iter().map(|x| (x.apply(0), false)).collect();
            lhs.push((s[l - 1].apply(j), false));
            let s1_inv = s[0].inverse();
            let tail: Vec<usize> = s[1..].iter().map(|x| s1_inv.apply(x.apply(0))).collect();
            let rhs = SignedWord::product([
                &pow1(l as i64 - 1),
                &SignedWord::positive(&[j]),
                &pow1(1 - l as i64),
                &SignedWord::positive(&tail),
            ]);
            holds(word(&lhs), rhs)
        },
    ));
    families.push(run_family(
        Identity::TailShiftNeg,
        None,
        radices,
        &mut rng,
        |d| {
            let s: Vec<&Perm> = d[..l].iter().map(|&i| &elements[i]).collect();
            let j = d[l];
            let mut lhs: Vec<(usize, bool)> =
                s[..l - 1].iter().map(|x| (x.apply(0), false)).collect();
            lhs.push((s[l - 1].apply(j), true));
            // ρ = σ_l σ_{l-1}^{-1}
            let rho = s[l - 2].inverse().then(s[l - 1]);
            let mut tail = vec![rho.apply(0)];
            tail.extend(s[..l - 2].iter().map(|x| rho.apply(x.apply(0))));
            let rhs = SignedWord::product([
                &pow1(l as i64 - 1),
                &SignedWord::negative(&[j]),
                &pow1(1 - l as i64),
                &SignedWord::positive(&tail),
            ]);
            holds(word(&lhs), rhs)
        },
    ));

    LemmaReport { families, seed }
}
