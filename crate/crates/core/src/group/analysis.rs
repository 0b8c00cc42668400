use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::LengthPartition;
use crate::perm::Perm;
use crate::permgroup::close_elements;
use crate::presentation::Presentation;
use crate::word::{Letter, PosWord, SignedWord};

use super::coset::CosetTable;
use super::invariant::GInvariant;

/// Largest number of group elements visited by [`growth_g`].
pub const DEFAULT_STATE_CAP: usize = 2_000_000;
const CORE_ORDER_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// `[G:F]`, the number of cosets.
    pub index: usize,
    /// `|H|^{l-1}`.
    pub bound: usize,
    pub within_bound: bool,
    /// `|ker π|`. Since `G = ker π · F` with trivial intersection, this equals
    /// the index; it is recomputed here as the orbit of `F` under `ker π`.
    pub ker_pi_order: usize,
    /// `|G/M|` where `M` is the core of `F`, i.e. the order of the permutation
    /// group induced on the cosets.
    pub core_index: usize,
    /// `|G/M|²`.
    pub radical_nilpotency_bound: usize,
}

pub fn index_report(p: &Presentation, ct: &CosetTable) -> Result<IndexReport> {
    let index = ct.num_cosets();
    let bound = p.index_bound();
    let action: Vec<Perm> = (0..p.n())
        .map(|g| Perm::from_images(ct.permutation(Letter::pos(g))))
        .collect::<Result<_>>()?;
    let induced = close_elements(index, &action, CORE_ORDER_CAP)?;
    let core_index = induced.len();
    Ok(IndexReport {
        index,
        bound,
        within_bound: index <= bound,
        ker_pi_order: kernel_orbit_size(p, &action, &induced),
        core_index,
        radical_nilpotency_bound: core_index * core_index,
    })
}

/// Number of cosets `Fg` with `g ∈ ker π`.
///
/// `ker π` is the normal closure of `{x_i x_{rep(i)}^{-1}}`. A conjugate
/// `t k t^{-1}` acts on cosets through the image of `t` in the finite induced
/// group, so conjugating by every element of that group gives generators for
/// the action of `ker π`; the answer is the orbit of `F` under them.
fn kernel_orbit_size(p: &Presentation, action: &[Perm], induced: &[Perm]) -> usize {
    let mut conjugates: Vec<Perm> = Vec::new();
    for i in (0..p.n()).filter(|&i| !p.is_rep(i)) {
        let k = action[i].then(&action[p.rep_of(i)].inverse());
        for t in induced {
            conjugates.push(t.then(&k).then(&t.inverse()));
        }
    }
    let mut reached: HashSet<usize> = HashSet::from([0]);
    let mut stack = vec![0usize];
    while let Some(c) = stack.pop() {
        for q in &conjugates {
            let d = q.apply(c);
            if reached.insert(d) {
                stack.push(d);
            }
        }
    }
    reached.len()
}

/// `b(m)` for `m = 0..=m_max`: the number of elements of `G` representable by
/// signed words of length at most `m`.
pub fn growth_g(p: &Presentation, ct: &CosetTable, m_max: usize, cap: usize) -> Result<Vec<usize>> {
    let step = |s: &GInvariant, x: Letter| -> GInvariant {
        let mut w = s.pi_word.0.clone();
        let y = x.with_gen(p.rep_of(x.gen()));
        if w.last() == Some(&y.inverse()) {
            w.pop();
        } else {
            w.push(y);
        }
        GInvariant {
            pi_word: SignedWord(w),
            coset: ct.act(s.coset, x),
        }
    };
    let mut seen: HashSet<GInvariant> = HashSet::new();
    seen.insert(GInvariant::identity());
    let mut frontier = vec![GInvariant::identity()];
    let mut out = vec![1];
    for _ in 1..=m_max {
        let mut next = Vec::new();
        for s in &frontier {
            for code in 0..2 * p.n() {
                let t = step(s, Letter::from_code(code));
                if !seen.contains(&t) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "group elements in growth ball",
                            cap,
                        });
                    }
                    seen.insert(t.clone());
                    next.push(t);
                }
            }
        }
        out.push(seen.len());
        frontier = next;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EmbeddingVerdict {
    /// Monoid and group equality agree on all positive words up to `bound`.
    Consistent { bound: usize },
    /// `u = v` in `G` but not in `S`: `S` does not embed in `G`.
    NonEmbedding { u: PosWord, v: PosWord },
    /// `u = v` in `S` but not in `G`. Impossible for a correct implementation.
    Inconsistent { u: PosWord, v: PosWord },
}

/// Compares equality in `S` and in `G` on all pairs of positive words of equal
/// length `≤ bound`. The reported non-embedding pair is the first by length,
/// then lexicographically by `(u, v)` with `u < v`.
pub fn embedding_check(
    p: &Presentation,
    ct: &CosetTable,
    bound: usize,
) -> Result<EmbeddingVerdict> {
    let n = p.n();
    let mut first_witness = None;
    for m in 0..=bound {
        let part = LengthPartition::new(p, m)?;
        let mut class_inv: Vec<Option<usize>> = vec![None; part.class_count()];
        let mut inv_ids: HashMap<GInvariant, usize> = HashMap::new();
        let mut inv_of_rank = Vec::with_capacity(part.word_count());
        for rank in 0..part.word_count() {
            let w = PosWord::unrank(rank, m, n);
            let sw = SignedWord::from(&w);
            let inv = GInvariant {
                pi_word: SignedWord(sw.0.iter().map(|c| c.with_gen(p.rep_of(c.gen()))).collect()),
                coset: ct.trace(0, &sw),
            };
            let next_id = inv_ids.len();
            let id = *inv_ids.entry(inv).or_insert(next_id);
            inv_of_rank.push(id);
            let c = part.class_of_rank(rank);
            match class_inv[c] {
                None => class_inv[c] = Some(id),
                Some(other) if other != id => {
                    return Ok(EmbeddingVerdict::Inconsistent {
                        u: part.canonical(c),
                        v: w,
                    });
                }
                _ => {}
            }
        }
        if first_witness.is_none() {
            // least u whose invariant is shared with a later word of another class
            'outer: for u in 0..part.word_count() {
                let id = inv_of_rank[u];
                let cu = part.class_of_rank(u);
                for (v, &other) in inv_of_rank.iter().enumerate().skip(u + 1) {
                    if other == id && part.class_of_rank(v) != cu {
                        first_witness = Some(EmbeddingVerdict::NonEmbedding {
                            u: PosWord::unrank(u, m, n),
                            v: PosWord::unrank(v, m, n),
                        });
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(first_witness.unwrap_or(EmbeddingVerdict::Consistent { bound }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{equal_g, invariant::UniversalGroup};
    use crate::monoid::equal_s;
    use crate::permgroup::PermGroup;

    fn group(n: usize, l: usize, gens: &[&str]) -> UniversalGroup {
        UniversalGroup::new(Presentation::from_cycles(n, l, gens).unwrap()).unwrap()
    }

    #[test]
    fn index_report_examples() {
        let g = group(2, 2, &["(1 2)"]);
        let r = index_report(g.presentation(), g.table()).unwrap();
        assert_eq!(
            (r.index, r.bound, r.core_index, r.radical_nilpotency_bound),
            (2, 2, 2, 4)
        );
        assert_eq!(r.ker_pi_order, 2);
        let g =
            UniversalGroup::new(Presentation::new(3, 3, PermGroup::trivial(3).unwrap()).unwrap())
                .unwrap();
        let r = index_report(g.presentation(), g.table()).unwrap();
        assert_eq!((r.index, r.bound, r.radical_nilpotency_bound), (1, 1, 1));
        let g = group(3, 2, &["(1 2 3)"]);
        let r = index_report(g.presentation(), g.table()).unwrap();
        assert_eq!((r.index, r.bound), (3, 3));
        assert_eq!(r.ker_pi_order, r.index);
    }

    #[test]
    fn growth_examples() {
        let g = group(3, 2, &["(1 2 3)"]);
        let b = growth_g(g.presentation(), g.table(), 12, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(b[0], 1);
        let inc: Vec<usize> = b.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(inc[6..].windows(2).all(|w| w[0] == w[1]), "{b:?}");
        let g = group(3, 2, &["(1 2)"]);
        let b = growth_g(g.presentation(), g.table(), 8, DEFAULT_STATE_CAP).unwrap();
        for (m, &bm) in b.iter().enumerate() {
            assert!(bm >= 1 << m);
        }
    }

    #[test]
    fn embedding_examples() {
        let g = group(3, 2, &["(1 2 3)"]);
        assert_eq!(
            embedding_check(g.presentation(), g.table(), 5).unwrap(),
            EmbeddingVerdict::Consistent { bound: 5 }
        );
        let g =
            UniversalGroup::new(Presentation::new(3, 2, PermGroup::symmetric(3).unwrap()).unwrap())
                .unwrap();
        match embedding_check(g.presentation(), g.table(), 5).unwrap() {
            EmbeddingVerdict::NonEmbedding { u, v } => {
                assert!(equal_g(
                    &SignedWord::from(&u),
                    &SignedWord::from(&v),
                    g.presentation(),
                    g.table()
                ));
                assert!(!equal_s(&u, &v, g.presentation()).unwrap());
            }
            other => panic!("expected a non-embedding witness, got {other:?}"),
        }
    }
}
