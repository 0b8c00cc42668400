//! Bounded relation-path connectivity, an independent check on the invariant.
//!
//! Two words are joined when one becomes the other by a single relator move:
//! pick a cyclic rotation `r = a·b` of a relator or its inverse, replace an
//! occurrence of `a` by `b⁻¹` (an empty `a` inserts `b⁻¹`), then freely
//! reduce. The connected components of this graph on the reduced words of
//! length at most `horizon` are computed with union-find. Any two words in a
//! component are equal in `G`; the converse holds once the horizon is large
//! enough for the words under test.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::unionfind::UnionFind;
use crate::word::{Letter, SignedWord};

use super::coset::CosetTable;
use super::invariant::{invariant, GInvariant};
use super::relators;

/// All reduced words of length `≤ max_len`, by length then letter code.
fn reduced_words(n: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for code in 0..2 * n {
                let x = Letter::from_code(code);
                if w.last() == Some(&x.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn reduce_into(buf: &mut Vec<Letter>, letters: impl IntoIterator<Item = Letter>) {
    for c in letters {
        if buf.last() == Some(&c.inverse()) {
            buf.pop();
        } else {
            buf.push(c);
        }
    }
}

/// Components of the relator-move graph on reduced words of length `≤ horizon`.
pub struct RelationComponents {
    index: HashMap<Vec<Letter>, u32>,
    uf: UnionFind,
}

impl RelationComponents {
    pub fn component(&mut self, w: &SignedWord) -> Option<usize> {
        let r = w.reduce();
        let id = *self.index.get(&r.0)? as usize;
        Some(self.uf.find(id))
    }

    pub fn word_count(&self) -> usize {
        self.index.len()
    }
}

pub fn relation_components(
    p: &Presentation,
    horizon: usize,
    word_cap: usize,
) -> Result<RelationComponents> {
    let n = p.n();
    let words = reduced_words(n, horizon);
    if words.len() > word_cap {
        return Err(Error::CapExceeded {
            what: "reduced words within the connectivity horizon",
            cap: word_cap,
        });
    }
    let index: HashMap<Vec<Letter>, u32> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i as u32))
        .collect();

    // piece a -> replacements b⁻¹ for every rotation a·b of a relator or inverse
    let mut pieces: HashMap<Vec<Letter>, Vec<Vec<Letter>>> = HashMap::new();
    let mut max_piece = 0;
    for r in relators(p) {
        for base in [r.clone(), r.inverse()] {
            let len = base.len();
            for rot in 0..len {
                let rotated: Vec<Letter> = base.0[rot..]
                    .iter()
                    .chain(&base.0[..rot])
                    .copied()
                    .collect();
                for split in 0..=len {
                    let a = rotated[..split].to_vec();
                    let b_inv: Vec<Letter> =
                        rotated[split..].iter().rev().map(|c| c.inverse()).collect();
                    max_piece = max_piece.max(a.len());
                    let entry = pieces.entry(a).or_default();
                    if !entry.contains(&b_inv) {
                        entry.push(b_inv);
                    }
                }
            }
        }
    }

    let mut uf = UnionFind::new(words.len());
    let mut buf = Vec::with_capacity(horizon + 2 * p.l() + 2);
    for (id, w) in words.iter().enumerate() {
        for i in 0..=w.len() {
            for j in i..=(i + max_piece).min(w.len()) {
                let Some(repls) = pieces.get(&w[i..j]) else {
                    continue;
                };
                for repl in repls {
                    buf.clear();
                    buf.extend_from_slice(&w[..i]);
                    reduce_into(&mut buf, repl.iter().copied());
                    reduce_into(&mut buf, w[j..].iter().copied());
                    if buf.len() <= horizon {
                        if let Some(&other) = index.get(&buf) {
                            uf.union(id, other as usize);
                        }
                    }
                }
            }
        }
    }
    Ok(RelationComponents { index, uf })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    /// Length of the words compared pairwise.
    pub word_length: usize,
    /// Longest intermediate word allowed on a relation path.
    pub horizon: usize,
    pub words_checked: usize,
    pub distinct_invariants: usize,
    /// Pairs with equal invariants but no relation path within the horizon.
    pub unexplained_pairs: usize,
    /// Pairs joined by a relation path but with different invariants.
    pub unsound_pairs: usize,
    pub example: Option<(SignedWord, SignedWord)>,
}

impl CompletenessReport {
    pub fn passed(&self) -> bool {
        self.unexplained_pairs == 0 && self.unsound_pairs == 0
    }
}

/// Compares "equal invariants" with "joined by relator moves within
/// `horizon`" on all reduced words of length `≤ word_length`.
pub fn completeness_check(
    p: &Presentation,
    ct: &CosetTable,
    word_length: usize,
    horizon: usize,
    word_cap: usize,
) -> Result<CompletenessReport> {
    let mut comps = relation_components(p, horizon.max(word_length), word_cap)?;
    let words = reduced_words(p.n(), word_length);
    let keyed: Vec<(GInvariant, usize)> = words
        .iter()
        .map(|w| {
            let sw = SignedWord(w.clone());
            let comp = comps.component(&sw).expect("word within horizon");
            (invariant(&sw, p, ct), comp)
        })
        .collect();
    // (invariant, component) -> (count, first word)
    let mut cells: HashMap<&(GInvariant, usize), (usize, usize)> = HashMap::new();
    for (i, key) in keyed.iter().enumerate() {
        cells.entry(key).or_insert((0, i)).0 += 1;
    }
    let mut by_inv: HashMap<&GInvariant, Vec<(usize, usize)>> = HashMap::new();
    let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for ((inv, comp), &(count, first)) in &cells {
        by_inv.entry(inv).or_default().push((count, first));
        by_comp.entry(*comp).or_default().push(count);
    }
    // pairs that share a group but fall in different cells
    let cross_pairs = |sizes: &[usize]| -> usize {
        let total: usize = sizes.iter().sum();
        let same: usize = sizes.iter().map(|s| s * (s - 1) / 2).sum();
        total * (total.saturating_sub(1)) / 2 - same
    };
    let mut unexplained_pairs = 0;
    let mut example: Option<(usize, usize)> = None;
    for group in by_inv.values() {
        if group.len() > 1 {
            let sizes: Vec<usize> = group.iter().map(|c| c.0).collect();
            unexplained_pairs += cross_pairs(&sizes);
            let mut firsts: Vec<usize> = group.iter().map(|c| c.1).collect();
            firsts.sort();
            let candidate = (firsts[0], firsts[1]);
            if example.is_none_or(|e| candidate < e) {
                example = Some(candidate);
            }
        }
    }
    let unsound_pairs: usize = by_comp.values().map(|sizes| cross_pairs(sizes)).sum();
    let example =
        example.map(|(a, b)| (SignedWord(words[a].clone()), SignedWord(words[b].clone())));
    Ok(CompletenessReport {
        word_length,
        horizon,
        words_checked: words.len(),
        distinct_invariants: by_inv.len(),
        unexplained_pairs,
        unsound_pairs,
        example,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::invariant::UniversalGroup;

    #[test]
    fn reduced_word_counts() {
        // 1 + 2n(2n-1)^(k-1) words of each length k
        assert_eq!(reduced_words(2, 3).len(), 1 + 4 + 12 + 36);
        assert!(reduced_words(3, 3)
            .iter()
            .all(|w| SignedWord(w.clone()).is_reduced()));
    }

    #[test]
    fn sym2_commutation_is_one_move() {
        let g = UniversalGroup::new(Presentation::from_cycles(2, 2, &["(1 2)"]).unwrap()).unwrap();
        let mut comps = relation_components(g.presentation(), 2, 1000).unwrap();
        let a = comps.component(&SignedWord::parse("x1 x2", 2).unwrap());
        let b = comps.component(&SignedWord::parse("x2 x1", 2).unwrap());
        assert_eq!(a, b);
        let c = comps.component(&SignedWord::parse("x1 x1", 2).unwrap());
        assert_ne!(a, c);
    }

    #[test]
    fn small_completeness() {
        let g = UniversalGroup::new(Presentation::from_cycles(2, 2, &["(1 2)"]).unwrap()).unwrap();
        let report = completeness_check(g.presentation(), g.table(), 3, 5, 100_000).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}
