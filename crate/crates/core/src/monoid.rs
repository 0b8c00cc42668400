//! The monoid `S_{n,l}(H)`.
//!
//! Every defining relation preserves length, so the congruence class of a word
//! is finite and can be found by breadth-first search over window moves: pick
//! `l` consecutive letters and apply some `σ ∈ H` to each of them. Only the
//! generators of `H` and their inverses are used as moves; a product of
//! generator moves on the same window realises every element of `H`.
//!
//! Whole-length computations (growth, cancellativity, decomposition) instead
//! partition all `n^m` words of a length with union-find.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::unionfind::UnionFind;
use crate::word::PosWord;

/// Largest congruence class explored by [`class_of`].
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;
/// Largest `n^m` enumerated by [`LengthPartition`].
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

/// A congruence class of `S`: its lexicographically least member and size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SClass {
    pub canonical: PosWord,
    pub size: usize,
}

fn apply_window(word: &[u8], start: usize, l: usize, sigma: &Perm) -> Vec<u8> {
    let mut out = word.to_vec();
    for c in &mut out[start..start + l] {
        *c = sigma.apply(*c as usize) as u8;
    }
    out
}

/// Words reachable from `w` by one window move. `w` itself is not included.
pub fn neighbors(w: &PosWord, p: &Presentation) -> BTreeSet<PosWord> {
    let l = p.l();
    let mut out = BTreeSet::new();
    if w.len() < l {
        return out;
    }
    let moves = p.group().generators_and_inverses();
    for start in 0..=w.len() - l {
        for sigma in &moves {
            let next = PosWord(apply_window(w.letters(), start, l, sigma));
            if next != *w {
                out.insert(next);
            }
        }
    }
    out
}

/// All members of the congruence class of `w`, sorted.
pub fn class_members(w: &PosWord, p: &Presentation, cap: usize) -> Result<Vec<PosWord>> {
    let mut seen: HashSet<PosWord> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for next in neighbors(&cur, p) {
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "congruence class size",
                        cap,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<PosWord> = seen.into_iter().collect();
    members.sort();
    Ok(members)
}

pub fn class_of(w: &PosWord, p: &Presentation) -> Result<SClass> {
    class_of_with_cap(w, p, DEFAULT_CLASS_CAP)
}

pub fn class_of_with_cap(w: &PosWord, p: &Presentation, cap: usize) -> Result<SClass> {
    let members = class_members(w, p, cap)?;
    Ok(SClass {
        canonical: members[0].clone(),
        size: members.len(),
    })
}

/// Equality in `S`: same length and same canonical class member.
pub fn equal_s(u: &PosWord, v: &PosWord, p: &Presentation) -> Result<bool> {
    if u.len() != v.len() {
        return Ok(false);
    }
    if u == v {
        return Ok(true);
    }
    Ok(class_of(u, p)?.canonical == class_of(v, p)?.canonical)
}

/// The congruence classes of all `n^m` words of one length `m`.
///
/// Words are addressed by their lexicographic rank (see [`PosWord::rank`]);
/// class ids are numbered in order of each class's least member.
#[derive(Debug, Clone)]
pub struct LengthPartition {
    n: usize,
    len: usize,
    class: Vec<u32>,
    canonical: Vec<u32>,
}

impl LengthPartition {
    pub fn new(p: &Presentation, len: usize) -> Result<Self> {
        Self::with_cap(p, len, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(p: &Presentation, len: usize, cap: usize) -> Result<Self> {
        let n = p.n();
        let total = n
            .checked_pow(len as u32)
            .filter(|&t| t <= cap)
            .ok_or(Error::CapExceeded {
                what: "words enumerated per length",
                cap,
            })?;
        let l = p.l();
        let mut uf = UnionFind::new(total);
        if len >= l {
            let gens: Vec<&Perm> = p
                .group()
                .generators()
                .iter()
                .filter(|g| !g.is_identity())
                .collect();
            // place values n^(len-1-i) for position i
            let mut place = vec![1usize; len];
            for i in (0..len.saturating_sub(1)).rev() {
                place[i] = place[i + 1] * n;
            }
            let mut digits = vec![0usize; len];
            for rank in 0..total {
                for start in 0..=len - l {
                    for sigma in &gens {
                        let mut other = rank;
                        for i in start..start + l {
                            let d = digits[i];
                            let e = sigma.apply(d);
                            other = other + e * place[i] - d * place[i];
                        }
                        uf.union(rank, other);
                    }
                }
                // advance the odometer
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if *d < n {
                        break;
                    }
                    *d = 0;
                }
            }
        }
        let mut class = vec![u32::MAX; total];
        let mut canonical = Vec::new();
        let mut root_id: HashMap<usize, u32> = HashMap::new();
        for (rank, slot) in class.iter_mut().enumerate() {
            let root = uf.find(rank);
            let id = *root_id.entry(root).or_insert_with(|| {
                canonical.push(rank as u32);
                (canonical.len() - 1) as u32
            });
            *slot = id;
        }
        Ok(LengthPartition {
            n,
            len,
            class,
            canonical,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.canonical.len()
    }

    #[inline]
    pub fn class_of_rank(&self, rank: usize) -> usize {
        self.class[rank] as usize
    }

    pub fn class_id(&self, w: &PosWord) -> usize {
        debug_assert_eq!(w.len(), self.len);
        self.class_of_rank(w.rank(self.n))
    }

    /// Least member of class `id`.
    pub fn canonical(&self, id: usize) -> PosWord {
        PosWord::unrank(self.canonical[id] as usize, self.len, self.n)
    }

    pub fn word_count(&self) -> usize {
        self.class.len()
    }
}

/// Class partitions for every length `0..=max_len`.
pub fn partitions_up_to(p: &Presentation, max_len: usize) -> Result<Vec<LengthPartition>> {
    (0..=max_len).map(|m| LengthPartition::new(p, m)).collect()
}

/// `g(m)` for `m = 0..=m_max`: the number of elements of `S` of length `m`.
pub fn growth_s(p: &Presentation, m_max: usize) -> Result<Vec<usize>> {
    (0..=m_max)
        .map(|m| LengthPartition::new(p, m).map(|part| part.class_count()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `a u ≡ a v` with `u ≢ v`.
    Left,
    /// `u a ≡ v a` with `u ≢ v`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Cancellativity {
    CancellativeUpTo {
        bound: usize,
    },
    Witness {
        side: Side,
        a: PosWord,
        u: PosWord,
        v: PosWord,
    },
}

impl Cancellativity {
    pub fn is_cancellative(&self) -> bool {
        matches!(self, Cancellativity::CancellativeUpTo { .. })
    }
}

/// Exhaustive search for a failure of left or right cancellation among words
/// with `|a| + |u| ≤ bound`.
///
/// Scan order: total length ascending; at each total length the left side is
/// tried before the right; then `|a|` ascending; then `a`, `u`, `v` in
/// lexicographic order with `u < v`.
pub fn cancellativity_check(p: &Presentation, bound: usize) -> Result<Cancellativity> {
    let parts = partitions_up_to(p, bound)?;
    let n = p.n();
    for total in 2..=bound {
        for side in [Side::Left, Side::Right] {
            for a_len in 1..total {
                let u_len = total - a_len;
                let whole = &parts[total];
                let short = &parts[u_len];
                let a_count = n.pow(a_len as u32);
                let u_count = n.pow(u_len as u32);
                for a in 0..a_count {
                    let key = |u: usize| match side {
                        Side::Left => whole.class_of_rank(a * u_count + u),
                        Side::Right => whole.class_of_rank(u * a_count + a),
                    };
                    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
                    for u in 0..u_count {
                        groups.entry(key(u)).or_default().push(u);
                    }
                    for u in 0..u_count {
                        let group = &groups[&key(u)];
                        let cu = short.class_of_rank(u);
                        if let Some(&v) = group
                            .iter()
                            .find(|&&v| v > u && short.class_of_rank(v) != cu)
                        {
                            return Ok(Cancellativity::Witness {
                                side,
                                a: PosWord::unrank(a, a_len, n),
                                u: PosWord::unrank(u, u_len, n),
                                v: PosWord::unrank(v, u_len, n),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(Cancellativity::CancellativeUpTo { bound })
}

/// One side of the decomposition `S = ⋃_{t∈T} F_M t` (left) or `⋃ t F_M` (right).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideDecomposition {
    /// Canonical members of `T`, by length then lexicographically.
    pub t: Vec<PosWord>,
    /// Every class of length `≤ bound` was found in `F_M·T` (resp. `T·F_M`)
    /// by direct enumeration of products.
    pub covered: bool,
    /// Length of the longest `T` member, if any.
    pub last_new_length: Option<usize>,
    /// No `T` member appeared in the last `l` lengths.
    pub stabilized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub left: SideDecomposition,
    pub right: SideDecomposition,
    pub verified_up_to: usize,
}

/// Greedy construction of `T` up to length `bound`, verified on both sides.
///
/// Classes are processed by increasing length. A class is covered when some
/// member is `x_k w'` (left) or `w' x_k` (right) with `k` an orbit
/// representative and the class of `w'` already covered; uncovered classes
/// join `T`.
pub fn decomposition_t(p: &Presentation, bound: usize) -> Result<Decomposition> {
    let parts = partitions_up_to(p, bound)?;
    let left = decompose_side(p, &parts, Side::Left);
    let right = decompose_side(p, &parts, Side::Right);
    Ok(Decomposition {
        left,
        right,
        verified_up_to: bound,
    })
}

fn decompose_side(p: &Presentation, parts: &[LengthPartition], side: Side) -> SideDecomposition {
    let n = p.n();
    let bound = parts.len() - 1;
    let mut covered: Vec<Vec<bool>> = Vec::with_capacity(parts.len());
    let mut t: Vec<PosWord> = Vec::new();
    let mut last_new_length = None;
    for (m, part) in parts.iter().enumerate() {
        let mut cov = vec![false; part.class_count()];
        if m > 0 {
            let rest = n.pow(m as u32 - 1);
            for rank in 0..part.word_count() {
                let (letter, tail) = match side {
                    Side::Left => (rank / rest, rank % rest),
                    Side::Right => (rank % n, rank / n),
                };
                if p.is_rep(letter) && covered[m - 1][parts[m - 1].class_of_rank(tail)] {
                    cov[part.class_of_rank(rank)] = true;
                }
            }
        }
        for (id, c) in cov.iter_mut().enumerate() {
            if !*c {
                t.push(part.canonical(id));
                last_new_length = Some(m);
                *c = true;
            }
        }
        covered.push(cov);
    }

    // Independent check: every class is hit by some product f·t (or t·f).
    let reps = p.reps();
    let mut all_covered = true;
    for (m, part) in parts.iter().enumerate() {
        let mut hit = vec![false; part.class_count()];
        for tw in t.iter().filter(|tw| tw.len() <= m) {
            let f_len = m - tw.len();
            let combos = reps.len().pow(f_len as u32);
            for idx in 0..combos {
                let mut f = Vec::with_capacity(f_len);
                let mut x = idx;
                for _ in 0..f_len {
                    f.push(reps[x % reps.len()] as u8);
                    x /= reps.len();
                }
                f.reverse();
                let f = PosWord(f);
                let w = match side {
                    Side::Left => f.concat(tw),
                    Side::Right => tw.concat(&f),
                };
                hit[part.class_id(&w)] = true;
            }
        }
        if hit.iter().any(|h| !h) {
            all_covered = false;
        }
    }

    let l = p.l();
    let stabilized = match last_new_length {
        Some(len) => len + l <= bound,
        None => true,
    };
    SideDecomposition {
        t,
        covered: all_covered,
        last_new_length,
        stabilized,
    }
}
