//! Words in a free monoid: primitive roots, commutation, and bounded checks
//! of right reversibility for finitely generated submonoids.
//!
//! A submonoid `B` is right reversible when `Bs ∩ Bt ≠ ∅` for all `s, t ∈ B`.
//! Inside a free monoid that forces `B` into a cyclic group, i.e. all of its
//! generators are powers of one primitive word. Reversibility is a statement
//! about all pairs, so it can only be refuted here; a positive answer is
//! certified by [`cyclic_envelope`].

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonempty word over single-character letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<char>);

impl FreeWord {
    pub fn new(text: &str) -> Result<Self> {
        let letters: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(FreeWord(letters))
    }

    pub fn from_letters(letters: Vec<char>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(FreeWord(letters))
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pow(&self, k: usize) -> FreeWord {
        FreeWord(self.0.repeat(k.max(1)))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Smallest period of `w` via the KMP failure function.
fn smallest_period(w: &[char]) -> usize {
    let n = w.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

/// Shortest `u` with `w = u^k`.
pub fn primitive_root(w: &FreeWord) -> FreeWord {
    let p = smallest_period(&w.0);
    if w.len().is_multiple_of(p) {
        FreeWord(w.0[..p].to_vec())
    } else {
        w.clone()
    }
}

/// Whether `uv = vu`. Also checks that this matches equality of primitive roots.
pub fn commute(u: &FreeWord, v: &FreeWord) -> bool {
    let uv: Vec<char> = u.0.iter().chain(&v.0).copied().collect();
    let vu: Vec<char> = v.0.iter().chain(&u.0).copied().collect();
    let by_concat = uv == vu;
    let by_root = primitive_root(u) == primitive_root(v);
    assert_eq!(
        by_concat, by_root,
        "commutation and primitive roots disagree for {u} and {v}"
    );
    by_concat
}

/// The common primitive root of all generators, if they share one.
pub fn cyclic_envelope(gens: &[FreeWord]) -> Option<FreeWord> {
    let mut roots = gens.iter().map(primitive_root);
    let first = roots.next()?;
    roots.all(|r| r == first).then_some(first)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Reversibility {
    /// Every pair checked has a common left multiple.
    ReversibleUpToDepth { depth: usize, pairs_checked: usize },
    /// `Bs ∩ Bt = ∅`.
    Counterexample { s: FreeWord, t: FreeWord },
}

impl Reversibility {
    pub fn is_reversible(&self) -> bool {
        matches!(self, Reversibility::ReversibleUpToDepth { .. })
    }
}

/// Nondeterministic automaton reading words of `B` factor by factor.
/// State 0 sits between factors; the others sit inside a generator.
struct Factorizer<'a> {
    gens: &'a [FreeWord],
    /// First state of each generator's interior positions.
    offsets: Vec<usize>,
    states: usize,
}

impl<'a> Factorizer<'a> {
    fn new(gens: &'a [FreeWord]) -> Self {
        let mut offsets = Vec::with_capacity(gens.len());
        let mut states = 1;
        for g in gens {
            offsets.push(states);
            states += g.len() - 1;
        }
        Factorizer {
            gens,
            offsets,
            states,
        }
    }

    /// Generator and offset of a non-boundary state.
    fn locate(&self, state: usize) -> (usize, usize) {
        let g = self
            .offsets
            .iter()
            .rposition(|&o| o <= state)
            .expect("interior state");
        (g, state - self.offsets[g] + 1)
    }

    fn step(&self, set: &[bool], c: char) -> Vec<bool> {
        let mut next = vec![false; self.states];
        let mut advance = |g: usize, pos: usize| {
            let word = &self.gens[g].0;
            if word[pos] == c {
                let target = if pos + 1 == word.len() {
                    0
                } else {
                    self.offsets[g] + pos
                };
                next[target] = true;
            }
        };
        for (state, _) in set.iter().enumerate().filter(|(_, &on)| on) {
            if state == 0 {
                (0..self.gens.len()).for_each(|g| advance(g, 0));
            } else {
                let (g, pos) = self.locate(state);
                advance(g, pos);
            }
        }
        next
    }

    fn run(&self, mut set: Vec<bool>, w: &[char]) -> Vec<bool> {
        for &c in w {
            set = self.step(&set, c);
        }
        set
    }

    fn start(&self) -> Vec<bool> {
        let mut s = vec![false; self.states];
        s[0] = true;
        s
    }

    /// Whether some `a ∈ B` has `a·v ∈ B`, by search over reachable state sets.
    fn has_left_multiplier(&self, v: &[char]) -> bool {
        let alphabet: BTreeSet<char> = self.gens.iter().flat_map(|g| g.0.iter().copied()).collect();
        let mut seen: HashSet<Vec<bool>> = HashSet::from([self.start()]);
        let mut queue = VecDeque::from([self.start()]);
        while let Some(set) = queue.pop_front() {
            if set[0] && self.run(set.clone(), v)[0] {
                return true;
            }
            for &c in &alphabet {
                let next = self.step(&set, c);
                if next.iter().any(|&b| b) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        false
    }
}

/// Elements with a factorization of `1..=depth` generators, by (length, lex).
fn by_factor_count(gens: &[FreeWord], depth: usize) -> Vec<Vec<char>> {
    let mut all: BTreeSet<Vec<char>> = BTreeSet::new();
    let mut layer: BTreeSet<Vec<char>> = BTreeSet::from([Vec::new()]);
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for w in &layer {
            for g in gens {
                let mut v = w.clone();
                v.extend_from_slice(&g.0);
                next.insert(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let mut out: Vec<Vec<char>> = all.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Searches for `s, t ∈ B` with `Bs ∩ Bt = ∅`.
///
/// `s` and `t` range over distinct elements with a factorization of at most
/// `depth` generators, in (length, lex) order. For each pair the existence of
/// a common left multiple is decided exactly: `as = bt` forces one of `s, t`
/// to be a suffix of the other, say `s = v·t`, and then `b = a·v` so it
/// remains to find `a ∈ B` with `a·v ∈ B`.
pub fn right_reversible_bounded(gens: &[FreeWord], depth: usize) -> Result<Reversibility> {
    if gens.is_empty() {
        return Err(Error::EmptyWord);
    }
    let automaton = Factorizer::new(gens);
    let elems = by_factor_count(gens, depth);
    let mut verdicts: HashMap<Vec<char>, bool> = HashMap::new();
    let mut pairs_checked = 0;
    for (i, s) in elems.iter().enumerate() {
        for t in &elems[i + 1..] {
            pairs_checked += 1;
            let (long, short) = if s.len() >= t.len() { (s, t) } else { (t, s) };
            let ok = long.ends_with(short) && {
                let v = long[..long.len() - short.len()].to_vec();
                *verdicts
                    .entry(v)
                    .or_insert_with_key(|v| automaton.has_left_multiplier(v))
            };
            if !ok {
                return Ok(Reversibility::Counterexample {
                    s: FreeWord(s.clone()),
                    t: FreeWord(t.clone()),
                });
            }
        }
    }
    Ok(Reversibility::ReversibleUpToDepth {
        depth,
        pairs_checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ReversibleLemmaCheck {
    /// All generators are powers of `root`.
    Cyclic { root: FreeWord },
    /// Not cyclic, and a non-reversible pair was found.
    NotReversible {
        s: FreeWord,
        t: FreeWord,
        depth: usize,
    },
    /// Not cyclic, yet no counterexample up to `depth`: reversible sets are
    /// expected to be cyclic, so this is reported rather than hidden.
    ViolationCandidate { depth: usize },
}

/// Checks "right reversible ⇒ cyclic" for one generator set, escalating the
/// search depth from `depth` to `max_depth` whenever a non-cyclic set looks
/// reversible.
pub fn reversible_lemma_check(
    gens: &[FreeWord],
    depth: usize,
    max_depth: usize,
) -> Result<ReversibleLemmaCheck> {
    if let Some(root) = cyclic_envelope(gens) {
        return Ok(ReversibleLemmaCheck::Cyclic { root });
    }
    let mut d = depth;
    loop {
        match right_reversible_bounded(gens, d)? {
            Reversibility::Counterexample { s, t, .. } => {
                return Ok(ReversibleLemmaCheck::NotReversible { s, t, depth: d })
            }
            Reversibility::ReversibleUpToDepth { .. } if d >= max_depth => {
                return Ok(ReversibleLemmaCheck::ViolationCandidate { depth: d })
            }
            Reversibility::ReversibleUpToDepth { .. } => d += 1,
        }
    }
}

/// Every word of length `1..=max_len` over `alphabet`, by (length, lex).
pub fn all_words(alphabet: &[char], max_len: usize) -> Vec<FreeWord> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in alphabet {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(FreeWord));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fw(s: &str) -> FreeWord {
        FreeWord::new(s).unwrap()
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(&fw("abab")), fw("ab"));
        assert_eq!(primitive_root(&fw("aba")), fw("aba"));
        assert_eq!(primitive_root(&fw("aaaaaa")), fw("a"));
        assert_eq!(primitive_root(&fw("abaaba")), fw("aba"));
        assert!(matches!(FreeWord::new(""), Err(Error::EmptyWord)));
    }

    #[test]
    fn commute_examples() {
        assert!(commute(&fw("ab"), &fw("abab")));
        assert!(!commute(&fw("ab"), &fw("ba")));
        assert!(commute(&fw("a"), &fw("a")));
    }

    #[test]
    fn reversibility_examples() {
        assert!(right_reversible_bounded(&[fw("ab"), fw("abab")], 6)
            .unwrap()
            .is_reversible());
        assert!(right_reversible_bounded(&[fw("a")], 6)
            .unwrap()
            .is_reversible());
        match right_reversible_bounded(&[fw("ab"), fw("ba")], 5).unwrap() {
            Reversibility::Counterexample { s, t } => assert_eq!((s, t), (fw("ab"), fw("ba"))),
            other => panic!("{other:?}"),
        }
        // suffix-related but never reversible: B ⊆ words ending in b
        match right_reversible_bounded(&[fw("b"), fw("ab")], 6).unwrap() {
            Reversibility::Counterexample { s, t } => assert_eq!((s, t), (fw("b"), fw("ab"))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn envelope_examples() {
        assert_eq!(cyclic_envelope(&[fw("abab"), fw("ababab")]), Some(fw("ab")));
        assert_eq!(cyclic_envelope(&[fw("ab"), fw("ba")]), None);
        assert_eq!(cyclic_envelope(&[fw("a"), fw("b")]), None);
    }

    #[test]
    fn lemma_check_examples() {
        assert_eq!(
            reversible_lemma_check(&[fw("aa"), fw("aaa")], 6, 8).unwrap(),
            ReversibleLemmaCheck::Cyclic { root: fw("a") }
        );
        assert!(right_reversible_bounded(&[fw("aa"), fw("aaa")], 6)
            .unwrap()
            .is_reversible());
        assert!(
            right_reversible_bounded(&[fw("abab"), fw("ababab"), fw("ab")], 6)
                .unwrap()
                .is_reversible()
        );
        assert!(matches!(
            reversible_lemma_check(&[fw("a"), fw("ba")], 6, 8).unwrap(),
            ReversibleLemmaCheck::NotReversible { .. }
        ));
    }

    /// Elements of `B` of length `≤ max_len`, by brute force.
    fn brute_elements(gens: &[FreeWord], max_len: usize) -> BTreeSet<Vec<char>> {
        let mut out = BTreeSet::from([Vec::new()]);
        let mut frontier = vec![Vec::new()];
        while let Some(w) = frontier.pop() {
            for g in gens {
                let mut v: Vec<char> = w.clone();
                v.extend_from_slice(&g.0);
                if v.len() <= max_len && out.insert(v.clone()) {
                    frontier.push(v);
                }
            }
        }
        out
    }

    #[test]
    fn left_multiplier_matches_brute_force() {
        let words = all_words(&['a', 'b'], 3);
        let probes = all_words(&['a', 'b'], 3);
        for (i, g1) in words.iter().enumerate() {
            for g2 in &words[i..] {
                let gens = vec![g1.clone(), g2.clone()];
                let elems = brute_elements(&gens, 14);
                let automaton = Factorizer::new(&gens);
                for v in &probes {
                    let brute = elems.iter().any(|a| {
                        let mut av = a.clone();
                        av.extend_from_slice(&v.0);
                        elems.contains(&av)
                    });
                    assert_eq!(automaton.has_left_multiplier(&v.0), brute, "{gens:?} {v}");
                }
            }
        }
    }

    #[test]
    fn lyndon_schutzenberger_binary_to_length_6() {
        let words = all_words(&['a', 'b'], 6);
        for u in &words {
            for v in &words {
                commute(u, v);
            }
        }
    }

    fn arb_word() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec(prop::sample::select(vec!['a', 'b']), 1..=8)
            .prop_map(|v| FreeWord::from_letters(v).unwrap())
    }

    proptest! {
        #[test]
        fn root_of_power_is_root(u in arb_word(), k in 1usize..=5) {
            prop_assert_eq!(primitive_root(&u.pow(k)), primitive_root(&u));
            let r = primitive_root(&u);
            prop_assert_eq!(u.len() % r.len(), 0);
            prop_assert_eq!(r.pow(u.len() / r.len()), u.clone());
            prop_assert_eq!(primitive_root(&r), r);
        }
    }
}
