//! Todd–Coxeter enumeration of the right cosets of `F = ⟨x_{k_1}, …, x_{k_r}⟩`
//! in `G_{n,l}(H)`.
//!
//! Strategy is HLT: for each live coset in order, scan every relator from it,
//! defining new cosets to fill gaps, then fill any remaining undefined entries
//! in its row. Coincidences are processed immediately with a union-find whose
//! root is always the smaller coset. The finished table is compacted and put
//! into standard form (cosets renumbered in breadth-first order from coset 1,
//! columns scanned in generator order), so the result does not depend on
//! incidental enumeration order.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Letter, SignedWord};

use super::relators;

const UNDEF: u32 = u32::MAX;

/// The action of the generators and their inverses on the right cosets of `F`.
///
/// Cosets are 0-based internally; coset 0 is `F` itself and is printed as 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    gens: usize,
    num_cosets: usize,
    action: Vec<u32>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.gens
    }

    /// Coset reached from `coset` by right multiplication with `letter`.
    #[inline]
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.action[coset * 2 * self.gens + letter.code()] as usize
    }

    pub fn trace(&self, start: usize, word: &SignedWord) -> usize {
        word.letters().iter().fold(start, |c, &x| self.act(c, x))
    }

    /// Images of every coset under `letter`, as a permutation of `0..num_cosets`.
    pub fn permutation(&self, letter: Letter) -> Vec<u16> {
        (0..self.num_cosets)
            .map(|c| self.act(c, letter) as u16)
            .collect()
    }

    /// Tab-separated matrix: a header row, then one row per coset (1-based),
    /// columns `x1 x1^-1 x2 x2^-1 …`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("coset");
        for g in 0..self.gens {
            let _ = write!(out, "\tx{0}\tx{0}^-1", g + 1);
        }
        out.push('\n');
        for c in 0..self.num_cosets {
            let _ = write!(out, "{}", c + 1);
            for code in 0..2 * self.gens {
                let _ = write!(out, "\t{}", self.act(c, Letter::from_code(code)) + 1);
            }
            out.push('\n');
        }
        out
    }

    /// Checks the table invariants against a presentation: every entry is
    /// defined and inverse-consistent, every relator closes from every coset,
    /// and every subgroup generator fixes coset 0.
    pub fn validate(&self, p: &Presentation) -> bool {
        let cols = 2 * self.gens;
        if self.action.len() != self.num_cosets * cols {
            return false;
        }
        for c in 0..self.num_cosets {
            for code in 0..cols {
                let x = Letter::from_code(code);
                let d = self.act(c, x);
                if d >= self.num_cosets || self.act(d, x.inverse()) != c {
                    return false;
                }
            }
        }
        let rels = relators(p);
        for c in 0..self.num_cosets {
            if rels.iter().any(|r| self.trace(c, r) != c) {
                return false;
            }
        }
        p.reps().iter().all(|&k| self.act(0, Letter::pos(k)) == 0)
    }
}

/// Default cap on simultaneously live cosets: `10·|H|^{l-1}`.
pub fn default_coset_cap(p: &Presentation) -> usize {
    10 * p.index_bound()
}

pub fn todd_coxeter(p: &Presentation) -> Result<CosetTable> {
    todd_coxeter_with_cap(p, default_coset_cap(p))
}

pub fn todd_coxeter_with_cap(p: &Presentation, cap: usize) -> Result<CosetTable> {
    let subgroup: Vec<SignedWord> = p
        .reps()
        .iter()
        .map(|&k| SignedWord::positive(&[k]))
        .collect();
    let rels = relators(p);
    let mut e = Enumerator::new(p.n(), cap);
    for w in &subgroup {
        e.scan_and_fill(0, w.letters())?;
    }
    let mut alpha = 0;
    while alpha < e.parent.len() {
        if e.is_live(alpha) {
            for r in &rels {
                e.scan_and_fill(alpha, r.letters())?;
                if !e.is_live(alpha) {
                    break;
                }
            }
            if e.is_live(alpha) {
                for code in 0..e.cols {
                    if e.get(alpha, code) == UNDEF {
                        e.define(alpha, code)?;
                    }
                }
            }
        }
        alpha += 1;
    }
    Ok(e.standardize())
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
    queue: VecDeque<usize>,
}

impl Enumerator {
    fn new(gens: usize, cap: usize) -> Self {
        let cols = 2 * gens;
        Enumerator {
            cols,
            table: vec![UNDEF; cols],
            parent: vec![0],
            live: 1,
            cap,
            queue: VecDeque::new(),
        }
    }

    #[inline]
    fn get(&self, c: usize, code: usize) -> u32 {
        self.table[c * self.cols + code]
    }

    #[inline]
    fn set(&mut self, c: usize, code: usize, v: u32) {
        self.table[c * self.cols + code] = v;
    }

    #[inline]
    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut x = c;
        while self.parent[x] as usize != root {
            let next = self.parent[x] as usize;
            self.parent[x] = root as u32;
            x = next;
        }
        root
    }

    fn define(&mut self, c: usize, code: usize) -> Result<usize> {
        if self.live >= self.cap {
            return Err(Error::CapExceeded {
                what: "live cosets during enumeration",
                cap: self.cap,
            });
        }
        let d = self.parent.len();
        self.parent.push(d as u32);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.live += 1;
        self.set(c, code, d as u32);
        self.set(d, code ^ 1, c as u32);
        Ok(d)
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[Letter]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j && self.get(f, w[i].code()) != UNDEF {
                f = self.get(f, w[i].code()) as usize;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, w[j - 1].inverse().code()) != UNDEF {
                b = self.get(b, w[j - 1].inverse().code()) as usize;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = w[i].code();
                self.set(f, x, b as u32);
                self.set(b, x ^ 1, f as u32);
                return Ok(());
            }
            self.define(f, w[i].code())?;
        }
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
            self.live -= 1;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(gamma) = self.queue.pop_front() {
            for code in 0..self.cols {
                let delta = self.get(gamma, code);
                if delta == UNDEF {
                    continue;
                }
                let delta = delta as usize;
                self.set(delta, code ^ 1, UNDEF);
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                let mu_x = self.get(mu, code);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x as usize);
                } else {
                    let nu_inv = self.get(nu, code ^ 1);
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv as usize);
                    } else {
                        self.set(mu, code, nu as u32);
                        self.set(nu, code ^ 1, mu as u32);
                    }
                }
            }
        }
    }

    fn standardize(mut self) -> CosetTable {
        let gens = self.cols / 2;
        let total = self.parent.len();
        let mut order = vec![UNDEF; total];
        let mut seq = vec![0usize];
        order[0] = 0;
        let mut head = 0;
        while head < seq.len() {
            let c = seq[head];
            head += 1;
            for code in 0..self.cols {
                let d = self.rep(self.get(c, code) as usize);
                if order[d] == UNDEF {
                    order[d] = seq.len() as u32;
                    seq.push(d);
                }
            }
        }
        let mut action = Vec::with_capacity(seq.len() * self.cols);
        for &c in &seq {
            for code in 0..self.cols {
                let d = self.rep(self.get(c, code) as usize);
                action.push(order[d]);
            }
        }
        CosetTable {
            gens,
            num_cosets: seq.len(),
            action,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{all_subgroups, PermGroup};

    fn pres(n: usize, l: usize, gens: &[&str]) -> Presentation {
        Presentation::from_cycles(n, l, gens).unwrap()
    }

    #[test]
    fn index_examples() {
        let p = pres(2, 2, &["(1 2)"]);
        let ct = todd_coxeter(&p).unwrap();
        assert_eq!(ct.num_cosets(), 2);
        assert!(ct.validate(&p));
        let p = pres(3, 2, &["(1 2 3)"]);
        assert_eq!(todd_coxeter(&p).unwrap().num_cosets(), 3);
        for (n, l) in [(2, 2), (3, 3), (4, 2)] {
            let p = Presentation::new(n, l, PermGroup::trivial(n).unwrap()).unwrap();
            assert_eq!(todd_coxeter(&p).unwrap().num_cosets(), 1);
        }
    }

    #[test]
    fn golden_table_sym2() {
        let ct = todd_coxeter(&pres(2, 2, &["(1 2)"])).unwrap();
        assert_eq!(
            ct.to_tsv(),
            "coset\tx1\tx1^-1\tx2\tx2^-1\n1\t1\t1\t2\t2\n2\t2\t2\t1\t1\n"
        );
    }

    #[test]
    fn tables_valid_and_within_bound() {
        for n in 2..=3 {
            for h in all_subgroups(n).unwrap() {
                for l in 2..=3 {
                    let p = Presentation::new(n, l, h.clone()).unwrap();
                    let ct = todd_coxeter(&p).unwrap();
                    assert!(ct.validate(&p), "{p}");
                    assert!(ct.num_cosets() <= p.index_bound(), "{p}");
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let p = Presentation::new(3, 3, PermGroup::symmetric(3).unwrap()).unwrap();
        assert_eq!(todd_coxeter(&p).unwrap(), todd_coxeter(&p).unwrap());
    }

    #[test]
    fn cap_reported() {
        let p = Presentation::new(3, 3, PermGroup::symmetric(3).unwrap()).unwrap();
        assert!(matches!(
            todd_coxeter_with_cap(&p, 2),
            Err(Error::CapExceeded { .. })
        ));
    }
}
