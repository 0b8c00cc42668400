use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

/// The data `(n, l, H)` defining both the monoid `S_{n,l}(H)` and its
/// universal group `G_{n,l}(H)`: generators `x_1..x_n` and, for every
/// `σ ∈ H` and every `l`-tuple, the relation
/// `x_{i_1}⋯x_{i_l} = x_{σ(i_1)}⋯x_{σ(i_l)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    l: usize,
    group: PermGroup,
    reps: Vec<usize>,
    rep_of: Vec<usize>,
}

impl Presentation {
    pub fn new(n: usize, l: usize, group: PermGroup) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidPresentation(format!(
                "relation length must be at least 2, got {l}"
            )));
        }
        if group.degree() != n {
            return Err(Error::InvalidPresentation(format!(
                "group has degree {} but n = {n}",
                group.degree()
            )));
        }
        let reps = group.reps();
        let rep_of = (0..n).map(|p| group.rep_of(p)).collect();
        Ok(Presentation {
            n,
            l,
            group,
            reps,
            rep_of,
        })
    }

    /// Convenience constructor from cycle-notation generators of `H`.
    pub fn from_cycles<S: AsRef<str>>(n: usize, l: usize, gens: &[S]) -> Result<Self> {
        Self::new(n, l, PermGroup::from_cycles(n, gens)?)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// 0-based orbit representatives `k_1 = 0 < … < k_r`.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// Number of orbits, the rank of the free subgroup `F`.
    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    #[inline]
    pub fn rep_of(&self, p: usize) -> usize {
        self.rep_of[p]
    }

    pub fn is_rep(&self, p: usize) -> bool {
        self.rep_of[p] == p
    }

    /// `|H|^{l-1}`, the upper bound on `[G:F]`.
    pub fn index_bound(&self) -> usize {
        self.group.order().pow((self.l - 1) as u32)
    }

    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            n: self.n,
            l: self.l,
            generators: self
                .group
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            order: self.group.order(),
            orbits: self
                .group
                .orbits()
                .iter()
                .map(|o| o.iter().map(|p| p + 1).collect())
                .collect(),
            reps: self.reps.iter().map(|p| p + 1).collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .group
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(f, "(n={}, l={}, H=<{}>)", self.n, self.l, gens.join(", "))
    }
}

/// 1-based view of a presentation for reports.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationSummary {
    pub n: usize,
    pub l: usize,
    pub generators: Vec<String>,
    pub order: usize,
    pub orbits: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reps_and_bound() {
        let p = Presentation::from_cycles(3, 2, &["(1 2)"]).unwrap();
        assert_eq!(p.reps(), &[0, 2]);
        assert_eq!(p.rep_of(1), 0);
        assert_eq!(p.index_bound(), 2);
        let p = Presentation::from_cycles(3, 3, &["(1 2)", "(1 3)"]).unwrap();
        assert_eq!(p.index_bound(), 36);
    }

    #[test]
    fn rejects_short_relations_and_degree_mismatch() {
        assert!(Presentation::from_cycles(2, 1, &["(1 2)"]).is_err());
        assert!(Presentation::new(3, 2, PermGroup::trivial(2).unwrap()).is_err());
    }
}
