use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::presentation::Presentation;
use crate::word::SignedWord;

use super::coset::{todd_coxeter, CosetTable};
use super::pi;

/// Complete equality invariant of an element `g ∈ G`: the reduced word `π(g)`
/// over the orbit representatives, and the right coset `Fg`.
///
/// Two words represent the same element iff their invariants are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GInvariant {
    pub pi_word: SignedWord,
    /// 0-based coset index; 0 is `F`.
    pub coset: usize,
}

impl GInvariant {
    pub fn identity() -> Self {
        GInvariant {
            pi_word: SignedWord::empty(),
            coset: 0,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.pi_word.is_empty() && self.coset == 0
    }
}

impl Serialize for GInvariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GInvariant", 2)?;
        st.serialize_field("pi_word", &self.pi_word)?;
        st.serialize_field("coset", &(self.coset + 1))?;
        st.end()
    }
}

pub fn invariant(w: &SignedWord, p: &Presentation, ct: &CosetTable) -> GInvariant {
    GInvariant {
        pi_word: pi(w, p),
        coset: ct.trace(0, w),
    }
}

pub fn equal_g(u: &SignedWord, v: &SignedWord, p: &Presentation, ct: &CosetTable) -> bool {
    invariant(u, p, ct) == invariant(v, p, ct)
}

/// A presentation together with its enumerated coset table.
#[derive(Debug, Clone)]
pub struct UniversalGroup {
    presentation: Presentation,
    table: CosetTable,
}

impl UniversalGroup {
    pub fn new(presentation: Presentation) -> Result<Self> {
        let table = todd_coxeter(&presentation)?;
        Ok(UniversalGroup {
            presentation,
            table,
        })
    }

    /// Pairs a presentation with a table already enumerated for it.
    pub fn from_parts(presentation: Presentation, table: CosetTable) -> Self {
        UniversalGroup {
            presentation,
            table,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// `[G:F]`.
    pub fn index(&self) -> usize {
        self.table.num_cosets()
    }

    pub fn invariant(&self, w: &SignedWord) -> GInvariant {
        invariant(w, &self.presentation, &self.table)
    }

    pub fn equal(&self, u: &SignedWord, v: &SignedWord) -> bool {
        equal_g(u, v, &self.presentation, &self.table)
    }

    pub fn is_identity(&self, w: &SignedWord) -> bool {
        self.invariant(w).is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::relators;
    use crate::word::Letter;
    use proptest::prelude::*;

    fn sw(text: &str, n: usize) -> SignedWord {
        SignedWord::parse(text, n).unwrap()
    }

    fn sym2() -> UniversalGroup {
        UniversalGroup::new(Presentation::from_cycles(2, 2, &["(1 2)"]).unwrap()).unwrap()
    }

    #[test]
    fn invariant_examples() {
        let g = sym2();
        let a = g.invariant(&sw("x1 x2^-1", 2));
        assert!(a.pi_word.is_empty());
        assert_ne!(a.coset, 0);
        assert!(g.invariant(&sw("x1 x2^-1 x1 x2^-1", 2)).is_identity());
        assert!(g.invariant(&SignedWord::empty()).is_identity());
        for r in relators(g.presentation()) {
            assert!(g.invariant(&r).is_identity());
        }
    }

    #[test]
    fn equal_g_examples() {
        let g = sym2();
        assert!(g.equal(&sw("x1 x2", 2), &sw("x2 x1", 2)));
        assert!(!g.equal(&sw("x1", 2), &sw("x2", 2)));
        let w = sw("x2 x1^-1 x2 x2", 2);
        assert!(g.equal(&w, &w));
    }

    fn arb_word(n: usize, max: usize) -> impl Strategy<Value = SignedWord> {
        prop::collection::vec((0..n, any::<bool>()), 0..max)
            .prop_map(|v| SignedWord(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
    }

    proptest! {
        #[test]
        fn relator_insertion_preserves_invariant(
            w in arb_word(3, 10),
            which in 0usize..1000,
            at in 0usize..11,
            inverted in any::<bool>(),
            which_group in 0usize..3,
        ) {
            let gens: &[&str] = [&["(1 2 3)"][..], &["(1 2)"][..], &["(1 2)", "(1 3)"][..]][which_group];
            let g = UniversalGroup::new(Presentation::from_cycles(3, 2, gens).unwrap()).unwrap();
            let rels = relators(g.presentation());
            let mut r = rels[which % rels.len()].clone();
            if inverted {
                r = r.inverse();
            }
            let at = at.min(w.len());
            let mut letters = w.0[..at].to_vec();
            letters.extend_from_slice(r.letters());
            letters.extend_from_slice(&w.0[at..]);
            prop_assert_eq!(g.invariant(&SignedWord(letters)), g.invariant(&w));
        }

        #[test]
        fn invariant_is_multiplicative(u in arb_word(3, 8), v in arb_word(3, 8)) {
            // equal invariants survive right multiplication
            let g = UniversalGroup::new(Presentation::from_cycles(3, 2, &["(1 2)"]).unwrap()).unwrap();
            let uv = u.concat(&v);
            let u_red = u.reduce();
            prop_assert_eq!(g.invariant(&uv), g.invariant(&u_red.concat(&v)));
        }
    }
}
