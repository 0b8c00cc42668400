//! Finite permutation groups given by generators, closed by full enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{parse_perm, Perm};

/// Default largest degree accepted by [`PermGroup::close`]; `8!` elements at most.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// A subgroup `H ≤ Sym_n` with its full element list and orbit data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    orbits: Vec<Vec<usize>>,
    orbit_index: Vec<usize>,
}

/// Hypothesis predicates on `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub semi_regular: bool,
    pub abelian: bool,
    pub transitive: bool,
    pub cancellative_predicted: bool,
}

impl PermGroup {
    /// Closes `gens` under composition with the default degree cap.
    pub fn close(n: usize, gens: &[Perm]) -> Result<Self> {
        Self::close_with_cap(n, gens, DEFAULT_DEGREE_CAP)
    }

    pub fn close_with_cap(n: usize, gens: &[Perm], degree_cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPresentation(
                "degree must be at least 1".into(),
            ));
        }
        if n > degree_cap {
            return Err(Error::DegreeTooLarge { n, cap: degree_cap });
        }
        for g in gens {
            if g.degree() != n {
                return Err(Error::MixedDegrees {
                    first: n,
                    other: g.degree(),
                });
            }
        }
        let elements = close_elements(n, gens, usize::MAX)?;

        let mut orbit_index = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_index[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit: BTreeSet<usize> = BTreeSet::new();
            for e in &elements {
                orbit.insert(e.apply(start));
            }
            for &p in &orbit {
                orbit_index[p] = id;
            }
            orbits.push(orbit.into_iter().collect());
        }
        Ok(PermGroup {
            n,
            generators: gens.to_vec(),
            elements,
            orbits,
            orbit_index,
        })
    }

    /// Parses each cycle-notation string and closes the result.
    pub fn from_cycles<S: AsRef<str>>(n: usize, gens: &[S]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|g| parse_perm(g.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::close(n, &perms)
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::close(n, &[])
    }

    /// `Sym_n` generated by a transposition and an `n`-cycle.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(parse_perm("(1 2)", n)?);
        }
        if n >= 3 {
            let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            gens.push(parse_perm(&format!("({})", cycle.join(" ")), n)?);
        }
        Self::close(n, &gens)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Non-identity generators followed by the inverses that are not already listed.
    pub fn generators_and_inverses(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for g in &self.generators {
            for p in [g.clone(), g.inverse()] {
                if !p.is_identity() && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// All elements, sorted by image table; the identity comes first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Orbits as sorted 0-based point lists; the orbit of 0 comes first.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Orbit representatives `k_1 = 0 < k_2 < … < k_r`, 0-based.
    pub fn reps(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o[0]).collect()
    }

    /// Representative of the orbit containing the 0-based point `p`.
    pub fn rep_of(&self, p: usize) -> usize {
        self.orbits[self.orbit_index[p]][0]
    }

    pub fn orbit_of(&self, p: usize) -> &[usize] {
        &self.orbits[self.orbit_index[p]]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Least element (by image table) mapping `from` to `to`, if any.
    pub fn element_mapping(&self, from: usize, to: usize) -> Option<&Perm> {
        self.elements.iter().find(|e| e.apply(from) == to)
    }

    pub fn classify(&self) -> Classification {
        let semi_regular = self
            .elements
            .iter()
            .all(|e| e.is_identity() || !e.has_fixed_point());
        let abelian = self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        });
        let transitive = self.orbits.len() == 1;
        Classification {
            semi_regular,
            abelian,
            transitive,
            cancellative_predicted: semi_regular && abelian,
        }
    }
}

/// Breadth-first closure of `gens` inside `Sym_n`, sorted. Fails once more than
/// `cap` elements have been found.
pub fn close_elements(n: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let identity = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "permutation group closure",
                        cap,
                    });
                }
                queue.push_back(q);
            }
        }
    }
    // Finite groups: closure under products already contains inverses.
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Every subgroup of `Sym_n`, each listed once, ordered by (order, element list).
///
/// Built by joining cyclic subgroups until no new subgroup appears, so it is
/// only intended for very small `n`.
pub fn all_subgroups(n: usize) -> Result<Vec<PermGroup>> {
    let sym = PermGroup::symmetric(n)?;
    let mut found: Vec<PermGroup> = Vec::new();
    let mut keys: HashSet<Vec<Perm>> = HashSet::new();
    let mut add = |g: PermGroup, found: &mut Vec<PermGroup>| {
        if keys.insert(g.elements.clone()) {
            found.push(g);
            true
        } else {
            false
        }
    };
    for e in sym.elements() {
        let gens = if e.is_identity() {
            vec![]
        } else {
            vec![e.clone()]
        };
        add(PermGroup::close(n, &gens)?, &mut found);
    }
    let cyclic: Vec<PermGroup> = found.clone();
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for c in &cyclic {
                if c.generators.iter().all(|x| g.contains(x)) {
                    continue;
                }
                let mut gens = g.generators.clone();
                gens.extend(c.generators.iter().cloned());
                let joined = PermGroup::close(n, &gens)?;
                if add(joined.clone(), &mut found) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    fn all_perms(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Perm>) {
            if prefix.len() == n {
                let one: Vec<usize> = prefix.iter().map(|p| p + 1).collect();
                out.push(Perm::from_one_based(&one).unwrap());
                return;
            }
            for p in 0..n {
                if !prefix.contains(&p) {
                    prefix.push(p);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), n, &mut out);
        out
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let h = group(3, &["(1 2 3)"]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.orbits(), &[vec![0, 1, 2]]);
        assert_eq!(h.reps(), vec![0]);
    }

    #[test]
    fn trivial_group_has_singleton_orbits() {
        let h = PermGroup::trivial(3).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(h.orbits(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(h.reps(), vec![0, 1, 2]);
    }

    #[test]
    fn sym3_closure_matches_brute_force() {
        let h = group(3, &["(1 2)", "(1 3)"]);
        let mut brute = all_perms(3);
        brute.sort();
        assert_eq!(h.elements(), brute.as_slice());
    }

    #[test]
    fn classify_examples() {
        let c = group(3, &["(1 2 3)"]).classify();
        assert_eq!(
            (
                c.semi_regular,
                c.abelian,
                c.transitive,
                c.cancellative_predicted
            ),
            (true, true, true, true)
        );
        let c = group(3, &["(1 2)"]).classify();
        assert_eq!(
            (c.semi_regular, c.abelian, c.transitive),
            (false, true, false)
        );
        let c = PermGroup::symmetric(3).unwrap().classify();
        assert_eq!(
            (c.semi_regular, c.abelian, c.transitive),
            (false, false, true)
        );
    }

    #[test]
    fn classify_sym3_brute_force() {
        let elems = all_perms(3);
        let fixed_free = elems
            .iter()
            .all(|e| e.is_identity() || !e.has_fixed_point());
        let commuting = elems
            .iter()
            .all(|a| elems.iter().all(|b| a.then(b) == b.then(a)));
        let c = PermGroup::symmetric(3).unwrap().classify();
        assert_eq!(c.semi_regular, fixed_free);
        assert_eq!(c.abelian, commuting);
    }

    #[test]
    fn mixed_degrees_rejected() {
        let a = parse_perm("(1 2)", 2).unwrap();
        let b = parse_perm("(1 2 3)", 3).unwrap();
        assert!(matches!(
            PermGroup::close(2, &[a, b]),
            Err(Error::MixedDegrees { .. })
        ));
    }

    #[test]
    fn degree_cap_enforced() {
        assert!(matches!(
            PermGroup::trivial(9),
            Err(Error::DegreeTooLarge { n: 9, cap: 8 })
        ));
        assert!(PermGroup::close_with_cap(9, &[], 9).is_ok());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(2).unwrap().len(), 2);
        assert_eq!(all_subgroups(3).unwrap().len(), 6);
        assert_eq!(all_subgroups(4).unwrap().len(), 30);
    }

    #[test]
    fn group_invariants_hold_for_small_subgroups() {
        for n in 1..=4 {
            for h in all_subgroups(n).unwrap() {
                let elems = h.elements();
                for a in elems {
                    assert!(a.then(&a.inverse()).is_identity());
                    assert!(h.contains(&a.inverse()));
                    for b in elems {
                        assert!(h.contains(&a.then(b)));
                    }
                }
                let c = h.classify();
                let brute_abelian = elems
                    .iter()
                    .all(|a| elems.iter().all(|b| a.then(b) == b.then(a)));
                assert_eq!(c.abelian, brute_abelian);
                if c.transitive {
                    assert_eq!(h.reps(), vec![0]);
                }
                if c.semi_regular {
                    assert_eq!(n % h.order(), 0);
                    assert!(h.orbits().iter().all(|o| o.len() == h.order()));
                }
                // orbit partition does not depend on the generating set
                let regenerated =
                    PermGroup::close(n, &elems.iter().rev().cloned().collect::<Vec<_>>()).unwrap();
                assert_eq!(regenerated.orbits(), h.orbits());
                assert_eq!(h.reps()[0], 0);
            }
        }
    }
}
