//! Permutations of `{1..n}` and cycle-notation parsing.
//!
//! Points are 1-based in every textual form and 0-based inside [`Perm`].
//!
//! Grammar accepted by [`parse_perm`]:
//!
//! ```text
//! perm  := cycle*
//! cycle := "(" int (sep int)* ")" | "()"
//! sep   := "," | whitespace
//! ```
//!
//! A product of cycles is read left to right: in `(1 2)(2 3)` the
//! transposition `(1 2)` acts first, so the product sends 1 to 3.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{0..n}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n {
                return Err(Error::PointOutOfRange { point: i + 1, n });
            }
            if seen[i] {
                return Err(Error::RepeatedPoint { point: i + 1 });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 3, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut zero = Vec::with_capacity(n);
        for &p in images {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
            zero.push((p - 1) as u16);
        }
        Self::from_images(zero)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// Function composition `self ∘ other`: `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        other.then(self)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .any(|(i, &j)| i == j as usize)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_based())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a product of cycles over `{1..n}`; see the module docs for the grammar.
pub fn parse_perm(text: &str, n: usize) -> Result<Perm> {
    let malformed = |reason: &str| Error::MalformedCycle {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let mut result = Perm::identity(n);
    let mut chars = text.char_indices().peekable();
    loop {
        while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some((_, '(')) => {}
            Some((_, c)) => return Err(malformed(&format!("unexpected {c:?} outside a cycle"))),
        }
        let mut points: Vec<usize> = Vec::new();
        let mut current = String::new();
        let mut closed = false;
        // a comma must follow a point, possibly after whitespace
        let mut after_point = false;
        for (_, c) in chars.by_ref() {
            match c {
                ')' => {
                    closed = true;
                    break;
                }
                d if d.is_ascii_digit() => current.push(d),
                s if s == ',' || s.is_whitespace() => {
                    if !current.is_empty() {
                        points.push(take_point(&mut current, n)?);
                        after_point = true;
                    }
                    if s == ',' {
                        if !after_point {
                            return Err(malformed("separator without a preceding point"));
                        }
                        after_point = false;
                    }
                }
                '(' => return Err(malformed("nested parenthesis")),
                other => return Err(malformed(&format!("unexpected character {other:?}"))),
            }
        }
        if !closed {
            return Err(malformed("unclosed parenthesis"));
        }
        if !current.is_empty() {
            points.push(take_point(&mut current, n)?);
        }
        let mut seen = vec![false; n];
        for &p in &points {
            if seen[p] {
                return Err(Error::RepeatedPoint { point: p + 1 });
            }
            seen[p] = true;
        }
        if points.len() >= 2 {
            let mut images: Vec<u16> = (0..n as u16).collect();
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()] as u16;
            }
            result = result.then(&Perm { images });
        }
    }
    Ok(result)
}

fn take_point(buf: &mut String, n: usize) -> Result<usize> {
    let p: usize = buf.parse().map_err(|_| Error::PointOutOfRange {
        point: usize::MAX,
        n,
    })?;
    buf.clear();
    if p == 0 || p > n {
        return Err(Error::PointOutOfRange { point: p, n });
    }
    Ok(p - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_cycles() {
        assert_eq!(parse_perm("()", 3).unwrap().one_based(), vec![1, 2, 3]);
        assert_eq!(parse_perm("(1 2)", 3).unwrap().one_based(), vec![2, 1, 3]);
        assert_eq!(parse_perm("(1 2 3)", 3).unwrap().one_based(), vec![2, 3, 1]);
        assert_eq!(
            parse_perm(" ( 1,2 , 3 ) ", 3).unwrap().one_based(),
            vec![2, 3, 1]
        );
        assert_eq!(parse_perm("", 2).unwrap(), Perm::identity(2));
    }

    #[test]
    fn products_compose_left_to_right() {
        // (1 2) first, then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
        let p = parse_perm("(1 2)(2 3)", 3).unwrap();
        assert_eq!(p.one_based(), vec![3, 1, 2]);
        let a = parse_perm("(1 2)", 3).unwrap();
        let b = parse_perm("(2 3)", 3).unwrap();
        assert_eq!(p, a.then(&b));
        assert_eq!(p, b.compose(&a));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_perm("(1 4)", 3),
            Err(Error::PointOutOfRange { point: 4, .. })
        ));
        assert!(matches!(
            parse_perm("(0 1)", 3),
            Err(Error::PointOutOfRange { .. })
        ));
        assert!(matches!(
            parse_perm("(1 2", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            parse_perm("1 2)", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            parse_perm("((1 2))", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            parse_perm("(1 a)", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            parse_perm("(1 2 1)", 3),
            Err(Error::RepeatedPoint { point: 1 })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in ["()", "(1 2)", "(1 3 2)(4 5)"] {
            let p = parse_perm(text, 5).unwrap();
            assert_eq!(p.to_string(), text);
            assert_eq!(parse_perm(&p.to_string(), 5).unwrap(), p);
        }
    }

    #[test]
    fn inverse_cancels() {
        let p = parse_perm("(1 3 2)(4 5)", 5).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
    }
}
