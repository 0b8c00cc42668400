//! Positive (monoid) words and signed (group) words over `x_1..x_n`.
//!
//! Letters are 0-based internally. Text forms are 1-based: a positive word is
//! written `"x1 x2 x1"` or `"1 2 1"`, a signed word `"x1 x2^-1 x1"` (integer
//! exponents such as `x1^3` or `x2^-2` are expanded). The empty word is `e`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A word in the monoid generators, stored as 0-based letter indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosWord(pub Vec<u8>);

impl PosWord {
    pub fn empty() -> Self {
        PosWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Builds a word from 1-based letters, e.g. `&[1, 2]` for `x1 x2`.
    pub fn from_one_based(letters: &[usize]) -> Self {
        PosWord(letters.iter().map(|&i| (i - 1) as u8).collect())
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn concat(&self, other: &PosWord) -> PosWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PosWord(v)
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut out = Vec::new();
        for tok in tokens(text) {
            let (gen, exp) = parse_token(text, tok, n)?;
            if exp < 0 {
                return Err(Error::MalformedWord {
                    text: text.to_string(),
                    reason: "inverse letter in a positive word".into(),
                });
            }
            out.extend(std::iter::repeat_n(gen as u8, exp as usize));
        }
        Ok(PosWord(out))
    }

    /// Index of this word among all `n^len` words of its length, in lex order.
    pub fn rank(&self, n: usize) -> usize {
        self.0.iter().fold(0usize, |acc, &c| acc * n + c as usize)
    }

    pub fn unrank(mut index: usize, len: usize, n: usize) -> PosWord {
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (index % n) as u8;
            index /= n;
        }
        PosWord(v)
    }
}

impl fmt::Display for PosWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, &c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", c + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PosWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for PosWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A generator or its inverse, packed as `2 * index + inverse`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u16);

impl Letter {
    #[inline]
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter((gen as u16) << 1 | inverse as u16)
    }

    #[inline]
    pub fn pos(gen: usize) -> Self {
        Self::new(gen, false)
    }

    #[inline]
    pub fn neg(gen: usize) -> Self {
        Self::new(gen, true)
    }

    #[inline]
    pub fn gen(self) -> usize {
        (self.0 >> 1) as usize
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Column index in a coset table with `2n` columns.
    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_code(code: usize) -> Self {
        Letter(code as u16)
    }

    /// Same sign, generator replaced.
    #[inline]
    pub fn with_gen(self, gen: usize) -> Self {
        Self::new(gen, self.is_inverse())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.gen() + 1)?;
        if self.is_inverse() {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word in the group generators and their inverses.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord(pub Vec<Letter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// `x_gen^exp` for a 0-based generator.
    pub fn power(gen: usize, exp: i64) -> Self {
        let letter = Letter::new(gen, exp < 0);
        SignedWord(vec![letter; exp.unsigned_abs() as usize])
    }

    /// Positive letters from 0-based indices.
    pub fn positive(gens: &[usize]) -> Self {
        SignedWord(gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    /// Inverse letters from 0-based indices, in the given order.
    pub fn negative(gens: &[usize]) -> Self {
        SignedWord(gens.iter().map(|&g| Letter::neg(g)).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Free reduction: cancels adjacent inverse pairs until none remain.
    pub fn reduce(&self) -> SignedWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &c in &self.0 {
            if out.last() == Some(&c.inverse()) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        SignedWord(out)
    }

    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|c| c.inverse()).collect())
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// Concatenation of all parts, unreduced.
    pub fn product<'a>(parts: impl IntoIterator<Item = &'a SignedWord>) -> SignedWord {
        let mut v = Vec::new();
        for p in parts {
            v.extend_from_slice(&p.0);
        }
        SignedWord(v)
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut out = Vec::new();
        for tok in tokens(text) {
            let (gen, exp) = parse_token(text, tok, n)?;
            out.extend(SignedWord::power(gen, exp).0);
        }
        Ok(SignedWord(out))
    }
}

/// Every signed word (reduced or not) of length `≤ max_len` over `n`
/// generators, by length then letter code.
pub fn all_signed_words(n: usize, max_len: usize) -> Vec<SignedWord> {
    let mut out = vec![SignedWord::empty()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for code in 0..2 * n {
                let mut v = out[i].0.clone();
                v.push(Letter::from_code(code));
                out.push(SignedWord(v));
            }
        }
        start = end;
    }
    out
}

impl From<&PosWord> for SignedWord {
    fn from(w: &PosWord) -> Self {
        SignedWord(w.0.iter().map(|&c| Letter::pos(c as usize)).collect())
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for SignedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c.is_whitespace() || c == '*' || c == ',')
        .filter(|t| !t.is_empty() && *t != "e" && *t != "ε")
}

/// Returns the 0-based generator and exponent of a token such as `x3^-1` or `2`.
fn parse_token(text: &str, tok: &str, n: usize) -> Result<(usize, i64)> {
    let bad = |reason: String| Error::MalformedWord {
        text: text.to_string(),
        reason,
    };
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| bad(format!("bad exponent in {tok:?}")))?;
            (b, e)
        }
        None => (tok, 1),
    };
    let digits = base.strip_prefix(['x', 'X']).unwrap_or(base);
    let idx: usize = digits
        .parse()
        .map_err(|_| bad(format!("bad generator {tok:?}")))?;
    if idx == 0 || idx > n {
        return Err(Error::PointOutOfRange { point: idx, n });
    }
    Ok((idx - 1, exp))
}
