//! Equality in the group G through the invariant (π(w), coset of Fw).
//!
//! cargo run --example group_word_problem -- "x1 x2^-1 x1 x2^-1"

use permrel::group::UniversalGroup;
use permrel::{Presentation, SignedWord};

fn main() -> permrel::Result<()> {
    let g = UniversalGroup::new(Presentation::from_cycles(2, 2, &["(1 2)"])?)?;
    let input = std::env::args().nth(1).unwrap_or_else(|| "x1 x2^-1".into());
    let w = SignedWord::parse(&input, 2)?;
    let inv = g.invariant(&w);
    println!(
        "{}: {w} has pi = {}, coset {}; trivial in G: {}",
        g.presentation(),
        inv.pi_word,
        inv.coset + 1,
        inv.is_identity()
    );
    for (u, v) in [("x1 x2", "x2 x1"), ("x1", "x2"), ("x1 x2^-1 x1 x2^-1", "e")] {
        let (a, b) = (SignedWord::parse(u, 2)?, SignedWord::parse(v, 2)?);
        println!("{u} = {v} ? {}", g.equal(&a, &b));
    }
    Ok(())
}
