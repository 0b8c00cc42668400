//! Normal forms g = f · x_{σ_1(1)} ⋯ x_{σ_{l-1}(1)} with f over the orbit
//! representatives, both as derived letter by letter and canonicalised.
//!
//! cargo run --example normal_form -- "x2 x3^-1 x1"

use permrel::group::{canonical_tails, normal_form, UniversalGroup};
use permrel::{Presentation, SignedWord};

fn main() -> permrel::Result<()> {
    let g = UniversalGroup::new(Presentation::from_cycles(3, 3, &["(1 2 3)"])?)?;
    let p = g.presentation();
    let tails = canonical_tails(p, g.table());
    println!(
        "{p}: {} cosets, {} reached by more than one tail",
        g.index(),
        tails.collisions()
    );
    let inputs: Vec<String> = match std::env::args().nth(1) {
        Some(w) => vec![w],
        None => vec![
            "e".into(),
            "x2".into(),
            "x3^-1".into(),
            "x2 x3^-1 x1".into(),
        ],
    };
    for text in inputs {
        let w = SignedWord::parse(&text, 3)?;
        let nf = normal_form(&w, p, g.table(), &tails);
        println!(
            "{w:>14}  ->  f = {}  tail = {:?}   (derived tail {:?})   round trip: {}",
            nf.f,
            nf.tail,
            nf.derived_tail,
            g.equal(&nf.word(), &w)
        );
    }
    Ok(())
}
