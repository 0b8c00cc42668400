//! Right reversibility of finitely generated submonoids of a free monoid and
//! their cyclic envelopes.
//!
//! cargo run --example reversible_submonoids -- ab abab

use permrel::freemonoid::{cyclic_envelope, primitive_root, right_reversible_bounded, FreeWord};

fn main() -> permrel::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let sets: Vec<Vec<String>> = if args.is_empty() {
        [
            vec!["ab", "abab"],
            vec!["ab", "ba"],
            vec!["a"],
            vec!["b", "ab"],
            vec!["aa", "aaa"],
        ]
        .iter()
        .map(|s| s.iter().map(|w| w.to_string()).collect())
        .collect()
    } else {
        vec![args]
    };
    for set in sets {
        let gens: Vec<FreeWord> = set
            .iter()
            .map(|w| FreeWord::new(w))
            .collect::<permrel::Result<_>>()?;
        let roots: Vec<String> = gens.iter().map(|g| primitive_root(g).to_string()).collect();
        println!(
            "{set:?}: roots {roots:?}, envelope {:?}, {:?}",
            cyclic_envelope(&gens),
            right_reversible_bounded(&gens, 6)?
        );
    }
    Ok(())
}
