//! A finite set T with S = F_M·T = T'·F_M, where F_M is the free submonoid
//! on the orbit representatives.
//!
//! cargo run --example decomposition

use permrel::monoid::decomposition_t;
use permrel::{PosWord, Presentation};

fn show(t: &[PosWord]) -> String {
    t.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> permrel::Result<()> {
    for (n, l, gens) in [
        (2, 2, vec!["(1 2)"]),
        (3, 2, vec!["(1 2 3)"]),
        (3, 3, vec!["(2 3)"]),
        (3, 2, vec![]),
    ] {
        let p = Presentation::from_cycles(n, l, &gens)?;
        let d = decomposition_t(&p, 6)?;
        println!("{p}");
        for (side, s) in [("left ", &d.left), ("right", &d.right)] {
            println!(
                "  {side} T = {{{}}} covered={} stabilized={}",
                show(&s.t),
                s.covered,
                s.stabilized
            );
        }
    }
    Ok(())
}
