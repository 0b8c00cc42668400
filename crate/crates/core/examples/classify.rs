//! Orbits, representatives and hypothesis predicates for every subgroup of Sym_3.
//!
//! cargo run --example classify [n]

use permrel::{all_subgroups, Presentation};

fn main() -> permrel::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for h in all_subgroups(n)? {
        let c = h.classify();
        let p = Presentation::new(n, 2, h)?;
        let s = p.summary();
        println!(
            "H=<{}> |H|={} orbits={:?} reps={:?} semi-regular={} abelian={} transitive={} cancellative={}",
            s.generators.join(", "),
            s.order,
            s.orbits,
            s.reps,
            c.semi_regular,
            c.abelian,
            c.transitive,
            c.cancellative_predicted
        );
    }
    Ok(())
}
