//! Growth of S (classes per length) and of G (ball sizes), with the
//! linear/exponential verdict.
//!
//! cargo run --example growth

use permrel::cli::{classify_growth, increments};
use permrel::group::{growth_g, todd_coxeter, DEFAULT_STATE_CAP};
use permrel::monoid::growth_s;
use permrel::Presentation;

fn main() -> permrel::Result<()> {
    for (n, l, gens) in [
        (3, 2, vec!["(1 2 3)"]),
        (3, 2, vec!["(1 2)"]),
        (2, 3, vec!["(1 2)"]),
        (3, 2, vec!["(1 2)", "(1 2 3)"]),
    ] {
        let p = Presentation::from_cycles(n, l, &gens)?;
        let ct = todd_coxeter(&p)?;
        let g = growth_s(&p, 8)?;
        let b = growth_g(&p, &ct, 8, DEFAULT_STATE_CAP)?;
        let inc = increments(&b);
        println!("{p}");
        println!(
            "  g(m)        {g:?}  {:?}",
            classify_growth(&g, l, p.rank())
        );
        println!(
            "  b(m)-b(m-1) {inc:?}  {:?}",
            classify_growth(&inc, l, p.rank())
        );
    }
    Ok(())
}
