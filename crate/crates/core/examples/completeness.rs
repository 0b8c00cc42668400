//! Equal invariants against connectivity by relator moves through words of
//! bounded length.
//!
//! cargo run --example completeness [horizon]

use permrel::group::{completeness_check, todd_coxeter};
use permrel::{all_subgroups, Presentation};

fn main() -> permrel::Result<()> {
    let horizon: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for (n, l) in [(2, 2), (3, 2), (2, 3)] {
        for h in all_subgroups(n)? {
            let p = Presentation::new(n, l, h)?;
            let ct = todd_coxeter(&p)?;
            let r = completeness_check(&p, &ct, 4, horizon, 5_000_000)?;
            println!(
                "{p}: {} words, {} elements, unexplained {}, unsound {}",
                r.words_checked, r.distinct_invariants, r.unexplained_pairs, r.unsound_pairs
            );
        }
    }
    Ok(())
}
