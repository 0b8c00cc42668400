//! Checks the rewriting identities in G, exhaustively or on seeded samples.
//!
//! cargo run --example lemma_identities [u_max]

use permrel::group::{todd_coxeter, verify_lemma_identities, DEFAULT_LEMMA_SEED};
use permrel::{all_subgroups, Presentation};

fn main() -> permrel::Result<()> {
    let u_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for (n, l) in [(2, 2), (3, 2), (2, 3)] {
        for h in all_subgroups(n)? {
            let p = Presentation::new(n, l, h)?;
            let ct = todd_coxeter(&p)?;
            let r = verify_lemma_identities(&p, &ct, u_max, DEFAULT_LEMMA_SEED);
            println!("{p}: {} instances, {} failures", r.checked(), r.failures());
        }
    }
    Ok(())
}
