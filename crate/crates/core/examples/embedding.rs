//! Does S embed in G? Compares monoid and group equality on positive words.
//!
//! cargo run --example embedding

use permrel::group::{embedding_check, todd_coxeter};
use permrel::{all_subgroups, Presentation};

fn main() -> permrel::Result<()> {
    for h in all_subgroups(3)? {
        let abelian = h.classify().abelian;
        let p = Presentation::new(3, 2, h)?;
        let ct = todd_coxeter(&p)?;
        println!("{p} abelian={abelian}: {:?}", embedding_check(&p, &ct, 5)?);
    }
    Ok(())
}
