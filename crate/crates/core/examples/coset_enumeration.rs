//! Todd–Coxeter enumeration of the cosets of F, the subgroup generated by the
//! orbit representatives, and the index report.
//!
//! cargo run --example coset_enumeration

use permrel::group::{index_report, todd_coxeter};
use permrel::{all_subgroups, Presentation};

fn main() -> permrel::Result<()> {
    let p = Presentation::from_cycles(2, 2, &["(1 2)"])?;
    let ct = todd_coxeter(&p)?;
    println!("{p}\n{}", ct.to_tsv());

    println!("n l |H| index bound core |G/M|^2");
    for (n, l) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        for h in all_subgroups(n)? {
            let p = Presentation::new(n, l, h)?;
            let ct = todd_coxeter(&p)?;
            let r = index_report(&p, &ct)?;
            println!(
                "{n} {l} {:>3} {:>5} {:>5} {:>4} {:>7}   H=<{}>",
                p.group().order(),
                r.index,
                r.bound,
                r.core_index,
                r.radical_nilpotency_bound,
                p.summary().generators.join(", ")
            );
        }
    }
    Ok(())
}
