//! Runs the full verification report on every subgroup of Sym_2 and Sym_3.
//!
//! cargo run --release --example verify_all

use permrel::all_subgroups;
use permrel::cli::{cmd_verify, RunConfig};

fn main() -> permrel::Result<()> {
    let mut all_passed = true;
    for (n, l) in [(2, 2), (3, 2), (2, 3)] {
        for h in all_subgroups(n)? {
            let config = RunConfig {
                n: Some(n),
                l: Some(l),
                perms: h.generators().iter().map(|g| g.to_string()).collect(),
                ..RunConfig::default()
            };
            let report = cmd_verify(&config)?;
            let statuses: Vec<String> = report
                .results
                .iter()
                .map(|r| format!("{}={:?}", r.check, r.status))
                .collect();
            println!(
                "n={n} l={l} H=<{}>: {}",
                config.perms.join(", "),
                statuses.join(" ")
            );
            all_passed &= report.passed();
        }
    }
    println!("{}", if all_passed { "all passed" } else { "FAILURES" });
    Ok(())
}
