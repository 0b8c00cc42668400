//! Exhaustive cancellativity search against the semi-regular-and-abelian prediction.
//!
//! cargo run --example cancellativity [bound]

use permrel::monoid::{cancellativity_check, Cancellativity};
use permrel::{all_subgroups, Presentation};

fn main() -> permrel::Result<()> {
    let bound: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for h in all_subgroups(3)? {
        let predicted = h.classify().cancellative_predicted;
        let p = Presentation::new(3, 2, h)?;
        let verdict = match cancellativity_check(&p, bound)? {
            Cancellativity::CancellativeUpTo { bound } => format!("cancellative up to {bound}"),
            Cancellativity::Witness { side, a, u, v } => match side {
                permrel::monoid::Side::Left => format!("({a})({u}) = ({a})({v}) but {u} != {v}"),
                permrel::monoid::Side::Right => format!("({u})({a}) = ({v})({a}) but {u} != {v}"),
            },
        };
        println!("{p}: predicted {predicted}; {verdict}");
    }
    Ok(())
}
