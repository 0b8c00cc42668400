//! Equality in the monoid S by closure under window rewrites.
//!
//! cargo run --example monoid_word_problem

use permrel::monoid::{class_members, class_of, equal_s, neighbors, DEFAULT_CLASS_CAP};
use permrel::{PosWord, Presentation};

fn main() -> permrel::Result<()> {
    let p = Presentation::from_cycles(3, 2, &["(1 2 3)"])?;
    let w = PosWord::parse("x1 x1 x2", 3)?;
    let moves: Vec<String> = neighbors(&w, &p).iter().map(|v| v.to_string()).collect();
    println!("{p}: neighbors of {w}: {}", moves.join(", "));
    let members: Vec<String> = class_members(&w, &p, DEFAULT_CLASS_CAP)?
        .iter()
        .map(|v| v.to_string())
        .collect();
    let class = class_of(&w, &p)?;
    println!(
        "class of {w}: canonical {} size {} = {{{}}}",
        class.canonical,
        class.size,
        members.join(", ")
    );

    let sym2 = Presentation::from_cycles(2, 2, &["(1 2)"])?;
    for (u, v) in [("x1 x2", "x2 x1"), ("x1 x1", "x2 x2"), ("x1", "x2")] {
        let (a, b) = (PosWord::parse(u, 2)?, PosWord::parse(v, 2)?);
        println!("{sym2}: {u} = {v} ? {}", equal_s(&a, &b, &sym2)?);
    }
    Ok(())
}
