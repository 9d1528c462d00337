//! Degree and genus of ACM curves in P^4, enumerated through decompositions
//! of their characters into positive characters.
//!
//! Run with `cargo run --example acm_curves -- 12` for a larger bound.

use postulation::enumerate::{enumerate_acm_curves, REFERENCE_PAIRS};

fn main() -> postulation::Result<()> {
    let max_degree = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let table = enumerate_acm_curves(max_degree, true)?;

    println!("d g witnesses");
    print!("{}", table.to_table(false));

    let missing = table.missing_reference();
    println!(
        "\n{} pairs found, {} reference pairs missing",
        table.entries().len(),
        missing.len()
    );
    for e in table.beyond_reference() {
        println!(
            "not in the reference list of {}: (d, g) = ({}, {})",
            REFERENCE_PAIRS.len(),
            e.d,
            e.g
        );
        for w in &e.witnesses {
            let parts: Vec<String> = w.parts().iter().map(ToString::to_string).collect();
            println!("  {} = {}", w.recompose(), parts.join(" + "));
        }
    }
    Ok(())
}
