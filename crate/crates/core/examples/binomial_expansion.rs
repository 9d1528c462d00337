//! Macaulay expansions and the growth bound `alpha^<i>`.
//!
//! `cargo run --example binomial_expansion -- 25 3`

use postulation::binomial::{binom, macaulay_expand, upper};

fn main() -> postulation::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<i64>());
    let alpha = args.next().and_then(Result::ok).unwrap_or(25);
    let i = args.next().and_then(Result::ok).unwrap_or(3);

    let expansion = macaulay_expand(alpha, i)?;
    println!("{alpha} = {expansion}");
    let raised: Vec<String> = expansion
        .terms()
        .iter()
        .map(|&(m, k)| format!("C({},{})", m + 1, k + 1))
        .collect();
    println!(
        "{alpha}^<{i}> = {} = {}",
        raised.join(" + "),
        upper(alpha, i)?
    );

    println!("\nalpha^<i> for alpha = 1..12:");
    for i in 1..=4 {
        let row: Vec<String> = (1..=12)
            .map(|a| upper(a, i).map(|u| u.to_string()))
            .collect::<Result<_, _>>()?;
        println!("  i = {i}: {}", row.join(" "));
    }

    println!(
        "\nedge conventions: C(-1,-1) = {}, C(0,-1) = {}, C(2,5) = {}",
        binom(-1, -1)?,
        binom(0, -1)?,
        binom(2, 5)?
    );
    Ok(())
}
