//! Codimension 3 ACM characters: decomposition into positive characters,
//! s1, the integrality screens and the quadric split.
//!
//! `cargo run --example codim3_analysis -- "(-1,-2,0,-1,4)"`

use postulation::character::Character;
use postulation::codim3::{analyze_codim3, plane_union_char};

fn show(gamma: &Character) -> postulation::Result<()> {
    let r = analyze_codim3(gamma)?;
    let parts: Vec<String> = r.decomposition.iter().map(ToString::to_string).collect();
    println!(
        "{} h={} s0={} s1={} {}",
        r.gamma, r.h, r.s0, r.s1, r.invariants
    );
    println!("  parts: {}", parts.join(" + "));
    println!(
        "  bounds: {}  integral screen: {}",
        r.bounds_hold, r.integral_screen
    );
    if let Some(q) = &r.quadric {
        println!(
            "  quadric split valid: {} (t = {}, s = {:?}), integral: {:?}",
            q.valid, q.t, q.s, r.integral_quadric
        );
    }
    Ok(())
}

fn main() -> postulation::Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        return show(&Character::new(arg.parse()?)?);
    }
    for values in [
        vec![-1, -2, -1, 4],
        vec![-1, -2, -2, 5],
        vec![-1, -2, -3, 6],
        vec![-1, -2, 0, -1, 4],
    ] {
        show(&Character::from_values(values)?)?;
    }
    println!("\nunions of two plane curves meeting in a point:");
    for (d1, d2) in [(2, 2), (3, 2), (4, 3)] {
        show(&plane_union_char(d1, d2)?)?;
    }
    Ok(())
}
