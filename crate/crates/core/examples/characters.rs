//! Character calculus: h-vectors, resolutions, invariants, Hilbert
//! polynomials and biliaison.

use postulation::character::{
    biliaison, check_necessary, curve_invariants, gamma_from_resolution, h_from_gamma,
    hilbert_polynomial, hypersurface_char, postulation_values, resolution_char, s1_general,
    surface_invariants, Character,
};

fn main() -> postulation::Result<()> {
    let gamma = Character::from_values(vec![-1, -2, -1, 4])?;
    println!("gamma = {gamma}");
    println!("h     = {}", h_from_gamma(&gamma)?);

    let report = check_necessary(gamma.function(), 3)?;
    println!(
        "necessary conditions in codim 3: {} (s0 = {:?}), s1 = {}",
        report.holds,
        report.s0,
        s1_general(gamma.function(), 3)?
    );

    let r = resolution_char(&gamma, 3)?;
    println!(
        "resolution character: {r}, back: {}",
        gamma_from_resolution(&r, 3)?
    );

    println!("as a curve:   {}", curve_invariants(&gamma)?);
    println!("as a surface: {}", surface_invariants(&gamma)?);
    println!(
        "Hilbert polynomial of the curve: {}",
        hilbert_polynomial(&gamma, 1)?
    );
    let values: Vec<i64> = (0..6)
        .map(|n| postulation_values(&gamma, 1, n))
        .collect::<Result<_, _>>()?;
    println!("h0 I(n) - h0 O(n), n = 0..5: {values:?}");

    let line = Character::from_values(vec![-1, 1])?;
    for s in 1..=4 {
        println!(
            "line linked up on a degree {s} hypersurface: {}",
            biliaison(&line, &hypersurface_char(s)?, 1)
        );
    }
    Ok(())
}
