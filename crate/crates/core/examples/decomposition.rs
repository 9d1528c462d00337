//! Unique decomposition of a Macaulay function of type `a` into functions of
//! type `a - 1`, and its recomposition.

use postulation::growth::{decompose, MacaulayFn};

fn main() -> postulation::Result<()> {
    for values in [
        vec![1, 3, 4, 2],
        vec![1, 3, 6, 7, 3],
        vec![1, 4, 7, 5, 2, 1],
        vec![1, 3, 3, 3, 2],
    ] {
        let h = MacaulayFn::from_values(values)?;
        let dec = decompose(&h)?;
        dec.validate()?;
        println!(
            "h = {} (type {}, s0 = {})",
            h.function(),
            h.type_a(),
            h.s0()?
        );
        for (i, part) in dec.parts().iter().enumerate() {
            println!("  h_{i} = {}   shifted by {i}", part.function());
        }
        assert_eq!(dec.recompose(), *h.function());
        println!("  r = {}, recomposition ok", dec.r());
    }
    Ok(())
}
