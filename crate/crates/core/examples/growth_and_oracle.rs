//! Growth conditions checked two ways: the binomial bound and an explicit
//! lex-segment construction.

use postulation::growth::{macaulay_violation, type12_shape};
use postulation::intfun::IntFun;
use postulation::lex::lex_oracle;

fn main() -> postulation::Result<()> {
    let candidates = [
        "(1,3,6,10)",
        "(1,3,4,2)",
        "(1,3,6,11)",
        "(1,2,3,3,1)",
        "(1,2,4)",
        "(1,1,1,0,1)",
        "(1,4,10,20,25)",
    ];
    for text in candidates {
        let h: IntFun = text.parse()?;
        let verdict = match macaulay_violation(&h) {
            None => "macaulay".to_string(),
            Some(why) => format!("not macaulay ({why})"),
        };
        println!(
            "{:<18} {verdict:<50} lex: {:<5} shape: {:?}",
            h.to_string(),
            lex_oracle(&h)?,
            type12_shape(&h)
        );
    }
    Ok(())
}
