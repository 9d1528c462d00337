//! Lex-segment oracle for the growth conditions.
//!
//! Independent of the binomial machinery: in `a` variables, take in each
//! degree `n` the first `#monomials - h(n)` monomials in descending lex order
//! (`x_1 > x_2 > ... > x_a`). The function `h` is the Hilbert function of a
//! standard graded algebra exactly when these lex segments form an ideal,
//! i.e. when every variable multiple of a marked monomial is marked one
//! degree up.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::intfun::IntFun;

/// Largest number of variables the oracle accepts.
pub const MAX_VARIABLES: i64 = 4;
/// Largest `sup(h)` the oracle accepts.
pub const MAX_SUP: i64 = 8;

type Monomial = Vec<u32>;

/// All monomials of `degree` in `vars` variables, descending lex.
fn monomials_desc_lex(vars: usize, degree: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Monomial, vars: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == vars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        // Larger exponent of the leading variable first.
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(prefix, vars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    fill(&mut Vec::with_capacity(vars), vars, degree, &mut out);
    out
}

/// Decides whether `h` (with `h(0) = 1`, values `>= 0`) is the Hilbert
/// function of the quotient by a lex-segment ideal in `h(1)` variables.
///
/// Bounded to `h(1) <= 4` and `sup(h) <= 8`; larger inputs are rejected.
pub fn lex_oracle(h: &IntFun) -> Result<bool> {
    if h.inf().is_some_and(|lo| lo < 0) {
        return Err(Error::OracleBound("function is nonzero below 0".into()));
    }
    if h.at(0) != 1 {
        return Err(Error::OracleBound(format!("h(0) = {} != 1", h.at(0))));
    }
    if let Some((_, v)) = h.iter().find(|&(_, v)| v < 0) {
        return Err(Error::Negative {
            what: "h value",
            value: v,
        });
    }
    let a = h.at(1);
    let sup = h.sup().unwrap_or(0);
    if a > MAX_VARIABLES || sup > MAX_SUP {
        return Err(Error::OracleBound(format!(
            "need h(1) <= {MAX_VARIABLES} and sup(h) <= {MAX_SUP}, got h(1) = {a}, sup = {sup}"
        )));
    }
    let vars = a as usize;

    // Marked (ideal) monomials per degree, up to sup + 1 where everything is marked.
    let mut marked: Vec<HashSet<Monomial>> = Vec::new();
    for n in 0..=sup + 1 {
        let all = monomials_desc_lex(vars, n as u32);
        let keep = h.at(n);
        if keep > all.len() as i64 {
            return Ok(false);
        }
        let cut = all.len() - keep as usize;
        marked.push(all.into_iter().take(cut).collect());
    }

    for n in 0..=sup as usize {
        for m in &marked[n] {
            for var in 0..vars {
                let mut product = m.clone();
                product[var] += 1;
                if !marked[n + 1].contains(&product) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
