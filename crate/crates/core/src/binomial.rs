//! Binomial coefficients with the degenerate conventions used throughout the
//! character calculus, Macaulay `i`-binomial expansions and the growth bound
//! `alpha^<i>`.
//!
//! Conventions:
//!
//! * `C(n, p) = 0` whenever `p >= 0` and `n < p` (in particular for every
//!   negative `n`);
//! * `C(n - 1, -1) = 1` for `n = 0` and `0` otherwise, i.e. `C(m, -1)` is the
//!   indicator of `m = -1`.
//!
//! With these, Pascal's rule `C(n, p) = C(n-1, p) + C(n-1, p-1)` holds for all
//! `n > p >= 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(n, p)` under the conventions above.
///
/// Arithmetic is checked: a result that does not fit in an `i64` is reported
/// as [`Error::Overflow`].
pub fn binom(n: i64, p: i64) -> Result<i64> {
    if p < -1 {
        return Err(Error::BinomialIndex(p));
    }
    if p == -1 {
        return Ok(i64::from(n == -1));
    }
    if n < p {
        return Ok(0);
    }
    let k = p.min(n - p);
    let n = i128::from(n);
    let mut acc: i128 = 1;
    for j in 0..i128::from(k) {
        // acc == C(n, j) here, so the division is exact.
        acc = acc
            .checked_mul(n - j)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (j + 1);
    }
    i64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

/// The `i`-binomial expansion `alpha = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j)`
/// with `m_i > m_{i-1} > ... > m_j >= j >= 1`.
///
/// Terms are stored as `(m_k, k)` pairs, top index first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MacaulayExpansion {
    terms: Vec<(i64, i64)>,
}

impl MacaulayExpansion {
    /// Builds an expansion from explicit terms, checking the strict-chain
    /// invariants. Used to probe uniqueness; [`macaulay_expand`] is the normal
    /// constructor.
    pub fn from_terms(terms: Vec<(i64, i64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse("empty expansion".into()));
        }
        for (idx, &(m, k)) in terms.iter().enumerate() {
            if k < 1 || m < k {
                return Err(Error::Parse(format!(
                    "term C({m},{k}) violates m >= k >= 1"
                )));
            }
            if let Some(&(m_next, k_next)) = terms.get(idx + 1) {
                if k_next != k - 1 || m_next >= m {
                    return Err(Error::Parse(format!(
                        "terms C({m},{k}), C({m_next},{k_next}) are not a strict descending chain"
                    )));
                }
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[(i64, i64)] {
        &self.terms
    }

    /// The top index `i`.
    pub fn top_index(&self) -> i64 {
        self.terms[0].1
    }

    /// The last index `j`.
    pub fn last_index(&self) -> i64 {
        self.terms[self.terms.len() - 1].1
    }

    /// The last term `(m_j, j)`.
    pub fn last_term(&self) -> (i64, i64) {
        self.terms[self.terms.len() - 1]
    }

    /// Sum of the terms; equals the expanded integer.
    pub fn value(&self) -> Result<i64> {
        self.terms.iter().try_fold(0i64, |acc, &(m, k)| {
            acc.checked_add(binom(m, k)?)
                .ok_or(Error::Overflow("expansion value"))
        })
    }

    /// `sum C(m_k + 1, k + 1)`: the growth bound of the expanded integer.
    pub fn upper(&self) -> Result<i64> {
        self.terms.iter().try_fold(0i64, |acc, &(m, k)| {
            acc.checked_add(binom(m + 1, k + 1)?)
                .ok_or(Error::Overflow("alpha^<i>"))
        })
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (m, k)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({m},{k})")?;
        }
        Ok(())
    }
}

/// Largest `m` with `C(m, k) <= alpha`, together with `C(m, k)`.
///
/// Walks `m = k, k+1, ...` updating `C(m+1, k) = C(m, k) (m+1) / (m+1-k)`.
/// A coefficient that overflows is necessarily larger than `alpha`.
fn greedy_top(alpha: i64, k: i64) -> (i64, i64) {
    let mut m = k;
    let mut current: i64 = 1;
    loop {
        let next = i128::from(current) * i128::from(m + 1) / i128::from(m + 1 - k);
        if next > i128::from(alpha) {
            return (m, current);
        }
        current = next as i64;
        m += 1;
    }
}

/// The unique `i`-binomial expansion of `alpha`.
pub fn macaulay_expand(alpha: i64, i: i64) -> Result<MacaulayExpansion> {
    if alpha <= 0 {
        return Err(Error::NonPositive {
            what: "alpha",
            value: alpha,
        });
    }
    if i <= 0 {
        return Err(Error::NonPositive {
            what: "i",
            value: i,
        });
    }
    let mut terms = Vec::new();
    let mut remainder = alpha;
    let mut k = i;
    // At k = 1 the greedy step takes m = remainder, so the loop ends with k >= 1.
    while remainder > 0 {
        let (m, value) = greedy_top(remainder, k);
        terms.push((m, k));
        remainder -= value;
        k -= 1;
    }
    Ok(MacaulayExpansion { terms })
}

/// `alpha^<i>`, with `0^<i> = 0`.
pub fn upper(alpha: i64, i: i64) -> Result<i64> {
    if i <= 0 {
        return Err(Error::NonPositive {
            what: "i",
            value: i,
        });
    }
    match alpha {
        0 => Ok(0),
        a if a < 0 => Err(Error::Negative {
            what: "alpha",
            value: a,
        }),
        a => macaulay_expand(a, i)?.upper(),
    }
}
