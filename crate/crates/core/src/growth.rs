//! Macaulay growth conditions, the invariant `s0(h)`, the shape of type 1
//! and 2 functions, and the unique decomposition of a finitely supported
//! Macaulay function of type `a >= 2` into Macaulay functions of type `a - 1`.

use serde::Serialize;

use crate::binomial::{binom, upper};
use crate::error::{Error, Result};
use crate::intfun::IntFun;

/// `h(n+1) <= h(n)^<n>`, treating an overflowing bound as unbounded.
fn grows_within_bound(current: i64, next: i64, n: i64) -> bool {
    match upper(current, n) {
        Ok(bound) => next <= bound,
        Err(Error::Overflow(_)) => true,
        Err(_) => false,
    }
}

/// Checks `h(0) = 1`, `h >= 0` on `N` (and `h = 0` below 0), and
/// `h(n+1) <= h(n)^<n>` for every `n >= 1`.
pub fn is_macaulay(h: &IntFun) -> bool {
    macaulay_violation(h).is_none()
}

/// The first growth or shape violation of `h`, if any.
pub fn macaulay_violation(h: &IntFun) -> Option<String> {
    if h.inf().is_some_and(|lo| lo < 0) {
        return Some("nonzero at a negative degree".into());
    }
    if h.at(0) != 1 {
        return Some(format!("h(0) = {} != 1", h.at(0)));
    }
    if let Some((n, v)) = h.iter().find(|&(_, v)| v < 0) {
        return Some(format!("h({n}) = {v} < 0"));
    }
    // Past sup(h) every value is 0 and the condition is trivial.
    let sup = h.sup().unwrap_or(0);
    for n in 1..=sup {
        if !grows_within_bound(h.at(n), h.at(n + 1), n) {
            return Some(format!(
                "h({}) = {} exceeds h({n})^<{n}> = {}",
                n + 1,
                h.at(n + 1),
                upper(h.at(n), n).map_or_else(|e| e.to_string(), |b| b.to_string())
            ));
        }
    }
    None
}

/// A finitely supported function satisfying the Macaulay growth conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MacaulayFn(IntFun);

impl MacaulayFn {
    pub fn new(h: IntFun) -> Result<Self> {
        match macaulay_violation(&h) {
            None => Ok(Self(h)),
            Some(why) => Err(Error::NotMacaulay(why)),
        }
    }

    pub fn from_values(values: impl Into<Vec<i64>>) -> Result<Self> {
        Self::new(IntFun::from_values(values))
    }

    /// The type `a = h(1)`.
    pub fn type_a(&self) -> i64 {
        self.0.at(1)
    }

    pub fn at(&self, n: i64) -> i64 {
        self.0.at(n)
    }

    pub fn function(&self) -> &IntFun {
        &self.0
    }

    pub fn into_function(self) -> IntFun {
        self.0
    }

    /// `sum_n h(n)`, the degree of any ACM scheme with this h-vector.
    pub fn total(&self) -> i64 {
        self.0.sum()
    }

    pub fn sup(&self) -> i64 {
        self.0.sup().unwrap_or(0)
    }

    /// See [`s0_of`].
    pub fn s0(&self) -> Result<i64> {
        s0_of(self)
    }
}

/// `s0(h) = inf { n | h(n) < C(a + n - 1, n) }` for a function of type
/// `a >= 1`. Always finite (the support is finite) and at least 2.
pub fn s0_of(h: &MacaulayFn) -> Result<i64> {
    let a = h.type_a();
    if a == 0 {
        return Err(Error::S0Undefined);
    }
    let mut n = 0;
    loop {
        if h.at(n) < binom(a + n - 1, n)? {
            return Ok(n);
        }
        n += 1;
    }
}

/// The ordered parts `[h_0, ..., h_r]` of a Macaulay function of type `a`,
/// with `h = h_0 + h_1[-1] + ... + h_r[-r]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    type_a: i64,
    parts: Vec<MacaulayFn>,
}

impl Decomposition {
    /// Wraps parts without validation; call [`Decomposition::validate`].
    pub fn from_parts(type_a: i64, parts: Vec<MacaulayFn>) -> Self {
        Self { type_a, parts }
    }

    pub fn parts(&self) -> &[MacaulayFn] {
        &self.parts
    }

    pub fn type_a(&self) -> i64 {
        self.type_a
    }

    /// `r`, one less than the number of parts.
    pub fn r(&self) -> i64 {
        self.parts.len() as i64 - 1
    }

    /// `h_0 + h_1[-1] + ... + h_r[-r]`.
    pub fn recompose(&self) -> IntFun {
        recompose_shifted(self.parts.iter().map(MacaulayFn::function))
    }

    /// Checks the part types, the support chain and the shape of `r`.
    pub fn validate(&self) -> Result<()> {
        let a = self.type_a;
        let fail = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.parts.len() < 2 {
            return fail(format!("need r >= 1, got {} part(s)", self.parts.len()));
        }
        let r = self.parts.len() - 1;
        for (i, part) in self.parts.iter().enumerate() {
            if let Some(why) = macaulay_violation(part.function()) {
                return fail(format!("h_{i} is not Macaulay: {why}"));
            }
            let t = part.type_a();
            if i < r && t != a - 1 {
                return fail(format!("h_{i}(1) = {t}, expected {}", a - 1));
            }
            if i == r && t > a - 1 {
                return fail(format!("h_{r}(1) = {t} > {}", a - 1));
            }
        }
        for i in 1..=r {
            let prev_s0 = s0_of(&self.parts[i - 1])?;
            let sup = self.parts[i].sup();
            if sup >= prev_s0 - 1 {
                return fail(format!(
                    "sup h_{i} = {sup} is not < s0(h_{}) - 1 = {}",
                    i - 1,
                    prev_s0 - 1
                ));
            }
        }
        Ok(())
    }
}

/// `sum_i f_i[-i]`.
pub fn recompose_shifted<'a>(parts: impl IntoIterator<Item = &'a IntFun>) -> IntFun {
    parts
        .into_iter()
        .enumerate()
        .map(|(i, f)| f.shift(-(i as i64)))
        .sum()
}

/// Splits off the leading part: `N = inf { n | h(n) < C(a+n-2, n) }`,
/// `h_0 = C(a+n-2, n)` below `N` and `h` from `N` on, and the rest
/// `h' = (h - h_0)[1]`.
fn peel(h: &IntFun, a: i64) -> Result<(IntFun, IntFun)> {
    let mut cut = 0;
    while h.at(cut) >= binom(a + cut - 2, cut)? {
        cut += 1;
    }
    let head: Vec<i64> = (0..cut)
        .map(|n| binom(a + n - 2, n))
        .collect::<Result<_>>()?;
    let mut values = head;
    values.extend((cut..=h.sup().unwrap_or(0).max(cut)).map(|n| h.at(n)));
    let h0 = IntFun::from_values(values);
    let rest = (h - &h0).shift(1);
    Ok((h0, rest))
}

/// The unique decomposition of a finitely supported Macaulay function of type
/// `a >= 2`. The output satisfies [`Decomposition::validate`],
/// recomposes to `h`, and has `s0(h) = r + 1`.
pub fn decompose(h: &MacaulayFn) -> Result<Decomposition> {
    let a = h.type_a();
    if a < 2 {
        return Err(Error::TypeTooSmall(a));
    }
    let mut parts = Vec::new();
    let mut current = h.function().clone();
    loop {
        let (h0, rest) = peel(&current, a)?;
        // Every step removes a nonempty head, so the total strictly drops.
        assert!(
            rest.sum() < current.sum(),
            "decomposition failed to make progress"
        );
        parts.push(MacaulayFn::new(h0)?);
        if rest.at(1) < a {
            parts.push(MacaulayFn::new(rest)?);
            break;
        }
        current = rest;
    }
    Ok(Decomposition { type_a: a, parts })
}

/// Shape classification of functions of type at most 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// `h = (1)`.
    Type0,
    /// Nonincreasing with values in `{0, 1}`.
    Type1,
    /// `h(n) = n + 1` below `s0`, nonincreasing from `s0` on.
    Type2,
    NotMacaulay,
    /// `h(1) >= 3`; no closed shape.
    HigherType,
}

fn nonincreasing_from(h: &IntFun, start: i64) -> bool {
    let sup = h.sup().unwrap_or(0);
    (start..=sup).all(|n| h.at(n + 1) <= h.at(n))
}

/// Classifies `h` by the elementary shape descriptions of type 0, 1 and 2
/// Macaulay functions. Agrees with [`is_macaulay`] for `h(1) <= 2`.
pub fn type12_shape(h: &IntFun) -> Shape {
    if h.inf().is_some_and(|lo| lo < 0) || h.at(0) != 1 || h.iter().any(|(_, v)| v < 0) {
        return Shape::NotMacaulay;
    }
    match h.at(1) {
        0 => {
            if h.sup() == Some(0) {
                Shape::Type0
            } else {
                Shape::NotMacaulay
            }
        }
        1 => {
            if h.iter().all(|(_, v)| v <= 1) && nonincreasing_from(h, 0) {
                Shape::Type1
            } else {
                Shape::NotMacaulay
            }
        }
        2 => {
            let s0 = (0..).find(|&n| h.at(n) != n + 1).unwrap_or(0);
            if h.at(s0) <= s0 && nonincreasing_from(h, s0) {
                Shape::Type2
            } else {
                Shape::NotMacaulay
            }
        }
        _ => Shape::HigherType,
    }
}
