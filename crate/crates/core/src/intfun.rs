//! Finitely supported functions `Z -> Z` and their calculus: first difference,
//! primitive, shift, upper bound of support and the character predicate.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely supported integer function on `Z`.
///
/// Stored as the values on `[offset, offset + len)`. The representation is
/// normalized: the first and last stored values are nonzero, and the zero
/// function is the empty list at offset 0. Structural equality is therefore
/// equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawIntFun")]
pub struct IntFun {
    offset: i64,
    values: Vec<i64>,
}

#[derive(Deserialize)]
struct RawIntFun {
    #[serde(default)]
    offset: i64,
    values: Vec<i64>,
}

impl From<RawIntFun> for IntFun {
    fn from(raw: RawIntFun) -> Self {
        IntFun::new(raw.offset, raw.values)
    }
}

impl IntFun {
    /// The function with `values[k]` at `offset + k`, normalized.
    pub fn new(offset: i64, values: Vec<i64>) -> Self {
        let Some(first) = values.iter().position(|&v| v != 0) else {
            return Self::zero();
        };
        let last = values.iter().rposition(|&v| v != 0).unwrap_or(first);
        Self {
            offset: offset + first as i64,
            values: values[first..=last].to_vec(),
        }
    }

    /// `(v0, v1, ...)` starting at 0.
    pub fn from_values(values: impl Into<Vec<i64>>) -> Self {
        Self::new(0, values.into())
    }

    pub fn zero() -> Self {
        Self {
            offset: 0,
            values: Vec::new(),
        }
    }

    /// The indicator `1_[a]` of the single point `a`.
    pub fn indicator(a: i64) -> Self {
        Self {
            offset: a,
            values: vec![1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `f(n)`.
    pub fn at(&self, n: i64) -> i64 {
        let idx = n - self.offset;
        if idx < 0 {
            return 0;
        }
        self.values.get(idx as usize).copied().unwrap_or(0)
    }

    /// Smallest `n` with `f(n) != 0`.
    pub fn inf(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Largest `n` with `f(n) != 0`; `None` for the zero function.
    pub fn sup(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.values.len() as i64 - 1)
    }

    /// `(n, f(n))` over the stored window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (self.offset + k as i64, v))
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    /// `sum_n weight(n) f(n)`.
    pub fn weighted_sum(&self, weight: impl Fn(i64) -> i64) -> i64 {
        self.iter().map(|(n, v)| weight(n) * v).sum()
    }

    pub fn is_character(&self) -> bool {
        self.sum() == 0
    }

    /// Values on `[lo, hi]` as a vector.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|n| self.at(n)).collect()
    }

    /// First difference: `(df)(n) = f(n) - f(n-1)`.
    pub fn diff(&self) -> Self {
        let Some(sup) = self.sup() else {
            return Self::zero();
        };
        let values = (self.offset..=sup + 1)
            .map(|n| self.at(n) - self.at(n - 1))
            .collect();
        Self::new(self.offset, values)
    }

    /// Primitive `f#(n) = sum_{k <= n} f(k)`.
    ///
    /// Finitely supported exactly when `f` is a character; otherwise the
    /// constant tail value is reported as [`Error::NonCharacter`].
    pub fn primitive(&self) -> Result<Self> {
        let tail = self.sum();
        if tail != 0 {
            return Err(Error::NonCharacter { tail });
        }
        let values = self
            .values
            .iter()
            .scan(0i64, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect();
        Ok(Self::new(self.offset, values))
    }

    /// `f[d](n) = f(n + d)`.
    pub fn shift(&self, d: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset - d,
            values: self.values.clone(),
        }
    }

    /// `diff` applied `k` times.
    pub fn diff_n(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |f, _| f.diff())
    }

    /// `primitive` applied `k` times.
    pub fn primitive_n(&self, k: usize) -> Result<Self> {
        (0..k).try_fold(self.clone(), |f, _| f.primitive())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(i64, i64) -> i64) -> Self {
        match (self.sup(), other.sup()) {
            (None, None) => Self::zero(),
            _ => {
                let lo = self
                    .inf()
                    .unwrap_or(i64::MAX)
                    .min(other.inf().unwrap_or(i64::MAX));
                let hi = self
                    .sup()
                    .unwrap_or(i64::MIN)
                    .max(other.sup().unwrap_or(i64::MIN));
                let values = (lo..=hi).map(|n| op(self.at(n), other.at(n))).collect();
                Self::new(lo, values)
            }
        }
    }

    /// Parses the compact form `(v0,v1,...)` (offset 0), `(v0,...)@k`
    /// (offset `k`), or the JSON object `{"offset": k, "values": [...]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()));
        }
        let (body, offset) = match text.rsplit_once('@') {
            Some((body, off)) => {
                let off = off
                    .trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("offset {off:?}: {e}")))?;
                (body.trim(), off)
            }
            None => (text, 0),
        };
        let inner = body
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (v0,v1,...), got {text:?}")))?;
        let values = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("value {:?}: {e}", v.trim())))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self::new(offset, values))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "offset": self.offset, "values": self.values })
    }
}

impl FromStr for IntFun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Compact form: `(v0,v1,...)` when the function starts at 0, with an
/// `@offset` suffix otherwise. Functions supported in `[0, inf)` are printed
/// from 0 so leading zeros show up, matching the usual `(f(0), ..., f(sup f))`
/// notation.
impl fmt::Display for IntFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (start, values) = if self.offset > 0 {
            (0, self.window(0, self.sup().unwrap_or(0)))
        } else {
            (self.offset, self.values.clone())
        };
        let body: Vec<String> = values.iter().map(i64::to_string).collect();
        write!(f, "({})", body.join(","))?;
        if start != 0 {
            write!(f, "@{start}")?;
        }
        Ok(())
    }
}

impl Add for &IntFun {
    type Output = IntFun;
    fn add(self, rhs: &IntFun) -> IntFun {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntFun {
    type Output = IntFun;
    fn sub(self, rhs: &IntFun) -> IntFun {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &IntFun {
    type Output = IntFun;
    fn neg(self) -> IntFun {
        IntFun {
            offset: self.offset,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl Add for IntFun {
    type Output = IntFun;
    fn add(self, rhs: IntFun) -> IntFun {
        &self + &rhs
    }
}

impl Sub for IntFun {
    type Output = IntFun;
    fn sub(self, rhs: IntFun) -> IntFun {
        &self - &rhs
    }
}

impl Neg for IntFun {
    type Output = IntFun;
    fn neg(self) -> IntFun {
        -&self
    }
}

impl std::iter::Sum for IntFun {
    fn sum<I: Iterator<Item = IntFun>>(iter: I) -> IntFun {
        iter.fold(IntFun::zero(), |acc, f| &acc + &f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(values: &[i64]) -> IntFun {
        IntFun::from_values(values.to_vec())
    }

    #[test]
    fn normalization() {
        let g = IntFun::new(-2, vec![0, 0, 3, 0, 1, 0]);
        assert_eq!(g.offset(), 0);
        assert_eq!(g.values(), &[3, 0, 1]);
        assert_eq!(IntFun::new(5, vec![0, 0]), IntFun::zero());
        assert_eq!(g.at(2), 1);
        assert_eq!(g.at(-1), 0);
        assert_eq!(g.at(7), 0);
    }

    #[test]
    fn diff_examples() {
        assert_eq!(IntFun::indicator(0).diff(), f(&[1, -1]));
        assert_eq!(f(&[1, 2, 3]).diff(), f(&[1, 1, 1, -3]));
        let g = f(&[-1, -2, -1, 4]);
        assert_eq!(g.primitive().unwrap().diff(), g);
        assert!(IntFun::zero().diff().is_zero());
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(f(&[-1, 1]).primitive().unwrap(), f(&[-1]));
        assert_eq!(
            f(&[-1, -1, 0, 1, 1]).primitive().unwrap(),
            f(&[-1, -2, -2, -1])
        );
        assert_eq!(IntFun::zero().primitive().unwrap(), IntFun::zero());
        assert_eq!(
            f(&[1, 2, 3]).primitive(),
            Err(Error::NonCharacter { tail: 6 })
        );
    }

    #[test]
    fn shift_examples() {
        let step = f(&[-1, 1]);
        let moved = step.shift(-1);
        assert_eq!(moved.offset(), 1);
        assert_eq!(moved.values(), &[-1, 1]);
        assert_eq!(step.shift(0), step);
        assert_eq!(step.shift(3).shift(-3), step);
    }

    #[test]
    fn sup_examples() {
        assert_eq!(f(&[-1, 0, 1]).sup(), Some(2));
        assert_eq!(IntFun::zero().sup(), None);
        assert_eq!(IntFun::indicator(7).sup(), Some(7));
    }

    #[test]
    fn character_predicate() {
        assert!(f(&[-1, -2, -1, 4]).is_character());
        assert!(!f(&[1, 2, 3]).is_character());
        assert!(f(&[4, -7, 2, 9]).diff().is_character());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(IntFun::parse("(-1,-2,-1,4)").unwrap(), f(&[-1, -2, -1, 4]));
        assert_eq!(IntFun::parse(" ( 1 , 3 ) ").unwrap(), f(&[1, 3]));
        assert_eq!(IntFun::parse("()").unwrap(), IntFun::zero());
        assert_eq!(
            IntFun::parse("(2,1)@-3").unwrap(),
            IntFun::new(-3, vec![2, 1])
        );
        assert_eq!(
            IntFun::parse(r#"{"offset": 2, "values": [0, 5]}"#).unwrap(),
            IntFun::new(3, vec![5])
        );
        assert!(IntFun::parse("1,2").is_err());
        assert!(IntFun::parse("(1,x)").is_err());
        assert_eq!(f(&[-1, 0, 1]).to_string(), "(-1,0,1)");
        assert_eq!(IntFun::indicator(2).to_string(), "(0,0,1)");
        assert_eq!(IntFun::new(-2, vec![3]).to_string(), "(3)@-2");
    }

    fn arb_intfun() -> impl Strategy<Value = IntFun> {
        (-6i64..6, prop::collection::vec(-9i64..=9, 0..10))
            .prop_map(|(offset, values)| IntFun::new(offset, values))
    }

    proptest! {
        #[test]
        fn text_and_json_roundtrip(g in arb_intfun()) {
            prop_assert_eq!(IntFun::parse(&g.to_string()).unwrap(), g.clone());
            let json = serde_json::to_string(&g).unwrap();
            prop_assert_eq!(serde_json::from_str::<IntFun>(&json).unwrap(), g);
        }

        #[test]
        fn diff_and_primitive_are_inverse(g in arb_intfun()) {
            prop_assert_eq!(g.diff().primitive().unwrap(), g.clone());
            let chi = g.diff();
            prop_assert_eq!(chi.primitive().unwrap().diff(), chi);
        }

        #[test]
        fn iterated_diff_then_primitive(g in arb_intfun(), k in 0usize..5) {
            prop_assert_eq!(g.diff_n(k).primitive_n(k).unwrap(), g);
        }

        #[test]
        fn diff_commutes_with_shift(g in arb_intfun(), d in -8i64..8) {
            prop_assert_eq!(g.shift(d).diff(), g.diff().shift(d));
            prop_assert_eq!(g.shift(d).sup(), g.sup().map(|s| s - d));
        }

        #[test]
        fn pointwise_arithmetic(a in arb_intfun(), b in arb_intfun(), n in -20i64..20) {
            prop_assert_eq!((&a + &b).at(n), a.at(n) + b.at(n));
            prop_assert_eq!((&a - &b).at(n), a.at(n) - b.at(n));
            prop_assert_eq!(&a - &a, IntFun::zero());
        }
    }
}
