//! Postulation characters: conversion to and from h-vectors, positivity,
//! the necessary conditions on a character of given codimension, `s1`,
//! numeric invariants (degree, genus, surface data, Hilbert polynomial,
//! postulation), resolution characters and elementary biliaisons.

use std::fmt;
use std::ops::Deref;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::intfun::IntFun;

/// A finitely supported function summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntFun", into = "IntFun")]
pub struct Character(IntFun);

impl TryFrom<IntFun> for Character {
    type Error = Error;

    fn try_from(f: IntFun) -> Result<Self> {
        Self::new(f)
    }
}

impl From<Character> for IntFun {
    fn from(c: Character) -> IntFun {
        c.0
    }
}

impl Deref for Character {
    type Target = IntFun;

    fn deref(&self) -> &IntFun {
        &self.0
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Character {
    pub fn new(f: IntFun) -> Result<Self> {
        if f.is_character() {
            Ok(Self(f))
        } else {
            Err(Error::NonCharacter { tail: f.sum() })
        }
    }

    /// Character with values starting at 0.
    pub fn from_values(values: impl Into<Vec<i64>>) -> Result<Self> {
        Self::new(IntFun::from_values(values))
    }

    pub fn function(&self) -> &IntFun {
        &self.0
    }

    pub fn into_function(self) -> IntFun {
        self.0
    }

    pub fn shift(&self, d: i64) -> Self {
        Self(self.0.shift(d))
    }

    /// `s0(gamma) = inf { n >= 0 | gamma(n) != -1 }`.
    pub fn s0(&self) -> i64 {
        (0..).find(|&n| self.at(n) != -1).unwrap_or(0)
    }

    /// `d = sum k gamma(k)`.
    pub fn degree(&self) -> i64 {
        self.weighted_sum(|k| k)
    }

    /// `gamma#`, finitely supported since `gamma` sums to zero.
    pub fn primitive(&self) -> IntFun {
        self.0
            .primitive()
            .expect("characters have finitely supported primitives")
    }
}

impl std::ops::Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        Character(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        Character(&self.0 - &rhs.0)
    }
}

/// `gamma = -dh`.
pub fn gamma_from_h(h: &IntFun) -> Character {
    Character(-h.diff())
}

/// `h(n) = -sum_{k <= n} gamma(k)`; fails unless `gamma` vanishes below 0
/// and the result is nonnegative.
pub fn h_from_gamma(gamma: &Character) -> Result<IntFun> {
    if let Some(lo) = gamma.inf().filter(|&lo| lo < 0) {
        return Err(Error::NegativeSupport(lo));
    }
    let h = -gamma.primitive();
    if let Some((n, value)) = h.iter().find(|&(_, v)| v < 0) {
        return Err(Error::NegativeHValue { n, value });
    }
    Ok(h)
}

/// Zero below 0, `-1` at 0, and nonnegative from `s0(gamma)` on.
pub fn is_positive_character(gamma: &Character) -> bool {
    if gamma.inf().is_some_and(|lo| lo < 0) || gamma.at(0) != -1 {
        return false;
    }
    let s0 = gamma.s0();
    let sup = gamma.sup().unwrap_or(0);
    (s0..=sup).all(|n| gamma.at(n) >= 0)
}

/// The character of a degree `d` hypersurface: `-1` at 0 and `+1` at `d`.
pub fn hypersurface_char(d: i64) -> Result<Character> {
    if d <= 0 {
        return Err(Error::NonPositive {
            what: "hypersurface degree",
            value: d,
        });
    }
    Character::new(&IntFun::indicator(d) - &IntFun::indicator(0))
}

/// The character of a complete intersection of type `(s0, s1)` in
/// codimension 2: `-1` on `[0, s0)`, `+1` on `[s1, s0 + s1)`.
pub fn complete_intersection_char(s0: i64, s1: i64) -> Result<Character> {
    if s0 < 1 {
        return Err(Error::NonPositive {
            what: "s0",
            value: s0,
        });
    }
    if s1 < s0 {
        return Err(Error::InvalidDecomposition(format!(
            "need s1 >= s0, got ({s0}, {s1})"
        )));
    }
    let f = IntFun::new(0, vec![-1; s0 as usize]) + IntFun::new(s1, vec![1; s0 as usize]);
    Character::new(f)
}

/// Which of the necessary conditions on a character of codimension `c`
/// failed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NecessaryClause {
    /// `sum gamma != 0`.
    NotCharacter,
    /// `gamma(n) != 0` for some `n < 0`.
    NegativeSupport,
    /// `gamma(s0) <= -C(s0 + c - 2, c - 2)`.
    S0Value,
}

/// Outcome of [`check_necessary`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryReport {
    pub holds: bool,
    /// First degree where `gamma` leaves the binomial pattern
    /// `-C(n + c - 2, c - 2)`.
    pub s0: Option<i64>,
    pub violation: Option<NecessaryClause>,
}

fn leading_value(n: i64, codim: i64) -> Result<i64> {
    Ok(-binom(n + codim - 2, codim - 2)?)
}

/// Checks the necessary conditions on the character of a subscheme of pure
/// codimension `c`: a character, zero below 0, `-C(n + c - 2, c - 2)` on
/// `[0, s0)` and `gamma(s0) > -C(s0 + c - 2, c - 2)`.
pub fn check_necessary(gamma: &IntFun, codim: i64) -> Result<NecessaryReport> {
    if codim < 1 {
        return Err(Error::Codimension { min: 1, got: codim });
    }
    let fail = |clause, s0| NecessaryReport {
        holds: false,
        s0,
        violation: Some(clause),
    };
    if !gamma.is_character() {
        return Ok(fail(NecessaryClause::NotCharacter, None));
    }
    if gamma.inf().is_some_and(|lo| lo < 0) {
        return Ok(fail(NecessaryClause::NegativeSupport, None));
    }
    let mut s0 = 0;
    while gamma.at(s0) == leading_value(s0, codim)? {
        s0 += 1;
    }
    if gamma.at(s0) <= leading_value(s0, codim)? {
        return Ok(fail(NecessaryClause::S0Value, Some(s0)));
    }
    Ok(NecessaryReport {
        holds: true,
        s0: Some(s0),
        violation: None,
    })
}

/// `s0` of a character in codimension `c`, requiring the necessary
/// conditions to hold.
pub fn s0_in_codim(gamma: &IntFun, codim: i64) -> Result<i64> {
    let report = check_necessary(gamma, codim)?;
    match (report.holds, report.s0) {
        (true, Some(s0)) => Ok(s0),
        _ => Err(Error::NecessaryConditions(format!(
            "{gamma} fails {:?} in codimension {codim}",
            report.violation
        ))),
    }
}

/// `s1 = inf { n >= s0 | gamma(n) > C(n - s0 + c - 2, c - 2) - C(n + c - 2, c - 2) }`.
///
/// In codimension 2 this is the first `n >= s0` with `gamma(n) > 0`, in
/// codimension 3 the first with `gamma(n) > -s0`.
pub fn s1_general(gamma: &IntFun, codim: i64) -> Result<i64> {
    if codim < 2 {
        return Err(Error::Codimension { min: 2, got: codim });
    }
    let s0 = s0_in_codim(gamma, codim)?;
    let last = gamma.sup().unwrap_or(s0).max(s0) + 1;
    for n in s0..=last {
        let threshold = binom(n - s0 + codim - 2, codim - 2)? - binom(n + codim - 2, codim - 2)?;
        if gamma.at(n) > threshold {
            return Ok(n);
        }
    }
    // Past the support gamma is 0 and the threshold no longer changes sign.
    Err(Error::S1Undefined)
}

/// `gamma_X'(n) = gamma_X(n - h) + gamma_Y#(n) - gamma_Y#(n - h)`: the
/// character after an elementary biliaison of height `h` on `Y`.
pub fn biliaison(gamma_x: &Character, gamma_y: &Character, height: i64) -> Character {
    let support = gamma_y.primitive();
    let f = &(&gamma_x.shift(-height).0 + &support) - &support.shift(-height);
    Character::new(f).expect("biliaison of characters is a character")
}

/// `r = d^(c-1) gamma`, the alternating rank function of a resolution.
pub fn resolution_char(gamma: &Character, codim: i64) -> Result<IntFun> {
    if codim < 2 {
        return Err(Error::Codimension { min: 2, got: codim });
    }
    Ok(gamma.diff_n((codim - 1) as usize))
}

/// Inverse of [`resolution_char`]: `gamma(n) = sum_k C(n - k + c - 2, c - 2) r(k)`,
/// computed as a `(c-1)`-fold primitive.
pub fn gamma_from_resolution(r: &IntFun, codim: i64) -> Result<Character> {
    if codim < 2 {
        return Err(Error::Codimension { min: 2, got: codim });
    }
    Character::new(r.primitive_n((codim - 1) as usize)?)
}

/// `h0 I_X(n) - h0 O_P(n) = sum_k C(n - k + M + 1, M + 1) gamma(k)` for a
/// subscheme of dimension `M`.
pub fn postulation_values(gamma: &Character, dim: i64, n: i64) -> Result<i64> {
    if dim < 0 {
        return Err(Error::Negative {
            what: "dimension",
            value: dim,
        });
    }
    gamma.iter().try_fold(0i64, |acc, (k, v)| {
        let c = binom(n - k + dim + 1, dim + 1)?;
        c.checked_mul(v)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("postulation value"))
    })
}

/// Degree and arithmetic genus of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub d: i64,
    pub g: i64,
}

impl fmt::Display for CurveInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} g={}", self.d, self.g)
    }
}

/// `d = sum k gamma(k)` and `g - 1 = sum (k-1)(k-2)/2 gamma(k)`.
pub fn curve_invariants(gamma: &Character) -> Result<CurveInvariants> {
    let d = gamma.degree();
    let twice = gamma.weighted_sum(|k| (k - 1) * (k - 2));
    if twice % 2 != 0 {
        return Err(Error::NonIntegral("genus"));
    }
    Ok(CurveInvariants {
        d,
        g: twice / 2 + 1,
    })
}

/// Degree, canonical degree `delta` and arithmetic genus of a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub d: i64,
    pub delta: i64,
    pub p_a: i64,
}

impl fmt::Display for SurfaceInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} delta={} pa={}", self.d, self.delta, self.p_a)
    }
}

/// `delta = sum (k^2 - 4k) gamma(k)` and
/// `1 + p_a = sum (k-3)(k-2)(k-1)/6 gamma(k)`.
pub fn surface_invariants(gamma: &Character) -> Result<SurfaceInvariants> {
    let d = gamma.degree();
    let delta = gamma.weighted_sum(|k| k * k - 4 * k);
    let six = gamma.weighted_sum(|k| (k - 3) * (k - 2) * (k - 1));
    if six % 6 != 0 {
        return Err(Error::NonIntegral("p_a"));
    }
    Ok(SurfaceInvariants {
        d,
        delta,
        p_a: six / 6 - 1,
    })
}

/// A polynomial with exact rational coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Ratio<i64>>,
}

impl RationalPolynomial {
    pub fn coeffs(&self) -> &[Ratio<i64>] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .rposition(|c| *c != Ratio::from_integer(0))
    }

    pub fn eval(&self, n: i64) -> Ratio<i64> {
        self.coeffs
            .iter()
            .rev()
            .fold(Ratio::from_integer(0), |acc, c| acc * n + c)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(top) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for p in (0..=top).rev() {
            let c = self.coeffs[p];
            if c == Ratio::from_integer(0) {
                continue;
            }
            let (sign, abs) = if c < Ratio::from_integer(0) {
                ("-", -c)
            } else {
                ("+", c)
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = abs == Ratio::from_integer(1);
            match p {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ => write!(f, "{abs}")?,
            }
            match p {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{p}")?,
            }
        }
        Ok(())
    }
}

/// `P(n) = -sum_k (n-k+M+1)(n-k+M)...(n-k+1)/(M+1)! gamma(k)` for a
/// subscheme of dimension `M`, expanded exactly.
pub fn hilbert_polynomial(gamma: &Character, dim: i64) -> Result<RationalPolynomial> {
    if dim < 0 {
        return Err(Error::Negative {
            what: "dimension",
            value: dim,
        });
    }
    let factors = (dim + 1) as usize;
    let mut total = vec![0i64; factors + 1];
    for (k, v) in gamma.iter() {
        // prod_{j=1}^{M+1} (n + j - k), integer coefficients.
        let mut poly = vec![1i64];
        for j in 1..=dim + 1 {
            let root = j - k;
            let mut next = vec![0i64; poly.len() + 1];
            for (p, &c) in poly.iter().enumerate() {
                next[p + 1] += c;
                next[p] += c * root;
            }
            poly = next;
        }
        for (p, c) in poly.iter().enumerate() {
            total[p] -= c * v;
        }
    }
    let factorial: i64 = (1..=dim + 1).product();
    // The n^(M+1) terms cancel because gamma sums to zero.
    debug_assert_eq!(total[factors], 0);
    let coeffs = total[..factors]
        .iter()
        .map(|&c| Ratio::new(c, factorial))
        .collect();
    Ok(RationalPolynomial { coeffs })
}
