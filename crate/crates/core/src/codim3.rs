//! Codimension 3 ACM characters: decomposition into positive characters,
//! the bounds it implies, `s1` from the last part, the integrality screen,
//! and the characters of subschemes lying on a quadric.

use serde::Serialize;

use crate::character::{
    check_necessary, curve_invariants, gamma_from_h, h_from_gamma, hypersurface_char,
    is_positive_character, s0_in_codim, s1_general, Character, CurveInvariants,
};
use crate::error::{Error, Result};
use crate::growth::{decompose, MacaulayFn};
use crate::intfun::IntFun;

/// `gamma = gamma_0 + gamma_1[-1] + ... + gamma_r[-r]` with positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Codim3Decomposition {
    parts: Vec<Character>,
}

impl Codim3Decomposition {
    /// Wraps parts without validation; see [`Codim3Decomposition::validate`].
    pub fn from_parts(parts: Vec<Character>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[Character] {
        &self.parts
    }

    pub fn r(&self) -> i64 {
        self.parts.len() as i64 - 1
    }

    pub fn last(&self) -> &Character {
        self.parts
            .last()
            .expect("a decomposition has at least one part")
    }

    pub fn recompose(&self) -> Character {
        let f: IntFun = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, p)| p.function().shift(-(i as i64)))
            .sum();
        Character::new(f).expect("sums of characters are characters")
    }

    /// Every part positive and `sup gamma_i < s0(gamma_{i-1})`.
    pub fn validate(&self) -> Result<()> {
        if self.parts.is_empty() {
            return Err(Error::InvalidDecomposition("no parts".into()));
        }
        for (i, part) in self.parts.iter().enumerate() {
            if !is_positive_character(part) {
                return Err(Error::InvalidDecomposition(format!(
                    "gamma_{i} = {part} is not positive"
                )));
            }
        }
        for (i, pair) in self.parts.windows(2).enumerate() {
            let (prev, cur) = (&pair[0], &pair[1]);
            let sup = cur.sup().unwrap_or(0);
            if sup >= prev.s0() {
                return Err(Error::InvalidDecomposition(format!(
                    "sup gamma_{} = {sup} is not < s0(gamma_{i}) = {}",
                    i + 1,
                    prev.s0()
                )));
            }
        }
        Ok(())
    }
}

fn not_acm(gamma: &Character, why: impl std::fmt::Display) -> Error {
    Error::NotCodim3Acm(format!("{gamma}: {why}"))
}

/// The h-vector of a codimension 3 character, checked to be Macaulay.
fn h_vector(gamma: &Character) -> Result<MacaulayFn> {
    let report = check_necessary(gamma, 3)?;
    if !report.holds {
        return Err(not_acm(
            gamma,
            format!("necessary conditions fail ({:?})", report.violation),
        ));
    }
    let h = h_from_gamma(gamma).map_err(|e| not_acm(gamma, e))?;
    MacaulayFn::new(h).map_err(|e| not_acm(gamma, e))
}

/// Decomposition through the h-vector: split `h` into type 2 (and lower)
/// Macaulay functions and convert each part back with `-d`.
pub fn decompose_via_h(gamma: &Character) -> Result<Codim3Decomposition> {
    let h = h_vector(gamma)?;
    if h.type_a() <= 2 {
        return Ok(Codim3Decomposition {
            parts: vec![gamma.clone()],
        });
    }
    let parts = decompose(&h)?
        .parts()
        .iter()
        .map(|p| gamma_from_h(p.function()))
        .collect();
    Ok(Codim3Decomposition { parts })
}

/// Decomposition directly on the character: with
/// `N = inf { n | sum_{m > n} gamma(m) <= n }`, the leading part is `-1`
/// below `N`, `N - sum_{m > N} gamma(m)` at `N` and `gamma` above `N`; peel
/// it off, shift by one and repeat while the remainder still has
/// `gamma(1) = -2`.
pub fn decompose_greedy(gamma: &Character) -> Result<Codim3Decomposition> {
    h_vector(gamma)?;
    let mut parts = Vec::new();
    let mut current = gamma.function().clone();
    while current.at(1) == -2 {
        let tail_after =
            |n: i64| -> i64 { current.iter().filter(|&(m, _)| m > n).map(|(_, v)| v).sum() };
        let cut = (0..)
            .find(|&n| tail_after(n) <= n)
            .expect("tail sums vanish past the support");
        let head = IntFun::new(0, vec![-1; cut as usize])
            + IntFun::new(cut, vec![cut - tail_after(cut)])
            + IntFun::new(
                cut + 1,
                current.window(cut + 1, current.sup().unwrap_or(cut).max(cut + 1)),
            );
        let rest = (&current - &head).shift(1);
        parts.push(Character::new(head)?);
        current = rest;
    }
    parts.push(Character::new(current)?);
    Ok(Codim3Decomposition { parts })
}

/// The decomposition of a codimension 3 ACM character into positive
/// characters. Degenerate characters (`h(1) <= 2`) come back as `[gamma]`.
///
/// Runs both the h-vector route and the direct route and requires them to
/// agree.
pub fn decompose_codim3(gamma: &Character) -> Result<Codim3Decomposition> {
    let via_h = decompose_via_h(gamma)?;
    let greedy = if via_h.r() == 0 {
        via_h.clone()
    } else {
        decompose_greedy(gamma)?
    };
    if via_h != greedy {
        return Err(Error::RouteMismatch(format!(
            "{gamma}: h-vector route {:?} vs direct route {:?}",
            via_h.parts, greedy.parts
        )));
    }
    via_h.validate()?;
    Ok(via_h)
}

/// `s1 = s0(gamma_r) + s0 - 1`.
pub fn s1_via_cor37(dec: &Codim3Decomposition, s0: i64) -> i64 {
    dec.last().s0() + s0 - 1
}

/// Lower bounds on `gamma` implied by its decomposition:
///
/// * `gamma(n) >= -s0` for `s0 <= n < s0(gamma_{r-1}) + s0 - 2`,
/// * `gamma(n) >= -i` for `s0(gamma_i) + i <= n < s0(gamma_{i-1}) + i - 1`,
/// * `gamma(n) >= 0` for `n >= s0(gamma_0)`,
///
/// where `s0 = r + 1`. Empty ranges pass.
pub fn check_prop36_bounds(gamma: &Character, dec: &Codim3Decomposition) -> bool {
    let parts = dec.parts();
    let r = parts.len() as i64 - 1;
    let sup = gamma.sup().unwrap_or(0);
    let holds_on = |lo: i64, hi: i64, bound: i64| (lo..hi).all(|n| gamma.at(n) >= bound);

    if r >= 1 {
        let s0 = r + 1;
        if !holds_on(s0, parts[(r - 1) as usize].s0() + s0 - 2, -s0) {
            return false;
        }
        for i in 1..=r {
            let lo = parts[i as usize].s0() + i;
            let hi = parts[(i - 1) as usize].s0() + i - 1;
            if !holds_on(lo, hi, -i) {
                return false;
            }
        }
    }
    holds_on(parts[0].s0(), sup + 1, 0)
}

/// Necessary condition for integral codimension 3 ACM subschemes:
/// `gamma(n) >= min(0, n - s0 - s1 + 1)` for all `n >= s1`. Not sufficient.
pub fn integral_screen(gamma: &Character) -> Result<bool> {
    let s0 = s0_in_codim(gamma, 3)?;
    let s1 = s1_general(gamma, 3)?;
    let sup = gamma.sup().unwrap_or(0);
    Ok((s1..=sup).all(|n| gamma.at(n) >= (n - s0 - s1 + 1).min(0)))
}

/// Result of [`quadric_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadricReport {
    pub valid: bool,
    /// Length of the run of `-2` starting at 1.
    pub t: i64,
    pub s: Option<i64>,
    pub gamma0: Option<Character>,
    pub gamma1: Option<Character>,
}

/// For a codimension 3 character with `s0 = 2`: looks for `1 <= t < s` with
/// `gamma = -2` on `[1, t]`, `>= -1` on `(t, s)`, `>= 0` from `s` on, and
/// `sum_{n > s} gamma(n) <= s <= sum_{n >= s} gamma(n)`, then builds the
/// split `gamma0` (`-1` below `s`, `s - sum_{n > s} gamma` at `s`, `gamma`
/// above) and `gamma1 = (gamma - gamma0)[1]`.
pub fn quadric_check(gamma: &Character) -> Result<QuadricReport> {
    let s0 = s0_in_codim(gamma, 3)?;
    if s0 != 2 {
        return Err(Error::NecessaryConditions(format!(
            "s0 = {s0}, quadric check needs s0 = 2"
        )));
    }
    let t = (1..).take_while(|&n| gamma.at(n) == -2).count() as i64;
    let sup = gamma.sup().unwrap_or(0);
    let tail_from = |n: i64| -> i64 { (n..=sup).map(|m| gamma.at(m)).sum() };

    let found = (t + 1..=sup + 1).find(|&s| {
        (t + 1..s).all(|n| gamma.at(n) >= -1)
            && (s..=sup).all(|n| gamma.at(n) >= 0)
            && tail_from(s + 1) <= s
            && s <= tail_from(s)
    });
    let Some(s) = found else {
        return Ok(QuadricReport {
            valid: false,
            t,
            s: None,
            gamma0: None,
            gamma1: None,
        });
    };

    let head = IntFun::new(0, vec![-1; s as usize])
        + IntFun::new(s, vec![s - tail_from(s + 1)])
        + IntFun::new(s + 1, gamma.window(s + 1, sup.max(s + 1)));
    let gamma0 = Character::new(head)?;
    let gamma1 = (gamma - &gamma0).shift(1);
    let valid = is_positive_character(&gamma0)
        && is_positive_character(&gamma1)
        && gamma1.sup().unwrap_or(0) < gamma0.s0();
    Ok(QuadricReport {
        valid,
        t,
        s: Some(s),
        gamma0: Some(gamma0),
        gamma1: Some(gamma1),
    })
}

/// Necessary condition for integral subschemes on a quadric:
/// `gamma(t + 1) >= -1` and `gamma(n) >= 0` for `n >= t + 2`.
pub fn integral_quadric_check(gamma: &Character) -> Result<bool> {
    let report = quadric_check(gamma)?;
    if !report.valid {
        return Err(Error::NecessaryConditions(format!(
            "{gamma} does not pass the quadric check"
        )));
    }
    let t = report.t;
    let sup = gamma.sup().unwrap_or(0);
    Ok(gamma.at(t + 1) >= -1 && (t + 2..=sup).all(|n| gamma.at(n) >= 0))
}

/// Character of the union of two plane curves of degrees `d1`, `d2` in
/// planes meeting in a point: `gamma_1 + gamma_2 + (1, -2, 1)`.
pub fn plane_union_char(d1: i64, d2: i64) -> Result<Character> {
    let correction = Character::from_values(vec![1, -2, 1])?;
    Ok(&(&hypersurface_char(d1)? + &hypersurface_char(d2)?) + &correction)
}

/// Everything the library can say about one codimension 3 character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Codim3Report {
    pub gamma: Character,
    pub h: IntFun,
    pub s0: i64,
    pub s1: i64,
    pub degenerate: bool,
    pub decomposition: Vec<Character>,
    pub s1_from_last_part: Option<i64>,
    pub bounds_hold: bool,
    pub integral_screen: bool,
    pub quadric: Option<QuadricReport>,
    pub integral_quadric: Option<bool>,
    pub invariants: CurveInvariants,
}

/// Full report used by the `analyze-codim3` command.
pub fn analyze_codim3(gamma: &Character) -> Result<Codim3Report> {
    let dec = decompose_codim3(gamma)?;
    let s0 = s0_in_codim(gamma, 3)?;
    let s1 = s1_general(gamma, 3)?;
    let h = h_from_gamma(gamma)?;
    let degenerate = dec.r() == 0;
    let quadric = if s0 == 2 {
        Some(quadric_check(gamma)?)
    } else {
        None
    };
    let integral_quadric = match &quadric {
        Some(q) if q.valid => Some(integral_quadric_check(gamma)?),
        _ => None,
    };
    Ok(Codim3Report {
        gamma: gamma.clone(),
        h,
        s0,
        s1,
        degenerate,
        s1_from_last_part: (!degenerate).then(|| s1_via_cor37(&dec, s0)),
        bounds_hold: check_prop36_bounds(gamma, &dec),
        integral_screen: integral_screen(gamma)?,
        quadric,
        integral_quadric,
        invariants: curve_invariants(gamma)?,
        decomposition: dec.parts,
    })
}
