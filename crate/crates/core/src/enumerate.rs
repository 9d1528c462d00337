//! Exhaustive enumeration of codimension 3 ACM characters by their
//! decompositions into positive characters, and the resulting table of
//! (degree, genus) pairs of ACM curves in `P^4`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::binomial::binom;
use crate::character::{curve_invariants, surface_invariants, Character, CurveInvariants};
use crate::codim3::Codim3Decomposition;
use crate::error::{Error, Result};

/// Reference list of `(d, g)` for nondegenerate ACM curves in `P^4` of
/// degree at most 10.
pub const REFERENCE_PAIRS: [(i64, i64); 27] = [
    (4, 0),
    (5, 1),
    (6, 2),
    (6, 3),
    (7, 3),
    (7, 4),
    (7, 6),
    (8, 4),
    (8, 5),
    (8, 6),
    (8, 7),
    (8, 10),
    (9, 5),
    (9, 6),
    (9, 7),
    (9, 8),
    (9, 9),
    (9, 11),
    (9, 15),
    (10, 6),
    (10, 7),
    (10, 8),
    (10, 9),
    (10, 10),
    (10, 12),
    (10, 13),
    (10, 16),
];

/// Largest degree covered by [`REFERENCE_PAIRS`].
pub const REFERENCE_MAX_DEGREE: i64 = 10;

/// Partitions of `total` into exactly `count` parts, each in `[min, max]`,
/// as nondecreasing sequences.
fn bounded_partitions(total: i64, count: i64, min: i64, max: i64) -> Vec<Vec<i64>> {
    fn go(
        total: i64,
        count: i64,
        min: i64,
        max: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if count == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // The smallest remaining part is at least `min` and at most total / count.
        let hi = max.min(total / count);
        for part in min..=hi {
            prefix.push(part);
            go(total - part, count - 1, part, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, count, min, max, &mut Vec::new(), &mut out);
    out
}

/// All positive characters of degree `d` with `s0 >= min_s0` and
/// `sup <= max_sup` (unbounded when `None`), ordered by `s0` and then by
/// their nonnegative tail.
///
/// A positive character with `s0 = s` is `-1` on `[0, s)` plus `s` unit
/// masses placed at degrees `>= s`; the masses sum to `s` and their
/// positions to `d + s(s-1)/2`, which forces `d >= s(s+1)/2`.
pub fn enumerate_positive_characters(d: i64, min_s0: i64, max_sup: Option<i64>) -> Vec<Character> {
    let mut out = Vec::new();
    if d < 1 {
        return out;
    }
    let mut s = min_s0.max(1);
    while s * (s + 1) / 2 <= d {
        let total = d + s * (s - 1) / 2;
        let max = max_sup.unwrap_or(total);
        for positions in bounded_partitions(total, s, s, max) {
            let top = *positions.last().expect("s >= 1 parts");
            let mut values = vec![0i64; top as usize + 1];
            values[..s as usize].fill(-1);
            for p in positions {
                values[p as usize] += 1;
            }
            out.push(Character::from_values(values).expect("masses balance the -1 run"));
        }
        s += 1;
    }
    out
}

/// `d = sum d_i` and `2g - 2 = sum (delta_i + (2i + 1) d_i)` from the
/// surface invariants of the parts.
pub fn dg_from_components(dec: &Codim3Decomposition) -> Result<CurveInvariants> {
    let mut d = 0;
    let mut twice = 0;
    for (i, part) in dec.parts().iter().enumerate() {
        let s = surface_invariants(part)?;
        d += s.d;
        twice += s.delta + (2 * i as i64 + 1) * s.d;
    }
    if twice % 2 != 0 {
        return Err(Error::InvalidDecomposition(format!(
            "2g - 2 = {twice} is odd"
        )));
    }
    Ok(CurveInvariants {
        d,
        g: twice / 2 + 1,
    })
}

/// One `(d, g)` pair with every decomposition that realizes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DgEntry {
    pub d: i64,
    pub g: i64,
    pub witnesses: Vec<Codim3Decomposition>,
}

impl DgEntry {
    fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| Value::Array(w.parts().iter().map(|p| p.function().to_json()).collect()))
            .collect();
        json!({ "d": self.d, "g": self.g, "witnesses": witnesses })
    }
}

/// Sorted, deduplicated `(d, g)` pairs with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DgTable {
    max_degree: i64,
    nondegenerate: bool,
    entries: Vec<DgEntry>,
}

impl DgTable {
    pub fn entries(&self) -> &[DgEntry] {
        &self.entries
    }

    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.entries.iter().map(|e| (e.d, e.g)).collect()
    }

    pub fn get(&self, d: i64, g: i64) -> Option<&DgEntry> {
        self.entries.iter().find(|e| e.d == d && e.g == g)
    }

    fn in_reference_range(&self, entry: &DgEntry) -> bool {
        self.nondegenerate && entry.d <= REFERENCE_MAX_DEGREE
    }

    /// Entries inside the reference range that the reference list lacks.
    pub fn beyond_reference(&self) -> Vec<&DgEntry> {
        self.entries
            .iter()
            .filter(|e| self.in_reference_range(e) && !REFERENCE_PAIRS.contains(&(e.d, e.g)))
            .collect()
    }

    /// Reference pairs (within the enumerated degree range) that were not
    /// produced.
    pub fn missing_reference(&self) -> Vec<(i64, i64)> {
        if !self.nondegenerate {
            return Vec::new();
        }
        REFERENCE_PAIRS
            .iter()
            .copied()
            .filter(|&(d, g)| d <= self.max_degree && self.get(d, g).is_none())
            .collect()
    }

    /// `{"pairs": [...], "beyond_paper": [...]}`; an entry appears in
    /// exactly one of the two lists.
    pub fn to_json(&self) -> Value {
        let beyond: Vec<&DgEntry> = self.beyond_reference();
        let (extra, pairs): (Vec<&DgEntry>, Vec<&DgEntry>) =
            self.entries.iter().partition(|e| beyond.contains(e));
        json!({
            "max_degree": self.max_degree,
            "nondegenerate": self.nondegenerate,
            "pairs": pairs.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            "beyond_paper": extra.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }

    /// One `d g count` row per pair; with `verbose`, the witnesses follow
    /// each row, indented.
    pub fn to_table(&self, verbose: bool) -> String {
        let beyond = self.beyond_reference();
        let mut out = String::new();
        for e in &self.entries {
            let mark = if beyond.contains(&e) {
                "  beyond-reference"
            } else {
                ""
            };
            out.push_str(&format!("{} {} {}{mark}\n", e.d, e.g, e.witnesses.len()));
            if verbose {
                for w in &e.witnesses {
                    let parts: Vec<String> = w.parts().iter().map(ToString::to_string).collect();
                    out.push_str(&format!("    {} = {}\n", w.recompose(), parts.join(" + ")));
                }
            }
        }
        out
    }
}

/// Largest `s` with `C(s + 2, 3) <= max_degree`.
fn max_s0(max_degree: i64) -> Result<i64> {
    let mut s = 1;
    while binom(s + 3, 3)? <= max_degree {
        s += 1;
    }
    Ok(s)
}

struct Search<'a> {
    by_degree: &'a [Vec<Character>],
    found: BTreeMap<(i64, i64), BTreeSet<Codim3Decomposition>>,
}

impl Search<'_> {
    fn fill(&mut self, parts: &mut Vec<Character>, r: usize, remaining: i64) -> Result<()> {
        let level = parts.len();
        if level > r {
            return self.record(parts);
        }
        let last = level == r;
        // Parts before the last have s0 >= 2, hence degree >= 3.
        let reserve = if last {
            0
        } else {
            3 * (r - level - 1) as i64 + 1
        };
        let min_deg = if last { 1 } else { 3 };
        let prev_s0 = parts.last().map(Character::s0);
        for deg in min_deg..=remaining - reserve {
            for gamma in &self.by_degree[deg as usize] {
                if !last && gamma.s0() < 2 {
                    continue;
                }
                if prev_s0.is_some_and(|s| gamma.sup().unwrap_or(0) >= s) {
                    continue;
                }
                parts.push(gamma.clone());
                self.fill(parts, r, remaining - deg)?;
                parts.pop();
            }
        }
        Ok(())
    }

    fn record(&mut self, parts: &[Character]) -> Result<()> {
        let dec = Codim3Decomposition::from_parts(parts.to_vec());
        let direct = curve_invariants(&dec.recompose())?;
        let by_parts = dg_from_components(&dec)?;
        if direct != by_parts {
            return Err(Error::InvalidDecomposition(format!(
                "{:?}: invariants {direct} disagree with component bookkeeping {by_parts}",
                dec.parts()
            )));
        }
        self.found
            .entry((direct.d, direct.g))
            .or_default()
            .insert(dec);
        Ok(())
    }
}

/// All `(d, g)` with `d <= max_degree` realized by codimension 3 ACM
/// characters `gamma_0 + gamma_1[-1] + ... + gamma_r[-r]`, with witnesses.
///
/// Parts before the last have `s0 >= 2`; consecutive parts satisfy
/// `sup gamma_i < s0(gamma_{i-1})`. With `nondegenerate` the search needs
/// `r >= 1`; otherwise single positive characters (`r = 0`) are included.
/// `s0 = r + 1` is pruned by `d >= C(s0 + 2, 3)`.
pub fn enumerate_acm_curves(max_degree: i64, nondegenerate: bool) -> Result<DgTable> {
    if max_degree < 1 {
        return Err(Error::NonPositive {
            what: "max degree",
            value: max_degree,
        });
    }
    let by_degree: Vec<Vec<Character>> = (0..=max_degree)
        .map(|d| enumerate_positive_characters(d, 1, None))
        .collect();
    let mut search = Search {
        by_degree: &by_degree,
        found: BTreeMap::new(),
    };
    let first_r = if nondegenerate { 1 } else { 0 };
    let last_r = max_s0(max_degree)? - 1;
    for r in first_r..=last_r {
        search.fill(&mut Vec::new(), r as usize, max_degree)?;
    }
    let entries = search
        .found
        .into_iter()
        .map(|((d, g), ws)| DgEntry {
            d,
            g,
            witnesses: ws.into_iter().collect(),
        })
        .collect();
    Ok(DgTable {
        max_degree,
        nondegenerate,
        entries,
    })
}

/// Characters recomposed from every witness of the table, deduplicated.
pub fn table_characters(table: &DgTable) -> Vec<Character> {
    let set: BTreeSet<Character> = table
        .entries()
        .iter()
        .flat_map(|e| e.witnesses.iter().map(Codim3Decomposition::recompose))
        .collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::is_positive_character;
    use crate::intfun::IntFun;

    fn ch(values: &[i64]) -> Character {
        Character::from_values(values.to_vec()).unwrap()
    }

    /// Brute force: every function on [0, len) with values in [-1, d] that is a
    /// positive character of degree d.
    fn brute_positive(d: i64, len: usize) -> BTreeSet<Character> {
        let mut out = BTreeSet::new();
        let mut digits = vec![-1i64; len];
        loop {
            let f = IntFun::from_values(digits.clone());
            if f.is_character() {
                let c = Character::new(f).unwrap();
                if is_positive_character(&c) && c.degree() == d {
                    out.insert(c);
                }
            }
            let mut k = 0;
            loop {
                if k == len {
                    return out;
                }
                if digits[k] < d {
                    digits[k] += 1;
                    break;
                }
                digits[k] = -1;
                k += 1;
            }
        }
    }

    #[test]
    fn positive_character_examples() {
        assert_eq!(
            enumerate_positive_characters(1, 1, None),
            vec![ch(&[-1, 1])]
        );
        assert_eq!(
            enumerate_positive_characters(2, 1, None),
            vec![ch(&[-1, 0, 1])]
        );
        let three: BTreeSet<_> = enumerate_positive_characters(3, 1, None)
            .into_iter()
            .collect();
        assert_eq!(
            three,
            [ch(&[-1, -1, 2]), ch(&[-1, 0, 0, 1])].into_iter().collect()
        );
        assert_eq!(
            enumerate_positive_characters(3, 2, None),
            vec![ch(&[-1, -1, 2])]
        );
        assert!(enumerate_positive_characters(0, 1, None).is_empty());
    }

    #[test]
    fn positive_characters_match_brute_force() {
        // A positive character of degree d has sup <= d, so [0, d] suffices.
        for d in 1..=6 {
            let fast: BTreeSet<_> = enumerate_positive_characters(d, 1, None)
                .into_iter()
                .collect();
            assert_eq!(fast, brute_positive(d, d as usize + 1), "d = {d}");
        }
    }

    #[test]
    fn max_sup_filter() {
        for c in enumerate_positive_characters(7, 1, Some(4)) {
            assert!(c.sup().unwrap() <= 4);
        }
        assert!(enumerate_positive_characters(5, 1, Some(2)).is_empty());
    }

    #[test]
    fn component_bookkeeping_examples() {
        let dec = Codim3Decomposition::from_parts(vec![ch(&[-1, -1, -1, 3]), ch(&[-1, 0, 1])]);
        assert_eq!(
            dg_from_components(&dec).unwrap(),
            CurveInvariants { d: 8, g: 4 }
        );
        let dec = Codim3Decomposition::from_parts(vec![
            ch(&[-1, -1, -1, 3]),
            ch(&[-1, -1, 2]),
            ch(&[-1, 1]),
        ]);
        assert_eq!(
            dg_from_components(&dec).unwrap(),
            CurveInvariants { d: 10, g: 6 }
        );
        let dec = Codim3Decomposition::from_parts(vec![ch(&[-1, -1, -1, 3])]);
        assert_eq!(
            dg_from_components(&dec).unwrap(),
            CurveInvariants { d: 6, g: 3 }
        );
    }

    #[test]
    fn small_tables() {
        assert_eq!(enumerate_acm_curves(4, true).unwrap().pairs(), vec![(4, 0)]);
        assert_eq!(
            enumerate_acm_curves(5, true).unwrap().pairs(),
            vec![(4, 0), (5, 1)]
        );
        assert!(enumerate_acm_curves(3, true).unwrap().pairs().is_empty());
        let degenerate = enumerate_acm_curves(3, false).unwrap();
        assert_eq!(degenerate.pairs(), vec![(1, 0), (2, 0), (3, 0), (3, 1)]);
    }

    #[test]
    fn max_s0_bound() {
        assert_eq!(max_s0(10).unwrap(), 3);
        assert_eq!(max_s0(9).unwrap(), 2);
        assert_eq!(max_s0(20).unwrap(), 4);
    }
}
