//! Shared brute-force generators for the integration tests.
#![allow(dead_code)]

use postulation::binomial::upper;
use postulation::intfun::IntFun;

/// Every vector of length `len` with entries in `[lo, hi]`, in odometer order.
pub fn odometer(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut digits = vec![lo; len];
    loop {
        out.push(digits.clone());
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            if digits[k] < hi {
                digits[k] += 1;
                break;
            }
            digits[k] = lo;
            k += 1;
        }
    }
}

/// All finitely supported Macaulay functions with `h(1) = a` and
/// `sum h <= max_total`, grown value by value under `h(n+1) <= h(n)^<n>`.
pub fn macaulay_functions(a: i64, max_total: i64) -> Vec<IntFun> {
    fn grow(values: &mut Vec<i64>, remaining: i64, out: &mut Vec<IntFun>) {
        let n = values.len() as i64 - 1;
        let last = *values.last().unwrap();
        out.push(IntFun::from_values(values.clone()));
        if last == 0 {
            return;
        }
        let bound = upper(last, n).unwrap().min(remaining);
        for next in 1..=bound {
            values.push(next);
            grow(values, remaining - next, out);
            values.pop();
        }
    }
    let mut out = Vec::new();
    if a == 0 {
        out.push(IntFun::from_values(vec![1]));
        return out;
    }
    if 1 + a > max_total {
        return out;
    }
    grow(&mut vec![1, a], max_total - 1 - a, &mut out);
    out
}

/// Every nonnegative vector of length `len` with entry sum at most `max_sum`.
pub fn bounded_sum_vectors(len: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            go(len, budget - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_sum, &mut Vec::new(), &mut out);
    out
}
