//! Exact distance budgets.
//!
//! Accept/reject decisions never go through floating point. Rational bounds
//! compare by cross-multiplication; irrational bounds (`√n`, `n^{4/3}`,
//! `n/e`) compare an integer distance `x` against the bound through exact
//! integer predicates (`x ≤ √n ⟺ x² ≤ n`, `x ≤ n^{4/3} ⟺ x³ ≤ n⁴`, and a
//! refining rational sandwich of Euler's number for `n/e`).

use std::fmt;
use std::str::FromStr;

use num::BigUint;

use crate::graph::Metric;

/// An exact upper bound for an integer distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BudgetBound {
    /// `x ≤ c`.
    Exactly(u64),
    /// `x ≤ n/d`, i.e. `x·d ≤ n`.
    NOver { n: u64, d: u64 },
    /// `x ≤ n/e` with `e` Euler's number.
    NOverE(u64),
    /// `x ≤ √n`, i.e. `x² ≤ n`.
    SqrtN(u64),
    /// `x ≤ n^{p/r}`, i.e. `x^r ≤ n^p`.
    NPow { n: u64, p: u32, r: u32 },
}

impl BudgetBound {
    /// Whether the integer distance `x` respects the bound.
    pub fn admits(&self, x: u64) -> bool {
        match *self {
            BudgetBound::Exactly(c) => x <= c,
            BudgetBound::NOver { n, d } => (x as u128) * (d as u128) <= n as u128,
            BudgetBound::NOverE(n) => x_le_n_over_e(x, n),
            BudgetBound::SqrtN(n) => (x as u128) * (x as u128) <= n as u128,
            BudgetBound::NPow { n, p, r } => {
                BigUint::from(x).pow(r) <= BigUint::from(n).pow(p)
            }
        }
    }
}

/// Decides `x ≤ n/e` exactly, i.e. `x·e ≤ n`.
///
/// Walks the continued-fraction convergents of `e = [2; 1, 2, 1, 1, 4, 1,
/// 1, 6, …]`, which alternate strictly below and above `e`. Once some
/// convergent `p/q > e` has `x·p ≤ n·q` the answer is yes; once some
/// convergent `p/q < e` has `x·p ≥ n·q` the answer is no. Since `x·e` is
/// irrational for `x ≥ 1`, the sandwich always resolves.
fn x_le_n_over_e(x: u64, n: u64) -> bool {
    if x == 0 {
        return true;
    }
    let (x, n) = (BigUint::from(x), BigUint::from(n));
    let mut h_prev = BigUint::from(1u32);
    let mut h = BigUint::from(2u32); // a0 = 2
    let mut k_prev = BigUint::from(0u32);
    let mut k = BigUint::from(1u32);
    let mut below = true; // convergent index 0 (value 2) is below e
    for term in e_cf_terms() {
        // First test the current convergent h/k.
        if below {
            if &x * &h >= &n * &k {
                return false;
            }
        } else if &x * &h <= &n * &k {
            return true;
        }
        let term = BigUint::from(term);
        let h_next = &term * &h + &h_prev;
        let k_next = &term * &k + &k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        below = !below;
    }
    unreachable!("convergent sandwich of e failed to resolve");
}

/// Continued-fraction terms of `e` after the leading 2: `1, 2, 1, 1, 4, 1,
/// 1, 6, 1, …`. 96 terms put the sandwich far below any representable gap.
fn e_cf_terms() -> impl Iterator<Item = u64> {
    (0u64..32).flat_map(|m| [1, 2 * (m + 1), 1])
}

/// A metric tag plus an exact bound: the radius a solver promises to stay in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub metric: Metric,
    pub bound: BudgetBound,
}

impl Budget {
    pub fn new(metric: Metric, bound: BudgetBound) -> Budget {
        Budget { metric, bound }
    }

    pub fn admits(&self, x: u64) -> bool {
        self.bound.admits(x)
    }
}

impl fmt::Display for BudgetBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BudgetBound::Exactly(c) => write!(f, "{c}"),
            BudgetBound::NOver { n, d } => {
                let g = gcd(n, d);
                let (p, q) = (n / g.max(1), d / g.max(1));
                if q == 1 {
                    write!(f, "{p}")
                } else {
                    write!(f, "{p}/{q}")
                }
            }
            BudgetBound::NOverE(n) => write!(f, "{n}/e"),
            BudgetBound::SqrtN(n) => write!(f, "sqrt({n})"),
            BudgetBound::NPow { n, p, r } => write!(f, "pow({n},{p}/{r})"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBoundError(pub String);

impl fmt::Display for ParseBoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed budget bound: {}", self.0)
    }
}

impl std::error::Error for ParseBoundError {}

impl FromStr for BudgetBound {
    type Err = ParseBoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseBoundError(s.to_string());
        if let Some(inner) = s.strip_prefix("sqrt(").and_then(|t| t.strip_suffix(')')) {
            return inner.parse().map(BudgetBound::SqrtN).map_err(|_| bad());
        }
        if let Some(inner) = s.strip_prefix("pow(").and_then(|t| t.strip_suffix(')')) {
            let (n, rest) = inner.split_once(',').ok_or_else(bad)?;
            let (p, r) = rest.split_once('/').ok_or_else(bad)?;
            return Ok(BudgetBound::NPow {
                n: n.parse().map_err(|_| bad())?,
                p: p.parse().map_err(|_| bad())?,
                r: r.parse().map_err(|_| bad())?,
            });
        }
        if let Some(n) = s.strip_suffix("/e") {
            return n.parse().map(BudgetBound::NOverE).map_err(|_| bad());
        }
        if let Some((p, q)) = s.split_once('/') {
            return Ok(BudgetBound::NOver {
                n: p.parse().map_err(|_| bad())?,
                d: q.parse().map_err(|_| bad())?,
            });
        }
        s.parse().map(BudgetBound::Exactly).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_bounds_are_exact() {
        let b = BudgetBound::NOver { n: 10, d: 3 };
        assert!(b.admits(3)); // 9 <= 10
        assert!(!b.admits(4)); // 12 > 10
        let b = BudgetBound::NOver { n: 9, d: 3 };
        assert!(b.admits(3)); // boundary included
        assert!(!b.admits(4));
    }

    #[test]
    fn sqrt_bound() {
        let b = BudgetBound::SqrtN(9);
        assert!(b.admits(3) && !b.admits(4));
        let b = BudgetBound::SqrtN(8);
        assert!(b.admits(2) && !b.admits(3));
    }

    #[test]
    fn pow_bound() {
        // x <= 27^{4/3} = 81
        let b = BudgetBound::NPow { n: 27, p: 4, r: 3 };
        assert!(b.admits(81) && !b.admits(82));
    }

    #[test]
    fn n_over_e_matches_floor_of_true_value() {
        // floor(n/e) for small n: e = 2.71828...
        let floors = [
            (1u64, 0u64),
            (2, 0),
            (3, 1),
            (5, 1),
            (6, 2),
            (10, 3),
            (27, 9),
            (28, 10),
            (100, 36),
            (1000, 367),
        ];
        for (n, fl) in floors {
            let b = BudgetBound::NOverE(n);
            assert!(b.admits(fl), "{fl} <= {n}/e should hold");
            assert!(!b.admits(fl + 1), "{} <= {n}/e should fail", fl + 1);
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let bounds = [
            BudgetBound::Exactly(1),
            BudgetBound::NOver { n: 17, d: 3 },
            BudgetBound::NOverE(10),
            BudgetBound::SqrtN(60),
            BudgetBound::NPow { n: 60, p: 4, r: 3 },
        ];
        for b in bounds {
            let s = b.to_string();
            let parsed: BudgetBound = s.parse().unwrap();
            // Semantic equality: same verdict on a sweep of distances.
            for x in 0..200 {
                assert_eq!(parsed.admits(x), b.admits(x), "bound {s} at x={x}");
            }
        }
        // "n/3" resolves to reduced p/q form.
        assert_eq!(BudgetBound::NOver { n: 6, d: 3 }.to_string(), "2");
        assert_eq!(BudgetBound::NOver { n: 17, d: 3 }.to_string(), "17/3");
    }
}
