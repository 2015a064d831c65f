//! Robust instance generators: graph families whose answers provably
//! survive a bounded number of adversarial edge edits, together with the
//! constructive witness machinery (Ore-condition cycle building, cycle
//! reconstruction under deletions, junction-path extraction, dominating-set
//! lifting) that backs the robustness claims.

mod blowup;
mod ham_gadget;

pub use blowup::{gen_domset_blowup, gen_domset_blowup_with_q, lift_dominating_set, BlowupMeta};
pub use ham_gadget::{
    extract_st_path, gen_barrier, gen_ham_robust, gen_ham_robust_with_q, ore_hamiltonian_cycle,
    reconstruct_ham_cycle, HamGadgetMeta, Role,
};

use num::rational::Ratio;
use num::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("source graph must be subcubic (max degree 3), found degree {0}")]
    NotSubcubic(usize),
    #[error("vertex {0} must have degree exactly 1")]
    BadEndpoint(usize),
    #[error("s and t must be distinct, non-adjacent vertices of a graph on at least 3 vertices")]
    BadEndpoints,
    #[error("beta = {0}/{1} out of range for this construction")]
    BetaOutOfRange(u64, u64),
    #[error("beta denominator too large (max 10000)")]
    BetaTooFine,
    #[error("no self-consistent clique parameter q below the search cap")]
    FixedPointOverflow,
    #[error("threshold {k} exceeds the source vertex count {nu}")]
    ThresholdTooLarge { k: usize, nu: usize },
    #[error("source graph must be nonempty")]
    EmptySource,
    #[error("edited graph adds edges; only deletions are tolerated")]
    UnexpectedAdditions,
    #[error("edited graph deletes {found} edges, over the tolerance {budget}")]
    TooManyDeletions { found: usize, budget: usize },
    #[error("invalid source path: {0}")]
    InvalidSourcePath(String),
    #[error("invalid copy path: {0}")]
    InvalidCopyPath(String),
    #[error("clique spanning failed: {0}")]
    SpanFailed(String),
    #[error("Ore's condition does not hold: {0}")]
    OreConditionViolated(String),
    #[error("no untouched representative in clique of source vertex {0}")]
    NoUntouchedVertex(usize),
    #[error("set does not dominate the source graph")]
    NotDominating,
}

/// Which self-referential clique-size definition to resolve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QVariant {
    /// `q = ⌊n^{1/2-β}⌋ + 1` with `n = 2q((ν-2)(q+2) + m - 1)`.
    RobustHam,
    /// `q = ⌊n^{1-β}⌋ + 3` with `n = 2((ν-2)q + m - 1)`.
    Barrier,
    /// `q = 2⌊n^{1-β}⌋ + 1` with `n = qν`.
    Blowup,
}

/// `⌊n^{p/r}⌋` by exact integer arithmetic: the r-th root of `n^p`.
pub(crate) fn floor_pow(n: usize, p: u64, r: u64) -> usize {
    if n == 0 {
        return 0;
    }
    let v = BigUint::from(n).pow(p as u32).nth_root(r as u32);
    let digits = v.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as usize,
        _ => usize::MAX,
    }
}

/// The `(p, r)` exponent pair for a variant, after validating beta's range.
fn exponent(variant: QVariant, beta: Ratio<u64>) -> Result<(u64, u64), GenError> {
    let (num, den) = (*beta.numer(), *beta.denom());
    if den > 10_000 {
        return Err(GenError::BetaTooFine);
    }
    match variant {
        QVariant::RobustHam => {
            // requires 0 < beta < 1/2
            if num == 0 || 2 * num >= den {
                return Err(GenError::BetaOutOfRange(num, den));
            }
            Ok((den - 2 * num, 2 * den))
        }
        QVariant::Barrier | QVariant::Blowup => {
            if num == 0 || num >= den {
                return Err(GenError::BetaOutOfRange(num, den));
            }
            Ok((den - num, den))
        }
    }
}

/// Vertex count of the variant's construction at clique parameter `q`.
pub(crate) fn vertex_count(variant: QVariant, nu: usize, edges: usize, q: usize) -> usize {
    match variant {
        QVariant::RobustHam => 2 * q * ((nu - 2) * (q + 2) + edges - 1),
        QVariant::Barrier => 2 * ((nu - 2) * q + edges - 1),
        QVariant::Blowup => q * nu,
    }
}

/// The clique parameter the variant requires at a given vertex count.
fn required_q(variant: QVariant, n: usize, p: u64, r: u64) -> usize {
    match variant {
        QVariant::RobustHam => floor_pow(n, p, r) + 1,
        QVariant::Barrier => floor_pow(n, p, r) + 3,
        QVariant::Blowup => 2 * floor_pow(n, p, r) + 1,
    }
}

/// Resolves the self-referential definition of `q` (the paper-style
/// bootstrap `q = f(n)` with `n = n(q)`): the smallest `q ≥ 1` with
/// `q ≥ f(n(q))`. When the crossing is an equality this is the exact fixed
/// point; otherwise the smallest dominating value, which only strengthens
/// robustness.
pub fn solve_q_fixed_point(
    nu: usize,
    edges: usize,
    beta: Ratio<u64>,
    variant: QVariant,
) -> Result<usize, GenError> {
    let (p, r) = exponent(variant, beta)?;
    let cap = 1usize << 22;
    let mut q = 1;
    while q <= cap {
        let n = vertex_count(variant, nu, edges, q);
        if q >= required_q(variant, n, p, r) {
            return Ok(q);
        }
        q += 1;
    }
    Err(GenError::FixedPointOverflow)
}
