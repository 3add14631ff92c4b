//! Brute-force ground truth for the solver.
//!
//! Membership is decided by walking the digit recurrence
//! `r <- r * b^L + n (mod m)` one copy at a time; nothing here shares a
//! derivation path with the reduction machinery it checks.

use crate::concat::digit_length;
use crate::error::{domain, Result};
use crate::modmath::{modpow, mulmod};
use crate::solver::{solve, CongruenceProblem, SolutionSet};

/// Outcome of comparing solver membership with direct evaluation on
/// `[1, kmax]`. `passed` holds exactly when `mismatches` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub problem: CongruenceProblem,
    pub kmax: u64,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub k: u64,
    pub oracle: bool,
    pub solver: bool,
}

/// All k in [1, kmax] satisfying the congruence, by direct evaluation.
pub fn brute_force_solve(problem: &CongruenceProblem, kmax: u64) -> Result<Vec<u64>> {
    problem.validate()?;
    if kmax < 1 {
        return Err(domain("kmax must be >= 1"));
    }
    let &CongruenceProblem { n, b, a, m } = problem;
    let shift = modpow(b, digit_length(n, b)? as u64, m);
    let target = (a as i128).rem_euclid(m as i128) as u64;
    let n_red = n % m;
    let mut hits = Vec::new();
    let mut r = 0u64;
    for k in 1..=kmax {
        r = (mulmod(r, shift, m) + n_red) % m;
        if r == target {
            hits.push(k);
        }
    }
    Ok(hits)
}

/// Runs the solver and the oracle side by side and reports every k where
/// they disagree.
pub fn cross_check(problem: &CongruenceProblem, kmax: u64) -> Result<CrossCheckReport> {
    let (set, _) = solve(problem)?;
    let hits = brute_force_solve(problem, kmax)?;
    let mut next = hits.iter().copied().peekable();
    let mut mismatches = Vec::new();
    for k in 1..=kmax {
        let oracle = next.peek() == Some(&k);
        if oracle {
            next.next();
        }
        let solver = set.contains(k);
        if oracle != solver {
            mismatches.push(Mismatch { k, oracle, solver });
        }
    }
    Ok(CrossCheckReport {
        problem: *problem,
        kmax,
        passed: mismatches.is_empty(),
        mismatches,
    })
}

/// Default scan range for randomized suites: at least four members of a
/// progression fall inside it.
pub fn default_kmax(set: &SolutionSet) -> u64 {
    match set {
        SolutionSet::Progression { modulus, .. } => modulus.saturating_mul(4).max(2000),
        _ => 2000,
    }
}
