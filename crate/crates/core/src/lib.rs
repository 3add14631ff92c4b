//! Exact answers to "which repetition counts k land the k-fold base-b
//! concatenation of n in the residue class a mod m?"
//!
//! The solution set is always empty, finite, or a bounded arithmetic
//! progression, and [`solve`] finds it in closed form: prime-power moduli
//! run through a fourteen-step reduction to index arithmetic, composite
//! moduli combine per-factor answers by the Chinese remainder theorem.
//! [`oracle`] provides brute-force ground truth, and [`vpalindrome`] the
//! digit arithmetic that motivates the problem.

pub mod concat;
pub mod error;
pub mod modmath;
pub mod oracle;
pub mod solver;
pub mod vpalindrome;

pub use error::{Error, Result};
pub use solver::{solve, solve_prime_power, CongruenceProblem, SolutionSet, TraceLog};
