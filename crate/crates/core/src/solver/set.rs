use std::collections::BTreeSet;
use std::fmt;

use crate::error::{capacity, Result};
use crate::modmath::{gcd, mod_inverse, mulmod, MODULUS_CAP};

/// Canonical solution set: which repetition counts k >= 1 satisfy the
/// congruence. Every set the algorithm can produce, and every intersection
/// of such sets, is one of these three shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet {
    /// No k works.
    Empty,
    /// A nonempty, explicitly listed set.
    Finite(BTreeSet<u64>),
    /// `{k >= min : k = residue (mod modulus)}`, with `0 <= residue < modulus`
    /// and `min` the least member.
    Progression {
        residue: u64,
        modulus: u64,
        min: u64,
    },
}

impl SolutionSet {
    /// All of k = 1, 2, 3, ...
    pub fn all() -> Self {
        SolutionSet::Progression {
            residue: 0,
            modulus: 1,
            min: 1,
        }
    }

    /// Builds a finite set, dropping anything below 1; empty input collapses
    /// to `Empty`.
    pub fn finite(elements: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = elements.into_iter().filter(|&k| k >= 1).collect();
        if set.is_empty() {
            SolutionSet::Empty
        } else {
            SolutionSet::Finite(set)
        }
    }

    /// Canonicalizes `{k >= min_bound : k = residue (mod modulus)}`: the
    /// stored residue lands in `[0, modulus)` and the stored min is that
    /// class's least member at or above `max(min_bound, 1)`.
    pub fn progression(residue: u64, modulus: u64, min_bound: u64) -> Self {
        assert!(modulus >= 1, "progression modulus must be >= 1");
        let residue = residue % modulus;
        let lo = min_bound.max(1);
        let offset = ((residue as i128 - lo as i128).rem_euclid(modulus as i128)) as u64;
        SolutionSet::Progression {
            residue,
            modulus,
            min: lo + offset,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }

    /// Membership test; O(1) for progressions.
    pub fn contains(&self, k: u64) -> bool {
        if k < 1 {
            return false;
        }
        match self {
            SolutionSet::Empty => false,
            SolutionSet::Finite(set) => set.contains(&k),
            SolutionSet::Progression {
                residue,
                modulus,
                min,
            } => k >= *min && k % modulus == *residue,
        }
    }

    /// The smallest `count` members in increasing order (fewer if the set
    /// runs out first).
    pub fn enumerate(&self, count: usize) -> Vec<u64> {
        match self {
            SolutionSet::Empty => Vec::new(),
            SolutionSet::Finite(set) => set.iter().copied().take(count).collect(),
            SolutionSet::Progression { modulus, min, .. } => {
                let mut out = Vec::with_capacity(count);
                let mut k = *min;
                for _ in 0..count {
                    out.push(k);
                    match k.checked_add(*modulus) {
                        Some(next) => k = next,
                        None => break,
                    }
                }
                out
            }
        }
    }

    /// Exact set intersection, re-canonicalized. Two progressions combine by
    /// the Chinese remainder theorem; a capacity error is returned only if
    /// the combined modulus would leave the supported width.
    pub fn intersect(&self, other: &SolutionSet) -> Result<SolutionSet> {
        use SolutionSet::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => Ok(Empty),
            (Finite(a), Finite(b)) => Ok(Self::finite(a.intersection(b).copied())),
            (Finite(a), s) | (s, Finite(a)) => {
                Ok(Self::finite(a.iter().copied().filter(|&k| s.contains(k))))
            }
            (
                Progression {
                    residue: r1,
                    modulus: m1,
                    min: t1,
                },
                Progression {
                    residue: r2,
                    modulus: m2,
                    min: t2,
                },
            ) => {
                let g = gcd(*m1, *m2);
                if r1 % g != r2 % g {
                    return Ok(Empty);
                }
                let combined = (*m1 / g) as u128 * *m2 as u128;
                if combined > MODULUS_CAP as u128 {
                    return Err(capacity(format!(
                        "intersection modulus {combined} exceeds the supported width"
                    )));
                }
                let combined = combined as u64;
                // k = r1 + m1*t with t = (r2 - r1)/g * (m1/g)^-1 (mod m2/g)
                let m2g = m2 / g;
                let diff = ((*r2 as i128 - *r1 as i128) / g as i128).rem_euclid(m2g as i128) as u64;
                let inv = mod_inverse((m1 / g % m2g) as i64, m2g)?;
                let t = mulmod(diff, inv, m2g);
                let residue = *r1 as u128 + *m1 as u128 * t as u128;
                Ok(Self::progression(
                    residue as u64,
                    combined,
                    (*t1).max(*t2),
                ))
            }
        }
    }

    /// Least member of the residue class among positive integers, ignoring
    /// the min bound.
    fn least_positive_of_class(&self) -> Option<u64> {
        match self {
            SolutionSet::Progression {
                residue, modulus, ..
            } => Some(if *residue == 0 { *modulus } else { *residue }),
            _ => None,
        }
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSet::Empty => write!(f, "none"),
            SolutionSet::Finite(set) => {
                write!(f, "k ∈ {{")?;
                for (i, k) in set.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{k}")?;
                }
                write!(f, "}}")
            }
            SolutionSet::Progression {
                residue,
                modulus,
                min,
            } => {
                if *modulus == 1 {
                    write!(f, "all k ≥ {min}")
                } else {
                    write!(f, "k ≡ {residue} (mod {modulus})")?;
                    if *min > self.least_positive_of_class().unwrap_or(*min) {
                        write!(f, ", k ≥ {min}")?;
                    }
                    Ok(())
                }
            }
        }
    }
}
