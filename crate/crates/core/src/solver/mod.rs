//! Determines exactly which repetition counts k >= 1 place the k-fold
//! base-b concatenation of n in the residue class a mod m.
//!
//! The prime-power case runs as an explicit fourteen-step machine whose
//! states mirror the algorithm's labels (each step is also recorded in a
//! [`TraceLog`]); composite moduli split into prime powers whose solution
//! sets are intersected by the Chinese remainder theorem.

mod set;
mod trace;

pub use set::SolutionSet;
pub use trace::{StepLabel, TraceLog, TraceStep};

use crate::concat::digit_length;
use crate::error::{capacity, domain, Result};
use crate::modmath::{
    discrete_log, factorize, gcd, gcd_u128, is_prime, mod_inverse, modpow, mulmod, primitive_root,
    two_adic_decompose, unit_group_order, val_unchecked, MODULUS_CAP,
};

/// The congruence `concat(n, k) = a (mod m)` in base b, to be solved for k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceProblem {
    pub n: u64,
    pub b: u64,
    pub a: i64,
    pub m: u64,
}

impl CongruenceProblem {
    pub fn new(n: u64, b: u64, a: i64, m: u64) -> Result<Self> {
        let problem = CongruenceProblem { n, b, a, m };
        problem.validate()?;
        Ok(problem)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(domain("n must be >= 1"));
        }
        if self.b < 2 {
            return Err(domain("base must be >= 2"));
        }
        if self.m < 1 {
            return Err(domain("modulus must be >= 1"));
        }
        Ok(())
    }
}

enum Step {
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
}

/// Solves the congruence for a prime-power modulus p^alpha, returning the
/// exact solution set and the steps taken.
///
/// Mathematically impossible cases come back as `Empty`, never as errors;
/// errors are reserved for bad arguments and width capacity.
pub fn solve_prime_power(
    n: u64,
    b: u64,
    a: i64,
    p: u64,
    alpha: u32,
) -> Result<(SolutionSet, TraceLog)> {
    if n < 1 {
        return Err(domain("n must be >= 1"));
    }
    if b < 2 {
        return Err(domain("base must be >= 2"));
    }
    if alpha < 1 {
        return Err(domain("alpha must be >= 1"));
    }
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    let pa = checked_power(p, alpha)?;

    let mut tr = TraceLog::default();

    // (I) d = gcd(n, p^alpha); if d does not divide a there is no solution.
    let d = gcd(n, pa);
    tr.push(
        StepLabel::I,
        vec![("p", p as i128), ("alpha", alpha as i128), ("d", d as i128)],
    );
    if (a as i128).rem_euclid(d as i128) != 0 {
        return Ok((SolutionSet::Empty, tr));
    }

    // (II) Reduce to b^(Lk) = a2 (mod p^alpha2).
    let big_l = digit_length(n, b)?;
    let alpha1 = alpha - val_unchecked(d as u128, p);
    let b_pow_l = u128_power(b, big_l);
    let beta = val_unchecked(b_pow_l - 1, p);
    let alpha2 = alpha1 + beta;
    if alpha2 == 0 {
        tr.push(
            StepLabel::II,
            vec![
                ("L", big_l as i128),
                ("alpha1", alpha1 as i128),
                ("beta", beta as i128),
                ("alpha2", alpha2 as i128),
            ],
        );
        return Ok((SolutionSet::all(), tr));
    }
    let pa2 = checked_power(p, alpha2)?;
    let pa1 = p.pow(alpha1);
    let a1 = if alpha1 == 0 {
        0
    } else {
        let n_unit = (n / d) % pa1;
        let a_over_d = ((a as i128) / (d as i128)).rem_euclid(pa1 as i128) as u64;
        mulmod(a_over_d, mod_inverse(n_unit as i64, pa1)?, pa1)
    };
    let one_minus_bl = (1 + pa2 - (b_pow_l % pa2 as u128) as u64) % pa2;
    let a2 = (1 + pa2 - mulmod(a1, one_minus_bl, pa2)) % pa2;
    let mut bindings = vec![
        ("L", big_l as i128),
        ("alpha1", alpha1 as i128),
        ("beta", beta as i128),
        ("alpha2", alpha2 as i128),
        ("a1", a1 as i128),
        ("a2", a2 as i128),
    ];
    if a2 > pa2 - a2 {
        bindings.push(("a2_signed", a2 as i128 - pa2 as i128));
    }
    tr.push(StepLabel::II, bindings);

    let big_l = big_l as u64;
    let mut step = if p % 2 == 1 || alpha2 < 3 {
        Step::XII
    } else {
        Step::III
    };

    // Variables bound by earlier steps and read by later ones.
    let mut delta = 0u64;
    let mut epsilon = 0u64;
    let (mut mu1, mut mu2) = (0u64, 0u64);
    let (mut nu1, mut nu2) = (0u64, 0u64);
    let mut f2 = 0u64; // gcd(nu1 * L, 2^(alpha2 - 2))
    let mut ord = 0u64; // unit group order for the primitive-root branch
    let mut ind_a2 = 0u64;
    let mut l_ind_b = 0u128;
    let mut f14 = 0u64; // gcd(L * ind b, ord)

    loop {
        match step {
            // (III) p = 2, alpha2 >= 3: parities of b and a2 must agree.
            Step::III => {
                tr.push(StepLabel::III, vec![]);
                if b % 2 != a2 % 2 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = if b % 2 == 1 { Step::VII } else { Step::IV };
            }

            // (IV) p divides both b and a2. If a2 vanishes mod p^alpha2,
            // every large enough k works.
            Step::IV => {
                delta = val_unchecked(b as u128, p) as u64;
                if a2 == 0 {
                    let threshold = (alpha2 as u64).div_ceil(delta * big_l);
                    tr.push(
                        StepLabel::IV,
                        vec![("delta", delta as i128), ("k_min", threshold as i128)],
                    );
                    return Ok((SolutionSet::progression(0, 1, threshold), tr));
                }
                tr.push(StepLabel::IV, vec![("delta", delta as i128)]);
                step = Step::V;
            }

            // (V) The p-adic valuations must line up exactly: delta*L*k = epsilon.
            Step::V => {
                epsilon = val_unchecked(a2 as u128, p) as u64;
                tr.push(StepLabel::V, vec![("epsilon", epsilon as i128)]);
                if epsilon % (delta * big_l) != 0 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = Step::VI;
            }

            // (VI) A single candidate k remains; verify it directly.
            Step::VI => {
                let k = epsilon / (delta * big_l);
                tr.push(StepLabel::VI, vec![("k", k as i128)]);
                if modpow(b, epsilon / delta, pa2) == a2 {
                    return Ok((SolutionSet::finite([k]), tr));
                }
                return Ok((SolutionSet::Empty, tr));
            }

            // (VII) Odd case: write b and a2 as (-1)^mu * 5^nu mod 2^alpha2.
            Step::VII => {
                let db = two_adic_decompose((b % pa2) as i64, alpha2)?;
                let da = two_adic_decompose(a2 as i64, alpha2)?;
                (mu1, nu1) = (db.mu as u64, db.nu);
                (mu2, nu2) = (da.mu as u64, da.nu);
                tr.push(
                    StepLabel::VII,
                    vec![
                        ("mu1", mu1 as i128),
                        ("nu1", nu1 as i128),
                        ("mu2", mu2 as i128),
                        ("nu2", nu2 as i128),
                    ],
                );
                if (mu1 * big_l) % 2 == 0 && mu2 % 2 == 1 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = Step::VIII;
            }

            // (VIII) Solvability of nu1*L*k = nu2 (mod 2^(alpha2-2)).
            Step::VIII => {
                let pow2 = 1u64 << (alpha2 - 2);
                f2 = gcd_u128(nu1 as u128 * big_l as u128, pow2 as u128) as u64;
                tr.push(StepLabel::VIII, vec![("f", f2 as i128)]);
                if nu2 % f2 != 0 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = if (mu1 * big_l) % 2 == 1 {
                    Step::X
                } else {
                    Step::IX
                };
            }

            // (IX) Solve the reduced congruence on k.
            Step::IX => {
                let pow2 = 1u64 << (alpha2 - 2);
                let modulus = pow2 / f2;
                if modulus == 1 {
                    tr.push(StepLabel::IX, vec![("k_residue", 0), ("k_modulus", 1)]);
                    return Ok((SolutionSet::all(), tr));
                }
                let coeff = ((nu1 as u128 * big_l as u128 / f2 as u128) % modulus as u128) as u64;
                let residue = mulmod(nu2 / f2, mod_inverse(coeff as i64, modulus)?, modulus);
                tr.push(
                    StepLabel::IX,
                    vec![("k_residue", residue as i128), ("k_modulus", modulus as i128)],
                );
                return Ok((SolutionSet::progression(residue, modulus, 1), tr));
            }

            // (X) mu1*L odd: only the parity constraint survives when the
            // nu-congruence is vacuous.
            Step::X => {
                let pow2 = 1u64 << (alpha2 - 2);
                if f2 == pow2 {
                    tr.push(
                        StepLabel::X,
                        vec![("k_residue", mu2 as i128), ("k_modulus", 2)],
                    );
                    return Ok((SolutionSet::progression(mu2, 2, 1), tr));
                }
                tr.push(StepLabel::X, vec![]);
                step = Step::XI;
            }

            // (XI) The nu-congruence pins k mod 2; it must agree with mu2.
            Step::XI => {
                let q = nu2 / f2;
                tr.push(StepLabel::XI, vec![("nu2_over_f", q as i128)]);
                if mu2 % 2 != q % 2 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = Step::IX;
            }

            // (XII) p odd or alpha2 < 3: p must divide both b and a2 or neither.
            Step::XII => {
                tr.push(StepLabel::XII, vec![]);
                let p_div_b = b % p == 0;
                let p_div_a2 = a2 % p == 0;
                if p_div_b != p_div_a2 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = if p_div_b { Step::IV } else { Step::XIII };
            }

            // (XIII) Take indices to a primitive root g mod p^alpha2.
            Step::XIII => {
                ord = unit_group_order(p, alpha2);
                let g = primitive_root(p, alpha2)?;
                let ind_b = discrete_log(g, b % pa2, p, alpha2)?;
                ind_a2 = discrete_log(g, a2, p, alpha2)?;
                l_ind_b = big_l as u128 * ind_b as u128;
                f14 = gcd_u128(l_ind_b, ord as u128) as u64;
                tr.push(
                    StepLabel::XIII,
                    vec![
                        ("g", g as i128),
                        ("ind_b", ind_b as i128),
                        ("ind_a2", ind_a2 as i128),
                        ("f", f14 as i128),
                    ],
                );
                if ind_a2 % f14 != 0 {
                    return Ok((SolutionSet::Empty, tr));
                }
                step = Step::XIV;
            }

            // (XIV) Solve the index congruence L*ind(b)*k = ind(a2) (mod ord).
            Step::XIV => {
                let modulus = ord / f14;
                if modulus == 1 {
                    tr.push(StepLabel::XIV, vec![("k_residue", 0), ("k_modulus", 1)]);
                    return Ok((SolutionSet::all(), tr));
                }
                let coeff = ((l_ind_b / f14 as u128) % modulus as u128) as u64;
                let residue = mulmod(ind_a2 / f14, mod_inverse(coeff as i64, modulus)?, modulus);
                tr.push(
                    StepLabel::XIV,
                    vec![("k_residue", residue as i128), ("k_modulus", modulus as i128)],
                );
                return Ok((SolutionSet::progression(residue, modulus, 1), tr));
            }
        }
    }
}

/// Solves the congruence for a general modulus: factor m, solve each prime
/// power, and intersect the per-factor solution sets (deterministically, in
/// increasing prime order).
pub fn solve(problem: &CongruenceProblem) -> Result<(SolutionSet, TraceLog)> {
    problem.validate()?;
    let mut trace = TraceLog::default();
    if problem.m == 1 {
        trace.push(StepLabel::CRT, vec![("m", 1)]);
        return Ok((SolutionSet::all(), trace));
    }
    let factors = factorize(problem.m)?;
    let mut acc = SolutionSet::all();
    for &(p, e) in factors.factors() {
        let (set, sub) = solve_prime_power(problem.n, problem.b, problem.a, p, e)?;
        trace.append(sub);
        acc = acc.intersect(&set)?;
    }
    let mut bindings: Vec<(&'static str, i128)> = vec![("m", problem.m as i128)];
    match &acc {
        SolutionSet::Progression {
            residue,
            modulus,
            min,
        } => {
            bindings.push(("k_residue", *residue as i128));
            bindings.push(("k_modulus", *modulus as i128));
            bindings.push(("k_min", *min as i128));
        }
        SolutionSet::Finite(set) => bindings.push(("size", set.len() as i128)),
        SolutionSet::Empty => {}
    }
    trace.push(StepLabel::CRT, bindings);
    Ok((acc, trace))
}

fn checked_power(p: u64, alpha: u32) -> Result<u64> {
    match p.checked_pow(alpha) {
        Some(pa) if pa <= MODULUS_CAP => Ok(pa),
        _ => Err(capacity(format!(
            "{p}^{alpha} exceeds the supported modulus width"
        ))),
    }
}

fn u128_power(b: u64, exp: u32) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc * b as u128)
}
