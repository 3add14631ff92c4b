//! Exact modular arithmetic: valuations, inverses, factorization, primitive
//! roots, discrete logarithms, and the two-adic structure of odd residues.
//!
//! Everything here is deterministic. Moduli are plain `u64`; intermediate
//! products go through `u128`, so results are exact for moduli up to 2^62
//! and beyond.

use crate::error::{capacity, domain, Error, Result};

/// Largest modulus the solver accepts; keeps every product inside `u128`.
pub const MODULUS_CAP: u64 = 1 << 62;

const TRIAL_LIMIT: u64 = 1_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if a == 0 {
        (b, 0, 1)
    } else {
        let (g, x, y) = ext_gcd(b % a, a);
        (g, y - (b / a) * x, x)
    }
}

/// `(a * b) % m` without overflow. `m >= 1`.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `(base ^ exp) % m` by binary exponentiation. `m >= 1`.
pub fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The base set decides primality for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The exponent of the exact power of `p` dividing `c`; the sign of `c` is
/// ignored.
pub fn val(c: i128, p: u64) -> Result<u32> {
    if c == 0 {
        return Err(domain("val: argument must be nonzero"));
    }
    if !is_prime(p) {
        return Err(domain(format!("val: {p} is not prime")));
    }
    Ok(val_unchecked(c.unsigned_abs(), p))
}

pub(crate) fn val_unchecked(mut c: u128, p: u64) -> u32 {
    let p = p as u128;
    let mut e = 0;
    while c % p == 0 {
        c /= p;
        e += 1;
    }
    e
}

/// The inverse of `x` modulo `m`, in `[0, m)`. For `m = 1` every residue is
/// an inverse; 0 is returned.
pub fn mod_inverse(x: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(domain("mod_inverse: modulus must be >= 1"));
    }
    if m == 1 {
        return Ok(0);
    }
    let xr = (x as i128).rem_euclid(m as i128);
    let (g, inv, _) = ext_gcd(xr, m as i128);
    if g != 1 {
        return Err(Error::NotInvertible {
            value: xr as u64,
            modulus: m,
        });
    }
    Ok(inv.rem_euclid(m as i128) as u64)
}

/// Canonical factorization: strictly increasing primes, exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The empty factorization, whose product is 1.
    pub fn one() -> Self {
        Factorization {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The factored integer, reassembled.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

/// Canonical factorization of `m >= 2`: trial division below 10^6, then
/// deterministic Brent cycles with Miller-Rabin certification.
pub fn factorize(m: u64) -> Result<Factorization> {
    if m < 2 {
        return Err(domain(format!("factorize: {m} < 2")));
    }
    let mut primes: Vec<u64> = Vec::new();
    let mut rem = m;
    for p in [2u64, 3, 5] {
        while rem % p == 0 {
            rem /= p;
            primes.push(p);
        }
    }
    // 2/3/5 wheel
    let mut p = 7u64;
    let mut wheel = [4u64, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while p <= TRIAL_LIMIT && (p as u128) * (p as u128) <= rem as u128 {
        while rem % p == 0 {
            rem /= p;
            primes.push(p);
        }
        p += wheel.next().unwrap();
    }
    if rem > 1 {
        let mut stack = vec![rem];
        while let Some(x) = stack.pop() {
            if is_prime(x) {
                primes.push(x);
            } else {
                let d = brent_rho(x)?;
                stack.push(d);
                stack.push(x / d);
            }
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match factors.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => factors.push((q, 1)),
        }
    }
    Ok(Factorization { factors })
}

/// One nontrivial factor of an odd composite without small prime factors.
/// Brent's cycle method with a fixed parameter sequence; the budget makes a
/// stall an explicit capacity error rather than a hang.
fn brent_rho(n: u64) -> Result<u64> {
    debug_assert!(!is_prime(n) && n % 2 == 1 && n > 1);
    let sub = |a: u64, b: u64| if a > b { a - b } else { b - a };
    for c in 1..=40u64 {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut budget: u64 = 1 << 22;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        let batch = 128u64;
        while g == 1 && budget > 0 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 && budget > 0 {
                ys = y;
                let steps = batch.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mulmod(q, sub(x, y), n);
                }
                g = gcd(q, n);
                k += steps;
                budget = budget.saturating_sub(steps);
            }
            r *= 2;
        }
        if g == n {
            // backtrack one step at a time
            g = 1;
            while g == 1 {
                ys = f(ys);
                g = gcd(sub(x, ys), n);
            }
        }
        if g > 1 && g < n {
            return Ok(g);
        }
    }
    Err(capacity(format!("factorization budget exhausted on {n}")))
}

/// Order of the unit group modulo p^alpha.
pub(crate) fn unit_group_order(p: u64, alpha: u32) -> u64 {
    p.pow(alpha - 1) * (p - 1)
}

fn checked_prime_power(p: u64, alpha: u32) -> Result<u64> {
    p.checked_pow(alpha)
        .ok_or_else(|| capacity(format!("{p}^{alpha} exceeds the supported width")))
}

/// The smallest primitive root modulo p^alpha. Exists for odd primes and
/// for 2^1, 2^2; modulo 2^alpha with alpha >= 3 none exists.
pub fn primitive_root(p: u64, alpha: u32) -> Result<u64> {
    if alpha == 0 {
        return Err(domain("primitive_root: alpha must be >= 1"));
    }
    if !is_prime(p) {
        return Err(domain(format!("primitive_root: {p} is not prime")));
    }
    if p == 2 {
        return match alpha {
            1 => Ok(1),
            2 => Ok(3),
            _ => Err(Error::NoPrimitiveRoot { alpha }),
        };
    }
    let pa = checked_prime_power(p, alpha)?;
    let phi = unit_group_order(p, alpha);
    let phi_factors = factorize(phi)?;
    let mut g = 1u64;
    loop {
        g += 1;
        if g % p == 0 {
            continue;
        }
        if phi_factors
            .factors()
            .iter()
            .all(|&(q, _)| modpow(g, phi / q, pa) != 1)
        {
            return Ok(g);
        }
    }
}

fn verify_generator(g: u64, pa: u64, phi: u64, phi_factors: &Factorization) -> Result<()> {
    for &(q, _) in phi_factors.factors() {
        if modpow(g, phi / q, pa) == 1 {
            return Err(domain(format!("{g} is not a primitive root modulo {pa}")));
        }
    }
    Ok(())
}

/// The index of `x` to the base `g` modulo p^alpha: the unique exponent in
/// `[0, ord)` with `g^ind = x`, where `ord = p^(alpha-1)(p-1)`.
///
/// Pohlig-Hellman over the factored group order, baby-step giant-step in
/// each prime-order subgroup, so memory stays near the square root of the
/// largest prime factor of `ord`.
pub fn discrete_log(g: u64, x: u64, p: u64, alpha: u32) -> Result<u64> {
    if alpha == 0 {
        return Err(domain("discrete_log: alpha must be >= 1"));
    }
    if !is_prime(p) {
        return Err(domain(format!("discrete_log: {p} is not prime")));
    }
    if p == 2 && alpha >= 3 {
        return Err(Error::NoPrimitiveRoot { alpha });
    }
    let pa = checked_prime_power(p, alpha)?;
    let x = x % pa;
    if x % p == 0 {
        return Err(domain(format!("discrete_log: {x} is not a unit modulo {pa}")));
    }
    let ord = unit_group_order(p, alpha);
    if ord == 1 {
        return Ok(0);
    }
    let g = g % pa;
    if g % p == 0 {
        return Err(domain(format!("{g} is not a primitive root modulo {pa}")));
    }
    let ord_factors = factorize(ord)?;
    verify_generator(g, pa, ord, &ord_factors)?;

    let g_inv = mod_inverse(g as i64, pa)?;
    let mut residue = 0u64;
    let mut modulus = 1u64;
    for &(q, e) in ord_factors.factors() {
        let qe = q.pow(e);
        let gq = modpow(g, ord / qe, pa); // order q^e
        let gq_inv = modpow(g_inv, ord / qe, pa);
        let xq = modpow(x, ord / qe, pa);
        let gamma = modpow(gq, qe / q, pa); // order q
        let mut y = 0u64;
        for i in 0..e {
            let shifted = mulmod(xq, modpow(gq_inv, y, pa), pa);
            let h = modpow(shifted, q.pow(e - 1 - i), pa);
            let digit = bsgs(gamma, h, q, pa)
                .ok_or_else(|| domain(format!("{g} is not a primitive root modulo {pa}")))?;
            y += digit * q.pow(i);
        }
        // CRT accumulation; the q^e are pairwise coprime with product ord.
        let diff = (y as i128 - residue as i128).rem_euclid(qe as i128) as u64;
        let step = mulmod(diff, mod_inverse((modulus % qe) as i64, qe)?, qe);
        residue += modulus * step;
        modulus *= qe;
    }
    debug_assert_eq!(modpow(g, residue, pa), x);
    Ok(residue)
}

/// Smallest `i` in `[0, order)` with `base^i = target (mod modulus)`, where
/// `base` has multiplicative order `order`.
fn bsgs(base: u64, target: u64, order: u64, modulus: u64) -> Option<u64> {
    if order <= 32 {
        let mut cur = 1u64;
        for i in 0..order {
            if cur == target {
                return Some(i);
            }
            cur = mulmod(cur, base, modulus);
        }
        return None;
    }
    let m = (order - 1).isqrt() + 1;
    let mut baby: Vec<(u64, u32)> = Vec::with_capacity(m as usize);
    let mut cur = 1u64;
    for j in 0..m {
        baby.push((cur, j as u32));
        cur = mulmod(cur, base, modulus);
    }
    baby.sort_unstable();
    // cur is base^m; walk target * base^(-m*i) through the table
    let giant_inv = mod_inverse(cur as i64, modulus).ok()?;
    let mut gamma = target;
    for i in 0..=m {
        if let Ok(pos) = baby.binary_search_by_key(&gamma, |&(v, _)| v) {
            return Some((i * m + baby[pos].1 as u64) % order);
        }
        gamma = mulmod(gamma, giant_inv, modulus);
    }
    None
}

/// The pair (mu, nu) with `x = (-1)^mu * 5^nu (mod 2^alpha)`, unique for odd
/// `x` once `alpha >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoAdicDecomposition {
    pub mu: u32,
    pub nu: u64,
    pub alpha: u32,
}

impl TwoAdicDecomposition {
    /// Reassembles the decomposed residue in `[0, 2^alpha)`.
    pub fn value(&self) -> u64 {
        let pa = 1u64 << self.alpha;
        let pw = modpow(5, self.nu, pa);
        if self.mu == 0 {
            pw
        } else {
            pa - pw
        }
    }
}

/// Decomposes an odd residue modulo 2^alpha (alpha >= 3) as (-1)^mu * 5^nu.
///
/// mu comes from x mod 4; nu is lifted bit by bit, using that 5^(2^i) - 1
/// has two-adic valuation exactly i + 2.
pub fn two_adic_decompose(x: i64, alpha: u32) -> Result<TwoAdicDecomposition> {
    if alpha < 3 {
        return Err(domain(format!("two_adic_decompose: alpha {alpha} < 3")));
    }
    if alpha > 62 {
        return Err(capacity(format!("two_adic_decompose: alpha {alpha} > 62")));
    }
    if x % 2 == 0 {
        return Err(domain(format!("two_adic_decompose: {x} is even")));
    }
    let pa = 1u64 << alpha;
    let xn = (x as i128).rem_euclid(pa as i128) as u64;
    let mu = if xn % 4 == 1 { 0 } else { 1 };
    let y = if mu == 0 { xn } else { pa - xn };
    let mut nu = 0u64;
    let mut cur = 1u64;
    let mut pw = 5u64 % pa;
    for i in 0..(alpha - 2) {
        if (cur ^ y) & (1 << (i + 2)) != 0 {
            cur = mulmod(cur, pw, pa);
            nu |= 1 << i;
        }
        pw = mulmod(pw, pw, pa);
    }
    debug_assert_eq!(cur, y);
    Ok(TwoAdicDecomposition { mu, nu, alpha })
}
