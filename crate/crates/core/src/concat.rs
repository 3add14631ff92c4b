//! Base-b digit manipulation: digit length, repeated concatenation (exact
//! and modular), zero-padded concatenation, and digit reversal.
//!
//! Integers in, integers out; digit strings never appear in the API.

use num_bigint::BigUint;

use crate::error::{capacity, domain, Result};
use crate::modmath::{modpow, mulmod};

/// Number of base-b digits of `n`: the unique L with `b^(L-1) <= n < b^L`.
pub fn digit_length(n: u64, b: u64) -> Result<u32> {
    check_args(n, b)?;
    let mut len = 0u32;
    let mut n = n;
    while n > 0 {
        n /= b;
        len += 1;
    }
    Ok(len)
}

/// The number whose base-b digit string is `k` copies of the digit string
/// of `n`, built exactly with the recurrence `r <- r * b^L + n`.
pub fn repeated_concat(n: u64, k: u64, b: u64) -> Result<BigUint> {
    check_args(n, b)?;
    if k < 1 {
        return Err(domain("repeated_concat: k must be >= 1"));
    }
    let shift = BigUint::from(b).pow(digit_length(n, b)?);
    let mut acc = BigUint::from(n);
    for _ in 1..k {
        acc = acc * &shift + n;
    }
    Ok(acc)
}

/// `repeated_concat(n, k, b) mod m` in O(log k) via the folded geometric sum
/// `n * (1 + b^L + ... + b^((k-1)L))`, never materializing the big integer.
pub fn repeated_concat_mod(n: u64, k: u64, b: u64, m: u64) -> Result<u64> {
    check_args(n, b)?;
    if k < 1 {
        return Err(domain("repeated_concat_mod: k must be >= 1"));
    }
    if m < 1 {
        return Err(domain("repeated_concat_mod: modulus must be >= 1"));
    }
    if m == 1 {
        return Ok(0);
    }
    let base = modpow(b, digit_length(n, b)? as u64, m);
    Ok(mulmod(n % m, geometric_sum_mod(base, k, m), m))
}

/// `1 + x + ... + x^(count-1) mod m` by halving the term count.
fn geometric_sum_mod(x: u64, count: u64, m: u64) -> u64 {
    if count == 0 {
        return 0;
    }
    if count % 2 == 1 {
        // x * S(count-1) + 1
        (mulmod(x, geometric_sum_mod(x, count - 1, m), m) + 1) % m
    } else {
        let half = geometric_sum_mod(x, count / 2, m);
        let lift = (modpow(x, count / 2, m) + 1) % m;
        mulmod(half, lift, m)
    }
}

/// The digits of `n`, then `k` zeros, then the digits of `n` again:
/// `n * b^(k+L) + n`.
pub fn zero_padded_concat(n: u64, k: u64, b: u64) -> Result<BigUint> {
    check_args(n, b)?;
    let exp = k + digit_length(n, b)? as u64;
    let exp = u32::try_from(exp)
        .map_err(|_| capacity(format!("zero_padded_concat: {exp} zeros is out of range")))?;
    Ok(BigUint::from(n) * BigUint::from(b).pow(exp) + n)
}

/// The integer whose base-b digits are those of `n` reversed; trailing
/// zeros of `n` vanish as leading zeros.
pub fn digit_reverse(n: u64, b: u64) -> Result<u64> {
    check_args(n, b)?;
    let mut rev: u64 = 0;
    let mut n = n;
    while n > 0 {
        rev = rev
            .checked_mul(b)
            .and_then(|r| r.checked_add(n % b))
            .ok_or_else(|| capacity("digit_reverse: reversal exceeds the supported width"))?;
        n /= b;
    }
    Ok(rev)
}

fn check_args(n: u64, b: u64) -> Result<()> {
    if n < 1 {
        return Err(domain("the concatenated number must be >= 1"));
    }
    if b < 2 {
        return Err(domain(format!("base {b} must be >= 2")));
    }
    Ok(())
}
