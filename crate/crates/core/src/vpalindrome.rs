//! The additive function v, the v-palindrome predicate, and the family of
//! v-palindromes 18*rho built from 0/1 decimal palindromes.
//!
//! v adds p for each prime factor p appearing once and p + e for each
//! appearing with exponent e >= 2. A number n is a v-palindrome when 10
//! does not divide n, n differs from its decimal reversal r(n), and
//! v(n) = v(r(n)). Everything here is decimal by definition.

use crate::concat::{digit_reverse, repeated_concat};
use crate::error::{capacity, domain, Result};
use crate::modmath::{factorize, Factorization};

/// v(n) together with the factorization it was read off from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VValue {
    pub value: u64,
    pub factorization: Factorization,
}

impl VValue {
    pub fn of(n: u64) -> Result<VValue> {
        if n < 1 {
            return Err(domain("v is defined on positive integers"));
        }
        let factorization = if n == 1 {
            Factorization::one()
        } else {
            factorize(n)?
        };
        let value = factorization
            .factors()
            .iter()
            .map(|&(p, e)| if e == 1 { p } else { p + e as u64 })
            .sum();
        Ok(VValue {
            value,
            factorization,
        })
    }
}

/// The additive function v; v(1) = 0 (empty sum).
pub fn v(n: u64) -> Result<u64> {
    VValue::of(n).map(|x| x.value)
}

/// True when 10 does not divide n, n is not its own decimal reversal, and
/// v agrees on n and its reversal. Stalls surface as capacity errors, never
/// as a wrong boolean.
pub fn is_v_palindrome(n: u64) -> Result<bool> {
    if n < 1 {
        return Err(domain("is_v_palindrome is defined on positive integers"));
    }
    if n % 10 == 0 {
        return Ok(false);
    }
    let reversed = digit_reverse(n, 10)?;
    if reversed == n {
        return Ok(false);
    }
    Ok(v(n)? == v(reversed)?)
}

/// 18 times a 0/1 decimal palindrome, which is always a v-palindrome.
pub fn theorem_51_number(rho: u64) -> Result<u64> {
    if !is_zero_one_palindrome(rho) {
        return Err(domain(format!(
            "{rho} is not a decimal palindrome over the digits 0 and 1"
        )));
    }
    rho.checked_mul(18)
        .ok_or_else(|| capacity(format!("18 * {rho} exceeds the supported width")))
}

fn is_zero_one_palindrome(rho: u64) -> bool {
    if rho == 0 {
        return false;
    }
    let mut digits = Vec::new();
    let mut n = rho;
    while n > 0 {
        let d = n % 10;
        if d > 1 {
            return false;
        }
        digits.push(d);
        n /= 10;
    }
    digits.iter().eq(digits.iter().rev())
}

/// For each k in [1, kmax], whether the k-fold decimal concatenation of n
/// is a v-palindrome. Concatenations beyond the factorization width are a
/// capacity error.
pub fn concat_family_check(n: u64, kmax: u64) -> Result<Vec<(u64, bool)>> {
    let mut out = Vec::with_capacity(kmax as usize);
    for k in 1..=kmax {
        let big = repeated_concat(n, k, 10)?;
        let value = u64::try_from(&big).map_err(|_| {
            capacity(format!(
                "{n} repeated {k} times exceeds the factorization width"
            ))
        })?;
        out.push((k, is_v_palindrome(value)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn v_known_values() {
        assert_eq!(v(18).unwrap(), 7); // 2 * 3^2 -> 2 + (3 + 2)
        assert_eq!(v(1).unwrap(), 0);
        for p in [2u64, 3, 5, 7, 11, 101] {
            assert_eq!(v(p).unwrap(), p);
        }
        // v(2 * 3^(2+a)) = 7 + a, matching v(3^(4+a)) = 7 + a
        for a in 0..=6u64 {
            assert_eq!(v(2 * 3u64.pow(2 + a as u32)).unwrap(), 7 + a);
            assert_eq!(v(3u64.pow(4 + a as u32)).unwrap(), 7 + a);
        }
    }

    #[test]
    fn v_value_carries_factorization() {
        let x = VValue::of(18).unwrap();
        assert_eq!(x.value, 7);
        assert_eq!(x.factorization.factors(), &[(2, 1), (3, 2)]);
        assert_eq!(VValue::of(1).unwrap().factorization.factors(), &[]);
    }

    #[test]
    fn v_is_additive_on_coprime_parts() {
        for a in 1..200u64 {
            for b in (1..200u64).step_by(7) {
                if crate::modmath::gcd(a, b) == 1 {
                    assert_eq!(v(a * b).unwrap(), v(a).unwrap() + v(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn v_palindrome_known_values() {
        for n in [18u64, 1818, 181818, 198, 576] {
            assert!(is_v_palindrome(n).unwrap(), "{n} should be a v-palindrome");
        }
        assert!(!is_v_palindrome(11).unwrap()); // its own reversal
        assert!(!is_v_palindrome(20).unwrap()); // divisible by 10
        assert!(!is_v_palindrome(19).unwrap()); // v(19) = 19, v(91) = 7 + 13
    }

    #[test]
    fn v_palindrome_is_symmetric_in_reversal() {
        for n in 1..5000u64 {
            if n % 10 == 0 {
                continue;
            }
            let r = digit_reverse(n, 10).unwrap();
            if r % 10 == 0 {
                continue;
            }
            assert_eq!(
                is_v_palindrome(n).unwrap(),
                is_v_palindrome(r).unwrap(),
                "asymmetry at {n}"
            );
        }
    }

    #[test]
    fn theorem_numbers() {
        assert_eq!(theorem_51_number(101).unwrap(), 1818);
        assert_eq!(theorem_51_number(1001).unwrap(), 18018);
        assert_eq!(theorem_51_number(1).unwrap(), 18);
        assert!(matches!(theorem_51_number(12), Err(Error::Domain(_))));
        assert!(matches!(theorem_51_number(110), Err(Error::Domain(_))));
        assert!(matches!(theorem_51_number(0), Err(Error::Domain(_))));
    }

    #[test]
    fn family_checks() {
        assert_eq!(
            concat_family_check(18, 3).unwrap(),
            vec![(1, true), (2, true), (3, true)]
        );
        assert_eq!(
            concat_family_check(576, 2).unwrap(),
            vec![(1, true), (2, true)]
        );
        assert_eq!(concat_family_check(10, 1).unwrap(), vec![(1, false)]);
    }

    #[test]
    fn family_check_capacity_is_loud() {
        // 117 repeated 7+ times no longer fits the factorization width
        assert!(matches!(
            concat_family_check(117, 7),
            Err(Error::Capacity(_))
        ));
    }
}
