//! Randomized invariants: algebraic roundtrips, canonical-form guarantees,
//! and solver-versus-oracle equivalence on sampled problems.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repcat::concat::{digit_length, digit_reverse, repeated_concat, repeated_concat_mod};
use repcat::modmath::{
    discrete_log, factorize, gcd, is_prime, mod_inverse, modpow, mulmod, primitive_root,
    two_adic_decompose,
};
use repcat::oracle::{brute_force_solve, cross_check};
use repcat::solver::{solve, CongruenceProblem, SolutionSet};
use repcat::vpalindrome::v;

#[test]
fn modular_concat_agrees_with_exact_concat() {
    // >= 10^4 sampled (n, k, b, m) tuples
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=1_000_000u64);
        let k = rng.gen_range(1..=200u64);
        let b = *[2u64, 3, 10, 16].iter().nth(rng.gen_range(0..4)).unwrap();
        let m = rng.gen_range(1..=1_000_000u64);
        let exact = repeated_concat(n, k, b).unwrap() % m;
        let folded = repeated_concat_mod(n, k, b, m).unwrap();
        assert_eq!(u64::try_from(&exact).unwrap(), folded, "({n},{k},{b},{m})");
    }
}

proptest! {
    #[test]
    fn concat_length_is_multiplicative(n in 1u64..1_000_000, k in 1u64..60, b in 2u64..17) {
        let c = repeated_concat(n, k, b).unwrap();
        let len = c.to_radix_le(b as u32).len() as u64;
        prop_assert_eq!(len, k * digit_length(n, b).unwrap() as u64);
    }

    #[test]
    fn digit_reverse_involution(n in 1u64..10_000_000, b in 2u64..17) {
        prop_assume!(n % b != 0);
        let r = digit_reverse(n, b).unwrap();
        prop_assert_eq!(digit_reverse(r, b).unwrap(), n);
    }

    #[test]
    fn inverse_roundtrip(x in 1u64..1_000_000, m in 2u64..1_000_000) {
        prop_assume!(gcd(x, m) == 1);
        let inv = mod_inverse(x as i64, m).unwrap();
        prop_assert_eq!(mulmod(x, inv, m), 1);
    }

    #[test]
    fn factorization_reconstructs(m in 2u64..u64::MAX / 2) {
        let f = factorize(m).unwrap();
        prop_assert_eq!(f.value(), m);
        let mut prev = 0u64;
        for &(p, e) in f.factors() {
            prop_assert!(p > prev && e >= 1 && is_prime(p));
            prev = p;
        }
    }

    #[test]
    fn two_adic_recompose(x in any::<i64>(), alpha in 3u32..40) {
        prop_assume!(x % 2 != 0);
        let d = two_adic_decompose(x, alpha).unwrap();
        let expected = (x as i128).rem_euclid(1i128 << alpha) as u64;
        prop_assert_eq!(d.value(), expected);
        prop_assert!(d.mu < 2 && d.nu < (1 << (alpha - 2)));
    }

    #[test]
    fn discrete_log_roundtrip_random_prime_power(seed in any::<u64>()) {
        const PRIME_CAP: u64 = 200_000;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = loop {
            let c = rng.gen_range(3u64..PRIME_CAP);
            if is_prime(c) { break c; }
        };
        let alpha = if p < 1000 { rng.gen_range(1..=2u32) } else { 1 };
        let pa = p.pow(alpha);
        let g = primitive_root(p, alpha).unwrap();
        let x = loop {
            let c = rng.gen_range(1..pa);
            if c % p != 0 { break c; }
        };
        let ind = discrete_log(g, x, p, alpha).unwrap();
        prop_assert_eq!(modpow(g, ind, pa), x);
    }

    #[test]
    fn v_additivity(a in 1u64..100_000, b in 1u64..100_000) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(v(a * b).unwrap(), v(a).unwrap() + v(b).unwrap());
    }
}

fn arb_solution_set() -> impl Strategy<Value = SolutionSet> {
    prop_oneof![
        1 => Just(SolutionSet::Empty),
        2 => proptest::collection::btree_set(1u64..120, 1..6)
            .prop_map(|s| SolutionSet::finite(s)),
        4 => (0u64..40, 1u64..40, 1u64..50)
            .prop_map(|(r, m, lo)| SolutionSet::progression(r, m, lo)),
    ]
}

proptest! {
    #[test]
    fn intersect_matches_membership(s1 in arb_solution_set(), s2 in arb_solution_set()) {
        let both = s1.intersect(&s2).unwrap();
        for k in 1..=4000u64 {
            prop_assert_eq!(both.contains(k), s1.contains(k) && s2.contains(k), "k={}", k);
        }
    }

    #[test]
    fn intersect_is_commutative_associative_idempotent(
        s1 in arb_solution_set(),
        s2 in arb_solution_set(),
        s3 in arb_solution_set(),
    ) {
        prop_assert_eq!(s1.intersect(&s2).unwrap(), s2.intersect(&s1).unwrap());
        let left = s1.intersect(&s2).unwrap().intersect(&s3).unwrap();
        let right = s1.intersect(&s2.intersect(&s3).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(s1.intersect(&s1).unwrap(), s1.clone());
        prop_assert_eq!(s1.intersect(&SolutionSet::all()).unwrap(), s1.clone());
        prop_assert_eq!(s1.intersect(&SolutionSet::Empty).unwrap(), SolutionSet::Empty);
    }
}

fn arb_problem() -> impl Strategy<Value = CongruenceProblem> {
    (1u64..=1_000_000, 2u64..=16, 1u64..=100_000, any::<i64>()).prop_map(|(n, b, m, raw)| {
        let a = raw.rem_euclid(m as i64 + 1) - (m as i64 / 2);
        CongruenceProblem::new(n, b, a, m).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_oracle(problem in arb_problem()) {
        let report = cross_check(&problem, 600).unwrap();
        prop_assert!(report.passed, "mismatches {:?} for {:?}", report.mismatches, problem);
    }

    #[test]
    fn solution_is_canonical_and_shift_invariant(problem in arb_problem()) {
        let (set, _) = solve(&problem).unwrap();
        if let SolutionSet::Progression { residue, modulus, min } = &set {
            prop_assert!(residue < modulus);
            prop_assert_eq!(min % modulus, *residue);
            prop_assert!(*min >= 1);
            prop_assert!(set.contains(*min));
            prop_assert!(!set.contains(min.saturating_sub(*modulus)));
        }
        let shifted = CongruenceProblem::new(
            problem.n,
            problem.b,
            problem.a + problem.m as i64,
            problem.m,
        )
        .unwrap();
        prop_assert_eq!(solve(&shifted).unwrap().0, set);
    }

    #[test]
    fn enumerate_lists_members_in_order(problem in arb_problem()) {
        let (set, _) = solve(&problem).unwrap();
        let members = set.enumerate(10);
        let mut prev = 0u64;
        for &k in &members {
            prop_assert!(set.contains(k));
            prop_assert!(k > prev);
            // nothing between consecutive members belongs to the set
            for gap in (prev + 1)..k {
                prop_assert!(!set.contains(gap));
            }
            prev = k;
        }
        if members.len() < 10 {
            // the set really ran out
            let bound = members.last().copied().unwrap_or(0);
            let hits = brute_force_solve(&problem, bound + 2000).unwrap();
            prop_assert!(hits.iter().all(|&k| members.contains(&k)));
        }
    }
}
