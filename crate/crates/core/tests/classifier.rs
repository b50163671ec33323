use frw_core::classify::{
    classify_dimension, factorize, factorize_u64, DimensionProfile, Outcome, COVERAGE_BOUND,
};

fn profile(n: u64, integral: bool, wi: bool, wgt: bool) -> DimensionProfile {
    let flag = |b: bool| b.then_some(true);
    factorize(n)
        .unwrap()
        .with_flags(flag(integral), flag(wi), flag(wgt))
}

fn fired(p: &DimensionProfile) -> Vec<&'static str> {
    classify_dimension(p).trace.iter().map(|r| r.id).collect()
}

/// Distinct prime divisors by trial division.
fn distinct_primes(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[test]
fn factorization_matches_trial_division() {
    for n in 1..5000u64 {
        let f = factorize_u64(n);
        assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        assert_eq!(
            f.iter().map(|&(p, _)| p).collect::<Vec<_>>(),
            distinct_primes(n)
        );
    }
    let big = 999_999_000_001u64;
    assert_eq!(
        factorize_u64(big)
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>(),
        big
    );
}

#[test]
fn coverage_below_120() {
    assert_eq!(COVERAGE_BOUND, 120);
    for n in 1..=119 {
        let v = classify_dimension(&profile(n, false, true, false));
        assert!(
            matches!(
                v.outcome,
                Outcome::Solvable | Outcome::SolvableOrGroupTheoretical
            ),
            "N = {n}: {}",
            v.outcome
        );
    }
    assert_eq!(
        classify_dimension(&profile(120, false, true, false)).outcome,
        Outcome::Unknown
    );
}

#[test]
fn headline_dimensions() {
    assert_eq!(
        classify_dimension(&profile(90, false, true, false)).outcome,
        Outcome::Solvable
    );
    assert!(fired(&profile(90, false, true, false)).contains(&"R4"));
    let v84 = classify_dimension(&profile(84, false, true, false));
    assert_eq!(v84.outcome, Outcome::SolvableOrGroupTheoretical);
    assert!(fired(&profile(84, false, true, false)).contains(&"R3"));
}

#[test]
fn two_prime_dimensions_fire_r1() {
    for n in 1..=119 {
        if distinct_primes(n).len() <= 2 {
            let v = classify_dimension(&profile(n, false, false, false));
            assert_eq!(v.outcome, Outcome::Solvable, "N = {n}");
            assert_eq!(v.trace[0].id, "R1", "N = {n}");
        }
    }
}

#[test]
fn odd_dimensions_with_wgt_fire_r7() {
    for n in (1..=100_000u64).step_by(2) {
        let v = classify_dimension(&profile(n, false, false, true));
        assert!(v.trace.iter().any(|r| r.id == "R7"), "N = {n}");
        assert_eq!(v.outcome, Outcome::Solvable, "N = {n}");
    }
}

#[test]
fn adding_a_true_flag_never_weakens() {
    for n in 1..=400 {
        for mask in 0..8u8 {
            let base = classify_dimension(&profile(n, mask & 1 != 0, mask & 2 != 0, mask & 4 != 0));
            for bit in 0..3 {
                let more = mask | (1 << bit);
                let stronger =
                    classify_dimension(&profile(n, more & 1 != 0, more & 2 != 0, more & 4 != 0));
                assert!(
                    stronger.outcome.implies(base.outcome),
                    "N = {n}: {} vs {}",
                    stronger.outcome,
                    base.outcome
                );
                assert!(
                    base.trace
                        .iter()
                        .all(|r| stronger.trace.iter().any(|s| s.id == r.id)),
                    "N = {n}, flags {mask:03b} -> {more:03b}"
                );
            }
        }
    }
}

#[test]
fn classification_is_a_pure_function() {
    for n in [1, 6, 30, 60, 84, 90, 105, 119, 120, 1001] {
        let p = profile(n, false, true, false);
        assert_eq!(classify_dimension(&p), classify_dimension(&p));
    }
}

#[test]
fn rules_document_lists_the_catalogue() {
    let doc =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../RULES.md")).unwrap();
    for (id, citation) in frw_core::classify::RULES {
        assert!(doc.contains(&format!("| {id} | {citation} |")), "{id}");
    }
}
