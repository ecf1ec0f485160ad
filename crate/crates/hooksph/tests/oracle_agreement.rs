//! Cross-module agreement on instances big enough to be interesting and
//! small enough to enumerate: the character recursion against the
//! representation-theoretic trace, and the complete default verification
//! suite.

use hooksph::hookchar::{hook_character, hook_dimension, HookShape};
use hooksph::invariant::{alternating_rep_character, alternating_rep_dimension};
use hooksph::perm::{CycleType, Permutation};
use hooksph::verify::{run_suite, Suite, SuiteOptions};
use hooksph::Rational;
use num_bigint::BigInt;

fn class_representative(n: usize, class: &CycleType) -> Permutation {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &len in class.parts() {
        cycles.push((next..next + len).collect());
        next += len;
    }
    assert_eq!(next, n);
    Permutation::from_cycles(n, &cycles).unwrap()
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn recurse(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, bound: usize, left: usize) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=bound.min(left)).rev() {
            current.push(part);
            recurse(out, current, part, left - part);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(&mut out, &mut Vec::new(), n, n);
    out
}

#[test]
fn character_recursion_matches_representation_trace_at_n6() {
    let n = 6;
    for b in 0..=2usize {
        let shape = HookShape::new(n, b).unwrap();
        assert_eq!(BigInt::from(alternating_rep_dimension(n, b).unwrap()), hook_dimension(&shape));
        for parts in partitions(n) {
            let class = CycleType::new(parts).unwrap();
            let w = class_representative(n, &class);
            let via_recursion = hook_character(&shape, &class).unwrap();
            let via_trace = alternating_rep_character(n, b, &w).unwrap();
            assert_eq!(via_trace, Rational::from(via_recursion), "n={n} b={b} class={:?}", class.parts());
        }
    }
}

#[test]
fn default_verification_suite_is_green() {
    let outcome = run_suite(Suite::All, &SuiteOptions::default());
    for report in &outcome.reports {
        assert!(
            report.passed(),
            "{} failed on {} of {} instances; first: {}",
            report.name,
            report.failures.len(),
            report.instances,
            report.failures.first().map(String::as_str).unwrap_or("")
        );
        assert!(report.instances > 0, "{} ran no instances", report.name);
    }
    assert_eq!(
        outcome.certified,
        Some(hooksph::spectrum::Normalization::Plain),
        "eigenvalue-sum normalization arbitration did not certify the plain weight"
    );
}
