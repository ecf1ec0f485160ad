//! Deterministic verification suites cross-checking every closed form
//! against its independent oracle: brute-force subgroup averages, the
//! Gram-matrix trace, the operator compression traces, and the structural
//! polynomial identities. Failures carry the full query so they can be
//! replayed from the command line.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dunkl::{isotype_trace, pk_matrix, MonomialSpace};
use crate::hookchar::{class_histogram, hook_character, spherical_bruteforce, HookShape};
use crate::invariant::{
    alternating_delta_sum, check_jucys_murphy, gram_matrix, spherical_via_expansion,
    spherical_via_gram, symmetrize, xi_basis, MultiPoly,
};
use crate::perm::{support_cycle, BlockStructure, Permutation, SupportSet};
use crate::scalar::{int, rat, Rational};
use crate::spectrum::{eigenvalue_sum, DegreeProfile, Normalization};
use crate::spherical::{
    invariant_multiplicity, special, spherical_product, spherical_product_permissive,
    spherical_reciprocal, SphericalQuery,
};
use crate::symfunc::{choose, complete_sym, elem_sym};
use crate::Error;

/// Fixed seed for the randomized portions; every run checks the same
/// instances.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// Rational sample points for deciding polynomial identities in kappa; a
/// degree-k comparison uses the first k+2 of them.
pub const KAPPA_SAMPLES: [(i64, i64); 5] = [(0, 1), (1, 1), (-1, 1), (1, 2), (2, 1)];

/// Outcome of one named check over a family of instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: String::from(name), instances: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Bounds for the exhaustive grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridCaps {
    /// Largest leg count b.
    pub max_b: usize,
    /// Largest number of blocks p.
    pub max_p: usize,
    /// Largest single block size.
    pub max_n: usize,
    /// Total-size cap for the Gram-matrix checks.
    pub gram_total: usize,
    /// Skip instances whose subgroup order exceeds this.
    pub subgroup_cap: u64,
}

impl Default for GridCaps {
    fn default() -> Self {
        GridCaps { max_b: 3, max_p: 4, max_n: 3, gram_total: 7, subgroup_cap: 3_628_800 }
    }
}

fn for_each_blocks(max_p: usize, max_n: usize, f: &mut dyn FnMut(&BlockStructure)) {
    fn recurse(sizes: &mut Vec<usize>, max_p: usize, max_n: usize, f: &mut dyn FnMut(&BlockStructure)) {
        if !sizes.is_empty() {
            f(&BlockStructure::new(sizes.clone()).expect("positive sizes"));
        }
        if sizes.len() == max_p {
            return;
        }
        for n in 1..=max_n {
            sizes.push(n);
            recurse(sizes, max_p, max_n, f);
            sizes.pop();
        }
    }
    let mut sizes = Vec::new();
    recurse(&mut sizes, max_p, max_n, f);
}

fn supports_of(p: usize) -> impl Iterator<Item = SupportSet> {
    (1u32..(1 << p) as u32).map(move |mask| {
        SupportSet::new((0..p).filter(|j| mask & (1 << j) != 0).collect()).expect("mask nonzero")
    })
}

fn support_1based(s: &SupportSet) -> String {
    let v: Vec<String> = s.members().iter().map(|j| format!("{}", j + 1)).collect();
    v.join(",")
}

fn sizes_csv(blocks: &BlockStructure) -> String {
    let v: Vec<String> = blocks.sizes().iter().map(|n| format!("{n}")).collect();
    v.join(",")
}

fn query_label(q: &SphericalQuery) -> String {
    format!(
        "spherical --b {} --blocks {} --support {}",
        q.b(),
        sizes_csv(q.blocks()),
        support_1based(q.support())
    )
}

fn subgroup_fits(blocks: &BlockStructure, cap: u64) -> bool {
    blocks.order() <= BigInt::from(cap)
}

/// Exhaustive grid: the reciprocal-side closed form against the definition,
/// a character average over the subgroup. One histogram per (blocks,
/// support) serves every b.
pub fn check_closed_vs_bruteforce(caps: &GridCaps) -> CheckReport {
    let mut report = CheckReport::new("closed-vs-bruteforce");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        if !subgroup_fits(blocks, caps.subgroup_cap) {
            return;
        }
        let p = blocks.num_blocks();
        for support in supports_of(p) {
            let g = support_cycle(blocks, &support).expect("support within blocks");
            let hist = class_histogram(blocks, &g).expect("degrees match");
            for b in 0..=caps.max_b.min(p - 1) {
                let q = SphericalQuery::new(b, blocks.clone(), support.clone()).expect("m >= 0");
                let closed = spherical_reciprocal(&q);
                let shape = HookShape::new(blocks.total(), b).expect("b <= N-1");
                let mut acc = BigInt::from(0);
                for (class, count) in &hist {
                    acc += hook_character(&shape, class).expect("totals match") * BigInt::from(*count);
                }
                let brute = Rational::new(acc, blocks.order());
                report.instances += 1;
                if closed != brute {
                    report.failures.push(format!("{} : closed={closed} bruteforce={brute}", query_label(&q)));
                }
            }
        }
    });
    report
}

/// The two closed forms against each other: the full grid with ell >= 2,
/// plus seeded random instances with much larger blocks than any
/// brute-force check could reach.
pub fn check_formula_equivalence(caps: &GridCaps, random_instances: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("closed-forms-equivalence");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        let p = blocks.num_blocks();
        for support in supports_of(p).filter(|s| s.len() >= 2) {
            for b in 0..=caps.max_b.min(p - 1) {
                let q = SphericalQuery::new(b, blocks.clone(), support.clone()).expect("m >= 0");
                let lhs = spherical_product(&q).expect("ell >= 2");
                let rhs = spherical_reciprocal(&q);
                report.instances += 1;
                if lhs != rhs {
                    report.failures.push(format!("{} : product={lhs} reciprocal={rhs}", query_label(&q)));
                }
            }
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_instances {
        let p = rng.random_range(2..=8usize);
        let sizes: Vec<usize> = (0..p).map(|_| rng.random_range(1..=20usize)).collect();
        let b = rng.random_range(0..p);
        let ell = rng.random_range(2..=p);
        // Fisher-Yates prefix for a uniform ell-subset.
        let mut pool: Vec<usize> = (0..p).collect();
        for i in 0..ell {
            let j = rng.random_range(i..p);
            pool.swap(i, j);
        }
        let support = SupportSet::new(pool[..ell].to_vec()).expect("distinct indices");
        let blocks = BlockStructure::new(sizes).expect("positive sizes");
        let q = SphericalQuery::new(b, blocks, support).expect("b < p");
        let lhs = spherical_product(&q).expect("ell >= 2");
        let rhs = spherical_reciprocal(&q);
        report.instances += 1;
        if lhs != rhs {
            report.failures.push(format!("{} : product={lhs} reciprocal={rhs}", query_label(&q)));
        }
    }
    report
}

/// Singleton supports: the permissive product form, the reciprocal form,
/// the multiplicity, and the brute-force average at the identity must all
/// coincide.
pub fn check_singleton_support(caps: &GridCaps) -> CheckReport {
    let mut report = CheckReport::new("singleton-support");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        if !subgroup_fits(blocks, caps.subgroup_cap) {
            return;
        }
        let p = blocks.num_blocks();
        for j in 0..p {
            for b in 0..=caps.max_b.min(p - 1) {
                let support = SupportSet::new(alloc::vec![j]).expect("nonempty");
                let q = SphericalQuery::new(b, blocks.clone(), support).expect("m >= 0");
                let mult = invariant_multiplicity(&q);
                let shape = HookShape::new(blocks.total(), b).expect("b <= N-1");
                let brute = spherical_bruteforce(&shape, blocks, &q.group_element()).expect("sizes match");
                let recip = spherical_reciprocal(&q);
                let perm = spherical_product_permissive(&q);
                report.instances += 1;
                if any_mismatch(&mult, &brute, &recip, &perm) {
                    report.failures.push(format!(
                        "{} : multiplicity={mult} bruteforce={brute} reciprocal={recip} product={perm}",
                        query_label(&q)
                    ));
                }
            }
        }
    });
    report
}

fn any_mismatch(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> bool {
    a != b || a != c || a != d
}

/// Gram-matrix trace against the reciprocal closed form on every grid
/// instance small enough to build the polynomial basis.
pub fn check_gram_route(caps: &GridCaps) -> CheckReport {
    let mut report = CheckReport::new("gram-route");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        if blocks.total() > caps.gram_total {
            return;
        }
        let p = blocks.num_blocks();
        for support in supports_of(p) {
            for b in 0..=caps.max_b.min(p - 1) {
                let q = SphericalQuery::new(b, blocks.clone(), support.clone()).expect("m >= 0");
                let g = q.group_element();
                report.instances += 1;
                match spherical_via_gram(b, blocks, &g) {
                    Ok(v) => {
                        let closed = spherical_reciprocal(&q);
                        if v != closed {
                            report.failures.push(format!("{} : gram={v} closed={closed}", query_label(&q)));
                        }
                    }
                    Err(e) => report.failures.push(format!("{} : gram failed: {e}", query_label(&q))),
                }
            }
        }
    });
    report
}

/// Basis-expansion route (trace of the coefficient matrix of the
/// symmetrized translates) against the Gram route.
pub fn check_expansion_route(caps: &GridCaps) -> CheckReport {
    let mut report = CheckReport::new("expansion-route");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        if blocks.total() > caps.gram_total || !subgroup_fits(blocks, caps.subgroup_cap) {
            return;
        }
        let p = blocks.num_blocks();
        for support in supports_of(p) {
            for b in 0..=caps.max_b.min(p - 1) {
                let q = SphericalQuery::new(b, blocks.clone(), support.clone()).expect("m >= 0");
                let g = q.group_element();
                report.instances += 1;
                let lhs = spherical_via_expansion(b, blocks, &g);
                let rhs = spherical_via_gram(b, blocks, &g);
                match (lhs, rhs) {
                    (Ok(a), Ok(c)) if a == c => {}
                    (a, c) => report.failures.push(format!("{} : expansion={a:?} gram={c:?}", query_label(&q))),
                }
            }
        }
    });
    report
}

/// Invariant-basis bookkeeping: the basis length equals the multiplicity
/// binom(b+m, b) and its Gram matrix is nonsingular.
pub fn check_invariant_basis(caps: &GridCaps) -> CheckReport {
    let mut report = CheckReport::new("invariant-basis");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        if blocks.total() > caps.gram_total {
            return;
        }
        let p = blocks.num_blocks();
        for b in 0..=caps.max_b.min(p - 1) {
            let m = p - 1 - b;
            let basis = xi_basis(b, blocks).expect("m >= 0");
            report.instances += 1;
            let expected = choose(b + m, b);
            if BigInt::from(basis.len()) != expected {
                report.failures.push(format!(
                    "blocks {} b={b}: basis has {} elements, multiplicity is {expected}",
                    sizes_csv(blocks),
                    basis.len()
                ));
                continue;
            }
            let polys: Vec<MultiPoly> = basis.into_iter().map(|(_, f)| f).collect();
            if gram_matrix(&polys).inverse().is_err() {
                report.failures.push(format!("blocks {} b={b}: singular Gram matrix", sizes_csv(blocks)));
            }
        }
    });
    report
}

/// Every boundary-regime closed form against the general one on all grid
/// instances in its regime.
pub fn check_special_cases(caps: &GridCaps) -> CheckReport {
    let mut report = CheckReport::new("special-cases");
    for_each_blocks(caps.max_p, caps.max_n, &mut |blocks| {
        let p = blocks.num_blocks();
        for support in supports_of(p) {
            for b in 0..=caps.max_b.min(p - 1) {
                let m = p - 1 - b;
                let q = SphericalQuery::new(b, blocks.clone(), support.clone()).expect("m >= 0");
                let ell = q.ell();
                let sizes = q.supported_sizes();
                let general = spherical_reciprocal(&q);
                let push = |name: &str, value: Rational, report: &mut CheckReport| {
                    report.instances += 1;
                    if value != general {
                        report
                            .failures
                            .push(format!("{} [{name}] : special={value} general={general}", query_label(&q)));
                    }
                };
                if m == 0 {
                    push("unique-invariant", special::unique_invariant(&sizes), &mut report);
                }
                if m == 1 && ell == p {
                    push("one-excess-full", special::one_excess_full_support(b, &sizes), &mut report);
                }
                if ell == p {
                    push("full-support", special::full_support(b, m, &sizes), &mut report);
                }
                if b == 1 && ell >= 2 {
                    push("one-leg", special::one_leg(p, &sizes), &mut report);
                }
                if sizes.iter().all(|&n| n == 1) {
                    push("unit-blocks", special::unit_blocks(b, m, ell), &mut report);
                }
            }
        }
    });
    report
}

/// The alternating sum of omitted-coordinate difference products, evaluated
/// at seeded random points with distinct coordinates; every evaluation must
/// vanish. The structural zero is also asserted once per b.
pub fn check_alternating_sum(max_b: usize, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("alternating-sum");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for b in 0..=max_b {
        let vars = b + 2;
        let poly = alternating_delta_sum(b);
        report.instances += 1;
        if !poly.is_zero() {
            report.failures.push(format!("b={b}: alternating sum is not the zero polynomial"));
            continue;
        }
        for s in 0..samples {
            let point = distinct_rationals(&mut rng, vars);
            // Evaluate term by term so the check does not depend on the
            // polynomial arithmetic that proved the structural zero.
            let mut acc = Rational::zero();
            for j in 0..vars {
                let coords: Vec<Rational> =
                    (0..vars).filter(|&r| r != j).map(|r| point[r].clone()).collect();
                let v = vandermonde_at(&coords);
                acc = if j % 2 == 0 { acc - v } else { acc + v };
            }
            report.instances += 1;
            if !acc.is_zero() {
                report.failures.push(format!("b={b} sample {s}: sum evaluates to {acc}"));
            }
        }
    }
    report
}

fn distinct_rationals(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let v = rat(rng.random_range(-30i64..30), rng.random_range(1i64..7));
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn vandermonde_at(coords: &[Rational]) -> Rational {
    let mut acc = int(1);
    for r in 0..coords.len() {
        for s in r + 1..coords.len() {
            acc *= &coords[r] - &coords[s];
        }
    }
    acc
}

/// Jucys-Murphy eigenvalue grid.
pub fn check_jucys_murphy_grid(max_n: usize, max_b: usize) -> CheckReport {
    let mut report = CheckReport::new("jucys-murphy");
    for n in 1..=max_n {
        for b in 0..n.min(max_b + 1) {
            report.instances += 1;
            match check_jucys_murphy(n, b) {
                Ok(true) => {}
                Ok(false) => report.failures.push(format!("n={n} b={b}: eigenvalue relation fails")),
                Err(e) => report.failures.push(format!("n={n} b={b}: {e}")),
            }
        }
    }
    report
}

/// Symmetrization is idempotent and lands in the subgroup invariants, on
/// seeded random polynomials over a spread of block structures.
pub fn check_symmetrizer_idempotence(samples_per_blocks: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("symmetrizer-idempotence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families: [&[usize]; 6] = [&[2, 1], &[1, 2], &[2, 2], &[3, 1], &[1, 1, 2], &[2, 2, 1]];
    for sizes in families {
        let blocks = BlockStructure::new(sizes.to_vec()).expect("positive sizes");
        let n = blocks.total();
        for s in 0..samples_per_blocks {
            let f = random_poly(&mut rng, n);
            let sym = symmetrize(&f, &blocks).expect("degrees match");
            let twice = symmetrize(&sym, &blocks).expect("degrees match");
            report.instances += 1;
            if sym != twice {
                report.failures.push(format!("blocks {} sample {s}: rho not idempotent", sizes_csv(&blocks)));
                continue;
            }
            // Invariance under one nontrivial subgroup element, when any
            // block has at least two points.
            if let Some(j) = (0..blocks.num_blocks()).find(|&j| blocks.sizes()[j] >= 2) {
                let r = blocks.interval(j);
                let h = Permutation::transposition(n, r.start, r.start + 1);
                if sym.permute_vars(&h) != sym {
                    report
                        .failures
                        .push(format!("blocks {} sample {s}: rho image not invariant", sizes_csv(&blocks)));
                }
            }
        }
    }
    report
}

fn random_poly(rng: &mut ChaCha8Rng, vars: usize) -> MultiPoly {
    let mut f = MultiPoly::zero(vars);
    let terms = rng.random_range(1..=4usize);
    for _ in 0..terms {
        let exps: Vec<u32> = (0..vars).map(|_| rng.random_range(0..=3u32)).collect();
        let coeff = rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=4));
        f = f.add(&MultiPoly::monomial(vars, exps, coeff).expect("lengths match"));
    }
    f
}

/// Generating-function and convolution identities for the symmetric
/// polynomial kernels, on seeded random rational inputs.
pub fn check_symfunc_identities(samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("symmetric-function-identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let len = rng.random_range(0..=6usize);
        let vals: Vec<Rational> =
            (0..len).map(|_| rat(rng.random_range(-8i64..9), rng.random_range(1i64..5))).collect();
        let t = rat(rng.random_range(-5i64..6), rng.random_range(1i64..4));

        // prod (1 + v t) = sum_k e_k t^k.
        let lhs = vals.iter().fold(int(1), |acc, v| acc * (int(1) + v * &t));
        let mut rhs = Rational::zero();
        let mut tp = int(1);
        for k in 0..=len {
            rhs += elem_sym(k, &vals) * &tp;
            tp *= &t;
        }
        report.instances += 1;
        if lhs != rhs {
            report.failures.push(format!("sample {s}: elementary generating identity fails"));
        }

        // sum_i (-1)^i e_i h_{k-i} = 0 for k >= 1.
        for k in 1..=4usize {
            let mut acc = Rational::zero();
            for i in 0..=k {
                let term = elem_sym(i, &vals) * complete_sym(k - i, &vals);
                acc = if i % 2 == 0 { acc + term } else { acc - term };
            }
            report.instances += 1;
            if !acc.is_zero() {
                report.failures.push(format!("sample {s} k={k}: e/h convolution fails"));
            }
        }
    }
    report
}

/// Which way the eigenvalue-sum arbitration came out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigsumArbitration {
    pub report: CheckReport,
    /// Failures per variant, over all enumerated instances.
    pub plain_failures: Vec<String>,
    pub factorial_failures: Vec<String>,
    /// Failures inside the all-distinct-degrees subfamily, where the two
    /// variants coincide and both must match the oracle.
    pub distinct_failures: Vec<String>,
    /// The single surviving variant, when exactly one matches everywhere.
    pub certified: Option<Normalization>,
}

/// Compares the combinatorial eigenvalue sum under both normalizations with
/// the operator compression trace at k+2 rational sample points, over every
/// degree profile with at most `max_vars` variables and total degree at
/// most `max_total`, every admissible b, and k up to `max_k`.
pub fn check_eigsum_arbitration(max_vars: usize, max_total: u32, max_k: usize) -> EigsumArbitration {
    let mut report = CheckReport::new("eigensum-arbitration");
    let mut plain_failures = Vec::new();
    let mut factorial_failures = Vec::new();
    let mut distinct_failures = Vec::new();

    for n in 1..=max_vars {
        for lambda in weakly_decreasing(n, max_total) {
            let profile = profile_of(&lambda);
            let p = profile.num_blocks();
            for b in 0..p {
                for k in 1..=max_k {
                    report.instances += 1;
                    let plain = eigenvalue_sum(&profile, b, k, Normalization::Plain).expect("valid instance");
                    let fact =
                        eigenvalue_sum(&profile, b, k, Normalization::Factorial).expect("valid instance");
                    let label = format!("eigsum --profile {profile} --b {b} --k {k}");
                    let all_distinct = profile.pairs().iter().all(|&(_, c)| c == 1);
                    let mut plain_ok = true;
                    let mut fact_ok = true;
                    for &(num, den) in KAPPA_SAMPLES.iter().take(k + 2) {
                        let kappa = rat(num, den);
                        let oracle = isotype_trace(&profile, b, k, &kappa).expect("valid instance");
                        if plain.value.eval(&kappa) != oracle {
                            plain_ok = false;
                            plain_failures.push(format!(
                                "{label} --normalization plain : kappa={kappa} closed={} oracle={oracle}",
                                plain.value.eval(&kappa)
                            ));
                        }
                        if fact.value.eval(&kappa) != oracle {
                            fact_ok = false;
                            factorial_failures.push(format!(
                                "{label} --normalization factorial : kappa={kappa} closed={} oracle={oracle}",
                                fact.value.eval(&kappa)
                            ));
                        }
                    }
                    if !plain_ok && !fact_ok {
                        report.failures.push(format!("{label} : no normalization matches the trace"));
                    }
                    if all_distinct && (!plain_ok || !fact_ok) {
                        distinct_failures.push(format!("{label} : distinct-degrees instance disagrees"));
                    }
                }
            }
        }
    }

    let certified = match (plain_failures.is_empty(), factorial_failures.is_empty()) {
        (true, false) => Some(Normalization::Plain),
        (false, true) => Some(Normalization::Factorial),
        _ => None,
    };
    if certified.is_none() {
        report.failures.push(String::from(if plain_failures.is_empty() {
            "arbitration inconclusive: both normalizations match every instance"
        } else {
            "arbitration inconclusive: neither normalization matches every instance"
        }));
    }
    for f in &distinct_failures {
        report.failures.push(f.clone());
    }
    EigsumArbitration { report, plain_failures, factorial_failures, distinct_failures, certified }
}

fn weakly_decreasing(slots: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn recurse(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, slots: usize, bound: u32, left: u32) {
        if current.len() == slots {
            out.push(current.clone());
            return;
        }
        for d in (0..=bound.min(left)).rev() {
            current.push(d);
            recurse(out, current, slots, d, left - d);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(&mut out, &mut Vec::new(), slots, max_total, max_total);
    out
}

fn profile_of(lambda: &[u32]) -> DegreeProfile {
    let mut pairs: Vec<(u32, usize)> = Vec::new();
    for &d in lambda {
        match pairs.last_mut() {
            Some((last, c)) if *last == d => *c += 1,
            _ => pairs.push((d, 1)),
        }
    }
    DegreeProfile::new(pairs).expect("grouped weakly decreasing vector")
}

/// Frozen operator-side facts: the power-sum matrix at kappa = 0 is the
/// diagonal of Euler powers, and the compression trace on a rectangular
/// profile d repeated N times with b = 0 equals N d^k independently of
/// kappa.
pub fn check_operator_facts() -> CheckReport {
    let mut report = CheckReport::new("operator-facts");
    for (vars, degree) in [(2usize, 3u32), (3, 2), (3, 4)] {
        let space = MonomialSpace::new(vars, degree);
        for k in 1..=3usize {
            let p = pk_matrix(&space, k, &int(0));
            report.instances += 1;
            let mut ok = true;
            'scan: for i in 0..space.dim() {
                for j in 0..space.dim() {
                    let expected = if i == j {
                        int(space.exponents(i).iter().map(|&a| (a as i64).pow(k as u32)).sum::<i64>())
                    } else {
                        int(0)
                    };
                    if p.get(i, j) != &expected {
                        ok = false;
                        break 'scan;
                    }
                }
            }
            if !ok {
                report
                    .failures
                    .push(format!("vars={vars} degree={degree} k={k}: zero-coupling power sum not Euler diagonal"));
            }
        }
    }
    for n in 1..=4usize {
        for d in 0..=2u32 {
            let profile = DegreeProfile::new(alloc::vec![(d, n)]).expect("single pair");
            for k in 1..=3usize {
                for (num, den) in [(1i64, 2i64), (2, 1)] {
                    let kappa = rat(num, den);
                    let expected = int(n as i64 * (d as i64).pow(k as u32));
                    report.instances += 1;
                    match isotype_trace(&profile, 0, k, &kappa) {
                        Ok(v) if v == expected => {}
                        Ok(v) => report.failures.push(format!(
                            "profile {profile} b=0 k={k} kappa={kappa}: trace={v}, expected {expected}"
                        )),
                        Err(e) => report.failures.push(format!("profile {profile} b=0 k={k}: {e}")),
                    }
                }
            }
        }
    }
    report
}

/// Named verification suites exposed by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Spherical,
    Identities,
    Eigsum,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "spherical" => Ok(Suite::Spherical),
            "identities" => Ok(Suite::Identities),
            "eigsum" => Ok(Suite::Eigsum),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite '{other}'"))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Spherical => "spherical",
            Suite::Identities => "identities",
            Suite::Eigsum => "eigsum",
            Suite::All => "all",
        }
    }
}

/// Tunables for a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub caps: GridCaps,
    pub random_instances: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { caps: GridCaps::default(), random_instances: 500, seed: DEFAULT_SEED }
    }
}

/// Everything a suite run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
    /// Present when the eigenvalue-sum arbitration ran.
    pub certified: Option<Normalization>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteOutcome {
    let caps = &opts.caps;
    let mut reports = Vec::new();
    let mut certified = None;
    if matches!(suite, Suite::Spherical | Suite::All) {
        reports.push(check_closed_vs_bruteforce(caps));
        reports.push(check_formula_equivalence(caps, opts.random_instances, opts.seed));
        reports.push(check_singleton_support(caps));
        reports.push(check_gram_route(caps));
        reports.push(check_expansion_route(caps));
        reports.push(check_invariant_basis(caps));
        reports.push(check_special_cases(caps));
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        reports.push(check_alternating_sum(4, 100, opts.seed));
        reports.push(check_jucys_murphy_grid(6, 3));
        reports.push(check_symmetrizer_idempotence(100, opts.seed));
        reports.push(check_symfunc_identities(200, opts.seed));
    }
    if matches!(suite, Suite::Eigsum | Suite::All) {
        let arb = check_eigsum_arbitration(4, 5, 3);
        certified = arb.certified;
        reports.push(arb.report);
        reports.push(check_operator_facts());
    }
    SuiteOutcome { reports, certified }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::delta;

    #[test]
    fn kappa_samples_are_distinct() {
        for i in 0..KAPPA_SAMPLES.len() {
            for j in i + 1..KAPPA_SAMPLES.len() {
                assert_ne!(
                    rat(KAPPA_SAMPLES[i].0, KAPPA_SAMPLES[i].1),
                    rat(KAPPA_SAMPLES[j].0, KAPPA_SAMPLES[j].1)
                );
            }
        }
    }

    #[test]
    fn block_enumeration_counts() {
        let mut count = 0;
        for_each_blocks(4, 3, &mut |_| count += 1);
        // 3 + 9 + 27 + 81 compositions with parts in 1..=3.
        assert_eq!(count, 120);
    }

    #[test]
    fn weakly_decreasing_enumeration() {
        let all = weakly_decreasing(2, 2);
        assert_eq!(all, alloc::vec![
            alloc::vec![2, 0],
            alloc::vec![1, 1],
            alloc::vec![1, 0],
            alloc::vec![0, 0],
        ]);
    }

    #[test]
    fn profile_grouping() {
        let p = profile_of(&[5, 5, 3, 0, 0, 0]);
        assert_eq!(p.pairs(), &[(5, 2), (3, 1), (0, 3)]);
    }

    #[test]
    fn delta_helper_consistency() {
        // vandermonde_at agrees with the polynomial delta evaluated there.
        let coords = [int(0), int(1), int(2)];
        let poly = delta(3, &[0, 1, 2]).unwrap();
        assert_eq!(poly.eval(&coords), vandermonde_at(&coords));
    }

    #[test]
    fn tiny_grid_is_green() {
        let caps = GridCaps { max_b: 2, max_p: 3, max_n: 2, gram_total: 5, subgroup_cap: 720 };
        let r = check_closed_vs_bruteforce(&caps);
        assert!(r.passed(), "{:?}", r.failures.first());
        assert!(r.instances > 50);
        let r = check_formula_equivalence(&caps, 25, DEFAULT_SEED);
        assert!(r.passed(), "{:?}", r.failures.first());
        let r = check_gram_route(&caps);
        assert!(r.passed(), "{:?}", r.failures.first());
        let r = check_invariant_basis(&caps);
        assert!(r.passed(), "{:?}", r.failures.first());
        let r = check_special_cases(&caps);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn small_arbitration_certifies_plain() {
        let arb = check_eigsum_arbitration(3, 3, 2);
        assert_eq!(arb.certified, Some(Normalization::Plain), "plain failures: {:?}", arb.plain_failures.first());
        assert!(!arb.factorial_failures.is_empty());
        assert!(arb.distinct_failures.is_empty());
    }
}
