//! Closed-form spherical function values of the hook isotype [N-b, 1^b]
//! relative to a Young subgroup, evaluated at the cycle threading the chosen
//! blocks. Two independent closed forms are kept side by side: one built
//! from elementary symmetric polynomials of the reciprocals 1/n_a, one from
//! elementary symmetric polynomials of the shifted sizes n_a - 1 with a
//! Pochhammer prefactor. Their agreement on random instances, and agreement
//! with the brute-force average, is part of the verification suite.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::perm::{support_cycle, BlockStructure, Permutation, SupportSet};
use crate::scalar::{int, Rational};
use crate::symfunc::{binomial, elem_sym, factorial, pochhammer};
use crate::Error;

/// A well-posed evaluation request: leg count b, block sizes, and the set of
/// blocks the cycle runs through. Requires m = p - b - 1 >= 0; anything else
/// has no invariants and is rejected up front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalQuery {
    b: usize,
    blocks: BlockStructure,
    support: SupportSet,
}

impl SphericalQuery {
    pub fn new(b: usize, blocks: BlockStructure, support: SupportSet) -> Result<Self, Error> {
        let p = blocks.num_blocks();
        if b + 1 > p {
            return Err(Error::NoInvariants { b, p });
        }
        support.check_within(p)?;
        Ok(SphericalQuery { b, blocks, support })
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn blocks(&self) -> &BlockStructure {
        &self.blocks
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    /// Number of blocks p.
    pub fn num_blocks(&self) -> usize {
        self.blocks.num_blocks()
    }

    /// Support size, the cycle length.
    pub fn ell(&self) -> usize {
        self.support.len()
    }

    /// Row excess m = p - b - 1, nonnegative by construction.
    pub fn m(&self) -> usize {
        self.num_blocks() - self.b - 1
    }

    /// Sizes of the supported blocks, in support order.
    pub fn supported_sizes(&self) -> Vec<usize> {
        self.support.members().iter().map(|&j| self.blocks.sizes()[j]).collect()
    }

    /// The group element the value is taken at.
    pub fn group_element(&self) -> Permutation {
        support_cycle(&self.blocks, &self.support).expect("support validated at construction")
    }

    /// Equivalent query with the supported blocks moved to the front, in
    /// order, and the support renumbered to 1..ell. The spherical value is
    /// invariant under this relabeling, which the test suite checks.
    pub fn normalize_support(&self) -> SphericalQuery {
        let mut sizes = self.supported_sizes();
        for (j, &s) in self.blocks.sizes().iter().enumerate() {
            if !self.support.members().contains(&j) {
                sizes.push(s);
            }
        }
        let support = SupportSet::new((0..self.ell()).collect()).expect("nonempty");
        let blocks = BlockStructure::new(sizes).expect("sizes already validated");
        SphericalQuery { b: self.b, blocks, support }
    }
}

/// Multiplicity of the isotype's invariants, binom(b+m, b). Also the value
/// at the identity, which is what a singleton support degenerates to.
pub fn invariant_multiplicity(q: &SphericalQuery) -> Rational {
    binomial((q.b + q.m()) as i64, q.b)
}

/// Default closed form: binom(b+m, b) plus an alternating binomial series
/// against e_i of the reciprocal block sizes. O(ell) rational operations.
pub fn spherical_reciprocal(q: &SphericalQuery) -> Rational {
    let b = q.b;
    let m = q.m();
    let ell = q.ell();
    let recip: Vec<Rational> = q
        .supported_sizes()
        .iter()
        .map(|&n| Rational::new(1.into(), n.into()))
        .collect();
    let mut value = binomial((b + m) as i64, b);
    for i in 1..=b.min(ell - 1) {
        let term = binomial((b + m - i) as i64, b - i) * elem_sym(i, &recip);
        if i % 2 == 0 {
            value += term;
        } else {
            value -= term;
        }
    }
    value
}

/// Alternate closed form via e_{ell-k}(n_a - 1) with Pochhammer weights and
/// the prefactor 1/prod n_a. Stated for ell >= 2; singleton supports are
/// rejected here and accepted by [`spherical_product_permissive`], which the
/// verification suite confirms still returns the multiplicity.
pub fn spherical_product(q: &SphericalQuery) -> Result<Rational, Error> {
    if q.ell() < 2 {
        return Err(Error::SingletonSupport);
    }
    Ok(spherical_product_permissive(q))
}

/// The product-side form evaluated without the ell >= 2 guard.
pub fn spherical_product_permissive(q: &SphericalQuery) -> Rational {
    let b = q.b;
    let m = q.m();
    let ell = q.ell();
    let sizes = q.supported_sizes();
    let shifted: Vec<Rational> = sizes.iter().map(|&n| int(n as i64 - 1)).collect();
    let mut acc: Rational = Zero::zero();
    for k in 0..=m.min(ell) {
        let weight = pochhammer(&int(b as i64 + 1), m - k) / Rational::from_integer(factorial(m - k));
        acc += weight * elem_sym(ell - k, &shifted);
    }
    let tail = pochhammer(&int(b as i64 - ell as i64 + 1), m) / Rational::from_integer(factorial(m));
    if ell % 2 == 0 {
        acc -= tail;
    } else {
        acc += tail;
    }
    let pi: Rational = sizes.iter().map(|&n| int(n as i64)).product();
    acc / pi
}

/// Closed forms for the degenerate and boundary regimes. Each is checked
/// against the general forms and the brute-force oracle in the verification
/// suite; they exist because their shapes are what one wants in proofs and
/// quick estimates.
pub mod special {
    use super::*;

    /// m = 0 (p = b + 1), the unique-invariant regime:
    /// (e_ell(n_a - 1) + (-1)^(ell-1)) / prod n_a.
    pub fn unique_invariant(sizes: &[usize]) -> Rational {
        let ell = sizes.len();
        let shifted: Vec<Rational> = sizes.iter().map(|&n| int(n as i64 - 1)).collect();
        let mut acc = elem_sym(ell, &shifted);
        if ell % 2 == 0 {
            acc -= int(1);
        } else {
            acc += int(1);
        }
        let pi: Rational = sizes.iter().map(|&n| int(n as i64)).product();
        acc / pi
    }

    /// m = 1 with full support ell = p = b + 2:
    /// ((ell-1) e_ell(n_a - 1) + e_{ell-1}(n_a - 1) + (-1)^b) / prod n_a.
    pub fn one_excess_full_support(b: usize, sizes: &[usize]) -> Rational {
        let ell = sizes.len();
        debug_assert_eq!(ell, b + 2);
        let shifted: Vec<Rational> = sizes.iter().map(|&n| int(n as i64 - 1)).collect();
        let mut acc = int(ell as i64 - 1) * elem_sym(ell, &shifted) + elem_sym(ell - 1, &shifted);
        if b % 2 == 0 {
            acc += int(1);
        } else {
            acc -= int(1);
        }
        let pi: Rational = sizes.iter().map(|&n| int(n as i64)).product();
        acc / pi
    }

    /// Full support ell = p, any m:
    /// (sum_k (b+1)_{m-k}/(m-k)! e_{ell-k}(n_a - 1) + (-1)^b) / prod n_a.
    pub fn full_support(b: usize, m: usize, sizes: &[usize]) -> Rational {
        let ell = sizes.len();
        let shifted: Vec<Rational> = sizes.iter().map(|&n| int(n as i64 - 1)).collect();
        let mut acc: Rational = Zero::zero();
        for k in 0..=m.min(ell) {
            let weight = pochhammer(&int(b as i64 + 1), m - k) / Rational::from_integer(factorial(m - k));
            acc += weight * elem_sym(ell - k, &shifted);
        }
        if b % 2 == 0 {
            acc += int(1);
        } else {
            acc -= int(1);
        }
        let pi: Rational = sizes.iter().map(|&n| int(n as i64)).product();
        acc / pi
    }

    /// b = 1, ell >= 2: (p - 1) - sum_a 1/n_a.
    pub fn one_leg(p: usize, sizes: &[usize]) -> Rational {
        let mut acc = int(p as i64 - 1);
        for &n in sizes {
            acc -= Rational::new(1.into(), n.into());
        }
        acc
    }

    /// All unit blocks n_i = 1, where the subgroup is trivial and the value
    /// reduces to the plain character of the ell-cycle:
    /// (b+1)_{m-ell}/(m-ell)! + (-1)^(ell+1) (b-ell+1)_m / m! for ell <= m,
    /// and only the sign tail once ell exceeds m. With m = 0 this is the
    /// sign character's (-1)^(ell+1).
    pub fn unit_blocks(b: usize, m: usize, ell: usize) -> Rational {
        let tail = pochhammer(&int(b as i64 + 1 - ell as i64), m) / Rational::from_integer(factorial(m));
        let signed_tail = if ell % 2 == 0 { -tail } else { tail };
        if ell <= m {
            pochhammer(&int(b as i64 + 1), m - ell) / Rational::from_integer(factorial(m - ell)) + signed_tail
        } else {
            signed_tail
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hookchar::{spherical_bruteforce, HookShape};
    use crate::scalar::rat;
    use alloc::vec;

    fn query(b: usize, sizes: &[usize], support: &[usize]) -> SphericalQuery {
        SphericalQuery::new(
            b,
            BlockStructure::new(sizes.to_vec()).unwrap(),
            SupportSet::new(support.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn reciprocal_form_worked_values() {
        // b=1, blocks (2,3,4), full support: 2 - (1/2 + 1/3 + 1/4).
        assert_eq!(spherical_reciprocal(&query(1, &[2, 3, 4], &[0, 1, 2])), rat(11, 12));
        // Same blocks, support {2,3}: binom(2,1) - e_1(1/3, 1/4) = 2 - 7/12.
        assert_eq!(spherical_reciprocal(&query(1, &[2, 3, 4], &[1, 2])), rat(17, 12));
        // b=2, blocks (2,3,1), support {1,2}: 1 - e_1(1/2, 1/3) + e_2 = 1/6.
        assert_eq!(spherical_reciprocal(&query(2, &[2, 3, 1], &[0, 1])), rat(1, 6));
        // b=2 with full support over (2,3,4): 1 - 13/12 + 3/8.
        assert_eq!(spherical_reciprocal(&query(2, &[2, 3, 4], &[0, 1, 2])), rat(7, 24));
        // b=0 is constantly 1.
        assert_eq!(spherical_reciprocal(&query(0, &[2, 3, 4], &[0, 2])), int(1));
    }

    #[test]
    fn product_form_worked_values() {
        assert_eq!(spherical_product(&query(1, &[2, 3, 4], &[0, 1, 2])).unwrap(), rat(11, 12));
        assert_eq!(spherical_product(&query(2, &[2, 3, 1], &[0, 1])).unwrap(), rat(1, 6));
        assert_eq!(spherical_product(&query(2, &[2, 3, 4], &[0, 1, 2])).unwrap(), rat(7, 24));
        assert_eq!(spherical_product(&query(1, &[2, 3, 4], &[1, 2])).unwrap(), rat(17, 12));
    }

    #[test]
    fn closed_forms_match_bruteforce_on_the_pinned_instances() {
        for (b, sizes, support) in [
            (1usize, vec![2usize, 3, 4], vec![0usize, 1, 2]),
            (2, vec![2, 3, 1], vec![0, 1]),
            (2, vec![2, 3, 4], vec![0, 1, 2]),
        ] {
            let q = query(b, &sizes, &support);
            let shape = HookShape::new(q.blocks().total(), b).unwrap();
            let bf = spherical_bruteforce(&shape, q.blocks(), &q.group_element()).unwrap();
            assert_eq!(spherical_reciprocal(&q), bf, "b={b} sizes={sizes:?}");
        }
    }

    #[test]
    fn forms_agree_against_bruteforce() {
        let q = query(1, &[2, 3, 4], &[0, 1, 2]);
        let shape = HookShape::new(9, 1).unwrap();
        let bf = spherical_bruteforce(&shape, q.blocks(), &q.group_element()).unwrap();
        assert_eq!(bf, rat(11, 12));
        assert_eq!(spherical_reciprocal(&q), bf);
    }

    #[test]
    fn singleton_support_needs_permissive_entry() {
        let q = query(1, &[2, 3, 4], &[1]);
        assert!(matches!(spherical_product(&q), Err(Error::SingletonSupport)));
        // Both forms still return the multiplicity binom(b+m, b) there.
        assert_eq!(spherical_product_permissive(&q), int(2));
        assert_eq!(spherical_reciprocal(&q), int(2));
        assert_eq!(invariant_multiplicity(&q), int(2));
    }

    #[test]
    fn no_invariants_rejected_at_construction() {
        let blocks = BlockStructure::new(vec![2, 3]).unwrap();
        let support = SupportSet::new(vec![0]).unwrap();
        let err = SphericalQuery::new(3, blocks, support).unwrap_err();
        assert_eq!(err, Error::NoInvariants { b: 3, p: 2 });
    }

    #[test]
    fn normalization_preserves_value() {
        let q = query(1, &[2, 3, 4], &[1, 2]);
        let n = q.normalize_support();
        assert_eq!(n.blocks().sizes(), &[3, 4, 2]);
        assert_eq!(n.support().members(), &[0, 1]);
        assert_eq!(spherical_reciprocal(&q), spherical_reciprocal(&n));
        // And the brute-force values agree too, on their own group elements.
        let shape = HookShape::new(9, 1).unwrap();
        let bf_q = spherical_bruteforce(&shape, q.blocks(), &q.group_element()).unwrap();
        let bf_n = spherical_bruteforce(&shape, n.blocks(), &n.group_element()).unwrap();
        assert_eq!(bf_q, bf_n);
        assert_eq!(bf_q, rat(17, 12));
    }

    #[test]
    fn special_unique_invariant_matches_general() {
        // m = 0 instances: p = b + 1.
        for sizes in [vec![2, 3], vec![3, 3, 2], vec![2, 2, 2, 3]] {
            let p = sizes.len();
            let b = p - 1;
            let q = query(b, &sizes, &(0..p).collect::<Vec<_>>());
            assert_eq!(special::unique_invariant(&sizes), spherical_reciprocal(&q));
        }
        // Hand value: b=1, blocks (2,3): (e_2(1,2) - 1)/6 = (2-1)/6.
        assert_eq!(special::unique_invariant(&[2, 3]), rat(1, 6));
    }

    #[test]
    fn special_one_excess_matches_general() {
        for sizes in [vec![2, 3, 4], vec![3, 2, 2], vec![2, 2, 2, 2]] {
            let p = sizes.len();
            let b = p - 2;
            let q = query(b, &sizes, &(0..p).collect::<Vec<_>>());
            assert_eq!(special::one_excess_full_support(b, &sizes), spherical_reciprocal(&q));
        }
    }

    #[test]
    fn special_full_support_matches_general() {
        for (b, sizes) in [(0usize, vec![2, 3]), (1, vec![2, 2, 3]), (2, vec![3, 2, 2, 2])] {
            let p = sizes.len();
            let m = p - 1 - b;
            let q = query(b, &sizes, &(0..p).collect::<Vec<_>>());
            assert_eq!(special::full_support(b, m, &sizes), spherical_reciprocal(&q));
        }
    }

    #[test]
    fn special_one_leg_matches_general() {
        let q = query(1, &[2, 3, 4], &[0, 1, 2]);
        assert_eq!(special::one_leg(3, &[2, 3, 4]), rat(11, 12));
        assert_eq!(special::one_leg(3, &[2, 3, 4]), spherical_reciprocal(&q));
        let q = query(1, &[2, 3, 4], &[1, 2]);
        assert_eq!(special::one_leg(3, &[3, 4]), spherical_reciprocal(&q));
    }

    #[test]
    fn special_unit_blocks_is_the_plain_character() {
        // All n_i = 1: the value is chi of an ell-cycle in S_p for shape
        // [p-b, 1^b]. Sign case N = b + 1: full support gives (-1)^(ell+1)
        // ... = (-1)^b for ell = p = b + 1.
        for p in 1..=6usize {
            for b in 0..p {
                let m = p - 1 - b;
                for ell in 1..=p {
                    let sizes = vec![1usize; p];
                    let q = query(b, &sizes, &(0..ell).collect::<Vec<_>>());
                    assert_eq!(
                        special::unit_blocks(b, m, ell),
                        spherical_reciprocal(&q),
                        "p={p} b={b} ell={ell}"
                    );
                }
            }
        }
        // Spot value: the sign representation case b = p - 1, ell = p.
        assert_eq!(special::unit_blocks(4, 0, 5), int(1));
        assert_eq!(special::unit_blocks(3, 0, 4), int(-1));
    }
}
