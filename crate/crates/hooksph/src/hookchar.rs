//! Irreducible characters of the symmetric group on hook shapes, their
//! dimensions, and the brute-force spherical average over a Young subgroup.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::perm::{BlockStructure, CycleType, Permutation};
use crate::scalar::Rational;
use crate::symfunc::choose;
use crate::Error;

/// Hook partition [n - b, 1^b] of n, with 0 <= b <= n - 1 legs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HookShape {
    n: usize,
    b: usize,
}

impl HookShape {
    pub fn new(n: usize, b: usize) -> Result<Self, Error> {
        if n == 0 || b + 1 > n {
            return Err(Error::InvalidShape { n, b });
        }
        Ok(HookShape { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of boxes below the first row.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Length of the first row, n - b.
    pub fn arm(&self) -> usize {
        self.n - self.b
    }

    /// The partition as a descending part list.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.b + 1);
        parts.push(self.n - self.b);
        parts.extend(core::iter::repeat(1).take(self.b));
        parts
    }
}

/// Dimension of the hook irreducible, binom(n-1, b): choices of leg entries
/// among 2..n in a standard filling.
pub fn hook_dimension(shape: &HookShape) -> BigInt {
    choose(shape.n - 1, shape.b)
}

/// Character value of the hook irreducible on a conjugacy class, by the
/// border-strip recursion on beta-sets.
pub fn hook_character(shape: &HookShape, class: &CycleType) -> Result<BigInt, Error> {
    if class.total() != shape.n {
        return Err(Error::WrongTotal { total: class.total(), expected: shape.n });
    }
    Ok(character_general(&shape.parts(), class.parts()))
}

/// Murnaghan-Nakayama over an arbitrary partition, used on hooks above and
/// exercised against an independent trace oracle in the tests. The beta-set
/// encodes the shape as first-column hook lengths; removing a border strip
/// of size r is moving one bead down by r, with sign from the beads jumped.
fn character_general(lambda: &[usize], class_parts: &[usize]) -> BigInt {
    let rows = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (rows - 1 - i))
        .collect();
    mn_recurse(&beta, class_parts)
}

fn mn_recurse(beta: &[usize], parts: &[usize]) -> BigInt {
    let Some((&r, rest)) = parts.split_first() else {
        return BigInt::one();
    };
    let mut total = BigInt::zero();
    for (idx, &bi) in beta.iter().enumerate() {
        if bi < r {
            continue;
        }
        let target = bi - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| target < x && x < bi).count();
        let mut next: Vec<usize> = beta.to_vec();
        next[idx] = target;
        let sub = mn_recurse(&next, rest);
        if jumped % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

/// Counts cycle types of g h over all h in the Young subgroup. Shared by the
/// brute-force average so the character is evaluated once per class rather
/// than once per element.
pub fn class_histogram(blocks: &BlockStructure, g: &Permutation) -> Result<BTreeMap<CycleType, u64>, Error> {
    if g.degree() != blocks.total() {
        return Err(Error::SizeMismatch { left: g.degree(), right: blocks.total() });
    }
    let mut hist = BTreeMap::new();
    for h in blocks.elements() {
        *hist.entry(g.compose(&h).cycle_type()).or_insert(0u64) += 1;
    }
    Ok(hist)
}

/// Spherical value by definition: the character averaged over one coset,
/// (1/#G) sum_h chi(g h). Exponential in the block sizes; the closed forms
/// in the spherical module are the production path.
pub fn spherical_bruteforce(shape: &HookShape, blocks: &BlockStructure, g: &Permutation) -> Result<Rational, Error> {
    if blocks.total() != shape.n {
        return Err(Error::SizeMismatch { left: blocks.total(), right: shape.n });
    }
    let hist = class_histogram(blocks, g)?;
    let mut acc = BigInt::zero();
    for (class, count) in &hist {
        acc += hook_character(shape, class)? * BigInt::from(*count);
    }
    Ok(Rational::new(acc, blocks.order()))
}
