//! Sums of the k-th powers of the commuting-family eigenvalues over the
//! isotypic component attached to a degree profile, as exact polynomials in
//! kappa. The combinatorial closed form lives here; the operator-side
//! oracle it is checked against lives in the dunkl module.

use alloc::string::String;
use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::hookchar::{hook_dimension, HookShape};
use crate::perm::{BlockStructure, SupportSet};
use crate::scalar::{int, KappaPoly, Rational};
use crate::spherical::{invariant_multiplicity, spherical_reciprocal, SphericalQuery};
use crate::symfunc::{choose, complete_sym, factorial};
use crate::Error;

/// Multiset of monomial degrees written as pairs (degree, count) with
/// strictly decreasing degrees and positive counts: the exponent partition
/// grouped by distinct parts. "5:2,3:1,0:3" stands for (5,5,3,0,0,0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pairs: Vec<(u32, usize)>,
}

impl DegreeProfile {
    pub fn new(pairs: Vec<(u32, usize)>) -> Result<Self, Error> {
        if pairs.is_empty() || pairs.iter().any(|&(_, c)| c == 0) {
            return Err(Error::InvalidDegreeProfile);
        }
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::InvalidDegreeProfile);
        }
        Ok(DegreeProfile { pairs })
    }

    /// Parses "d1:n1,d2:n2,..." with strictly decreasing degrees.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut pairs = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let (d, c) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(String::from("expected degree:count pairs")))?;
            let d: u32 = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad degree '{}'", d.trim())))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad count '{}'", c.trim())))?;
            pairs.push((d, c));
        }
        DegreeProfile::new(pairs)
    }

    pub fn pairs(&self) -> &[(u32, usize)] {
        &self.pairs
    }

    /// Number of distinct degrees p.
    pub fn num_blocks(&self) -> usize {
        self.pairs.len()
    }

    /// Number of variables N.
    pub fn num_vars(&self) -> usize {
        self.pairs.iter().map(|&(_, c)| c).sum()
    }

    /// Total degree of the underlying exponent partition.
    pub fn total_degree(&self) -> u32 {
        self.pairs.iter().map(|&(d, c)| d * c as u32).sum()
    }

    /// The block structure induced by the counts.
    pub fn blocks(&self) -> BlockStructure {
        BlockStructure::new(self.pairs.iter().map(|&(_, c)| c).collect()).expect("counts positive")
    }

    /// The full weakly decreasing exponent vector.
    pub fn exponents(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.num_vars());
        for &(d, c) in &self.pairs {
            out.extend(core::iter::repeat(d).take(c));
        }
        out
    }
}

impl core::fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, &(d, c)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", d, c)?;
        }
        Ok(())
    }
}

/// Degrees shifted by the trailing block sizes: block j carries
/// d_j + kappa * (n_{j+1} + ... + n_p), one linear polynomial per block.
pub fn shifted_degrees(profile: &DegreeProfile) -> Vec<KappaPoly> {
    let sizes: Vec<usize> = profile.pairs.iter().map(|&(_, c)| c).collect();
    let mut tail: usize = sizes.iter().sum();
    let mut out = Vec::with_capacity(profile.num_blocks());
    for (j, &(d, _)) in profile.pairs.iter().enumerate() {
        tail -= sizes[j];
        out.push(KappaPoly::linear(int(d as i64), int(tail as i64)));
    }
    out
}

/// Weight attached to a support block: the plain size n, or n!. Which one
/// enters the eigenvalue sum is settled experimentally by the operator
/// oracle; the suite certifies the plain product and the CLI defaults to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// prod over the support of n_a.
    Plain,
    /// prod over the support of n_a!.
    Factorial,
}

impl Normalization {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "plain" => Ok(Normalization::Plain),
            "factorial" => Ok(Normalization::Factorial),
            other => Err(Error::Parse(alloc::format!("unknown normalization '{other}'"))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Normalization::Plain => "plain",
            Normalization::Factorial => "factorial",
        }
    }

    fn weight(&self, sizes: &[usize]) -> Rational {
        let w: BigInt = match self {
            Normalization::Plain => sizes.iter().map(|&n| BigInt::from(n)).product(),
            Normalization::Factorial => sizes.iter().map(|&n| factorial(n)).product(),
        };
        Rational::from_integer(w)
    }
}

/// Eigenvalue-sum output with the context needed to interpret it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumResult {
    pub value: KappaPoly,
    pub normalization: Normalization,
    pub dim_isotype: BigInt,
    pub multiplicity: BigInt,
}

/// Sum of k-th eigenvalue powers over the [N-b, 1^b] isotypic component of
/// the module labeled by the profile:
/// dim tau * sum_{ell} (-kappa)^(ell-1) sum_{#A = ell} chi[A] h_{k+1-ell}(shifted degrees on A) W(A).
///
/// The support size is capped at min(k+1, p) because h with negative index
/// vanishes. Requires k >= 1 and m = p - b - 1 >= 0.
pub fn eigenvalue_sum(
    profile: &DegreeProfile,
    b: usize,
    k: usize,
    normalization: Normalization,
) -> Result<SpectrumResult, Error> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let p = profile.num_blocks();
    if b + 1 > p {
        return Err(Error::NoInvariants { b, p });
    }
    let m = p - 1 - b;
    let n = profile.num_vars();
    let blocks = profile.blocks();
    let sizes = blocks.sizes().to_vec();
    let shifted = shifted_degrees(profile);

    let mut total = KappaPoly::zero();
    let minus_kappa = KappaPoly::linear(int(0), int(-1));
    for ell in 1..=(k + 1).min(p) {
        let mut layer = KappaPoly::zero();
        for support in (0..p).combinations(ell) {
            let sel_sizes: Vec<usize> = support.iter().map(|&j| sizes[j]).collect();
            let sel_shifted: Vec<KappaPoly> = support.iter().map(|&j| shifted[j].clone()).collect();
            let q = SphericalQuery::new(
                b,
                blocks.clone(),
                SupportSet::new(support).expect("combinations are nonempty"),
            )?;
            let chi = if ell == 1 { invariant_multiplicity(&q) } else { spherical_reciprocal(&q) };
            let h = complete_sym(k + 1 - ell, &sel_shifted);
            let term = h.scale(&(chi * normalization.weight(&sel_sizes)));
            layer = layer.add(&term);
        }
        total = total.add(&minus_kappa.pow(ell - 1).mul(&layer));
    }

    let dim_isotype = hook_dimension(&HookShape::new(n, b)?);
    let value = total.scale(&Rational::from_integer(dim_isotype.clone()));
    Ok(SpectrumResult {
        value,
        normalization,
        dim_isotype,
        multiplicity: choose(b + m, b),
    })
}
