//! Operator-side oracle: the commuting operators x_i D_i built from Dunkl
//! operators at a sampled rational coupling, their power sums restricted to
//! a homogeneous monomial space, and the trace of that power sum compressed
//! to the isotypic part of a monomial orbit. Everything is an exact matrix
//! computation; comparing these traces against the combinatorial eigenvalue
//! sum at enough sample points decides polynomial identities in kappa.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::hookchar::{hook_character, hook_dimension, HookShape};
use crate::linalg::Matrix;
use crate::perm::{BlockStructure, CycleType};
use crate::scalar::Rational;
use crate::spectrum::DegreeProfile;
use crate::symfunc::factorial;
use crate::Error;

/// Ordered basis of all monomials of a fixed total degree in n variables.
#[derive(Debug, Clone)]
pub struct MonomialSpace {
    vars: usize,
    degree: u32,
    basis: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl MonomialSpace {
    pub fn new(vars: usize, degree: u32) -> Self {
        assert!(vars > 0);
        let mut basis = Vec::new();
        let mut current = vec![0u32; vars];
        enumerate(&mut basis, &mut current, 0, degree);
        let index = basis.iter().cloned().zip(0..).collect();
        MonomialSpace { vars, degree, basis, index }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn exponents(&self, i: usize) -> &[u32] {
        &self.basis[i]
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }
}

// Exponent vectors in lexicographic descending order of the first slots.
fn enumerate(basis: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, slot: usize, remaining: u32) {
    if slot + 1 == current.len() {
        current[slot] = remaining;
        basis.push(current.clone());
        return;
    }
    for d in (0..=remaining).rev() {
        current[slot] = d;
        enumerate(basis, current, slot + 1, remaining - d);
    }
    current[slot] = 0;
}

/// Column-sparse form of x_i D_i on the space at a fixed rational kappa:
/// Euler term beta_i on the diagonal of each column, plus kappa-weighted
/// exponent transfers between slot i and every other slot.
fn xdx_columns(space: &MonomialSpace, var: usize, kappa: &Rational) -> Vec<Vec<(usize, Rational)>> {
    let mut cols = Vec::with_capacity(space.dim());
    for col in 0..space.dim() {
        let beta = space.exponents(col).to_vec();
        let mut entries: BTreeMap<usize, Rational> = BTreeMap::new();
        let a = beta[var];
        if a > 0 {
            entries.insert(col, Rational::from_integer(a.into()));
        }
        if !kappa.is_zero() {
            for j in 0..space.vars() {
                if j == var {
                    continue;
                }
                let bj = beta[j];
                if a > bj {
                    // x_i (x^beta - s_ij x^beta)/(x_i - x_j): exponent pairs
                    // (bj + t + 1, a - 1 - t) for t in 0..a-bj.
                    for t in 0..(a - bj) {
                        let mut e = beta.clone();
                        e[var] = bj + t + 1;
                        e[j] = a - 1 - t;
                        let row = space.index_of(&e).expect("degree is preserved");
                        let slot = entries.entry(row).or_insert_with(Rational::zero);
                        *slot = &*slot + kappa;
                    }
                } else if a < bj {
                    for t in 0..(bj - a) {
                        let mut e = beta.clone();
                        e[var] = a + t + 1;
                        e[j] = bj - 1 - t;
                        let row = space.index_of(&e).expect("degree is preserved");
                        let slot = entries.entry(row).or_insert_with(Rational::zero);
                        *slot = &*slot - kappa;
                    }
                }
            }
        }
        cols.push(entries.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    cols
}

/// Dense matrix of x_i D_i in the monomial basis.
pub fn xdx_matrix(space: &MonomialSpace, var: usize, kappa: &Rational) -> Matrix {
    let cols = xdx_columns(space, var, kappa);
    let mut m = Matrix::zeros(space.dim(), space.dim());
    for (col, entries) in cols.iter().enumerate() {
        for (row, c) in entries {
            m.set(*row, col, c.clone());
        }
    }
    m
}

/// P_k = sum_i (x_i D_i)^k as a dense matrix.
pub fn pk_matrix(space: &MonomialSpace, k: usize, kappa: &Rational) -> Matrix {
    let mut acc = Matrix::zeros(space.dim(), space.dim());
    for i in 0..space.vars() {
        acc = acc.add(&xdx_matrix(space, i, kappa).pow(k));
    }
    acc
}

fn apply_columns(cols: &[Vec<(usize, Rational)>], v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for (col, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (row, c) in &cols[col] {
            out[*row] = &out[*row] + &(c * x);
        }
    }
    out
}

/// Projector onto the [n-b, 1^b] isotypic component of the space, as the
/// character-weighted average of the permutation action. Dense; meant for
/// small spaces and structural tests.
pub fn isotype_projector(space: &MonomialSpace, shape: &HookShape) -> Result<Matrix, Error> {
    let n = space.vars();
    if shape.n() != n {
        return Err(Error::SizeMismatch { left: shape.n(), right: n });
    }
    let full = BlockStructure::new(vec![n]).expect("n > 0");
    let mut chars: BTreeMap<CycleType, Rational> = BTreeMap::new();
    let mut acc = Matrix::zeros(space.dim(), space.dim());
    for w in full.elements() {
        let class = w.cycle_type();
        let chi = chars
            .entry(class.clone())
            .or_insert_with(|| Rational::from_integer(hook_character(shape, &class).expect("totals match")))
            .clone();
        if chi.is_zero() {
            continue;
        }
        // P(w) x^gamma = x^alpha with alpha_{w(i)} = gamma_i.
        for gamma in 0..space.dim() {
            let e = space.exponents(gamma);
            let mut alpha = vec![0u32; n];
            for (i, &a) in e.iter().enumerate() {
                alpha[w.apply(i)] = a;
            }
            let row = space.index_of(&alpha).expect("degree preserved");
            acc.add_assign_at(row, gamma, &chi);
        }
    }
    let scale = Rational::from_integer(hook_dimension(shape)) / Rational::from_integer(factorial(n));
    Ok(acc.scale(&scale))
}

/// Indices of the orbit of the profile's exponent vector inside its space.
pub fn orbit_indices(space: &MonomialSpace, profile: &DegreeProfile) -> Result<Vec<usize>, Error> {
    if profile.num_vars() != space.vars() {
        return Err(Error::SizeMismatch { left: profile.num_vars(), right: space.vars() });
    }
    if profile.total_degree() != space.degree() {
        return Err(Error::SizeMismatch {
            left: profile.total_degree() as usize,
            right: space.degree() as usize,
        });
    }
    let lambda = profile.exponents();
    let n = space.vars();
    let full = BlockStructure::new(vec![n]).expect("n > 0");
    let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
    for w in full.elements() {
        let mut e = vec![0u32; n];
        for (i, &a) in lambda.iter().enumerate() {
            e[w.apply(i)] = a;
        }
        set.insert(e);
    }
    Ok(set
        .into_iter()
        .map(|e| space.index_of(&e).expect("orbit stays in the space"))
        .collect())
}

/// Exact trace of Q P_k Q compressed to the isotypic component: with Q the
/// coordinate projection onto the orbit of the profile and Pi the isotype
/// projector, computes tr(Pi Q P_k Q). The projector is supported on the
/// orbit block, so only columns of P_k at orbit indices are ever formed;
/// those come from k sparse applications per orbit point, never a full
/// matrix power.
pub fn isotype_trace(profile: &DegreeProfile, b: usize, k: usize, kappa: &Rational) -> Result<Rational, Error> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let n = profile.num_vars();
    let shape = HookShape::new(n, b)?;
    let space = MonomialSpace::new(n, profile.total_degree());
    let orbit = orbit_indices(&space, profile)?;
    let orbit_pos: BTreeMap<usize, usize> = orbit.iter().copied().zip(0..).collect();

    // Projector block on the orbit: Pi_{alpha gamma} = (dim/n!) sum over w
    // with gamma = alpha o w of chi(w).
    let full = BlockStructure::new(vec![n]).expect("n > 0");
    let mut chars: BTreeMap<CycleType, Rational> = BTreeMap::new();
    let mut block = Matrix::zeros(orbit.len(), orbit.len());
    for w in full.elements() {
        let class = w.cycle_type();
        let chi = chars
            .entry(class.clone())
            .or_insert_with(|| Rational::from_integer(hook_character(&shape, &class).expect("totals match")))
            .clone();
        if chi.is_zero() {
            continue;
        }
        for (a_pos, &alpha_idx) in orbit.iter().enumerate() {
            let alpha = space.exponents(alpha_idx);
            // gamma_j = alpha_{w(j)}.
            let gamma: Vec<u32> = (0..n).map(|j| alpha[w.apply(j)]).collect();
            let gamma_idx = space.index_of(&gamma).expect("orbit stays in the space");
            let g_pos = orbit_pos[&gamma_idx];
            block.add_assign_at(a_pos, g_pos, &chi);
        }
    }
    let scale = Rational::from_integer(hook_dimension(&shape)) / Rational::from_integer(factorial(n));
    let block = block.scale(&scale);

    let operators: Vec<Vec<Vec<(usize, Rational)>>> =
        (0..n).map(|i| xdx_columns(&space, i, kappa)).collect();

    let mut trace = Rational::zero();
    for (a_pos, &alpha_idx) in orbit.iter().enumerate() {
        // Column alpha of P_k, via k sparse applications per operator.
        let mut pk_col = vec![Rational::zero(); space.dim()];
        for cols in &operators {
            let mut v = vec![Rational::zero(); space.dim()];
            v[alpha_idx] = Rational::from_integer(1.into());
            for _ in 0..k {
                v = apply_columns(cols, &v);
            }
            for (slot, x) in pk_col.iter_mut().zip(&v) {
                if !x.is_zero() {
                    *slot = &*slot + x;
                }
            }
        }
        for (g_pos, &gamma_idx) in orbit.iter().enumerate() {
            let pi = block.get(a_pos, g_pos);
            let pk = &pk_col[gamma_idx];
            if !pi.is_zero() && !pk.is_zero() {
                trace += &(pi * pk);
            }
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::spectrum::{eigenvalue_sum, Normalization};

    #[test]
    fn space_enumeration() {
        let s = MonomialSpace::new(3, 2);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.exponents(0), &[2, 0, 0]);
        assert_eq!(s.exponents(5), &[0, 0, 2]);
        assert_eq!(s.index_of(&[1, 0, 1]), Some(2));
        assert_eq!(s.index_of(&[3, 0, 0]), None);
        let s = MonomialSpace::new(4, 5);
        assert_eq!(s.dim(), 56);
    }

    #[test]
    fn xdx_worked_matrix() {
        // Two variables, degree one, kappa = 1/3: x_0 D_0 sends x_0 to
        // (1 + 1/3) x_0 and x_1 to -(1/3) x_0.
        let s = MonomialSpace::new(2, 1);
        let k = rat(1, 3);
        let a0 = xdx_matrix(&s, 0, &k);
        assert_eq!(a0.get(0, 0), &rat(4, 3));
        assert_eq!(a0.get(0, 1), &rat(-1, 3));
        assert_eq!(a0.get(1, 0), &int(0));
        assert_eq!(a0.get(1, 1), &int(0));

        let p1 = pk_matrix(&s, 1, &k);
        assert_eq!(p1.trace(), rat(8, 3));
        assert!(p1.is_symmetric());
    }

    #[test]
    fn pk_at_zero_kappa_is_euler_power() {
        for (vars, degree, k) in [(2usize, 3u32, 2usize), (3, 2, 3), (3, 3, 1)] {
            let s = MonomialSpace::new(vars, degree);
            let p = pk_matrix(&s, k, &int(0));
            for i in 0..s.dim() {
                for j in 0..s.dim() {
                    let expect = if i == j {
                        int(s.exponents(i).iter().map(|&b| (b as i64).pow(k as u32)).sum())
                    } else {
                        int(0)
                    };
                    assert_eq!(p.get(i, j), &expect);
                }
            }
        }
    }

    #[test]
    fn symmetric_polynomials_are_p1_eigenvectors() {
        // P_1 applied to e_1^d-like symmetric vectors: on the full
        // symmetrization of any monomial the eigenvalue is the degree.
        let s = MonomialSpace::new(3, 2);
        let kappa = rat(2, 5);
        let p1 = pk_matrix(&s, 1, &kappa);
        // Vector of all ones is the sum of all degree-2 monomials, a
        // symmetric polynomial.
        let ones = Matrix::from_fn(s.dim(), 1, |_, _| int(1));
        let out = p1.mul(&ones);
        for i in 0..s.dim() {
            assert_eq!(out.get(i, 0), &int(2), "row {i}");
        }
    }

    #[test]
    fn projector_is_idempotent_and_commutes_with_orbit_projection() {
        let s = MonomialSpace::new(3, 2);
        for b in 0..3 {
            let shape = HookShape::new(3, b).unwrap();
            let pi = isotype_projector(&s, &shape).unwrap();
            assert_eq!(pi.mul(&pi), pi, "b = {b}");
            // Q for the orbit of (1,1,0).
            let profile = DegreeProfile::parse("1:2,0:1").unwrap();
            let orbit = orbit_indices(&s, &profile).unwrap();
            let mut q = Matrix::zeros(s.dim(), s.dim());
            for &i in &orbit {
                q.set(i, i, int(1));
            }
            assert_eq!(pi.mul(&q), q.mul(&pi), "b = {b}");
        }
    }

    #[test]
    fn projector_rank_counts_multiplicity() {
        // tr(Pi Q) = multiplicity of the isotype in the orbit module times
        // its dimension.
        let s = MonomialSpace::new(3, 2);
        let profile = DegreeProfile::parse("1:2,0:1").unwrap();
        let orbit = orbit_indices(&s, &profile).unwrap();
        let mut q = Matrix::zeros(s.dim(), s.dim());
        for &i in &orbit {
            q.set(i, i, int(1));
        }
        // b = 1: one copy of the 2-dimensional isotype in the orbit module.
        let pi = isotype_projector(&s, &HookShape::new(3, 1).unwrap()).unwrap();
        assert_eq!(pi.mul(&q).trace(), int(2));
        // b = 2: the sign isotype does not occur.
        let pi = isotype_projector(&s, &HookShape::new(3, 2).unwrap()).unwrap();
        assert_eq!(pi.mul(&q).trace(), int(0));
    }

    #[test]
    fn orbit_indices_are_the_distinct_rearrangements() {
        let s = MonomialSpace::new(3, 2);
        let profile = DegreeProfile::parse("1:2,0:1").unwrap();
        let orbit = orbit_indices(&s, &profile).unwrap();
        assert_eq!(orbit.len(), 3);
        for &i in &orbit {
            let mut e = s.exponents(i).to_vec();
            e.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(e, vec![1, 1, 0]);
        }
    }

    #[test]
    fn trace_matches_hand_values() {
        // Profile 1:1,0:1, b=1, k=1: spectrum 1 + 2 kappa.
        let p = DegreeProfile::parse("1:1,0:1").unwrap();
        assert_eq!(isotype_trace(&p, 1, 1, &rat(1, 3)).unwrap(), rat(5, 3));
        assert_eq!(isotype_trace(&p, 1, 1, &int(0)).unwrap(), int(1));

        // Profile 1:2,0:1, b=1, k=1: spectrum 4 + 6 kappa.
        let p = DegreeProfile::parse("1:2,0:1").unwrap();
        for kappa in [int(0), int(1), rat(1, 2), int(-1)] {
            let expect = int(4) + int(6) * &kappa;
            assert_eq!(isotype_trace(&p, 1, 1, &kappa).unwrap(), expect);
        }

        // Single block of distinct variables: profile 1:3, b=0, k=2 gives
        // 3 at every kappa.
        let p = DegreeProfile::parse("1:3").unwrap();
        for kappa in [int(0), rat(1, 2), int(2)] {
            assert_eq!(isotype_trace(&p, 0, 2, &kappa).unwrap(), int(3));
        }
    }

    #[test]
    fn trace_agrees_with_eigenvalue_sum_at_samples() {
        for (profile, b, k) in [("2:1,0:2", 1usize, 2usize), ("1:2,0:2", 1, 1), ("2:1,1:1,0:1", 2, 2)] {
            let p = DegreeProfile::parse(profile).unwrap();
            let closed = eigenvalue_sum(&p, b, k, Normalization::Plain).unwrap();
            for kappa in [int(0), int(1), int(-1), rat(1, 2), int(2)] {
                assert_eq!(
                    isotype_trace(&p, b, k, &kappa).unwrap(),
                    closed.value.eval(&kappa),
                    "profile {profile} b={b} k={k} kappa={kappa}"
                );
            }
        }
    }
}
