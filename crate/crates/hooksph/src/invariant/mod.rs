//! Polynomial-side oracle for the spherical values: an explicit basis of
//! subgroup-invariant alternating sums, its Gram matrix under the
//! monomial-orthonormal inner product, and the trace that recovers the
//! spherical value without any character theory. Also home to the
//! alternating-sum and Jucys-Murphy identities the construction rests on,
//! and to a trace-based character oracle independent of the border-strip
//! recursion.

mod mpoly;

pub use mpoly::MultiPoly;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;
use num_traits::Zero;

use crate::linalg::{solve_in_span, Matrix};
use crate::perm::{BlockStructure, Permutation};
use crate::scalar::{int, Rational};
use crate::Error;

/// Product of differences prod_{r<s} (x_{pos_r} - x_{pos_s}); one position
/// (or none) gives the constant 1. Swapping two positions negates it.
pub fn delta(vars: usize, positions: &[usize]) -> Result<MultiPoly, Error> {
    let mut seen = vec![false; vars];
    for &p in positions {
        if p >= vars {
            return Err(Error::PositionOutOfRange { position: p, degree: vars });
        }
        if seen[p] {
            return Err(Error::RepeatedPosition { position: p });
        }
        seen[p] = true;
    }
    let mut out = MultiPoly::constant(vars, int(1));
    for r in 0..positions.len() {
        for s in r + 1..positions.len() {
            let diff = MultiPoly::variable(vars, positions[r])?
                .sub(&MultiPoly::variable(vars, positions[s])?);
            out = out.mul(&diff);
        }
    }
    Ok(out)
}

/// Which of the first p-1 blocks a basis element omits; the kept b blocks
/// plus the last block each contribute one coordinate to every difference
/// product in the sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InvariantLabel {
    pub omitted: Vec<usize>,
}

/// The invariant basis: one element per way of omitting m = p - 1 - b of
/// the first p - 1 blocks. Each element sums delta over one coordinate from
/// every kept block and one from the last block, so it is subgroup-invariant
/// by construction. Its length is always binom(b+m, b), which the
/// verification suite checks against the multiplicity.
pub fn xi_basis(b: usize, blocks: &BlockStructure) -> Result<Vec<(InvariantLabel, MultiPoly)>, Error> {
    let p = blocks.num_blocks();
    if b + 1 > p {
        return Err(Error::NoInvariants { b, p });
    }
    let m = p - 1 - b;
    let n = blocks.total();
    let mut out = Vec::new();
    for omitted in (0..p - 1).combinations(m) {
        let kept: Vec<usize> = (0..p - 1).filter(|j| !omitted.contains(j)).collect();
        let mut xi = MultiPoly::zero(n);
        let coordinate_blocks: Vec<usize> = kept.iter().copied().chain([p - 1]).collect();
        for choice in coordinate_blocks
            .iter()
            .map(|&j| blocks.interval(j))
            .multi_cartesian_product()
        {
            xi = xi.add(&delta(n, &choice)?);
        }
        out.push((InvariantLabel { omitted }, xi));
    }
    Ok(out)
}

/// Averages f over the Young subgroup. Idempotent, and fixes exactly the
/// subgroup-invariant polynomials.
pub fn symmetrize(f: &MultiPoly, blocks: &BlockStructure) -> Result<MultiPoly, Error> {
    if f.vars() != blocks.total() {
        return Err(Error::SizeMismatch { left: f.vars(), right: blocks.total() });
    }
    let mut acc = MultiPoly::zero(f.vars());
    for h in blocks.elements() {
        acc = acc.add(&f.permute_vars(&h));
    }
    Ok(acc.scale(&(int(1) / Rational::from_integer(blocks.order()))))
}

/// Inner product making the monomials orthonormal.
pub fn inner(f: &MultiPoly, g: &MultiPoly) -> Rational {
    let (small, large) = if f.num_terms() <= g.num_terms() { (f, g) } else { (g, f) };
    let mut acc = Rational::zero();
    for (e, c) in small.terms() {
        let d = large.coeff(e);
        if !d.is_zero() {
            acc += c * &d;
        }
    }
    acc
}

/// Inner product with monomial weights given by an exponent function; a
/// weight depending only on the sorted exponent vector is symmetric-group
/// invariant, which is what the weighted cross-checks use.
pub fn inner_weighted(f: &MultiPoly, g: &MultiPoly, weight: &dyn Fn(&[u32]) -> Rational) -> Rational {
    let (small, large) = if f.num_terms() <= g.num_terms() { (f, g) } else { (g, f) };
    let mut acc = Rational::zero();
    for (e, c) in small.terms() {
        let d = large.coeff(e);
        if !d.is_zero() {
            acc += c * &d * weight(e);
        }
    }
    acc
}

pub fn gram_matrix(basis: &[MultiPoly]) -> Matrix {
    Matrix::from_fn(basis.len(), basis.len(), |i, j| inner(&basis[i], &basis[j]))
}

/// Spherical value from pure linear algebra: with M the Gram matrix and
/// T_ij = <g . xi_j, xi_i>, the value is tr(M^{-1} T). Independent of both
/// closed forms and of the character recursion.
pub fn spherical_via_gram(b: usize, blocks: &BlockStructure, g: &Permutation) -> Result<Rational, Error> {
    spherical_via_gram_weighted(b, blocks, g, &|_| int(1))
}

/// Same trace with a weighted (still invariant) inner product; the value
/// must not depend on the weights, which is one of the cross-checks.
pub fn spherical_via_gram_weighted(
    b: usize,
    blocks: &BlockStructure,
    g: &Permutation,
    weight: &dyn Fn(&[u32]) -> Rational,
) -> Result<Rational, Error> {
    if g.degree() != blocks.total() {
        return Err(Error::SizeMismatch { left: g.degree(), right: blocks.total() });
    }
    let basis: Vec<MultiPoly> = xi_basis(b, blocks)?.into_iter().map(|(_, f)| f).collect();
    let m = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        inner_weighted(&basis[i], &basis[j], weight)
    });
    let moved: Vec<MultiPoly> = basis.iter().map(|f| f.permute_vars(g)).collect();
    let t = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        inner_weighted(&moved[j], &basis[i], weight)
    });
    let coeffs = m.solve(&t).map_err(|_| Error::SingularGram)?;
    Ok(coeffs.trace())
}

/// Spherical value by expanding the symmetrized translates back in the
/// basis: the trace of the matrix B with rho(g . xi_j) = sum_i B_ij xi_i.
/// Fails with NotInSpan if the translates leave the span, which would
/// falsify the invariant-space description itself.
pub fn spherical_via_expansion(b: usize, blocks: &BlockStructure, g: &Permutation) -> Result<Rational, Error> {
    if g.degree() != blocks.total() {
        return Err(Error::SizeMismatch { left: g.degree(), right: blocks.total() });
    }
    let basis: Vec<MultiPoly> = xi_basis(b, blocks)?.into_iter().map(|(_, f)| f).collect();
    let index = MonomialIndex::from_polys(basis.iter());
    let a = index.matrix_of(&basis)?;
    let mut acc = Rational::zero();
    for (j, f) in basis.iter().enumerate() {
        let translated = symmetrize(&f.permute_vars(g), blocks)?;
        let v = index.vector_of(&translated)?;
        let coeffs = solve_in_span(&a, &v)?;
        acc += &coeffs[j];
    }
    Ok(acc)
}

/// Writes f as coordinates over the given basis, exactly; NotInSpan if no
/// representation exists.
pub fn expand_in_basis(f: &MultiPoly, basis: &[MultiPoly]) -> Result<Vec<Rational>, Error> {
    let index = MonomialIndex::from_polys(basis.iter().chain(core::iter::once(f)));
    let a = index.matrix_of(basis)?;
    let v = index.vector_of(f)?;
    solve_in_span(&a, &v)
}

/// The alternating sum over j of (-1)^(j+1) delta(all of x_1..x_{b+2}
/// except x_j), as a polynomial in b+2 variables. Identically zero; the
/// tests keep both the structural check and random evaluations.
pub fn alternating_delta_sum(b: usize) -> MultiPoly {
    let vars = b + 2;
    let mut acc = MultiPoly::zero(vars);
    for j in 0..vars {
        let positions: Vec<usize> = (0..vars).filter(|&r| r != j).collect();
        let term = delta(vars, &positions).expect("positions are distinct and in range");
        // 1-based sign (-1)^j, so 0-based slot j contributes (-1)^(j+1).
        acc = if j % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
    }
    acc
}

/// Checks that the first-coordinates difference product is a simultaneous
/// eigenfunction of the partial-transposition sums omega_i = sum_{j<i} (j i),
/// with eigenvalue -i for i <= b and i - b for i > b (0-based). This pins
/// the content structure of the hook isotype on its highest weight vector.
pub fn check_jucys_murphy(n: usize, b: usize) -> Result<bool, Error> {
    if b + 1 > n {
        return Err(Error::InvalidShape { n, b });
    }
    let positions: Vec<usize> = (0..=b).collect();
    let f = delta(n, &positions)?;
    for i in 0..n {
        let mut lhs = MultiPoly::zero(n);
        for j in 0..i {
            lhs = lhs.add(&f.permute_vars(&Permutation::transposition(n, j, i)));
        }
        let content = if i <= b { -(i as i64) } else { (i - b) as i64 };
        if lhs != f.scale(&int(content)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Character of the isotype [n-b, 1^b] as an honest matrix trace: the span
/// of all (b+1)-coordinate difference products carries the isotype, and the
/// trace of w acting on a maximal independent subset is the character. This
/// shares nothing with the border-strip recursion, so their agreement is a
/// real two-route check.
pub fn alternating_rep_character(n: usize, b: usize, w: &Permutation) -> Result<Rational, Error> {
    if b + 1 > n {
        return Err(Error::InvalidShape { n, b });
    }
    if w.degree() != n {
        return Err(Error::SizeMismatch { left: w.degree(), right: n });
    }
    let candidates: Vec<MultiPoly> = (0..n)
        .combinations(b + 1)
        .map(|t| delta(n, &t))
        .collect::<Result<_, _>>()?;
    let index = MonomialIndex::from_polys(candidates.iter());
    let columns: Vec<Vec<Rational>> = candidates
        .iter()
        .map(|f| index.vector_of(f))
        .collect::<Result<_, _>>()?;
    let chosen = select_independent(&columns);
    let basis: Vec<MultiPoly> = chosen.iter().map(|&i| candidates[i].clone()).collect();
    let a = index.matrix_of(&basis)?;
    let mut trace = Rational::zero();
    for (j, f) in basis.iter().enumerate() {
        let moved = f.permute_vars(w);
        let coeffs = solve_in_span(&a, &index.vector_of(&moved)?)?;
        trace += &coeffs[j];
    }
    Ok(trace)
}

/// Dimension of the span used by [`alternating_rep_character`].
pub fn alternating_rep_dimension(n: usize, b: usize) -> Result<usize, Error> {
    if b + 1 > n {
        return Err(Error::InvalidShape { n, b });
    }
    let candidates: Vec<MultiPoly> = (0..n)
        .combinations(b + 1)
        .map(|t| delta(n, &t))
        .collect::<Result<_, _>>()?;
    let index = MonomialIndex::from_polys(candidates.iter());
    let columns: Vec<Vec<Rational>> = candidates
        .iter()
        .map(|f| index.vector_of(f))
        .collect::<Result<_, _>>()?;
    Ok(select_independent(&columns).len())
}

/// Fixed enumeration of the monomials appearing across a family of
/// polynomials, so they can be treated as exact coordinate vectors.
struct MonomialIndex {
    slots: BTreeMap<Vec<u32>, usize>,
}

impl MonomialIndex {
    fn from_polys<'a>(polys: impl Iterator<Item = &'a MultiPoly>) -> Self {
        let mut slots = BTreeMap::new();
        for f in polys {
            for (e, _) in f.terms() {
                let next = slots.len();
                slots.entry(e.clone()).or_insert(next);
            }
        }
        MonomialIndex { slots }
    }

    fn vector_of(&self, f: &MultiPoly) -> Result<Vec<Rational>, Error> {
        let mut v = vec![Rational::zero(); self.slots.len()];
        for (e, c) in f.terms() {
            match self.slots.get(e) {
                Some(&i) => v[i] = c.clone(),
                None => return Err(Error::NotInSpan),
            }
        }
        Ok(v)
    }

    fn matrix_of(&self, polys: &[MultiPoly]) -> Result<Matrix, Error> {
        let cols: Vec<Vec<Rational>> = polys.iter().map(|f| self.vector_of(f)).collect::<Result<_, _>>()?;
        Ok(Matrix::from_fn(self.slots.len(), polys.len(), |i, j| cols[j][i].clone()))
    }
}

/// Greedy exact column selection: indices of a maximal independent subset.
fn select_independent(columns: &[Vec<Rational>]) -> Vec<usize> {
    let mut reduced: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        for (p, r) in &reduced {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (vi, ri) in v.iter_mut().zip(r) {
                    *vi = &*vi - &(&f * ri);
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = int(1) / v[p].clone();
            for vi in v.iter_mut() {
                *vi = &*vi * &inv;
            }
            reduced.push((p, v));
            chosen.push(idx);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hookchar::{hook_character, hook_dimension, spherical_bruteforce, HookShape};
    use crate::perm::{support_cycle, CycleType, SupportSet};
    use crate::scalar::rat;
    use crate::spherical::{spherical_reciprocal, SphericalQuery};
    use crate::symfunc::choose;
    use alloc::string::ToString;

    #[test]
    fn delta_basics() {
        let d = delta(3, &[0, 1]).unwrap();
        assert_eq!(d.coeff(&[1, 0, 0]), int(1));
        assert_eq!(d.coeff(&[0, 1, 0]), int(-1));
        assert_eq!(delta(3, &[1, 0]).unwrap(), d.neg());
        assert!(delta(3, &[2]).unwrap().eval(&[int(0), int(0), int(0)]) == int(1));
        assert!(delta(3, &[3]).is_err());
        assert!(delta(3, &[1, 1]).is_err());
        // Vandermonde at (0, 1, 2): (0-1)(0-2)(1-2) = -2.
        let v = delta(3, &[0, 1, 2]).unwrap();
        assert_eq!(v.eval(&[int(0), int(1), int(2)]), int(-2));
    }

    #[test]
    fn symmetrize_worked_example() {
        let blocks = BlockStructure::new(vec![2, 1]).unwrap();
        let f = MultiPoly::variable(3, 0).unwrap();
        let s = symmetrize(&f, &blocks).unwrap();
        let half = MultiPoly::variable(3, 0)
            .unwrap()
            .add(&MultiPoly::variable(3, 1).unwrap())
            .scale(&rat(1, 2));
        assert_eq!(s, half);
        // Idempotent.
        assert_eq!(symmetrize(&s, &blocks).unwrap(), s);
    }

    #[test]
    fn xi_basis_shape_and_invariance() {
        // Unit blocks, p = 4, b = 2: three labels, binom(3, 2).
        let blocks = BlockStructure::new(vec![1, 1, 1, 1]).unwrap();
        let basis = xi_basis(2, &blocks).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis.len(), choose(3, 2).to_string().parse::<usize>().unwrap());

        let blocks = BlockStructure::new(vec![2, 3, 4]).unwrap();
        let basis = xi_basis(1, &blocks).unwrap();
        assert_eq!(basis.len(), 2);
        for (_, xi) in &basis {
            assert_eq!(&symmetrize(xi, &blocks).unwrap(), xi);
        }

        assert!(matches!(xi_basis(3, &BlockStructure::new(vec![2, 3]).unwrap()), Err(Error::NoInvariants { .. })));
    }

    #[test]
    fn gram_route_worked_values() {
        // Shape [2,1], blocks (2,1), g = (1 3): brute force gives -1/2.
        let blocks = BlockStructure::new(vec![2, 1]).unwrap();
        let g = Permutation::parse_cycles(3, "(1 3)").unwrap();
        assert_eq!(spherical_via_gram(1, &blocks, &g).unwrap(), rat(-1, 2));

        let blocks = BlockStructure::new(vec![2, 3, 4]).unwrap();
        let support = SupportSet::new(vec![0, 1, 2]).unwrap();
        let g = support_cycle(&blocks, &support).unwrap();
        assert_eq!(spherical_via_gram(1, &blocks, &g).unwrap(), rat(11, 12));
    }

    #[test]
    fn gram_and_expansion_routes_agree() {
        for (b, sizes, support) in [
            (1usize, vec![2, 1], vec![0, 1]),
            (1, vec![2, 2, 2], vec![0, 2]),
            (2, vec![1, 2, 2], vec![1, 2]),
            (0, vec![2, 3], vec![0, 1]),
        ] {
            let blocks = BlockStructure::new(sizes).unwrap();
            let support = SupportSet::new(support).unwrap();
            let g = support_cycle(&blocks, &support).unwrap();
            let a = spherical_via_gram(b, &blocks, &g).unwrap();
            let c = spherical_via_expansion(b, &blocks, &g).unwrap();
            assert_eq!(a, c);
            let q = SphericalQuery::new(b, blocks, support).unwrap();
            assert_eq!(a, spherical_reciprocal(&q));
        }
    }

    #[test]
    fn weighted_inner_product_gives_same_value() {
        // Weight each monomial by a positive function of its sorted
        // exponents; the trace must not change.
        let weight = |e: &[u32]| {
            let mut s: Vec<u32> = e.to_vec();
            s.sort_unstable();
            let mut acc = int(1);
            for (i, &a) in s.iter().enumerate() {
                acc *= rat((2 + i as i64) * (1 + a as i64), 3);
            }
            acc
        };
        let blocks = BlockStructure::new(vec![2, 1]).unwrap();
        let g = Permutation::parse_cycles(3, "(1 3)").unwrap();
        assert_eq!(spherical_via_gram_weighted(1, &blocks, &g, &weight).unwrap(), rat(-1, 2));

        let blocks = BlockStructure::new(vec![2, 2, 1]).unwrap();
        let g = support_cycle(&blocks, &SupportSet::new(vec![0, 2]).unwrap()).unwrap();
        assert_eq!(
            spherical_via_gram_weighted(1, &blocks, &g, &weight).unwrap(),
            spherical_via_gram(1, &blocks, &g).unwrap()
        );
    }

    #[test]
    fn alternating_sum_vanishes() {
        for b in 0..=4usize {
            assert!(alternating_delta_sum(b).is_zero(), "b = {b}");
        }
    }

    #[test]
    fn jucys_murphy_contents() {
        for n in 1..=5usize {
            for b in 0..n.min(4) {
                assert_eq!(check_jucys_murphy(n, b), Ok(true), "n={n} b={b}");
            }
        }
        assert!(check_jucys_murphy(2, 3).is_err());
    }

    #[test]
    fn trace_character_matches_recursion_small() {
        for n in 1..=5usize {
            let mut reps: BTreeMap<CycleType, Permutation> = BTreeMap::new();
            for w in BlockStructure::new(vec![n]).unwrap().elements() {
                reps.entry(w.cycle_type()).or_insert(w);
            }
            for b in 0..n {
                let shape = HookShape::new(n, b).unwrap();
                assert_eq!(
                    alternating_rep_dimension(n, b).unwrap(),
                    hook_dimension(&shape).to_string().parse::<usize>().unwrap()
                );
                for (class, w) in &reps {
                    let expected = hook_character(&shape, class).unwrap();
                    let got = alternating_rep_character(n, b, w).unwrap();
                    assert_eq!(got, Rational::from_integer(expected), "n={n} b={b} w={w}");
                }
            }
        }
    }

    #[test]
    fn gram_matches_bruteforce_small() {
        for (b, sizes) in [(1usize, vec![2, 2]), (1, vec![3, 1]), (2, vec![1, 1, 2])] {
            let blocks = BlockStructure::new(sizes).unwrap();
            let n = blocks.total();
            let shape = HookShape::new(n, b).unwrap();
            for support_len in 1..=blocks.num_blocks() {
                let support = SupportSet::new((0..support_len).collect()).unwrap();
                let g = support_cycle(&blocks, &support).unwrap();
                assert_eq!(
                    spherical_via_gram(b, &blocks, &g).unwrap(),
                    spherical_bruteforce(&shape, &blocks, &g).unwrap(),
                );
            }
        }
    }

    #[test]
    fn expand_in_basis_round_trips() {
        let blocks = BlockStructure::new(vec![1, 1, 2]).unwrap();
        let basis: Vec<MultiPoly> = xi_basis(1, &blocks).unwrap().into_iter().map(|(_, f)| f).collect();
        assert_eq!(basis.len(), 2);
        let f = basis[0].scale(&rat(3, 2)).add(&basis[1].scale(&int(-2)));
        assert_eq!(expand_in_basis(&f, &basis).unwrap(), vec![rat(3, 2), int(-2)]);
        let outside = MultiPoly::variable(4, 0).unwrap();
        assert!(expand_in_basis(&outside, &basis).is_err());
    }

    #[test]
    fn class_average_of_character_is_class_size_weighted() {
        // Cross-check the trace oracle on a full character-orthogonality
        // relation for one shape: sum over all of S_4 of chi(w)^2 = |S_4|.
        let n = 4;
        let shape = HookShape::new(n, 1).unwrap();
        let mut acc = Rational::zero();
        for w in BlockStructure::new(vec![n]).unwrap().elements() {
            let chi = Rational::from_integer(hook_character(&shape, &w.cycle_type()).unwrap());
            acc += &chi * &chi;
        }
        assert_eq!(acc, int(24));
    }
}
