//! Sparse multivariate polynomials over the rationals with a symmetric-group
//! action on variables. Exponent vectors key a BTreeMap so representation is
//! canonical and equality is structural.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::perm::Permutation;
use crate::scalar::Rational;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn variable(vars: usize, i: usize) -> Result<Self, Error> {
        if i >= vars {
            return Err(Error::PositionOutOfRange { position: i, degree: vars });
        }
        let mut exps = vec![0; vars];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rational::one());
        Ok(MultiPoly { vars, terms })
    }

    pub fn monomial(vars: usize, exps: Vec<u32>, coeff: Rational) -> Result<Self, Error> {
        if exps.len() != vars {
            return Err(Error::SizeMismatch { left: exps.len(), right: vars });
        }
        let mut p = MultiPoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = MultiPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exps, ca * cb);
            }
        }
        out
    }

    /// The action of w moves the exponent at slot i to slot w(i); on
    /// monomials this is (w . x^a)_{w(i)} = a_i, making the map a left
    /// action compatible with compose.
    pub fn permute_vars(&self, w: &Permutation) -> MultiPoly {
        assert_eq!(self.vars, w.degree());
        let mut out = MultiPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut exps = vec![0; self.vars];
            for (i, &a) in e.iter().enumerate() {
                exps[w.apply(i)] = a;
            }
            out.insert(exps, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Total degree of the highest term, None when zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}
