//! Permutations of 0..n, cycle types, block structures for Young subgroups,
//! and lazy enumeration of those subgroups.
//!
//! Positions are 0-based everywhere in code; the cycle-notation parser and
//! printer speak 1-based, which is the only place the offset appears.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::symfunc::factorial;
use crate::Error;

/// Ordered composition (n_1, ..., n_p) of N, partitioning 0..N into the
/// consecutive intervals I_1, ..., I_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    sizes: Vec<usize>,
    starts: Vec<usize>,
}

impl BlockStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self, Error> {
        if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidBlockSizes);
        }
        let mut starts = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in &sizes {
            starts.push(acc);
            acc += s;
        }
        Ok(BlockStructure { sizes, starts })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of points N.
    pub fn total(&self) -> usize {
        self.starts.last().unwrap() + self.sizes.last().unwrap()
    }

    /// Half-open interval of positions making up block j.
    pub fn interval(&self, j: usize) -> core::ops::Range<usize> {
        let s = self.starts[j];
        s..s + self.sizes[j]
    }

    /// Index of the block containing a position.
    pub fn block_of(&self, pos: usize) -> usize {
        match self.starts.binary_search(&pos) {
            Ok(j) => j,
            Err(j) => j - 1,
        }
    }

    /// Order of the Young subgroup, prod n_i!.
    pub fn order(&self) -> BigInt {
        self.sizes.iter().map(|&s| factorial(s)).product()
    }

    /// Lazily enumerates the Young subgroup in odometer order, O(N) memory.
    pub fn elements(&self) -> YoungSubgroup<'_> {
        YoungSubgroup {
            blocks: self,
            arrangements: self.sizes.iter().zip(&self.starts).map(|(&s, &st)| (st..st + s).collect()).collect(),
            done: false,
        }
    }
}

/// Iterator over a Young subgroup; yields each element exactly once.
pub struct YoungSubgroup<'a> {
    blocks: &'a BlockStructure,
    arrangements: Vec<Vec<usize>>,
    done: bool,
}

impl Iterator for YoungSubgroup<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut images = vec![0; self.blocks.total()];
        for (j, arr) in self.arrangements.iter().enumerate() {
            for (off, &img) in arr.iter().enumerate() {
                images[self.blocks.starts[j] + off] = img;
            }
        }
        // Advance the odometer: last block fastest.
        let mut j = self.arrangements.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            if next_permutation(&mut self.arrangements[j]) {
                break;
            }
        }
        Some(Permutation { images })
    }
}

/// Steps a slice to its lexicographic successor in place. Returns false and
/// leaves the slice sorted ascending when it was already the last arrangement.
fn next_permutation(arr: &mut [usize]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        arr.reverse();
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Permutation of 0..n stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles over 0-based positions.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &pos in cycle {
                if pos >= n {
                    return Err(Error::PositionOutOfRange { position: pos, degree: n });
                }
                if seen[pos] {
                    return Err(Error::RepeatedPosition { position: pos });
                }
                seen[pos] = true;
            }
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition acting right-to-left: compose(u, v) applies v first.
    pub fn compose(&self, v: &Permutation) -> Permutation {
        assert_eq!(self.degree(), v.degree(), "composing permutations of unequal degree");
        Permutation {
            images: v.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Nontrivial cycles, each rotated to start at its least element and
    /// sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Multiset of all cycle lengths including fixed points.
    pub fn cycle_type(&self) -> CycleType {
        let mut seen = vec![false; self.images.len()];
        let mut parts = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 1;
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur];
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Parses 1-based cycle notation like "(1 3 6)(2 5)"; "()" is the
    /// identity. Entries may be separated by spaces or commas.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::Parse(String::from("expected '('")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(String::from("unexpected text between cycles")));
            }
            let close = rest.find(')').ok_or_else(|| Error::Parse(String::from("unclosed cycle")))?;
            if close < open {
                return Err(Error::Parse(String::from("unmatched ')'")));
            }
            let body = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad cycle entry '{tok}'")))?;
                if v == 0 {
                    return Err(Error::Parse(String::from("cycle entries are 1-based")));
                }
                cycle.push(v - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pos) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pos + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Partition recording cycle lengths, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidCycleType);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parses "4,1,1"-style comma-separated parts.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Parse(String::from("empty cycle type part")));
            }
            parts.push(
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad cycle type part '{tok}'")))?,
            );
        }
        CycleType::new(parts)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

/// Nonempty set of block indices, stored strictly increasing, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportSet {
    members: Vec<usize>,
}

impl SupportSet {
    pub fn new(mut members: Vec<usize>) -> Result<Self, Error> {
        if members.is_empty() {
            return Err(Error::EmptySupport);
        }
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedPosition { position: w[0] });
            }
        }
        Ok(SupportSet { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Checks every member indexes one of p blocks.
    pub fn check_within(&self, p: usize) -> Result<(), Error> {
        match self.members.iter().find(|&&j| j >= p) {
            Some(&j) => Err(Error::BadSupportIndex { index: j, p }),
            None => Ok(()),
        }
    }
}

/// The cycle threading the first position of each selected block, in support
/// order. A singleton support yields the identity.
pub fn support_cycle(blocks: &BlockStructure, support: &SupportSet) -> Result<Permutation, Error> {
    support.check_within(blocks.num_blocks())?;
    let cycle: Vec<usize> = support.members().iter().map(|&j| blocks.interval(j).start).collect();
    Permutation::from_cycles(blocks.total(), &[cycle])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn block_structure_basics() {
        let b = BlockStructure::new(vec![2, 3, 4]).unwrap();
        assert_eq!(b.total(), 9);
        assert_eq!(b.num_blocks(), 3);
        assert_eq!(b.interval(0), 0..2);
        assert_eq!(b.interval(1), 2..5);
        assert_eq!(b.interval(2), 5..9);
        assert_eq!(b.block_of(0), 0);
        assert_eq!(b.block_of(4), 1);
        assert_eq!(b.block_of(5), 2);
        assert_eq!(b.order(), BigInt::from(2 * 6 * 24));
        assert!(BlockStructure::new(vec![]).is_err());
        assert!(BlockStructure::new(vec![2, 0]).is_err());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (1 3)(2) then (1 2)(3): sends 1->2->2? No: v=(1 2) first maps 1->2,
        // then u=(1 3) fixes 2. Net: 1->2, 2->1->3, 3->3->1, a 3-cycle.
        let u = Permutation::parse_cycles(3, "(1 3)").unwrap();
        let v = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let w = u.compose(&v);
        assert_eq!(w.to_string(), "(1 2 3)");
        assert_eq!(w.cycle_type().parts(), &[3]);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let g = Permutation::parse_cycles(9, "(1 3 6)(2 5)").unwrap();
        assert_eq!(g.to_string(), "(1 3 6)(2 5)");
        assert_eq!(g.cycle_type().parts(), &[3, 2, 1, 1, 1, 1]);
        assert_eq!(g.apply(0), 2);
        assert_eq!(g.apply(2), 5);
        assert_eq!(g.apply(5), 0);
        let id = Permutation::parse_cycles(4, "()").unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");
        let commas = Permutation::parse_cycles(9, "(1, 3, 6)(2, 5)").unwrap();
        assert_eq!(commas, g);
    }

    #[test]
    fn cycle_notation_rejects_bad_input() {
        assert!(Permutation::parse_cycles(4, "(0 1)").is_err());
        assert!(Permutation::parse_cycles(4, "(1 5)").is_err());
        assert!(Permutation::parse_cycles(4, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(4, "(1 2").is_err());
        assert!(Permutation::parse_cycles(4, "1 2").is_err());
    }

    #[test]
    fn support_cycle_threads_first_positions() {
        let blocks = BlockStructure::new(vec![2, 3, 4]).unwrap();
        let support = SupportSet::new(vec![0, 1, 2]).unwrap();
        let g = support_cycle(&blocks, &support).unwrap();
        assert_eq!(g.to_string(), "(1 3 6)");

        let single = SupportSet::new(vec![1]).unwrap();
        assert!(support_cycle(&blocks, &single).unwrap().is_identity());

        let bad = SupportSet::new(vec![0, 3]).unwrap();
        assert!(support_cycle(&blocks, &bad).is_err());
    }

    #[test]
    fn support_set_normalizes() {
        let s = SupportSet::new(vec![2, 0]).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        assert!(SupportSet::new(vec![]).is_err());
        assert!(SupportSet::new(vec![1, 1]).is_err());
    }

    #[test]
    fn young_subgroup_enumeration() {
        let full = BlockStructure::new(vec![3]).unwrap();
        let elems: Vec<Permutation> = full.elements().collect();
        assert_eq!(elems.len(), 6);
        let distinct: BTreeSet<_> = elems.iter().cloned().collect();
        assert_eq!(distinct.len(), 6);

        let blocks = BlockStructure::new(vec![2, 1]).unwrap();
        let elems: Vec<Permutation> = blocks.elements().collect();
        assert_eq!(elems.len(), 2);
        assert!(elems[0].is_identity());
        assert_eq!(elems[1].to_string(), "(1 2)");

        // Every element fixes each block setwise.
        let blocks = BlockStructure::new(vec![2, 3]).unwrap();
        for h in blocks.elements() {
            for j in 0..blocks.num_blocks() {
                for pos in blocks.interval(j) {
                    assert_eq!(blocks.block_of(h.apply(pos)), j);
                }
            }
        }
        assert_eq!(blocks.elements().count(), 12);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Permutation { images })
    }

    proptest! {
        #[test]
        fn compose_associative(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn inverse_law(a in arb_perm(6)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
        }

        #[test]
        fn cycle_type_is_a_class_function(a in arb_perm(6), w in arb_perm(6)) {
            let conj = w.compose(&a).compose(&w.inverse());
            prop_assert_eq!(a.cycle_type(), conj.cycle_type());
        }

        #[test]
        fn display_parse_round_trip(a in arb_perm(7)) {
            let s = a.to_string();
            prop_assert_eq!(Permutation::parse_cycles(7, &s).unwrap(), a);
        }
    }
}
