//! Permutations of `{1..d}` under the right-action convention.
//!
//! Products compose left to right: `(p * q)` applies `p` first, so
//! `(12)(13) = (123)`. Conjugation is `x^g = g^-1 x g`. Every formula in
//! the crate uses this single convention.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Inline capacity for image arrays; degrees stay tiny in this tool.
pub(crate) type Images = SmallVec<[u8; 8]>;

/// A permutation of `{1..d}`, stored as a dense 0-based image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    /// Identity permutation of degree `d`.
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    /// Builds from a 0-based image array, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d == 0 || d > u8::MAX as usize {
            return Err(Error::InvalidImages(format!("degree {d} out of range")));
        }
        let mut seen = vec![false; d];
        let mut out = Images::new();
        for &x in images {
            if x >= d || seen[x] {
                return Err(Error::InvalidImages(format!("{images:?}")));
            }
            seen[x] = true;
            out.push(x as u8);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_raw(images: Images) -> Self {
        Permutation { images }
    }

    /// The transposition `(a b)` in degree `d`; `a`, `b` are 1-based.
    pub fn transposition(d: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a < 1 || b < 1 || a > d || b > d {
            return Err(Error::InvalidImages(format!("transposition ({a} {b}) in degree {d}")));
        }
        let mut p = Self::identity(d);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Builds from disjoint cycles of 1-based points. Fixed points may be
    /// omitted; the identity is the empty cycle list.
    pub fn from_cycles(d: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if d == 0 || d > u8::MAX as usize {
            return Err(Error::InvalidImages(format!("degree {d} out of range")));
        }
        let mut p = Self::identity(d);
        let mut used = vec![false; d];
        for cycle in cycles {
            for &pt in cycle {
                if pt < 1 || pt > d {
                    return Err(Error::InvalidImages(format!("point {pt} out of 1..{d}")));
                }
                if used[pt - 1] {
                    return Err(Error::InvalidImages(format!("point {pt} repeated across cycles")));
                }
                used[pt - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                p.images[from] = to as u8;
            }
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Image of a 1-based point.
    #[inline]
    pub fn apply1(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u8 == y)
    }

    /// Left-to-right product: the result maps `x` to `(x^self)^q`.
    /// Degrees must match; use [`Permutation::compose`] for a checked form.
    #[inline]
    pub fn mul(&self, q: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), q.degree());
        let mut out = Images::with_capacity(self.images.len());
        for &y in &self.images {
            out.push(q.images[y as usize]);
        }
        Permutation { images: out }
    }

    /// Checked left-to-right product.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self.mul(q))
    }

    pub fn inverse(&self) -> Permutation {
        let mut out: Images = smallvec::smallvec![0; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            out[y as usize] = i as u8;
        }
        Permutation { images: out }
    }

    /// Conjugate `self^g = g^-1 * self * g` (checked).
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(self.conj(g))
    }

    /// Conjugate `self^g = g^-1 * self * g`, unchecked degree.
    #[inline]
    pub fn conj(&self, g: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), g.degree());
        // (g^-1 x g)[i] = g[x[g^-1[i]]]; iterate over j = g^-1[i].
        let mut out: Images = smallvec::smallvec![0; self.images.len()];
        for j in 0..self.images.len() {
            let i = g.images[j] as usize;
            out[i] = g.images[self.images[j] as usize];
        }
        Permutation { images: out }
    }

    pub fn is_transposition(&self) -> bool {
        let mut moved = 0usize;
        for (i, &y) in self.images.iter().enumerate() {
            if i as u8 != y {
                moved += 1;
                if moved > 2 {
                    return false;
                }
            }
        }
        moved == 2
    }

    /// The two moved points (1-based) when `self` is a transposition.
    pub fn transposition_points(&self) -> Option<(usize, usize)> {
        if !self.is_transposition() {
            return None;
        }
        let a = self
            .images
            .iter()
            .enumerate()
            .find(|(i, &y)| *i as u8 != y)
            .map(|(i, _)| i)
            .unwrap();
        Some((a + 1, self.images[a] as usize + 1))
    }

    /// Cycle decomposition over 1-based points; cycles ordered by smallest
    /// moved point, each starting at its smallest point. Fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Orbit sizes of the cyclic group generated by `self`, including fixed
    /// points, sorted non-increasing.
    pub fn cycle_type(&self) -> Partition {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut parts = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, total: d }
    }

    /// `d` minus the number of cycles (fixed points included), i.e. the sum
    /// of `e_i - 1` over the cycle type.
    pub fn weight(&self) -> usize {
        let ct = self.cycle_type();
        self.degree() - ct.parts.len()
    }

    /// Parses canonical cycle notation like `(1 2)(3 4 5)`; `()` is the
    /// identity. The degree must be supplied; points must lie in `1..=d`.
    pub fn parse_cycles(text: &str, d: usize) -> Result<Self> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::BadCycleText("empty input".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::BadCycleText(format!("expected '(' at {rest:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::BadCycleText(format!("unclosed cycle in {text:?}")))?;
            let inner = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let pt: usize = tok
                    .parse()
                    .map_err(|_| Error::BadCycleText(format!("bad point {tok:?}")))?;
                cycle.push(pt);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(d, &cycles)
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
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A partition of `d`: non-increasing positive parts summing to `d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
    total: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>, d: usize) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} not non-increasing")));
        }
        let sum: usize = parts.iter().sum();
        if sum != d {
            return Err(Error::InvalidPartition(format!("{parts:?} sums to {sum}, expected {d}")));
        }
        Ok(Partition { parts, total: d })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Canonical conjugacy-class representative of a partition: consecutive
/// blocks of sizes `e_1, e_2, ...`, each cyclically permuted.
pub fn epsilon_of_partition(e: &Partition) -> Permutation {
    let d = e.total();
    let mut cycles = Vec::new();
    let mut next = 1usize;
    for &part in e.parts() {
        cycles.push((next..next + part).collect::<Vec<_>>());
        next += part;
    }
    Permutation::from_cycles(d, &cycles).expect("partition blocks are disjoint")
}

/// All `d!` permutations of degree `d` in lexicographic image order.
pub fn all_permutations(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..d).collect();
    loop {
        out.push(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        });
        // next lexicographic image array
        let mut i = d.wrapping_sub(1);
        loop {
            if i == 0 {
                return out;
            }
            if images[i - 1] < images[i] {
                break;
            }
            i -= 1;
        }
        let pivot = i - 1;
        let mut j = d - 1;
        while images[j] <= images[pivot] {
            j -= 1;
        }
        images.swap(pivot, j);
        images[i..].reverse();
    }
}

/// All transpositions of degree `d`, ordered by `(a, b)` with `a < b`.
pub fn all_transpositions(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 1..=d {
        for b in a + 1..=d {
            out.push(Permutation::transposition(d, a, b).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(d, a, b).unwrap()
    }

    /// Independent image-chasing oracle for products of permutations.
    fn oracle_apply_chain(chain: &[&Permutation], x: usize) -> usize {
        chain.iter().fold(x, |p, g| g.apply(p))
    }

    #[test]
    fn compose_matches_notation_convention() {
        // (12)(13) = (123) under left-to-right application
        let p = t(3, 1, 2).mul(&t(3, 1, 3));
        assert_eq!(p, Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap());
    }

    #[test]
    fn compose_identity_and_involution() {
        let p = t(4, 1, 2);
        assert_eq!(p.mul(&Permutation::identity(4)), p);
        assert!(p.mul(&p).is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        assert!(t(3, 1, 2).compose(&t(4, 1, 2)).is_err());
    }

    #[test]
    fn inverse_examples() {
        let c = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.inverse(), Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap());
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(t(2, 1, 2).inverse(), t(2, 1, 2));
        assert!(c.mul(&c.inverse()).is_identity());
    }

    #[test]
    fn conjugate_by_image_chasing() {
        // (12)^(23) evaluated directly through (23)^-1, (12), (23)
        let x = t(3, 1, 2);
        let g = t(3, 2, 3);
        let got = x.conjugate(&g).unwrap();
        let ginv = g.inverse();
        for pt in 0..3 {
            assert_eq!(got.apply(pt), oracle_apply_chain(&[&ginv, &x, &g], pt));
        }
        assert_eq!(got, t(3, 1, 3));
        assert_eq!(x.conjugate(&Permutation::identity(3)).unwrap(), x);
        assert_eq!(x.conjugate(&x).unwrap(), x);
    }

    #[test]
    fn cycle_type_and_weight() {
        let p = Permutation::from_cycles(6, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.cycle_type().parts(), &[3, 2, 1]);
        assert_eq!(p.weight(), 3);
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(Permutation::identity(4).weight(), 0);
        assert_eq!(t(2, 1, 2).cycle_type().parts(), &[2]);
        assert_eq!(t(5, 2, 4).weight(), 1);
    }

    #[test]
    fn epsilon_examples() {
        let e = Partition::new(vec![3], 3).unwrap();
        assert_eq!(epsilon_of_partition(&e), Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap());
        let ones = Partition::new(vec![1, 1, 1, 1], 4).unwrap();
        assert!(epsilon_of_partition(&ones).is_identity());
        let two_two = Partition::new(vec![2, 2], 4).unwrap();
        assert_eq!(
            epsilon_of_partition(&two_two),
            Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap()
        );
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 3], 5).is_err());
        assert!(Partition::new(vec![3, 1], 5).is_err());
        assert!(Partition::new(vec![0], 0).is_err());
        assert!(Partition::new(vec![3, 2], 5).is_ok());
    }

    #[test]
    fn cycle_text_round_trip() {
        let p = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap();
        let text = p.to_string();
        assert_eq!(text, "(1 2)(3 4 5)");
        let back = Permutation::parse_cycles(&text, 5).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_string(), text);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(Permutation::parse_cycles("()", 3).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("", 3).is_err());
    }

    #[test]
    fn all_permutations_count_and_order() {
        let s3 = all_permutations(3);
        assert_eq!(s3.len(), 6);
        assert!(s3[0].is_identity());
        let mut sorted = s3.clone();
        sorted.sort();
        assert_eq!(s3, sorted);
        assert_eq!(all_transpositions(4).len(), 6);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm(d: usize) -> impl Strategy<Value = Permutation> {
            Just((0..d).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(&v).unwrap())
        }

        proptest! {
            #[test]
            fn associativity(p in arb_perm(6), q in arb_perm(6), r in arb_perm(6)) {
                prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            }

            #[test]
            fn identity_is_unit(p in arb_perm(5)) {
                let e = Permutation::identity(5);
                prop_assert_eq!(&e.mul(&p), &p);
                prop_assert_eq!(&p.mul(&e), &p);
            }

            #[test]
            fn conjugation_preserves_cycle_type(x in arb_perm(6), g in arb_perm(6)) {
                prop_assert_eq!(x.conj(&g).cycle_type(), x.cycle_type());
            }

            #[test]
            fn conjugation_composes(x in arb_perm(6), g in arb_perm(6), h in arb_perm(6)) {
                prop_assert_eq!(x.conj(&g).conj(&h), x.conj(&g.mul(&h)));
            }

            #[test]
            fn weight_matches_cycle_count(p in arb_perm(7)) {
                prop_assert_eq!(p.weight(), 7 - p.cycle_type().parts().len());
            }

            #[test]
            fn display_parse_round_trip(p in arb_perm(6)) {
                let text = p.to_string();
                let back = Permutation::parse_cycles(&text, 6).unwrap();
                prop_assert_eq!(&back, &p);
                prop_assert_eq!(back.to_string(), text);
            }
        }
    }
}
