//! Group abstraction for the braid moves.
//!
//! The move formulas only need multiplication, inversion, identity and
//! equality, so they are written against this trait. The permutation
//! instance is the real one; the additive cyclic group serves as a second
//! instance to keep the formulas honest about what they assume.

use crate::perm::Permutation;

/// Element of some group. `mul` composes left to right, matching the
/// permutation convention used everywhere in this crate.
pub trait GroupOps: Clone + PartialEq {
    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Identity of the ambient group of `self`.
    fn identity(&self) -> Self;
    fn is_identity(&self) -> bool {
        *self == self.identity()
    }
    /// Conjugate `self^g = g^-1 * self * g`.
    fn conj(&self, g: &Self) -> Self {
        g.inverse().mul(self).mul(g)
    }
    /// Commutator `[self, rhs] = self * rhs * self^-1 * rhs^-1`.
    fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).mul(&self.inverse()).mul(&rhs.inverse())
    }
}

impl GroupOps for Permutation {
    fn mul(&self, rhs: &Self) -> Self {
        Permutation::mul(self, rhs)
    }
    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }
    fn identity(&self) -> Self {
        Permutation::identity(self.degree())
    }
    fn is_identity(&self) -> bool {
        Permutation::is_identity(self)
    }
    fn conj(&self, g: &Self) -> Self {
        Permutation::conj(self, g)
    }
}

/// Element of the additive cyclic group `Z_m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cyclic {
    value: u32,
    modulus: u32,
}

impl Cyclic {
    pub fn new(modulus: u32, value: u32) -> Self {
        assert!(modulus > 0);
        Cyclic {
            value: value % modulus,
            modulus,
        }
    }
    pub fn value(&self) -> u32 {
        self.value
    }
}

impl GroupOps for Cyclic {
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Cyclic::new(self.modulus, self.value + rhs.value)
    }
    fn inverse(&self) -> Self {
        Cyclic::new(self.modulus, self.modulus - self.value)
    }
    fn identity(&self) -> Self {
        Cyclic::new(self.modulus, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_axioms() {
        for a in 0..12 {
            for b in 0..12 {
                let x = Cyclic::new(12, a);
                let y = Cyclic::new(12, b);
                assert_eq!(x.mul(&y), y.mul(&x));
                assert!(x.mul(&x.inverse()).is_identity());
                assert_eq!(x.mul(&x.identity()), x);
                assert!(x.commutator(&y).is_identity());
            }
        }
    }

    #[test]
    fn permutation_instance_agrees_with_inherent_ops() {
        let p = Permutation::transposition(4, 1, 3).unwrap();
        let q = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(GroupOps::mul(&p, &q), p.mul(&q));
        assert_eq!(GroupOps::conj(&p, &q), p.conj(&q));
        assert_eq!(
            p.commutator(&q),
            p.mul(&q).mul(&p.inverse()).mul(&q.inverse())
        );
    }
}
