//! Hurwitz systems of permutations under the braid-group action.
//!
//! The crate models tuples `(t_1..t_n; l_1, m_1, .., l_g, m_g)` of
//! permutations satisfying `t_1...t_n = [l_1,m_1]...[l_g,m_g]`, the
//! explicit braid moves acting on them, breadth-first orbit enumeration at
//! desk scale, and certificate-emitting reducers that rewrite a system to a
//! normal form and prove the rewrite by an explicit, replayable braid word.
//!
//! Conventions, used everywhere without exception:
//! - products compose left to right (`(12)(13) = (123)`),
//! - conjugation is `x^g = g^-1 x g`,
//! - commutators are `[a, b] = a b a^-1 b^-1`,
//! - points are 1-based in every external form, 0-based internally.

pub mod check;
pub mod error;
pub mod group;
pub mod moves;
pub mod orbit;
pub mod perm;
pub mod reduce;
pub mod subgroup;
pub mod system;

pub use error::{Error, Result};
pub use group::{Cyclic, GroupOps};
pub use moves::{
    a_ij_word, apply_generator, apply_rho, apply_sigma, apply_tau, apply_word, word_inverse,
    BraidGenerator, BraidWord, Direction, GroupSystem,
};
pub use perm::{epsilon_of_partition, Partition, Permutation};
pub use subgroup::{analyze_subgroup, imprimitive_blocks, SubgroupAnalysis};
pub use system::{
    enumerate, enumerate_for_each, ClassKey, HurwitzSystem, MonodromyClass, MonodromyFilter,
    MonodromyReport, SystemFilter,
};
