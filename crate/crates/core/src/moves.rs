//! The six families of braid moves acting on Hurwitz systems.
//!
//! A system is a tuple `(t_1..t_n; l_1, m_1, .., l_g, m_g)` subject to
//! `t_1 * ... * t_n = [l_1, m_1] * ... * [l_g, m_g]`. The moves come in
//! three families (`sigma`, `rho`, `tau`), each in two mutually inverse
//! directions (`prime`, `second`). Everything is defined over an abstract
//! group so the same code drives permutations and the cyclic test instance.
//!
//! All conjugating elements are evaluated from the input system before any
//! entry is overwritten; the formulas reference unprimed entries throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupOps;
use crate::system::HurwitzSystem;

/// Raw entries of a Hurwitz system over an arbitrary group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupSystem<E> {
    pub t: Vec<E>,
    pub lambda: Vec<E>,
    pub mu: Vec<E>,
}

impl<E: GroupOps> GroupSystem<E> {
    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn genus(&self) -> usize {
        self.lambda.len()
    }

    /// `u_k = [l_1, m_1] * ... * [l_k, m_k]`, with `u_0` the identity.
    pub fn partial_commutator(&self, k: usize) -> Result<E> {
        if k > self.genus() {
            return Err(Error::IndexOutOfRange(format!(
                "partial commutator index {k} exceeds genus {}",
                self.genus()
            )));
        }
        let mut u = self.t[0].identity();
        for idx in 0..k {
            u = u.mul(&self.lambda[idx].commutator(&self.mu[idx]));
        }
        Ok(u)
    }

    /// `t_1 * ... * t_{i-1}`; identity when `i = 1`.
    fn prefix(&self, i: usize) -> E {
        let mut p = self.t[0].identity();
        for x in &self.t[..i - 1] {
            p = p.mul(x);
        }
        p
    }

    /// `t_{i+1} * ... * t_n`; identity when `i = n`.
    fn suffix(&self, i: usize) -> E {
        let mut p = self.t[0].identity();
        for x in &self.t[i..] {
            p = p.mul(x);
        }
        p
    }

    /// Whether the defining relation holds.
    pub fn relation_holds(&self) -> bool {
        let lhs = self.suffix(0);
        let rhs = self.partial_commutator(self.genus()).expect("k = g in range");
        lhs == rhs
    }

    pub fn entries_nontrivial(&self) -> bool {
        self.t.iter().all(|x| !x.is_identity())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Direction {
    Prime,
    Second,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Prime => Direction::Second,
            Direction::Second => Direction::Prime,
        }
    }
}

/// One braid-move token. Indices are 1-based: `j` in `[1, n-1]` for sigma,
/// `(i, k)` in `[1, n] x [1, g]` for rho and tau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum BraidGenerator {
    Sigma { dir: Direction, j: usize },
    Rho { dir: Direction, i: usize, k: usize },
    Tau { dir: Direction, i: usize, k: usize },
}

impl BraidGenerator {
    pub fn inverse(self) -> BraidGenerator {
        match self {
            BraidGenerator::Sigma { dir, j } => BraidGenerator::Sigma { dir: dir.flipped(), j },
            BraidGenerator::Rho { dir, i, k } => BraidGenerator::Rho { dir: dir.flipped(), i, k },
            BraidGenerator::Tau { dir, i, k } => BraidGenerator::Tau { dir: dir.flipped(), i, k },
        }
    }

    pub fn in_range(self, n: usize, g: usize) -> bool {
        match self {
            BraidGenerator::Sigma { j, .. } => (1..n).contains(&j),
            BraidGenerator::Rho { i, k, .. } | BraidGenerator::Tau { i, k, .. } => {
                (1..=n).contains(&i) && (1..=g).contains(&k)
            }
        }
    }
}

impl fmt::Display for BraidGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tick = |d: Direction| if d == Direction::Prime { "'" } else { "''" };
        match *self {
            BraidGenerator::Sigma { dir, j } => write!(f, "sigma{}_{}", tick(dir), j),
            BraidGenerator::Rho { dir, i, k } => write!(f, "rho{}_{},{}", tick(dir), i, k),
            BraidGenerator::Tau { dir, i, k } => write!(f, "tau{}_{},{}", tick(dir), i, k),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TokenRepr {
    gen: String,
    dir: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

impl Serialize for BraidGenerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dir = |d: Direction| {
            if d == Direction::Prime { "prime" } else { "second" }.to_string()
        };
        let repr = match *self {
            BraidGenerator::Sigma { dir: d, j } => TokenRepr {
                gen: "sigma".into(),
                dir: dir(d),
                j: Some(j),
                i: None,
                k: None,
            },
            BraidGenerator::Rho { dir: d, i, k } => TokenRepr {
                gen: "rho".into(),
                dir: dir(d),
                j: None,
                i: Some(i),
                k: Some(k),
            },
            BraidGenerator::Tau { dir: d, i, k } => TokenRepr {
                gen: "tau".into(),
                dir: dir(d),
                j: None,
                i: Some(i),
                k: Some(k),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraidGenerator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TokenRepr::deserialize(d)?;
        let dir = match repr.dir.as_str() {
            "prime" => Direction::Prime,
            "second" => Direction::Second,
            other => return Err(D::Error::custom(format!("bad direction {other:?}"))),
        };
        match repr.gen.as_str() {
            "sigma" => {
                let j = repr.j.ok_or_else(|| D::Error::custom("sigma token needs j"))?;
                Ok(BraidGenerator::Sigma { dir, j })
            }
            "rho" | "tau" => {
                let i = repr.i.ok_or_else(|| D::Error::custom("token needs i"))?;
                let k = repr.k.ok_or_else(|| D::Error::custom("token needs k"))?;
                if repr.gen == "rho" {
                    Ok(BraidGenerator::Rho { dir, i, k })
                } else {
                    Ok(BraidGenerator::Tau { dir, i, k })
                }
            }
            other => Err(D::Error::custom(format!("bad generator {other:?}"))),
        }
    }
}

/// A finite braid word; tokens apply left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord(pub Vec<BraidGenerator>);

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: BraidGenerator) {
        self.0.push(g);
    }

    pub fn extend(&mut self, other: &BraidWord) {
        self.0.extend(other.0.iter().copied());
    }

    /// Tokens reversed with directions flipped; replaying the result after
    /// the original word restores the input.
    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|g| g.inverse()).collect())
    }
}

/// Hook for the fault-injection mode of the verification suite: deliberately
/// miscomputes one conjugator so the consistency checks must fail.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveTamper {
    /// Drop the trailing suffix-inverse factor from `a_1` in the prime rho
    /// move.
    RhoPrimeA1,
}

pub(crate) fn apply_generator_tampered<E: GroupOps>(
    sys: &GroupSystem<E>,
    gen: BraidGenerator,
    tamper: Option<MoveTamper>,
) -> Result<GroupSystem<E>> {
    let (n, g) = (sys.n(), sys.genus());
    if !gen.in_range(n, g) {
        return Err(Error::IndexOutOfRange(format!("{gen} on a system with n={n}, g={g}")));
    }
    let mut out = sys.clone();
    match gen {
        BraidGenerator::Sigma { dir, j } => {
            let a = sys.t[j - 1].clone();
            let b = sys.t[j].clone();
            match dir {
                Direction::Prime => {
                    out.t[j - 1] = a.mul(&b).mul(&a.inverse());
                    out.t[j] = a;
                }
                Direction::Second => {
                    out.t[j - 1] = b.clone();
                    out.t[j] = b.inverse().mul(&a).mul(&b);
                }
            }
        }
        BraidGenerator::Rho { dir, i, k } => {
            let u_km1 = sys.partial_commutator(k - 1)?;
            let u_k = sys.partial_commutator(k)?;
            let u_g = sys.partial_commutator(g)?;
            let ucg = u_k.inverse().mul(&u_g);
            let prefix = sys.prefix(i);
            let suffix = sys.suffix(i);
            let lam = &sys.lambda[k - 1];
            let ti = &sys.t[i - 1];
            match dir {
                Direction::Prime => {
                    let mut a1 = prefix.inverse().mul(&u_km1).mul(lam).mul(&ucg);
                    if tamper != Some(MoveTamper::RhoPrimeA1) {
                        a1 = a1.mul(&suffix.inverse());
                    }
                    let b1 = prefix.inverse().mul(&u_km1).mul(lam);
                    out.t[i - 1] = ti.conj(&a1);
                    out.mu[k - 1] = ti.inverse().conj(&b1).mul(&sys.mu[k - 1]);
                }
                Direction::Second => {
                    let a2 = suffix
                        .mul(&ucg.inverse())
                        .mul(&lam.inverse())
                        .mul(&u_km1.inverse())
                        .mul(&prefix);
                    let b2 = suffix.mul(&ucg.inverse());
                    out.t[i - 1] = ti.conj(&a2);
                    out.mu[k - 1] = ti.conj(&b2).mul(&sys.mu[k - 1]);
                }
            }
        }
        BraidGenerator::Tau { dir, i, k } => {
            let u_km1 = sys.partial_commutator(k - 1)?;
            let u_k = sys.partial_commutator(k)?;
            let u_g = sys.partial_commutator(g)?;
            let ucg = u_k.inverse().mul(&u_g);
            let prefix = sys.prefix(i);
            let suffix = sys.suffix(i);
            let mu = &sys.mu[k - 1];
            let ti = &sys.t[i - 1];
            match dir {
                Direction::Prime => {
                    let c1 = suffix
                        .mul(&ucg.inverse())
                        .mul(mu)
                        .mul(&u_km1.inverse())
                        .mul(&prefix);
                    let d1 = suffix.mul(&ucg.inverse()).mul(mu);
                    out.t[i - 1] = ti.conj(&c1);
                    out.lambda[k - 1] = ti.conj(&d1).mul(&sys.lambda[k - 1]);
                }
                Direction::Second => {
                    let c2 = prefix
                        .inverse()
                        .mul(&u_km1)
                        .mul(&mu.inverse())
                        .mul(&ucg)
                        .mul(&suffix.inverse());
                    let d2 = prefix.inverse().mul(&u_km1);
                    out.t[i - 1] = ti.conj(&c2);
                    out.lambda[k - 1] = ti.inverse().conj(&d2).mul(&sys.lambda[k - 1]);
                }
            }
        }
    }
    Ok(out)
}

/// Applies one braid move to a system over an arbitrary group.
pub fn apply_generator_generic<E: GroupOps>(
    sys: &GroupSystem<E>,
    gen: BraidGenerator,
) -> Result<GroupSystem<E>> {
    apply_generator_tampered(sys, gen, None)
}

/// Applies one braid move to a permutation system.
pub fn apply_generator(sys: &HurwitzSystem, gen: BraidGenerator) -> Result<HurwitzSystem> {
    let entries = apply_generator_generic(sys.entries(), gen)?;
    let out = sys.with_entries(entries);
    debug_assert!(out.validate().is_empty(), "move {gen} broke validity");
    Ok(out)
}

pub fn apply_sigma(sys: &HurwitzSystem, j: usize, dir: Direction) -> Result<HurwitzSystem> {
    apply_generator(sys, BraidGenerator::Sigma { dir, j })
}

pub fn apply_rho(sys: &HurwitzSystem, i: usize, k: usize, dir: Direction) -> Result<HurwitzSystem> {
    apply_generator(sys, BraidGenerator::Rho { dir, i, k })
}

pub fn apply_tau(sys: &HurwitzSystem, i: usize, k: usize, dir: Direction) -> Result<HurwitzSystem> {
    apply_generator(sys, BraidGenerator::Tau { dir, i, k })
}

/// Replays a braid word left to right. Out-of-range tokens are reported with
/// their position in the word.
pub fn apply_word(sys: &HurwitzSystem, word: &BraidWord) -> Result<HurwitzSystem> {
    let mut cur = sys.clone();
    for (pos, &gen) in word.0.iter().enumerate() {
        cur = apply_generator(&cur, gen).map_err(|_| Error::WordTokenOutOfRange {
            position: pos,
            token: gen.to_string(),
        })?;
    }
    Ok(cur)
}

pub fn apply_word_generic<E: GroupOps>(
    sys: &GroupSystem<E>,
    word: &BraidWord,
) -> Result<GroupSystem<E>> {
    let mut cur = sys.clone();
    for (pos, &gen) in word.0.iter().enumerate() {
        cur = apply_generator_generic(&cur, gen).map_err(|_| Error::WordTokenOutOfRange {
            position: pos,
            token: gen.to_string(),
        })?;
    }
    Ok(cur)
}

pub fn word_inverse(word: &BraidWord) -> BraidWord {
    word.inverse()
}

/// The pure-braid word `A_ij = sigma_i^-1 ... sigma_{j-2}^-1 sigma_{j-1}^2
/// sigma_{j-2} ... sigma_i`, with inverses rendered as second-direction
/// tokens. Requires `1 <= i < j <= n`.
pub fn a_ij_word(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if i < 1 || i >= j || j > n {
        return Err(Error::IndexOutOfRange(format!("A_{{{i},{j}}} with n={n}")));
    }
    let mut w = BraidWord::empty();
    for m in i..=j.saturating_sub(2) {
        w.push(BraidGenerator::Sigma { dir: Direction::Second, j: m });
    }
    w.push(BraidGenerator::Sigma { dir: Direction::Prime, j: j - 1 });
    w.push(BraidGenerator::Sigma { dir: Direction::Prime, j: j - 1 });
    for m in (i..=j.saturating_sub(2)).rev() {
        w.push(BraidGenerator::Sigma { dir: Direction::Prime, j: m });
    }
    debug_assert_eq!(w.len(), 2 * (j - 1 - i) + 2);
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::system::HurwitzSystem;

    fn t(d: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(d, a, b).unwrap()
    }

    fn id(d: usize) -> Permutation {
        Permutation::identity(d)
    }

    fn sys(
        d: usize,
        ts: Vec<Permutation>,
        lambda: Vec<Permutation>,
        mu: Vec<Permutation>,
    ) -> HurwitzSystem {
        let s = HurwitzSystem::new(d, ts, lambda, mu).unwrap();
        assert!(s.validate().is_empty(), "test fixture must be valid");
        s
    }

    #[test]
    fn sigma_prime_example() {
        // prime on ((12),(13)) -> ((23),(12)); genus 0, relation (12)(13)=(123)
        // fails, so embed as the two leading entries of a valid 3-entry system
        // with product 1: ((12),(13),(23))? (12)(13)(23) = (123)(23) = (12)... not 1.
        // use ((12),(13),t3) with t3 = ((12)(13))^-1 = (132)
        let s = sys(
            3,
            vec![t(3, 1, 2), t(3, 1, 3), Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap()],
            vec![],
            vec![],
        );
        let out = apply_sigma(&s, 1, Direction::Prime).unwrap();
        assert_eq!(out.t()[0], t(3, 2, 3));
        assert_eq!(out.t()[1], t(3, 1, 2));
        assert_eq!(out.t()[2], s.t()[2]);
    }

    #[test]
    fn sigma_fixes_equal_pair() {
        let s = sys(2, vec![t(2, 1, 2), t(2, 1, 2)], vec![], vec![]);
        let out = apply_sigma(&s, 1, Direction::Prime).unwrap();
        assert_eq!(&out, &s);
    }

    #[test]
    fn sigma_second_undoes_prime() {
        let s = sys(
            3,
            vec![t(3, 1, 2), t(3, 1, 3), Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap()],
            vec![],
            vec![],
        );
        let once = apply_sigma(&s, 1, Direction::Prime).unwrap();
        let back = apply_sigma(&once, 1, Direction::Second).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rho_second_at_last_strand_multiplies_mu() {
        // (t_1, t_2; 1, (13)) with i = n, k = g: mu -> t_n * mu, t_n
        // conjugated by t_1
        let s = sys(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![t(3, 1, 3)]);
        let out = apply_rho(&s, 2, 1, Direction::Second).unwrap();
        assert_eq!(out.mu()[0], t(3, 1, 2).mul(&t(3, 1, 3)));
        assert_eq!(out.mu()[0], Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap());
        assert_eq!(out.t()[1], t(3, 1, 2));
        assert_eq!(out.t()[0], t(3, 1, 2));
        assert!(out.validate().is_empty());
    }

    #[test]
    fn rho_prime_then_second_restores() {
        let s = sys(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![t(3, 1, 3)]);
        for i in 1..=2 {
            let fwd = apply_rho(&s, i, 1, Direction::Prime).unwrap();
            let back = apply_rho(&fwd, i, 1, Direction::Second).unwrap();
            assert_eq!(back, s, "rho inverse pair at i={i}");
        }
    }

    #[test]
    fn rho_prime_with_trivial_handles_matches_special_case() {
        // lam_k = mu_k = 1 for all k, i = 1, k = 1: mu_1 -> t_1^-1 * mu_1
        let s = sys(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![id(3)]);
        let out = apply_rho(&s, 1, 1, Direction::Prime).unwrap();
        assert_eq!(out.mu()[0], t(3, 1, 2).inverse());
    }

    #[test]
    fn tau_second_at_first_strand_premultiplies_lambda_inverse() {
        // i = 1, k = 1: lambda_1 -> t_1^-1 * lambda_1
        let s = sys(
            3,
            vec![t(3, 1, 2), t(3, 1, 2)],
            vec![Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()],
            vec![id(3)],
        );
        let out = apply_tau(&s, 1, 1, Direction::Second).unwrap();
        assert_eq!(
            out.lambda()[0],
            t(3, 1, 2).inverse().mul(&Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap())
        );
    }

    #[test]
    fn tau_prime_example_from_formula_instantiation() {
        // prime, i=1, k=1 on ((12),(12);(123),1): c_1 = t_2 = (12),
        // d_1 = t_2 * mu_1 = (12), so lambda' = (12)^(12) * (123) = (12)(123)
        let lam = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let s = sys(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![lam.clone()], vec![id(3)]);
        let out = apply_tau(&s, 1, 1, Direction::Prime).unwrap();
        assert_eq!(out.t()[0], t(3, 1, 2));
        assert_eq!(out.lambda()[0], t(3, 1, 2).mul(&lam));
        assert!(out.validate().is_empty());
    }

    #[test]
    fn tau_inverse_pairs() {
        let lam = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let s = sys(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![lam], vec![id(3)]);
        for i in 1..=2 {
            let fwd = apply_tau(&s, i, 1, Direction::Prime).unwrap();
            let back = apply_tau(&fwd, i, 1, Direction::Second).unwrap();
            assert_eq!(back, s, "tau inverse pair at i={i}");
            let fwd2 = apply_tau(&s, i, 1, Direction::Second).unwrap();
            let back2 = apply_tau(&fwd2, i, 1, Direction::Prime).unwrap();
            assert_eq!(back2, s);
        }
    }

    #[test]
    fn word_replay_and_inverse() {
        let s = sys(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![t(3, 1, 3)]);
        assert_eq!(apply_word(&s, &BraidWord::empty()).unwrap(), s);
        let w = BraidWord(vec![
            BraidGenerator::Rho { dir: Direction::Second, i: 2, k: 1 },
            BraidGenerator::Sigma { dir: Direction::Prime, j: 1 },
            BraidGenerator::Tau { dir: Direction::Prime, i: 1, k: 1 },
        ]);
        let fwd = apply_word(&s, &w).unwrap();
        let back = apply_word(&fwd, &w.inverse()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn sigma_cubed_has_small_period_on_pairs() {
        // [sigma'_1 x3] on a transposition pair: period divides 6
        let s = sys(
            3,
            vec![t(3, 1, 2), t(3, 1, 3), Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap()],
            vec![],
            vec![],
        );
        let w = BraidWord(vec![BraidGenerator::Sigma { dir: Direction::Prime, j: 1 }; 3]);
        let mut cur = s.clone();
        for _ in 0..2 {
            cur = apply_word(&cur, &w).unwrap();
        }
        assert_eq!(cur, s, "sigma'^6 is the identity on a pair");
    }

    #[test]
    fn word_out_of_range_reports_position() {
        let s = sys(2, vec![t(2, 1, 2), t(2, 1, 2)], vec![], vec![]);
        let w = BraidWord(vec![
            BraidGenerator::Sigma { dir: Direction::Prime, j: 1 },
            BraidGenerator::Rho { dir: Direction::Prime, i: 1, k: 1 },
        ]);
        match apply_word(&s, &w) {
            Err(Error::WordTokenOutOfRange { position, .. }) => assert_eq!(position, 1),
            other => panic!("expected out-of-range token, got {other:?}"),
        }
    }

    #[test]
    fn word_inverse_token_rules() {
        let w = BraidWord(vec![
            BraidGenerator::Rho { dir: Direction::Prime, i: 1, k: 1 },
            BraidGenerator::Tau { dir: Direction::Second, i: 3, k: 2 },
        ]);
        let inv = word_inverse(&w);
        assert_eq!(
            inv.0,
            vec![
                BraidGenerator::Tau { dir: Direction::Prime, i: 3, k: 2 },
                BraidGenerator::Rho { dir: Direction::Second, i: 1, k: 1 },
            ]
        );
        assert!(word_inverse(&BraidWord::empty()).is_empty());
        let s = BraidWord(vec![BraidGenerator::Sigma { dir: Direction::Prime, j: 2 }]);
        assert_eq!(
            word_inverse(&s).0,
            vec![BraidGenerator::Sigma { dir: Direction::Second, j: 2 }]
        );
    }

    #[test]
    fn a_ij_word_shapes() {
        let w = a_ij_word(1, 2, 2).unwrap();
        assert_eq!(
            w.0,
            vec![
                BraidGenerator::Sigma { dir: Direction::Prime, j: 1 },
                BraidGenerator::Sigma { dir: Direction::Prime, j: 1 },
            ]
        );
        let w = a_ij_word(1, 3, 3).unwrap();
        assert_eq!(
            w.0,
            vec![
                BraidGenerator::Sigma { dir: Direction::Second, j: 1 },
                BraidGenerator::Sigma { dir: Direction::Prime, j: 2 },
                BraidGenerator::Sigma { dir: Direction::Prime, j: 2 },
                BraidGenerator::Sigma { dir: Direction::Prime, j: 1 },
            ]
        );
        assert!(a_ij_word(2, 2, 3).is_err());
        assert_eq!(a_ij_word(2, 5, 6).unwrap().len(), 2 * (5 - 1 - 2) + 2);
    }

    #[test]
    fn a_ij_preserves_handles() {
        let s = sys(
            3,
            vec![t(3, 1, 2), t(3, 1, 2), t(3, 1, 3), t(3, 1, 3)],
            vec![Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()],
            vec![id(3)],
        );
        for i in 1..=3 {
            for j in i + 1..=4 {
                let w = a_ij_word(i, j, 4).unwrap();
                let out = apply_word(&s, &w).unwrap();
                assert_eq!(out.lambda(), s.lambda(), "A_{{{i},{j}}} touched a lambda");
                assert_eq!(out.mu(), s.mu(), "A_{{{i},{j}}} touched a mu");
            }
        }
    }

    #[test]
    fn braid_word_json_round_trip() {
        let w = BraidWord(vec![
            BraidGenerator::Sigma { dir: Direction::Prime, j: 2 },
            BraidGenerator::Rho { dir: Direction::Second, i: 3, k: 1 },
        ]);
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(
            text,
            r#"[{"gen":"sigma","dir":"prime","j":2},{"gen":"rho","dir":"second","i":3,"k":1}]"#
        );
        let back: BraidWord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
