//! The Hurwitz-system data model: validation, simultaneous conjugation,
//! canonical class keys, monodromy reports and exhaustive enumeration.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupOps;
use crate::moves::GroupSystem;
use crate::perm::{all_permutations, all_transpositions, Partition, Permutation};
use crate::subgroup::{analyze_subgroup, factorial, SubgroupAnalysis};

/// Degree bound for class keys, closures and monodromy reports.
pub const MAX_CLASS_DEGREE: usize = 8;
/// Degree bound for exhaustive enumeration.
pub const MAX_ENUMERATE_DEGREE: usize = 6;
/// Cap on `(#choices for t_1..t_{n-1}) * (d!)^{2g}` in `enumerate`.
pub const ENUMERATE_BUDGET: u128 = 2_000_000_000;

/// A Hurwitz system of permutations: `(t_1..t_n; l_1, m_1, .., l_g, m_g)`
/// with every `t_i != 1` and `t_1...t_n = [l_1,m_1]...[l_g,m_g]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HurwitzSystem {
    d: usize,
    entries: GroupSystem<Permutation>,
}

/// One failed invariant reported by [`HurwitzSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `t_i` is the identity (1-based index).
    IdentityEntry { index: usize },
    /// The defining relation fails; both sides in cycle notation.
    RelationBroken { lhs: String, rhs: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IdentityEntry { index } => write!(f, "t_{index} is the identity"),
            Violation::RelationBroken { lhs, rhs } => {
                write!(f, "t-product {lhs} differs from commutator product {rhs}")
            }
        }
    }
}

impl HurwitzSystem {
    pub fn new(
        d: usize,
        t: Vec<Permutation>,
        lambda: Vec<Permutation>,
        mu: Vec<Permutation>,
    ) -> Result<Self> {
        if d == 0 || d > u8::MAX as usize {
            return Err(Error::MalformedSystem(format!("degree {d} out of range")));
        }
        if t.is_empty() {
            return Err(Error::MalformedSystem("need at least one branch entry".into()));
        }
        if t.len() > u8::MAX as usize || lambda.len() > u8::MAX as usize {
            return Err(Error::MalformedSystem("entry counts exceed 255".into()));
        }
        if lambda.len() != mu.len() {
            return Err(Error::MalformedSystem(format!(
                "lambda count {} differs from mu count {}",
                lambda.len(),
                mu.len()
            )));
        }
        for p in t.iter().chain(&lambda).chain(&mu) {
            if p.degree() != d {
                return Err(Error::DegreeMismatch(d, p.degree()));
            }
        }
        Ok(HurwitzSystem {
            d,
            entries: GroupSystem { t, lambda, mu },
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.entries.t.len()
    }

    pub fn genus(&self) -> usize {
        self.entries.lambda.len()
    }

    pub fn t(&self) -> &[Permutation] {
        &self.entries.t
    }

    pub fn lambda(&self) -> &[Permutation] {
        &self.entries.lambda
    }

    pub fn mu(&self) -> &[Permutation] {
        &self.entries.mu
    }

    pub fn entries(&self) -> &GroupSystem<Permutation> {
        &self.entries
    }

    pub(crate) fn with_entries(&self, entries: GroupSystem<Permutation>) -> HurwitzSystem {
        debug_assert_eq!(entries.t.len(), self.n());
        debug_assert_eq!(entries.lambda.len(), self.genus());
        HurwitzSystem { d: self.d, entries }
    }

    /// All entries in order `t_1..t_n, l_1..l_g, m_1..m_g`; generators of
    /// the monodromy group.
    pub fn monodromy_generators(&self) -> Vec<Permutation> {
        let mut out = self.entries.t.clone();
        out.extend(self.entries.lambda.iter().cloned());
        out.extend(self.entries.mu.iter().cloned());
        out
    }

    /// Checks every invariant and returns all violations, not just the first.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, x) in self.entries.t.iter().enumerate() {
            if x.is_identity() {
                out.push(Violation::IdentityEntry { index: i + 1 });
            }
        }
        let lhs = self
            .entries
            .t
            .iter()
            .fold(Permutation::identity(self.d), |p, x| p.mul(x));
        let rhs = self.partial_commutator(self.genus()).expect("g in range");
        if lhs != rhs {
            out.push(Violation::RelationBroken {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `u_k = [l_1,m_1]...[l_k,m_k]`; `u_0 = 1`, and `u_g` equals the full
    /// t-product on a valid system.
    pub fn partial_commutator(&self, k: usize) -> Result<Permutation> {
        self.entries.partial_commutator(k)
    }

    /// Conjugates every entry by the same `s`.
    pub fn conjugate_system(&self, s: &Permutation) -> Result<HurwitzSystem> {
        if s.degree() != self.d {
            return Err(Error::DegreeMismatch(self.d, s.degree()));
        }
        let conj_all = |v: &[Permutation]| v.iter().map(|x| x.conj(s)).collect();
        Ok(HurwitzSystem {
            d: self.d,
            entries: GroupSystem {
                t: conj_all(&self.entries.t),
                lambda: conj_all(&self.entries.lambda),
                mu: conj_all(&self.entries.mu),
            },
        })
    }

    /// Fixed-width byte serialization: `(d, n, g)` then the 0-based image
    /// arrays of `t_1..t_n, l_1, m_1, .., l_g, m_g`.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(3 + (self.n() + 2 * self.genus()) * self.d);
        out.push(self.d as u8);
        out.push(self.n() as u8);
        out.push(self.genus() as u8);
        for p in self.entries.t.iter() {
            out.extend_from_slice(p.raw());
        }
        for (l, m) in self.entries.lambda.iter().zip(&self.entries.mu) {
            out.extend_from_slice(l.raw());
            out.extend_from_slice(m.raw());
        }
        out
    }

    /// Inverse of [`HurwitzSystem::encode`].
    pub fn decode(bytes: &[u8]) -> Result<HurwitzSystem> {
        if bytes.len() < 3 {
            return Err(Error::MalformedSystem("key too short".into()));
        }
        let (d, n, g) = (bytes[0] as usize, bytes[1] as usize, bytes[2] as usize);
        let expect = 3 + (n + 2 * g) * d;
        if bytes.len() != expect || n == 0 || d == 0 {
            return Err(Error::MalformedSystem(format!(
                "key length {} does not match (d,n,g)=({d},{n},{g})",
                bytes.len()
            )));
        }
        let read = |idx: usize| -> Result<Permutation> {
            let start = 3 + idx * d;
            let imgs: Vec<usize> = bytes[start..start + d].iter().map(|&b| b as usize).collect();
            Permutation::from_images(&imgs)
        };
        let t = (0..n).map(read).collect::<Result<Vec<_>>>()?;
        let mut lambda = Vec::with_capacity(g);
        let mut mu = Vec::with_capacity(g);
        for k in 0..g {
            lambda.push(read(n + 2 * k)?);
            mu.push(read(n + 2 * k + 1)?);
        }
        HurwitzSystem::new(d, t, lambda, mu)
    }

    /// Canonical key of the class of this system modulo simultaneous
    /// conjugation: the lexicographically minimal serialization over all
    /// `d!` conjugators. Degree <= 8.
    pub fn class_key(&self) -> Result<ClassKey> {
        if self.d > MAX_CLASS_DEGREE {
            return Err(Error::DegreeTooLarge(self.d, MAX_CLASS_DEGREE));
        }
        let perms = symmetric_group(self.d);
        let mut best = self.encode();
        let mut candidate = vec![0u8; best.len()];
        for s in perms.iter().skip(1) {
            candidate.clear();
            candidate.push(self.d as u8);
            candidate.push(self.n() as u8);
            candidate.push(self.genus() as u8);
            let mut write = |p: &Permutation| {
                let base = candidate.len();
                candidate.resize(base + self.d, 0);
                let simg = s.raw();
                let pimg = p.raw();
                for j in 0..self.d {
                    candidate[base + simg[j] as usize] = simg[pimg[j] as usize];
                }
            };
            for p in &self.entries.t {
                write(p);
            }
            for (l, m) in self.entries.lambda.iter().zip(&self.entries.mu) {
                write(l);
                write(m);
            }
            if candidate < best {
                std::mem::swap(&mut best, &mut candidate);
            }
        }
        Ok(ClassKey(best))
    }

    /// Full monodromy and t-only subgroup analyses. Degree <= 8.
    pub fn monodromy_report(&self) -> Result<MonodromyReport> {
        if self.d > MAX_CLASS_DEGREE {
            return Err(Error::DegreeTooLarge(self.d, MAX_CLASS_DEGREE));
        }
        let analysis = analyze_subgroup(&self.monodromy_generators())?;
        let t_only_analysis = analyze_subgroup(&self.entries.t)?;
        let parts: Vec<usize> = t_only_analysis.orbits.iter().map(|o| o.len()).collect();
        let partition_l_sigma = Partition::new(parts, self.d)?;
        let product = self
            .entries
            .t
            .iter()
            .fold(Permutation::identity(self.d), |p, x| p.mul(x));
        let class = classify(&analysis, self.d);
        Ok(MonodromyReport {
            analysis,
            t_only_analysis,
            partition_l_sigma,
            product_cycle_type: product.cycle_type(),
            class,
        })
    }
}

impl fmt::Display for HurwitzSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.t.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        for k in 0..self.genus() {
            write!(f, ";{},{}", self.entries.lambda[k], self.entries.mu[k])?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for HurwitzSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical byte serialization of a system's conjugation class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassKey(pub Vec<u8>);

impl ClassKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
    pub fn hex(&self) -> String {
        hex::encode(&self.0)
    }
    /// The canonical representative the key serializes.
    pub fn representative(&self) -> Result<HurwitzSystem> {
        HurwitzSystem::decode(&self.0)
    }
}

static SD_CACHE: Lazy<Mutex<HashMap<usize, Arc<Vec<Permutation>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// All of `S_d`, cached, identity first (lexicographic image order).
pub(crate) fn symmetric_group(d: usize) -> Arc<Vec<Permutation>> {
    let mut cache = SD_CACHE.lock().unwrap();
    cache
        .entry(d)
        .or_insert_with(|| Arc::new(all_permutations(d)))
        .clone()
}

/// Monodromy classification of a system's generated subgroup.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MonodromyClass {
    FullSymmetric,
    ImprimitiveTransitive,
    PrimitiveNotFull,
    Intransitive,
}

impl MonodromyClass {
    pub fn label(self) -> &'static str {
        match self {
            MonodromyClass::FullSymmetric => "full_symmetric",
            MonodromyClass::ImprimitiveTransitive => "imprimitive_transitive",
            MonodromyClass::PrimitiveNotFull => "primitive_not_full",
            MonodromyClass::Intransitive => "intransitive",
        }
    }
}

fn classify(analysis: &SubgroupAnalysis, d: usize) -> MonodromyClass {
    if !analysis.transitive {
        return MonodromyClass::Intransitive;
    }
    if analysis.group_order == Some(factorial(d)) {
        return MonodromyClass::FullSymmetric;
    }
    match analysis.primitive {
        Some(false) => MonodromyClass::ImprimitiveTransitive,
        _ => MonodromyClass::PrimitiveNotFull,
    }
}

#[derive(Clone, Debug)]
pub struct MonodromyReport {
    /// Analysis of the full monodromy group `<t, lambda, mu>`.
    pub analysis: SubgroupAnalysis,
    /// Analysis of `<t_1..t_n>` alone.
    pub t_only_analysis: SubgroupAnalysis,
    /// Orbit sizes of the t-only group as a partition of d.
    pub partition_l_sigma: Partition,
    /// Cycle type of `t_1 * ... * t_n`.
    pub product_cycle_type: Partition,
    pub class: MonodromyClass,
}

/// Which monodromy groups a filter keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonodromyFilter {
    Any,
    Transitive,
    FullSymmetric,
    ImprimitiveTransitive,
}

impl MonodromyFilter {
    pub fn label(self) -> &'static str {
        match self {
            MonodromyFilter::Any => "any",
            MonodromyFilter::Transitive => "transitive",
            MonodromyFilter::FullSymmetric => "full_symmetric",
            MonodromyFilter::ImprimitiveTransitive => "imprimitive_transitive",
        }
    }
}

/// Shape and monodromy constraints for enumeration.
#[derive(Clone, Debug)]
pub struct SystemFilter {
    /// All of `t_1..t_n` must be transpositions (or all but the last when a
    /// special tail is set).
    pub require_transpositions: bool,
    /// Cycle type required of `t_n`; the simple entries are then
    /// `t_1..t_{n-1}`.
    pub special_tail: Option<Partition>,
    pub monodromy: MonodromyFilter,
}

impl SystemFilter {
    pub fn transpositions(monodromy: MonodromyFilter) -> Self {
        SystemFilter {
            require_transpositions: true,
            special_tail: None,
            monodromy,
        }
    }

    pub fn validate_for(&self, d: usize) -> Result<()> {
        if let Some(tail) = &self.special_tail {
            if tail.total() != d {
                return Err(Error::InvalidPartition(format!(
                    "special tail {tail} is not a partition of {d}"
                )));
            }
            if tail.is_trivial() {
                return Err(Error::InvalidPartition(
                    "special tail must not be the all-ones partition".into(),
                ));
            }
        }
        Ok(())
    }

    /// Whether `t_n` has the required shape.
    fn tail_ok(&self, t_n: &Permutation) -> bool {
        if t_n.is_identity() {
            return false;
        }
        if let Some(tail) = &self.special_tail {
            return &t_n.cycle_type() == tail;
        }
        if self.require_transpositions {
            return t_n.is_transposition();
        }
        true
    }

    /// Monodromy predicate on the full generator list, avoiding group
    /// closure on the hot path.
    fn monodromy_ok(&self, gens: &[Permutation], d: usize) -> bool {
        match self.monodromy {
            MonodromyFilter::Any => true,
            MonodromyFilter::Transitive => {
                analyze_orbit_count(gens) == 1
            }
            MonodromyFilter::FullSymmetric => {
                if analyze_orbit_count(gens) != 1 {
                    return false;
                }
                let analysis = analyze_subgroup(gens).expect("checked gens");
                if analysis.primitive != Some(true) {
                    return false;
                }
                if gens.iter().any(|p| p.is_transposition()) {
                    true
                } else {
                    analysis.group_order == Some(factorial(d))
                }
            }
            MonodromyFilter::ImprimitiveTransitive => {
                if analyze_orbit_count(gens) != 1 {
                    return false;
                }
                let analysis = analyze_subgroup(gens).expect("checked gens");
                analysis.primitive == Some(false)
            }
        }
    }
}

fn analyze_orbit_count(gens: &[Permutation]) -> usize {
    crate::subgroup::orbits(gens).map(|o| o.len()).unwrap_or(usize::MAX)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateStats {
    /// Tuples `(t_1..t_{n-1}, lambda, mu)` inspected.
    pub candidates: u64,
    /// Valid systems passing the filter.
    pub emitted: u64,
}

/// The allowed values for the free entries `t_1..t_{n-1}`.
fn free_entry_pool(d: usize, filter: &SystemFilter) -> Vec<Permutation> {
    if filter.require_transpositions || filter.special_tail.is_some() {
        all_transpositions(d)
    } else {
        all_permutations(d)
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect()
    }
}

/// Exhaustively enumerates the valid systems for `(d, n, g)` passing the
/// filter, invoking `f` on each exactly once in a deterministic order
/// (free t-entries vary outermost, then the handle tuples).
///
/// `t1_restrict` limits `t_1` to one index into the free-entry pool; the
/// multiset union over all indices equals the unrestricted stream, which is
/// what allows partitioned parallel production.
pub fn enumerate_partition_for_each<F: FnMut(&HurwitzSystem)>(
    d: usize,
    n: usize,
    g: usize,
    filter: &SystemFilter,
    t1_restrict: Option<usize>,
    mut f: F,
) -> Result<EnumerateStats> {
    if d == 0 || n == 0 {
        return Err(Error::MalformedSystem("need d >= 1 and n >= 1".into()));
    }
    if d > MAX_ENUMERATE_DEGREE {
        return Err(Error::DegreeTooLarge(d, MAX_ENUMERATE_DEGREE));
    }
    filter.validate_for(d)?;
    let pool = free_entry_pool(d, filter);
    if pool.is_empty() {
        return Err(Error::InfeasibleFilter(format!("no allowed entries in degree {d}")));
    }
    let fact = factorial(d) as u128;
    let budget = (pool.len() as u128)
        .checked_pow((n - 1) as u32)
        .and_then(|c| c.checked_mul(fact.checked_pow(2 * g as u32)?))
        .ok_or_else(|| Error::GuardExceeded("enumeration budget overflows".into()))?;
    if budget > ENUMERATE_BUDGET {
        return Err(Error::GuardExceeded(format!(
            "free-choice count {budget} exceeds {ENUMERATE_BUDGET}"
        )));
    }

    // Precompute the handle tuples and their commutator products u_g.
    let sd = symmetric_group(d);
    let mut handles: Vec<(Vec<Permutation>, Vec<Permutation>, Permutation)> = Vec::new();
    let mut lam_idx = vec![0usize; g];
    let mut mu_idx = vec![0usize; g];
    loop {
        let lambda: Vec<Permutation> = lam_idx.iter().map(|&i| sd[i].clone()).collect();
        let mu: Vec<Permutation> = mu_idx.iter().map(|&i| sd[i].clone()).collect();
        let mut u = Permutation::identity(d);
        for k in 0..g {
            u = u.mul(&lambda[k].commutator(&mu[k]));
        }
        handles.push((lambda, mu, u));
        // odometer over (lam_1, mu_1, .., lam_g, mu_g), mu fastest
        let mut pos = 2 * g;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            let slot = if pos % 2 == 1 { &mut mu_idx[pos / 2] } else { &mut lam_idx[pos / 2] };
            *slot += 1;
            if *slot < sd.len() {
                break;
            }
            *slot = 0;
        }
        if lam_idx.iter().chain(&mu_idx).all(|&i| i == 0) {
            break;
        }
    }

    let mut stats = EnumerateStats::default();
    let t1_range: Vec<usize> = match t1_restrict {
        Some(i) if n > 1 => {
            if i >= pool.len() {
                return Err(Error::IndexOutOfRange(format!("t1 partition index {i}")));
            }
            vec![i]
        }
        _ => (0..pool.len()).collect(),
    };

    // Depth-first odometer over t_1..t_{n-1} maintaining prefix products.
    let mut choice = vec![0usize; n - 1];
    let mut prefix: Vec<Permutation> = Vec::with_capacity(n);
    prefix.push(Permutation::identity(d));

    fn rec<F: FnMut(&HurwitzSystem)>(
        depth: usize,
        n: usize,
        d: usize,
        pool: &[Permutation],
        t1_range: &[usize],
        choice: &mut [usize],
        prefix: &mut Vec<Permutation>,
        handles: &[(Vec<Permutation>, Vec<Permutation>, Permutation)],
        filter: &SystemFilter,
        stats: &mut EnumerateStats,
        f: &mut F,
    ) {
        if depth == n - 1 {
            let p_inv = prefix.last().unwrap().inverse();
            for (lambda, mu, u) in handles {
                stats.candidates += 1;
                let t_n = p_inv.mul(u);
                if !filter.tail_ok(&t_n) {
                    continue;
                }
                let mut t: Vec<Permutation> =
                    choice.iter().map(|&c| pool[c].clone()).collect();
                t.push(t_n);
                let mut gens = t.clone();
                gens.extend(lambda.iter().cloned());
                gens.extend(mu.iter().cloned());
                if !filter.monodromy_ok(&gens, d) {
                    continue;
                }
                let sys = HurwitzSystem {
                    d,
                    entries: GroupSystem {
                        t,
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                    },
                };
                debug_assert!(sys.is_valid());
                stats.emitted += 1;
                f(&sys);
            }
            return;
        }
        let range: Vec<usize> = if depth == 0 {
            t1_range.to_vec()
        } else {
            (0..pool.len()).collect()
        };
        for c in range {
            choice[depth] = c;
            let next = prefix.last().unwrap().mul(&pool[c]);
            prefix.push(next);
            rec(depth + 1, n, d, pool, t1_range, choice, prefix, handles, filter, stats, f);
            prefix.pop();
        }
    }

    rec(
        0,
        n,
        d,
        &pool,
        &t1_range,
        &mut choice,
        &mut prefix,
        &handles,
        filter,
        &mut stats,
        &mut f,
    );
    Ok(stats)
}

/// Unrestricted enumeration; see [`enumerate_partition_for_each`].
pub fn enumerate_for_each<F: FnMut(&HurwitzSystem)>(
    d: usize,
    n: usize,
    g: usize,
    filter: &SystemFilter,
    f: F,
) -> Result<EnumerateStats> {
    enumerate_partition_for_each(d, n, g, filter, None, f)
}

/// Collects the full enumeration; intended for small instances.
pub fn enumerate(d: usize, n: usize, g: usize, filter: &SystemFilter) -> Result<Vec<HurwitzSystem>> {
    let mut out = Vec::new();
    enumerate_for_each(d, n, g, filter, |s| out.push(s.clone()))?;
    Ok(out)
}

/// Number of `t_1` partitions available to parallel producers.
pub fn enumerate_partition_count(d: usize, n: usize, filter: &SystemFilter) -> usize {
    if n <= 1 {
        1
    } else {
        free_entry_pool(d, filter).len()
    }
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Serialize, Deserialize)]
struct SystemRepr {
    d: usize,
    n: usize,
    g: usize,
    t: Vec<Vec<Vec<usize>>>,
    lambda: Vec<Vec<Vec<usize>>>,
    mu: Vec<Vec<Vec<usize>>>,
}

impl Serialize for HurwitzSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = SystemRepr {
            d: self.d,
            n: self.n(),
            g: self.genus(),
            t: self.entries.t.iter().map(|p| p.cycles()).collect(),
            lambda: self.entries.lambda.iter().map(|p| p.cycles()).collect(),
            mu: self.entries.mu.iter().map(|p| p.cycles()).collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HurwitzSystem {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SystemRepr::deserialize(de)?;
        if repr.t.len() != repr.n || repr.lambda.len() != repr.g || repr.mu.len() != repr.g {
            return Err(D::Error::custom("entry counts disagree with n, g"));
        }
        let parse = |cycles: &Vec<Vec<usize>>| {
            Permutation::from_cycles(repr.d, cycles).map_err(|e| D::Error::custom(e.to_string()))
        };
        let t = repr.t.iter().map(parse).collect::<std::result::Result<Vec<_>, _>>()?;
        let lambda = repr.lambda.iter().map(parse).collect::<std::result::Result<Vec<_>, _>>()?;
        let mu = repr.mu.iter().map(parse).collect::<std::result::Result<Vec<_>, _>>()?;
        HurwitzSystem::new(repr.d, t, lambda, mu).map_err(|e| D::Error::custom(e.to_string()))
    }
}
