//! Breadth-first enumeration of braid-move orbits on systems and on
//! conjugacy classes, and component counting over a filtered set.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moves::{apply_generator, BraidGenerator, Direction};
use crate::perm::{Partition, Permutation};
use crate::system::{
    enumerate_partition_count, enumerate_partition_for_each, HurwitzSystem, MonodromyClass,
    MonodromyReport, SystemFilter, MAX_CLASS_DEGREE,
};

/// Default cap on the visited-set size; override per call (the CLI wires the
/// `HURWITZ_GUARD_STATES` environment variable into this).
pub const DEFAULT_MAX_STATES: usize = 50_000_000;

#[derive(Clone, Copy, Debug)]
pub struct OrbitConfig {
    pub max_states: usize,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

/// Which braid generators drive the orbit walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSet {
    /// All sigma, rho and tau moves in both directions.
    Full,
    /// All sigma moves plus `rho_{a,k}` and `tau_{b,k}` for every handle
    /// index `k`, both directions, with fixed strand indices `a` and `b`.
    Reduced { a: usize, b: usize },
}

impl GeneratorSet {
    pub fn tokens(&self, n: usize, g: usize) -> Result<Vec<BraidGenerator>> {
        let mut out = Vec::new();
        let dirs = [Direction::Prime, Direction::Second];
        for j in 1..n {
            for dir in dirs {
                out.push(BraidGenerator::Sigma { dir, j });
            }
        }
        match *self {
            GeneratorSet::Full => {
                for i in 1..=n {
                    for k in 1..=g {
                        for dir in dirs {
                            out.push(BraidGenerator::Rho { dir, i, k });
                            out.push(BraidGenerator::Tau { dir, i, k });
                        }
                    }
                }
            }
            GeneratorSet::Reduced { a, b } => {
                if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
                    return Err(Error::IndexOutOfRange(format!(
                        "reduced generator strands ({a},{b}) with n={n}"
                    )));
                }
                for k in 1..=g {
                    for dir in dirs {
                        out.push(BraidGenerator::Rho { dir, i: a, k });
                        out.push(BraidGenerator::Tau { dir, i: b, k });
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMode {
    Systems,
    Classes,
}

impl OrbitMode {
    pub fn label(self) -> &'static str {
        match self {
            OrbitMode::Systems => "systems",
            OrbitMode::Classes => "classes",
        }
    }
}

/// Which normal form an orbit contains; see [`normal_form_system`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NormalFormTag {
    #[serde(rename = "eq4.45a")]
    Eq445a,
    #[serde(rename = "eq5.65bis")]
    Eq565bis,
    #[serde(rename = "eq6.81")]
    Eq681,
    #[serde(rename = "eq6.72")]
    Eq672,
}

impl NormalFormTag {
    pub const ALL: [NormalFormTag; 4] = [
        NormalFormTag::Eq445a,
        NormalFormTag::Eq565bis,
        NormalFormTag::Eq681,
        NormalFormTag::Eq672,
    ];

    pub fn label(self) -> &'static str {
        match self {
            NormalFormTag::Eq445a => "eq4.45a",
            NormalFormTag::Eq565bis => "eq5.65bis",
            NormalFormTag::Eq681 => "eq6.81",
            NormalFormTag::Eq672 => "eq6.72",
        }
    }
}

fn doubled_star(d: usize, top: usize, n: usize) -> Option<Vec<Permutation>> {
    // (12),(12),(13),(13),...,(1 top),(1 top) padded with copies of (1 top)
    // to length n; None when the shape cannot fill n slots evenly
    if top < 2 || n < 2 * (top - 1) || (n - 2 * (top - 1)) % 2 != 0 {
        return None;
    }
    let mut t = Vec::with_capacity(n);
    for i in 2..=top {
        let tr = Permutation::transposition(d, 1, i).ok()?;
        t.push(tr.clone());
        t.push(tr);
    }
    let last = Permutation::transposition(d, 1, top).ok()?;
    while t.len() < n {
        t.push(last.clone());
    }
    Some(t)
}

/// The normal-form system named by `tag`, instantiated at `(d, n, g)` when
/// the parameters admit it.
pub fn normal_form_system(tag: NormalFormTag, d: usize, n: usize, g: usize) -> Option<HurwitzSystem> {
    let id = Permutation::identity(d);
    match tag {
        NormalFormTag::Eq445a => {
            if d < 2 || n < 2 * d.saturating_sub(2) {
                return None;
            }
            let t = doubled_star(d, d, n)?;
            HurwitzSystem::new(d, t, vec![id.clone(); g], vec![id; g]).ok()
        }
        NormalFormTag::Eq565bis => {
            if g < 1 || d < 3 || n != 2 * d - 4 {
                return None;
            }
            let t = doubled_star(d, d - 1, n)?;
            let mut mu = vec![id.clone(); g];
            *mu.last_mut().unwrap() = Permutation::transposition(d, 1, d).ok()?;
            HurwitzSystem::new(d, t, vec![id; g], mu).ok()
        }
        NormalFormTag::Eq681 => {
            if g != 1 || d < 4 || n != 2 * d - 6 {
                return None;
            }
            let t = doubled_star(d, d - 2, n)?;
            let mu = Permutation::from_cycles(d, &[vec![1, d - 1, d]]).ok()?;
            HurwitzSystem::new(d, t, vec![id], vec![mu]).ok()
        }
        NormalFormTag::Eq672 => {
            if g != 1 || n % 2 != 0 || n + 1 < d - 1 || n >= 2 * d - 2 {
                return None;
            }
            let e = n / 2 + 1;
            if e < 2 || e >= d {
                return None;
            }
            let t = doubled_star(d, e, n)?;
            let cycle: Vec<usize> = std::iter::once(1).chain(e + 1..=d).collect();
            let mu = Permutation::from_cycles(d, &[cycle]).ok()?;
            HurwitzSystem::new(d, t, vec![id], vec![mu]).ok()
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    /// In classes mode this is the canonical class representative.
    pub representative: HurwitzSystem,
    /// Number of filtered states in the orbit (all states for `orbit`).
    pub orbit_size: u64,
    pub mode: OrbitMode,
    pub monodromy: MonodromyReport,
    /// Which normal form, if any, lies in this orbit.
    pub normal_form_matched: Option<NormalFormTag>,
}

fn state_key(sys: &HurwitzSystem, mode: OrbitMode) -> Result<Vec<u8>> {
    match mode {
        OrbitMode::Systems => Ok(sys.encode()),
        OrbitMode::Classes => Ok(sys.class_key()?.0),
    }
}

/// Breadth-first closure from `start_key`. Newly reached states are added to
/// `visited`; states accepted by `member` are counted and reported through
/// `on_member`. The representative for expansion is reconstructed by
/// decoding the stored key.
fn bfs_closure<F: Fn(&HurwitzSystem) -> bool>(
    start_key: Vec<u8>,
    tokens: &[BraidGenerator],
    mode: OrbitMode,
    config: &OrbitConfig,
    visited: &mut HashSet<Vec<u8>>,
    member: &F,
    mut on_member: impl FnMut(&[u8]),
) -> Result<u64> {
    let mut queue = VecDeque::new();
    let mut members = 0u64;
    let start_sys = HurwitzSystem::decode(&start_key)?;
    if member(&start_sys) {
        members += 1;
        on_member(&start_key);
    }
    visited.insert(start_key.clone());
    queue.push_back(start_key);
    while let Some(key) = queue.pop_front() {
        let sys = HurwitzSystem::decode(&key)?;
        for &gen in tokens {
            let next = apply_generator(&sys, gen)?;
            let nkey = state_key(&next, mode)?;
            if visited.contains(&nkey) {
                continue;
            }
            if visited.len() >= config.max_states {
                return Err(Error::GuardExceeded(format!(
                    "visited-set cap {} reached",
                    config.max_states
                )));
            }
            if member(&next) {
                members += 1;
                on_member(&nkey);
            }
            visited.insert(nkey.clone());
            queue.push_back(nkey);
        }
    }
    Ok(members)
}

fn tag_for_members(
    members: &HashSet<Vec<u8>>,
    d: usize,
    n: usize,
    g: usize,
    mode: OrbitMode,
) -> Option<NormalFormTag> {
    for tag in NormalFormTag::ALL {
        if let Some(form) = normal_form_system(tag, d, n, g) {
            if let Ok(key) = state_key(&form, mode) {
                if members.contains(&key) {
                    return Some(tag);
                }
            }
        }
    }
    None
}

/// Full braid orbit of one system. In classes mode states are conjugacy
/// classes (degree <= 8); in systems mode exact tuples.
pub fn orbit(
    start: &HurwitzSystem,
    gens: &GeneratorSet,
    mode: OrbitMode,
    config: &OrbitConfig,
) -> Result<OrbitReport> {
    if !start.is_valid() {
        return Err(Error::Precondition("orbit start must be a valid system".into()));
    }
    if mode == OrbitMode::Classes && start.d() > MAX_CLASS_DEGREE {
        return Err(Error::DegreeTooLarge(start.d(), MAX_CLASS_DEGREE));
    }
    let tokens = gens.tokens(start.n(), start.genus())?;
    let start_key = state_key(start, mode)?;
    let representative = HurwitzSystem::decode(&start_key)?;
    let mut visited = HashSet::new();
    let size = bfs_closure(
        start_key,
        &tokens,
        mode,
        config,
        &mut visited,
        &|_: &HurwitzSystem| true,
        |_| {},
    )?;
    let tag = tag_for_members(&visited, start.d(), start.n(), start.genus(), mode);
    let monodromy = representative.monodromy_report()?;
    Ok(OrbitReport {
        representative,
        orbit_size: size,
        mode,
        monodromy,
        normal_form_matched: tag,
    })
}

/// Enumerates the filtered set and collects each state key with the index
/// of its first appearance in enumeration order. Partitioned over `t_1` for
/// parallel production; the merged result is schedule-independent.
fn filtered_key_set(
    d: usize,
    n: usize,
    g: usize,
    filter: &SystemFilter,
    mode: OrbitMode,
) -> Result<Vec<(Vec<u8>, (u32, u64))>> {
    let parts = enumerate_partition_count(d, n, filter) as u32;
    let maps: Vec<Result<HashMap<Vec<u8>, (u32, u64)>>> = (0..parts)
        .into_par_iter()
        .map(|p| {
            let mut local: HashMap<Vec<u8>, (u32, u64)> = HashMap::new();
            let mut idx = 0u64;
            enumerate_partition_for_each(d, n, g, filter, Some(p as usize), |sys| {
                let key = state_key(sys, mode).expect("degree checked");
                local.entry(key).or_insert((p, idx));
                idx += 1;
            })?;
            Ok(local)
        })
        .collect();
    let mut merged: HashMap<Vec<u8>, (u32, u64)> = HashMap::new();
    for m in maps {
        for (k, v) in m? {
            merged
                .entry(k)
                .and_modify(|old| {
                    if v < *old {
                        *old = v;
                    }
                })
                .or_insert(v);
        }
    }
    let mut out: Vec<(Vec<u8>, (u32, u64))> = merged.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out)
}

/// Shape part of a filter. Braid moves preserve entry shapes and the
/// monodromy group, but can carry a special tail away from the last slot;
/// orbit sizes are counted against this predicate so they partition the
/// enumerated set.
fn shape_member(filter: &SystemFilter) -> impl Fn(&HurwitzSystem) -> bool + '_ {
    move |sys: &HurwitzSystem| {
        if let Some(tail) = &filter.special_tail {
            let n = sys.n();
            if &sys.t()[n - 1].cycle_type() != tail {
                return false;
            }
            sys.t()[..n - 1].iter().all(|x| x.is_transposition())
        } else {
            true
        }
    }
}

/// Partitions the filtered set for `(d, n, g)` into braid orbits by repeated
/// BFS from unvisited seeds in enumeration order. Orbit sizes count filtered
/// states, and their sum is asserted to equal the filtered total. Reports
/// are sorted by monodromy class, orbit size, then representative key.
pub fn components(
    d: usize,
    n: usize,
    g: usize,
    filter: &SystemFilter,
    gens: &GeneratorSet,
    mode: OrbitMode,
    config: &OrbitConfig,
) -> Result<Vec<OrbitReport>> {
    if mode == OrbitMode::Classes && d > MAX_CLASS_DEGREE {
        return Err(Error::DegreeTooLarge(d, MAX_CLASS_DEGREE));
    }
    let tokens = gens.tokens(n, g)?;
    let seeds = filtered_key_set(d, n, g, filter, mode)?;
    let total = seeds.len() as u64;
    let member = shape_member(filter);
    let mut visited: HashSet<Vec<u8>> = HashSet::new();
    let mut reports = Vec::new();
    let mut covered = 0u64;
    for (seed, _) in &seeds {
        if visited.contains(seed) {
            continue;
        }
        let mut orbit_members: HashSet<Vec<u8>> = HashSet::new();
        let size = bfs_closure(
            seed.clone(),
            &tokens,
            mode,
            config,
            &mut visited,
            &member,
            |k| {
                orbit_members.insert(k.to_vec());
            },
        )?;
        covered += size;
        let representative = HurwitzSystem::decode(seed)?;
        let monodromy = representative.monodromy_report()?;
        let tag = tag_for_members(&orbit_members, d, n, g, mode);
        reports.push(OrbitReport {
            representative,
            orbit_size: size,
            mode,
            monodromy,
            normal_form_matched: tag,
        });
    }
    assert_eq!(
        covered, total,
        "orbit sizes must partition the filtered set ({covered} vs {total})"
    );
    reports.sort_by(|a, b| {
        (a.monodromy.class, a.orbit_size, a.representative.encode()).cmp(&(
            b.monodromy.class,
            b.orbit_size,
            b.representative.encode(),
        ))
    });
    Ok(reports)
}

/// Whether the orbit partition of the filtered set under the reduced
/// generator set `(a, b)` equals the partition under the full set.
/// Compared in systems mode, the finer of the two.
pub fn reduced_equals_full(
    d: usize,
    n: usize,
    g: usize,
    filter: &SystemFilter,
    a: usize,
    b: usize,
) -> Result<bool> {
    let config = OrbitConfig::default();
    let partition_map = |gens: &GeneratorSet| -> Result<HashMap<Vec<u8>, Vec<u8>>> {
        let tokens = gens.tokens(n, g)?;
        let seeds = filtered_key_set(d, n, g, filter, OrbitMode::Systems)?;
        let member = shape_member(filter);
        let mut visited = HashSet::new();
        let mut owner: HashMap<Vec<u8>, Vec<u8>> = HashMap::new();
        for (seed, _) in &seeds {
            if visited.contains(seed) {
                continue;
            }
            let mut members: Vec<Vec<u8>> = Vec::new();
            bfs_closure(
                seed.clone(),
                &tokens,
                OrbitMode::Systems,
                &config,
                &mut visited,
                &member,
                |k| members.push(k.to_vec()),
            )?;
            let min = members.iter().min().cloned().unwrap_or_else(|| seed.clone());
            for m in members {
                owner.insert(m, min.clone());
            }
        }
        Ok(owner)
    };
    let full = partition_map(&GeneratorSet::Full)?;
    let reduced = partition_map(&GeneratorSet::Reduced { a, b })?;
    Ok(full == reduced)
}

/// Expected number of genus-1 components with imprimitive transitive
/// monodromy: connected degree-m unramified covers of a genus-1 curve
/// correspond to index-m sublattices of the rank-2 integer lattice, counted
/// here by enumerating Hermite normal forms `[[a,0],[c,b]]` with `ab = m`,
/// `0 <= c < b`, summed over proper nontrivial divisors m of d. Returns 0
/// when d is prime.
pub fn expected_imprimitive_components(d: usize) -> u64 {
    let mut total = 0u64;
    for m in 2..d {
        if d % m != 0 {
            continue;
        }
        for a in 1..=m {
            if m % a != 0 {
                continue;
            }
            let b = m / a;
            total += b as u64; // c ranges over 0..b
        }
    }
    total
}

// ---------------------------------------------------------------------------
// Component table rendering

/// Formats block systems without commas so the CSV needs no quoting:
/// blocks joined by `|`, points by `.`.
fn blocks_field(report: &MonodromyReport) -> String {
    match &report.analysis.block_system {
        Some(blocks) => blocks
            .iter()
            .map(|b| b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("."))
            .collect::<Vec<_>>()
            .join("|"),
        None => String::new(),
    }
}

pub const COMPONENT_CSV_HEADER: &str =
    "rep_key_hex,mode,orbit_size,monodromy,transitive,primitive,blocks,normal_form";

fn rep_key_hex(r: &OrbitReport) -> String {
    match r.mode {
        OrbitMode::Systems => hex::encode(r.representative.encode()),
        OrbitMode::Classes => hex::encode(
            r.representative
                .class_key()
                .map(|k| k.0)
                .unwrap_or_else(|_| r.representative.encode()),
        ),
    }
}

/// One CSV row per component, stable column order.
pub fn component_table_csv(reports: &[OrbitReport]) -> String {
    let mut out = String::from(COMPONENT_CSV_HEADER);
    out.push('\n');
    for r in reports {
        let primitive = match r.monodromy.analysis.primitive {
            Some(p) => p.to_string(),
            None => String::new(),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            rep_key_hex(r),
            r.mode.label(),
            r.orbit_size,
            r.monodromy.class.label(),
            r.monodromy.analysis.transitive,
            primitive,
            blocks_field(&r.monodromy),
            r.normal_form_matched.map(|t| t.label()).unwrap_or(""),
        ));
    }
    out
}

#[derive(Serialize)]
struct ReportRepr<'a> {
    rep_key_hex: String,
    mode: &'static str,
    orbit_size: u64,
    representative: &'a HurwitzSystem,
    monodromy: &'static str,
    transitive: bool,
    primitive: Option<bool>,
    orbits: &'a [Vec<usize>],
    blocks: Option<&'a [Vec<usize>]>,
    group_order: Option<u64>,
    t_orbit_partition: &'a [usize],
    product_cycle_type: &'a [usize],
    normal_form: Option<&'static str>,
}

/// JSON rendering of the component table.
pub fn component_table_json(reports: &[OrbitReport]) -> Result<String> {
    let reprs: Vec<ReportRepr> = reports
        .iter()
        .map(|r| ReportRepr {
            rep_key_hex: rep_key_hex(r),
            mode: r.mode.label(),
            orbit_size: r.orbit_size,
            representative: &r.representative,
            monodromy: r.monodromy.class.label(),
            transitive: r.monodromy.analysis.transitive,
            primitive: r.monodromy.analysis.primitive,
            orbits: &r.monodromy.analysis.orbits,
            blocks: r.monodromy.analysis.block_system.as_deref(),
            group_order: r.monodromy.analysis.group_order,
            t_orbit_partition: r.monodromy.partition_l_sigma.parts(),
            product_cycle_type: r.monodromy.product_cycle_type.parts(),
            normal_form: r.normal_form_matched.map(|t| t.label()),
        })
        .collect();
    serde_json::to_string_pretty(&reprs).map_err(|e| Error::Json(e.to_string()))
}

/// Partition serializes as its part list in the JSON table.
impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

#[allow(unused)]
fn monodromy_class_sort_key(c: MonodromyClass) -> u8 {
    c as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::system::MonodromyFilter;

    fn t(d: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(d, a, b).unwrap()
    }

    fn id(d: usize) -> Permutation {
        Permutation::identity(d)
    }

    #[test]
    fn degree_two_orbit_covers_everything() {
        let start =
            HurwitzSystem::new(2, vec![t(2, 1, 2), t(2, 1, 2)], vec![id(2)], vec![id(2)]).unwrap();
        let r = orbit(&start, &GeneratorSet::Full, OrbitMode::Systems, &OrbitConfig::default())
            .unwrap();
        assert_eq!(r.orbit_size, 4);
    }

    #[test]
    fn sigma_fixes_equal_pair_orbit() {
        let start = HurwitzSystem::new(2, vec![t(2, 1, 2), t(2, 1, 2)], vec![], vec![]).unwrap();
        let r = orbit(&start, &GeneratorSet::Full, OrbitMode::Systems, &OrbitConfig::default())
            .unwrap();
        assert_eq!(r.orbit_size, 1);
    }

    #[test]
    fn d3_classes_orbit_reaches_all_full_monodromy_classes() {
        let start =
            HurwitzSystem::new(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![t(3, 1, 3)])
                .unwrap();
        let r = orbit(&start, &GeneratorSet::Full, OrbitMode::Classes, &OrbitConfig::default())
            .unwrap();
        // oracle: enumerate and canonicalize every full-monodromy class
        let filter = SystemFilter::transpositions(MonodromyFilter::FullSymmetric);
        let mut classes = std::collections::HashSet::new();
        crate::system::enumerate_for_each(3, 2, 1, &filter, |s| {
            classes.insert(s.class_key().unwrap());
        })
        .unwrap();
        assert_eq!(r.orbit_size, classes.len() as u64);
        assert_eq!(r.normal_form_matched, Some(NormalFormTag::Eq565bis));
    }

    #[test]
    fn components_d2_single() {
        let filter = SystemFilter::transpositions(MonodromyFilter::Any);
        for n in [2usize, 4] {
            let reports = components(
                2,
                n,
                1,
                &filter,
                &GeneratorSet::Full,
                OrbitMode::Classes,
                &OrbitConfig::default(),
            )
            .unwrap();
            assert_eq!(reports.len(), 1, "d=2, n={n} must be a single component");
        }
    }

    #[test]
    fn components_d4_imprimitive_count_matches_lattice_oracle() {
        let filter = SystemFilter::transpositions(MonodromyFilter::ImprimitiveTransitive);
        let reports = components(
            4,
            2,
            1,
            &filter,
            &GeneratorSet::Full,
            OrbitMode::Classes,
            &OrbitConfig::default(),
        )
        .unwrap();
        assert_eq!(reports.len() as u64, expected_imprimitive_components(4));
        for r in &reports {
            assert_eq!(r.monodromy.class, MonodromyClass::ImprimitiveTransitive);
            assert!(r.monodromy.analysis.block_system.is_some());
        }
    }

    #[test]
    fn components_empty_filter_is_empty() {
        let filter = SystemFilter::transpositions(MonodromyFilter::Any);
        let reports = components(
            3,
            1,
            0,
            &filter,
            &GeneratorSet::Full,
            OrbitMode::Classes,
            &OrbitConfig::default(),
        )
        .unwrap();
        assert!(reports.is_empty());
    }

    #[test]
    fn orbit_sizes_invariant_under_global_conjugation() {
        let start =
            HurwitzSystem::new(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![t(3, 1, 3)])
                .unwrap();
        let base = orbit(&start, &GeneratorSet::Full, OrbitMode::Systems, &OrbitConfig::default())
            .unwrap();
        for s in crate::perm::all_permutations(3) {
            let conj = start.conjugate_system(&s).unwrap();
            let r =
                orbit(&conj, &GeneratorSet::Full, OrbitMode::Systems, &OrbitConfig::default())
                    .unwrap();
            assert_eq!(r.orbit_size, base.orbit_size);
        }
    }

    #[test]
    fn reduced_equals_full_small_instances() {
        let filter = SystemFilter::transpositions(MonodromyFilter::Any);
        assert!(reduced_equals_full(3, 2, 1, &filter, 1, 1).unwrap());
        assert!(reduced_equals_full(2, 2, 1, &filter, 1, 2).unwrap());
        assert!(reduced_equals_full(3, 4, 1, &filter, 1, 4).unwrap());
    }

    #[test]
    fn lattice_oracle_values() {
        assert_eq!(expected_imprimitive_components(4), 3);
        for p in [2usize, 3, 5, 7] {
            assert_eq!(expected_imprimitive_components(p), 0, "prime {p}");
        }
        assert_eq!(expected_imprimitive_components(6), 7);
        // independent route: sum of divisor sums over proper divisors
        let sigma = |m: usize| -> u64 { (1..=m).filter(|k| m % k == 0).map(|k| k as u64).sum() };
        for d in 2..=12usize {
            let expect: u64 = (2..d).filter(|m| d % m == 0).map(sigma).sum();
            assert_eq!(expected_imprimitive_components(d), expect);
        }
    }

    #[test]
    fn guard_trips_on_tiny_cap() {
        let start =
            HurwitzSystem::new(3, vec![t(3, 1, 2), t(3, 1, 2)], vec![id(3)], vec![t(3, 1, 3)])
                .unwrap();
        let config = OrbitConfig { max_states: 2 };
        match orbit(&start, &GeneratorSet::Full, OrbitMode::Systems, &config) {
            Err(Error::GuardExceeded(_)) => {}
            other => panic!("expected guard breach, got {other:?}"),
        }
    }

    #[test]
    fn csv_table_shape() {
        let filter = SystemFilter::transpositions(MonodromyFilter::Any);
        let reports = components(
            2,
            2,
            1,
            &filter,
            &GeneratorSet::Full,
            OrbitMode::Classes,
            &OrbitConfig::default(),
        )
        .unwrap();
        let csv = component_table_csv(&reports);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), COMPONENT_CSV_HEADER);
        assert_eq!(lines.count(), reports.len());
        let json = component_table_json(&reports).unwrap();
        assert!(json.contains("rep_key_hex"));
    }

    #[test]
    fn normal_form_systems_are_valid() {
        for (tag, d, n, g) in [
            (NormalFormTag::Eq445a, 3, 4, 1),
            (NormalFormTag::Eq445a, 4, 6, 0),
            (NormalFormTag::Eq565bis, 3, 2, 1),
            (NormalFormTag::Eq565bis, 4, 4, 2),
            (NormalFormTag::Eq681, 4, 2, 1),
            (NormalFormTag::Eq681, 5, 4, 1),
            (NormalFormTag::Eq672, 4, 4, 1),
        ] {
            let form = normal_form_system(tag, d, n, g)
                .unwrap_or_else(|| panic!("{tag:?} at ({d},{n},{g})"));
            assert!(form.is_valid(), "{tag:?} at ({d},{n},{g})");
            let report = form.monodromy_report().unwrap();
            assert_eq!(report.class, MonodromyClass::FullSymmetric, "{tag:?}");
        }
        assert!(normal_form_system(NormalFormTag::Eq445a, 4, 4, 1).is_none());
        assert!(normal_form_system(NormalFormTag::Eq681, 4, 2, 2).is_none());
    }

    #[test]
    fn eq681_d4_matches_stated_class() {
        let form = normal_form_system(NormalFormTag::Eq681, 4, 2, 1).unwrap();
        let expect = HurwitzSystem::new(
            4,
            vec![t(4, 1, 2), t(4, 1, 2)],
            vec![id(4)],
            vec![Permutation::from_cycles(4, &[vec![1, 3, 4]]).unwrap()],
        )
        .unwrap();
        assert_eq!(form, expect);
    }
}
