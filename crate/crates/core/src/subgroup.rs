//! Orbits, transitivity, group order, primitivity and block systems for
//! subgroups of `S_d` given by generators. Everything here is desk-scale:
//! closures are plain breadth-first enumerations capped at degree 8.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Closure and primitivity are only computed up to this degree.
pub const MAX_CLOSURE_DEGREE: usize = 8;

/// What `analyze_subgroup` reports about `<gens>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupAnalysis {
    /// Domains of transitivity as sorted 1-based point sets, ordered by
    /// decreasing size, then by smallest contained point.
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
    /// Order of the generated group; only computed for degree <= 8.
    pub group_order: Option<u64>,
    /// Defined only when transitive (and degree <= 8).
    pub primitive: Option<bool>,
    /// Present exactly when transitive and imprimitive: equal-size blocks,
    /// each sorted, ordered by smallest point.
    pub block_system: Option<Vec<Vec<usize>>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn check_gens(gens: &[Permutation]) -> Result<usize> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let d = first.degree();
    for g in gens {
        if g.degree() != d {
            return Err(Error::DegreeMismatch(d, g.degree()));
        }
    }
    Ok(d)
}

/// Orbits of `<gens>` on 1-based points, ordered by decreasing size then by
/// smallest contained point.
pub fn orbits(gens: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let d = check_gens(gens)?;
    let mut uf = UnionFind::new(d);
    for g in gens {
        for x in 0..d {
            uf.union(x, g.apply(x));
        }
    }
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..d {
        by_root.entry(uf.find(x)).or_default().push(x + 1);
    }
    let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
    for o in &mut out {
        o.sort_unstable();
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    Ok(out)
}

/// Full element list of `<gens>` by breadth-first closure. Degree <= 8 only.
pub fn closure(gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let d = check_gens(gens)?;
    if d > MAX_CLOSURE_DEGREE {
        return Err(Error::DegreeTooLarge(d, MAX_CLOSURE_DEGREE));
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = Permutation::identity(d);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Breadth-first closure recording, for each element, a shortest left-to-right
/// factorization as indices into `gens`. Degree <= 8 only.
pub fn closure_factorizations(gens: &[Permutation]) -> Result<HashMap<Permutation, Vec<usize>>> {
    let d = check_gens(gens)?;
    if d > MAX_CLOSURE_DEGREE {
        return Err(Error::DegreeTooLarge(d, MAX_CLOSURE_DEGREE));
    }
    let mut words: HashMap<Permutation, Vec<usize>> = HashMap::new();
    let mut queue = VecDeque::new();
    let id = Permutation::identity(d);
    words.insert(id.clone(), Vec::new());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        let base = words[&x].clone();
        for (gi, g) in gens.iter().enumerate() {
            let y = x.mul(g);
            if !words.contains_key(&y) {
                let mut w = base.clone();
                w.push(gi);
                words.insert(y.clone(), w);
                queue.push_back(y);
            }
        }
    }
    Ok(words)
}

/// Propagates `seed` (0-based, sorted) under the generators. Returns the
/// block orbit when `seed` is a block, `None` on partial overlap.
fn propagate_block(gens: &[Permutation], seed: &[usize], d: usize) -> Option<Vec<Vec<usize>>> {
    let mut blocks: Vec<Vec<usize>> = vec![seed.to_vec()];
    let mut owner: Vec<Option<usize>> = vec![None; d];
    for &x in seed {
        owner[x] = Some(0);
    }
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(bi) = queue.pop_front() {
        let block = blocks[bi].clone();
        for g in gens {
            let mut img: Vec<usize> = block.iter().map(|&x| g.apply(x)).collect();
            img.sort_unstable();
            match owner[img[0]] {
                Some(existing) => {
                    if blocks[existing] != img {
                        return None;
                    }
                }
                None => {
                    if img.iter().any(|&x| owner[x].is_some()) {
                        return None;
                    }
                    let ni = blocks.len();
                    for &x in &img {
                        owner[x] = Some(ni);
                    }
                    blocks.push(img);
                    queue.push_back(ni);
                }
            }
        }
    }
    if owner.iter().any(|o| o.is_none()) {
        // can only happen for non-transitive input
        return None;
    }
    blocks.sort_by_key(|b| b[0]);
    Some(blocks)
}

/// Advances a strictly increasing combination with values in `1..=max`.
fn next_combination(idx: &mut [usize], max: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < max - (k - 1 - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive scan for a nontrivial block system of a transitive group:
/// try every subset of size `e | d`, `1 < e < d`, that contains point 1.
fn find_block_system(gens: &[Permutation], d: usize) -> Option<Vec<Vec<usize>>> {
    for e in (2..d).filter(|e| d % e == 0) {
        // companions of point 0, drawn from {1..d-1}, lex order
        let mut idx: Vec<usize> = (1..e).collect();
        loop {
            let mut seed = vec![0usize];
            seed.extend(idx.iter().copied());
            if let Some(blocks) = propagate_block(gens, &seed, d) {
                return Some(blocks);
            }
            if !next_combination(&mut idx, d - 1) {
                break;
            }
        }
    }
    None
}

/// Orbits, transitivity, order and primitivity of `<gens>`.
///
/// Group order and the primitivity decision require degree <= 8; orbits and
/// transitivity are computed for any degree.
pub fn analyze_subgroup(gens: &[Permutation]) -> Result<SubgroupAnalysis> {
    let d = check_gens(gens)?;
    let orbit_list = orbits(gens)?;
    let transitive = orbit_list.len() == 1;
    let group_order = if d <= MAX_CLOSURE_DEGREE {
        Some(closure(gens)?.len() as u64)
    } else {
        None
    };
    let (primitive, block_system) = if transitive && d <= MAX_CLOSURE_DEGREE {
        match find_block_system(gens, d) {
            Some(blocks) => {
                let blocks1: Vec<Vec<usize>> = blocks
                    .into_iter()
                    .map(|b| b.into_iter().map(|x| x + 1).collect())
                    .collect();
                (Some(false), Some(blocks1))
            }
            None => (Some(true), None),
        }
    } else {
        (None, None)
    };
    if primitive == Some(true) && gens.iter().any(|g| g.is_transposition()) {
        // primitive + transposition forces the full symmetric group
        debug_assert_eq!(group_order, Some(factorial(d)));
    }
    Ok(SubgroupAnalysis {
        orbits: orbit_list,
        transitive,
        group_order,
        primitive,
        block_system,
    })
}

pub fn factorial(d: usize) -> u64 {
    (1..=d as u64).product()
}

/// The unique block decomposition of a transitive group containing a
/// transposition: orbits of the subgroup generated by all transpositions of
/// the group. Equal block sizes and `S(block) <= <gens>` are asserted.
/// A primitive input yields the single block `{1..d}`.
pub fn imprimitive_blocks(gens: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let d = check_gens(gens)?;
    let orbit_list = orbits(gens)?;
    if orbit_list.len() != 1 {
        return Err(Error::Precondition("generators are not transitive".into()));
    }
    let elements = closure(gens)?;
    let transpositions: Vec<&Permutation> =
        elements.iter().filter(|p| p.is_transposition()).collect();
    if transpositions.is_empty() {
        return Err(Error::Precondition("no transposition in the generated group".into()));
    }
    let mut uf = UnionFind::new(d);
    for t in &transpositions {
        let (a, b) = t.transposition_points().unwrap();
        uf.union(a - 1, b - 1);
    }
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..d {
        by_root.entry(uf.find(x)).or_default().push(x + 1);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| b[0]);
    let size = blocks[0].len();
    if blocks.iter().any(|b| b.len() != size) {
        return Err(Error::Precondition("transposition orbits have unequal sizes".into()));
    }
    // every transposition inside a block must lie in the group
    let tset: HashSet<(usize, usize)> = transpositions
        .iter()
        .map(|t| t.transposition_points().unwrap())
        .collect();
    for b in &blocks {
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                debug_assert!(
                    tset.contains(&(b[i], b[j])),
                    "full symmetric group on block {b:?} missing ({}, {})",
                    b[i],
                    b[j]
                );
            }
        }
    }
    Ok(blocks)
}
