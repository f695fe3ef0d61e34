//! Permutation groups, wreath products and cycle-type statistics.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group `exact_distribution` will enumerate element by element.
pub const MATERIALIZE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(BigUint),
    #[error("group is not transitive")]
    Intransitive,
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),
}

/// A bijection of `0..d`; `images[x]` is the image of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self, GroupError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x as usize >= d || seen[x as usize] || d > 256 {
                return Err(GroupError::NotAPermutation(images));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images: images.into_iter().map(|x| x as u8).collect() })
    }

    pub fn identity(d: usize) -> Self {
        Perm { images: (0..d as u8).collect() }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(d: usize, cycles: &[&[u32]]) -> Self {
        let mut p = Perm::identity(d);
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                p.images[x as usize] = cyc[(i + 1) % cyc.len()] as u8;
            }
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn cycle_type(&self) -> CycleType {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut parts = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            parts.push(len);
        }
        CycleType::new(parts)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Cycle lengths, stored in increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable();
        CycleType(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }

    /// Even permutations have an even number of even-length cycles.
    pub fn is_even(&self) -> bool {
        self.0.iter().filter(|&&x| x % 2 == 0).count() % 2 == 0
    }

    pub fn count(&self, len: u32) -> usize {
        self.0.iter().filter(|&&x| x == len).count()
    }

    /// `1-1-4` style, as used in CSV exports.
    pub fn dashed(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join("-")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Counts of cycle types, either exact (over a group) or sampled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTypeDistribution {
    pub total: u128,
    #[serde(with = "weight_pairs")]
    pub weights: BTreeMap<CycleType, u128>,
}

/// JSON map keys must be strings, so weights travel as `[type, count]` pairs.
mod weight_pairs {
    use super::CycleType;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(w: &BTreeMap<CycleType, u128>, s: S) -> Result<S::Ok, S::Error> {
        w.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<CycleType, u128>, D::Error> {
        Ok(Vec::<(CycleType, u128)>::deserialize(d)?.into_iter().collect())
    }
}

impl CycleTypeDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, t: CycleType, count: u128) {
        if count == 0 {
            return;
        }
        *self.weights.entry(t).or_insert(0) += count;
        self.total += count;
    }

    pub fn count(&self, t: &CycleType) -> u128 {
        self.weights.get(t).copied().unwrap_or(0)
    }

    pub fn fraction(&self, t: &CycleType) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.count(t) as f64 / self.total as f64
    }

    pub fn merge(&mut self, other: &CycleTypeDistribution) {
        for (t, &c) in &other.weights {
            self.add(t.clone(), c);
        }
    }

    /// Half the L1 distance between the two normalized distributions.
    pub fn total_variation(&self, other: &CycleTypeDistribution) -> f64 {
        let mut keys: Vec<&CycleType> = self.weights.keys().chain(other.weights.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().map(|t| (self.fraction(t) - other.fraction(t)).abs()).sum::<f64>() / 2.0
    }
}

/// A permutation group given by generators.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Vec<Perm>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup::new(self.degree, self.generators.clone())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup").field("degree", &self.degree).field("generators", &self.generators).finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Self {
        assert!(generators.iter().all(|g| g.degree() == degree), "generator degree mismatch");
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup { degree, generators, chain: OnceLock::new(), elements: OnceLock::new() }
    }

    pub fn symmetric(d: usize) -> Self {
        let mut gens = Vec::new();
        if d >= 2 {
            gens.push(Perm::from_cycles(d, &[&[0, 1]]));
            let cyc: Vec<u32> = (0..d as u32).collect();
            gens.push(Perm::from_cycles(d, &[&cyc]));
        }
        PermGroup::new(d, gens)
    }

    /// Generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(d: usize) -> Self {
        let gens = (2..d as u32).map(|i| Perm::from_cycles(d, &[&[0, 1, i]])).collect();
        PermGroup::new(d, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    /// Every element, by breadth-first closure under the generators.
    pub fn elements(&self) -> Result<&[Perm], GroupError> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let order = self.order();
        if order > BigUint::from(MATERIALIZE_LIMIT) {
            return Err(GroupError::TooLarge(order));
        }
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(self.elements.get_or_init(|| out))
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut out = vec![x];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let y = g.apply(out[i]);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }
}

/// Base and strong generating set, built with Knuth's variant of the
/// Schreier–Sims algorithm. Level `k` holds coset representatives for the
/// subgroup fixing every point above `k`, indexed by the image of `k`.
struct StabChain {
    reps: Vec<Vec<Option<Perm>>>,
    gens: Vec<Vec<Perm>>,
}

impl StabChain {
    fn build(d: usize, generators: &[Perm]) -> Self {
        let mut reps = vec![vec![None; d]; d];
        for (k, row) in reps.iter_mut().enumerate() {
            row[k] = Some(Perm::identity(d));
        }
        let mut c = StabChain { reps, gens: vec![Vec::new(); d] };
        if d > 0 {
            for g in generators {
                c.add(d - 1, g.clone());
            }
        }
        c
    }

    /// Sifts `p` down from level `k`; true when it reduces to the identity.
    fn sifts(&self, k: usize, p: &Perm) -> bool {
        let mut p = p.clone();
        for level in (0..=k).rev() {
            let j = p.apply(level);
            match &self.reps[level][j] {
                None => return false,
                Some(s) => p = p.then(&s.inverse()),
            }
        }
        p.is_identity()
    }

    fn add(&mut self, k: usize, p: Perm) {
        if self.sifts(k, &p) {
            return;
        }
        self.gens[k].push(p.clone());
        let reps: Vec<Perm> = self.reps[k].iter().flatten().cloned().collect();
        for s in reps {
            self.extend(k, s.then(&p));
        }
    }

    fn extend(&mut self, k: usize, p: Perm) {
        let j = p.apply(k);
        match self.reps[k][j].clone() {
            None => {
                self.reps[k][j] = Some(p.clone());
                let gens = self.gens[k].clone();
                for t in gens {
                    self.extend(k, p.then(&t));
                }
            }
            Some(s) => {
                let q = p.then(&s.inverse());
                if k > 0 {
                    self.add(k - 1, q);
                }
            }
        }
    }

    fn order(&self) -> BigUint {
        self.reps.iter().map(|row| BigUint::from(row.iter().flatten().count())).product()
    }

    fn contains(&self, p: &Perm) -> bool {
        self.reps.is_empty() || self.sifts(self.reps.len() - 1, p)
    }
}

/// `S_m ≀ S_f` on `m·f` points; point `b·m + a` is `a` in block `b`.
pub fn wreath(m: usize, f: usize) -> PermGroup {
    let d = m * f;
    let mut gens = Vec::new();
    // the base group only needs generators for the first block
    for g in PermGroup::symmetric(m).generators() {
        let mut im: Vec<u32> = (0..d as u32).collect();
        for a in 0..m {
            im[a] = g.apply(a) as u32;
        }
        gens.push(Perm::new(im).unwrap());
    }
    for h in PermGroup::symmetric(f).generators() {
        let mut im = vec![0u32; d];
        for b in 0..f {
            for a in 0..m {
                im[b * m + a] = (h.apply(b) * m + a) as u32;
            }
        }
        gens.push(Perm::new(im).unwrap());
    }
    PermGroup::new(d, gens)
}

/// The action of `S_4` on the six ordered splittings of `{0,1,2,3}` into pairs.
pub fn s4_on_equipartitions() -> PermGroup {
    let pairs: Vec<(u8, u8)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    // splitting i is pairs[i] | its complement
    let index = |p: (u8, u8)| pairs.iter().position(|&q| q == p).unwrap();
    let act = |s: &Perm| -> Perm {
        let im = pairs
            .iter()
            .map(|&(x, y)| {
                let (a, b) = (s.apply(x as usize) as u8, s.apply(y as usize) as u8);
                index((a.min(b), a.max(b))) as u32
            })
            .collect();
        Perm::new(im).unwrap()
    };
    let gens = PermGroup::symmetric(4).generators().iter().map(act).collect();
    PermGroup::new(6, gens)
}

/// Cycle-type counts over every element of `g`.
pub fn exact_distribution(g: &PermGroup) -> Result<CycleTypeDistribution, GroupError> {
    let mut dist = CycleTypeDistribution::new();
    for p in g.elements()? {
        dist.add(p.cycle_type(), 1);
    }
    Ok(dist)
}

/// Integer partitions of `n` in decreasing-part form.
fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=max.min(n)).rev() {
            cur.push(x);
            go(n - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Size of the conjugacy class of `S_n` with the given cycle lengths: `n!/z`.
fn class_size(parts: &[u32]) -> u128 {
    let n: u32 = parts.iter().sum();
    let mut z: u128 = 1;
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (&p, &c) in &mult {
        z *= (p as u128).pow(c) * factorial(c);
    }
    factorial(n) / z
}

/// Exact distribution of `S_d` from class sizes.
pub fn symmetric_distribution(d: u32) -> CycleTypeDistribution {
    let mut dist = CycleTypeDistribution::new();
    for p in partitions_of(d) {
        let c = class_size(&p);
        dist.add(CycleType::new(p), c);
    }
    dist
}

pub fn alternating_distribution(d: u32) -> CycleTypeDistribution {
    let mut dist = CycleTypeDistribution::new();
    for (t, &c) in &symmetric_distribution(d).weights {
        if t.is_even() {
            dist.add(t.clone(), c);
        }
    }
    dist
}

/// Exact distribution of `S_m ≀ S_f` from its cycle index: a `j`-cycle of
/// the top permutation whose block product has type `c` contributes cycles
/// `j·c_i`, and `(m!)^(j-1)` base tuples realize each block product.
pub fn wreath_distribution(m: u32, f: u32) -> CycleTypeDistribution {
    let sm: Vec<(Vec<u32>, u128)> = partitions_of(m).into_iter().map(|p| {
        let c = class_size(&p);
        (p, c)
    }).collect();
    let mfact = factorial(m);
    // contribution of one top cycle of length j
    let cycle_poly = |j: u32| -> Vec<(Vec<u32>, u128)> {
        sm.iter().map(|(p, c)| (p.iter().map(|x| x * j).collect(), mfact.pow(j - 1) * c)).collect()
    };
    let mut dist = CycleTypeDistribution::new();
    for top in partitions_of(f) {
        let mut acc: Vec<(Vec<u32>, u128)> = vec![(Vec::new(), class_size(&top))];
        for &j in &top {
            let poly = cycle_poly(j);
            let mut next = Vec::with_capacity(acc.len() * poly.len());
            for (a, ca) in &acc {
                for (b, cb) in &poly {
                    let mut t = a.clone();
                    t.extend_from_slice(b);
                    next.push((t, ca * cb));
                }
            }
            acc = next;
        }
        for (t, c) in acc {
            dist.add(CycleType::new(t), c);
        }
    }
    dist
}

/// A candidate Galois group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupSpec {
    Symmetric { d: usize },
    Alternating { d: usize },
    Wreath { m: usize, f: usize },
    Named { label: String, degree: usize, generators: Vec<Perm> },
}

impl GroupSpec {
    pub fn wreath(m: usize, f: usize) -> Self {
        GroupSpec::Wreath { m, f }
    }

    pub fn s4_on_equipartitions() -> Self {
        let g = s4_on_equipartitions();
        GroupSpec::Named { label: "S4 on equipartitions".into(), degree: 6, generators: g.generators().to_vec() }
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Symmetric { d } | GroupSpec::Alternating { d } => *d,
            GroupSpec::Wreath { m, f } => m * f,
            GroupSpec::Named { degree, .. } => *degree,
        }
    }

    pub fn order(&self) -> BigUint {
        let fact = |n: usize| -> BigUint { (1..=n).map(BigUint::from).product() };
        match self {
            GroupSpec::Symmetric { d } => fact(*d),
            GroupSpec::Alternating { d } if *d >= 2 => fact(*d) / 2u32,
            GroupSpec::Alternating { .. } => BigUint::one(),
            GroupSpec::Wreath { m, f } => fact(*m).pow(*f as u32) * fact(*f),
            GroupSpec::Named { .. } => self.group().order(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            GroupSpec::Symmetric { d } => format!("S{d}"),
            GroupSpec::Alternating { d } => format!("A{d}"),
            GroupSpec::Wreath { m, f } => format!("S{m}\u{2240}S{f}"),
            GroupSpec::Named { label, .. } => label.clone(),
        }
    }

    pub fn group(&self) -> PermGroup {
        match self {
            GroupSpec::Symmetric { d } => PermGroup::symmetric(*d),
            GroupSpec::Alternating { d } => PermGroup::alternating(*d),
            GroupSpec::Wreath { m, f } => wreath(*m, *f),
            GroupSpec::Named { degree, generators, .. } => PermGroup::new(*degree, generators.clone()),
        }
    }

    /// Closed forms where available, enumeration otherwise.
    pub fn distribution(&self) -> Result<CycleTypeDistribution, GroupError> {
        Ok(match self {
            GroupSpec::Symmetric { d } => symmetric_distribution(*d as u32),
            GroupSpec::Alternating { d } => alternating_distribution(*d as u32),
            GroupSpec::Wreath { m, f } => wreath_distribution(*m as u32, *f as u32),
            GroupSpec::Named { .. } => exact_distribution(&self.group())?,
        })
    }

    /// `{S_d, A_d}` plus every `S_m ≀ S_f` with `m·f = d`, `m, f ≥ 2`.
    pub fn candidates(d: usize) -> Vec<GroupSpec> {
        let mut out = vec![GroupSpec::Symmetric { d }];
        if d >= 3 {
            out.push(GroupSpec::Alternating { d });
        }
        for m in 2..d {
            if d % m == 0 && d / m >= 2 {
                out.push(GroupSpec::Wreath { m, f: d / m });
            }
        }
        out
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Result of `blocks`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockSystem {
    Primitive,
    Blocks(Vec<Vec<usize>>),
}

/// A block system with the smallest nontrivial block size, or `Primitive`.
pub fn blocks(g: &PermGroup) -> Result<BlockSystem, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::Intransitive);
    }
    let d = g.degree();
    let mut best: Option<Vec<usize>> = None;
    let mut best_size = d;
    for b in 1..d {
        let labels = finest_block_system(g, b);
        let size = labels.iter().filter(|&&l| l == labels[0]).count();
        if size < best_size {
            best_size = size;
            best = Some(labels);
        }
    }
    let Some(labels) = best else { return Ok(BlockSystem::Primitive) };
    let mut by: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, l) in labels.into_iter().enumerate() {
        by.entry(l).or_default().push(x);
    }
    let mut out: Vec<Vec<usize>> = by.into_values().collect();
    out.sort();
    Ok(BlockSystem::Blocks(out))
}

/// Finest invariant equivalence with `0 ~ b`, via union-find; returns class roots.
fn finest_block_system(g: &PermGroup, b: usize) -> Vec<usize> {
    let d = g.degree();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut queue = vec![(0usize, b)];
    parent[b] = 0;
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (u, v) = (find(&mut parent, s.apply(x)), find(&mut parent, s.apply(y)));
            if u != v {
                parent[v] = u;
                queue.push((s.apply(x), s.apply(y)));
            }
        }
    }
    (0..d).map(|x| find(&mut parent, x)).collect()
}

/// How one candidate group fits an observed histogram.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateFit {
    pub group: GroupSpec,
    pub distance: f64,
    /// An observed type the group cannot produce.
    pub disqualified_by: Option<CycleType>,
}

/// Ranks candidates by total-variation distance, disqualified ones last.
pub fn match_distribution(
    empirical: &CycleTypeDistribution,
    candidates: &[GroupSpec],
) -> Result<Vec<CandidateFit>, GroupError> {
    let mut fits = Vec::new();
    for c in candidates {
        let exact = c.distribution()?;
        let disqualified_by = empirical.weights.keys().find(|t| exact.count(t) == 0).cloned();
        fits.push(CandidateFit { group: c.clone(), distance: empirical.total_variation(&exact), disqualified_by });
    }
    fits.sort_by(|a, b| {
        a.disqualified_by.is_some().cmp(&b.disqualified_by.is_some()).then(a.distance.total_cmp(&b.distance))
    });
    Ok(fits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec())
    }

    fn table(rows: &[(&[u32], u128)]) -> CycleTypeDistribution {
        let mut d = CycleTypeDistribution::new();
        for (p, c) in rows {
            d.add(ct(p), *c);
        }
        d
    }

    #[test]
    fn wreath_orders() {
        assert_eq!(wreath(2, 2).order(), BigUint::from(8u32));
        assert_eq!(wreath(3, 2).order(), BigUint::from(72u32));
        assert_eq!(wreath(2, 3).order(), BigUint::from(48u32));
        assert_eq!(wreath(5, 2).order(), BigUint::from(28800u32));
        assert_eq!(wreath(2, 2).degree(), 4);
    }

    #[test]
    fn wreath_distributions_match_known_tables() {
        let w23 = table(&[
            (&[6], 8),
            (&[3, 3], 8),
            (&[2, 4], 6),
            (&[2, 2, 2], 7),
            (&[1, 1, 4], 6),
            (&[1, 1, 2, 2], 9),
            (&[1, 1, 1, 1, 2], 3),
            (&[1, 1, 1, 1, 1, 1], 1),
        ]);
        assert_eq!(exact_distribution(&wreath(2, 3)).unwrap(), w23);
        assert_eq!(wreath_distribution(2, 3), w23);
        let w32 = table(&[
            (&[6], 12),
            (&[3, 3], 4),
            (&[2, 4], 18),
            (&[2, 2, 2], 6),
            (&[1, 2, 3], 12),
            (&[1, 1, 2, 2], 9),
            (&[1, 1, 1, 3], 4),
            (&[1, 1, 1, 1, 2], 6),
            (&[1, 1, 1, 1, 1, 1], 1),
        ]);
        assert_eq!(exact_distribution(&wreath(3, 2)).unwrap(), w32);
        assert_eq!(wreath_distribution(3, 2), w32);
        assert_eq!(exact_distribution(&PermGroup::symmetric(2)).unwrap(), table(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn closed_forms_agree_with_enumeration() {
        for d in 1..=7u32 {
            assert_eq!(exact_distribution(&PermGroup::symmetric(d as usize)).unwrap(), symmetric_distribution(d));
            if d >= 3 {
                assert_eq!(
                    exact_distribution(&PermGroup::alternating(d as usize)).unwrap(),
                    alternating_distribution(d)
                );
            }
        }
        for m in 1..=4u32 {
            for f in 1..=4u32 {
                let g = wreath(m as usize, f as usize);
                if g.order() <= BigUint::from(MATERIALIZE_LIMIT) {
                    assert_eq!(exact_distribution(&g).unwrap(), wreath_distribution(m, f), "S{m} wr S{f}");
                }
            }
        }
    }

    #[test]
    fn order_formula_and_distribution_sums() {
        for m in 1..=5usize {
            for f in 1..=5usize {
                let spec = GroupSpec::wreath(m, f);
                assert_eq!(wreath(m, f).order(), spec.order(), "S{m} wr S{f}");
                let dist = spec.distribution().unwrap();
                assert_eq!(BigUint::from(dist.total), spec.order());
                assert_eq!(dist.count(&CycleType::new(vec![1; m * f])), 1);
                assert!(dist.weights.keys().all(|t| t.degree() as usize == m * f));
            }
        }
    }

    #[test]
    fn too_large_groups_are_refused() {
        assert!(matches!(exact_distribution(&wreath(5, 3)), Err(GroupError::TooLarge(_))));
    }

    #[test]
    fn block_systems() {
        match blocks(&wreath(2, 3)).unwrap() {
            BlockSystem::Blocks(b) => assert_eq!(b, vec![vec![0, 1], vec![2, 3], vec![4, 5]]),
            p => panic!("{p:?}"),
        }
        assert_eq!(blocks(&PermGroup::symmetric(6)).unwrap(), BlockSystem::Primitive);
        match blocks(&wreath(5, 2)).unwrap() {
            BlockSystem::Blocks(b) => assert_eq!(b, vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]),
            p => panic!("{p:?}"),
        }
        let intransitive = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[0, 1]])]);
        assert_eq!(blocks(&intransitive), Err(GroupError::Intransitive));
    }

    #[test]
    fn equipartition_action() {
        let g = s4_on_equipartitions();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert!(g.is_transitive());
        match blocks(&g).unwrap() {
            BlockSystem::Blocks(b) => assert!(b.iter().all(|x| x.len() == 2) && b.len() == 3),
            p => panic!("{p:?}"),
        }
    }

    #[test]
    fn wreath_products_are_transitive_and_imprimitive() {
        for m in 2..=4 {
            for f in 2..=3 {
                let g = wreath(m, f);
                assert!(g.is_transitive());
                match blocks(&g).unwrap() {
                    BlockSystem::Blocks(b) => {
                        assert!(b.iter().all(|x| x.len() == m), "S{m} wr S{f}: {b:?}");
                        assert_eq!(b.len(), f);
                    }
                    p => panic!("{p:?}"),
                }
            }
        }
    }

    #[test]
    fn membership() {
        let a5 = PermGroup::alternating(5);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(a5.contains(&Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]])));
        assert!(!a5.contains(&Perm::from_cycles(5, &[&[0, 1]])));
    }

    #[test]
    fn matching_ranks_and_disqualifies() {
        let cands =
            vec![GroupSpec::Symmetric { d: 6 }, GroupSpec::Alternating { d: 6 }, GroupSpec::wreath(2, 3), GroupSpec::wreath(3, 2)];
        let emp = wreath_distribution(2, 3);
        let fits = match_distribution(&emp, &cands).unwrap();
        assert_eq!(fits[0].group, GroupSpec::wreath(2, 3));
        assert!(fits[0].distance < 1e-12);
        let w32 = fits.iter().find(|f| f.group == GroupSpec::wreath(3, 2)).unwrap();
        assert!(w32.disqualified_by.is_some());

        let s2 = match_distribution(&symmetric_distribution(2), &[GroupSpec::Symmetric { d: 2 }]).unwrap();
        assert_eq!(s2[0].distance, 0.0);

        let mut five = CycleTypeDistribution::new();
        five.add(ct(&[1, 5]), 1);
        let fits = match_distribution(&five, &[GroupSpec::wreath(2, 3)]).unwrap();
        assert_eq!(fits[0].disqualified_by, Some(ct(&[1, 5])));
    }

    #[test]
    fn sampled_histogram_picks_its_own_group() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let cands = GroupSpec::candidates(6);
        for truth in [GroupSpec::wreath(2, 3), GroupSpec::wreath(3, 2), GroupSpec::Symmetric { d: 6 }] {
            let g = truth.group();
            let elems = g.elements().unwrap();
            let mut emp = CycleTypeDistribution::new();
            for _ in 0..20_000 {
                emp.add(elems[rng.gen_range(0..elems.len())].cycle_type(), 1);
            }
            let fits = match_distribution(&emp, &cands).unwrap();
            assert_eq!(fits[0].group, truth);
        }
    }

    proptest! {
        #[test]
        fn merge_is_commutative_and_associative(
            a in proptest::collection::vec((1u32..4, 0u128..50), 0..6),
            b in proptest::collection::vec((1u32..4, 0u128..50), 0..6),
            c in proptest::collection::vec((1u32..4, 0u128..50), 0..6),
        ) {
            let mk = |v: &[(u32, u128)]| {
                let mut d = CycleTypeDistribution::new();
                for &(x, n) in v { d.add(CycleType::new(vec![x, 4 - x]), n); }
                d
            };
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            let mut ab = a.clone(); ab.merge(&b);
            let mut ba = b.clone(); ba.merge(&a);
            prop_assert_eq!(&ab, &ba);
            let mut ab_c = ab.clone(); ab_c.merge(&c);
            let mut bc = b.clone(); bc.merge(&c);
            let mut a_bc = a.clone(); a_bc.merge(&bc);
            prop_assert_eq!(ab_c, a_bc);
        }
    }
}
