//! Frobenius sampling: random instances over `F_p`, eliminants and the cycle
//! types they reveal.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use ffalg::{buchberger, degree_pattern, FfError, Monomial, MultiPoly, PrimeField, QuotientDim};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{match_distribution, CandidateFit, CycleType, CycleTypeDistribution, GroupError, GroupSpec};
use crate::partition::Partition;
use crate::problem::SchubertProblem;

/// Consecutive degree-deficient draws before a random linear form replaces
/// the first coordinate.
pub const LINEAR_FORM_AFTER: u32 = 25;
/// Draws allowed for a single accepted sample.
pub const MAX_ATTEMPTS: u32 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error("problem has degree {0}; sampling needs at least 2")]
    DegreeTooSmall(u64),
    #[error("degree too large to sample")]
    DegreeTooLarge,
    #[error("chart needs {0} coordinates, more than the algebra supports")]
    TooManyCoordinates(usize),
    #[error("the two chart conditions do not meet: {0} and {1}")]
    EmptyChart(Partition, Partition),
    #[error("no acceptable sample after {0} draws")]
    TooManyRejections(u32),
    #[error(transparent)]
    Field(#[from] FfError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rejection {
    PositiveDimensional,
    DegreeDeficient,
    NotSquarefree,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectionTally {
    pub positive_dimensional: u64,
    pub degree_deficient: u64,
    pub not_squarefree: u64,
}

impl RejectionTally {
    pub fn record(&mut self, r: Rejection) {
        match r {
            Rejection::PositiveDimensional => self.positive_dimensional += 1,
            Rejection::DegreeDeficient => self.degree_deficient += 1,
            Rejection::NotSquarefree => self.not_squarefree += 1,
        }
    }

    pub fn merge(&mut self, other: &RejectionTally) {
        self.positive_dimensional += other.positive_dimensional;
        self.degree_deficient += other.degree_deficient;
        self.not_squarefree += other.not_squarefree;
    }

    pub fn total(&self) -> u64 {
        self.positive_dimensional + self.degree_deficient + self.not_squarefree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
enum Entry {
    Zero,
    One,
    Var(usize),
}

/// A corner `dim(H ∩ F_m) >= j` of one condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    pub j: usize,
    pub m: usize,
}

/// Corners `j` with `λ_j > λ_{j+1}`; the other rank conditions follow from these.
pub fn corners(lambda: &Partition, k: usize, n: usize) -> Vec<Corner> {
    let parts = lambda.padded(k);
    (1..=k)
        .filter(|&j| {
            let next = if j < k { parts[j] } else { 0 };
            parts[j - 1] > next
        })
        .map(|j| Corner { j, m: n - k + j - parts[j - 1] as usize })
        .collect()
}

/// Chart on the Richardson cell of the standard and opposite coordinate
/// flags, plus the corners of every remaining condition.
#[derive(Clone, Debug)]
pub struct ChartLayout {
    pub k: usize,
    pub n: usize,
    pub standard: Partition,
    pub opposite: Partition,
    entries: Vec<Vec<Entry>>,
    vars: Arc<Vec<String>>,
    pub remaining: Vec<(Partition, Vec<Corner>)>,
}

impl ChartLayout {
    /// The two heaviest conditions go to the fixed flags.
    pub fn new(problem: &SchubertProblem) -> Result<Self, FrobeniusError> {
        let (k, n) = (problem.spec.k, problem.spec.n);
        let mut conds: Vec<Partition> = problem.conditions().to_vec();
        while conds.len() < 2 {
            conds.push(Partition::empty());
        }
        let mut order: Vec<usize> = (0..conds.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(conds[i].weight()));
        let standard = conds[order[0]].clone();
        let opposite = conds[order[1]].clone();
        let mut rest: Vec<usize> = order[2..].to_vec();
        rest.sort();

        let lam = standard.padded(k);
        let mu = opposite.padded(k);
        let mut entries = vec![vec![Entry::Zero; n]; k];
        let mut names = Vec::new();
        // coordinates numbered from the bottom-right corner; grevlex bases
        // come out markedly smaller this way
        for j in (1..=k).rev() {
            let hi = n - k + j - lam[j - 1] as usize;
            let lo = j + mu[k - j] as usize;
            if lo > hi {
                return Err(FrobeniusError::EmptyChart(standard, opposite));
            }
            for c in (lo..hi).rev() {
                entries[j - 1][c - 1] = Entry::Var(names.len());
                names.push(format!("h{j}_{c}"));
            }
            entries[j - 1][hi - 1] = Entry::One;
        }
        if names.len() > ffalg::MAX_VARS {
            return Err(FrobeniusError::TooManyCoordinates(names.len()));
        }
        let remaining = rest
            .into_iter()
            .map(|i| (conds[i].clone(), corners(&conds[i], k, n)))
            .collect();
        Ok(ChartLayout { k, n, standard, opposite, entries, vars: ffalg::ring_vars(&names)?, remaining })
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    /// Chart matrix at a point, for brute-force checks.
    pub fn matrix_at(&self, point: &[u32]) -> Vec<Vec<u32>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Zero => 0,
                        Entry::One => 1,
                        Entry::Var(v) => point[*v],
                    })
                    .collect()
            })
            .collect()
    }

    pub fn equation_count(&self) -> usize {
        let binom = |a: usize, b: usize| -> usize {
            if b > a {
                return 0;
            }
            (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
        };
        self.remaining
            .iter()
            .flat_map(|(_, cs)| cs.iter())
            .map(|c| {
                let r = self.k - c.j + 1;
                binom(self.k, r) * binom(self.n - c.m, r)
            })
            .sum()
    }
}

/// Columns spanning the annihilator of one corner subspace: `v ∈ F_m` iff
/// `v · annihilator = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerFlag {
    pub corner: Corner,
    /// `n` rows, `n − m` columns.
    pub annihilator: Vec<Vec<u32>>,
}

/// The random flags of one instance. The first two conditions use the fixed
/// standard and opposite coordinate flags and carry no data here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagSample {
    pub prime: u64,
    pub seed: u64,
    pub stream: u64,
    pub flags: Vec<(Partition, Vec<CornerFlag>)>,
}

impl FlagSample {
    /// One uniform `n × n` matrix per condition; `F_m` is cut out by its
    /// last `n − m` columns, so the subspaces are nested.
    pub fn draw(layout: &ChartLayout, field: PrimeField, seed: u64, stream: u64, rng: &mut ChaCha8Rng) -> FlagSample {
        let n = layout.n;
        let p = field.p() as u32;
        let flags = layout
            .remaining
            .iter()
            .map(|(cond, cs)| {
                let b: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
                let cf = cs
                    .iter()
                    .map(|&corner| CornerFlag {
                        corner,
                        annihilator: b.iter().map(|row| row[corner.m..].to_vec()).collect(),
                    })
                    .collect();
                (cond.clone(), cf)
            })
            .collect();
        FlagSample { prime: field.p(), seed, stream, flags }
    }
}

/// Minor equations on the chart coordinates.
#[derive(Clone, Debug)]
pub struct InstanceSystem {
    pub coordinates: Arc<Vec<String>>,
    pub equations: Vec<MultiPoly>,
}

fn determinant(
    m: &[Vec<MultiPoly>],
    rows: &[usize],
    cols: &[usize],
    memo: &mut HashMap<(u32, u32), MultiPoly>,
) -> MultiPoly {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let key = (
        rows.iter().fold(0u32, |a, &r| a | 1 << r),
        cols.iter().fold(0u32, |a, &c| a | 1 << c),
    );
    if let Some(d) = memo.get(&key) {
        return d.clone();
    }
    let z = &m[rows[0]][cols[0]];
    let mut acc = MultiPoly::zero(z.field(), z.vars().clone());
    for (i, &r) in rows.iter().enumerate() {
        let e = &m[r][cols[0]];
        if e.is_zero() {
            continue;
        }
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let minor = determinant(m, &sub_rows, &cols[1..], memo);
        let term = e * &minor;
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    memo.insert(key, acc.clone());
    acc
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// `dim(H ∩ F_m) >= j` is `rank(H · A) <= k − j` for the annihilator `A` of
/// `F_m`; each corner contributes every `(k − j + 1)`-minor.
pub fn build_system(layout: &ChartLayout, sample: &FlagSample) -> InstanceSystem {
    let field = PrimeField::new(sample.prime).expect("sample prime was validated");
    let vars = layout.vars.clone();
    let (k, n) = (layout.k, layout.n);
    let mut equations = Vec::new();
    for (_, cfs) in &sample.flags {
        for cf in cfs {
            let cols = n - cf.corner.m;
            let prod: Vec<Vec<MultiPoly>> = (0..k)
                .map(|i| {
                    (0..cols)
                        .map(|c| {
                            let mut terms = Vec::new();
                            for t in 0..n {
                                let a = cf.annihilator[t][c];
                                match layout.entries[i][t] {
                                    Entry::Zero => {}
                                    Entry::One => terms.push((Monomial::ONE, a)),
                                    Entry::Var(v) => terms.push((Monomial::var(v), a)),
                                }
                            }
                            MultiPoly::from_terms(field, vars.clone(), terms)
                        })
                        .collect()
                })
                .collect();
            let r = k - cf.corner.j + 1;
            let mut memo = HashMap::new();
            for rs in subsets(k, r) {
                for cs in subsets(cols, r) {
                    let d = determinant(&prod, &rs, &cs, &mut memo);
                    if !d.is_zero() {
                        equations.push(d);
                    }
                }
            }
        }
    }
    InstanceSystem { coordinates: vars, equations }
}

/// Reusable per-problem state; cheap to share across threads.
#[derive(Clone, Debug)]
pub struct Sampler {
    pub problem: SchubertProblem,
    pub field: PrimeField,
    pub layout: ChartLayout,
    pub degree: usize,
    /// Set when the first coordinate failed to separate solutions
    /// [`LINEAR_FORM_AFTER`] times in a row during the probe.
    pub linear_form: bool,
}

/// Stream reserved for the probe, disjoint from sample indices in practice.
const PROBE_STREAM: u64 = u64::MAX;

impl Sampler {
    pub fn new(problem: &SchubertProblem, prime: u64) -> Result<Self, FrobeniusError> {
        let field = PrimeField::new(prime)?;
        let d = problem.degree();
        let degree = d.to_usize().filter(|&d| d <= u32::MAX as usize).ok_or(FrobeniusError::DegreeTooLarge)?;
        if degree < 2 {
            return Err(FrobeniusError::DegreeTooSmall(degree as u64));
        }
        let layout = ChartLayout::new(problem)?;
        Ok(Sampler { problem: problem.clone(), field, layout, degree, linear_form: false })
    }

    /// Decides once per problem whether eliminants use a random linear form,
    /// by drawing instances on a reserved stream until one succeeds or
    /// [`LINEAR_FORM_AFTER`] consecutive draws are degree-deficient.
    pub fn probe(&mut self, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(PROBE_STREAM);
        let mut run = 0;
        for _ in 0..MAX_ATTEMPTS {
            match self.attempt(&mut rng, seed, false) {
                Ok(_) => return,
                Err(Rejection::DegreeDeficient) => {
                    run += 1;
                    if run >= LINEAR_FORM_AFTER {
                        self.linear_form = true;
                        return;
                    }
                }
                Err(_) => run = 0,
            }
        }
    }

    /// One draw of flags; `linear_form` selects a random eliminant direction
    /// instead of the first coordinate.
    pub fn attempt(&self, rng: &mut ChaCha8Rng, seed: u64, linear_form: bool) -> Result<CycleType, Rejection> {
        let stream = rng.get_stream();
        let flags = FlagSample::draw(&self.layout, self.field, seed, stream, rng);
        let sys = build_system(&self.layout, &flags);
        let nv = sys.coordinates.len();
        if sys.equations.is_empty() {
            return Err(if nv == 0 { Rejection::DegreeDeficient } else { Rejection::PositiveDimensional });
        }
        let gb = buchberger(&sys.equations).expect("equations share one ring");
        match gb.quotient_dimension() {
            QuotientDim::Infinite => return Err(Rejection::PositiveDimensional),
            QuotientDim::Finite(q) if q < self.degree => return Err(Rejection::DegreeDeficient),
            QuotientDim::Finite(_) => {}
        }
        let elim = if linear_form {
            let p = self.field.p() as u32;
            let terms = (0..nv).map(|v| (Monomial::var(v), rng.gen_range(1..p))).collect();
            gb.eliminant_of(&MultiPoly::from_terms(self.field, sys.coordinates.clone(), terms))
        } else {
            gb.eliminant(0)
        }
        .map_err(|_| Rejection::PositiveDimensional)?;
        if elim.degree() != Some(self.degree) {
            return Err(Rejection::DegreeDeficient);
        }
        match degree_pattern(&elim) {
            Ok(parts) => Ok(CycleType::new(parts.into_iter().map(|x| x as u32).collect())),
            Err(_) => Err(Rejection::NotSquarefree),
        }
    }

    /// The accepted sample with index `stream` under `seed`, redrawing until
    /// one passes; rejections along the way are tallied.
    pub fn sample(&self, seed: u64, stream: u64, tally: &mut RejectionTally) -> Result<CycleType, FrobeniusError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let mut deficient_run = 0;
        for _ in 0..MAX_ATTEMPTS {
            match self.attempt(&mut rng, seed, self.linear_form || deficient_run >= LINEAR_FORM_AFTER) {
                Ok(t) => return Ok(t),
                Err(r) => {
                    tally.record(r);
                    if r == Rejection::DegreeDeficient {
                        deficient_run += 1;
                    } else {
                        deficient_run = 0;
                    }
                }
            }
        }
        Err(FrobeniusError::TooManyRejections(MAX_ATTEMPTS))
    }
}

/// A single draw for `problem`, as one step of the sampling loop.
pub fn sample_cycle_type(
    problem: &SchubertProblem,
    prime: u64,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Result<CycleType, Rejection>, FrobeniusError> {
    Ok(Sampler::new(problem, prime)?.attempt(rng, seed, false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    /// Proven from observed cycle types.
    FullSymmetric,
    /// Statistical match against the candidate groups.
    BestFit,
    Undecided,
}

/// The three cycle types that force `S_d` for `d >= 8` when all occur.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricWitnesses {
    pub full_cycle: Option<CycleType>,
    pub near_full_cycle: Option<CycleType>,
    pub prime_cycle: Option<CycleType>,
}

impl SymmetricWitnesses {
    pub fn complete(&self) -> bool {
        self.full_cycle.is_some() && self.near_full_cycle.is_some() && self.prime_cycle.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupVerdict {
    pub kind: VerdictKind,
    pub group: Option<GroupSpec>,
    pub witnesses: SymmetricWitnesses,
    pub fits: Vec<CandidateFit>,
    /// Observed types that no candidate can produce.
    pub unexplained: Vec<CycleType>,
    /// An odd permutation was observed, ruling out `A_d`.
    pub odd_observed: bool,
}

impl fmt::Display for GroupVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.group) {
            (VerdictKind::Undecided, _) | (_, None) => write!(f, "undecided"),
            (VerdictKind::FullSymmetric, Some(g)) => write!(f, "full symmetric {g}"),
            (VerdictKind::BestFit, Some(g)) => write!(f, "best fit {g}"),
        }
    }
}

pub const BESTFIT_MAX_DISTANCE: f64 = 0.015;
pub const BESTFIT_SEPARATION: f64 = 0.05;
pub const BESTFIT_MIN_SAMPLES: u128 = 10_000;
/// Floor for the elimination route, where every rival is disqualified.
pub const ELIMINATION_MIN_SAMPLES: u128 = 1_000;

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|q| q * q <= n).all(|q| n % q != 0)
}

/// Scans a histogram for a `d`-cycle, a `(d−1)`-cycle and an element whose
/// unique longest cycle has prime length below `d − 2`.
pub fn symmetric_witnesses(d: usize, hist: &CycleTypeDistribution) -> SymmetricWitnesses {
    let d = d as u32;
    let mut w = SymmetricWitnesses::default();
    for t in hist.weights.keys() {
        let parts = t.parts();
        let longest = *parts.last().unwrap_or(&0);
        if parts == [d] {
            w.full_cycle = Some(t.clone());
        } else if longest == d - 1 && parts.len() == 2 {
            w.near_full_cycle = Some(t.clone());
        } else if d >= 3 && longest + 2 < d && is_prime(longest) && t.count(longest) == 1 && w.prime_cycle.is_none() {
            w.prime_cycle = Some(t.clone());
        }
    }
    w
}

/// Verdict for a problem of degree `d` from an accumulated histogram.
pub fn decide(d: usize, hist: &CycleTypeDistribution) -> Result<GroupVerdict, FrobeniusError> {
    let witnesses = if d >= 8 { symmetric_witnesses(d, hist) } else { SymmetricWitnesses::default() };
    let odd_observed = hist.weights.keys().any(|t| !t.is_even());
    let candidates = GroupSpec::candidates(d);
    let fits = if d <= 12 { match_distribution(hist, &candidates)? } else { Vec::new() };
    let unexplained: Vec<CycleType> = if fits.is_empty() {
        Vec::new()
    } else {
        let mut exact = Vec::new();
        for c in &candidates {
            exact.push(c.distribution()?);
        }
        hist.weights.keys().filter(|t| exact.iter().all(|e| e.count(t) == 0)).cloned().collect()
    };
    let mut verdict = GroupVerdict {
        kind: VerdictKind::Undecided,
        group: None,
        witnesses,
        fits,
        unexplained,
        odd_observed,
    };

    // S_2 is the only transitive group on two points
    if d == 2 && hist.count(&CycleType::new(vec![2])) > 0 {
        verdict.kind = VerdictKind::FullSymmetric;
        verdict.group = Some(GroupSpec::Symmetric { d });
        return Ok(verdict);
    }
    if verdict.witnesses.complete() {
        verdict.kind = VerdictKind::FullSymmetric;
        verdict.group = Some(GroupSpec::Symmetric { d });
        return Ok(verdict);
    }

    let n = hist.total;
    if let Some(best) = verdict.fits.first().filter(|f| f.disqualified_by.is_none()) {
        let rival = verdict.fits.get(1).filter(|f| f.disqualified_by.is_none());
        let decisive = match rival {
            Some(r) => {
                n >= BESTFIT_MIN_SAMPLES
                    && best.distance < BESTFIT_MAX_DISTANCE
                    && r.distance - best.distance >= BESTFIT_SEPARATION
            }
            // every rival is excluded by an observed type; the distance bound
            // is widened with the sampling error below the usual floor
            None => {
                let scale = (BESTFIT_MIN_SAMPLES as f64 / n.max(1) as f64).sqrt().max(1.0);
                n >= ELIMINATION_MIN_SAMPLES && best.distance < BESTFIT_MAX_DISTANCE * scale
            }
        };
        if decisive {
            verdict.kind = VerdictKind::BestFit;
            verdict.group = Some(best.group.clone());
        }
    }
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerOptions {
    pub workers: usize,
    /// Samples per batch; the stopping rule is checked between batches.
    pub batch: usize,
    pub early_exit: bool,
}

impl Default for SamplerOptions {
    fn default() -> Self {
        SamplerOptions { workers: 1, batch: 500, early_exit: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub problem: String,
    pub k: usize,
    pub n: usize,
    pub degree: usize,
    pub prime: u64,
    pub seed: u64,
    pub requested: usize,
    pub accepted: usize,
    pub rejections: RejectionTally,
    pub histogram: CycleTypeDistribution,
    pub verdict: GroupVerdict,
    /// How the random instances were produced.
    pub flag_model: String,
}

/// Accumulates up to `m` accepted samples; sample `i` depends only on
/// `(seed, i)`, so reports do not depend on the worker count.
pub fn run_sampler(
    problem: &SchubertProblem,
    prime: u64,
    m: usize,
    seed: u64,
    opts: SamplerOptions,
) -> Result<SampleReport, FrobeniusError> {
    let mut sampler = Sampler::new(problem, prime)?;
    sampler.probe(seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .expect("thread pool");
    let mut hist = CycleTypeDistribution::new();
    let mut tally = RejectionTally::default();
    let mut done = 0usize;
    while done < m {
        let end = (done + opts.batch.max(1)).min(m);
        let batch: Vec<Result<(CycleType, RejectionTally), FrobeniusError>> = pool.install(|| {
            (done..end)
                .into_par_iter()
                .map(|i| {
                    let mut t = RejectionTally::default();
                    sampler.sample(seed, i as u64, &mut t).map(|c| (c, t))
                })
                .collect()
        });
        for r in batch {
            let (c, t) = r?;
            hist.add(c, 1);
            tally.merge(&t);
        }
        done = end;
        if opts.early_exit && decide(sampler.degree, &hist)?.kind != VerdictKind::Undecided {
            break;
        }
    }
    let verdict = decide(sampler.degree, &hist)?;
    Ok(SampleReport {
        problem: problem.id(),
        k: problem.spec.k,
        n: problem.spec.n,
        degree: sampler.degree,
        prime,
        seed,
        requested: m,
        accepted: done,
        rejections: tally,
        histogram: hist,
        verdict,
        flag_model: format!(
            "flags drawn uniformly over F_{prime}; chart on the Richardson cell of {} and {}; eliminant in {}",
            sampler.layout.standard,
            sampler.layout.opposite,
            if sampler.linear_form { "a random linear form" } else { "the first coordinate" }
        ),
    })
}
