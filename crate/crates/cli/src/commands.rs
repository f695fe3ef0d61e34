use std::collections::HashMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use schubert_core::fibration::{classify_enriched, derksen_record, EnrichedRecord, Family};
use schubert_core::frobenius::{run_sampler, SampleReport, SamplerOptions};
use schubert_core::group::{blocks, BlockSystem, GroupSpec};
use schubert_core::problem::{for_each_problem, Essentiality, ProblemFilter};
use schubert_core::vakil::{Certificate, ScanOptions, VakilScanner};
use schubert_core::{GrassmannianSpec, SchubertProblem, VakilOutcome};

use crate::config::RunConfig;
use crate::report::{Checkpoint, Degree, FlatRow, Provenance, Report};

/// Settings shared by every command besides `diff`.
pub struct Ctx {
    pub config: RunConfig,
    pub out: Option<PathBuf>,
    pub checkpoint_every: usize,
}

impl Ctx {
    pub fn spec(&self) -> Result<GrassmannianSpec> {
        GrassmannianSpec::new(self.config.k, self.config.n).context("bad -g K N")
    }

    fn filter(&self) -> ProblemFilter {
        let f = &self.config.filters;
        ProblemFilter {
            nontrivial: f.nontrivial_only,
            essential: f.essential_only,
            simple: f.simple_only,
            max_degree: f.max_degree,
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.config.workers).build()?)
    }

    fn emit<R: Serialize + FlatRow, S: Serialize>(&self, command: &str, summary: S, rows: Vec<R>) -> Result<()> {
        let report = Report { provenance: Provenance::new(command), config: self.config.clone(), summary, rows };
        report.emit(self.config.format, self.out.as_deref())
    }

    fn problems(&self) -> Result<Vec<SchubertProblem>> {
        let mut v = Vec::new();
        for_each_problem(self.spec()?, &self.filter(), |r| v.push(r.problem));
        Ok(v)
    }

    /// Maps `work` over `problems` in chunks, saving a checkpoint after each
    /// chunk when writing to a file. With `resume`, rows from a matching
    /// checkpoint are reused.
    fn sweep<R, F>(&self, command: &str, problems: &[SchubertProblem], resume: bool, work: F) -> Result<Vec<R>>
    where
        R: Serialize + DeserializeOwned + Send,
        F: Fn(&mut VakilScanner, &SchubertProblem) -> Result<R> + Sync,
    {
        let spec = self.spec()?;
        let mut rows: Vec<R> = Vec::new();
        if resume {
            let out = self.out.as_deref().context("--resume needs --out")?;
            if let Some(cp) = Checkpoint::<R>::load(out)? {
                if cp.command != command || cp.config != self.config {
                    bail!("{} was written by a different run", Checkpoint::<R>::path(out).display());
                }
                if cp.rows.len() > problems.len() {
                    bail!("checkpoint has more rows than there are problems");
                }
                rows = cp.rows;
                eprintln!("resuming after {} problems", rows.len());
            }
        }
        let pool = self.pool()?;
        let mut cp = Checkpoint { command: command.to_string(), config: self.config.clone(), rows };
        for chunk in problems[cp.rows.len()..].chunks(self.checkpoint_every.max(1)) {
            let done: Result<Vec<R>> =
                pool.install(|| chunk.par_iter().map_init(|| VakilScanner::new(spec), |s, p| work(s, p)).collect());
            cp.rows.extend(done?);
            if let Some(out) = &self.out {
                cp.save(out)?;
            }
        }
        Ok(cp.rows)
    }

    fn finish_sweep(&self) -> Result<()> {
        if let Some(out) = &self.out {
            let path = Checkpoint::<()>::path(out);
            if path.exists() {
                std::fs::remove_file(path)?;
            }
        }
        Ok(())
    }
}

fn scan_options(max_orderings: usize) -> ScanOptions {
    ScanOptions { max_orderings, ..Default::default() }
}

// ---- enumerate / degree / essential-scan ----

#[derive(Serialize, Deserialize)]
pub struct ProblemRow {
    pub id: String,
    pub degree: Degree,
    pub essential: bool,
}

impl FlatRow for ProblemRow {
    const HEADER: &'static [&'static str] = &["id", "degree", "essential"];
    fn fields(&self) -> Vec<String> {
        vec![self.id.clone(), self.degree.to_string(), self.essential.to_string()]
    }
}

#[derive(Serialize, Deserialize)]
pub struct CountSummary {
    pub problems: usize,
    pub essential: usize,
}

pub fn enumerate(ctx: &Ctx) -> Result<()> {
    let mut rows = Vec::new();
    for_each_problem(ctx.spec()?, &ctx.filter(), |r| {
        rows.push(ProblemRow { id: r.problem.id(), degree: (&r.degree).into(), essential: r.essential })
    });
    let summary = CountSummary { problems: rows.len(), essential: rows.iter().filter(|r| r.essential).count() };
    ctx.emit("enumerate", summary, rows)
}

pub fn degree(ctx: &Ctx, problem: &str) -> Result<()> {
    let p = SchubertProblem::parse(ctx.spec()?, problem)?;
    let row = ProblemRow {
        id: p.id(),
        degree: (&schubert_core::degree(&p)).into(),
        essential: schubert_core::is_essential(&p).is_essential(),
    };
    ctx.emit("degree", CountSummary { problems: 1, essential: row.essential as usize }, vec![row])
}

#[derive(Serialize, Deserialize)]
pub struct EssentialRow {
    pub id: String,
    pub degree: Degree,
    pub essential: bool,
    /// The pair of conditions that reduces the problem, and the failed clause.
    pub reduced_by: Option<String>,
}

impl FlatRow for EssentialRow {
    const HEADER: &'static [&'static str] = &["id", "degree", "essential", "reduced_by"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.id.clone(),
            self.degree.to_string(),
            self.essential.to_string(),
            self.reduced_by.clone().unwrap_or_default(),
        ]
    }
}

pub fn essential_scan(ctx: &Ctx) -> Result<()> {
    let mut rows = Vec::new();
    let mut filter = ctx.filter();
    filter.essential = false;
    for_each_problem(ctx.spec()?, &filter, |r| {
        let reduced_by = match schubert_core::is_essential(&r.problem) {
            Essentiality::Essential => None,
            Essentiality::Reducible { mu, nu, clause } => Some(format!("{mu} {nu} {clause:?}")),
        };
        rows.push(EssentialRow { id: r.problem.id(), degree: (&r.degree).into(), essential: r.essential, reduced_by });
    });
    let summary = CountSummary { problems: rows.len(), essential: rows.iter().filter(|r| r.essential).count() };
    ctx.emit("essential-scan", summary, rows)
}

// ---- vakil-scan ----

#[derive(Clone, Serialize, Deserialize)]
pub struct VakilRow {
    pub id: String,
    pub degree: Degree,
    pub verdict: VakilOutcome,
    pub certificate: Option<String>,
    /// δ of the two equal children at the offending node, when inconclusive.
    pub witness: Option<(Degree, Degree)>,
    pub orderings_tried: usize,
}

impl FlatRow for VakilRow {
    const HEADER: &'static [&'static str] = &["id", "degree", "verdict", "certificate", "witness", "orderings_tried"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.id.clone(),
            self.degree.to_string(),
            self.verdict.to_string(),
            self.certificate.clone().unwrap_or_default(),
            self.witness.as_ref().map(|(a, b)| format!("{a}/{b}")).unwrap_or_default(),
            self.orderings_tried.to_string(),
        ]
    }
}

fn vakil_row(scanner: &mut VakilScanner, p: &SchubertProblem, max_orderings: usize) -> VakilRow {
    let v = scanner.scan(p, &scan_options(max_orderings));
    VakilRow {
        id: p.id(),
        degree: (&v.degree).into(),
        verdict: v.outcome,
        certificate: v.certificate.map(|c| match c {
            Certificate::Ordering(i) => format!("ordering {i}"),
            Certificate::BranchwiseSearch => "branchwise".to_string(),
        }),
        witness: v.witness.map(|w| ((&w.deltas.0).into(), (&w.deltas.1).into())),
        orderings_tried: v.orderings_tried.len(),
    }
}

#[derive(Serialize, Deserialize)]
pub struct VakilSummary {
    pub problems: usize,
    pub at_least_alternating: usize,
    pub inconclusive: usize,
}

impl VakilSummary {
    fn of(verdicts: impl Iterator<Item = VakilOutcome>) -> Self {
        let mut s = VakilSummary { problems: 0, at_least_alternating: 0, inconclusive: 0 };
        for v in verdicts {
            s.problems += 1;
            match v {
                VakilOutcome::AtLeastAlternating => s.at_least_alternating += 1,
                VakilOutcome::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

pub fn vakil_scan(ctx: &Ctx, max_orderings: usize, resume: bool) -> Result<()> {
    let problems = ctx.problems()?;
    let rows = ctx.sweep("vakil-scan", &problems, resume, |s, p| Ok(vakil_row(s, p, max_orderings)))?;
    let summary = VakilSummary::of(rows.iter().map(|r| r.verdict));
    ctx.emit("vakil-scan", summary, rows)?;
    ctx.finish_sweep()
}

// ---- classify-enriched ----

#[derive(Clone, Serialize, Deserialize)]
pub struct GroupRow {
    pub kind: String,
    pub m: Option<usize>,
    pub f: Option<usize>,
    pub order: Degree,
    pub label: String,
    pub imprimitive: bool,
}

impl GroupRow {
    fn new(g: &GroupSpec) -> Self {
        let (kind, m, f) = match g {
            GroupSpec::Symmetric { .. } => ("symmetric", None, None),
            GroupSpec::Alternating { .. } => ("alternating", None, None),
            GroupSpec::Wreath { m, f } => ("wreath", Some(*m), Some(*f)),
            GroupSpec::Named { .. } => ("named", None, None),
        };
        let imprimitive = matches!(blocks(&g.group()), Ok(BlockSystem::Blocks(_)));
        GroupRow { kind: kind.to_string(), m, f, order: (&g.order()).into(), label: g.label(), imprimitive }
    }
}

#[derive(Clone, Serialize, Deserialize)]
pub struct EnrichedRow {
    pub problem: String,
    pub family: String,
    pub base: String,
    pub fiber: String,
    pub degree: Degree,
    pub predicted_group: GroupRow,
}

impl EnrichedRow {
    fn new(r: &EnrichedRecord) -> Self {
        EnrichedRow {
            problem: r.problem.id(),
            family: r.template.family.name().to_string(),
            base: format!("{} {}", r.template.base.spec, r.template.base.id()),
            fiber: format!("{} {}", r.fiber.spec, r.fiber.id()),
            degree: (&r.degree).into(),
            predicted_group: GroupRow::new(&r.predicted_group),
        }
    }

    /// The one enriched problem that is not a fibration. Only listed where
    /// it is essential; its padded copy in the next Grassmannian is not.
    fn derksen(spec: GrassmannianSpec) -> Option<Self> {
        let d = derksen_record();
        let p = Some(&d.problem).filter(|p| p.spec == spec)?;
        Some(EnrichedRow {
            problem: p.id(),
            family: d.name.to_string(),
            base: String::new(),
            fiber: String::new(),
            degree: (&p.degree()).into(),
            predicted_group: GroupRow::new(&d.group),
        })
    }
}

impl FlatRow for EnrichedRow {
    const HEADER: &'static [&'static str] = &["problem", "family", "base", "fiber", "degree", "group", "group_order"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.problem.clone(),
            self.family.clone(),
            self.base.clone(),
            self.fiber.clone(),
            self.degree.to_string(),
            self.predicted_group.label.clone(),
            self.predicted_group.order.to_string(),
        ]
    }
}

#[derive(Serialize, Deserialize)]
pub struct EnrichedCounts {
    /// Distinct problems; one problem can arise from several families.
    pub total: usize,
    pub by_family: std::collections::BTreeMap<String, usize>,
    pub by_group: std::collections::BTreeMap<String, usize>,
}

impl EnrichedCounts {
    fn of(rows: &[EnrichedRow]) -> Self {
        let mut s = EnrichedCounts { total: 0, by_family: Default::default(), by_group: Default::default() };
        let mut seen = std::collections::BTreeSet::new();
        for r in rows {
            *s.by_family.entry(r.family.clone()).or_insert(0) += 1;
            if seen.insert(&r.problem) {
                *s.by_group.entry(r.predicted_group.label.clone()).or_insert(0) += 1;
            }
        }
        s.total = seen.len();
        s
    }
}

/// Fibration records of `spec` plus the static non-fibration record.
fn enriched_rows(spec: GrassmannianSpec) -> Vec<EnrichedRow> {
    let (records, _) = classify_enriched(spec);
    let mut rows: Vec<EnrichedRow> = records.iter().map(EnrichedRow::new).collect();
    rows.extend(EnrichedRow::derksen(spec));
    rows
}

pub fn classify(ctx: &Ctx, family: Option<Family>) -> Result<()> {
    let mut rows = ctx.pool()?.install(|| ctx.spec().map(enriched_rows))?;
    if let Some(f) = family {
        rows.retain(|r| r.family == f.name());
    }
    ctx.emit("classify-enriched", EnrichedCounts::of(&rows), rows)
}

// ---- frobenius ----

#[derive(Serialize, Deserialize)]
pub struct HistogramRow {
    pub cycle_type: String,
    pub count: u128,
    /// The observed fraction scaled by the order of the inferred group, so
    /// it reads like a count of group elements. Empty with no inferred group.
    pub fraction_of_group_order: Option<f64>,
}

impl FlatRow for HistogramRow {
    const HEADER: &'static [&'static str] = &["cycle_type", "count", "fraction_of_group_order"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.cycle_type.clone(),
            self.count.to_string(),
            self.fraction_of_group_order.map(|x| format!("{x:.4}")).unwrap_or_default(),
        ]
    }
}

fn histogram_rows(rep: &SampleReport) -> Vec<HistogramRow> {
    use num_traits::ToPrimitive;
    let order = rep.verdict.group.as_ref().and_then(|g| g.order().to_f64());
    rep.histogram
        .weights
        .iter()
        .map(|(t, &c)| HistogramRow {
            cycle_type: t.dashed(),
            count: c,
            fraction_of_group_order: order.map(|o| (c as f64 / rep.histogram.total as f64 * o * 1e4).round() / 1e4),
        })
        .collect()
}

fn sampler(ctx: &Ctx, p: &SchubertProblem, early_exit: bool, workers: usize) -> Result<SampleReport> {
    let c = &ctx.config;
    let opts = SamplerOptions { workers, early_exit, ..Default::default() };
    Ok(run_sampler(p, c.prime, c.samples, c.seed, opts)?)
}

pub fn frobenius(ctx: &Ctx, problem: &str, early_exit: bool) -> Result<()> {
    let p = SchubertProblem::parse(ctx.spec()?, problem)?;
    let rep = sampler(ctx, &p, early_exit, ctx.config.workers)?;
    eprintln!("{}: {} accepted, {}", rep.problem, rep.accepted, rep.verdict);
    let rows = histogram_rows(&rep);
    ctx.emit("frobenius", rep, rows)
}

// ---- pipeline ----

#[derive(Clone, Serialize, Deserialize)]
pub struct FrobeniusRow {
    pub accepted: usize,
    pub verdict: String,
    pub group: Option<String>,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct PipelineRow {
    pub id: String,
    pub degree: Degree,
    pub essential: bool,
    pub vakil: VakilRow,
    pub fibration: Option<EnrichedRow>,
    pub frobenius: Option<FrobeniusRow>,
}

impl FlatRow for PipelineRow {
    const HEADER: &'static [&'static str] =
        &["id", "degree", "essential", "vakil", "family", "predicted_group", "imprimitive", "frobenius"];
    fn fields(&self) -> Vec<String> {
        let fib = self.fibration.as_ref();
        vec![
            self.id.clone(),
            self.degree.to_string(),
            self.essential.to_string(),
            self.vakil.verdict.to_string(),
            fib.map(|f| f.family.clone()).unwrap_or_default(),
            fib.map(|f| f.predicted_group.label.clone()).unwrap_or_default(),
            fib.map(|f| f.predicted_group.imprimitive.to_string()).unwrap_or_default(),
            self.frobenius.as_ref().map(|f| f.verdict.clone()).unwrap_or_default(),
        ]
    }
}

/// Recomputed from rows on every write.
#[derive(Serialize, Deserialize)]
pub struct PipelineSummary {
    pub problems: usize,
    pub at_least_alternating: usize,
    pub inconclusive: usize,
    pub enriched: usize,
    pub enriched_imprimitive: usize,
    pub inconclusive_unexplained: usize,
    pub frobenius_runs: usize,
}

impl PipelineSummary {
    fn of(rows: &[PipelineRow]) -> Self {
        let v = VakilSummary::of(rows.iter().map(|r| r.vakil.verdict));
        let fib = || rows.iter().filter_map(|r| r.fibration.as_ref());
        PipelineSummary {
            problems: v.problems,
            at_least_alternating: v.at_least_alternating,
            inconclusive: v.inconclusive,
            enriched: fib().count(),
            enriched_imprimitive: fib().filter(|f| f.predicted_group.imprimitive).count(),
            inconclusive_unexplained: rows
                .iter()
                .filter(|r| r.vakil.verdict == VakilOutcome::Inconclusive && r.fibration.is_none())
                .count(),
            frobenius_runs: rows.iter().filter(|r| r.frobenius.is_some()).count(),
        }
    }
}

/// enumerate, keep essential problems, run the tournament test, explain
/// inconclusive ones by fibration and optionally sample their Frobenius
/// cycle types.
pub fn pipeline(ctx: &Ctx, max_orderings: usize, with_frobenius: bool, resume: bool) -> Result<()> {
    let spec = ctx.spec()?;
    let mut enriched: HashMap<String, EnrichedRow> = HashMap::new();
    for r in ctx.pool()?.install(|| enriched_rows(spec)) {
        enriched.entry(r.problem.clone()).or_insert(r);
    }
    let problems: Vec<SchubertProblem> = ctx.problems()?.into_iter().filter(|p| schubert_core::is_essential(p).is_essential()).collect();
    let rows = ctx.sweep("pipeline", &problems, resume, |s, p| {
        let vakil = vakil_row(s, p, max_orderings);
        let inconclusive = vakil.verdict == VakilOutcome::Inconclusive;
        let fibration = if inconclusive { enriched.get(&vakil.id).cloned() } else { None };
        let frobenius = if with_frobenius && inconclusive {
            // the sweep already runs one problem per worker
            let rep = sampler(ctx, p, true, 1)?;
            Some(FrobeniusRow {
                accepted: rep.accepted,
                verdict: rep.verdict.to_string(),
                group: rep.verdict.group.as_ref().map(|g| g.label()),
            })
        } else {
            None
        };
        Ok(PipelineRow { id: vakil.id.clone(), degree: vakil.degree.clone(), essential: true, vakil, fibration, frobenius })
    })?;
    ctx.emit("pipeline", PipelineSummary::of(&rows), rows)?;
    ctx.finish_sweep()
}

// ---- diff ----

/// Prints one line per difference; returns whether the reports agree.
pub fn diff(a: &Path, b: &Path) -> Result<bool> {
    let read = |p: &Path| -> Result<serde_json::Value> {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        serde_json::from_str(&text).with_context(|| format!("{} is not a JSON report", p.display()))
    };
    let lines = crate::report::diff(&read(a)?, &read(b)?);
    for l in &lines {
        println!("{l}");
    }
    Ok(lines.is_empty())
}
