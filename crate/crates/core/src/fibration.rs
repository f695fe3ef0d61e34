//! Fibered Schubert problems: six constructions that lift a problem `ν`
//! in `Gr(a,b)` to one in a larger Grassmannian whose solutions fiber over
//! a small auxiliary problem, and a recognizer built on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::SchubertError;
use crate::group::GroupSpec;
use crate::partition::{GrassmannianSpec, Partition};
use crate::problem::{enumerate_problems, is_essential, ProblemFilter, SchubertProblem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    TypeI,
    TypeIbI,
    TypeIbII,
    TypeIIa,
    TypeIIb,
    TypeIIc,
    TypeIId,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::TypeI,
        Family::TypeIbI,
        Family::TypeIbII,
        Family::TypeIIa,
        Family::TypeIIb,
        Family::TypeIIc,
        Family::TypeIId,
    ];

    /// How much `n` grows; `k` always grows by 2.
    pub fn n_growth(self) -> usize {
        match self {
            Family::TypeIbI | Family::TypeIbII | Family::TypeIIb => 5,
            _ => 4,
        }
    }

    /// Number of leading fiber slots the construction reshapes.
    pub fn slots(self) -> usize {
        match self {
            Family::TypeIbII | Family::TypeIIb => 5,
            _ => 4,
        }
    }

    /// The auxiliary problem the construction fibers over.
    pub fn base(self) -> SchubertProblem {
        let (k, n, s) = match self {
            Family::TypeIbI => (2, 5, "(2,1)*(1)^3"),
            Family::TypeIbII | Family::TypeIIb => (2, 5, "(2)*(1)^4"),
            _ => (2, 4, "(1)^4"),
        };
        SchubertProblem::parse(GrassmannianSpec::new(k, n).unwrap(), s).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::TypeI => "I",
            Family::TypeIbI => "Ib(i)",
            Family::TypeIbII => "Ib(ii)",
            Family::TypeIIa => "IIa",
            Family::TypeIIb => "IIb",
            Family::TypeIIc => "IIc",
            Family::TypeIId => "IId",
        }
    }

    /// Fiber Grassmannian for a given target, if the family reaches it.
    pub fn fiber_spec(self, target: GrassmannianSpec) -> Option<GrassmannianSpec> {
        let a = target.k.checked_sub(2)?;
        let b = target.n.checked_sub(self.n_growth())?;
        (a > 0 && a < b).then(|| GrassmannianSpec::new(a, b).ok()).flatten()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = SchubertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s) || format!("{f:?}").eq_ignore_ascii_case(s))
            .ok_or_else(|| SchubertError::Parse(format!("unknown family {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationTemplate {
    pub family: Family,
    pub base: SchubertProblem,
    pub fiber_spec: GrassmannianSpec,
}

fn cerr(msg: impl Into<String>) -> SchubertError {
    SchubertError::Construction(msg.into())
}

fn p(parts: Vec<u32>) -> Partition {
    Partition::new(parts).expect("constant shapes are partitions")
}

fn ones(a: usize) -> Partition {
    Partition::column(a)
}

/// Splits `(first, rest)` when the first part equals `first` and the rest
/// has fewer than `a` rows.
fn split_head(nu: &Partition, first: u32, a: usize) -> Result<Partition, SchubertError> {
    if nu.part(0) != first || nu.len() > a {
        return Err(cerr(format!("{nu} is not ({first}, κ) with κ_{a} = 0")));
    }
    Ok(Partition::new(nu.parts()[1..].to_vec()).unwrap())
}

/// Inverts `r^rows + ρ` for a partition with exactly `rows` rows.
fn strip_rows(nu: &Partition, r: u32, rows: usize) -> Result<Partition, SchubertError> {
    if nu.len() != rows || nu.parts().iter().any(|&x| x < r) {
        return Err(cerr(format!("{nu} is not {r}^{rows} + ρ")));
    }
    Ok(Partition::new(nu.parts().iter().map(|x| x - r).collect::<Vec<_>>()).unwrap())
}

/// Applies `family` to the slot list `nu` (zero slots allowed) of a problem
/// in `fiber`. Slots past the family's reshaped ones are carried over.
pub fn construct(family: Family, fiber: GrassmannianSpec, nu: &[Partition]) -> Result<SchubertProblem, SchubertError> {
    let (a, b) = (fiber.k, fiber.n);
    if a >= b {
        return Err(SchubertError::BadGrassmannian { k: a, n: b });
    }
    let ns = family.slots();
    let mut slots = nu.to_vec();
    if slots.len() < ns {
        slots.resize(ns, Partition::empty());
    }
    for s in &slots {
        if !s.fits_in_box(fiber) {
            return Err(SchubertError::BoxViolation { partition: s.clone(), spec: fiber });
        }
    }
    let c = (b - a) as u32;
    let one = ones(a + 1);
    let lifted = |x: &Partition| one.componentwise_sum(x);
    let mut out: Vec<Partition> = match family {
        Family::TypeI => vec![
            p(vec![c + 1]).concat(&slots[0])?,
            p(vec![c + 1]).concat(&slots[1])?,
            lifted(&slots[2])?,
            lifted(&slots[3])?,
        ],
        Family::TypeIbI => vec![
            p(vec![c + 2, c + 1]).concat(&slots[0])?,
            lifted(&slots[1])?,
            lifted(&slots[2])?,
            lifted(&slots[3])?,
        ],
        Family::TypeIbII => vec![
            p(vec![c + 2]).concat(&slots[0])?,
            p(vec![c + 1]).concat(&slots[1])?,
            lifted(&slots[2])?,
            lifted(&slots[3])?,
            lifted(&slots[4])?,
        ],
        Family::TypeIIa => {
            if c < 2 {
                return Err(cerr("needs b - a >= 2"));
            }
            let kappa = split_head(&slots[0], c - 1, a)?;
            let rho = strip_rows(&slots[1], 1, a - 1)?;
            vec![
                p(vec![c, c]).concat(&kappa)?,
                Partition::rectangle(a, 2).componentwise_sum(&rho)?,
                p(vec![c + 1]).concat(&slots[2])?,
                lifted(&slots[3])?,
            ]
        }
        Family::TypeIIb => {
            if c < 2 {
                return Err(cerr("needs b - a >= 2"));
            }
            let kappa = split_head(&slots[1], c - 1, a)?;
            let rho = strip_rows(&slots[2], 1, a - 1)?;
            vec![
                p(vec![c + 2]).concat(&slots[0])?,
                p(vec![c, c]).concat(&kappa)?,
                Partition::rectangle(a, 2).componentwise_sum(&rho)?,
                lifted(&slots[3])?,
                lifted(&slots[4])?,
            ]
        }
        Family::TypeIIc => {
            if c < 3 {
                return Err(cerr("needs b - a >= 3"));
            }
            let kappa = split_head(&slots[0], c - 1, a)?;
            let rho = split_head(&slots[1], c - 2, a)?;
            let sigma = strip_rows(&slots[2], 2, a - 1)?;
            let mut top = vec![3; a];
            top.push(2);
            vec![
                p(vec![c - 1, c - 1]).concat(&kappa)?,
                p(vec![c - 1, c - 1]).concat(&rho)?,
                p(top).componentwise_sum(&sigma)?,
                lifted(&slots[3])?,
            ]
        }
        Family::TypeIId => {
            if c < 2 {
                return Err(cerr("needs b - a >= 2"));
            }
            if slots[0] != Partition::rectangle(a - 1, 2) || slots[1] != p(vec![c - 1]) {
                return Err(cerr("first two slots must be (2)^(a-1) and (b-a-1)"));
            }
            let mut first = vec![c + 1];
            first.extend(std::iter::repeat(2).take(a));
            vec![p(first), p(vec![c - 1, c - 1]), lifted(&slots[2])?, lifted(&slots[3])?]
        }
    };
    out.extend(slots[ns..].iter().cloned());
    let target = GrassmannianSpec::new(a + 2, b + family.n_growth())?;
    SchubertProblem::new(target, out)
}

pub fn construct_type1(fiber: GrassmannianSpec, nu: &[Partition]) -> Result<SchubertProblem, SchubertError> {
    construct(Family::TypeI, fiber, nu)
}

/// `second = false` is variant (i), `true` is variant (ii).
pub fn construct_type1b(fiber: GrassmannianSpec, nu: &[Partition], second: bool) -> Result<SchubertProblem, SchubertError> {
    construct(if second { Family::TypeIbII } else { Family::TypeIbI }, fiber, nu)
}

pub fn construct_type2a(fiber: GrassmannianSpec, nu: &[Partition]) -> Result<SchubertProblem, SchubertError> {
    construct(Family::TypeIIa, fiber, nu)
}

pub fn construct_type2b(fiber: GrassmannianSpec, nu: &[Partition]) -> Result<SchubertProblem, SchubertError> {
    construct(Family::TypeIIb, fiber, nu)
}

pub fn construct_type2c(fiber: GrassmannianSpec, nu: &[Partition]) -> Result<SchubertProblem, SchubertError> {
    construct(Family::TypeIIc, fiber, nu)
}

pub fn construct_type2d(fiber: GrassmannianSpec, nu: &[Partition]) -> Result<SchubertProblem, SchubertError> {
    construct(Family::TypeIId, fiber, nu)
}

/// One enriched problem and the fibration that explains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnrichedRecord {
    pub problem: SchubertProblem,
    pub template: FibrationTemplate,
    pub fiber: SchubertProblem,
    /// Slot arrangement of the fiber that produced `problem`.
    pub slots: Vec<Partition>,
    pub predicted_group: GroupSpec,
    pub degree: BigUint,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EnrichedSummary {
    pub by_family: BTreeMap<Family, usize>,
    /// Counts per family and fiber ID.
    pub by_fiber: BTreeMap<Family, BTreeMap<String, usize>>,
    /// Counts per predicted group label.
    pub by_group: BTreeMap<String, usize>,
    pub total: usize,
}

impl EnrichedSummary {
    pub fn from_records(records: &[EnrichedRecord]) -> Self {
        let mut s = EnrichedSummary::default();
        let mut distinct = BTreeSet::new();
        for r in records {
            *s.by_family.entry(r.template.family).or_insert(0) += 1;
            *s.by_fiber.entry(r.template.family).or_default().entry(r.fiber.id()).or_insert(0) += 1;
            if distinct.insert(r.problem.id()) {
                *s.by_group.entry(r.predicted_group.label()).or_insert(0) += 1;
            }
        }
        s.total = distinct.len();
        s
    }
}

/// Every way to place distinct conditions of `conds` (or zero) into `ns`
/// leading slots; unplaced conditions follow. Deduplicated.
fn arrangements(conds: &[Partition], ns: usize) -> BTreeSet<Vec<Partition>> {
    let mut out = BTreeSet::new();
    let mut pick: Vec<Option<usize>> = vec![None; ns];
    fn go(
        i: usize,
        conds: &[Partition],
        pick: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        out: &mut BTreeSet<Vec<Partition>>,
    ) {
        if i == pick.len() {
            let mut v: Vec<Partition> =
                pick.iter().map(|x| x.map_or_else(Partition::empty, |j| conds[j].clone())).collect();
            let mut rest: Vec<Partition> =
                conds.iter().enumerate().filter(|&(j, _)| !used[j]).map(|(_, c)| c.clone()).collect();
            rest.sort();
            v.extend(rest);
            out.insert(v);
            return;
        }
        pick[i] = None;
        go(i + 1, conds, pick, used, out);
        for j in 0..conds.len() {
            // equal conditions are interchangeable; take the first unused one
            if used[j] || (j > 0 && conds[j] == conds[j - 1] && !used[j - 1]) {
                continue;
            }
            used[j] = true;
            pick[i] = Some(j);
            go(i + 1, conds, pick, used, out);
            used[j] = false;
        }
        pick[i] = None;
    }
    go(0, conds, &mut pick, &mut vec![false; conds.len()], &mut out);
    out
}

/// Essential nontrivial problems of one family over every nontrivial fiber.
pub fn family_records(family: Family, target: GrassmannianSpec) -> Vec<EnrichedRecord> {
    let Some(fspec) = family.fiber_spec(target) else { return Vec::new() };
    let base = family.base();
    let base_degree = base.degree();
    let mut found: BTreeMap<String, EnrichedRecord> = BTreeMap::new();
    for fr in enumerate_problems(fspec, &ProblemFilter::nontrivial()) {
        for slots in arrangements(fr.problem.conditions(), family.slots()) {
            let Ok(lam) = construct(family, fspec, &slots) else { continue };
            if !is_essential(&lam).is_essential() {
                continue;
            }
            let degree = lam.degree();
            if degree <= BigUint::one() {
                continue;
            }
            let rec = EnrichedRecord {
                template: FibrationTemplate { family, base: base.clone(), fiber_spec: fspec },
                fiber: fr.problem.clone(),
                slots,
                predicted_group: GroupSpec::wreath(
                    fr.degree.to_usize().expect("small fiber degree"),
                    base_degree.to_usize().unwrap(),
                ),
                degree,
                problem: lam,
            };
            let key = rec.problem.id();
            // keep the smallest explanation so the result is order independent
            let better = found
                .get(&key)
                .map_or(true, |old| (rec.fiber.id(), &rec.slots) < (old.fiber.id(), &old.slots));
            if better {
                found.insert(key, rec);
            }
        }
    }
    found.into_values().collect()
}

/// Runs every family on `target`; records are grouped by family.
pub fn classify_enriched(target: GrassmannianSpec) -> (Vec<EnrichedRecord>, EnrichedSummary) {
    use rayon::prelude::*;
    let records: Vec<EnrichedRecord> =
        Family::ALL.par_iter().flat_map_iter(|&f| family_records(f, target)).collect();
    let summary = EnrichedSummary::from_records(&records);
    (records, summary)
}

/// An enriched problem that is not a fibration, kept as data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StaticRecord {
    pub name: &'static str,
    pub problem: SchubertProblem,
    /// The same problem padded into the next Grassmannian, where it is not essential.
    pub lifted: SchubertProblem,
    pub group: GroupSpec,
}

/// Four `(2,2)` conditions in `Gr(4,8)`: six solutions permuted like the
/// ordered splittings of a 4-set.
pub fn derksen_record() -> StaticRecord {
    let g48 = GrassmannianSpec::new(4, 8).unwrap();
    let g49 = GrassmannianSpec::new(4, 9).unwrap();
    StaticRecord {
        name: "Derksen",
        problem: SchubertProblem::parse(g48, "(2,2)^4").unwrap(),
        lifted: SchubertProblem::parse(g49, "(2,2)^4*(1,1,1,1)").unwrap(),
        group: GroupSpec::s4_on_equipartitions(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{Clause, Essentiality};

    fn g(k: usize, n: usize) -> GrassmannianSpec {
        GrassmannianSpec::new(k, n).unwrap()
    }

    fn parts(s: &str) -> Vec<Partition> {
        s.split(';').map(|x| x.trim().parse().unwrap()).collect()
    }

    fn id(k: usize, n: usize, s: &str) -> String {
        SchubertProblem::parse(g(k, n), s).unwrap().id()
    }

    #[test]
    fn type1_slot_arrangements() {
        let g25 = g(2, 5);
        let a = construct_type1(g25, &parts("(1);(1);(1);(1);(1);(1)")).unwrap();
        assert_eq!(a.id(), id(4, 9, "(4,1)^2*(2,1,1)^2*(1)^2"));
        let b = construct_type1(g25, &parts("();();(1);(1);(1);(1);(1);(1)")).unwrap();
        assert_eq!(b.id(), id(4, 9, "(4)^2*(2,1,1)^2*(1)^4"));
        let c = construct_type1(g25, &parts("();(1);();(1);(1);(1);(1);(1)")).unwrap();
        assert_eq!(c.id(), id(4, 9, "(4)*(4,1)*(1,1,1)*(2,1,1)*(1)^4"));
        assert!(construct_type1(g25, &parts("(1);(1);(1)")).is_err());
    }

    #[test]
    fn type1b_examples() {
        let g24 = g(2, 4);
        let a = construct_type1b(g24, &parts("(1);(1);(1);(1)"), false).unwrap();
        assert_eq!(a.id(), id(4, 9, "(4,3,1)*(2,1,1)^3"));
        assert_eq!(a.degree(), BigUint::from(4u32));
        let b = construct_type1b(g24, &parts("(1);(1);(1);(1);()"), true).unwrap();
        assert_eq!(b.id(), id(4, 9, "(3,1)*(4,1)*(1,1,1)*(2,1,1)^2"));
        assert_eq!(b.degree(), BigUint::from(6u32));
        // an all-zero fiber is the trivial problem and is never enumerated
        let t = construct_type1b(g(2, 4), &parts("(2,2);();();();()"), true).unwrap();
        assert_eq!(t.degree(), BigUint::from(3u32));
        assert!(!family_records(Family::TypeIbII, g(4, 9)).iter().any(|r| r.problem == t));
    }

    #[test]
    fn type2_examples() {
        let g25 = g(2, 5);
        let a = construct_type2a(g25, &parts("(2);(1);(2);(1)")).unwrap();
        assert_eq!(a.id(), id(4, 9, "(3,3)*(2,2)*(4,2)*(2,1,1)"));
        let a = construct_type2a(g25, &parts("(2,1);(1);(1);(1)")).unwrap();
        assert_eq!(a.id(), id(4, 9, "(3,3,1)*(2,2)*(4,1)*(2,1,1)"));
        let a = construct_type2a(g25, &parts("(2);(1);(1);(1);(1)")).unwrap();
        assert_eq!(a.id(), id(4, 9, "(3,3)*(2,2)*(4,1)*(2,1,1)*(1)"));
        assert_eq!(a.degree(), BigUint::from(6u32));
        assert!(construct_type2a(g25, &parts("(1);(1);(2);(1)")).is_err());

        let b = construct_type2b(g(2, 4), &parts("(1);(1);(1);(1);()")).unwrap();
        assert_eq!(b.id(), id(4, 9, "(4,1)*(2,2)^2*(2,1,1)*(1,1,1)"));
        let b = construct_type2b(g(2, 4), &parts("();(1);(1);(1);();(1)")).unwrap();
        assert_eq!(b.id(), id(4, 9, "(4)*(2,2)^2*(2,1,1)*(1,1,1)*(1)"));

        let c = construct_type2c(g25, &parts("(2);(1);(2);(1)")).unwrap();
        assert_eq!(c.id(), id(4, 9, "(2,2)^2*(3,3,2)*(2,1,1)"));
        let c = construct_type2c(g25, &parts("(2);(1);(2);();(1)")).unwrap();
        assert_eq!(c.id(), id(4, 9, "(2,2)^2*(3,3,2)*(1,1,1)*(1)"));

        let d = construct_type2d(g25, &parts("(2);(2);();();(1);(1)")).unwrap();
        assert_eq!(d.id(), id(4, 9, "(4,2,2)*(2,2)*(1,1,1)^2*(1)^2"));
        let d = construct_type2d(g25, &parts("(2);(2);(1);();(1)")).unwrap();
        assert_eq!(d.id(), id(4, 9, "(4,2,2)*(2,2)*(2,1,1)*(1,1,1)*(1)"));
        assert!(construct_type2d(g25, &parts("(2);(1);(1);(1);(1)")).is_err());
    }

    #[test]
    fn weights_fill_the_target() {
        for fam in Family::ALL {
            for r in family_records(fam, g(4, 9)) {
                let w: u32 = r.problem.conditions().iter().map(Partition::weight).sum();
                assert_eq!(w as usize, r.problem.spec.dim());
            }
        }
    }

    #[test]
    fn arrangement_order_does_not_matter() {
        let conds = parts("(2);(2);(1);(1)");
        let mut rev = conds.clone();
        rev.reverse();
        rev.sort();
        assert_eq!(arrangements(&conds, 4), arrangements(&rev, 4));
        // two zero slots and two ordered picks among {(2),(1)} types, etc.
        let all = arrangements(&conds, 2);
        assert!(all.contains(&parts("();();(2);(2);(1);(1)")));
        assert!(all.contains(&parts("(1);(2);(2);(1)")));
    }

    #[test]
    fn gr48_families() {
        let (recs, summary) = classify_enriched(g(4, 8));
        assert!(summary.total > 0);
        for r in &recs {
            assert_eq!(r.degree, r.template.base.degree() * r.fiber.degree());
        }
    }

    #[test]
    fn derksen_problem() {
        let d = derksen_record();
        assert_eq!(d.problem.degree(), BigUint::from(6u32));
        assert_eq!(d.lifted.degree(), BigUint::from(6u32));
        assert!(is_essential(&d.problem).is_essential());
        assert!(matches!(is_essential(&d.lifted), Essentiality::Reducible { clause: Clause::B, .. }));
        assert_eq!(d.group.order(), BigUint::from(24u32));
    }
}
