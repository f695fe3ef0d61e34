//! Schubert problems: parsing, degree, essentiality, enumeration.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SchubertError;
use crate::lr::{lr_multiply, CohomologyClass, LrTable};
use crate::partition::{GrassmannianSpec, Partition};

/// A multiset of nonzero conditions whose weights fill `k(n−k)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchubertProblem {
    pub spec: GrassmannianSpec,
    conditions: Vec<Partition>,
}

impl SchubertProblem {
    /// Zero conditions are accepted and dropped.
    pub fn new(spec: GrassmannianSpec, conditions: Vec<Partition>) -> Result<Self, SchubertError> {
        let mut conditions: Vec<Partition> = conditions.into_iter().filter(|c| !c.is_empty()).collect();
        for c in &conditions {
            if !c.fits_in_box(spec) {
                return Err(SchubertError::BoxViolation { partition: c.clone(), spec });
            }
        }
        let got: usize = conditions.iter().map(|c| c.weight() as usize).sum();
        if got != spec.dim() {
            return Err(SchubertError::WeightMismatch { expected: spec.dim(), got });
        }
        conditions.sort();
        Ok(SchubertProblem { spec, conditions })
    }

    /// Parses the `term (sep term)*` grammar, e.g. `(2,1)*(1)^3`.
    pub fn parse(spec: GrassmannianSpec, s: &str) -> Result<Self, SchubertError> {
        Self::new(spec, parse_terms(s)?)
    }

    /// Conditions in canonical order.
    pub fn conditions(&self) -> &[Partition] {
        &self.conditions
    }

    pub fn len(&self) -> usize {
        self.conditions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }

    /// Canonical identity such as `(2,1)*(1)^3`.
    pub fn id(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.conditions.len() {
            let mut j = i;
            while j < self.conditions.len() && self.conditions[j] == self.conditions[i] {
                j += 1;
            }
            let e = j - i;
            terms.push(if e == 1 {
                self.conditions[i].to_string()
            } else {
                format!("{}^{}", self.conditions[i], e)
            });
            i = j;
        }
        terms.join("*")
    }

    pub fn degree(&self) -> BigUint {
        degree(self)
    }

    pub fn is_simple(&self) -> bool {
        let one = Partition::row(1);
        self.conditions.iter().filter(|c| **c != one).count() <= 2
    }

    pub fn dual(&self) -> SchubertProblem {
        dual_problem(self)
    }
}

impl fmt::Display for SchubertProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.id(), self.spec)
    }
}

impl fmt::Debug for SchubertProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits a problem string into conditions, expanding exponents.
pub fn parse_terms(s: &str) -> Result<Vec<Partition>, SchubertError> {
    let bad = || SchubertError::Parse(s.to_string());
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let skip_sep = |i: &mut usize| {
        while *i < chars.len() && (chars[*i].is_whitespace() || chars[*i] == '*' || chars[*i] == '\u{b7}') {
            *i += 1;
        }
    };
    skip_sep(&mut i);
    while i < chars.len() {
        let start = i;
        let part: Partition = if chars[i] == '(' {
            while i < chars.len() && chars[i] != ')' {
                i += 1;
            }
            if i == chars.len() {
                return Err(bad());
            }
            i += 1;
            chars[start..i].iter().collect::<String>().parse()?
        } else if chars[i].is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            chars[start..i].iter().collect::<String>().parse()?
        } else {
            return Err(bad());
        };
        let mut exp = 1usize;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let es = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            exp = chars[es..i].iter().collect::<String>().parse().map_err(|_| bad())?;
        }
        if i < chars.len() && !(chars[i].is_whitespace() || chars[i] == '*' || chars[i] == '\u{b7}') {
            return Err(bad());
        }
        out.extend(std::iter::repeat(part).take(exp));
        skip_sep(&mut i);
    }
    Ok(out)
}

/// `d(λ)`: multiply the conditions one at a time (largest weight first) and
/// read the coefficient of the complement of the last one.
pub fn degree(p: &SchubertProblem) -> BigUint {
    let Some((last, init)) = p.conditions.split_last() else {
        return BigUint::zero();
    };
    let mut class = CohomologyClass::unit(p.spec);
    for c in init {
        class = lr_multiply(&class, c).expect("conditions fit the box");
        if class.is_zero() {
            return BigUint::zero();
        }
    }
    class.coefficient(&last.complement(p.spec))
}

pub fn dual_problem(p: &SchubertProblem) -> SchubertProblem {
    let conds = p.conditions.iter().map(Partition::conjugate).collect();
    SchubertProblem::new(p.spec.dual(), conds).expect("conjugation preserves box and weight")
}

/// Which clause of the essentiality condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    /// `μ_1 < n−k`
    A,
    /// `μ_k = 0`
    B,
    /// `μ_i + ν_{k+1−i} < n−k`
    C { i: usize },
    /// `μ_i + ν_{k−i} ≤ n−k`
    D { i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Essentiality {
    Essential,
    Reducible { mu: Partition, nu: Partition, clause: Clause },
}

impl Essentiality {
    pub fn is_essential(&self) -> bool {
        matches!(self, Essentiality::Essential)
    }
}

/// Checks every ordered pair of list members; a repeated condition is
/// paired with a second copy of itself.
pub fn is_essential(p: &SchubertProblem) -> Essentiality {
    essential_check(p.spec, &p.conditions)
}

pub(crate) fn essential_check(spec: GrassmannianSpec, conds: &[Partition]) -> Essentiality {
    let k = spec.k;
    let m = spec.m() as u32;
    // parts are 1-based in the clauses; part(i-1) below
    for (a, mu) in conds.iter().enumerate() {
        for (b, nu) in conds.iter().enumerate() {
            if a == b {
                continue;
            }
            let fail = |clause| Essentiality::Reducible { mu: mu.clone(), nu: nu.clone(), clause };
            if mu.part(0) >= m {
                return fail(Clause::A);
            }
            if mu.part(k - 1) != 0 {
                return fail(Clause::B);
            }
            for i in 1..=k {
                if mu.part(i - 1) + nu.part(k - i) >= m {
                    return fail(Clause::C { i });
                }
            }
            for i in 1..k {
                if mu.part(i - 1) + nu.part(k - i - 1) > m {
                    return fail(Clause::D { i });
                }
            }
        }
    }
    Essentiality::Essential
}

/// Enumeration filters; all default to off.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ProblemFilter {
    pub nontrivial: bool,
    pub essential: bool,
    pub simple: bool,
    pub max_degree: Option<u64>,
}

impl ProblemFilter {
    pub fn nontrivial() -> Self {
        ProblemFilter { nontrivial: true, ..Default::default() }
    }

    pub fn essential() -> Self {
        ProblemFilter { nontrivial: true, essential: true, ..Default::default() }
    }
}

/// One enumerated problem with its degree.
#[derive(Clone, Debug)]
pub struct ProblemRecord {
    pub problem: SchubertProblem,
    pub degree: BigUint,
    pub essential: bool,
}

/// Streams every problem of `spec` passing `filter`, in canonical order.
///
/// Problems are non-increasing sequences of box partitions (in canonical
/// order), built depth first while carrying the product of the prefix.
pub fn for_each_problem(spec: GrassmannianSpec, filter: &ProblemFilter, mut visit: impl FnMut(ProblemRecord)) {
    let table = LrTable::new(spec);
    for_each_problem_with(&table, filter, &mut visit);
}

pub fn for_each_problem_with(table: &LrTable, filter: &ProblemFilter, visit: &mut dyn FnMut(ProblemRecord)) {
    let nonzero: Vec<usize> = (0..table.len()).filter(|&i| i != table.empty_index()).collect();
    let mut unit = vec![0u128; table.len()];
    unit[table.empty_index()] = 1;
    let mut walker = Walker { table, filter, nonzero: &nonzero, visit, stack: Vec::new() };
    walker.walk(0, table.spec.dim() as u32, Prefix::Small(unit));
}

enum Prefix {
    Small(Vec<u128>),
    Big(Vec<BigUint>),
}

struct Walker<'a> {
    table: &'a LrTable,
    filter: &'a ProblemFilter,
    nonzero: &'a [usize],
    visit: &'a mut dyn FnMut(ProblemRecord),
    stack: Vec<usize>,
}

impl Walker<'_> {
    fn walk(&mut self, from: usize, remaining: u32, prefix: Prefix) {
        for pos in from..self.nonzero.len() {
            let c = self.nonzero[pos];
            let w = self.table.partition(c).weight();
            if w > remaining {
                continue;
            }
            if w == remaining {
                let comp = self.table.complement_index(c);
                let d = match &prefix {
                    Prefix::Small(v) => BigUint::from(v[comp]),
                    Prefix::Big(v) => v[comp].clone(),
                };
                self.stack.push(c);
                self.emit(d);
                self.stack.pop();
                continue;
            }
            let next = match &prefix {
                Prefix::Small(v) => {
                    let mut out = vec![0u128; v.len()];
                    match self.table.multiply_dense(v, c, &mut out) {
                        Some(()) => Prefix::Small(out),
                        None => {
                            let big: Vec<BigUint> = v.iter().map(|&x| BigUint::from(x)).collect();
                            Prefix::Big(self.table.multiply_dense_big(&big, c))
                        }
                    }
                }
                Prefix::Big(v) => Prefix::Big(self.table.multiply_dense_big(v, c)),
            };
            let zero = match &next {
                Prefix::Small(v) => v.iter().all(|&x| x == 0),
                Prefix::Big(v) => v.iter().all(Zero::is_zero),
            };
            if zero {
                continue;
            }
            self.stack.push(c);
            self.walk(pos, remaining - w, next);
            self.stack.pop();
        }
    }

    fn emit(&mut self, d: BigUint) {
        let f = self.filter;
        if f.nontrivial && d <= BigUint::one() {
            return;
        }
        if let Some(cap) = f.max_degree {
            if d.to_u64().map_or(true, |x| x > cap) {
                return;
            }
        }
        let conds: Vec<Partition> = self.stack.iter().map(|&i| self.table.partition(i).clone()).collect();
        let problem = SchubertProblem { spec: self.table.spec, conditions: conds };
        if f.simple && !problem.is_simple() {
            return;
        }
        let essential = is_essential(&problem).is_essential();
        if f.essential && !essential {
            return;
        }
        (self.visit)(ProblemRecord { problem, degree: d, essential });
    }
}

pub fn enumerate_problems(spec: GrassmannianSpec, filter: &ProblemFilter) -> Vec<ProblemRecord> {
    let mut out = Vec::new();
    for_each_problem(spec, filter, |r| out.push(r));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn g(k: usize, n: usize) -> GrassmannianSpec {
        GrassmannianSpec::new(k, n).unwrap()
    }

    fn prob(k: usize, n: usize, s: &str) -> SchubertProblem {
        SchubertProblem::parse(g(k, n), s).unwrap()
    }

    #[test]
    fn parses_grammar() {
        let p = prob(2, 5, "(2,1) * (1)^3");
        assert_eq!(p.id(), "(2,1)*(1)^3");
        assert_eq!(prob(2, 5, "(1)^3 (2,1)"), p);
        assert_eq!(prob(2, 4, "1^4").id(), "(1)^4");
        assert_eq!(prob(2, 4, "(1)^4*()").id(), "(1)^4");
        assert!(SchubertProblem::parse(g(2, 4), "(1)^3").is_err());
        assert!(SchubertProblem::parse(g(2, 4), "(3)*(1)").is_err());
        assert!(parse_terms("(1,2)").is_err());
        assert!(parse_terms("(1)x").is_err());
    }

    #[test]
    fn small_degrees() {
        let cases = [
            (2, 4, "(1)^4", 2u32),
            (2, 5, "(2,1)*(1)^3", 2),
            (2, 5, "(1,1)*(1)^4", 2),
            (2, 5, "(2)^2*(1)^2", 2),
            (2, 5, "(2)*(1)^4", 3),
            (2, 5, "(1)^6", 5),
            (4, 9, "(3)*(2,1,1)^3*(4,1)", 6),
            (4, 9, "(1)*(2,1,1)*(2,2)*(4,1)*(3,3)", 6),
        ];
        for (k, n, s, d) in cases {
            assert_eq!(prob(k, n, s).degree(), BigUint::from(d), "{s}");
        }
    }

    #[test]
    fn duals() {
        let p = prob(2, 5, "(2)*(1)^4");
        let d = dual_problem(&p);
        assert_eq!(d.spec, g(3, 5));
        assert_eq!(d.id(), "(1,1)*(1)^4");
        assert_eq!(dual_problem(&prob(2, 4, "(1)^4")), prob(2, 4, "(1)^4"));
    }

    #[test]
    fn essentiality_witness() {
        let p = prob(2, 5, "(2)^2*(1)^2");
        match is_essential(&p) {
            Essentiality::Reducible { mu, nu, clause } => {
                assert_eq!(mu, Partition::row(2));
                assert_eq!(nu, Partition::row(2));
                assert_eq!(clause, Clause::D { i: 1 });
            }
            e => panic!("expected reducible, got {e:?}"),
        }
        assert!(is_essential(&prob(2, 5, "(1)^6")).is_essential());
        assert!(is_essential(&prob(2, 4, "(1)^4")).is_essential());
    }

    /// Oracle: every multiset of nonzero box partitions with the right
    /// weight, built by brute force over sorted index tuples.
    fn brute_multisets(spec: GrassmannianSpec) -> Vec<Vec<Partition>> {
        let parts: Vec<Partition> = spec.box_partitions().into_iter().filter(|p| !p.is_empty()).collect();
        let mut out = Vec::new();
        fn go(i: usize, rem: i64, parts: &[Partition], cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            if rem < 0 || i == parts.len() {
                return;
            }
            cur.push(parts[i].clone());
            go(i, rem - parts[i].weight() as i64, parts, cur, out);
            cur.pop();
            go(i + 1, rem, parts, cur, out);
        }
        go(0, spec.dim() as i64, &parts, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        for n in 4..=6 {
            let spec = g(2, n);
            let mut expected: BTreeSet<String> = BTreeSet::new();
            for conds in brute_multisets(spec) {
                let p = SchubertProblem::new(spec, conds).unwrap();
                if p.degree() > BigUint::one() {
                    expected.insert(p.id());
                }
            }
            let got: Vec<String> =
                enumerate_problems(spec, &ProblemFilter::nontrivial()).into_iter().map(|r| r.problem.id()).collect();
            let set: BTreeSet<String> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len(), "duplicates in Gr(2,{n})");
            assert_eq!(set, expected, "Gr(2,{n})");
        }
    }

    #[test]
    fn small_enumerations() {
        let ids: Vec<String> =
            enumerate_problems(g(2, 4), &ProblemFilter::nontrivial()).into_iter().map(|r| r.problem.id()).collect();
        assert_eq!(ids, vec!["(1)^4"]);
        let mut ids: Vec<String> =
            enumerate_problems(g(2, 5), &ProblemFilter::nontrivial()).into_iter().map(|r| r.problem.id()).collect();
        ids.sort();
        assert_eq!(ids, vec!["(1)^6", "(1,1)*(1)^4", "(2)*(1)^4", "(2)^2*(1)^2", "(2,1)*(1)^3"]);
    }

    #[test]
    fn enumeration_degrees_match_direct_engine() {
        for r in enumerate_problems(g(3, 6), &ProblemFilter::default()) {
            assert_eq!(r.degree, degree(&r.problem), "{}", r.problem);
        }
    }

    fn hook_length_count(k: usize, m: usize) -> BigUint {
        let mut num = BigUint::one();
        for i in 1..=(k * m) {
            num *= i;
        }
        let mut den = BigUint::one();
        for r in 0..k {
            for c in 0..m {
                den *= (k - r - 1) + (m - c - 1) + 1;
            }
        }
        num / den
    }

    #[test]
    fn hypersurface_problems_count_rectangular_tableaux() {
        for (k, n) in [(2, 4), (2, 7), (3, 6), (3, 7), (4, 8)] {
            let spec = g(k, n);
            let p = SchubertProblem::new(spec, vec![Partition::row(1); spec.dim()]).unwrap();
            assert_eq!(p.degree(), hook_length_count(k, n - k), "{spec}");
        }
    }

    fn arb_problem() -> impl Strategy<Value = (SchubertProblem, Vec<usize>)> {
        (2usize..5, 1usize..4, any::<u64>()).prop_map(|(k, extra, seed)| {
            use rand::{Rng, SeedableRng};
            let spec = g(k, k + extra + 1);
            let parts: Vec<Partition> = spec.box_partitions().into_iter().filter(|p| !p.is_empty()).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut conds = Vec::new();
            let mut rem = spec.dim() as u32;
            while rem > 0 {
                let cands: Vec<&Partition> = parts.iter().filter(|p| p.weight() <= rem).collect();
                let c = cands[rng.gen_range(0..cands.len())].clone();
                rem -= c.weight();
                conds.push(c);
            }
            let mut order: Vec<usize> = (0..conds.len()).collect();
            for i in (1..order.len()).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            (SchubertProblem::new(spec, conds).unwrap(), order)
        })
    }

    /// Degree by multiplying in an arbitrary order and reading the full box.
    fn degree_in_order(p: &SchubertProblem, order: &[usize]) -> BigUint {
        let mut class = CohomologyClass::unit(p.spec);
        for &i in order {
            class = lr_multiply(&class, &p.conditions()[i]).unwrap();
        }
        class.coefficient(&p.spec.full())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn degree_is_order_and_duality_invariant((p, order) in arb_problem()) {
            let d = p.degree();
            prop_assert_eq!(&degree_in_order(&p, &order), &d);
            prop_assert_eq!(&dual_problem(&p).degree(), &d);
            let table = LrTable::new(p.spec);
            let idx: Vec<usize> = p.conditions().iter().map(|c| table.index_of(c).unwrap()).collect();
            prop_assert_eq!(&table.degree_of_indices(&idx), &d);
        }

        #[test]
        fn zero_conditions_change_nothing((p, _o) in arb_problem()) {
            let mut conds = p.conditions().to_vec();
            conds.push(Partition::empty());
            let q = SchubertProblem::new(p.spec, conds).unwrap();
            prop_assert_eq!(q.degree(), p.degree());
            prop_assert_eq!(is_essential(&q), is_essential(&p));
        }
    }
}
