//! Checkerboard degenerations and the at-least-alternating test.
//!
//! A game merges two Schubert classes: white checkers record the moving
//! subspace, black checkers the specializing flag. Each black move leaves
//! every white configuration with one or two successors. Chaining games
//! (the accumulated class against the next condition) gives a tournament
//! whose leaves are the solutions of the problem.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::lr::LrTable;
use crate::partition::{GrassmannianSpec, Partition};
use crate::problem::SchubertProblem;

/// Largest ambient dimension the packed board encoding supports.
pub const MAX_N: usize = 16;
/// Largest number of white checkers.
pub const MAX_K: usize = 8;

/// A black move: the checkers in rows `row` and `row + 1` (columns `col`
/// and `col2`, `col < col2`) swap rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub row: u8,
    pub col: u8,
    pub col2: u8,
}

/// The fixed specialization order of the black checkers.
#[derive(Clone, Debug)]
pub struct MoveTable {
    pub n: usize,
    moves: Vec<Move>,
    /// `blacks[i][c]` is the row of the black checker in column `c` before move `i`.
    blacks: Vec<Vec<u8>>,
}

impl MoveTable {
    /// Moves run from the identity arrangement to the antidiagonal; column
    /// `p` is brought in at step `p`, bubbling each lower row up by one.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_N, "board too large");
        let mut pi: Vec<u8> = (0..n as u8).collect();
        let mut moves = Vec::new();
        let mut blacks = vec![pi.clone()];
        for p in 1..n {
            for r in (0..p).rev() {
                let c = pi.iter().position(|&x| x as usize == r).unwrap();
                let c2 = pi.iter().position(|&x| x as usize == r + 1).unwrap();
                debug_assert!(c < c2);
                moves.push(Move { row: r as u8, col: c as u8, col2: c2 as u8 });
                pi[c] = r as u8 + 1;
                pi[c2] = r as u8;
                blacks.push(pi.clone());
            }
        }
        debug_assert!((0..n).all(|c| pi[c] as usize == n - 1 - c));
        MoveTable { n, moves, blacks }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn get(&self, i: usize) -> Move {
        self.moves[i]
    }

    pub fn black(&self, stage: usize) -> &[u8] {
        &self.blacks[stage]
    }
}

/// Sorted white checkers packed one byte each as `row << 4 | col`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Whites(u64);

type Cells = [(u8, u8); MAX_K];

impl Whites {
    fn pack(cells: &mut [(u8, u8)]) -> Self {
        cells.sort_unstable();
        let mut v = 0u64;
        for (j, &(r, c)) in cells.iter().enumerate() {
            v |= ((r << 4 | c) as u64) << (8 * j);
        }
        Whites(v)
    }

    fn unpack(self, k: usize) -> Cells {
        let mut out = [(0u8, 0u8); MAX_K];
        for (j, slot) in out.iter_mut().enumerate().take(k) {
            let b = (self.0 >> (8 * j)) as u8;
            *slot = (b >> 4, b & 15);
        }
        out
    }

    pub fn cells(self, k: usize) -> Vec<(u8, u8)> {
        self.unpack(k)[..k].to_vec()
    }
}

/// The local move rule. Returns the successors of `w` under move `mv`;
/// when there are two, the first is the one where the whites stay put.
fn rule(k: usize, w: Whites, mv: Move) -> (Whites, Option<Whites>) {
    let Move { row: r, col: c, col2: cp } = mv;
    let mut cells = w.unpack(k);
    let cells = &mut cells[..k];
    let sw = cells.iter().position(|&(rr, cc)| rr == r + 1 && cc >= cp);
    let rc = cells.iter().position(|&x| x == (r, c));
    let am = cells
        .iter()
        .enumerate()
        .filter(|(_, &(rr, cc))| rr < r && c < cc && cc < cp)
        .max_by_key(|(_, &x)| x)
        .map(|(j, _)| j);

    if let Some(j) = rc {
        cells[j] = (r + 1, c);
        if let Some(s) = sw {
            cells[s] = (r, cells[s].1);
        }
        return (Whites::pack(cells), None);
    }
    let Some(s) = sw else {
        return (w, None);
    };
    let scol = cells[s].1;
    if scol == cp {
        cells[s] = (r + 1, c);
        if let Some(a) = am {
            cells[a].1 = cp;
        }
        return (Whites::pack(cells), None);
    }
    let Some(a) = am else {
        return (w, None);
    };
    let arow = cells[a].0;
    let blocked = cells.iter().any(|&(rr, cc)| arow < rr && rr <= r && cp <= cc && cc < scol);
    if blocked {
        return (w, None);
    }
    cells[a].1 = scol;
    cells[s] = (r + 1, c);
    (w, Some(Whites::pack(cells)))
}

/// Initial whites for the product `σ_alpha · σ_beta`, with `alpha` on the
/// fixed flag and `beta` on the moving one. `None` when the product vanishes.
pub fn start_board(alpha: &Partition, beta: &Partition, spec: GrassmannianSpec) -> Option<Whites> {
    let (k, n, m) = (spec.k, spec.n, spec.m());
    let mut cells = [(0u8, 0u8); MAX_K];
    for j in 0..k {
        let a = m + j + 1 - alpha.part(j) as usize;
        let b = m + (k - 1 - j) + 1 - beta.part(k - 1 - j) as usize;
        let (row, col) = (n - a, b - 1);
        if row > col {
            return None;
        }
        cells[j] = (row as u8, col as u8);
    }
    Some(Whites::pack(&mut cells[..k]))
}

/// The class read off a finished game.
pub fn final_class(w: Whites, spec: GrassmannianSpec) -> Partition {
    let (k, n, m) = (spec.k, spec.n, spec.m());
    let cells = w.unpack(k);
    let mut a: Vec<usize> = cells[..k].iter().map(|&(r, _)| n - r as usize).collect();
    a.sort_unstable();
    let parts: Vec<u32> = (0..k).map(|j| (m + j + 1 - a[j]) as u32).collect();
    Partition::new(parts).expect("finished boards give partitions")
}

fn check_spec(spec: GrassmannianSpec) {
    assert!(spec.n <= MAX_N && spec.k <= MAX_K, "{spec} exceeds the board encoding");
}

/// Plays one game to completion and returns its outcomes with multiplicity;
/// this is the Littlewood–Richardson expansion of the product.
pub fn play_game(alpha: &Partition, beta: &Partition, spec: GrassmannianSpec) -> BTreeMap<Partition, u64> {
    check_spec(spec);
    let table = MoveTable::new(spec.n);
    let mut out = BTreeMap::new();
    let Some(st) = start_board(alpha, beta, spec) else {
        return out;
    };
    let mut level: HashMap<Whites, u64> = HashMap::from([(st, 1)]);
    for i in 0..table.len() {
        let mut next = HashMap::new();
        for (w, mult) in level {
            let (a, b) = rule(spec.k, w, table.get(i));
            *next.entry(a).or_insert(0) += mult;
            if let Some(b) = b {
                *next.entry(b).or_insert(0) += mult;
            }
        }
        level = next;
    }
    for (w, mult) in level {
        *out.entry(final_class(w, spec)).or_insert(0) += mult;
    }
    out
}

/// A board in a tournament: which game, how far along, and both colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkerboard {
    /// Index of the condition being merged in (games start at 1).
    pub game: usize,
    pub stage: usize,
    /// `(row, col)` of each black checker.
    pub black: Vec<(u8, u8)>,
    pub white: Vec<(u8, u8)>,
    pub pending: Vec<Partition>,
}

pub type NodeId = usize;

#[derive(Clone, Debug)]
pub struct TournamentNode {
    game: usize,
    stage: usize,
    whites: Whites,
    pub children: Vec<NodeId>,
    pub delta: BigUint,
}

/// A tournament stored as a DAG; equal boards within one tournament share a node.
#[derive(Clone, Debug)]
pub struct Tournament {
    pub spec: GrassmannianSpec,
    pub ordering: Vec<Partition>,
    moves: MoveTable,
    nodes: Vec<TournamentNode>,
    root: Option<NodeId>,
}

impl Tournament {
    pub fn root(&self) -> Option<NodeId> {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &TournamentNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[TournamentNode] {
        &self.nodes
    }

    /// δ of the root, zero when the problem has no solutions.
    pub fn root_delta(&self) -> BigUint {
        self.root.map_or_else(BigUint::zero, |r| self.nodes[r].delta.clone())
    }

    pub fn board(&self, id: NodeId) -> Checkerboard {
        let nd = &self.nodes[id];
        let black = self.moves.black(nd.stage).iter().enumerate().map(|(c, &r)| (r, c as u8)).collect();
        Checkerboard {
            game: nd.game,
            stage: nd.stage,
            black,
            white: nd.whites.cells(self.spec.k),
            pending: self.ordering[(nd.game + 1).min(self.ordering.len())..].to_vec(),
        }
    }

    /// First two-child node (in construction order) with equal δ above 1.
    pub fn violation(&self) -> Option<Witness> {
        self.nodes.iter().enumerate().find_map(|(id, nd)| {
            let [a, b] = nd.children[..] else { return None };
            let (da, db) = (&self.nodes[a].delta, &self.nodes[b].delta);
            (da == db && *da > BigUint::one()).then(|| Witness {
                board: self.board(id),
                deltas: (da.clone(), db.clone()),
                ordering: self.ordering.clone(),
            })
        })
    }
}

/// Node with two children of equal δ > 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub board: Checkerboard,
    pub deltas: (BigUint, BigUint),
    pub ordering: Vec<Partition>,
}

/// Builds the tournament that merges `ordering[0]` with `ordering[1]`, then
/// each outcome with `ordering[2]`, and so on. Dead branches are dropped.
pub fn build_tournament(p: &SchubertProblem, ordering: &[Partition]) -> Tournament {
    let spec = p.spec;
    check_spec(spec);
    let mut sorted = ordering.to_vec();
    sorted.sort();
    assert_eq!(sorted, p.conditions(), "ordering must permute the conditions");
    let mut b = Builder {
        spec,
        full: spec.full(),
        conds: ordering,
        moves: MoveTable::new(spec.n),
        nodes: Vec::new(),
        memo: HashMap::new(),
    };
    let root = match ordering {
        [] => None,
        [only] => (*only == b.full).then(|| b.push(0, 0, Whites(0), Vec::new(), BigUint::one())),
        [a, c, ..] => start_board(a, c, spec).and_then(|st| b.visit(1, 0, st)),
    };
    Tournament { spec, ordering: ordering.to_vec(), moves: b.moves, nodes: b.nodes, root }
}

struct Builder<'a> {
    spec: GrassmannianSpec,
    full: Partition,
    conds: &'a [Partition],
    moves: MoveTable,
    nodes: Vec<TournamentNode>,
    memo: HashMap<(u16, u16, Whites), Option<NodeId>>,
}

impl Builder<'_> {
    fn push(&mut self, game: usize, stage: usize, whites: Whites, children: Vec<NodeId>, delta: BigUint) -> NodeId {
        self.nodes.push(TournamentNode { game, stage, whites, children, delta });
        self.nodes.len() - 1
    }

    fn visit(&mut self, g: usize, i: usize, w: Whites) -> Option<NodeId> {
        let key = (g as u16, i as u16, w);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let r = if i == self.moves.len() {
            let gamma = final_class(w, self.spec);
            if g + 1 == self.conds.len() {
                (gamma == self.full).then(|| self.push(g, i, w, Vec::new(), BigUint::one()))
            } else {
                start_board(&gamma, &self.conds[g + 1], self.spec).and_then(|st| self.visit(g + 1, 0, st))
            }
        } else {
            let (a, b) = rule(self.spec.k, w, self.moves.get(i));
            let mut children = Vec::with_capacity(2);
            children.extend(self.visit(g, i + 1, a));
            if let Some(b) = b {
                children.extend(self.visit(g, i + 1, b));
            }
            match children.len() {
                0 => None,
                // a single branch shares its child's node
                1 => Some(children[0]),
                _ => {
                    let delta = children.iter().map(|&c| &self.nodes[c].delta).sum();
                    Some(self.push(g, i, w, children, delta))
                }
            }
        };
        self.memo.insert(key, r);
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VakilOutcome {
    AtLeastAlternating,
    Inconclusive,
}

impl fmt::Display for VakilOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VakilOutcome::AtLeastAlternating => "at-least-alternating",
            VakilOutcome::Inconclusive => "inconclusive",
        })
    }
}

/// What certified an at-least-alternating verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// Index into `orderings_tried`.
    Ordering(usize),
    /// A tree that picks the next pair to merge separately on each branch.
    BranchwiseSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VakilVerdict {
    pub outcome: VakilOutcome,
    pub degree: BigUint,
    pub certificate: Option<Certificate>,
    /// From the last ordering tried, when inconclusive.
    pub witness: Option<Witness>,
    pub orderings_tried: Vec<Vec<Partition>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanOptions {
    pub max_orderings: usize,
    /// Fall back to the branchwise search when no fixed ordering certifies.
    pub branchwise: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { max_orderings: 4, branchwise: true }
    }
}

/// Candidate orderings: canonical, reversed, then each distinct condition
/// pulled to the front. Duplicates are skipped.
pub fn orderings(p: &SchubertProblem, max: usize) -> Vec<Vec<Partition>> {
    let base = p.conditions().to_vec();
    let mut cands = vec![base.clone(), base.iter().rev().cloned().collect()];
    for (i, c) in base.iter().enumerate() {
        if i > 0 && base[i - 1] == *c {
            continue;
        }
        let mut o = vec![c.clone()];
        o.extend(base.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()));
        cands.push(o);
    }
    let mut out: Vec<Vec<Partition>> = Vec::new();
    for o in cands {
        if out.len() == max {
            break;
        }
        if !out.contains(&o) {
            out.push(o);
        }
    }
    out
}

/// Runs the test on one problem with a throwaway scanner.
pub fn vakil_scan(p: &SchubertProblem, max_orderings: usize) -> VakilVerdict {
    VakilScanner::new(p.spec).scan(p, &ScanOptions { max_orderings, ..Default::default() })
}

/// Holds state reused across problems of one Grassmannian. Not shared
/// between threads; give each worker its own.
pub struct VakilScanner {
    spec: GrassmannianSpec,
    branchwise: BranchwiseSearch,
}

impl VakilScanner {
    pub fn new(spec: GrassmannianSpec) -> Self {
        check_spec(spec);
        VakilScanner { spec, branchwise: BranchwiseSearch::new(spec) }
    }

    pub fn scan(&mut self, p: &SchubertProblem, opts: &ScanOptions) -> VakilVerdict {
        assert_eq!(p.spec, self.spec);
        let mut tried = Vec::new();
        let mut witness = None;
        let mut degree = BigUint::zero();
        for (idx, o) in orderings(p, opts.max_orderings.max(1)).into_iter().enumerate() {
            let t = build_tournament(p, &o);
            degree = t.root_delta();
            tried.push(o);
            match t.violation() {
                None => {
                    return VakilVerdict {
                        outcome: VakilOutcome::AtLeastAlternating,
                        degree,
                        certificate: Some(Certificate::Ordering(idx)),
                        witness: None,
                        orderings_tried: tried,
                    }
                }
                w => witness = w,
            }
        }
        if opts.branchwise && self.branchwise.certifies(p) {
            return VakilVerdict {
                outcome: VakilOutcome::AtLeastAlternating,
                degree,
                certificate: Some(Certificate::BranchwiseSearch),
                witness: None,
                orderings_tried: tried,
            };
        }
        VakilVerdict { outcome: VakilOutcome::Inconclusive, degree, certificate: None, witness, orderings_tried: tried }
    }
}

/// Searches over trees where, after each game, every branch picks its own
/// next pair of classes to merge. States are sorted multisets of class
/// indices into the LR table; results are memoized across problems.
struct BranchwiseSearch {
    spec: GrassmannianSpec,
    table: LrTable,
    moves: MoveTable,
    degrees: HashMap<Vec<u16>, BigUint>,
    good: HashMap<Vec<u16>, bool>,
    games: HashMap<(u16, u16, Vec<u16>), u32>,
    game_memo: HashMap<(u32, u16, Whites), (BigUint, bool)>,
}

impl BranchwiseSearch {
    fn new(spec: GrassmannianSpec) -> Self {
        BranchwiseSearch {
            spec,
            table: LrTable::new(spec),
            moves: MoveTable::new(spec.n),
            degrees: HashMap::new(),
            good: HashMap::new(),
            games: HashMap::new(),
            game_memo: HashMap::new(),
        }
    }

    fn certifies(&mut self, p: &SchubertProblem) -> bool {
        let mut state: Vec<u16> = p.conditions().iter().map(|c| self.table.index_of(c).unwrap() as u16).collect();
        state.sort_unstable();
        self.state_degree(&state) > BigUint::zero() && self.state_good(&state)
    }

    fn state_degree(&mut self, state: &[u16]) -> BigUint {
        if let Some(d) = self.degrees.get(state) {
            return d.clone();
        }
        let idx: Vec<usize> = state.iter().map(|&x| x as usize).collect();
        let d = self.table.degree_of_indices(&idx);
        self.degrees.insert(state.to_vec(), d.clone());
        d
    }

    fn state_good(&mut self, state: &[u16]) -> bool {
        if state.len() <= 1 {
            return true;
        }
        if let Some(&g) = self.good.get(state) {
            return g;
        }
        let mut pairs: Vec<(u16, u16, Vec<u16>)> = Vec::new();
        for i in 0..state.len() {
            for j in 0..state.len() {
                if i == j {
                    continue;
                }
                let rest: Vec<u16> =
                    state.iter().enumerate().filter(|&(x, _)| x != i && x != j).map(|(_, &v)| v).collect();
                pairs.push((state[i], state[j], rest));
            }
        }
        pairs.sort();
        pairs.dedup();
        let mut ok = false;
        for (a, b, rest) in pairs {
            let (pa, pb) = (self.table.partition(a as usize).clone(), self.table.partition(b as usize).clone());
            let Some(st) = start_board(&pa, &pb, self.spec) else { continue };
            let next = self.games.len() as u32;
            let gid = *self.games.entry((a, b, rest.clone())).or_insert(next);
            if self.game(gid, &rest, 0, st).1 {
                ok = true;
                break;
            }
        }
        self.good.insert(state.to_vec(), ok);
        ok
    }

    fn game(&mut self, gid: u32, rest: &[u16], i: usize, w: Whites) -> (BigUint, bool) {
        let key = (gid, i as u16, w);
        if let Some(r) = self.game_memo.get(&key) {
            return r.clone();
        }
        let r = if i == self.moves.len() {
            let gamma = self.table.index_of(&final_class(w, self.spec)).unwrap() as u16;
            let mut s = rest.to_vec();
            s.push(gamma);
            s.sort_unstable();
            let d = self.state_degree(&s);
            let ok = d.is_zero() || self.state_good(&s);
            (d, ok)
        } else {
            let (a, b) = rule(self.spec.k, w, self.moves.get(i));
            let mut res = vec![self.game(gid, rest, i + 1, a)];
            if let Some(b) = b {
                res.push(self.game(gid, rest, i + 1, b));
            }
            res.retain(|(d, _)| !d.is_zero());
            let mut ok = res.iter().all(|(_, o)| *o);
            if let [(d1, _), (d2, _)] = &res[..] {
                if d1 == d2 && *d1 > BigUint::one() {
                    ok = false;
                }
            }
            (res.iter().map(|(d, _)| d).sum(), ok)
        };
        self.game_memo.insert(key, r.clone());
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::lr_expand;
    use crate::problem::{enumerate_problems, ProblemFilter};

    fn g(k: usize, n: usize) -> GrassmannianSpec {
        GrassmannianSpec::new(k, n).unwrap()
    }

    fn prob(k: usize, n: usize, s: &str) -> SchubertProblem {
        SchubertProblem::parse(g(k, n), s).unwrap()
    }

    #[test]
    fn move_table_ends_antidiagonal() {
        for n in 2..=9 {
            let t = MoveTable::new(n);
            assert_eq!(t.len(), n * (n - 1) / 2);
            let last = t.black(t.len());
            assert!((0..n).all(|c| last[c] as usize == n - 1 - c));
        }
    }

    #[test]
    fn games_reproduce_lr_expansions() {
        for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6), (2, 7), (3, 7), (4, 8)] {
            let spec = g(k, n);
            let parts = spec.box_partitions();
            for a in &parts {
                for b in &parts {
                    let want: BTreeMap<Partition, u64> = lr_expand(a, b, spec).into_iter().collect();
                    assert_eq!(play_game(a, b, spec), want, "{a} x {b} in {spec}");
                }
            }
        }
    }

    #[test]
    fn small_tournaments() {
        let t = build_tournament(&prob(2, 4, "1^4"), prob(2, 4, "1^4").conditions());
        assert_eq!(t.root_delta(), BigUint::from(2u32));
        let p = prob(2, 5, "(2)*(1)^4");
        assert_eq!(build_tournament(&p, p.conditions()).root_delta(), BigUint::from(3u32));
        let p = prob(2, 4, "(2,2)");
        let t = build_tournament(&p, p.conditions());
        assert_eq!(t.root_delta(), BigUint::one());
        assert!(t.node(t.root().unwrap()).children.is_empty());
    }

    #[test]
    fn delta_recursion_holds_everywhere() {
        let p = prob(3, 6, "(2,1)*(1)^6");
        for o in orderings(&p, 4) {
            let t = build_tournament(&p, &o);
            for nd in t.nodes() {
                assert!(nd.delta >= BigUint::one());
                match nd.children.len() {
                    0 => assert_eq!(nd.delta, BigUint::one()),
                    n => {
                        assert_eq!(n, 2);
                        let s: BigUint = nd.children.iter().map(|&c| &t.node(c).delta).sum();
                        assert_eq!(s, nd.delta);
                    }
                }
            }
        }
    }

    #[test]
    fn root_delta_is_degree_on_small_sweeps() {
        for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
            for r in enumerate_problems(g(k, n), &ProblemFilter::default()) {
                for o in orderings(&r.problem, 3) {
                    assert_eq!(build_tournament(&r.problem, &o).root_delta(), r.degree, "{}", r.problem);
                }
            }
        }
    }

    #[test]
    fn four_lines_is_certified() {
        let v = vakil_scan(&prob(2, 4, "1^4"), 4);
        assert_eq!(v.outcome, VakilOutcome::AtLeastAlternating);
        assert_eq!(v.certificate, Some(Certificate::Ordering(0)));
    }

    #[test]
    fn imprimitive_problem_is_inconclusive() {
        let p = prob(4, 9, "(3)*(2,1,1)^3*(4,1)");
        let v = vakil_scan(&p, 4);
        assert_eq!(v.outcome, VakilOutcome::Inconclusive);
        assert_eq!(v.degree, BigUint::from(6u32));
        let w = v.witness.unwrap();
        assert_eq!(w.deltas.0, w.deltas.1);
        assert_eq!(&w.ordering, v.orderings_tried.last().unwrap());
    }

    #[test]
    fn orderings_are_distinct_permutations() {
        let p = prob(3, 6, "(2,1)*(2)*(1)^4");
        let os = orderings(&p, 10);
        assert_eq!(os.len(), 4);
        for o in &os {
            let mut s = o.clone();
            s.sort();
            assert_eq!(s, p.conditions());
        }
        assert_eq!(orderings(&p, 2).len(), 2);
    }
}
