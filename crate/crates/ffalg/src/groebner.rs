//! Buchberger's algorithm and zero-dimensional quotient utilities.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::poly::{axpy, axpy_shift, axpy_shift_into, MultiPoly, Term};
use crate::unipoly::UniPoly;
use crate::FfError;

/// Reduced Gröbner basis under grevlex, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    vars: Arc<Vec<String>>,
    polys: Vec<MultiPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

/// Limits for a single run; exceeding one aborts with [`FfError::BudgetExceeded`].
#[derive(Clone, Copy, Debug)]
pub struct GbLimits {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_pairs: usize::MAX, max_basis: usize::MAX }
    }
}

/// Fully reduces `terms` (ascending) modulo monic `basis` entries.
fn reduce_terms(field: &PrimeField, mut p: Vec<Term>, basis: &[&[Term]]) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut scratch: Vec<Term> = Vec::with_capacity(p.len());
    while let Some(&(lm, lc)) = p.last() {
        let reducer = basis.iter().find(|g| g.last().unwrap().0.divides(&lm));
        match reducer {
            Some(g) => {
                let glm = g.last().unwrap().0;
                let q = glm.quotient_of(&lm);
                p.pop();
                let tail = &g[..g.len() - 1];
                axpy_shift_into(field, &p, field.neg(lc), &q, tail, &mut scratch);
                std::mem::swap(&mut p, &mut scratch);
            }
            None => {
                rem.push((lm, lc));
                p.pop();
            }
        }
    }
    rem.reverse();
    rem
}

/// Row echelon form of the coefficient matrix, columns indexed by
/// monomials; the span is unchanged and leading monomials become distinct.
fn linear_echelon(field: &PrimeField, polys: Vec<Vec<Term>>) -> Vec<Vec<Term>> {
    let mut pivots: BTreeMap<Monomial, Vec<Term>> = BTreeMap::new();
    for mut p in polys {
        while let Some(&(lm, lc)) = p.last() {
            match pivots.get(&lm) {
                Some(row) => {
                    p.pop();
                    p = axpy(field, &p, field.neg(lc), &row[..row.len() - 1]);
                }
                None => break,
            }
        }
        if let Some(&(lm, lc)) = p.last() {
            let inv = field.inv(lc);
            for t in &mut p {
                t.1 = field.mul(t.1, inv);
            }
            pivots.insert(lm, p);
        }
    }
    // back substitution, smallest pivots first so each row used is final
    let keys: Vec<Monomial> = pivots.keys().copied().collect();
    for &key in &keys {
        let mut row = pivots.remove(&key).unwrap();
        let mut i = row.len() - 1;
        while i > 0 {
            i -= 1;
            let (m, c) = row[i];
            if let Some(other) = pivots.get(&m).filter(|o| o.last().unwrap().0 < key) {
                let mut rest = row.split_off(i);
                rest.remove(0);
                let tail = &other[..other.len() - 1];
                let low = axpy(field, &row, field.neg(c), tail);
                row = low;
                i = row.len();
                row.extend(rest);
            }
        }
        pivots.insert(key, row);
    }
    pivots.into_values().collect()
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder {
    field: PrimeField,
    polys: Vec<Vec<Term>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    limits: GbLimits,
    processed: usize,
}

impl Builder {
    fn lm(&self, i: usize) -> Monomial {
        self.polys[i].last().unwrap().0
    }

    fn reduce(&self, p: Vec<Term>) -> Vec<Term> {
        let basis: Vec<&[Term]> = (0..self.polys.len())
            .filter(|&i| self.active[i])
            .map(|i| self.polys[i].as_slice())
            .collect();
        reduce_terms(&self.field, p, &basis)
    }

    fn make_monic(&self, mut p: Vec<Term>) -> Vec<Term> {
        let lc = p.last().unwrap().1;
        if lc != 1 {
            let inv = self.field.inv(lc);
            for t in &mut p {
                t.1 = self.field.mul(t.1, inv);
            }
        }
        p
    }

    /// Gebauer–Möller update with a new basis element `h`.
    fn insert(&mut self, h: Vec<Term>) -> Result<(), FfError> {
        let hidx = self.polys.len();
        let hlm = h.last().unwrap().0;
        self.polys.push(h);
        self.active.push(true);
        if self.polys.len() > self.limits.max_basis {
            return Err(FfError::BudgetExceeded);
        }

        let mut fresh: Vec<(usize, Monomial, bool)> = (0..hidx)
            .filter(|&g| self.active[g])
            .map(|g| {
                let glm = self.lm(g);
                (g, hlm.lcm(&glm), hlm.coprime(&glm))
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..fresh.len() {
            let (g, l, cop) = fresh[k];
            let dominated = fresh[k + 1..].iter().any(|p| p.1.divides(&l))
                || kept.iter().any(|p| p.1.divides(&l));
            if cop || !dominated {
                kept.push((g, l, cop));
            }
        }
        fresh.clear();
        // product criterion
        kept.retain(|p| !p.2);

        // chain criterion for old pairs through h
        let lms: Vec<Monomial> = (0..self.polys.len()).map(|i| self.lm(i)).collect();
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm) && hlm.lcm(&lms[p.i]) != p.lcm && hlm.lcm(&lms[p.j]) != p.lcm)
        });
        self.pairs.extend(kept.into_iter().map(|(g, l, _)| Pair { i: g, j: hidx, lcm: l }));

        for g in 0..hidx {
            if self.active[g] && hlm.divides(&lms[g]) {
                self.active[g] = false;
            }
        }
        Ok(())
    }

    fn spoly(&self, pair: &Pair) -> Vec<Term> {
        let f = &self.polys[pair.i];
        let g = &self.polys[pair.j];
        let qf = f.last().unwrap().0.quotient_of(&pair.lcm);
        let qg = g.last().unwrap().0.quotient_of(&pair.lcm);
        let a: Vec<Term> = f[..f.len() - 1].iter().map(|&(m, c)| (m.mul(&qf), c)).collect();
        axpy_shift(&self.field, &a, self.field.neg(1), &qg, &g[..g.len() - 1])
    }

    /// Returns true once the unit ideal is detected.
    fn add_generator(&mut self, p: Vec<Term>) -> Result<bool, FfError> {
        let r = self.reduce(p);
        if r.is_empty() {
            return Ok(false);
        }
        let r = self.make_monic(r);
        let unit = r.last().unwrap().0.is_one();
        self.insert(r)?;
        Ok(unit)
    }

    fn run(&mut self) -> Result<bool, FfError> {
        while !self.pairs.is_empty() {
            let best = (0..self.pairs.len()).min_by_key(|&k| self.pairs[k].lcm).unwrap();
            let pair = self.pairs.swap_remove(best);
            self.processed += 1;
            if self.processed > self.limits.max_pairs {
                return Err(FfError::BudgetExceeded);
            }
            let s = self.spoly(&pair);
            if self.add_generator(s)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MultiPoly]) -> Result<GroebnerBasis, FfError> {
    buchberger_with_limits(gens, GbLimits::default())
}

pub fn buchberger_with_limits(gens: &[MultiPoly], limits: GbLimits) -> Result<GroebnerBasis, FfError> {
    let first = gens.first().ok_or(FfError::EmptyInput)?;
    if gens.iter().any(|g| !g.same_ring(first)) {
        return Err(FfError::RingMismatch);
    }
    let field = first.field();
    let vars = first.vars().clone();
    let mut b = Builder { field, polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), limits, processed: 0 };

    // smallest leading monomials first keeps the early reductions cheap
    let inputs = linear_echelon(&field, gens.iter().map(|g| g.terms().to_vec()).collect());
    let mut unit = false;
    for g in inputs {
        if b.add_generator(g)? {
            unit = true;
            break;
        }
    }
    if !unit {
        unit = b.run()?;
    }
    if unit {
        let one = MultiPoly::constant(field, vars.clone(), 1);
        return Ok(GroebnerBasis { field, vars, polys: vec![one] });
    }

    let mut keep: Vec<Vec<Term>> = (0..b.polys.len())
        .filter(|&i| b.active[i])
        .map(|i| std::mem::take(&mut b.polys[i]))
        .collect();
    keep.sort_by_key(|p| p.last().unwrap().0);
    // tail reduction; leading monomials are already minimal
    for k in 0..keep.len() {
        let lt = *keep[k].last().unwrap();
        let tail = keep[k][..keep[k].len() - 1].to_vec();
        let others: Vec<&[Term]> = keep.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.as_slice()).collect();
        let mut reduced = reduce_terms(&field, tail, &others);
        reduced.push(lt);
        keep[k] = reduced;
    }
    let polys = keep.into_iter().map(|t| MultiPoly::from_sorted(field, vars.clone(), t)).collect();
    Ok(GroebnerBasis { field, vars, polys })
}

impl GroebnerBasis {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial()).collect()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        assert!(f.field() == self.field && f.vars() == &self.vars, "polynomial from a different ring");
        let basis: Vec<&[Term]> = self.polys.iter().map(|p| p.terms()).collect();
        let r = reduce_terms(&self.field, f.terms().to_vec(), &basis);
        MultiPoly::from_sorted(self.field, self.vars.clone(), r)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (a, b) = (&self.polys[i], &self.polys[j]);
                let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
                let l = la.lcm(&lb);
                let s = &a.mul_term(&la.quotient_of(&l), 1) - &b.mul_term(&lb.quotient_of(&l), 1);
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Standard monomials in ascending order, or `None` when infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let lms = self.leading_monomials();
        let n = self.vars.len();
        if lms.iter().any(|m| m.is_one()) {
            return Some(Vec::new());
        }
        let mut bounded = vec![false; n];
        for m in &lms {
            if let Some(v) = m.pure_power_of() {
                bounded[v] = true;
            }
        }
        if bounded.iter().any(|b| !b) {
            return None;
        }
        // extend only by variables at or after the last one used; every
        // standard monomial is reached exactly once since they form an order ideal
        let mut out = vec![Monomial::ONE];
        let mut k = 0;
        while k < out.len() {
            let m = out[k];
            let start = m.last_var().unwrap_or(0);
            for v in start..n {
                let next = m.mul(&Monomial::var(v));
                if !lms.iter().any(|l| l.divides(&next)) {
                    out.push(next);
                }
            }
            k += 1;
        }
        out.sort();
        Some(out)
    }

    pub fn quotient_dimension(&self) -> QuotientDim {
        match self.standard_monomials() {
            Some(s) => QuotientDim::Finite(s.len()),
            None => QuotientDim::Infinite,
        }
    }

    /// Column `b` holds the normal form of `f * b` in standard-monomial coordinates.
    pub fn multiplication_matrix(&self, f: &MultiPoly) -> Result<(Vec<Monomial>, Vec<Vec<u32>>), FfError> {
        let basis = self.standard_monomials().ok_or(FfError::PositiveDimensional)?;
        let index = |m: &Monomial| basis.binary_search(m).expect("normal form left the standard monomials");
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            let nf = self.normal_form(&f.mul_term(b, 1));
            let mut col = vec![0u32; basis.len()];
            for (m, c) in nf.terms() {
                col[index(m)] = *c;
            }
            cols.push(col);
        }
        Ok((basis, cols))
    }

    /// Monic generator of the ideal intersected with `F_p[v]`.
    pub fn eliminant(&self, v: usize) -> Result<UniPoly, FfError> {
        assert!(v < self.vars.len(), "variable index out of range");
        self.eliminant_of(&MultiPoly::var(self.field, self.vars.clone(), v))
    }

    /// Minimal polynomial of multiplication by `f`, found from the Krylov
    /// sequence of the class of 1.
    pub fn eliminant_of(&self, f: &MultiPoly) -> Result<UniPoly, FfError> {
        let (basis, cols) = self.multiplication_matrix(f)?;
        let fld = self.field;
        let d = basis.len();
        if d == 0 {
            return Ok(UniPoly::one(fld));
        }
        // pivot rows: (vector, pivot column, combination of Krylov vectors)
        let mut rows: Vec<(Vec<u32>, usize, Vec<u32>)> = Vec::new();
        let mut w = vec![0u32; d];
        w[0] = 1; // ONE is the smallest monomial
        for j in 0..=d {
            let mut r = w.clone();
            let mut comb = vec![0u32; j + 1];
            comb[j] = 1;
            for (row, piv, rc) in &rows {
                let c = r[*piv];
                if c == 0 {
                    continue;
                }
                let nc = fld.neg(c);
                for (x, y) in r.iter_mut().zip(row) {
                    *x = fld.mul_add(nc, *y, *x);
                }
                for (x, y) in comb.iter_mut().zip(rc) {
                    *x = fld.mul_add(nc, *y, *x);
                }
            }
            match r.iter().position(|&x| x != 0) {
                None => return Ok(UniPoly::new(fld, comb)),
                Some(piv) => {
                    let inv = fld.inv(r[piv]);
                    r.iter_mut().for_each(|x| *x = fld.mul(*x, inv));
                    comb.iter_mut().for_each(|x| *x = fld.mul(*x, inv));
                    rows.push((r, piv, comb));
                }
            }
            let mut next = vec![0u32; d];
            for (b, &wb) in w.iter().enumerate() {
                if wb == 0 {
                    continue;
                }
                for (x, y) in next.iter_mut().zip(&cols[b]) {
                    *x = fld.mul_add(wb, *y, *x);
                }
            }
            w = next;
        }
        unreachable!("Krylov sequence longer than the quotient dimension")
    }

    /// Plain-text listing, one generator per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {} generators over {} in {}", self.polys.len(), self.field, self.vars.join(","));
        for p in &self.polys {
            let _ = writeln!(s, "{p}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring_vars;

    fn polys(p: u64, vars: &[&str], src: &[&str]) -> Vec<MultiPoly> {
        let f = PrimeField::new(p).unwrap();
        let v = ring_vars(vars).unwrap();
        src.iter().map(|s| MultiPoly::parse(f, v.clone(), s).unwrap()).collect()
    }

    #[test]
    fn already_a_basis() {
        let g = polys(101, &["x", "y"], &["x - 1", "y - 2"]);
        let gb = buchberger(&g).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(g.iter().all(|p| gb.polys().contains(p)));
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(1));
    }

    #[test]
    fn divisibility_collapses() {
        let g = polys(101, &["x", "y"], &["x^2", "x^3"]);
        let gb = buchberger(&g).unwrap();
        assert_eq!(gb.polys(), &g[..1]);
        assert_eq!(gb.quotient_dimension(), QuotientDim::Infinite);
        assert!(matches!(gb.eliminant(0), Err(FfError::PositiveDimensional)));
    }

    #[test]
    fn circle_and_line() {
        let g = polys(101, &["x", "y"], &["x^2 + y^2 - 1", "x - y"]);
        let gb = buchberger(&g).unwrap();
        let lms = gb.leading_monomials();
        assert_eq!(lms, vec![Monomial::var(0), Monomial::var_pow(1, 2)]);
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(2));
        assert!(g.iter().all(|p| gb.contains(p)));
        assert!(gb.is_groebner());
    }

    #[test]
    fn unit_ideal() {
        let g = polys(101, &["x", "y"], &["x*y - 1", "x"]);
        let gb = buchberger(&g).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(0));
    }

    #[test]
    fn eliminants() {
        let g = polys(7, &["x"], &["x - 3"]);
        let e = buchberger(&g).unwrap().eliminant(0).unwrap();
        assert_eq!(e.coeffs(), &[4, 1]);

        let g = polys(7, &["x", "y"], &["x^2 - 2", "y - x"]);
        let gb = buchberger(&g).unwrap();
        let e = gb.eliminant(1).unwrap();
        assert_eq!(e.coeffs(), &[5, 0, 1]);
        for r in [3, 4] {
            assert_eq!(e.eval(r), 0);
        }
    }

    #[test]
    fn cyclic3_is_groebner() {
        let g = polys(10007, &["a", "b", "c"], &["a + b + c", "a*b + b*c + c*a", "a*b*c - 1"]);
        let gb = buchberger(&g).unwrap();
        assert!(gb.is_groebner());
        assert!(g.iter().all(|p| gb.contains(p)));
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(6));
        let e = gb.eliminant(2).unwrap();
        assert_eq!(e.degree(), Some(3));
    }
}
