//! Sparse multivariate polynomials over a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::field::PrimeField;
use crate::monomial::{Monomial, MAX_VARS};
use crate::FfError;

pub type Term = (Monomial, u32);

/// Terms are kept sorted by ascending monomial with no zero coefficients, so
/// the leading term is the last one.
#[derive(Clone)]
pub struct MultiPoly {
    field: PrimeField,
    vars: Arc<Vec<String>>,
    terms: Vec<Term>,
}

/// Shared variable list for a polynomial ring.
pub fn ring_vars<S: AsRef<str>>(names: &[S]) -> Result<Arc<Vec<String>>, FfError> {
    if names.len() > MAX_VARS {
        return Err(FfError::TooManyVariables(names.len()));
    }
    Ok(Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()))
}

/// `a + c*b` on ascending term lists.
pub(crate) fn axpy(field: &PrimeField, a: &[Term], c: u32, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, field.mul(c, b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = field.mul_add(c, b[j].1, a[i].1);
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(m, v)| (m, field.mul(c, v))));
    out
}

/// `a + c*m*b` on ascending term lists; monomial multiplication preserves order.
pub(crate) fn axpy_shift(field: &PrimeField, a: &[Term], c: u32, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    axpy_shift_into(field, a, c, m, b, &mut out);
    out
}

/// [`axpy_shift`] writing into a cleared `out`.
pub(crate) fn axpy_shift_into(field: &PrimeField, a: &[Term], c: u32, m: &Monomial, b: &[Term], out: &mut Vec<Term>) {
    out.clear();
    let mut i = 0;
    for &(bm, bc) in b {
        let sm = bm.mul(m);
        while i < a.len() && a[i].0 < sm {
            out.push(a[i]);
            i += 1;
        }
        if i < a.len() && a[i].0 == sm {
            let v = field.mul_add(c, bc, a[i].1);
            if v != 0 {
                out.push((sm, v));
            }
            i += 1;
        } else {
            out.push((sm, field.mul(c, bc)));
        }
    }
    out.extend_from_slice(&a[i..]);
}

impl MultiPoly {
    pub fn zero(field: PrimeField, vars: Arc<Vec<String>>) -> Self {
        MultiPoly { field, vars, terms: Vec::new() }
    }

    pub fn constant(field: PrimeField, vars: Arc<Vec<String>>, c: u32) -> Self {
        let c = field.reduce(c as u64);
        let terms = if c == 0 { Vec::new() } else { vec![(Monomial::ONE, c)] };
        MultiPoly { field, vars, terms }
    }

    pub fn var(field: PrimeField, vars: Arc<Vec<String>>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        MultiPoly { field, vars, terms: vec![(Monomial::var(i), 1)] }
    }

    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(field: PrimeField, vars: Arc<Vec<String>>, mut terms: Vec<Term>) -> Self {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = field.reduce(c as u64);
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        MultiPoly { field, vars, terms: out }
    }

    /// Trusts the caller that `terms` is ascending with nonzero coefficients.
    pub(crate) fn from_sorted(field: PrimeField, vars: Arc<Vec<String>>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        MultiPoly { field, vars, terms }
    }

    /// Parses sums of terms such as `3*x^2*y - y + 5`.
    pub fn parse(field: PrimeField, vars: Arc<Vec<String>>, s: &str) -> Result<Self, FfError> {
        let err = |m: &str| FfError::Parse(format!("{m} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(err("dangling sign"));
            }
            let mut coeff = 1u32;
            let mut exps = vec![0u32; vars.len()];
            for factor in term.split('*') {
                let (base, pow) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                if let Ok(n) = base.parse::<u64>() {
                    let c = field.pow(field.reduce(n), pow as u64);
                    coeff = field.mul(coeff, c);
                } else if let Some(i) = vars.iter().position(|v| v == base) {
                    exps[i] += pow;
                } else {
                    return Err(err(&format!("unknown variable {base:?}")));
                }
            }
            let c = if neg { field.neg(coeff) } else { coeff };
            terms.push((Monomial::from_exponents(&exps), c));
        }
        Ok(MultiPoly::from_terms(field, vars, terms))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Ascending order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_term(&self) -> Option<Term> {
        self.terms.last().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> u32 {
        self.terms.last().map_or(0, |t| t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn same_ring(&self, other: &MultiPoly) -> bool {
        self.field == other.field && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(self.same_ring(other), "polynomials from different rings");
    }

    pub fn scale(&self, c: u32) -> MultiPoly {
        let c = self.field.reduce(c as u64);
        if c == 0 {
            return MultiPoly::zero(self.field, self.vars.clone());
        }
        let terms = self.terms.iter().map(|&(m, v)| (m, self.field.mul(c, v))).collect();
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> MultiPoly {
        let c = self.field.reduce(c as u64);
        if c == 0 {
            return MultiPoly::zero(self.field, self.vars.clone());
        }
        let terms = self.terms.iter().map(|&(tm, v)| (tm.mul(m), self.field.mul(c, v))).collect();
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.terms.last() {
            Some(&(_, 1)) | None => self.clone(),
            Some(&(_, lc)) => self.scale(self.field.inv(lc)),
        }
    }

    pub fn eval(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.nvars(), "point has wrong arity");
        let f = &self.field;
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Substitutes `x_i = value` for each `Some` entry.
    pub fn substitute(&self, values: &[Option<u32>]) -> MultiPoly {
        assert_eq!(values.len(), self.nvars(), "substitution has wrong arity");
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let mut exps = m.exponents(self.nvars());
                let mut v = c;
                for (i, val) in values.iter().enumerate() {
                    if let Some(x) = val {
                        v = f.mul(v, f.pow(*x, exps[i] as u64));
                        exps[i] = 0;
                    }
                }
                (Monomial::from_exponents(&exps), v)
            })
            .collect();
        MultiPoly::from_terms(self.field, self.vars.clone(), terms)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.field, self.vars.clone(), 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let terms = axpy(&self.field, &self.terms, 1, &rhs.terms);
        MultiPoly::from_sorted(self.field, self.vars.clone(), terms)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let m1 = self.field.neg(1);
        let terms = axpy(&self.field, &self.terms, m1, &rhs.terms);
        MultiPoly::from_sorted(self.field, self.vars.clone(), terms)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.field.neg(1))
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in &small.terms {
            acc = axpy_shift(&self.field, &acc, *c, m, &big.terms);
        }
        MultiPoly::from_sorted(self.field, self.vars.clone(), acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{}", m.display_with(&self.vars))?;
            } else {
                write!(f, "{c}*{}", m.display_with(&self.vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}
