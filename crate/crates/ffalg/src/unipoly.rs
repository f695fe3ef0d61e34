//! Dense univariate polynomials and factor-degree patterns.

use std::fmt;

use crate::field::PrimeField;
use crate::FfError;

/// Coefficients in ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        for c in &mut coeffs {
            *c = field.reduce(*c as u64);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        UniPoly { field, coeffs: vec![1] }
    }

    pub fn x(field: PrimeField) -> Self {
        UniPoly { field, coeffs: vec![0, 1] }
    }

    /// `prod (x - r)`
    pub fn from_roots(field: PrimeField, roots: &[u32]) -> Self {
        let mut acc = UniPoly::one(field);
        for &r in roots {
            acc = acc.mul(&UniPoly::new(field, vec![field.neg(field.reduce(r as u64)), 1]));
        }
        acc
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs.iter().rev().fold(0, |acc, &c| self.field.mul_add(acc, x, c))
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => self.scale(self.field.inv(lc)),
        }
    }

    pub fn scale(&self, c: u32) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0)))
            .collect();
        UniPoly::new(*f, c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let f = &self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(a, b, c[i + j]);
            }
        }
        UniPoly::new(*f, c)
    }

    /// Panics when dividing by zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(sd) = self.degree().filter(|&s| s >= dd) else {
            return (UniPoly::zero(*f), self.clone());
        };
        let inv = f.inv(d.leading());
        let mut r = self.coeffs.clone();
        let mut q = vec![0u32; sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = f.mul(r[i + dd], inv);
            if c == 0 {
                continue;
            }
            q[i] = c;
            let nc = f.neg(c);
            for (k, &dk) in d.coeffs.iter().enumerate() {
                r[i + k] = f.mul_add(nc, dk, r[i + k]);
            }
        }
        r.truncate(dd);
        (UniPoly::new(*f, q), UniPoly::new(*f, r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, &a)| f.mul(a, f.reduce(i as u64))).collect();
        UniPoly::new(*f, c)
    }

    pub fn mulmod(&self, other: &UniPoly, m: &UniPoly) -> UniPoly {
        self.mul(other).rem(m)
    }

    /// `self^e mod m`
    pub fn powmod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.rem(m);
        let mut acc = UniPoly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        !d.is_zero() && self.gcd(&d).degree() == Some(0)
    }
}

/// Degrees of the irreducible factors of a squarefree polynomial, ascending.
///
/// Uses distinct-degree splitting only; the factors themselves are never formed.
pub fn degree_pattern(f: &UniPoly) -> Result<Vec<usize>, FfError> {
    match f.degree() {
        None | Some(0) => return Err(FfError::ConstantPolynomial),
        Some(_) => {}
    }
    if !f.is_squarefree() {
        return Err(FfError::SquarefreeFailure);
    }
    let field = f.field();
    let p = field.p();
    let mut f = f.monic();
    let x = UniPoly::x(field);
    let mut h = x.clone();
    let mut pattern = Vec::new();
    let mut i = 1;
    while f.degree().unwrap() >= 2 * i {
        h = h.powmod(p, &f);
        let g = f.gcd(&h.sub(&x));
        let dg = g.degree().unwrap();
        if dg > 0 {
            pattern.extend(std::iter::repeat(i).take(dg / i));
            f = f.divrem(&g).0;
            h = h.rem(&f);
        }
        i += 1;
    }
    let rest = f.degree().unwrap();
    if rest > 0 {
        pattern.push(rest);
    }
    Ok(pattern)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    /// Counts roots by trying every residue.
    fn root_count(f: &UniPoly) -> usize {
        (0..f.field().p() as u32).filter(|&r| f.eval(r) == 0).count()
    }

    #[test]
    fn quadratic_patterns_mod_7() {
        let a = UniPoly::new(f7(), vec![5, 0, 1]); // x^2 - 2
        let b = UniPoly::new(f7(), vec![4, 0, 1]); // x^2 - 3
        assert_eq!(root_count(&a), 2);
        assert_eq!(root_count(&b), 0);
        assert_eq!(degree_pattern(&a).unwrap(), vec![1, 1]);
        assert_eq!(degree_pattern(&b).unwrap(), vec![2]);
        let c = UniPoly::new(f7(), vec![0, 0, 1]);
        assert!(matches!(degree_pattern(&c), Err(FfError::SquarefreeFailure)));
        assert!(matches!(degree_pattern(&UniPoly::one(f7())), Err(FfError::ConstantPolynomial)));
    }

    #[test]
    fn divrem_reconstructs() {
        let f = f7();
        let a = UniPoly::new(f, vec![1, 2, 3, 4, 5, 6]);
        let b = UniPoly::new(f, vec![3, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn inseparable_power_is_rejected() {
        let f = UniPoly::new(f7(), vec![1, 0, 0, 0, 0, 0, 0, 1]);
        assert!(f.derivative().is_zero());
        assert!(matches!(degree_pattern(&f), Err(FfError::SquarefreeFailure)));
    }

    /// Random monic irreducible of degree at most 3, certified by an
    /// exhaustive root search.
    fn irreducible(field: PrimeField, deg: usize, rng: &mut impl FnMut() -> u32) -> UniPoly {
        assert!(deg <= 3);
        loop {
            let mut c: Vec<u32> = (0..deg).map(|_| rng()).collect();
            c.push(1);
            let g = UniPoly::new(field, c);
            if deg == 1 || root_count(&g) == 0 {
                return g;
            }
        }
    }

    fn reconstruction(p: u64, degs: Vec<usize>, seed: u64) -> Result<(), TestCaseError> {
        use rand::{Rng, SeedableRng};
        let field = PrimeField::new(p).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut next = || rng.gen_range(0..p as u32);
        let mut f = UniPoly::one(field);
        let mut used: Vec<UniPoly> = Vec::new();
        for &d in &degs {
            let g = loop {
                let g = irreducible(field, d, &mut next);
                if !used.contains(&g) {
                    break g;
                }
            };
            f = f.mul(&g);
            used.push(g);
        }
        let scaled = f.scale(1 + next() % (p as u32 - 1));
        let mut want = degs.clone();
        want.sort();
        let got = degree_pattern(&scaled).unwrap();
        prop_assert_eq!(got.iter().sum::<usize>(), scaled.degree().unwrap());
        prop_assert_eq!(got, want);
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn pattern_reconstructs_mod_101(degs in prop::collection::vec(1usize..4, 1..6), seed in any::<u64>()) {
            reconstruction(101, degs, seed)?;
        }

        #[test]
        fn pattern_reconstructs_mod_10007(degs in prop::collection::vec(1usize..4, 1..6), seed in any::<u64>()) {
            reconstruction(10007, degs, seed)?;
        }

        #[test]
        fn pattern_agrees_with_root_count_mod_101(c in prop::collection::vec(0u32..101, 1..8)) {
            let field = PrimeField::new(101).unwrap();
            let mut c = c;
            c.push(1);
            let f = UniPoly::new(field, c);
            if let Ok(pat) = degree_pattern(&f) {
                prop_assert_eq!(pat.iter().sum::<usize>(), f.degree().unwrap());
                prop_assert_eq!(pat.iter().filter(|&&d| d == 1).count(), root_count(&f));
            }
        }
    }
}
