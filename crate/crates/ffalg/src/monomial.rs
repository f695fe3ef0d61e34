//! Packed monomials whose byte order is graded reverse lexicographic.

use std::fmt;

/// Most indeterminates a polynomial ring may have.
pub const MAX_VARS: usize = 31;

/// Exponent vector of at most [`MAX_VARS`] variables, each exponent and the
/// total degree below 256.
///
/// Byte 0 is the total degree and byte `31 - i` holds `255 - e_i`, so the
/// derived lexicographic `Ord` on the bytes is grevlex with `x0 > x1 > ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u8; 32]);

#[inline]
fn slot(i: usize) -> usize {
    debug_assert!(i < MAX_VARS);
    MAX_VARS - i
}

impl Monomial {
    pub const ONE: Monomial = {
        let mut k = [255u8; 32];
        k[0] = 0;
        Monomial(k)
    };

    pub fn var(i: usize) -> Monomial {
        Monomial::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u8) -> Monomial {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        let mut m = Monomial::ONE;
        m.0[0] = e;
        m.0[slot(i)] = 255 - e;
        m
    }

    /// Panics if an exponent or the total degree exceeds 255.
    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= 255, "exponent too large");
            m.0[slot(i)] = 255 - e as u8;
            deg += e;
        }
        assert!(deg <= 255, "degree too large");
        m.0[0] = deg as u8;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0[0] as u32
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        255 - self.0[slot(i)] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0[0] == 0
    }

    /// The variable index when this is a pure power `x_i^e`, `e >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for t in 1..32 {
            if self.0[t] != 255 {
                if found.is_some() {
                    return None;
                }
                found = Some(MAX_VARS - t);
            }
        }
        found
    }

    /// Highest variable index with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        (1..32).find(|&t| self.0[t] != 255).map(|t| MAX_VARS - t)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut k = [0u8; 32];
        k[0] = self.0[0] + other.0[0];
        for t in 1..32 {
            k[t] = (self.0[t] as u16 + other.0[t] as u16 - 255) as u8;
        }
        Monomial(k)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.0[0] > other.0[0] {
            return false;
        }
        (1..32).all(|t| self.0[t] >= other.0[t])
    }

    /// `other / self`; the caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut k = [0u8; 32];
        k[0] = other.0[0] - self.0[0];
        for t in 1..32 {
            k[t] = other.0[t] + (255 - self.0[t]);
        }
        Monomial(k)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut k = [0u8; 32];
        let mut deg = 0u32;
        for t in 1..32 {
            k[t] = self.0[t].min(other.0[t]);
            deg += 255 - k[t] as u32;
        }
        k[0] = deg as u8;
        Monomial(k)
    }

    #[inline]
    pub fn coprime(&self, other: &Monomial) -> bool {
        (1..32).all(|t| self.0[t] == 255 || other.0[t] == 255)
    }

    pub fn display_with<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        MonoDisplay { m: self, vars }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.last_var().map_or(0, |v| v + 1);
        write!(f, "x{:?}", self.exponents(n))
    }
}

struct MonoDisplay<'a> {
    m: &'a Monomial,
    vars: &'a [String],
}

impl fmt::Display for MonoDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, v) in self.vars.iter().enumerate() {
            let e = self.m.exponent(i);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
