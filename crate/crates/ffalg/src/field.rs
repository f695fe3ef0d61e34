//! Prime fields with Barrett reduction.

use std::fmt;

use crate::FfError;

/// `F_p` for an odd prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    /// `floor(2^64 / p)`
    barrett: u64,
}

pub const DEFAULT_PRIME: u64 = 10007;

/// Trial division; the moduli here are far below `2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FfError> {
        if p < 3 || p >= 1 << 31 || !is_prime(p) {
            return Err(FfError::BadModulus(p));
        }
        Ok(PrimeField { p, barrett: ((1u128 << 64) / p as u128) as u64 })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces any `x < 2^64`.
    #[inline]
    pub fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        if r >= self.p {
            r -= self.p;
        }
        r as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            (self.p - a as u64) as u32
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    /// `a·b + c`
    #[inline]
    pub fn mul_add(&self, a: u32, b: u32, c: u32) -> u32 {
        self.reduce(a as u64 * b as u64 + c as u64)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i64) as u32
    }

    /// Maps a signed integer into the field.
    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}
