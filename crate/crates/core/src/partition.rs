//! Partitions, Grassmannian boxes and the two ways of gluing diagrams.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SchubertError;

/// A weakly decreasing sequence of parts with trailing zeros removed.
///
/// `Ord` is the canonical problem order: larger weight first, then
/// lexicographically larger first. Sorting ascending therefore lists the
/// "biggest" conditions first.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting increasing sequences. Zeros anywhere at
    /// the tail are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, SchubertError> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchubertError::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `(c)` with a single row.
    pub fn row(c: u32) -> Self {
        Partition::new(vec![c]).expect("single row")
    }

    /// `1^a`, a single column of height `a`.
    pub fn column(a: usize) -> Self {
        Partition { parts: vec![1; a] }
    }

    /// `r^a`, an `a × r` rectangle.
    pub fn rectangle(a: usize, r: u32) -> Self {
        Partition::new(vec![r; a]).expect("rectangle")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Row-wise sum `(λ+μ)_i = λ_i + μ_i`.
    pub fn componentwise_sum(&self, other: &Partition) -> Result<Partition, SchubertError> {
        let len = self.len().max(other.len());
        let parts: Vec<u32> = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition::new(parts.clone()).map_err(|_| SchubertError::InvalidCombination {
            op: "sum",
            left: self.clone(),
            right: other.clone(),
        })
    }

    /// Rows of `self` followed by rows of `other`; needs `λ_last ≥ μ_1`.
    pub fn concat(&self, other: &Partition) -> Result<Partition, SchubertError> {
        if let (Some(&last), Some(&first)) = (self.parts.last(), other.parts.first()) {
            if last < first {
                return Err(SchubertError::InvalidCombination {
                    op: "concat",
                    left: self.clone(),
                    right: other.clone(),
                });
            }
        }
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Ok(Partition { parts })
    }

    pub fn fits_in_box(&self, spec: GrassmannianSpec) -> bool {
        self.len() <= spec.k && self.part(0) as usize <= spec.n - spec.k
    }

    /// Complement inside the `k × (n−k)` box, read from the bottom corner.
    pub fn complement(&self, spec: GrassmannianSpec) -> Partition {
        let m = (spec.n - spec.k) as u32;
        let parts: Vec<u32> = (0..spec.k).rev().map(|i| m - self.part(i)).collect();
        Partition::new(parts).expect("complement of a box partition")
    }

    /// Parts padded with zeros to length `k`.
    pub fn padded(&self, k: usize) -> Vec<u32> {
        (0..k).map(|i| self.part(i)).collect()
    }

    /// Display padded to `k` parts, e.g. `(3,1,0,0)`.
    pub fn display_padded(&self, k: usize) -> String {
        let body: Vec<String> = self.padded(k).iter().map(u32::to_string).collect();
        format!("({})", body.join(","))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = SchubertError;

    /// Accepts `(2,1,1)`, `()` and a bare integer such as `3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(inner) => inner,
            None => t,
        };
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SchubertError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

/// The Grassmannian `Gr(k,n)` of `k`-planes in an `n`-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianSpec {
    pub k: usize,
    pub n: usize,
}

impl GrassmannianSpec {
    pub fn new(k: usize, n: usize) -> Result<Self, SchubertError> {
        if k == 0 || k >= n {
            return Err(SchubertError::BadGrassmannian { k, n });
        }
        Ok(GrassmannianSpec { k, n })
    }

    /// Width of the box, `n − k`.
    pub fn m(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.k * self.m()
    }

    pub fn full(&self) -> Partition {
        Partition::rectangle(self.k, self.m() as u32)
    }

    pub fn dual(&self) -> GrassmannianSpec {
        GrassmannianSpec { k: self.n - self.k, n: self.n }
    }

    /// Every partition inside the box, in canonical order.
    pub fn box_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.k);
        fn rec(k: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == k {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(k, p, cur, out);
                cur.pop();
            }
        }
        rec(self.k, self.m() as u32, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}
