//! Littlewood–Richardson products truncated to the `k × (n−k)` box.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::SchubertError;
use crate::partition::{GrassmannianSpec, Partition};

/// Coefficients of `σ_μ · σ_λ` in the Schubert basis of `Gr(k,n)`.
///
/// The boxes of `λ` are added row by row as horizontal strips labelled
/// `1, 2, …`; the reverse reading word must be a lattice word.
pub fn lr_expand(mu: &Partition, lam: &Partition, spec: GrassmannianSpec) -> Vec<(Partition, u64)> {
    let k = spec.k;
    let m = spec.m() as u32;
    if !mu.fits_in_box(spec) || !lam.fits_in_box(spec) {
        return Vec::new();
    }
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    let shape = mu.padded(k);
    let mut strips: Vec<Vec<u32>> = Vec::new();
    add_label(0, lam.parts(), &shape, &mut strips, k, m, &mut out);
    out.into_iter().collect()
}

fn add_label(
    label: usize,
    lam: &[u32],
    shape: &[u32],
    strips: &mut Vec<Vec<u32>>,
    k: usize,
    m: u32,
    out: &mut BTreeMap<Partition, u64>,
) {
    if label == lam.len() {
        *out.entry(Partition::new(shape.to_vec()).expect("shape")).or_insert(0) += 1;
        return;
    }
    let mut cur = shape.to_vec();
    let mut added = vec![0u32; k];
    place_strip(0, lam[label], label, lam, shape, &mut cur, &mut added, strips, k, m, out);
}

#[allow(clippy::too_many_arguments)]
fn place_strip(
    row: usize,
    left: u32,
    label: usize,
    lam: &[u32],
    shape: &[u32],
    cur: &mut Vec<u32>,
    added: &mut Vec<u32>,
    strips: &mut Vec<Vec<u32>>,
    k: usize,
    m: u32,
    out: &mut BTreeMap<Partition, u64>,
) {
    if row == k {
        if left != 0 {
            return;
        }
        if label > 0 {
            // Lattice condition against the previous label, row by row.
            let prev = &strips[label - 1];
            let (mut this_cum, mut prev_cum) = (0u32, 0u32);
            for i in 0..k {
                this_cum += added[i];
                if this_cum > prev_cum {
                    return;
                }
                prev_cum += prev[i];
            }
        }
        strips.push(added.clone());
        let next = cur.clone();
        add_label(label + 1, lam, &next, strips, k, m, out);
        strips.pop();
        return;
    }
    let mut room = m - cur[row];
    if row > 0 {
        room = room.min(shape[row - 1] - cur[row]);
    }
    for a in (0..=room.min(left)).rev() {
        cur[row] += a;
        added[row] = a;
        place_strip(row + 1, left - a, label, lam, shape, cur, added, strips, k, m, out);
        cur[row] -= a;
        added[row] = 0;
    }
}

/// An element of the cohomology ring with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub spec: GrassmannianSpec,
    pub coefficients: BTreeMap<Partition, BigUint>,
}

impl CohomologyClass {
    pub fn unit(spec: GrassmannianSpec) -> Self {
        Self::schubert(spec, Partition::empty())
    }

    pub fn schubert(spec: GrassmannianSpec, lam: Partition) -> Self {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(lam, BigUint::from(1u32));
        CohomologyClass { spec, coefficients }
    }

    pub fn coefficient(&self, lam: &Partition) -> BigUint {
        self.coefficients.get(lam).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// Multiplies `c` by the Schubert class of `lam`.
pub fn lr_multiply(c: &CohomologyClass, lam: &Partition) -> Result<CohomologyClass, SchubertError> {
    if !lam.fits_in_box(c.spec) {
        return Err(SchubertError::BoxViolation { partition: lam.clone(), spec: c.spec });
    }
    let mut coefficients: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for (mu, coeff) in &c.coefficients {
        for (nu, mult) in lr_expand(mu, lam, c.spec) {
            *coefficients.entry(nu).or_default() += coeff * mult;
        }
    }
    coefficients.retain(|_, v| !v.is_zero());
    Ok(CohomologyClass { spec: c.spec, coefficients })
}

/// Precomputed multiplication table over all box partitions of one
/// Grassmannian, for sweeps that multiply millions of times.
pub struct LrTable {
    pub spec: GrassmannianSpec,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    complement: Vec<usize>,
    // table[mu][lam] = [(nu, c)]
    table: Vec<Vec<Vec<(u16, u32)>>>,
}

impl LrTable {
    pub fn new(spec: GrassmannianSpec) -> Self {
        let parts = spec.box_partitions();
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let complement = parts.iter().map(|p| index[&p.complement(spec)]).collect();
        let table = parts
            .iter()
            .map(|mu| {
                parts
                    .iter()
                    .map(|lam| {
                        lr_expand(mu, lam, spec)
                            .into_iter()
                            .map(|(nu, c)| (index[&nu] as u16, c as u32))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        LrTable { spec, parts, index, complement, table }
    }

    /// Box partitions in canonical order; position 0 is the full box.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn partition(&self, i: usize) -> &Partition {
        &self.parts[i]
    }

    pub fn complement_index(&self, i: usize) -> usize {
        self.complement[i]
    }

    pub fn empty_index(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn full_index(&self) -> usize {
        0
    }

    pub fn product(&self, mu: usize, lam: usize) -> &[(u16, u32)] {
        &self.table[mu][lam]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Dense multiply with `u128` coefficients; `None` on overflow.
    pub fn multiply_dense(&self, class: &[u128], lam: usize, out: &mut [u128]) -> Option<()> {
        out.iter_mut().for_each(|x| *x = 0);
        for (mu, &c) in class.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(nu, mult) in &self.table[mu][lam] {
                let add = c.checked_mul(mult as u128)?;
                let slot = &mut out[nu as usize];
                *slot = slot.checked_add(add)?;
            }
        }
        Some(())
    }

    pub fn multiply_dense_big(&self, class: &[BigUint], lam: usize) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.parts.len()];
        for (mu, c) in class.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(nu, mult) in &self.table[mu][lam] {
                out[nu as usize] += c * mult;
            }
        }
        out
    }

    /// Degree of the product of the indexed conditions (any order).
    pub fn degree_of_indices(&self, conds: &[usize]) -> BigUint {
        let mut conds = conds.to_vec();
        conds.sort_unstable();
        let Some((&last, init)) = conds.split_last() else {
            return BigUint::zero();
        };
        let mut class = vec![0u128; self.len()];
        class[self.empty_index()] = 1;
        let mut scratch = vec![0u128; self.len()];
        for &c in init {
            if self.multiply_dense(&class, c, &mut scratch).is_none() {
                return self.degree_big(&conds);
            }
            std::mem::swap(&mut class, &mut scratch);
        }
        BigUint::from(class[self.complement[last]])
    }

    fn degree_big(&self, conds: &[usize]) -> BigUint {
        let (&last, init) = conds.split_last().expect("nonempty");
        let mut class = vec![BigUint::zero(); self.len()];
        class[self.empty_index()] = BigUint::from(1u32);
        for &c in init {
            class = self.multiply_dense_big(&class, c);
        }
        class[self.complement[last]].clone()
    }
}
