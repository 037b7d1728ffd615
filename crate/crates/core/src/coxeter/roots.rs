use std::collections::HashMap;

use super::golden::Golden;
use super::CoxeterMatrix;
use crate::{Error, Result};

/// Permutation model of a finite reflection group: elements act on the full
/// root set, roots carried exactly in the simple-root basis with Z[φ]
/// coordinates (the φ part is zero outside the `H` family).
#[derive(Debug)]
pub struct RootEngine {
    /// All roots, coordinates in the simple-root basis.
    roots: Vec<Vec<Golden>>,
    /// `simple_tables[i][r]` = index of `s_{i+1}(roots[r])`.
    simple_tables: Vec<Vec<u32>>,
    positive: Vec<bool>,
}

impl RootEngine {
    /// Builds the root closure from the simple roots. `expected_positive`
    /// is the known positive-root count for the type; a mismatch means the
    /// reflection data is wrong and is reported as a construction failure.
    pub fn new(matrix: &CoxeterMatrix, expected_positive: usize) -> Result<Self> {
        let rank = matrix.rank();
        // cartan[i][j]: coefficient in s_i(α_j) = α_j - cartan[i][j]·α_i
        let mut cartan = vec![vec![Golden::ZERO; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = match matrix.entry(i + 1, j + 1) {
                    1 => Golden::from_int(2),
                    2 => Golden::ZERO,
                    3 => Golden::from_int(-1),
                    4 => {
                        // asymmetric pair: the lower-indexed root plays long
                        if i < j {
                            Golden::from_int(-1)
                        } else {
                            Golden::from_int(-2)
                        }
                    }
                    5 => -Golden::PHI,
                    m => {
                        return Err(Error::InvalidType(format!(
                            "unsupported bond m={m} for a root model"
                        )))
                    }
                };
            }
        }

        let reflect = |i: usize, v: &[Golden]| -> Vec<Golden> {
            let mut coeff = Golden::ZERO;
            for j in 0..rank {
                coeff = coeff + v[j] * cartan[i][j];
            }
            let mut out = v.to_vec();
            out[i] = out[i] - coeff;
            out
        };

        let mut roots: Vec<Vec<Golden>> = Vec::new();
        let mut index: HashMap<Vec<Golden>, u32> = HashMap::new();
        for i in 0..rank {
            let mut alpha = vec![Golden::ZERO; rank];
            alpha[i] = Golden::ONE;
            index.insert(alpha.clone(), roots.len() as u32);
            roots.push(alpha);
        }
        let mut head = 0;
        while head < roots.len() {
            let v = roots[head].clone();
            head += 1;
            for i in 0..rank {
                let w = reflect(i, &v);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), roots.len() as u32);
                    roots.push(w);
                }
            }
        }

        if roots.len() != 2 * expected_positive {
            return Err(Error::InvalidType(format!(
                "root closure produced {} roots, expected {}",
                roots.len(),
                2 * expected_positive
            )));
        }

        let positive: Vec<bool> = roots
            .iter()
            .map(|v| {
                let pos = v.iter().any(|c| c.is_positive());
                let neg = v.iter().any(|c| c.is_negative());
                debug_assert!(pos != neg, "root with mixed-sign coordinates");
                pos
            })
            .collect();

        let mut simple_tables = Vec::with_capacity(rank);
        for i in 0..rank {
            let table: Vec<u32> = roots.iter().map(|v| index[&reflect(i, v)]).collect();
            simple_tables.push(table);
        }

        Ok(RootEngine {
            roots,
            simple_tables,
            positive,
        })
    }

    pub fn identity_perm(&self) -> Box<[u32]> {
        (0..self.roots.len() as u32).collect()
    }

    /// Index of the simple root α_i (1-based generator index).
    pub fn simple_root(&self, i: usize) -> u32 {
        (i - 1) as u32
    }

    pub fn length_of(&self, perm: &[u32]) -> u32 {
        let mut len = 0;
        for (r, &img) in perm.iter().enumerate() {
            if self.positive[r] && !self.positive[img as usize] {
                len += 1;
            }
        }
        len
    }

    /// Permutation of `s_i · w` (apply `w`, then the reflection).
    pub fn mul_gen_left(&self, i: usize, perm: &[u32]) -> Box<[u32]> {
        let table = &self.simple_tables[i - 1];
        perm.iter().map(|&r| table[r as usize]).collect()
    }

    /// Permutation of `w · s_i` (apply the reflection, then `w`).
    pub fn mul_gen_right(&self, perm: &[u32], i: usize) -> Box<[u32]> {
        let table = &self.simple_tables[i - 1];
        table.iter().map(|&r| perm[r as usize]).collect()
    }

    /// Permutation of `a · b` as maps: `(a·b)(r) = a(b(r))`.
    pub fn compose(&self, a: &[u32], b: &[u32]) -> Box<[u32]> {
        b.iter().map(|&r| a[r as usize]).collect()
    }

    pub fn invert(&self, perm: &[u32]) -> Box<[u32]> {
        let mut out = vec![0u32; perm.len()];
        for (r, &img) in perm.iter().enumerate() {
            out[img as usize] = r as u32;
        }
        out.into_boxed_slice()
    }

    /// `l(w·s_i) < l(w)` iff `w(α_i)` is negative.
    pub fn is_right_descent(&self, perm: &[u32], i: usize) -> bool {
        !self.positive[perm[self.simple_root(i) as usize] as usize]
    }

    /// `l(s_i·w) < l(w)` iff `w⁻¹(α_i)` is negative.
    pub fn is_left_descent(&self, perm: &[u32], i: usize) -> bool {
        let target = self.simple_root(i);
        for (r, &img) in perm.iter().enumerate() {
            if img == target {
                return !self.positive[r];
            }
        }
        unreachable!("permutation misses a root index")
    }
}
