//! Deterministic sparse elimination kernels.
//!
//! The pivot rule everywhere is: among the active rows pick the one with the
//! fewest stored entries, ties broken by the lowest row index; the pivot
//! column is the lowest column index in that row. This makes every rank,
//! kernel, and solve reproducible bit for bit.

use crate::scalar::Scalar;
use crate::Int;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sparse column vector.
pub type ColVec<T> = BTreeMap<usize, T>;

fn pick_pivot_row<T>(rows: &[BTreeMap<usize, T>], active: &[bool]) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None; // (fill, index)
    for (i, row) in rows.iter().enumerate() {
        if !active[i] || row.is_empty() {
            continue;
        }
        let key = (row.len(), i);
        if best.map_or(true, |b| key < b) {
            best = Some(key);
        }
    }
    best.map(|(_, i)| i)
}

/// Rank by ordinary Gaussian elimination over a field.
pub fn rank_generic<T: Scalar>(mut rows: Vec<BTreeMap<usize, T>>) -> usize {
    let mut active = vec![true; rows.len()];
    let mut rank = 0;
    while let Some(p) = pick_pivot_row(&rows, &active) {
        let (&pc, pv) = rows[p].iter().next().map(|(c, v)| (c, v.clone())).unwrap();
        let pivot_row: Vec<(usize, T)> = rows[p]
            .iter()
            .map(|(c, v)| (*c, v.clone() / pv.clone()))
            .collect();
        active[p] = false;
        rank += 1;
        for (i, row) in rows.iter_mut().enumerate() {
            if !active[i] {
                continue;
            }
            if let Some(factor) = row.remove(&pc) {
                for (c, v) in &pivot_row {
                    if *c == pc {
                        continue;
                    }
                    let delta = factor.clone() * v.clone();
                    let entry = row.remove(c).map_or(-delta.clone(), |old| old - delta);
                    if !entry.is_zero() {
                        row.insert(*c, entry);
                    }
                }
            }
        }
    }
    rank
}

/// Rank of an integer matrix over the rationals without ever forming a
/// fraction: cross-multiplication updates followed by content removal.
pub fn rank_fraction_free(mut rows: Vec<BTreeMap<usize, Int>>) -> usize {
    let mut active = vec![true; rows.len()];
    let mut rank = 0;
    while let Some(p) = pick_pivot_row(&rows, &active) {
        let (&pc, pv) = rows[p].iter().next().map(|(c, v)| (c, v.clone())).unwrap();
        let pivot_row: Vec<(usize, Int)> = rows[p].iter().map(|(c, v)| (*c, v.clone())).collect();
        active[p] = false;
        rank += 1;
        for (i, row) in rows.iter_mut().enumerate() {
            if !active[i] {
                continue;
            }
            if let Some(factor) = row.remove(&pc) {
                // row := pivot * row - factor * pivot_row
                let mut updated: BTreeMap<usize, Int> = BTreeMap::new();
                for (c, v) in row.iter() {
                    updated.insert(*c, pv.clone() * v);
                }
                for (c, v) in &pivot_row {
                    if *c == pc {
                        continue;
                    }
                    let delta = factor.clone() * v;
                    let entry = updated.remove(c).map_or(-delta.clone(), |old| old - delta);
                    if !entry.is_zero() {
                        updated.insert(*c, entry);
                    }
                }
                // strip the content to keep growth in check
                let mut g = Int::zero();
                for v in updated.values() {
                    g = g.gcd(v);
                }
                if !g.is_zero() && !g.is_one() {
                    for v in updated.values_mut() {
                        *v = &*v / &g;
                    }
                }
                *row = updated;
            }
        }
    }
    rank
}

/// Fully reduced row-echelon form.
struct Rref<T> {
    /// Each entry is `(pivot_col, row)` with the pivot normalized to one and
    /// eliminated from every other stored row.
    rows: Vec<(usize, BTreeMap<usize, T>)>,
}

fn rref<T: Scalar>(mut rows: Vec<BTreeMap<usize, T>>) -> Rref<T> {
    let mut active = vec![true; rows.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (col, row idx)
    while let Some(p) = pick_pivot_row(&rows, &active) {
        let (&pc, pv) = rows[p].iter().next().map(|(c, v)| (c, v.clone())).unwrap();
        let normalized: BTreeMap<usize, T> = rows[p]
            .iter()
            .map(|(c, v)| (*c, v.clone() / pv.clone()))
            .collect();
        rows[p] = normalized.clone();
        active[p] = false;
        for (i, row) in rows.iter_mut().enumerate() {
            if i == p || row.is_empty() {
                continue;
            }
            if let Some(factor) = row.remove(&pc) {
                for (c, v) in &normalized {
                    if *c == pc {
                        continue;
                    }
                    let delta = factor.clone() * v.clone();
                    let entry = row.remove(c).map_or(-delta.clone(), |old| old - delta);
                    if !entry.is_zero() {
                        row.insert(*c, entry);
                    }
                }
            }
        }
        pivots.push((pc, p));
    }
    Rref {
        rows: pivots
            .into_iter()
            .map(|(c, i)| (c, std::mem::take(&mut rows[i])))
            .collect(),
    }
}

/// Basis of the null space of a matrix given by its rows, as sparse column
/// vectors of length `cols`, ordered by free column index.
pub fn kernel_basis<T: Scalar>(rows: Vec<BTreeMap<usize, T>>, cols: usize) -> Vec<ColVec<T>> {
    let reduced = rref(rows);
    let pivot_cols: std::collections::BTreeSet<usize> =
        reduced.rows.iter().map(|&(c, _)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v: ColVec<T> = BTreeMap::new();
        v.insert(free, T::one());
        for (pc, row) in &reduced.rows {
            if let Some(coef) = row.get(&free) {
                v.insert(*pc, -coef.clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Indices of a deterministic independent spanning subset of the given
/// columns (a column-space basis).
pub fn column_space_pivots<T: Scalar>(cols: &[ColVec<T>], _rows: usize) -> Vec<usize> {
    let mut basis = IncrementalBasis::new();
    let mut picked = Vec::new();
    for (i, col) in cols.iter().enumerate() {
        if basis.insert(col.clone()) {
            picked.push(i);
        }
    }
    picked
}

/// Growable echelonized basis for membership and independence tests.
pub struct IncrementalBasis<T> {
    /// Sorted by leading index; each vector's leading coefficient is one.
    vectors: BTreeMap<usize, ColVec<T>>,
}

impl<T: Scalar> IncrementalBasis<T> {
    pub fn new() -> Self {
        IncrementalBasis {
            vectors: BTreeMap::new(),
        }
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, mut v: ColVec<T>) -> ColVec<T> {
        loop {
            let lead = match v.keys().next() {
                Some(&l) => l,
                None => return v,
            };
            match self.vectors.get(&lead) {
                None => return v,
                Some(b) => {
                    let factor = v.remove(&lead).unwrap();
                    for (c, w) in b {
                        if *c == lead {
                            continue;
                        }
                        let delta = factor.clone() * w.clone();
                        let entry = v.remove(c).map_or(-delta.clone(), |old| old - delta);
                        if !entry.is_zero() {
                            v.insert(*c, entry);
                        }
                    }
                }
            }
        }
    }

    /// Inserts `v` if independent of the current basis; returns whether the
    /// basis grew.
    pub fn insert(&mut self, v: ColVec<T>) -> bool {
        let mut r = self.reduce(v);
        match r.iter().next().map(|(c, v)| (*c, v.clone())) {
            None => false,
            Some((lead, coef)) => {
                for val in r.values_mut() {
                    *val = val.clone() / coef.clone();
                }
                self.vectors.insert(lead, r);
                true
            }
        }
    }
}

impl<T: Scalar> Default for IncrementalBasis<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Solves `A x = b` for each right-hand side, where `A` is given by its
/// columns. Returns, per right-hand side, the coordinate vector in the given
/// columns, or `None` when the system is inconsistent. When `A`'s columns
/// are independent the solution is unique; otherwise the deterministic
/// echelon choice fixes it.
pub fn solve_many<T: Scalar>(a_cols: &[ColVec<T>], rhs: &[ColVec<T>]) -> Vec<Option<Vec<T>>> {
    // Build rows of the augmented matrix [A | RHS]; pivots are only allowed
    // in the coefficient block.
    let n = a_cols.len();
    let mut rows_map: BTreeMap<usize, BTreeMap<usize, T>> = BTreeMap::new();
    for (j, col) in a_cols.iter().enumerate() {
        for (r, v) in col {
            rows_map.entry(*r).or_default().insert(j, v.clone());
        }
    }
    for (k, col) in rhs.iter().enumerate() {
        for (r, v) in col {
            rows_map.entry(*r).or_default().insert(n + k, v.clone());
        }
    }
    let rows: Vec<BTreeMap<usize, T>> = rows_map.into_values().collect();

    // forward elimination restricted to coefficient columns
    let mut active = vec![true; rows.len()];
    let mut work = rows;
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (pivot col, row idx)
    loop {
        // pick the active row with the smallest fill whose leading column is
        // a coefficient column
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in work.iter().enumerate() {
            if !active[i] {
                continue;
            }
            match row.keys().next() {
                Some(&c) if c < n => {
                    let key = (row.len(), i);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
                _ => {}
            }
        }
        let p = match best {
            Some((_, i)) => i,
            None => break,
        };
        let (&pc, pv) = work[p].iter().next().map(|(c, v)| (c, v.clone())).unwrap();
        let normalized: BTreeMap<usize, T> = work[p]
            .iter()
            .map(|(c, v)| (*c, v.clone() / pv.clone()))
            .collect();
        work[p] = normalized.clone();
        active[p] = false;
        for (i, row) in work.iter_mut().enumerate() {
            if i == p || row.is_empty() {
                continue;
            }
            if let Some(factor) = row.remove(&pc) {
                for (c, v) in &normalized {
                    if *c == pc {
                        continue;
                    }
                    let delta = factor.clone() * v.clone();
                    let entry = row.remove(c).map_or(-delta.clone(), |old| old - delta);
                    if !entry.is_zero() {
                        row.insert(*c, entry);
                    }
                }
            }
        }
        pivot_rows.push((pc, p));
    }

    // rows that still have support only in the RHS block witness
    // inconsistency for those right-hand sides
    let mut inconsistent = vec![false; rhs.len()];
    for (i, row) in work.iter().enumerate() {
        if active[i] {
            for c in row.keys() {
                debug_assert!(*c >= n);
                inconsistent[*c - n] = true;
            }
        }
    }

    let mut out = Vec::with_capacity(rhs.len());
    for k in 0..rhs.len() {
        if inconsistent[k] {
            out.push(None);
            continue;
        }
        let mut coords = vec![T::zero(); n];
        for (pc, ri) in &pivot_rows {
            if let Some(v) = work[*ri].get(&(n + k)) {
                coords[*pc] = v.clone();
            }
        }
        out.push(Some(coords));
    }
    out
}
