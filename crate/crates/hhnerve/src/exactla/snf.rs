//! Smith normal form over the integers.

use crate::Int;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) of the integer
/// matrix given by its rows. Unimodular row/column operations only.
pub fn smith_normal_form_rows(mut rows: Vec<BTreeMap<usize, Int>>) -> Vec<Int> {
    let mut row_active: Vec<bool> = rows.iter().map(|_| true).collect();
    let mut col_active: std::collections::BTreeSet<usize> = rows
        .iter()
        .flat_map(|r| r.keys().copied())
        .collect();
    let mut factors: Vec<Int> = Vec::new();

    loop {
        let pivot = find_min_entry(&rows, &row_active, &col_active);
        let (mut pr, mut pc) = match pivot {
            Some(p) => p,
            None => break,
        };

        'improve: loop {
            // make pivot positive
            if rows[pr][&pc].is_negative() {
                for v in rows[pr].values_mut() {
                    *v = -v.clone();
                }
            }
            let pv = rows[pr][&pc].clone();

            // clear the pivot column with row operations
            for i in 0..rows.len() {
                if i == pr || !row_active[i] {
                    continue;
                }
                if let Some(v) = rows[i].get(&pc).cloned() {
                    let (q, r) = v.div_rem(&pv);
                    row_sub_scaled(&mut rows, i, pr, &q);
                    if !r.is_zero() {
                        // the remainder is a strictly smaller pivot
                        pr = i;
                        continue 'improve;
                    }
                }
            }
            // clear the pivot row with column operations
            let row_cols: Vec<usize> = rows[pr].keys().copied().filter(|&c| c != pc).collect();
            for c in row_cols {
                let v = rows[pr][&c].clone();
                let (q, r) = v.div_rem(&pv);
                col_sub_scaled(&mut rows, &row_active, c, pc, &q);
                if !r.is_zero() {
                    // a strictly smaller entry remains in this row; make it
                    // the pivot and start over
                    pc = c;
                    continue 'improve;
                }
            }
            // pivot must divide every remaining entry
            let pv = rows[pr][&pc].clone();
            let mut bumped = false;
            for i in 0..rows.len() {
                if i == pr || !row_active[i] {
                    continue;
                }
                if rows[i]
                    .iter()
                    .any(|(c, v)| col_active.contains(c) && !(v % &pv).is_zero())
                {
                    // fold the offending row into the pivot row and retry
                    let offending: Vec<(usize, Int)> =
                        rows[i].iter().map(|(c, v)| (*c, v.clone())).collect();
                    for (c, v) in offending {
                        let entry = rows[pr].remove(&c).map_or(v.clone(), |old| old + &v);
                        if !entry.is_zero() {
                            rows[pr].insert(c, entry);
                        }
                    }
                    bumped = true;
                    break;
                }
            }
            if bumped {
                continue 'improve;
            }
            break;
        }

        factors.push(rows[pr][&pc].abs());
        row_active[pr] = false;
        col_active.remove(&pc);
        for (i, row) in rows.iter_mut().enumerate() {
            if row_active[i] {
                row.remove(&pc);
            }
        }
    }

    // divisibility chain is enforced during elimination; normalize order
    factors.sort();
    debug_assert!(factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    factors
}

fn find_min_entry(
    rows: &[BTreeMap<usize, Int>],
    row_active: &[bool],
    col_active: &std::collections::BTreeSet<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for (i, row) in rows.iter().enumerate() {
        if !row_active[i] {
            continue;
        }
        for (c, v) in row {
            if !col_active.contains(c) || v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().map_or(true, |(bv, br, bc)| {
                (&a, i, *c) < (bv, *br, *bc)
            }) {
                best = Some((a, i, *c));
            }
        }
    }
    best.map(|(_, i, c)| (i, c))
}

/// `row_i -= q * row_p`
fn row_sub_scaled(rows: &mut [BTreeMap<usize, Int>], i: usize, p: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let pivot_row: Vec<(usize, Int)> = rows[p].iter().map(|(c, v)| (*c, v.clone())).collect();
    for (c, v) in pivot_row {
        let delta = q * &v;
        let entry = rows[i].remove(&c).map_or(-delta.clone(), |old| old - &delta);
        if !entry.is_zero() {
            rows[i].insert(c, entry);
        }
    }
}

/// `col_c -= q * col_pc` applied across all active rows
fn col_sub_scaled(
    rows: &mut [BTreeMap<usize, Int>],
    row_active: &[bool],
    c: usize,
    pc: usize,
    q: &Int,
) {
    if q.is_zero() {
        return;
    }
    for (i, row) in rows.iter_mut().enumerate() {
        if !row_active[i] {
            continue;
        }
        if let Some(v) = row.get(&pc).cloned() {
            let delta = q * &v;
            let entry = row.remove(&c).map_or(-delta.clone(), |old| old - &delta);
            if !entry.is_zero() {
                row.insert(c, entry);
            }
        }
    }
}
