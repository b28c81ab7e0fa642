//! Exact Smith normal form over the integers.
//!
//! The reduction runs in two phases. A sparse phase eliminates with
//! unit pivots chosen by Markowitz cost, which is where boundary
//! matrices spend almost all of their time; entries use checked i128
//! arithmetic. Whatever survives without a unit entry is handed to a
//! dense arbitrary-precision reduction that also extracts the torsion
//! diagonal. Overflow in the sparse phase escalates the remaining
//! submatrix to the dense path, so every result is exact.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank and the invariant factors larger than 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfOutcome {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Smith normal form of a sparse integer matrix given as
/// (row, col, value) triples with nonzero values.
pub fn smith_normal_form(
    n_rows: usize,
    n_cols: usize,
    entries: &[(usize, usize, i64)],
) -> SnfOutcome {
    let mut rows: Vec<HashMap<usize, i128>> = vec![HashMap::new(); n_rows];
    let mut col_rows: Vec<HashSet<usize>> = vec![HashSet::new(); n_cols];
    for &(r, c, v) in entries {
        debug_assert!(v != 0 && r < n_rows && c < n_cols);
        rows[r].insert(c, v as i128);
        col_rows[c].insert(r);
    }

    let mut row_active = vec![true; n_rows];
    let mut col_active = vec![true; n_cols];
    let mut unit_rank = 0usize;
    let mut overflowed = false;

    'outer: loop {
        // Pick the unit entry with the smallest Markowitz fill estimate.
        let mut best: Option<(usize, usize, usize)> = None;
        for r in 0..n_rows {
            if !row_active[r] {
                continue;
            }
            let row_nnz = rows[r].len();
            for (&c, &v) in &rows[r] {
                if v == 1 || v == -1 {
                    let cost = (row_nnz - 1) * (col_rows[c].len() - 1);
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((r, c, cost));
                        if cost == 0 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else {
            break 'outer;
        };

        let pivot = rows[pr][&pc];
        let pivot_row: Vec<(usize, i128)> = rows[pr].iter().map(|(&c, &v)| (c, v)).collect();
        let targets: Vec<usize> = col_rows[pc]
            .iter()
            .copied()
            .filter(|&r| r != pr && row_active[r])
            .collect();
        for r in targets {
            let factor = rows[r][&pc] * pivot; // pivot is +-1
            for &(c, w) in &pivot_row {
                let delta = match factor.checked_mul(w) {
                    Some(d) => d,
                    None => {
                        overflowed = true;
                        break 'outer;
                    }
                };
                let cur = rows[r].get(&c).copied().unwrap_or(0);
                let next = match cur.checked_sub(delta) {
                    Some(x) => x,
                    None => {
                        overflowed = true;
                        break 'outer;
                    }
                };
                if next == 0 {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    rows[r].insert(c, next);
                    col_rows[c].insert(r);
                }
            }
        }

        // Clearing the pivot row afterwards costs nothing: its column is
        // now zero elsewhere, so those column operations touch no other row.
        for (c, _) in pivot_row {
            col_rows[c].remove(&pr);
        }
        rows[pr].clear();
        row_active[pr] = false;
        col_active[pc] = false;
        unit_rank += 1;
    }

    // Dense arbitrary-precision reduction of whatever is left.
    let live_rows: Vec<usize> = (0..n_rows).filter(|&r| row_active[r]).collect();
    let live_cols: Vec<usize> = (0..n_cols).filter(|&c| col_active[c]).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (&c, &v) in &rows[r] {
            if col_active[c] {
                dense[i][col_pos[&c]] = BigInt::from(v);
            }
        }
    }
    let _ = overflowed; // entries are already exact i128; the dense path takes over either way

    let diagonal = dense_snf(dense);
    let rank = unit_rank + diagonal.iter().filter(|d| !d.is_zero()).count();
    let torsion = diagonal
        .into_iter()
        .filter(|d| d.abs() > BigInt::one())
        .collect();
    SnfOutcome { rank, torsion }
}

/// Textbook Smith normal form on a dense matrix; returns the diagonal in
/// divisibility order (zeros last).
#[allow(clippy::needless_range_loop)]
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, |r| r.len());
    let steps = n_rows.min(n_cols);
    let mut diagonal = Vec::with_capacity(steps);

    for k in 0..steps {
        // Locate the smallest nonzero entry of the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..n_rows {
            for j in k..n_cols {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }

        loop {
            // Reduce column k below the pivot.
            let mut changed = false;
            for i in k + 1..n_rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][k], &a[k][k]);
                if !q.is_zero() {
                    for j in k..n_cols {
                        let sub = &a[k][j] * &q;
                        a[i][j] -= sub;
                    }
                }
                if !a[i][k].is_zero() {
                    a.swap(k, i);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Reduce row k to the right of the pivot.
            for j in k + 1..n_cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[k][j], &a[k][k]);
                if !q.is_zero() {
                    for i in k..n_rows {
                        let sub = &a[i][k] * &q;
                        a[i][j] -= sub;
                    }
                }
                if !a[k][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                    changed = true;
                    break;
                }
            }
            if changed {
                continue;
            }
            // Pivot divides the rest of its row and column; enforce
            // divisibility into the trailing block.
            let mut fixed = true;
            'scan: for i in k + 1..n_rows {
                for j in k + 1..n_cols {
                    if !(&a[i][j] % &a[k][k]).is_zero() {
                        for jj in k..n_cols {
                            let add = a[i][jj].clone();
                            a[k][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[k][k].is_negative() {
            for j in k..n_cols {
                a[k][j] = -a[k][j].clone();
            }
        }
        diagonal.push(a[k][k].clone());
    }
    diagonal
}

/// Quotient rounded to the nearest integer, which keeps remainders at
/// most half the divisor and the reduction loop short.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let double_r: BigInt = &r * 2;
    if double_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rank of the same sparse matrix over the two-element field.
pub fn rank_mod2(n_rows: usize, n_cols: usize, entries: &[(usize, usize, i64)]) -> usize {
    let words = n_cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0u64; words]; n_rows];
    for &(r, c, v) in entries {
        if v % 2 != 0 {
            rows[r][c / 64] ^= 1u64 << (c % 64);
        }
    }
    let mut rank = 0usize;
    let mut pivot_rows: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut row in rows {
        for (lead, prow) in &pivot_rows {
            if row[lead / 64] & (1u64 << (lead % 64)) != 0 {
                for (w, p) in row.iter_mut().zip(prow) {
                    *w ^= p;
                }
            }
        }
        if let Some(lead) = first_set_bit(&row) {
            pivot_rows.push((lead, row));
            rank += 1;
        }
    }
    rank
}

fn first_set_bit(row: &[u64]) -> Option<usize> {
    for (i, w) in row.iter().enumerate() {
        if *w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}
