//! Exact Gauss-Jordan elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

struct Reduced {
    /// Row-reduced augmented rows, each tagged with its original index.
    rows: Vec<(usize, Vec<BigRational>)>,
    pivots: Vec<usize>,
}

fn reduce(mut rows: Vec<(usize, Vec<BigRational>)>, cols: usize) -> Reduced {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].1[c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].1[c].recip();
        for v in rows[r].1.iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].1.clone();
        for (i, (_, row)) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Reduced { rows, pivots }
}

pub fn rank(matrix: &[Vec<BigRational>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let rows = matrix.iter().cloned().enumerate().collect();
    reduce(rows, cols).pivots.len()
}

/// Solves `A x = b` for a unique `x`. Surplus equations must be satisfied exactly.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let rows: Vec<(usize, Vec<BigRational>)> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            (i, r)
        })
        .collect();
    let red = reduce(rows, cols);
    let rank = red.pivots.len();
    for (orig, row) in red.rows.iter().skip(rank) {
        if !row[cols].is_zero() {
            return Err(Error::Inconsistent { row: *orig });
        }
    }
    if rank < cols {
        return Err(Error::RankDeficient { rank, needed: cols });
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in red.pivots.iter().enumerate() {
        x[c] = red.rows[i].1[cols].clone();
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn solves_square_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn surplus_rows_checked() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(solve(&a, &[int(1), int(2), int(3)]).is_ok());
        assert_eq!(
            solve(&a, &[int(1), int(2), int(4)]),
            Err(Error::Inconsistent { row: 2 })
        );
    }

    #[test]
    fn rank_deficiency_reported() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&a), 1);
        assert_eq!(
            solve(&a, &[int(1), int(2)]),
            Err(Error::RankDeficient { rank: 1, needed: 2 })
        );
    }
}
