//! Exact rational linear algebra: rank and linear solves by Gaussian
//! elimination over the rationals.  Dimension checks must be certain, so
//! nothing here touches floating point.

use crate::poly::{NCPoly, Rat};
use crate::word::Word;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Row-reduce in place; returns the rank.
pub fn row_reduce(mat: &mut Vec<Vec<Rat>>) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(p) = pivot else { continue };
        mat.swap(rank, p);
        let inv = {
            let v = &mat[rank][col];
            Rat::new(v.denom().clone(), v.numer().clone())
        };
        for v in mat[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (a, b) in row.iter_mut().zip(pivot_row.iter()) {
                *a = &*a - &(&factor * b);
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Exact rank of the coefficient matrix of a family of polynomials.
pub fn rank_of_polys(polys: &[NCPoly]) -> usize {
    let mut columns: BTreeMap<Word, usize> = BTreeMap::new();
    for p in polys {
        for (w, _) in p.terms() {
            let next = columns.len();
            columns.entry(w.clone()).or_insert(next);
        }
    }
    if columns.is_empty() {
        return 0;
    }
    let mut mat: Vec<Vec<Rat>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut row = vec![Rat::zero(); columns.len()];
            for (w, c) in p.terms() {
                row[columns[w]] = c.clone();
            }
            row
        })
        .collect();
    row_reduce(&mut mat)
}

/// Solve A·x = b exactly (A given row-wise, any shape).  Returns None when
/// the system is inconsistent; free variables are set to zero.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    row_reduce(&mut aug);
    let mut x = vec![Rat::zero(); cols];
    for row in &aug {
        let lead = row[..cols].iter().position(|v| !v.is_zero());
        match lead {
            Some(col) => {
                // row is normalized: row[col] == 1 and col is cleared elsewhere
                x[col] = row[cols].clone();
            }
            None => {
                if !row[cols].is_zero() {
                    return None;
                }
            }
        }
    }
    // guard against free variables interacting with pivots
    for (row, rhs) in a.iter().zip(b.iter()) {
        let mut acc = Rat::zero();
        for (coef, xi) in row.iter().zip(x.iter()) {
            acc += coef * xi;
        }
        if &acc != rhs {
            return None;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};
    use crate::text::parse_ncpoly;

    fn p(s: &str) -> NCPoly {
        parse_ncpoly(s).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_of_polys(&[p("x"), p("y")]), 2);
        assert_eq!(rank_of_polys(&[p("xy"), p("yx"), p("xy + yx")]), 2);
        assert_eq!(rank_of_polys(&[NCPoly::zero()]), 0);
    }

    #[test]
    fn solve_square() {
        // x + 2y = 5, 3x - y = 1  =>  x = 1, y = 2
        let a = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(-1)],
        ];
        let b = vec![rat_int(5), rat_int(1)];
        assert_eq!(solve(&a, &b).unwrap(), vec![rat_int(1), rat_int(2)]);
    }

    #[test]
    fn solve_overdetermined_consistent() {
        let a = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        let b = vec![rat(1, 2), rat(1, 3), rat(5, 6)];
        assert_eq!(solve(&a, &b).unwrap(), vec![rat(1, 2), rat(1, 3)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![vec![rat_int(1)], vec![rat_int(1)]];
        let b = vec![rat_int(1), rat_int(2)];
        assert!(solve(&a, &b).is_none());
    }
}
