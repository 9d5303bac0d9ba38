//! Exact dense linear algebra over `Q(s,c)`, enough for the quotient oracle
//! and the Macdonald eigenproblem: row reduction, rank, nullspace, and
//! residual reduction against a row basis.

use crate::scalar::Scalar;

/// Reduce `rows` in place to reduced row echelon form; returns the pivot
/// column of each nonzero row, in order. Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        let inv = rows[next_row][col].inv().expect("pivot is nonzero");
        for c in col..ncols {
            rows[next_row][c] = rows[next_row][c].mul_ref(&inv);
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = rows[next_row][c].mul_ref(&factor);
                    rows[r][c] = rows[r][c].sub_ref(&delta);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// Reduce `v` against an RREF basis, returning the residual.
pub fn reduce_against(basis: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        if out[p].is_zero() {
            continue;
        }
        let factor = out[p].clone();
        for (c, entry) in row.iter().enumerate() {
            if !entry.is_zero() {
                out[c] = out[c].sub_ref(&entry.mul_ref(&factor));
            }
        }
    }
    out
}

/// A basis of the right nullspace `{v : M v = 0}` of an `m x n` matrix.
pub fn nullspace(matrix: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let mut free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.sort_unstable();
    let mut out = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Scalar::zero(); ncols];
        v[fc] = Scalar::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            // pivot entry is 1: x_p = -row[fc] * x_fc
            v[p] = row[fc].neg_ref();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn si(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_rref() {
        let mut rows = vec![
            vec![si(1), si(2), si(3)],
            vec![si(2), si(4), si(6)],
            vec![si(0), si(1), si(1)],
        ];
        let pivots = rref(&mut rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows.len(), 2);
    }

    #[test]
    fn residual_reduction() {
        let mut rows = vec![vec![si(1), si(0), si(-1)], vec![si(0), si(1), si(2)]];
        let pivots = rref(&mut rows);
        let r = reduce_against(&rows, &pivots, &[si(3), si(1), si(0)]);
        assert!(r[0].is_zero() && r[1].is_zero());
        assert_eq!(r[2], si(1));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // matrix (1 1; s s) over Q(s,c) has kernel spanned by (1, -1)
        let m = vec![
            vec![si(1), si(1)],
            vec![Scalar::s(), Scalar::s()],
        ];
        let ns = nullspace(&m, 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(v[0].add_ref(&v[1]), Scalar::zero());
    }
}
