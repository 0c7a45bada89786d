//! Exact dense linear algebra over [`ExactScalar`]: row reduction, rank,
//! kernel and determinant.

use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, FieldDescriptor};

pub type Matrix = Vec<Vec<ExactScalar>>;

/// Reduce `m` in place to reduced row echelon form and return the pivot
/// columns. Among nonzero candidates the pivot of smallest height is chosen
/// to keep intermediate fractions short.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].height())
        else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("nonzero pivot");
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..nrows {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..ncols {
                let t = &factor * &m[row][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Kernel of `m` (acting on column vectors of length `ncols`) in canonical
/// form: the returned vectors are the rows of a reduced echelon matrix, so the
/// first nonzero entry of each is 1 and pivot entries are zero elsewhere.
pub fn nullspace(m: &Matrix, ncols: usize, field: FieldDescriptor) -> Vec<Vec<ExactScalar>> {
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Matrix = free
        .iter()
        .map(|&fcol| {
            let mut v = vec![ExactScalar::zero_in(field); ncols];
            v[fcol] = ExactScalar::one_in(field);
            for (i, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -&work[i][fcol];
            }
            v
        })
        .collect();
    canonicalize(&mut basis);
    basis
}

/// Replace a spanning set by the nonzero rows of its reduced echelon form.
pub fn canonicalize(rows: &mut Matrix) {
    let r = rref(rows);
    rows.truncate(r.len());
}

pub fn determinant(m: &Matrix) -> Result<ExactScalar> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
    }
    let field = m
        .iter()
        .flatten()
        .map(|e| e.field())
        .next()
        .unwrap_or(FieldDescriptor::Rational);
    let mut a = m.clone();
    let mut det = ExactScalar::one_in(field);
    for col in 0..n {
        let Some(p) = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].height())
        else {
            return Ok(ExactScalar::zero_in(field));
        };
        if p != col {
            a.swap(p, col);
            det = -&det;
        }
        det = &det * &a[col][col];
        let inv = a[col][col].inverse()?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let t = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &t;
            }
        }
    }
    Ok(det)
}

/// `m · v`.
pub fn mat_vec(m: &Matrix, v: &[ExactScalar], field: FieldDescriptor) -> Vec<ExactScalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(ExactScalar::zero_in(field), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}
