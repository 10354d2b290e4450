//! Dense exact linear algebra over the rationals.
//!
//! Rank and pivot selection use fraction-free (Bareiss) elimination on
//! integer-scaled rows. Solving and kernels use Gauss-Jordan elimination over
//! [`Scalar`]. Both scan columns left to right and take the first remaining
//! row (in original order) with a nonzero entry as pivot, so the pivot
//! columns are always the leftmost maximal independent column set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::mpoly::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::mpoly::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_rows(
            cols.len(),
            (0..self.rows)
                .map(|i| cols.iter().map(|&j| self[(i, j)].clone()).collect())
                .collect(),
        )
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(self.cols, rows.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `v^T A`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Scalar::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += vi * a;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pivot {
    pub row: usize,
    pub col: usize,
}

/// Rank together with the pivot trail of the elimination that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub rank: usize,
    pub pivots: Vec<Pivot>,
}

impl RankProfile {
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p.col).collect()
    }

    pub fn pivot_rows(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p.row).collect()
    }
}

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect()
}

/// Rank by fraction-free elimination.
pub fn exact_rank(m: &Matrix) -> RankProfile {
    let mut a = integer_rows(m);
    let mut order: Vec<usize> = (0..m.rows()).collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(i) = (r..m.rows()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a[r..=i].rotate_right(1);
        order[r..=i].rotate_right(1);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            if lead.is_zero() {
                for v in row[c + 1..].iter_mut() {
                    *v = &*v * &prow[c] / &prev;
                }
                continue;
            }
            for j in c + 1..m.cols() {
                row[j] = (&prow[c] * &row[j] - &lead * &prow[j]) / &prev;
            }
        }
        prev = prow[c].clone();
        pivots.push(Pivot { row: order[r], col: c });
        r += 1;
    }
    RankProfile { rank: r, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    exact_rank(m).rank
}

pub fn is_nonsingular(m: &Matrix) -> bool {
    m.rows() == m.cols() && rank(m) == m.rows()
}

/// Rows chosen greedily top to bottom, keeping each row that is independent
/// of the rows kept before it.
pub fn greedy_rows(m: &Matrix) -> Vec<usize> {
    exact_rank(&m.transpose()).pivot_columns()
}

/// Reduced row echelon form, optionally with the row operations recorded.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Pivot column of each nonzero row of `reduced`.
    pub pivot_cols: Vec<usize>,
    /// Nonzero rows of the reduced matrix, pivot entries equal to one.
    pub reduced: Vec<Vec<Scalar>>,
    /// `reduced[k] = sum_i transform[k][i] * original_row[i]`; empty
    /// unless requested.
    pub transform: Vec<Vec<Scalar>>,
}

pub fn row_reduce(m: &Matrix, with_transform: bool) -> Echelon {
    let rows = m.rows();
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut t: Vec<Vec<Scalar>> = if with_transform {
        (0..rows)
            .map(|i| {
                let mut e = vec![Scalar::zero(); rows];
                e[i] = Scalar::one();
                e
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a[r..=i].rotate_right(1);
        if with_transform {
            t[r..=i].rotate_right(1);
        }
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        if with_transform {
            for v in t[r].iter_mut() {
                *v *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        let pivot_t = if with_transform { t[r].clone() } else { Vec::new() };
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for (x, p) in a[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &f * p;
            }
            if with_transform {
                for (x, p) in t[i].iter_mut().zip(&pivot_t) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    a.truncate(r);
    t.truncate(r);
    Echelon {
        pivot_cols,
        reduced: a,
        transform: t,
    }
}

/// Some solution of `A x = b`, free variables set to zero.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows(), b.len());
    let mut aug = Matrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols())] = b[i].clone();
    }
    let ech = row_reduce(&aug, false);
    if ech.pivot_cols.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); a.cols()];
    for (row, &c) in ech.reduced.iter().zip(&ech.pivot_cols) {
        x[c] = row[a.cols()].clone();
    }
    Some(x)
}

/// A nonzero `x` with `A x = 0`, if one exists.
pub fn kernel_vector(a: &Matrix) -> Option<Vec<Scalar>> {
    let ech = row_reduce(a, false);
    let free = (0..a.cols()).find(|c| !ech.pivot_cols.contains(c))?;
    let mut x = vec![Scalar::zero(); a.cols()];
    x[free] = Scalar::one();
    for (row, &c) in ech.reduced.iter().zip(&ech.pivot_cols) {
        x[c] = -row[free].clone();
    }
    Some(x)
}

/// A basis of the right kernel, one vector per free column.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let ech = row_reduce(a, false);
    (0..a.cols())
        .filter(|c| !ech.pivot_cols.contains(c))
        .map(|free| {
            let mut x = vec![Scalar::zero(); a.cols()];
            x[free] = Scalar::one();
            for (row, &c) in ech.reduced.iter().zip(&ech.pivot_cols) {
                x[c] = -row[free].clone();
            }
            x
        })
        .collect()
}

/// A nonzero `y` with `y^T A = 0`, if one exists.
pub fn left_kernel_vector(a: &Matrix) -> Option<Vec<Scalar>> {
    kernel_vector(&a.transpose())
}
