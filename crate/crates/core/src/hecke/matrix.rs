//! Dense and column-sparse exact matrices.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use super::scalar::{format_rational, Scalar};

/// A dense `rows × cols` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
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
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Rank by fraction-free (Bareiss) elimination over the integers.
    ///
    /// Each row is first cleared of denominators, which does not change the rank.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integral_row(self.row(i))).collect();
        bareiss_rank(&mut a, self.cols)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &factor * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.rows = r;
        m.data.truncate(r * m.cols);
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// JSON array of rows of `"num/den"` strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        self.row(i)
                            .iter()
                            .map(|x| Value::String(format_rational(x)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

fn integral_row(row: &[Scalar]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// A square matrix stored by columns, each column a sorted map `row → value`.
///
/// The Hecke generators have at most two entries per column, so products of
/// a few of them stay sparse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    n: usize,
    cols: Vec<BTreeMap<usize, Scalar>>,
}

impl SparseMatrix {
    pub fn zeros(n: usize) -> Self {
        SparseMatrix {
            n,
            cols: vec![BTreeMap::new(); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix::diagonal((0..n).map(|_| Scalar::one()).collect())
    }

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = SparseMatrix::zeros(n);
        for (i, v) in entries.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Zero values remove the entry.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        if v.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, v);
        }
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, Scalar> {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zeros(self.n);
        }
        SparseMatrix {
            n: self.n,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(&i, v)| (i, v * c)).collect())
                .collect(),
        }
    }

    /// `self + c·I`.
    pub fn shift_diagonal(&self, c: &Scalar) -> SparseMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Diagonal entries, if the matrix is diagonal.
    pub fn as_diagonal(&self) -> Option<Vec<Scalar>> {
        self.cols
            .iter()
            .enumerate()
            .map(|(j, col)| match col.len() {
                0 => Some(Scalar::zero()),
                1 => col.get(&j).cloned(),
                _ => None,
            })
            .collect()
    }

    /// `self · v` for a sparse vector `v`.
    pub fn apply(&self, v: &BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&j, x) in v {
            for (&i, a) in &self.cols[j] {
                let e = out.entry(i).or_insert_with(Scalar::zero);
                *e += a * x;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, v) in col {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        assert_eq!(m.rows(), m.cols(), "square matrices only");
        let mut out = SparseMatrix::zeros(m.rows());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, m.get(i, j).clone());
            }
        }
        out
    }
}

impl<'a> Mul<&'a SparseMatrix> for &'a SparseMatrix {
    type Output = SparseMatrix;
    fn mul(self, rhs: &'a SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SparseMatrix {
            n: self.n,
            cols: rhs.cols.iter().map(|col| self.apply(col)).collect(),
        }
    }
}

impl<'a> Add<&'a SparseMatrix> for &'a SparseMatrix {
    type Output = SparseMatrix;
    fn add(self, rhs: &'a SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (j, col) in rhs.cols.iter().enumerate() {
            for (&i, v) in col {
                let s = out.get(i, j) + v;
                out.set(i, j, s);
            }
        }
        out
    }
}

impl<'a> Sub<&'a SparseMatrix> for &'a SparseMatrix {
    type Output = SparseMatrix;
    fn sub(self, rhs: &'a SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (j, col) in rhs.cols.iter().enumerate() {
            for (&i, v) in col {
                let s = out.get(i, j) - v;
                out.set(i, j, s);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::scalar::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 2]]).rank(), 2);
        let half = Scalar::new(1.into(), 2.into());
        let frac = Matrix::from_rows(vec![vec![half.clone(), int(1)], vec![int(1), int(2)]]);
        assert_eq!(frac.rank(), 1);
    }

    #[test]
    fn rref_matches_rank() {
        let a = m(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r.rows(), a.rank());
        assert_eq!(r.row(0), &[int(1), int(2), int(0)]);
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let a = m(&[&[1, 2, 0], &[0, 0, 3], &[4, 0, 5]]);
        let b = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!((&sa * &sb).to_dense(), &a * &b);
        assert_eq!((&sa + &sb).to_dense(), &a + &b);
        assert_eq!((&sa - &sb).to_dense(), &a - &b);
        assert_eq!(sa.trace(), a.trace());
        assert_eq!((&sa - &sa).nnz(), 0);
    }

    #[test]
    fn json_strings() {
        let half = Scalar::new((-1).into(), 2.into());
        let a = Matrix::from_rows(vec![vec![half, int(3)]]);
        assert_eq!(a.to_json(), serde_json::json!([["-1/2", "3"]]));
    }
}
