//! Dense exact-rational matrices, just enough linear algebra for fixed
//! subspaces, mark inversion and determinant signs. No floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = QMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, c: &Rat) -> QMat {
        QMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// In-place reduced row echelon form; returns the rank.
    pub fn rref(&mut self) -> usize {
        let mut rank = 0;
        for j in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&i| !self[(i, j)].is_zero()) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            let inv = self[(rank, j)].recip();
            for k in 0..self.cols {
                let v = &self[(rank, k)] * &inv;
                self[(rank, k)] = v;
            }
            for i in 0..self.rows {
                if i == rank || self[(i, j)].is_zero() {
                    continue;
                }
                let factor = self[(i, j)].clone();
                for k in 0..self.cols {
                    let v = &self[(i, k)] - &(&self[(rank, k)] * &factor);
                    self[(i, k)] = v;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.clone().rref()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    /// Basis of the column space, as columns of the returned matrix.
    pub fn column_space(&self) -> QMat {
        let mut red = self.clone();
        red.rref();
        // pivot columns of the reduced form index independent columns of self
        let mut pivots = Vec::new();
        let mut row = 0;
        for j in 0..self.cols {
            if row < red.rows && red[(row, j)].is_one() {
                pivots.push(j);
                row += 1;
            }
        }
        QMat::from_fn(self.rows, pivots.len(), |i, k| self[(i, pivots[k])].clone())
    }

    /// Solves `self * x = b`, returning `None` when `b` is outside the column
    /// span. When the columns are independent the solution is unique.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut aug = QMat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        aug.rref();
        let mut x = vec![Rat::zero(); self.cols];
        for i in 0..self.rows {
            let lead = (0..self.cols + 1).find(|&j| !aug[(i, j)].is_zero());
            match lead {
                Some(j) if j == self.cols => return None, // inconsistent row
                Some(j) => x[j] = aug[(i, self.cols)].clone(),
                None => {}
            }
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Sign of `det(m)` for a square rational matrix: +1, 0 or -1.
///
/// Rows are first cleared of denominators (a positive scaling, so the sign is
/// unchanged), then the integer matrix goes through fraction-free Bareiss
/// elimination, which keeps intermediate entries as genuine minors instead of
/// letting fractions blow up.
pub fn det_sign(m: &QMat) -> Result<i32> {
    if !m.is_square() {
        return Err(Error::validation("determinant of a non-square matrix"));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(1); // det of the empty matrix is 1
    }
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, v| num_integer::lcm(acc, v.denom().clone()));
        a.push(
            m.row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact division (Bareiss)
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let last = &a[n - 1][n - 1];
    Ok(if last.is_zero() {
        0
    } else if last.is_positive() {
        sign
    } else {
        -sign
    })
}
