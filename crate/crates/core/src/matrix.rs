//! Small dense square matrices over [`Rational`].

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    size: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(size: usize) -> Self {
        Matrix {
            size,
            data: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(f(i, j));
            }
        }
        Matrix { size, data }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        Matrix {
            size,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| Rational::from(rows[i][j]))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.size + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.size.max(1))
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.rows().map(<[Rational]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.size {
            self.data.swap(a * self.size + j, b * self.size + j);
        }
    }

    /// `self * v`
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.size);
        self.rows()
            .map(|row| {
                let mut acc = Rational::zero();
                for (a, b) in row.iter().zip(v) {
                    crate::recurrence::mul_add(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    /// Exact determinant.
    ///
    /// Each row is scaled by the lcm of its denominators so the matrix becomes
    /// integral, Bareiss fraction-free elimination runs on the integers, and
    /// the product of the row scales is divided out at the end.
    pub fn det(&self) -> Rational {
        let n = self.size;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.rows() {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.push(
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect(),
            );
            scale *= lcm;
        }
        let Some(det) = bareiss(&mut a) else {
            return Rational::zero();
        };
        Rational::new(det, scale).expect("row scales are positive")
    }
}

/// Fraction-free elimination in place; `None` for a singular matrix.
/// Every division `/ prev` is exact (Sylvester's identity).
fn bareiss(a: &mut [Vec<BigInt>]) -> Option<BigInt> {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, pivot);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = if prev.is_one() { t } else { t / &prev };
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if negate { -det } else { det })
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        Matrix::from_fn(n, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..n {
                crate::recurrence::mul_add(&mut acc, self.get(i, k), rhs.get(k, j));
            }
            acc
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
