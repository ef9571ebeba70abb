//! Logarithmic-time single-term evaluation.
//!
//! Two independent routes, both exact:
//!
//! * [`matrix_pow_term`] raises the companion matrix to a power.
//! * [`kitamasa_term`] reduces `x^n` modulo the characteristic polynomial and
//!   pairs the residue with the initial terms.
//!
//! Both clear denominators up front so the squaring loops run over plain
//! integers; a single rational division happens at the end. Negative indices
//! go through [`SequenceSpec::reversed`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::recurrence::SequenceSpec;

/// lcm of the coefficient denominators.
fn common_denominator(coefficients: &[Rational]) -> BigInt {
    coefficients
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Companion matrix of the recurrence: first row `[r_1, ..., r_m]`, ones on
/// the subdiagonal. It maps `[V(n-1), ..., V(n-m)]` to `[V(n), ..., V(n-m+1)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionMatrix {
    matrix: Matrix,
}

impl CompanionMatrix {
    pub fn new(spec: &SequenceSpec) -> Self {
        let m = spec.order();
        let matrix = Matrix::from_fn(m, |i, j| {
            if i == 0 {
                spec.coefficients()[j].clone()
            } else if j + 1 == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        CompanionMatrix { matrix }
    }

    pub fn order(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `M^k`, computed as `(D M)^k / D^k` with `D` the common denominator.
    pub fn pow(&self, k: u64) -> Matrix {
        let m = self.order();
        let first_row = self.matrix.row(0);
        let denom = common_denominator(first_row);
        let mut scaled = IntMatrix::identity(m);
        for (j, r) in first_row.iter().enumerate() {
            scaled.set(0, j, r.numer() * (&denom / r.denom()));
        }
        for i in 1..m {
            scaled.set(i, i, BigInt::zero());
            scaled.set(i, i - 1, denom.clone());
        }
        let power = scaled.pow(k);
        let denom_k = num_traits::pow(denom, k as usize);
        Matrix::from_fn(m, |i, j| {
            Rational::new(power.get(i, j).clone(), denom_k.clone()).expect("positive denominator")
        })
    }
}

/// Row-major integer matrix used only inside the powering loop.
#[derive(Clone)]
struct IntMatrix {
    size: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    fn identity(size: usize) -> Self {
        let mut data = vec![BigInt::zero(); size * size];
        for i in 0..size {
            data[i * size + i] = BigInt::one();
        }
        IntMatrix { size, data }
    }

    fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.size + j] = v;
    }

    fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.size;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                data.push(acc);
            }
        }
        IntMatrix { size: n, data }
    }

    /// Most-significant bit first square-and-multiply.
    fn pow(&self, k: u64) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.size);
        for bit in (0..u64::BITS - k.leading_zeros()).rev() {
            acc = acc.mul(&acc);
            if (k >> bit) & 1 == 1 {
                acc = acc.mul(self);
            }
        }
        acc
    }
}

/// `x^m - r_1 x^(m-1) - ... - r_m`, stored lowest degree first, so
/// `coefficients()[m] == 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coefficients: Vec<Rational>,
}

impl CharPoly {
    pub fn new(spec: &SequenceSpec) -> Self {
        let mut coefficients: Vec<Rational> = spec.coefficients().iter().rev().map(|r| -r).collect();
        coefficients.push(Rational::one());
        CharPoly { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Residue of `x^k` modulo this polynomial, lowest degree first
    /// (length = degree).
    pub fn x_pow_mod(&self, k: u64) -> Vec<Rational> {
        let m = self.degree();
        // x = y / D turns the monic rational polynomial into the monic
        // integer polynomial y^m - sum_i r_i D^i y^(m-i).
        let recurrence: Vec<Rational> = (1..=m).map(|i| -&self.coefficients[m - i]).collect();
        let denom = common_denominator(&recurrence);
        let mut denom_pow = BigInt::one();
        let mut folded = Vec::with_capacity(m);
        for r in &recurrence {
            denom_pow *= &denom;
            folded.push(r.numer() * (&denom_pow / r.denom()));
        }
        let residue = IntPolyMod { folded: &folded }.x_pow(k);
        // y^k = sum a_j y^j  =>  x^k = sum a_j D^j x^j / D^k
        let denom_k = num_traits::pow(denom.clone(), k as usize);
        let mut scale = BigInt::one();
        residue
            .into_iter()
            .map(|a| {
                let term = Rational::new(a * &scale, denom_k.clone()).expect("positive denominator");
                scale *= &denom;
                term
            })
            .collect()
    }
}

/// Arithmetic in `Z[y] / (y^m - sum_i s_i y^(m-i))`.
struct IntPolyMod<'a> {
    /// `[s_1, ..., s_m]`
    folded: &'a [BigInt],
}

impl IntPolyMod<'_> {
    fn order(&self) -> usize {
        self.folded.len()
    }

    /// Schoolbook reduction from the top degree down.
    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let m = self.order();
        while p.len() > m {
            let top = p.pop().expect("non-empty");
            if top.is_zero() {
                continue;
            }
            let d = p.len();
            for (i, s) in self.folded.iter().enumerate() {
                if !s.is_zero() {
                    p[d - 1 - i] += &top * s;
                }
            }
        }
        p.resize(m, BigInt::zero());
        p
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    fn times_y(&self, a: Vec<BigInt>) -> Vec<BigInt> {
        let mut shifted = Vec::with_capacity(a.len() + 1);
        shifted.push(BigInt::zero());
        shifted.extend(a);
        self.reduce(shifted)
    }

    fn x_pow(&self, k: u64) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.order()];
        acc[0] = BigInt::one();
        for bit in (0..u64::BITS - k.leading_zeros()).rev() {
            acc = self.mul(&acc, &acc);
            if (k >> bit) & 1 == 1 {
                acc = self.times_y(acc);
            }
        }
        acc
    }
}

/// `V(n)` by companion-matrix exponentiation.
pub fn matrix_pow_term(spec: &SequenceSpec, n: i64) -> Result<Rational> {
    if n < 0 {
        spec.require_reversible(n)?;
        return matrix_pow_term(&spec.reversed()?, -n);
    }
    let m = spec.order();
    if (n as usize) < m {
        return Ok(spec.initials()[n as usize].clone());
    }
    // state [V(m-1), ..., V(0)] advanced n-m+1 steps gives [V(n), ...]
    let state: Vec<Rational> = spec.initials().iter().rev().cloned().collect();
    let power = CompanionMatrix::new(spec).pow(n as u64 - m as u64 + 1);
    let mut acc = Rational::zero();
    for (a, b) in power.row(0).iter().zip(&state) {
        crate::recurrence::mul_add(&mut acc, a, b);
    }
    Ok(acc)
}

/// `V(n)` by reducing `x^n` modulo the characteristic polynomial.
pub fn kitamasa_term(spec: &SequenceSpec, n: i64) -> Result<Rational> {
    if n < 0 {
        spec.require_reversible(n)?;
        return kitamasa_term(&spec.reversed()?, -n);
    }
    let residue = CharPoly::new(spec).x_pow_mod(n as u64);
    let mut acc = Rational::zero();
    for (a, c) in residue.iter().zip(spec.initials()) {
        crate::recurrence::mul_add(&mut acc, a, c);
    }
    Ok(acc)
}

/// Selects an evaluation strategy for a single term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Matrix,
    Kitamasa,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Naive, Algorithm::Matrix, Algorithm::Kitamasa];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Matrix => "matrix",
            Algorithm::Kitamasa => "kitamasa",
        }
    }

    pub fn term(self, spec: &SequenceSpec, n: i64) -> Result<Rational> {
        match self {
            Algorithm::Naive => spec.term(n),
            Algorithm::Matrix => matrix_pow_term(spec, n),
            Algorithm::Kitamasa => kitamasa_term(spec, n),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?} (expected naive, matrix or kitamasa)"))
    }
}
