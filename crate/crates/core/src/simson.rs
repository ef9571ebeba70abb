//! Hankel determinants of consecutive terms and the generalized Simson
//! (Cassini) identity.
//!
//! For a recurrence of order `m`, let `f(n)` be the determinant of the
//! `m x m` window with entry `(i, j) = V(n + m - 1 - i - j)`. Then for every
//! integer `n`
//!
//! ```text
//! f(n) = y(n) * r_m^n * f(0),   y(n) = 1 if m is odd, (-1)^n if m is even.
//! ```
//!
//! For Fibonacci this is `F(n+1) F(n-1) - F(n)^2 = (-1)^n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::recurrence::{SequenceSpec, TermCache};

/// Exact determinant of a square rational matrix (fraction-free Bareiss).
pub fn det(matrix: &Matrix) -> Rational {
    matrix.det()
}

/// The `m x m` Hankel matrix whose determinant is `f(center)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelWindow {
    center: i64,
    entries: Matrix,
}

impl HankelWindow {
    fn from_cache(cache: &mut TermCache, n: i64) -> Result<Self> {
        let m = cache.spec().order() as i64;
        // oldest first: V(n-m+1) ..= V(n+m-1)
        let terms = cache.range(n - m + 1, n + m - 1)?;
        let top = terms.len() - 1;
        let entries = Matrix::from_fn(m as usize, |i, j| terms[top - i - j].clone());
        Ok(HankelWindow { center: n, entries })
    }

    pub fn order(&self) -> usize {
        self.entries.size()
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn det(&self) -> Rational {
        self.entries.det()
    }
}

pub fn hankel_window(spec: &SequenceSpec, n: i64) -> Result<HankelWindow> {
    let m = spec.order() as i64;
    spec.require_reversible(n - m + 1)?;
    HankelWindow::from_cache(&mut TermCache::new(spec.clone()), n)
}

/// `f(n)`, the determinant side of the identity.
pub fn simson_lhs(spec: &SequenceSpec, n: i64) -> Result<Rational> {
    Ok(hankel_window(spec, n)?.det())
}

/// `y(n) r_m^n f(0)`, the closed-form side of the identity.
pub fn simson_rhs(spec: &SequenceSpec, n: i64) -> Result<Rational> {
    closed_form(spec)?.evaluate(n)
}

/// `f(n) = constant * base^n`, times `(-1)^n` when `alternating`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub constant: Rational,
    pub base: Rational,
    pub alternating: bool,
}

impl ClosedForm {
    pub fn evaluate(&self, n: i64) -> Result<Rational> {
        if self.constant.is_zero() {
            return Ok(Rational::zero());
        }
        let value = &self.constant * &self.base.pow(n)?;
        Ok(if self.alternating {
            value.with_parity_sign(n)
        } else {
            value
        })
    }

    /// Factor relating consecutive values: `f(n+1) = ratio * f(n)`.
    pub fn ratio(&self) -> Rational {
        if self.alternating {
            -&self.base
        } else {
            self.base.clone()
        }
    }
}

/// `f(0)` from the determinant, `r_m` as base, alternation iff `m` is even.
pub fn closed_form(spec: &SequenceSpec) -> Result<ClosedForm> {
    let constant = simson_lhs(spec, 0)?;
    Ok(ClosedForm {
        constant,
        base: spec.last_coefficient().clone(),
        alternating: spec.order().is_multiple_of(2),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimsonRow {
    pub n: i64,
    pub lhs: Rational,
    pub rhs: Rational,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimsonReport {
    pub spec_id: Option<String>,
    pub lo: i64,
    pub hi: i64,
    pub pass: bool,
    pub rows: Vec<SimsonRow>,
}

impl SimsonReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &SimsonRow> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

/// Compares `f(n)` with `y(n) r_m^n f(0)` for every `n` in `lo..=hi`.
///
/// `f(0)` always comes from the determinant, never from stored metadata.
pub fn verify_simson(spec: &SequenceSpec, lo: i64, hi: i64) -> Result<SimsonReport> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let m = spec.order() as i64;
    spec.require_reversible(lo.min(0) - m + 1)?;
    let mut cache = TermCache::new(spec.clone());
    let form = ClosedForm {
        constant: HankelWindow::from_cache(&mut cache, 0)?.det(),
        base: spec.last_coefficient().clone(),
        alternating: m % 2 == 0,
    };
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let lhs = HankelWindow::from_cache(&mut cache, n)?.det();
        let rhs = form.evaluate(n)?;
        let matches = lhs == rhs;
        rows.push(SimsonRow { n, lhs, rhs, matches });
    }
    Ok(SimsonReport {
        spec_id: spec.id().map(str::to_owned),
        lo,
        hi,
        pass: rows.iter().all(|r| r.matches),
        rows,
    })
}

/// Checks `f(n+1) = (-1)^(m+1) r_m f(n)` for `n` in `lo..hi`, which holds
/// even when `f(0) = 0`. Returns the first `n` where it fails.
pub fn verify_ratio(spec: &SequenceSpec, lo: i64, hi: i64) -> Result<Option<i64>> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let m = spec.order() as i64;
    spec.require_reversible(lo.min(0) - m + 1)?;
    let ratio = if m % 2 == 0 {
        -spec.last_coefficient()
    } else {
        spec.last_coefficient().clone()
    };
    let mut cache = TermCache::new(spec.clone());
    let mut prev = HankelWindow::from_cache(&mut cache, lo)?.det();
    for n in lo..hi {
        let next = HankelWindow::from_cache(&mut cache, n + 1)?.det();
        if next != &prev * &ratio {
            return Ok(Some(n));
        }
        prev = next;
    }
    Ok(None)
}
