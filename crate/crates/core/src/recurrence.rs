//! Constant-coefficient linear recurrences of order `m`:
//!
//! ```text
//! V(n) = r_1 V(n-1) + r_2 V(n-2) + ... + r_m V(n-m)
//! ```
//!
//! with initial terms anchored at indices `0..m`. When `r_m != 0` the
//! recurrence is solved for its oldest term and runs backwards, so every
//! integer index has a value.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct SequenceSpec {
    coefficients: Vec<Rational>,
    initials: Vec<Rational>,
    id: Option<String>,
}

/// Wire form: `{"order": m, "coefficients": [...], "initials": [...], "id": ...}`.
#[derive(Serialize, Deserialize)]
struct SpecRepr {
    order: usize,
    coefficients: Vec<Rational>,
    initials: Vec<Rational>,
    id: Option<String>,
}

impl From<SequenceSpec> for SpecRepr {
    fn from(spec: SequenceSpec) -> Self {
        SpecRepr {
            order: spec.order(),
            coefficients: spec.coefficients,
            initials: spec.initials,
            id: spec.id,
        }
    }
}

impl TryFrom<SpecRepr> for SequenceSpec {
    type Error = Error;

    fn try_from(repr: SpecRepr) -> Result<Self> {
        let spec = SequenceSpec::new(repr.coefficients, repr.initials, repr.id)?;
        if spec.order() != repr.order {
            return Err(Error::Data(format!(
                "declared order {} but {} coefficients given",
                repr.order,
                spec.order()
            )));
        }
        Ok(spec)
    }
}

/// `acc += coeff * value`, skipping the multiply for 0 and 1.
pub(crate) fn mul_add(acc: &mut Rational, coeff: &Rational, value: &Rational) {
    if coeff.is_zero() || value.is_zero() {
        return;
    }
    if coeff.is_one() {
        *acc += value;
    } else {
        *acc += &(coeff * value);
    }
}

impl SequenceSpec {
    pub fn new(
        coefficients: Vec<Rational>,
        initials: Vec<Rational>,
        id: Option<String>,
    ) -> Result<Self> {
        if coefficients.len() != initials.len() {
            return Err(Error::LengthMismatch {
                coefficients: coefficients.len(),
                initials: initials.len(),
            });
        }
        if coefficients.len() < 2 {
            return Err(Error::OrderTooSmall(coefficients.len()));
        }
        Ok(SequenceSpec {
            coefficients,
            initials,
            id,
        })
    }

    /// Shorthand for small integer data, mostly useful in tests.
    pub fn from_ints(coefficients: &[i64], initials: &[i64], id: Option<&str>) -> Result<Self> {
        Self::new(
            coefficients.iter().map(|&c| Rational::from(c)).collect(),
            initials.iter().map(|&c| Rational::from(c)).collect(),
            id.map(str::to_owned),
        )
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// `[r_1, ..., r_m]`
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// `[V_0, ..., V_{m-1}]`
    pub fn initials(&self) -> &[Rational] {
        &self.initials
    }

    pub fn id(&self) -> Option<&str> {
        self.id.as_deref()
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    /// `r_m`
    pub fn last_coefficient(&self) -> &Rational {
        self.coefficients.last().expect("order >= 2")
    }

    /// Whether the recurrence can be run backwards (`r_m != 0`).
    pub fn is_reversible(&self) -> bool {
        !self.last_coefficient().is_zero()
    }

    pub(crate) fn require_reversible(&self, index: i64) -> Result<()> {
        if self.is_reversible() {
            Ok(())
        } else {
            Err(Error::NegativeIndexUnavailable { index })
        }
    }

    /// Next term from the `m` most recent ones, oldest first.
    fn step_forward<'a>(&self, window: impl DoubleEndedIterator<Item = &'a Rational>) -> Rational {
        let mut acc = Rational::zero();
        for (r, v) in self.coefficients.iter().zip(window.rev()) {
            mul_add(&mut acc, r, v);
        }
        acc
    }

    /// Term preceding a window of `m` consecutive terms, oldest first:
    /// `V(k) = (V(k+m) - sum_{i<m} r_i V(k+m-i)) / r_m`.
    fn step_backward<'a>(
        &self,
        inv_last: &Rational,
        window: impl DoubleEndedIterator<Item = &'a Rational>,
    ) -> Rational {
        let m = self.order();
        let mut newest_first = window.rev();
        let mut acc = newest_first.next().expect("full window").clone();
        for (r, v) in self.coefficients[..m - 1].iter().zip(newest_first) {
            mul_add(&mut acc, &-r, v);
        }
        &acc * inv_last
    }

    /// `V(n)` for any integer `n`, using `O(m)` working memory.
    pub fn term(&self, n: i64) -> Result<Rational> {
        let m = self.order() as i64;
        if (0..m).contains(&n) {
            return Ok(self.initials[n as usize].clone());
        }
        let mut window: VecDeque<Rational> = self.initials.iter().cloned().collect();
        if n >= m {
            for _ in m..=n {
                let next = self.step_forward(window.iter());
                window.pop_front();
                window.push_back(next);
            }
            Ok(window.pop_back().expect("non-empty"))
        } else {
            self.require_reversible(n)?;
            let inv_last = self.last_coefficient().inv()?;
            for _ in n..0 {
                let prev = self.step_backward(&inv_last, window.iter());
                window.pop_back();
                window.push_front(prev);
            }
            Ok(window.pop_front().expect("non-empty"))
        }
    }

    /// `V(lo), ..., V(hi)` inclusive.
    pub fn term_range(&self, lo: i64, hi: i64) -> Result<Vec<Rational>> {
        if lo > hi {
            return Err(Error::EmptyRange { lo, hi });
        }
        let mut cache = TermCache::new(self.clone());
        cache.range(lo, hi)
    }

    /// The recurrence satisfied by `W(k) = V(-k)`:
    /// coefficients `(-r_{m-1}/r_m, ..., -r_1/r_m, 1/r_m)` and initial terms
    /// `[V_0, V_{-1}, ..., V_{-m+1}]`. The id is carried over unchanged.
    pub fn reversed(&self) -> Result<SequenceSpec> {
        let m = self.order();
        self.require_reversible(-1)?;
        let inv_last = self.last_coefficient().inv()?;
        let mut coefficients: Vec<Rational> = self.coefficients[..m - 1]
            .iter()
            .rev()
            .map(|r| -(r * &inv_last))
            .collect();
        coefficients.push(inv_last);
        let mut tail = self.term_range(-(m as i64) + 1, 0)?;
        tail.reverse();
        Ok(SequenceSpec {
            coefficients,
            initials: tail,
            id: self.id.clone(),
        })
    }
}

/// Contiguous window of computed terms, grown on demand in either direction.
#[derive(Clone, Debug)]
pub struct TermCache {
    spec: SequenceSpec,
    inv_last: Option<Rational>,
    lo: i64,
    values: VecDeque<Rational>,
}

impl TermCache {
    pub fn new(spec: SequenceSpec) -> Self {
        let inv_last = spec.last_coefficient().inv().ok();
        let values = spec.initials.iter().cloned().collect();
        TermCache {
            spec,
            inv_last,
            lo: 0,
            values,
        }
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    /// Inclusive bounds of the stored window.
    pub fn bounds(&self) -> (i64, i64) {
        (self.lo, self.lo + self.values.len() as i64 - 1)
    }

    fn ensure(&mut self, n: i64) -> Result<()> {
        let m = self.spec.order();
        while n > self.bounds().1 {
            let start = self.values.len() - m;
            let next = self.spec.step_forward(self.values.range(start..));
            self.values.push_back(next);
        }
        if n < self.lo {
            let inv_last = self
                .inv_last
                .clone()
                .ok_or(Error::NegativeIndexUnavailable { index: n })?;
            while n < self.lo {
                let prev = self.spec.step_backward(&inv_last, self.values.range(..m));
                self.values.push_front(prev);
                self.lo -= 1;
            }
        }
        Ok(())
    }

    pub fn get(&mut self, n: i64) -> Result<&Rational> {
        self.ensure(n)?;
        Ok(&self.values[(n - self.lo) as usize])
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> Result<Vec<Rational>> {
        if lo > hi {
            return Err(Error::EmptyRange { lo, hi });
        }
        self.ensure(lo)?;
        self.ensure(hi)?;
        let start = (lo - self.lo) as usize;
        let end = (hi - self.lo) as usize;
        Ok(self.values.range(start..=end).cloned().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn fibonacci() -> SequenceSpec {
        SequenceSpec::from_ints(&[1, 1], &[0, 1], Some("horadam/fibonacci")).unwrap()
    }

    fn tribonacci() -> SequenceSpec {
        SequenceSpec::from_ints(&[1, 1, 1], &[0, 1, 1], None).unwrap()
    }

    #[test]
    fn make_spec_validation() {
        let j3 = SequenceSpec::from_ints(&[1, 1, 2], &[0, 1, 1], Some("tribonacci/third-order-jacobsthal"))
            .unwrap();
        assert_eq!(j3.order(), 3);
        assert!(j3.is_reversible());
        assert_eq!(
            SequenceSpec::from_ints(&[1, 1], &[0, 1, 1], None),
            Err(Error::LengthMismatch { coefficients: 2, initials: 3 })
        );
        assert_eq!(SequenceSpec::from_ints(&[1], &[0], None), Err(Error::OrderTooSmall(1)));
        assert_eq!(SequenceSpec::from_ints(&[], &[], None), Err(Error::OrderTooSmall(0)));
        let degenerate = SequenceSpec::from_ints(&[1, 0], &[0, 1], None).unwrap();
        assert!(!degenerate.is_reversible());
    }

    #[test]
    fn term_examples() {
        assert_eq!(fibonacci().term(10).unwrap(), q("55"));
        assert_eq!(tribonacci().term(-6).unwrap(), q("-3"));
        let j5 = SequenceSpec::from_ints(&[1, 1, 1, 1, 2], &[0, 1, 1, 1, 1], None).unwrap();
        assert_eq!(j5.term(-6).unwrap(), q("-17/16"));
        let s = SequenceSpec::new(vec![q("1/3"), q("-2")], vec![q("7/5"), q("0")], None).unwrap();
        assert_eq!(s.term(0).unwrap(), q("7/5"));
    }

    #[test]
    fn term_rejects_negative_without_backward_extension() {
        let s = SequenceSpec::from_ints(&[1, 0], &[0, 1], None).unwrap();
        assert_eq!(s.term(-1), Err(Error::NegativeIndexUnavailable { index: -1 }));
        assert_eq!(s.term(5).unwrap(), q("1"));
        assert!(matches!(s.term_range(-3, 2), Err(Error::NegativeIndexUnavailable { .. })));
        assert!(matches!(s.reversed(), Err(Error::NegativeIndexUnavailable { .. })));
    }

    #[test]
    fn term_range_examples() {
        let penta = SequenceSpec::from_ints(&[1; 5], &[0, 1, 1, 2, 4], None).unwrap();
        assert_eq!(penta.term_range(1, 10).unwrap(), ints(&[1, 1, 2, 4, 8, 16, 31, 61, 120, 236]));
        let r = SequenceSpec::from_ints(&[1; 4], &[4, 1, 3, 7], None).unwrap();
        assert_eq!(r.term_range(-4, 0).unwrap(), ints(&[7, -1, -1, -1, 4]));
        assert_eq!(fibonacci().term_range(3, 3).unwrap(), ints(&[2]));
        assert_eq!(fibonacci().term_range(4, 3), Err(Error::EmptyRange { lo: 4, hi: 3 }));
    }

    #[test]
    fn reversed_examples() {
        let rev = fibonacci().reversed().unwrap();
        assert_eq!(rev.coefficients(), &ints(&[-1, 1])[..]);
        assert_eq!(rev.initials(), &ints(&[0, 1])[..]);
        assert_eq!(rev.term(2).unwrap(), q("-1"));

        let j2 = SequenceSpec::from_ints(&[1, 2], &[0, 1], None).unwrap();
        let rev = j2.reversed().unwrap();
        assert_eq!(rev.coefficients(), &[q("-1/2"), q("1/2")][..]);
        assert_eq!(rev.initials(), &[q("0"), q("1/2")][..]);
        // backward oracle: J_{-2} = (J_0 - J_{-1}) / 2
        let j_m1 = (q("1") - q("0")) * q("1/2");
        let j_m2 = (q("0") - &j_m1) * q("1/2");
        assert_eq!(rev.term(1).unwrap(), j_m1);
        assert_eq!(rev.term(2).unwrap(), j_m2);
        assert_eq!(j_m2, q("-1/4"));

        let s = SequenceSpec::new(vec![q("2/3"), q("-1"), q("5")], vec![q("1"), q("-1/2"), q("3")], None)
            .unwrap();
        assert_eq!(s.reversed().unwrap().reversed().unwrap(), s);
    }

    #[test]
    fn cache_any_order() {
        let s = SequenceSpec::new(vec![q("1/2"), q("3"), q("-2/3")], vec![q("1"), q("2"), q("-1")], None)
            .unwrap();
        let expected: Vec<Rational> = (-15..=15).map(|n| s.term(n).unwrap()).collect();
        let mut desc = TermCache::new(s.clone());
        for n in (-15..=15).rev() {
            assert_eq!(desc.get(n).unwrap(), &expected[(n + 15) as usize]);
        }
        let mut jumpy = TermCache::new(s.clone());
        for n in [7, -15, 15, 0, -3, 2] {
            assert_eq!(jumpy.get(n).unwrap(), &expected[(n + 15) as usize]);
        }
        assert_eq!(jumpy.bounds(), (-15, 15));
        assert_eq!(jumpy.range(-15, 15).unwrap(), expected);
    }

    #[test]
    fn json_round_trip() {
        let s = SequenceSpec::new(vec![q("1"), q("-1/2")], vec![q("0"), q("3/4")], Some("x".into())).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":2,"coefficients":["1","-1/2"],"initials":["0","3/4"],"id":"x"}"#);
        let back: SequenceSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);

        let bad = r#"{"order":3,"coefficients":["1","1"],"initials":["0","1"],"id":null}"#;
        assert!(serde_json::from_str::<SequenceSpec>(bad).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn reversible_spec() -> impl Strategy<Value = SequenceSpec> {
        (2usize..=5).prop_flat_map(|m| {
            (
                proptest::collection::vec(small_rational(), m - 1),
                small_rational().prop_filter("r_m != 0", |r| !r.is_zero()),
                proptest::collection::vec(small_rational(), m),
            )
                .prop_map(|(mut cs, last, init)| {
                    cs.push(last);
                    SequenceSpec::new(cs, init, None).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn recurrence_holds_everywhere(spec in reversible_spec()) {
            let m = spec.order() as i64;
            let lo = -12;
            let values = spec.term_range(lo - m, 12).unwrap();
            for n in lo..=12 {
                let at = |k: i64| &values[(k - (lo - m)) as usize];
                let mut sum = Rational::zero();
                for (i, r) in spec.coefficients().iter().enumerate() {
                    sum += &(r * at(n - 1 - i as i64));
                }
                prop_assert_eq!(&sum, at(n));
            }
        }

        #[test]
        fn reversal_mirrors_indices(spec in reversible_spec()) {
            let rev = spec.reversed().unwrap();
            for k in 0..20 {
                prop_assert_eq!(rev.term(k).unwrap(), spec.term(-k).unwrap());
            }
            prop_assert_eq!(rev.reversed().unwrap(), spec);
        }

        #[test]
        fn deterministic(spec in reversible_spec(), n in -20i64..30) {
            prop_assert_eq!(spec.term(n).unwrap(), spec.term(n).unwrap());
        }
    }
}
