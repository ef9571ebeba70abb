//! Exact rational numbers over arbitrary-precision integers.
//!
//! Every [`Rational`] is kept in canonical form: the denominator is positive
//! and coprime to the numerator, and zero is `0/1`. Equality and hashing are
//! therefore structural.
//!
//! The text form is `-?digits(/digits)?`, e.g. `208` or `-5/16`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

/// gcd of magnitudes. One Euclidean step first so the binary gcd in
/// `num-integer` never sees badly unbalanced operands.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = (a.magnitude(), b.magnitude());
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    if small.is_zero() {
        return BigInt::from(big.clone());
    }
    if small.is_one() {
        return BigInt::one();
    }
    let rem: BigUint = big % small;
    BigInt::from(small.gcd(&rem))
}

impl Rational {
    /// Builds the canonical form of `num/den`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if !den.is_one() {
            let g = gcd(&num, &den);
            if !g.is_one() {
                num /= &g;
                den /= &g;
            }
        }
        Rational { num, den }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn to_integer(&self) -> Option<&BigInt> {
        self.is_integer().then_some(&self.num)
    }

    /// Reciprocal; zero has none.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = if self.num.is_negative() {
            (-&self.den, -&self.num)
        } else {
            (self.den.clone(), self.num.clone())
        };
        Ok(Rational { num, den })
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power by square-and-multiply; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Rational::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `(-1)^k` as a sign flip, without touching magnitudes.
    pub fn with_parity_sign(self, k: i64) -> Self {
        if k.rem_euclid(2) == 1 {
            -self
        } else {
            self
        }
    }

    pub fn abs(&self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Number of decimal digits of the numerator's magnitude.
    pub fn numer_digits(&self) -> usize {
        if self.num.is_zero() {
            return 1;
        }
        self.num.magnitude().to_str_radix(10).len()
    }

    pub fn to_f64(&self) -> Option<f64> {
        let n = self.num.to_f64()?;
        let d = self.den.to_f64()?;
        Some(n / d)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidLiteral(whole.to_owned()));
    }
    BigUint::from_str(s).map_err(|_| Error::InvalidLiteral(whole.to_owned()))
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (parse_digits(n, s)?, parse_digits(d, s)?),
            None => (parse_digits(body, s)?, BigUint::one()),
        };
        Rational::new(BigInt::from_biguint(sign, num), BigInt::from(den))
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}
from_int!(i8, i16, i32, i64, i128, u8, u16, u32, u64, u128, usize, isize);

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn add(self, rhs: &'a Rational) -> Rational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            // coprime denominators: the cross sum is already reduced
            return Rational {
                num: &self.num * &rhs.den + &rhs.num * &self.den,
                den: &self.den * &rhs.den,
            };
        }
        let lhs_cof = &self.den / &g;
        let rhs_cof = &rhs.den / &g;
        let t = &self.num * &rhs_cof + &rhs.num * &lhs_cof;
        if t.is_zero() {
            return Rational::zero();
        }
        let g2 = gcd(&t, &g);
        Rational {
            num: t / &g2,
            den: lhs_cof * (&rhs.den / &g2),
        }
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn mul(self, rhs: &'a Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let (ln, rd) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (&self.num / &g1, &rhs.den / &g1)
        };
        let (rn, ld) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (&rhs.num / &g2, &self.den / &g2)
        };
        Rational {
            num: ln * rn,
            den: ld * rd,
        }
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        -self.clone()
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn sub(self, rhs: &'a Rational) -> Rational {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: &'a Rational) -> Rational {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;

        impl de::Visitor<'_> for Visitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational literal such as \"-5/16\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from(v))
            }
        }

        deserializer.deserialize_any(Visitor)
    }
}

/// Parses a comma-separated list of rational literals, e.g. `1,1,-1/2`.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|part| part.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Rational::new(6, -4).unwrap(), q("-3/2"));
        let zero = Rational::new(0, 7).unwrap();
        assert_eq!(zero.numer(), &BigInt::from(0));
        assert_eq!(zero.denom(), &BigInt::from(1));
        assert_eq!(Rational::new(-85, -256).unwrap().to_string(), "85/256");
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn add_examples() {
        assert_eq!(q("1/2") + q("-1/4"), q("1/4"));
        assert_eq!(q("3/8") + q("0"), q("3/8"));
        // 11*16 - 5*32 = 16 over 512
        assert_eq!(q("11/32") + q("-5/16"), q("1/32"));
        assert_eq!(q("1/6") + q("-1/6"), Rational::zero());
        assert_eq!(q("1/6") + q("1/10"), q("4/15"));
    }

    #[test]
    fn mul_examples() {
        assert!((q("2/3") * q("3/2")).is_one());
        assert!((Rational::zero() * q("-7/3")).is_zero());
        assert_eq!(q("5/4") * q("-1/2"), q("-5/8"));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(q("2").inv().unwrap(), q("1/2"));
        let r = q("-3/4").inv().unwrap();
        assert_eq!(r, q("-4/3"));
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(q("1").inv().unwrap(), q("1"));
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(q("2").pow(-3).unwrap(), q("1/8"));
        assert_eq!(q("-5/3").pow(0).unwrap(), q("1"));
        let mut by_hand = Rational::one();
        for _ in 0..8 {
            by_hand = by_hand * q("2");
        }
        assert_eq!(q("2").pow(8).unwrap(), by_hand);
        assert_eq!(by_hand, q("256"));
        assert_eq!(Rational::zero().pow(-1), Err(Error::DivisionByZero));
        assert!(Rational::zero().pow(0).unwrap().is_one());
    }

    #[test]
    fn literal_grammar() {
        for bad in ["", "-", "+1", "1/", "/2", "1/-2", "1.5", " 1", "1//2", "a"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should be rejected");
        }
        assert_eq!("4/0".parse::<Rational>(), Err(Error::ZeroDenominator));
        assert_eq!(q("-0"), Rational::zero());
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(parse_list("1, -1/2,3").unwrap(), vec![q("1"), q("-1/2"), q("3")]);
    }

    #[test]
    fn serde_literals() {
        let v: Vec<Rational> = serde_json::from_str(r#"["-5/16", 3, "208"]"#).unwrap();
        assert_eq!(v, vec![q("-5/16"), q("3"), q("208")]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["-5/16","3","208"]"#);
    }

    #[test]
    fn unbalanced_gcd() {
        let big = BigInt::from(3u8).pow(4000u32) * BigInt::from(2);
        assert_eq!(gcd(&big, &BigInt::from(6)), BigInt::from(6));
        assert_eq!(gcd(&BigInt::from(-12), &BigInt::from(18)), BigInt::from(6));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1..=i64::MAX).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn nonzero() -> impl Strategy<Value = Rational> {
        small().prop_filter("nonzero", |r| !r.is_zero())
    }

    /// Widened-integer oracle: i128 numerators/denominators, reduced by
    /// Euclid on u128 and compared as cross products.
    fn oracle_eq(r: &Rational, num: i128, den: i128) -> bool {
        let lhs = r.numer() * BigInt::from(den);
        let rhs = BigInt::from(num) * r.denom();
        lhs == rhs
    }

    fn parts(r: &Rational) -> (i128, i128) {
        (r.numer().to_i128().unwrap(), r.denom().to_i128().unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn agrees_with_widened_oracle(a in small(), b in small()) {
            let (an, ad) = parts(&a);
            let (bn, bd) = parts(&b);
            // sums and products of 64-bit parts fit in i128 before reduction,
            // so check them via cross multiplication against BigInt
            let sum = &a + &b;
            prop_assert!(sum.numer() * (BigInt::from(ad) * BigInt::from(bd))
                == (BigInt::from(an) * BigInt::from(bd) + BigInt::from(bn) * BigInt::from(ad)) * sum.denom());
            let prod = &a * &b;
            prop_assert!(oracle_eq(&prod, an * bn, ad * bd));
            let diff = &a - &b;
            prop_assert!(diff.numer() * (BigInt::from(ad) * BigInt::from(bd))
                == (BigInt::from(an) * BigInt::from(bd) - BigInt::from(bn) * BigInt::from(ad)) * diff.denom());
            if !b.is_zero() {
                let inv = b.inv().unwrap();
                prop_assert!(oracle_eq(&inv, bd * bn.signum(), bn.abs()));
            }
        }

        #[test]
        fn field_laws(a in small(), b in small()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_and_idempotent(a in small()) {
            prop_assert!(a.denom() > &BigInt::zero());
            prop_assert!(gcd(a.numer(), a.denom()).is_one());
            let again = Rational::new(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            let round: Rational = a.to_string().parse().unwrap();
            prop_assert_eq!(round, a);
        }

        #[test]
        fn pow_adds_exponents(a in nonzero(), j in -6i64..6, k in -6i64..6) {
            prop_assert_eq!(a.pow(j + k).unwrap(), a.pow(j).unwrap() * a.pow(k).unwrap());
        }
    }
}
