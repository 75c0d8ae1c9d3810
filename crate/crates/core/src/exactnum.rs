//! Exact rational scalars, angles on the circle and the sawtooth function.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Panics on a zero denominator; meant for literals.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Rational::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Parse("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Self {
        Rational(&self.0 - self.0.floor())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded half away from zero to `digits` places.
    /// Display only; never used in computations.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.abs().round().to_integer();
        let (int_part, frac_part) = rounded.div_rem(&scale);
        let sign = if self.signum() < 0 && !rounded.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // accept the unicode minus sign as well
        let cleaned: String = s.trim().replace('\u{2212}', "-");
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
        };
        match cleaned.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::from_integer(parse_int(&cleaned)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Rational::from_integer(n)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A point `e^{2πiθ}` of the unit circle, stored through `θ ∈ [0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalAngle(Rational);

impl RationalAngle {
    /// Reduces `theta` mod 1.
    pub fn new(theta: Rational) -> Self {
        RationalAngle(theta.fract())
    }

    pub fn frac(numer: i64, denom: i64) -> Self {
        RationalAngle::new(Rational::frac(numer, denom))
    }

    pub fn trivial() -> Self {
        RationalAngle(Rational::zero())
    }

    pub fn theta(&self) -> &Rational {
        &self.0
    }

    /// `ω ≠ 1`.
    pub fn nontrivial(&self) -> bool {
        !self.0.is_zero()
    }

    /// `ω^m`.
    pub fn power(&self, m: impl Into<BigInt>) -> Self {
        RationalAngle::new(&self.0 * Rational::from_integer(m.into()))
    }

    /// `ω̄ = ω^{-1}`.
    pub fn conj(&self) -> Self {
        RationalAngle::new(-&self.0)
    }

    /// Multiplicative order of `ω`, i.e. the denominator of `θ`.
    pub fn order(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ={}", self.0)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(RationalAngle::new(s.parse()?))
    }
}

impl Serialize for RationalAngle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalAngle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(RationalAngle::new(Rational::deserialize(deserializer)?))
    }
}

/// The periodic sawtooth `((x))`: `x − ⌊x⌋ − 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x.fract() - Rational::frac(1, 2)
    }
}

/// Whether `ω^p = 1`.
pub fn is_order_dividing(angle: &RationalAngle, p: i64) -> Result<bool> {
    if p == 0 {
        return Err(Error::InvalidParameter("root-of-unity order must be nonzero".into()));
    }
    Ok((angle.theta() * Rational::from_integer(p)).is_integer())
}

/// Inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let m = i128::from(m);
    let a = i128::from(a).rem_euclid(m);
    let egcd = a.extended_gcd(&m);
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(m) as i64)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
