use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::ConjField;
use crate::{Error, Rational, Result};

/// `re + i·im` with rational parts. Serialized as the string `"re,im"`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::real(Rational::from(n))
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl ConjField for GaussianRational {
    fn zero_like(&self) -> Self {
        GaussianRational::zero()
    }

    fn one_like(&self) -> Self {
        GaussianRational::one()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn sub(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn mul(&self, o: &Self) -> Self {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => GaussianRational::real(&self.re * &o.re),
            (true, false) => GaussianRational::new(&self.re * &o.re, &self.re * &o.im),
            (false, true) => GaussianRational::new(&self.re * &o.re, &self.im * &o.re),
            (false, false) => GaussianRational::new(
                &self.re * &o.re - &self.im * &o.im,
                &self.re * &o.im + &self.im * &o.re,
            ),
        }
    }

    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }

    fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of zero");
        GaussianRational::new(&self.re / &n, -(&self.im / &n))
    }

    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    fn real_sign(&self) -> i32 {
        self.re.signum()
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ConjField::add(&self, &o)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ConjField::sub(&self, &o)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ConjField::mul(&self, &o)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        ConjField::neg(&self)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.re, self.im)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(',') {
            Some((re, im)) => Ok(GaussianRational::new(re.parse()?, im.parse()?)),
            None => Ok(GaussianRational::real(s.parse()?)),
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
