//! Exact coefficient fields for the linear-algebra oracle: arbitrary
//! precision rationals and odd prime fields with a runtime modulus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A computable field. Elements carry no context, so all arithmetic goes
/// through the field object (needed for prime fields whose modulus is chosen
/// at runtime).
pub trait Field: Clone + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn to_string(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn to_string(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.denom().is_negative() {
            format!("{}/{}", -a.numer(), -a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn name(&self) -> String {
        "rat".to_string()
    }
}

/// The prime field Z/p for an odd prime p chosen at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not an odd prime")]
    BadModulus(u64),
    #[error("cannot parse field spec {0:?} (expected \"rat\" or \"fp:P\")")]
    BadSpec(String),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Characteristic two is excluded: the signed algebra needs 2 invertible.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p == 2 || !is_prime(p) {
            return Err(FieldError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u128;
        let p = self.p as u128;
        let mut b = base as u128 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u64;
        base
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        let m = v.rem_euclid(self.p as i64);
        m as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn to_string(&self, a: &u64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        format!("fp:{}", self.p)
    }
}

/// Runtime selection of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

impl FieldChoice {
    pub fn validate(self) -> Result<Self, FieldError> {
        if let FieldChoice::Prime(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }
}

impl FromStr for FieldChoice {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        if s == "rat" {
            return Ok(FieldChoice::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| FieldError::BadSpec(s.to_string()))?;
            return FieldChoice::Prime(p).validate();
        }
        Err(FieldError::BadSpec(s.to_string()))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => write!(f, "rat"),
            FieldChoice::Prime(p) => write!(f, "fp:{}", p),
        }
    }
}
