//! Exact coefficient rings for Burnside ring elements.
//!
//! Everything downstream is generic over [`Scalar`]: the integers (the ring
//! `A(G)` itself), the `p`-local rationals `Z_(p)` (the localized ring) and
//! the full rationals (diagnostics for non-integral ghost preimages).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which coefficient ring a scalar type lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Integer,
    PLocal,
    Rational,
}

pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const KIND: ScalarKind;

    fn from_integer(n: BigInt) -> Self;

    fn from_u64(n: u64) -> Self {
        Self::from_integer(BigInt::from(n))
    }

    fn to_rational(&self) -> BigRational;

    /// Rebuilds a scalar from an exact rational. `p` is the residue prime of
    /// the localization; integral and rational scalars ignore it.
    fn from_rational(r: &BigRational, p: u64) -> Option<Self>;

    /// `true` when `q` divides `self` in this ring.
    fn divisible_by(&self, q: u64) -> bool;
}

impl Scalar for BigInt {
    const KIND: ScalarKind = ScalarKind::Integer;

    fn from_integer(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_rational(r: &BigRational, _p: u64) -> Option<Self> {
        r.is_integer().then(|| r.to_integer())
    }

    fn divisible_by(&self, q: u64) -> bool {
        q != 0 && self.is_multiple_of(&BigInt::from(q))
    }
}

impl Scalar for BigRational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(r: &BigRational, _p: u64) -> Option<Self> {
        Some(r.clone())
    }

    fn divisible_by(&self, q: u64) -> bool {
        q != 0
    }
}

/// An element of `Z_(p)`: a reduced fraction whose denominator is prime to `p`.
///
/// `p == 0` marks a value built from an integer, which belongs to every
/// localization; arithmetic adopts the prime of the other operand.
#[derive(Clone, Debug)]
pub struct PLocal {
    value: BigRational,
    p: u64,
}

impl PLocal {
    pub fn new(num: BigInt, den: BigInt, p: u64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        Self::from_ratio(BigRational::new(num, den), p)
    }

    pub fn from_ratio(value: BigRational, p: u64) -> Result<Self> {
        if p != 0 && value.denom().is_multiple_of(&BigInt::from(p)) {
            return Err(Error::DenominatorDivisibleByP {
                den: value.denom().to_string(),
                p,
            });
        }
        Ok(PLocal { value, p })
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        PLocal {
            value: BigRational::from_integer(n.into()),
            p: 0,
        }
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn numer(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.value.denom()
    }

    /// `p`-adic valuation of the numerator; `None` for zero.
    pub fn valuation(&self, p: u64) -> Option<u32> {
        if self.value.is_zero() {
            return None;
        }
        let p = BigInt::from(p);
        let mut n = self.value.numer().abs();
        let mut v = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            v += 1;
        }
        Some(v)
    }

    fn join_prime(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, q) | (q, 0) => q,
            (a, b) => {
                assert_eq!(a, b, "mixing Z_({a}) and Z_({b}) scalars");
                a
            }
        }
    }
}

impl PartialEq for PLocal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for PLocal {}

impl fmt::Display for PLocal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for PLocal {
    type Output = PLocal;
    fn add(self, rhs: PLocal) -> PLocal {
        PLocal {
            p: Self::join_prime(self.p, rhs.p),
            value: self.value + rhs.value,
        }
    }
}

impl Sub for PLocal {
    type Output = PLocal;
    fn sub(self, rhs: PLocal) -> PLocal {
        PLocal {
            p: Self::join_prime(self.p, rhs.p),
            value: self.value - rhs.value,
        }
    }
}

impl Mul for PLocal {
    type Output = PLocal;
    fn mul(self, rhs: PLocal) -> PLocal {
        PLocal {
            p: Self::join_prime(self.p, rhs.p),
            value: self.value * rhs.value,
        }
    }
}

impl Neg for PLocal {
    type Output = PLocal;
    fn neg(self) -> PLocal {
        PLocal {
            p: self.p,
            value: -self.value,
        }
    }
}

impl Zero for PLocal {
    fn zero() -> Self {
        PLocal::integer(0)
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for PLocal {
    fn one() -> Self {
        PLocal::integer(1)
    }
}

impl Scalar for PLocal {
    const KIND: ScalarKind = ScalarKind::PLocal;

    fn from_integer(n: BigInt) -> Self {
        PLocal::integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.value.clone()
    }

    fn from_rational(r: &BigRational, p: u64) -> Option<Self> {
        PLocal::from_ratio(r.clone(), p).ok()
    }

    /// Divisibility in `Z_(p)`: only multiples of `p` carry information, every
    /// other prime is a unit.
    fn divisible_by(&self, q: u64) -> bool {
        if q == 0 {
            return false;
        }
        if self.p != 0 && q != self.p {
            return true;
        }
        self.value.numer().is_multiple_of(&BigInt::from(q))
    }
}

/// Renders an integral rational as a plain integer, anything else as `n/d`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
