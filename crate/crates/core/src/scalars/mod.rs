//! Exact ground-field arithmetic: rationals and odd prime fields with
//! `p >= 5`, plus square-class utilities.

mod field;
mod fp;
pub mod gf;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use field::{FiniteField, Field};
pub use fp::{is_prime, Fp};
pub use gf::{Gf, GfModulus};

/// Largest prime accepted for `F_p` (keeps every product inside `u128`).
pub const MAX_PRIME: u64 = 1 << 62;

/// Default trial-division bound for rational square classes.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// The active ground field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroundField {
    Rationals,
    Prime(u64),
}

impl GroundField {
    /// `F_p`, rejecting composite moduli and characteristics 2 and 3.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 5 {
            return Err(Error::InvalidField(format!("characteristic {p} is excluded (need p >= 5)")));
        }
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("{p} exceeds the supported range")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(GroundField::Prime(p))
    }

    /// Characteristic, `0` for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            GroundField::Rationals => 0,
            GroundField::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            GroundField::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            GroundField::Prime(p) => Scalar::Prime(Fp::from_i64(n, *p)),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`; over `F_p` the fraction is reduced mod p.
    pub fn parse_element(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::ParseElement(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            GroundField::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            GroundField::Prime(p) => {
                let m = BigInt::from(*p);
                let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().expect("residue fits u64");
                Scalar::Prime(Fp::new(reduce(&num), *p)).div(&Scalar::Prime(Fp::new(reduce(&den), *p)))
            }
        }
    }

    /// Uniform over `F_p`; over `Q` a small fraction `n/d` with
    /// `|n| <= 9`, `1 <= d <= 4` so that sampled identities stay cheap.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            GroundField::Rationals => {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=4);
                Scalar::Rational(BigRational::new(n.into(), d.into()))
            }
            GroundField::Prime(p) => Scalar::Prime(Fp::new(rng.gen_range(0..*p), *p)),
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl fmt::Display for GroundField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundField::Rationals => write!(f, "Q"),
            GroundField::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for GroundField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" {
            return Ok(GroundField::Rationals);
        }
        let digits = t
            .strip_prefix("Fp:")
            .ok_or_else(|| Error::InvalidField(format!("expected \"Q\" or \"Fp:<p>\", got {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime in {s:?}")))?;
        GroundField::prime(p)
    }
}

impl Serialize for GroundField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroundField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A scalar of the active ground field in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
}

impl Scalar {
    pub fn field(&self) -> GroundField {
        match self {
            Scalar::Rational(_) => GroundField::Rationals,
            Scalar::Prime(x) => GroundField::Prime(x.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Prime(x) => x.value() == 0,
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        match self {
            _ if self.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(x) => Ok(Scalar::Rational(x.recip())),
            Scalar::Prime(x) => Ok(Scalar::Prime(Field::inv(x).expect("nonzero"))),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.field().one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn as_fp(&self) -> Option<Fp> {
        match self {
            Scalar::Prime(x) => Some(*x),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(x) => Some(x),
            Scalar::Prime(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Prime(x) => write!(f, "{x}"),
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($tr::$m(a, b)),
                    (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime($tr::$m(*a, *b)),
                    _ => panic!("mixed ground fields"),
                }
            }
        }

        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $tr::$m(&self, &rhs)
            }
        }

        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $tr::$m(&self, rhs)
            }
        }

        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $tr::$m(self, &rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime(a) => Scalar::Prime(-*a),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Field for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.field().from_i64(n)
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

/// Square class of a nonzero scalar.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SquareClass {
    Square,
    NonSquare,
    /// Signed square-free representative of a rational class.
    SquareFree(BigInt),
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareClass::Square => write!(f, "square"),
            SquareClass::NonSquare => write!(f, "non-square"),
            SquareClass::SquareFree(d) => write!(f, "{d}"),
        }
    }
}

pub fn square_class(a: &Scalar) -> Result<SquareClass> {
    square_class_with_bound(a, DEFAULT_FACTOR_BOUND)
}

/// Legendre criterion over `F_p`; square-free part by trial division over `Q`.
pub fn square_class_with_bound(a: &Scalar, bound: u64) -> Result<SquareClass> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    match a {
        Scalar::Prime(x) => Ok(if x.is_square() {
            SquareClass::Square
        } else {
            SquareClass::NonSquare
        }),
        Scalar::Rational(x) => {
            // n/d and n*d share a square class
            let m = x.numer() * x.denom();
            let mut part = squarefree_part(&m.abs(), bound)?;
            if m.is_negative() {
                part = -part;
            }
            Ok(SquareClass::SquareFree(part))
        }
    }
}

fn squarefree_part(m: &BigInt, bound: u64) -> Result<BigInt> {
    let mut rest = m.clone();
    let mut part = BigInt::one();
    let mut q: u64 = 2;
    while q <= bound {
        let qb = BigInt::from(q);
        if &qb * &qb > rest {
            break;
        }
        let mut odd = false;
        while (&rest % &qb).is_zero() {
            rest /= &qb;
            odd = !odd;
        }
        if odd {
            part *= &qb;
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(part);
    }
    // every prime factor of `rest` exceeds q - 1, so it is prime iff rest < q^2
    let qb = BigInt::from(q);
    if rest < &qb * &qb {
        Ok(part * rest)
    } else {
        Err(Error::FactorizationBoundExceeded { bound })
    }
}
