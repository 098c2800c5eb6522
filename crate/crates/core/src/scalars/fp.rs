use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::field::{FiniteField, Field};

/// Residue modulo an odd prime, canonical representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        Self {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(n: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        Self {
            value: (n as i128).rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.modulus - (rhs.value - self.value)
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Fp {
            value: v as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus)
    }

    fn one_like(&self) -> Self {
        Fp::new(1, self.modulus)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Fp::from_i64(n, self.modulus)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        Some(FiniteField::pow(self, self.modulus as u128 - 2))
    }
}

impl FiniteField for Fp {
    fn characteristic(&self) -> u64 {
        self.modulus
    }

    fn order(&self) -> u128 {
        self.modulus as u128
    }

    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..self.modulus), self.modulus)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
