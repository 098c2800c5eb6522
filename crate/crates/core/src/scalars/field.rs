use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact field arithmetic shared by the generic linear-algebra and
/// quadratic-form code.
///
/// Elements carry their own field context (the modulus, or nothing for
/// the rationals), so constants are produced from an existing element.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// A finite field of odd order `q = p^k`.
pub trait FiniteField: Field {
    fn characteristic(&self) -> u64;
    fn order(&self) -> u128;
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self;

    fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Euler's criterion; zero counts as a square.
    fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        self.pow((self.order() - 1) / 2).is_one()
    }

    /// Tonelli–Shanks square root over a field of odd order.
    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.is_square() {
            return None;
        }
        let q = self.order();
        let mut s = 0u32;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        // Deterministic non-residue search; half the field qualifies.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f5a);
        let z = loop {
            let c = self.random_like(&mut rng);
            if !c.is_zero() && !c.is_square() {
                break c;
            }
        };
        let mut m = s;
        let mut c = z.pow(t);
        let mut r = self.pow(t.div_ceil(2));
        let mut u = self.pow(t);
        while !u.is_one() {
            let mut i = 0u32;
            let mut probe = u.clone();
            while !probe.is_one() {
                probe = probe.square();
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.square();
            }
            m = i;
            c = b.square();
            u = u * c.clone();
            r = r * b;
        }
        debug_assert!(r.square() == *self);
        Some(r)
    }
}
