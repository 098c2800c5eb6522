//! Small finite extension fields `F_p[t]/(g)` and the dense polynomial
//! arithmetic over `F_p` needed to factor the defining polynomial of a
//! cubic étale algebra into its residue fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;

use super::field::{FiniteField, Field};

/// Dense polynomial over `F_p`, little-endian coefficients, no trailing zeros.
pub type FpPoly = Vec<u64>;

pub mod poly {
    use rand::Rng;

    use super::FpPoly;

    fn trim(mut a: FpPoly) -> FpPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        let mut acc = 1u128;
        let mut base = a as u128 % p as u128;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    }

    pub fn normalize(a: &[u64], p: u64) -> FpPoly {
        trim(a.iter().map(|c| c % p).collect())
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0) as u128 + *b.get(i).unwrap_or(&0) as u128;
                (x % p as u128) as u64
            })
            .collect();
        trim(out)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0) as u128 + p as u128
                    - *b.get(i).unwrap_or(&0) as u128;
                (x % p as u128) as u64
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
            }
        }
        trim(out.into_iter().map(|c| c as u64).collect())
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
        let db = degree(b).expect("division by the zero polynomial");
        let lead_inv = inv_mod(b[db], p);
        let mut r: Vec<u64> = trim(a.to_vec());
        let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
            let shift = dr - db;
            q[shift] = c;
            for (i, &bc) in b.iter().enumerate().take(db + 1) {
                let t = (c as u128 * bc as u128 % p as u128) as u64;
                r[i + shift] = ((r[i + shift] as u128 + p as u128 - t as u128) % p as u128) as u64;
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        divrem(a, b, p).1
    }

    pub fn monic(a: &[u64], p: u64) -> FpPoly {
        match degree(a) {
            None => Vec::new(),
            Some(d) => {
                let li = inv_mod(a[d], p);
                trim(
                    a.iter()
                        .map(|&c| (c as u128 * li as u128 % p as u128) as u64)
                        .collect(),
                )
            }
        }
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> FpPoly {
        rem(&mul(a, b, p), m, p)
    }

    pub fn powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> FpPoly {
        let mut acc = rem(&[1], m, p);
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        acc
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0u128, |acc, &c| {
            (acc * x as u128 + c as u128) % p as u128
        }) as u64
    }

    /// Monic irreducible factors of a squarefree polynomial (distinct-degree
    /// split followed by Cantor–Zassenhaus), sorted by degree then coefficients.
    pub fn factor_squarefree<R: Rng + ?Sized>(f: &[u64], p: u64, rng: &mut R) -> Vec<FpPoly> {
        let mut rest = monic(f, p);
        let mut out = Vec::new();
        let x: FpPoly = vec![0, 1];
        let mut d = 1usize;
        let mut frob = x.clone();
        while degree(&rest).is_some_and(|n| n >= 2 * d) {
            frob = powmod(&frob, p as u128, &rest, p);
            let g = gcd(&sub(&frob, &x, p), &rest, p);
            if degree(&g).is_some_and(|n| n > 0) {
                equal_degree(&g, d, p, rng, &mut out);
                rest = divrem(&rest, &g, p).0;
                frob = rem(&frob, &rest, p);
            }
            d += 1;
        }
        if degree(&rest).is_some_and(|n| n > 0) {
            out.push(monic(&rest, p));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn equal_degree<R: Rng + ?Sized>(g: &[u64], d: usize, p: u64, rng: &mut R, out: &mut Vec<FpPoly>) {
        let n = degree(g).unwrap_or(0);
        if n == d {
            out.push(monic(g, p));
            return;
        }
        let exp = ((p as u128).pow(d as u32) - 1) / 2;
        loop {
            let a: FpPoly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
            if degree(&a).is_none_or(|k| k == 0) {
                continue;
            }
            let b = sub(&powmod(&a, exp, g, p), &[1], p);
            let h = gcd(&b, g, p);
            if let Some(dh) = degree(&h) {
                if dh > 0 && dh < n {
                    equal_degree(&h, d, p, rng, out);
                    equal_degree(&divrem(g, &h, p).0, d, p, rng, out);
                    return;
                }
            }
        }
    }
}

/// Defining data of `F_p[t]/(g)` with `g` monic irreducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GfModulus {
    p: u64,
    poly: FpPoly,
}

impl GfModulus {
    /// `poly` must be monic and irreducible over `F_p`; irreducibility is the
    /// caller's responsibility (the factorization routine guarantees it).
    pub fn new(p: u64, poly: &[u64]) -> Arc<Self> {
        let poly = poly::monic(poly, p);
        assert!(poly::degree(&poly).is_some_and(|d| d >= 1), "modulus must have positive degree");
        Arc::new(Self { p, poly })
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn polynomial(&self) -> &[u64] {
        &self.poly
    }
}

/// Element of a finite field `F_p[t]/(g)`.
#[derive(Clone, Debug)]
pub struct Gf {
    coeffs: Vec<u64>,
    ctx: Arc<GfModulus>,
}

impl Gf {
    pub fn new(ctx: &Arc<GfModulus>, coeffs: &[u64]) -> Self {
        let r = poly::rem(&poly::normalize(coeffs, ctx.p), &ctx.poly, ctx.p);
        Self::from_reduced(ctx, r)
    }

    fn from_reduced(ctx: &Arc<GfModulus>, mut r: FpPoly) -> Self {
        r.resize(ctx.degree(), 0);
        Self {
            coeffs: r,
            ctx: Arc::clone(ctx),
        }
    }

    pub fn from_base(ctx: &Arc<GfModulus>, c: u64) -> Self {
        Self::new(ctx, &[c])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn modulus(&self) -> &Arc<GfModulus> {
        &self.ctx
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "mixed extension fields"
        );
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx)
    }
}

impl Eq for Gf {}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Add for Gf {
    type Output = Gf;
    fn add(self, rhs: Gf) -> Gf {
        self.same_field(&rhs);
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| ((a as u128 + b as u128) % p as u128) as u64)
            .collect();
        Gf { coeffs, ctx: self.ctx }
    }
}

impl Sub for Gf {
    type Output = Gf;
    fn sub(self, rhs: Gf) -> Gf {
        self + (-rhs)
    }
}

impl Neg for Gf {
    type Output = Gf;
    fn neg(self) -> Gf {
        let p = self.ctx.p;
        let coeffs = self.coeffs.iter().map(|&a| if a == 0 { 0 } else { p - a }).collect();
        Gf { coeffs, ctx: self.ctx }
    }
}

impl Mul for Gf {
    type Output = Gf;
    fn mul(self, rhs: Gf) -> Gf {
        self.same_field(&rhs);
        let p = self.ctx.p;
        let r = poly::mulmod(&self.coeffs, &rhs.coeffs, &self.ctx.poly, p);
        Gf::from_reduced(&self.ctx, r)
    }
}

impl Field for Gf {
    fn zero_like(&self) -> Self {
        Gf::from_reduced(&self.ctx, Vec::new())
    }

    fn one_like(&self) -> Self {
        Gf::from_base(&self.ctx, 1)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        let v = (n as i128).rem_euclid(self.ctx.p as i128) as u64;
        Gf::from_base(&self.ctx, v)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(FiniteField::pow(self, self.order() - 2))
    }
}

impl FiniteField for Gf {
    fn characteristic(&self) -> u64 {
        self.ctx.p
    }

    fn order(&self) -> u128 {
        (self.ctx.p as u128).pow(self.ctx.degree() as u32)
    }

    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let p = self.ctx.p;
        let coeffs: Vec<u64> = (0..self.ctx.degree()).map(|_| rng.gen_range(0..p)).collect();
        Gf {
            coeffs,
            ctx: Arc::clone(&self.ctx),
        }
    }
}
