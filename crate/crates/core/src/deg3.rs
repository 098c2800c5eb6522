//! Degree-3 associative algebras: the split étale algebra `k^3`, monic
//! cubic quotients `k[t]/(f)` and `3x3` matrices, each with norm, trace
//! and adjoint (`#`), plus the discriminant algebra of the commutative ones.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{square_class, GroundField, Scalar, SquareClass};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Deg3Kind {
    SplitEtale,
    /// `k[t]/(t^3 + c2 t^2 + c1 t + c0)`, coefficients stored as `[c0, c1, c2]`.
    CubicQuotient { f: [Scalar; 3] },
    Matrix3,
}

/// JSON descriptor: `{"kind":"split"}`, `{"kind":"cubic","f":[c0,c1,c2]}`
/// or `{"kind":"mat3"}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraDescriptor {
    Split,
    Cubic { f: [String; 3] },
    Mat3,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Deg3Algebra {
    field: GroundField,
    kind: Deg3Kind,
}

/// Coordinates in the distinguished basis: `e_1, e_2, e_3` (split),
/// `1, t, t^2` (cubic quotient) or the row-major matrix units (matrices).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Deg3Element {
    coords: Vec<Scalar>,
}

impl Deg3Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for Deg3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `delta(E) = k[s]/(s^2 - d)`, kept as the single class `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticEtale {
    pub d: Scalar,
    pub split: bool,
}

impl QuadraticEtale {
    pub fn new(d: Scalar) -> Result<Self> {
        let split = match square_class(&d)? {
            SquareClass::Square => true,
            SquareClass::NonSquare => false,
            SquareClass::SquareFree(m) => m == 1.into(),
        };
        Ok(Self { d, split })
    }

    /// Diagonal entries of the norm form `x^2 - d y^2`.
    pub fn norm_form(&self) -> [Scalar; 2] {
        [self.d.field().one(), -&self.d]
    }
}

/// Discriminant of the monic cubic `t^3 + c2 t^2 + c1 t + c0`.
pub fn cubic_discriminant(f: &[Scalar; 3]) -> Scalar {
    let field = f[0].field();
    let n = |k: i64| field.from_i64(k);
    let (c, b, a) = (&f[0], &f[1], &f[2]);
    let a2 = a * a;
    let b2 = b * b;
    &a2 * &b2 - n(4) * &b2 * b - n(4) * &a2 * a * c - n(27) * c * c + n(18) * a * b * c
}

fn det3(m: &[Scalar]) -> Scalar {
    &m[0] * &(&m[4] * &m[8] - &m[5] * &m[7]) - &m[1] * &(&m[3] * &m[8] - &m[5] * &m[6])
        + &m[2] * &(&m[3] * &m[7] - &m[4] * &m[6])
}

fn adjugate3(m: &[Scalar]) -> Vec<Scalar> {
    let c = |a: usize, b: usize, x: usize, y: usize| &m[a] * &m[b] - &m[x] * &m[y];
    vec![
        c(4, 8, 5, 7),
        c(2, 7, 1, 8),
        c(1, 5, 2, 4),
        c(5, 6, 3, 8),
        c(0, 8, 2, 6),
        c(2, 3, 0, 5),
        c(3, 7, 4, 6),
        c(1, 6, 0, 7),
        c(0, 4, 1, 3),
    ]
}

fn matmul3(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            out.push(
                &a[3 * i] * &b[j] + &a[3 * i + 1] * &b[3 + j] + &a[3 * i + 2] * &b[6 + j],
            );
        }
    }
    out
}

impl Deg3Algebra {
    pub fn split(field: GroundField) -> Self {
        Self {
            field,
            kind: Deg3Kind::SplitEtale,
        }
    }

    pub fn matrix3(field: GroundField) -> Self {
        Self {
            field,
            kind: Deg3Kind::Matrix3,
        }
    }

    /// `k[t]/(t^3 + c2 t^2 + c1 t + c0)`; rejects inseparable `f`.
    pub fn cubic(field: GroundField, f: [Scalar; 3]) -> Result<Self> {
        if f.iter().any(|c| c.field() != field) {
            return Err(Error::AlgebraMismatch);
        }
        if cubic_discriminant(&f).is_zero() {
            return Err(Error::NotEtale);
        }
        Ok(Self {
            field,
            kind: Deg3Kind::CubicQuotient { f },
        })
    }

    pub fn from_descriptor(field: GroundField, desc: &AlgebraDescriptor) -> Result<Self> {
        match desc {
            AlgebraDescriptor::Split => Ok(Self::split(field)),
            AlgebraDescriptor::Mat3 => Ok(Self::matrix3(field)),
            AlgebraDescriptor::Cubic { f } => {
                let c0 = field.parse_element(&f[0])?;
                let c1 = field.parse_element(&f[1])?;
                let c2 = field.parse_element(&f[2])?;
                Self::cubic(field, [c0, c1, c2])
            }
        }
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        match &self.kind {
            Deg3Kind::SplitEtale => AlgebraDescriptor::Split,
            Deg3Kind::Matrix3 => AlgebraDescriptor::Mat3,
            Deg3Kind::CubicQuotient { f } => AlgebraDescriptor::Cubic {
                f: [f[0].to_string(), f[1].to_string(), f[2].to_string()],
            },
        }
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn kind(&self) -> &Deg3Kind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            Deg3Kind::Matrix3 => 9,
            _ => 3,
        }
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self.kind, Deg3Kind::Matrix3)
    }

    pub fn zero(&self) -> Deg3Element {
        Deg3Element::new(vec![self.field.zero(); self.dim()])
    }

    pub fn one(&self) -> Deg3Element {
        let mut c = vec![self.field.zero(); self.dim()];
        match self.kind {
            Deg3Kind::SplitEtale => c.iter_mut().for_each(|x| *x = self.field.one()),
            Deg3Kind::CubicQuotient { .. } => c[0] = self.field.one(),
            Deg3Kind::Matrix3 => {
                c[0] = self.field.one();
                c[4] = self.field.one();
                c[8] = self.field.one();
            }
        }
        Deg3Element::new(c)
    }

    pub fn basis(&self, i: usize) -> Deg3Element {
        let mut c = vec![self.field.zero(); self.dim()];
        c[i] = self.field.one();
        Deg3Element::new(c)
    }

    pub fn scalar(&self, c: &Scalar) -> Deg3Element {
        self.one().scale(c)
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Deg3Element> {
        let e = Deg3Element::new(coords);
        self.check(&e)?;
        Ok(e)
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Result<Deg3Element> {
        self.element(coords.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Deg3Element {
        Deg3Element::new((0..self.dim()).map(|_| self.field.random(rng)).collect())
    }

    /// Random element with nonzero norm.
    pub fn random_invertible<R: Rng + ?Sized>(&self, rng: &mut R) -> Deg3Element {
        loop {
            let a = self.random(rng);
            if !self.norm_of(&a).is_zero() {
                return a;
            }
        }
    }

    pub fn check(&self, a: &Deg3Element) -> Result<()> {
        if a.coords.len() != self.dim() || a.coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, a: &Deg3Element, b: &Deg3Element) -> Result<Deg3Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.product(a, b))
    }

    pub(crate) fn product(&self, a: &Deg3Element, b: &Deg3Element) -> Deg3Element {
        let (x, y) = (&a.coords, &b.coords);
        match &self.kind {
            Deg3Kind::SplitEtale => Deg3Element::new(x.iter().zip(y).map(|(p, q)| p * q).collect()),
            Deg3Kind::Matrix3 => Deg3Element::new(matmul3(x, y)),
            Deg3Kind::CubicQuotient { f } => {
                let mut p = vec![self.field.zero(); 5];
                for i in 0..3 {
                    for j in 0..3 {
                        p[i + j] = &p[i + j] + &x[i] * &y[j];
                    }
                }
                for k in (3..5).rev() {
                    let top = std::mem::replace(&mut p[k], self.field.zero());
                    if top.is_zero() {
                        continue;
                    }
                    for (s, c) in f.iter().enumerate() {
                        p[k - 3 + s] = &p[k - 3 + s] - &top * c;
                    }
                }
                p.truncate(3);
                Deg3Element::new(p)
            }
        }
    }

    /// Matrix of left multiplication by `a` on the distinguished basis
    /// (commutative kinds); for `Matrix3` the element itself as a 3x3 matrix.
    pub fn regular_representation(&self, a: &Deg3Element) -> Result<Matrix<Scalar>> {
        self.check(a)?;
        Ok(self.regular_matrix(a))
    }

    fn regular_matrix(&self, a: &Deg3Element) -> Matrix<Scalar> {
        match self.kind {
            Deg3Kind::Matrix3 => {
                Matrix::from_rows(a.coords.chunks(3).map(<[Scalar]>::to_vec).collect())
            }
            _ => {
                let cols: Vec<Vec<Scalar>> = (0..3)
                    .map(|j| self.product(a, &self.basis(j)).into_coords())
                    .collect();
                Matrix::from_columns(&cols)
            }
        }
    }

    pub(crate) fn norm_of(&self, a: &Deg3Element) -> Scalar {
        match self.kind {
            Deg3Kind::SplitEtale => &a.coords[0] * &a.coords[1] * &a.coords[2],
            Deg3Kind::Matrix3 => det3(&a.coords),
            Deg3Kind::CubicQuotient { .. } => det3(self.regular_matrix(a).entries()),
        }
    }

    pub(crate) fn trace_of(&self, a: &Deg3Element) -> Scalar {
        match self.kind {
            Deg3Kind::SplitEtale => &a.coords[0] + &a.coords[1] + &a.coords[2],
            Deg3Kind::Matrix3 => &a.coords[0] + &a.coords[4] + &a.coords[8],
            Deg3Kind::CubicQuotient { .. } => {
                let m = self.regular_matrix(a);
                m.get(0, 0) + m.get(1, 1) + m.get(2, 2)
            }
        }
    }

    pub(crate) fn sharp_of(&self, a: &Deg3Element) -> Deg3Element {
        match self.kind {
            Deg3Kind::Matrix3 => Deg3Element::new(adjugate3(&a.coords)),
            _ => {
                // a^# = a^2 - T(a) a + sigma_2(a) 1
                let m = self.regular_matrix(a);
                let e = m.entries();
                let trace = &e[0] + &e[4] + &e[8];
                let sigma2 = &e[0] * &e[4] - &e[1] * &e[3] + &e[0] * &e[8] - &e[2] * &e[6]
                    + &e[4] * &e[8]
                    - &e[5] * &e[7];
                self.product(a, a)
                    .sub(&a.scale(&trace))
                    .add(&self.scalar(&sigma2))
            }
        }
    }

    pub fn norm(&self, a: &Deg3Element) -> Result<Scalar> {
        self.check(a)?;
        Ok(self.norm_of(a))
    }

    pub fn trace(&self, a: &Deg3Element) -> Result<Scalar> {
        self.check(a)?;
        Ok(self.trace_of(a))
    }

    pub fn sharp(&self, a: &Deg3Element) -> Result<Deg3Element> {
        self.check(a)?;
        Ok(self.sharp_of(a))
    }

    pub fn norm_trace_sharp(&self, a: &Deg3Element) -> Result<(Scalar, Scalar, Deg3Element)> {
        self.check(a)?;
        Ok((self.norm_of(a), self.trace_of(a), self.sharp_of(a)))
    }

    /// `N(a)^{-1} a^#`.
    pub fn inverse(&self, a: &Deg3Element) -> Result<Deg3Element> {
        self.check(a)?;
        let n = self.norm_of(a);
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.sharp_of(a).scale(&n.inverse()?))
    }

    pub fn discriminant_algebra(&self) -> Result<QuadraticEtale> {
        match &self.kind {
            Deg3Kind::SplitEtale => QuadraticEtale::new(self.field.one()),
            Deg3Kind::CubicQuotient { f } => QuadraticEtale::new(cubic_discriminant(f)),
            Deg3Kind::Matrix3 => Err(Error::NotCommutative),
        }
    }

    /// Image of `a` under `k[t]/(f) -> M_3(k)`, `t` going to the companion
    /// matrix of `f`. This is the regular representation, so it is an
    /// injective algebra map commuting with `N`, `T` and `#`.
    pub fn companion_image(&self, a: &Deg3Element) -> Result<Deg3Element> {
        if !matches!(self.kind, Deg3Kind::CubicQuotient { .. }) {
            return Err(Error::UnsupportedSubalgebra(
                "companion embedding needs a cubic quotient".into(),
            ));
        }
        self.check(a)?;
        Ok(Deg3Element::new(self.regular_matrix(a).entries().to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn q() -> GroundField {
        GroundField::Rationals
    }

    fn cube_root_two() -> Deg3Algebra {
        let f = q();
        Deg3Algebra::cubic(f, [f.from_i64(-2), f.zero(), f.zero()]).unwrap()
    }

    #[test]
    fn split_unit_and_norm_trace_sharp() {
        let a = Deg3Algebra::split(q());
        let x = a.element_from_ints(&[2, 3, 5]).unwrap();
        assert_eq!(a.mul(&x, &a.one()).unwrap(), x);
        let (n, t, s) = a.norm_trace_sharp(&x).unwrap();
        assert_eq!(n, q().from_i64(30));
        assert_eq!(t, q().from_i64(10));
        assert_eq!(s, a.element_from_ints(&[15, 10, 6]).unwrap());
    }

    #[test]
    fn matrix_identity() {
        let a = Deg3Algebra::matrix3(q());
        let i = a.one();
        assert_eq!(a.mul(&i, &i).unwrap(), i);
        let (n, t, s) = a.norm_trace_sharp(&i).unwrap();
        assert_eq!((n, t, s), (q().one(), q().from_i64(3), i));
    }

    #[test]
    fn cube_root_of_two_reduction() {
        let a = cube_root_two();
        let t = a.basis(1);
        let t2 = a.basis(2);
        assert_eq!(a.mul(&t, &t2).unwrap(), a.scalar(&q().from_i64(2)));
        // N(t) = det of the companion matrix = 2
        assert_eq!(a.norm(&t).unwrap(), q().from_i64(2));
    }

    #[test]
    fn discriminants() {
        let split = Deg3Algebra::split(q()).discriminant_algebra().unwrap();
        assert!(split.split);
        assert_eq!(split.norm_form(), [q().one(), q().from_i64(-1)]);
        let d = cube_root_two().discriminant_algebra().unwrap();
        assert_eq!(d.d, q().from_i64(-108));
        assert_eq!(square_class(&d.d).unwrap(), SquareClass::SquareFree(BigInt::from(-3)));
        assert!(!d.split);
        let f = q();
        // (t - 1)^2 (t + 2) = t^3 - 3t + 2
        assert_eq!(
            Deg3Algebra::cubic(f, [f.from_i64(2), f.from_i64(-3), f.zero()]),
            Err(Error::NotEtale)
        );
        assert_eq!(
            Deg3Algebra::matrix3(f).discriminant_algebra(),
            Err(Error::NotCommutative)
        );
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let a = Deg3Algebra::split(q());
        let m = Deg3Algebra::matrix3(q());
        assert_eq!(a.mul(&a.one(), &m.one()), Err(Error::AlgebraMismatch));
        let fp = Deg3Algebra::split(GroundField::prime(7).unwrap());
        assert_eq!(a.norm(&fp.one()), Err(Error::AlgebraMismatch));
    }

    fn sampled_algebras() -> Vec<Deg3Algebra> {
        let p = GroundField::prime(1009).unwrap();
        vec![
            Deg3Algebra::split(q()),
            cube_root_two(),
            Deg3Algebra::matrix3(q()),
            Deg3Algebra::split(p),
            Deg3Algebra::cubic(p, [p.from_i64(3), p.from_i64(5), p.from_i64(7)]).unwrap(),
            Deg3Algebra::matrix3(p),
        ]
    }

    #[test]
    fn sampled_norm_trace_sharp_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for alg in sampled_algebras() {
            for _ in 0..50 {
                let a = alg.random(&mut rng);
                let b = alg.random(&mut rng);
                let (n, _, s) = alg.norm_trace_sharp(&a).unwrap();
                assert_eq!(alg.product(&a, &s), alg.scalar(&n), "a a^# = N(a) 1");
                assert_eq!(alg.product(&s, &a), alg.scalar(&n));
                assert_eq!(alg.sharp_of(&s), a.scale(&n), "(a^#)^# = N(a) a");
                let ab = alg.product(&a, &b);
                assert_eq!(alg.norm_of(&ab), &n * &alg.norm_of(&b));
                assert_eq!(alg.trace_of(&ab), alg.trace_of(&alg.product(&b, &a)));
                let c = alg.random(&mut rng);
                assert_eq!(
                    alg.product(&alg.product(&a, &b), &c),
                    alg.product(&a, &alg.product(&b, &c))
                );
            }
        }
    }

    #[test]
    fn companion_embedding_commutes_with_cubic_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let e = cube_root_two();
        let m = Deg3Algebra::matrix3(q());
        for _ in 0..30 {
            let a = e.random(&mut rng);
            let b = e.random(&mut rng);
            let ia = e.companion_image(&a).unwrap();
            let ib = e.companion_image(&b).unwrap();
            assert_eq!(m.product(&ia, &ib), e.companion_image(&e.product(&a, &b)).unwrap());
            assert_eq!(m.norm_of(&ia), e.norm_of(&a));
            assert_eq!(m.trace_of(&ia), e.trace_of(&a));
            assert_eq!(m.sharp_of(&ia), e.companion_image(&e.sharp_of(&a)).unwrap());
        }
        assert_eq!(e.companion_image(&e.one()).unwrap(), m.one());
    }
}
