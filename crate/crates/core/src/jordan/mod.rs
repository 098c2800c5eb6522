//! Cubic Jordan algebras presented by a cubic norm structure.
//!
//! A [`CubicJordanModel`] stores the norm `N` and the adjoint `#` as sparse
//! coefficient tables in the coordinates of the underlying module. Every
//! other operation (cross product, traces, `U`, the triple product,
//! inverses, powers and the generic minimal polynomial) is derived from
//! those two tables and the unit.

mod axioms;

use std::fmt;

use rand::Rng;

use crate::deg3::{cubic_discriminant, Deg3Algebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{GroundField, Scalar};

pub use axioms::{axiom_suite, cubic_axioms, quadratic_axioms, trial_rng, QuadraticJordan, SuiteReport};

/// Coordinate vector of an element of a cubic Jordan model.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JordanElement {
    coords: Vec<Scalar>,
}

impl JordanElement {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
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

    /// Coordinates rendered as exact strings.
    pub fn render(&self) -> Vec<String> {
        self.coords.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for JordanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

/// `coeff * x_i * x_j` contributing to output coordinate `out`, `i <= j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SharpTerm {
    pub out: usize,
    pub i: usize,
    pub j: usize,
    pub coeff: Scalar,
}

/// `coeff * x_i * x_j * x_k`, `i <= j <= k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormTerm {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Scalar,
}

/// Coefficients of the generic minimal polynomial
/// `m_x(T) = T^3 - c2 T^2 + c1 T - c0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinPoly {
    pub c2: Scalar,
    pub c1: Scalar,
    pub c0: Scalar,
    pub disc: Scalar,
    pub etale: bool,
}

#[derive(Clone, Debug)]
pub struct CubicJordanModel {
    field: GroundField,
    dim: usize,
    unit: JordanElement,
    norm_terms: Vec<NormTerm>,
    sharp_terms: Vec<SharpTerm>,
    trace_linear: Vec<Scalar>,
    trace_gram: Matrix<Scalar>,
}

impl CubicJordanModel {
    /// Builds a model from explicit coefficient tables.
    pub fn from_tables(
        field: GroundField,
        dim: usize,
        unit: JordanElement,
        norm_terms: Vec<NormTerm>,
        sharp_terms: Vec<SharpTerm>,
    ) -> Result<Self> {
        if unit.dim() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: unit.dim(),
            });
        }
        let in_range = norm_terms.iter().all(|t| t.i <= t.j && t.j <= t.k && t.k < dim)
            && sharp_terms.iter().all(|t| t.i <= t.j && t.j < dim && t.out < dim);
        if !in_range {
            return Err(Error::Dimension { expected: dim, found: 0 });
        }
        let zero = field.zero();
        let mut model = Self {
            field,
            dim,
            unit,
            norm_terms: norm_terms.into_iter().filter(|t| !t.coeff.is_zero()).collect(),
            sharp_terms: sharp_terms.into_iter().filter(|t| !t.coeff.is_zero()).collect(),
            trace_linear: Vec::new(),
            trace_gram: Matrix::zeros(dim, dim, &zero),
        };
        model.trace_linear = (0..dim)
            .map(|a| model.partial_norm_raw(&model.unit, &model.basis(a)))
            .collect();
        let mut gram = Matrix::zeros(dim, dim, &zero);
        for a in 0..dim {
            for b in a..dim {
                let ea = model.basis(a);
                let eb = model.basis(b);
                let v = &model.trace_linear[a] * &model.trace_linear[b] - model.n_1xy(&ea, &eb);
                gram.set(a, b, v.clone());
                gram.set(b, a, v);
            }
        }
        model.trace_gram = gram;
        Ok(model)
    }

    /// Extracts the coefficient tables of a homogeneous cubic norm and a
    /// homogeneous quadratic adjoint given as closed-form evaluators.
    pub fn from_closed_forms<N, S>(
        field: GroundField,
        dim: usize,
        unit: JordanElement,
        norm: N,
        sharp: S,
    ) -> Result<Self>
    where
        N: Fn(&JordanElement) -> Scalar,
        S: Fn(&JordanElement) -> JordanElement,
    {
        let e = |idx: &[(usize, i64)]| {
            let mut c = vec![field.zero(); dim];
            for &(i, v) in idx {
                c[i] = &c[i] + &field.from_i64(v);
            }
            JordanElement::new(c)
        };
        let half = field.from_ratio(1, 2)?;

        let diag_sharp: Vec<JordanElement> = (0..dim).map(|i| sharp(&e(&[(i, 1)]))).collect();
        let mut sharp_terms = Vec::new();
        for i in 0..dim {
            for j in i..dim {
                let coeffs = if i == j {
                    diag_sharp[i].clone()
                } else {
                    sharp(&e(&[(i, 1), (j, 1)]))
                        .sub(&diag_sharp[i])
                        .sub(&diag_sharp[j])
                };
                for (out, c) in coeffs.into_coords().into_iter().enumerate() {
                    if !c.is_zero() {
                        sharp_terms.push(SharpTerm { out, i, j, coeff: c });
                    }
                }
            }
        }

        // N(e_i + s e_j) = c_iii + s c_iij + s^2 c_ijj + s^3 c_jjj
        let cube: Vec<Scalar> = (0..dim).map(|i| norm(&e(&[(i, 1)]))).collect();
        let mut pair = vec![vec![None; dim]; dim];
        let mut norm_terms = Vec::new();
        for i in 0..dim {
            if !cube[i].is_zero() {
                norm_terms.push(NormTerm { i, j: i, k: i, coeff: cube[i].clone() });
            }
            for j in (i + 1)..dim {
                let plus = norm(&e(&[(i, 1), (j, 1)]));
                let minus = norm(&e(&[(i, 1), (j, -1)]));
                let iij = &(&(&plus - &minus) * &half) - &cube[j];
                let ijj = &(&(&plus + &minus) * &half) - &cube[i];
                if !iij.is_zero() {
                    norm_terms.push(NormTerm { i, j: i, k: j, coeff: iij.clone() });
                }
                if !ijj.is_zero() {
                    norm_terms.push(NormTerm { i, j, k: j, coeff: ijj.clone() });
                }
                pair[i][j] = Some(plus);
            }
        }
        let single = |i: usize| cube[i].clone();
        let both = |i: usize, j: usize| pair[i.min(j)][i.max(j)].clone().expect("pair evaluated");
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let c = norm(&e(&[(i, 1), (j, 1), (k, 1)])) - both(i, j) - both(i, k) - both(j, k)
                        + single(i)
                        + single(j)
                        + single(k);
                    if !c.is_zero() {
                        norm_terms.push(NormTerm { i, j, k, coeff: c });
                    }
                }
            }
        }
        Self::from_tables(field, dim, unit, norm_terms, sharp_terms)
    }

    /// A degree-3 associative algebra viewed as a cubic Jordan algebra.
    pub fn from_deg3(alg: &Deg3Algebra) -> Result<Self> {
        let wrap = |x: &JordanElement| crate::deg3::Deg3Element::new(x.coords().to_vec());
        Self::from_closed_forms(
            alg.field(),
            alg.dim(),
            JordanElement::new(alg.one().into_coords()),
            |x| alg.norm_of(&wrap(x)),
            |x| JordanElement::new(alg.sharp_of(&wrap(x)).into_coords()),
        )
    }

    /// Same model with `delta` added to the coefficient of `x_i x_j` in
    /// output coordinate `out` of the adjoint table.
    pub fn perturb_sharp(&self, out: usize, i: usize, j: usize, delta: &Scalar) -> Result<Self> {
        let (i, j) = (i.min(j), i.max(j));
        let mut terms = self.sharp_terms.clone();
        match terms.iter_mut().find(|t| t.out == out && t.i == i && t.j == j) {
            Some(t) => t.coeff = &t.coeff + delta,
            None => terms.push(SharpTerm { out, i, j, coeff: delta.clone() }),
        }
        Self::from_tables(self.field, self.dim, self.unit.clone(), self.norm_terms.clone(), terms)
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &JordanElement {
        &self.unit
    }

    pub fn norm_terms(&self) -> &[NormTerm] {
        &self.norm_terms
    }

    pub fn sharp_terms(&self) -> &[SharpTerm] {
        &self.sharp_terms
    }

    /// Gram matrix of the bilinear trace `T(x, y)` on the coordinate basis.
    pub fn trace_gram(&self) -> &Matrix<Scalar> {
        &self.trace_gram
    }

    pub fn zero(&self) -> JordanElement {
        JordanElement::new(vec![self.field.zero(); self.dim])
    }

    pub fn basis(&self, i: usize) -> JordanElement {
        let mut c = vec![self.field.zero(); self.dim];
        c[i] = self.field.one();
        JordanElement::new(c)
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<JordanElement> {
        let x = JordanElement::new(coords);
        self.check(&x)?;
        Ok(x)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> JordanElement {
        JordanElement::new((0..self.dim).map(|_| self.field.random(rng)).collect())
    }

    pub fn random_invertible<R: Rng + ?Sized>(&self, rng: &mut R) -> JordanElement {
        loop {
            let x = self.random(rng);
            if !self.norm_raw(&x).is_zero() {
                return x;
            }
        }
    }

    pub fn check(&self, x: &JordanElement) -> Result<()> {
        if x.dim() != self.dim || x.coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::ModelMismatch);
        }
        Ok(())
    }

    // Raw evaluators assume operands were checked.

    pub(crate) fn norm_raw(&self, x: &JordanElement) -> Scalar {
        let c = &x.coords;
        self.norm_terms.iter().fold(self.field.zero(), |acc, t| {
            acc + &t.coeff * &c[t.i] * &c[t.j] * &c[t.k]
        })
    }

    pub(crate) fn partial_norm_raw(&self, x: &JordanElement, y: &JordanElement) -> Scalar {
        let (a, b) = (&x.coords, &y.coords);
        self.norm_terms.iter().fold(self.field.zero(), |acc, t| {
            let d = &b[t.i] * &a[t.j] * &a[t.k] + &a[t.i] * &b[t.j] * &a[t.k] + &a[t.i] * &a[t.j] * &b[t.k];
            acc + &t.coeff * &d
        })
    }

    pub(crate) fn sharp_raw(&self, x: &JordanElement) -> JordanElement {
        let c = &x.coords;
        let mut out = vec![self.field.zero(); self.dim];
        for t in &self.sharp_terms {
            if c[t.i].is_zero() || c[t.j].is_zero() {
                continue;
            }
            out[t.out] = &out[t.out] + &t.coeff * &c[t.i] * &c[t.j];
        }
        JordanElement::new(out)
    }

    pub(crate) fn cross_raw(&self, x: &JordanElement, y: &JordanElement) -> JordanElement {
        let (a, b) = (&x.coords, &y.coords);
        let mut out = vec![self.field.zero(); self.dim];
        for t in &self.sharp_terms {
            let s = &a[t.i] * &b[t.j] + &a[t.j] * &b[t.i];
            if s.is_zero() {
                continue;
            }
            out[t.out] = &out[t.out] + &t.coeff * &s;
        }
        JordanElement::new(out)
    }

    pub(crate) fn trace_raw(&self, x: &JordanElement) -> Scalar {
        dot(&self.trace_linear, &x.coords)
    }

    pub(crate) fn trace_bilinear_raw(&self, x: &JordanElement, y: &JordanElement) -> Scalar {
        dot(&x.coords, &self.trace_gram.apply(&y.coords))
    }

    /// `N(1, x, y) = dN(1 + x, y) - dN(1, y) - dN(x, y)`.
    fn n_1xy(&self, x: &JordanElement, y: &JordanElement) -> Scalar {
        self.partial_norm_raw(&self.unit.add(x), y)
            - self.partial_norm_raw(&self.unit, y)
            - self.partial_norm_raw(x, y)
    }

    pub(crate) fn u_raw(&self, x: &JordanElement, y: &JordanElement) -> JordanElement {
        let t = self.trace_bilinear_raw(x, y);
        x.scale(&t).sub(&self.cross_raw(&self.sharp_raw(x), y))
    }

    pub fn norm(&self, x: &JordanElement) -> Result<Scalar> {
        self.check(x)?;
        Ok(self.norm_raw(x))
    }

    /// Partial polarization `dN(x, y)`: quadratic in `x`, linear in `y`.
    pub fn partial_norm(&self, x: &JordanElement, y: &JordanElement) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.partial_norm_raw(x, y))
    }

    pub fn sharp(&self, x: &JordanElement) -> Result<JordanElement> {
        self.check(x)?;
        Ok(self.sharp_raw(x))
    }

    /// `x × y = (x + y)^# - x^# - y^#`.
    pub fn cross(&self, x: &JordanElement, y: &JordanElement) -> Result<JordanElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.cross_raw(x, y))
    }

    pub fn trace(&self, x: &JordanElement) -> Result<Scalar> {
        self.check(x)?;
        Ok(self.trace_raw(x))
    }

    /// `(T(x), T(x, y))` with `T(x) = dN(1, x)` and
    /// `T(x, y) = T(x) T(y) - N(1, x, y)`.
    pub fn trace_forms(&self, x: &JordanElement, y: &JordanElement) -> Result<(Scalar, Scalar)> {
        self.check(x)?;
        self.check(y)?;
        let direct = self.trace_raw(x) * self.trace_raw(y) - self.n_1xy(x, y);
        Ok((self.trace_raw(x), direct))
    }

    pub fn trace_bilinear(&self, x: &JordanElement, y: &JordanElement) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.trace_bilinear_raw(x, y))
    }

    /// `U_x y = T(x, y) x - x^# × y`.
    pub fn u_op(&self, x: &JordanElement, y: &JordanElement) -> Result<JordanElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.u_raw(x, y))
    }

    /// `{x, y, z} = U_{x+z} y - U_x y - U_z y`.
    pub fn triple(&self, x: &JordanElement, y: &JordanElement, z: &JordanElement) -> Result<JordanElement> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(self.u_raw(&x.add(z), y).sub(&self.u_raw(x, y)).sub(&self.u_raw(z, y)))
    }

    /// Matrix of `U_x` on the coordinate basis, column `j` being `U_x e_j`.
    pub fn u_matrix(&self, x: &JordanElement) -> Result<Matrix<Scalar>> {
        self.check(x)?;
        let xs = self.sharp_raw(x);
        let tx = self.trace_gram.apply(&x.coords);
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| {
                let ej = self.basis(j);
                x.scale(&tx[j]).sub(&self.cross_raw(&xs, &ej)).into_coords()
            })
            .collect();
        Ok(Matrix::from_columns(&cols))
    }

    /// `x^{-1} = N(x)^{-1} x^#`.
    pub fn inverse(&self, x: &JordanElement) -> Result<JordanElement> {
        self.check(x)?;
        let n = self.norm_raw(x);
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.sharp_raw(x).scale(&n.inverse()?))
    }

    /// [`Self::inverse`] followed by the `U`-operator checks
    /// `U_x x^{-1} = x` and `U_{x^{-1}} U_x = id`.
    pub fn inverse_checked(&self, x: &JordanElement) -> Result<JordanElement> {
        let inv = self.inverse(x)?;
        if self.u_raw(x, &inv) != *x {
            return Err(Error::NotInvertible);
        }
        let prod = self.u_matrix(&inv)?.mul(&self.u_matrix(x)?);
        if prod != Matrix::identity(self.dim, &self.field.zero()) {
            return Err(Error::NotInvertible);
        }
        Ok(inv)
    }

    /// `x^2 = U_x 1`.
    pub fn square(&self, x: &JordanElement) -> Result<JordanElement> {
        self.u_op(x, &self.unit)
    }

    /// `x^3 = U_x x`.
    pub fn cube(&self, x: &JordanElement) -> Result<JordanElement> {
        self.u_op(x, x)
    }

    pub fn generic_min_poly(&self, x: &JordanElement) -> Result<MinPoly> {
        self.check(x)?;
        let c2 = self.trace_raw(x);
        let c1 = self.trace_raw(&self.sharp_raw(x));
        let c0 = self.norm_raw(x);
        // monic T^3 + a T^2 + b T + c with a = -c2, b = c1, c = -c0
        let disc = cubic_discriminant(&[-&c0, c1.clone(), -&c2]);
        let etale = !disc.is_zero();
        Ok(MinPoly { c2, c1, c0, disc, etale })
    }

    /// `x^3 - c2 x^2 + c1 x - c0 1` with U-operational powers.
    pub fn min_poly_residual(&self, x: &JordanElement) -> Result<JordanElement> {
        let m = self.generic_min_poly(x)?;
        let x2 = self.u_raw(x, &self.unit);
        let x3 = self.u_raw(x, x);
        Ok(x3
            .sub(&x2.scale(&m.c2))
            .add(&x.scale(&m.c1))
            .sub(&self.unit.scale(&m.c0)))
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let zero = a[0].field().zero();
    a.iter().zip(b).fold(zero, |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x * y
        }
    })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::deg3::Deg3Algebra;

    fn fp() -> GroundField {
        GroundField::prime(1009).unwrap()
    }

    #[test]
    fn associative_algebra_as_cubic_jordan() {
        let q = GroundField::Rationals;
        let alg = Deg3Algebra::matrix3(q);
        let m = CubicJordanModel::from_deg3(&alg).unwrap();
        assert_eq!(m.dim(), 9);
        assert_eq!(m.trace(m.unit()).unwrap(), q.from_i64(3));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let x = m.random(&mut rng);
            let a = crate::deg3::Deg3Element::new(x.coords().to_vec());
            assert_eq!(m.norm(&x).unwrap(), alg.norm(&a).unwrap());
            assert_eq!(m.sharp(&x).unwrap().coords(), alg.sharp(&a).unwrap().coords());
            assert_eq!(m.trace(&x).unwrap(), alg.trace(&a).unwrap());
        }
    }

    #[test]
    fn trace_form_matches_gram_and_is_symmetric() {
        let m = CubicJordanModel::from_deg3(&Deg3Algebra::matrix3(fp())).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let x = m.random(&mut rng);
            let y = m.random(&mut rng);
            let (_, txy) = m.trace_forms(&x, &y).unwrap();
            let (_, tyx) = m.trace_forms(&y, &x).unwrap();
            assert_eq!(txy, tyx);
            assert_eq!(txy, m.trace_bilinear(&x, &y).unwrap());
        }
    }

    #[test]
    fn inverse_rejects_singular() {
        let m = CubicJordanModel::from_deg3(&Deg3Algebra::split(fp())).unwrap();
        let x = m.element(vec![fp().from_i64(1), fp().zero(), fp().from_i64(2)]).unwrap();
        assert_eq!(m.inverse(&x), Err(Error::NotInvertible));
        assert_eq!(m.inverse_checked(m.unit()).unwrap(), *m.unit());
    }

    #[test]
    fn model_mismatch() {
        let m = CubicJordanModel::from_deg3(&Deg3Algebra::split(fp())).unwrap();
        let other = CubicJordanModel::from_deg3(&Deg3Algebra::matrix3(fp())).unwrap();
        assert_eq!(m.u_op(m.unit(), other.unit()), Err(Error::ModelMismatch));
    }
}
