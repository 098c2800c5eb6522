//! Quadratic forms `q(x) = xᵀ G x` over fields, their invariants over
//! finite fields, and the comparison of the Springer form with
//! `⟨1, -d⟩ ⟂ 3h` factor by factor over `E ⊗ F_p`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::deg3::{Deg3Algebra, Deg3Element, Deg3Kind};
use crate::error::{Error, Result};
use crate::jordan::JordanElement;
use crate::linalg::Matrix;
use crate::report::Check;
use crate::scalars::gf::poly;
use crate::scalars::{FiniteField, Field, Gf, GfModulus, GroundField, Scalar, SquareClass};
use crate::springer::SpringerData;
use crate::tits::TitsModel;

/// Symmetric Gram matrix; `G_ii = q(e_i)` and `G_ij = b(e_i, e_j) / 2`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadraticForm<F> {
    gram: Matrix<F>,
}

impl<F: Field> QuadraticForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::Dimension {
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::Config("Gram matrix must be symmetric".into()));
        }
        Ok(Self { gram })
    }

    pub fn diagonal(entries: &[F]) -> Self {
        Self {
            gram: Matrix::diagonal(entries),
        }
    }

    /// `n` copies of the hyperbolic plane `[[0,1],[1,0]]`.
    pub fn hyperbolic(n: usize, like: &F) -> Self {
        let mut g = Matrix::zeros(2 * n, 2 * n, like);
        for k in 0..n {
            g.set(2 * k, 2 * k + 1, like.one_like());
            g.set(2 * k + 1, 2 * k, like.one_like());
        }
        Self { gram: g }
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[F]) -> F {
        dot(x, &self.gram.apply(x))
    }

    /// `b(x, y) = q(x + y) - q(x) - q(y)`.
    pub fn polar(&self, x: &[F], y: &[F]) -> F {
        let v = dot(x, &self.gram.apply(y));
        v.clone() + v
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let like = self.gram.entries().first().or(other.gram.entries().first());
        let Some(like) = like else {
            return self.clone();
        };
        let mut g = Matrix::zeros(n + m, n + m, like);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.gram.get(i, j).clone());
            }
        }
        for i in 0..m {
            for j in 0..m {
                g.set(n + i, n + j, other.gram.get(i, j).clone());
            }
        }
        Self { gram: g }
    }

    /// `Pᵀ G P`: the form in the basis given by the columns of `P`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Self {
        Self {
            gram: p.transpose().mul(&self.gram).mul(p),
        }
    }
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = a[0].zero_like();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// `Pᵀ G P = diag(entries)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Diagonalization<F> {
    pub entries: Vec<F>,
    pub basis: Matrix<F>,
}

impl<F: Field> Diagonalization<F> {
    pub fn rank(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// Replays the congruence against `form`.
    pub fn verify(&self, form: &QuadraticForm<F>) -> bool {
        form.change_basis(&self.basis).gram == Matrix::diagonal(&self.entries)
    }
}

/// Symmetric Gauss reduction.
pub fn diagonalize<F: Field>(form: &QuadraticForm<F>) -> Diagonalization<F> {
    let n = form.dim();
    if n == 0 {
        return Diagonalization {
            entries: Vec::new(),
            basis: form.gram.clone(),
        };
    }
    let like = form.gram.get(0, 0).clone();
    let mut g = form.gram.clone();
    let mut p = Matrix::identity(n, &like);
    // e_k <- e_k + c e_j, applied to both the Gram and the basis
    let add_col = |g: &mut Matrix<F>, p: &mut Matrix<F>, k: usize, j: usize, c: &F| {
        for r in 0..n {
            let v = g.get(r, k).clone() + c.clone() * g.get(r, j).clone();
            g.set(r, k, v);
            let v = p.get(r, k).clone() + c.clone() * p.get(r, j).clone();
            p.set(r, k, v);
        }
        for r in 0..n {
            let v = g.get(k, r).clone() + c.clone() * g.get(j, r).clone();
            g.set(k, r, v);
        }
    };
    for k in 0..n {
        if g.get(k, k).is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !g.get(j, j).is_zero()) {
                for r in 0..n {
                    let (a, b) = (g.get(r, k).clone(), g.get(r, j).clone());
                    g.set(r, k, b);
                    g.set(r, j, a);
                    let (a, b) = (p.get(r, k).clone(), p.get(r, j).clone());
                    p.set(r, k, b);
                    p.set(r, j, a);
                }
                for r in 0..n {
                    let (a, b) = (g.get(k, r).clone(), g.get(j, r).clone());
                    g.set(k, r, b);
                    g.set(j, r, a);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !g.get(k, j).is_zero()) {
                add_col(&mut g, &mut p, k, j, &like.one_like());
            } else {
                continue;
            }
        }
        let pivot_inv = g.get(k, k).inv().expect("nonzero pivot");
        for j in k + 1..n {
            if g.get(k, j).is_zero() {
                continue;
            }
            let c = -(g.get(k, j).clone() * pivot_inv.clone());
            add_col(&mut g, &mut p, j, k, &c);
        }
    }
    Diagonalization {
        entries: (0..n).map(|i| g.get(i, i).clone()).collect(),
        basis: p,
    }
}

/// Rank, discriminant class and Witt index over a finite field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WittInvariants {
    pub rank: usize,
    pub disc: SquareClass,
    pub witt_index: usize,
}

impl WittInvariants {
    pub fn to_json(&self) -> Value {
        json!({ "rank": self.rank, "disc": self.disc.to_string(), "witt_index": self.witt_index })
    }
}

pub fn witt_invariants<F: FiniteField>(form: &QuadraticForm<F>, seed: u64) -> WittInvariants {
    let d = diagonalize(form);
    let nonzero: Vec<F> = d.entries.iter().filter(|e| !e.is_zero()).cloned().collect();
    let disc = match nonzero.iter().cloned().reduce(|a, b| a * b) {
        Some(p) if !p.is_square() => SquareClass::NonSquare,
        _ => SquareClass::Square,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rest = QuadraticForm::diagonal(&nonzero);
    let mut witt_index = 0;
    while rest.dim() >= 2 {
        let Some(v) = isotropic_with_rng(&rest, &mut rng) else {
            break;
        };
        let gv = rest.gram.apply(&v);
        let k = gv.iter().position(|c| !c.is_zero()).expect("nondegenerate form");
        let gw = rest.gram.column(k);
        let kernel = Matrix::from_rows(vec![gv, gw]).kernel(&v[0]);
        if kernel.is_empty() {
            witt_index += 1;
            break;
        }
        rest = rest.change_basis(&Matrix::from_columns(&kernel));
        witt_index += 1;
    }
    WittInvariants {
        rank: nonzero.len(),
        disc,
        witt_index,
    }
}

/// A nonzero `v` with `q(v) = 0`, or `None` when the form is anisotropic.
pub fn isotropic_vector<F: FiniteField>(form: &QuadraticForm<F>, seed: u64) -> Option<Vec<F>> {
    isotropic_with_rng(form, &mut ChaCha8Rng::seed_from_u64(seed))
}

const SUBSPACE_ATTEMPTS: usize = 256;
const CONIC_ATTEMPTS: usize = 64;

pub(crate) fn isotropic_with_rng<F: FiniteField, R: Rng + ?Sized>(
    form: &QuadraticForm<F>,
    rng: &mut R,
) -> Option<Vec<F>> {
    let n = form.dim();
    if n == 0 {
        return None;
    }
    let like = form.gram.get(0, 0).clone();
    let unit = |i: usize| {
        let mut e = vec![like.zero_like(); n];
        e[i] = like.one_like();
        e
    };
    let found = if let Some(i) = (0..n).find(|&i| form.gram.get(i, i).is_zero()) {
        Some(unit(i))
    } else {
        search(form, rng)
    };
    found.filter(|v| v.iter().any(|c| !c.is_zero()) && form.eval(v).is_zero())
}

fn search<F: FiniteField, R: Rng + ?Sized>(form: &QuadraticForm<F>, rng: &mut R) -> Option<Vec<F>> {
    let n = form.dim();
    let d = diagonalize(form);
    if let Some(i) = d.entries.iter().position(Field::is_zero) {
        return Some(d.basis.column(i));
    }
    match n {
        1 => None,
        2 => {
            let ratio = -(d.entries[1].clone() * d.entries[0].inv()?);
            let s = ratio.sqrt()?;
            Some(d.basis.apply(&[s, d.entries[0].one_like()]))
        }
        _ => {
            let like = d.entries[0].clone();
            for _ in 0..SUBSPACE_ATTEMPTS {
                let cols: Vec<Vec<F>> = (0..3)
                    .map(|_| (0..n).map(|_| like.random_like(rng)).collect())
                    .collect();
                let u = Matrix::from_columns(&cols);
                if u.rank() < 3 {
                    continue;
                }
                let restricted = form.change_basis(&u);
                if let Some(w) = ternary(&restricted, rng) {
                    return Some(u.apply(&w));
                }
            }
            None
        }
    }
}

/// Solves `a x² + b y² + c z² = 0` after diagonalizing a ternary form.
fn ternary<F: FiniteField, R: Rng + ?Sized>(form: &QuadraticForm<F>, rng: &mut R) -> Option<Vec<F>> {
    let d = diagonalize(form);
    if let Some(i) = d.entries.iter().position(Field::is_zero) {
        return Some(d.basis.column(i));
    }
    let (a, b, c) = (d.entries[0].clone(), d.entries[1].clone(), d.entries[2].clone());
    let a_inv = a.inv()?;
    for _ in 0..CONIC_ATTEMPTS {
        let y = a.random_like(rng);
        let rhs = -((b.clone() * y.square() + c.clone()) * a_inv.clone());
        if let Some(x) = rhs.sqrt() {
            return Some(d.basis.apply(&[x, y, a.one_like()]));
        }
    }
    None
}

/// Uniformly re-based isotropic search, so repeated calls spread over the
/// isotropic cone instead of returning a fixed basis vector.
pub fn random_isotropic<F: FiniteField, R: Rng + ?Sized>(form: &QuadraticForm<F>, rng: &mut R) -> Option<Vec<F>> {
    let n = form.dim();
    let like = form.gram.entries().first()?.clone();
    let p = loop {
        let cols: Vec<Vec<F>> = (0..n)
            .map(|_| (0..n).map(|_| like.random_like(rng)).collect())
            .collect();
        let p = Matrix::from_columns(&cols);
        if p.rank() == n {
            break p;
        }
    };
    let w = isotropic_with_rng(&form.change_basis(&p), rng)?;
    let v = p.apply(&w);
    form.eval(&v).is_zero().then_some(v)
}

/// `q_E` on an `E`-basis of `E⊥`, as an `E`-valued Gram matrix.
#[derive(Clone, Debug)]
pub struct SpringerGram {
    basis: Vec<JordanElement>,
    entries: Vec<Vec<Deg3Element>>,
}

impl SpringerGram {
    /// Rank over `E`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[JordanElement] {
        &self.basis
    }

    pub fn entry(&self, i: usize, j: usize) -> &Deg3Element {
        &self.entries[i][j]
    }
}

/// Greedy `E`-basis of `E⊥` and the Gram of `q_E` on it.
pub fn polarize(data: &SpringerData, seed: u64) -> Result<SpringerGram> {
    let alg = data.algebra();
    let field = alg.field();
    let target = data.rank();
    if !target.is_multiple_of(3) {
        return Err(Error::BasisConstructionFailed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis = Vec::new();
    let mut span: Vec<Vec<Scalar>> = Vec::new();
    let mut attempts = 0;
    while span.len() < target {
        attempts += 1;
        if attempts > 64 * (target / 3 + 1) {
            return Err(Error::BasisConstructionFailed);
        }
        let w = data.random_perp(&mut rng);
        let orbit: Vec<Vec<Scalar>> = (0..3)
            .map(|k| data.act_raw(&alg.basis(k), &w).into_coords())
            .collect();
        let mut candidate = span.clone();
        candidate.extend(orbit);
        if Matrix::from_rows(candidate.clone()).rank() == candidate.len() {
            span = candidate;
            basis.push(w);
        }
    }
    let half = field.from_ratio(1, 2)?;
    let q: Vec<Deg3Element> = basis.iter().map(|b| data.q_raw(b)).collect();
    let mut entries = vec![vec![alg.zero(); basis.len()]; basis.len()];
    for i in 0..basis.len() {
        entries[i][i] = q[i].clone();
        for j in i + 1..basis.len() {
            let b = data.q_raw(&basis[i].add(&basis[j])).sub(&q[i]).sub(&q[j]);
            let e = b.scale(&half);
            entries[i][j] = e.clone();
            entries[j][i] = e;
        }
    }
    Ok(SpringerGram { basis, entries })
}

/// One field factor `K = F_p[t]/(g)` of `E ⊗ F_p` with the projection `E → K`.
#[derive(Clone, Debug)]
pub struct ResidueFactor {
    modulus: Arc<GfModulus>,
    images: Vec<Gf>,
}

impl ResidueFactor {
    pub fn modulus(&self) -> &Arc<GfModulus> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn reduce_scalar(&self, c: &Scalar) -> Gf {
        let v = c.as_fp().map(|x| x.value()).unwrap_or(0);
        Gf::from_base(&self.modulus, v)
    }

    pub fn map(&self, a: &Deg3Element) -> Gf {
        let mut acc = Gf::from_base(&self.modulus, 0);
        for (c, img) in a.coords().iter().zip(&self.images) {
            acc = acc + self.reduce_scalar(c) * img.clone();
        }
        acc
    }

    pub fn reduce_gram(&self, g: &SpringerGram) -> QuadraticForm<Gf> {
        let rows = g
            .entries
            .iter()
            .map(|row| row.iter().map(|e| self.map(e)).collect())
            .collect();
        QuadraticForm {
            gram: Matrix::from_rows(rows),
        }
    }
}

/// Field factors of `E ⊗ F_p` for a commutative `E` over a prime field.
pub fn residue_factors(e: &Deg3Algebra) -> Result<Vec<ResidueFactor>> {
    let GroundField::Prime(p) = e.field() else {
        return Err(Error::RequiresPrimeField);
    };
    match e.kind() {
        Deg3Kind::SplitEtale => {
            let ctx = GfModulus::new(p, &[0, 1]);
            Ok((0..3)
                .map(|i| ResidueFactor {
                    modulus: Arc::clone(&ctx),
                    images: (0..3).map(|k| Gf::from_base(&ctx, u64::from(k == i))).collect(),
                })
                .collect())
        }
        Deg3Kind::CubicQuotient { f } => {
            let mut coeffs: Vec<u64> = f.iter().map(|c| c.as_fp().map(|x| x.value()).unwrap_or(0)).collect();
            coeffs.push(1);
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            Ok(poly::factor_squarefree(&coeffs, p, &mut rng)
                .into_iter()
                .map(|g| {
                    let ctx = GfModulus::new(p, &g);
                    let images = [vec![1], vec![0, 1], vec![0, 0, 1]]
                        .iter()
                        .map(|m| Gf::new(&ctx, m))
                        .collect();
                    ResidueFactor { modulus: ctx, images }
                })
                .collect())
        }
        Deg3Kind::Matrix3 => Err(Error::NotCommutative),
    }
}

/// Inverse of `E → ∏ K_i` (Chinese remaindering).
#[derive(Clone, Debug)]
pub struct CrtLift {
    algebra: Deg3Algebra,
    inverse: Matrix<Scalar>,
}

impl CrtLift {
    pub fn new(e: &Deg3Algebra, factors: &[ResidueFactor]) -> Result<Self> {
        let field = e.field();
        let columns: Vec<Vec<Scalar>> = (0..3)
            .map(|k| {
                factors
                    .iter()
                    .flat_map(|f| f.map(&e.basis(k)).coeffs().to_vec())
                    .map(|c| field.from_i64(c as i64))
                    .collect()
            })
            .collect();
        let m = Matrix::from_columns(&columns);
        if m.rows() != 3 {
            return Err(Error::NotEtale);
        }
        Ok(Self {
            algebra: e.clone(),
            inverse: m.inverse().ok_or(Error::NotEtale)?,
        })
    }

    pub fn lift(&self, parts: &[Gf]) -> Deg3Element {
        let field = self.algebra.field();
        let r: Vec<Scalar> = parts
            .iter()
            .flat_map(|g| g.coeffs().to_vec())
            .map(|c| field.from_i64(c as i64))
            .collect();
        Deg3Element::new(self.inverse.apply(&r))
    }
}

pub const DISCR_ANCHOR: &str = "q_E={N_{\\delta(E)}}_E\\perp {\\bf h}_E\\perp {\\bf h}_E\\perp {\\bf h}_E";

/// Per-factor comparison of `q_E` with `⟨1, -d⟩ ⟂ 3h`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorComparison {
    pub modulus: Vec<u64>,
    pub observed: WittInvariants,
    pub expected: WittInvariants,
}

impl FactorComparison {
    pub fn passed(&self) -> bool {
        self.observed == self.expected
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscrOutcome {
    pub d: Scalar,
    pub e_rank: usize,
    pub factors: Vec<FactorComparison>,
}

impl DiscrOutcome {
    pub fn passed(&self) -> bool {
        self.e_rank == 8 && !self.factors.is_empty() && self.factors.iter().all(FactorComparison::passed)
    }

    pub fn checks(&self) -> Vec<Check> {
        let mut out = vec![Check::outcome(
            "springer_rank",
            "E^\\perp",
            1,
            self.e_rank == 8,
            json!({ "e_rank": self.e_rank }),
        )];
        for (i, f) in self.factors.iter().enumerate() {
            let detail = json!({
                "factor": i,
                "modulus": f.modulus.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "d": self.d.to_string(),
                "observed": f.observed.to_json(),
                "expected": f.expected.to_json(),
            });
            out.push(Check::outcome(&format!("factor_{i}"), DISCR_ANCHOR, 1, f.passed(), detail));
        }
        out
    }
}

/// Compares the invariants of `q_E` with those of `⟨1, -d⟩ ⟂ 3h` over
/// every residue field of `E ⊗ F_p`, for split `J = Tits(M_3, λ)`.
pub fn lemma_discr_check(tits: &TitsModel, data: &SpringerData, seed: u64) -> Result<DiscrOutcome> {
    if !matches!(tits.algebra().kind(), Deg3Kind::Matrix3) || data.model().dim() != 27 {
        return Err(Error::NotSplitModel);
    }
    if !matches!(tits.algebra().field(), GroundField::Prime(_)) {
        return Err(Error::RequiresPrimeField);
    }
    let e = data.algebra();
    let d = e.discriminant_algebra()?.d;
    let gram = polarize(data, seed)?;
    let factors = residue_factors(e)?;
    let rows = factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let s = seed.wrapping_add(i as u64);
            let observed = witt_invariants(&f.reduce_gram(&gram), s);
            let one = Gf::from_base(f.modulus(), 1);
            let nd = -f.reduce_scalar(&d);
            let model = QuadraticForm::diagonal(&[one.clone(), nd]).orthogonal_sum(&QuadraticForm::hyperbolic(3, &one));
            FactorComparison {
                modulus: f.modulus().polynomial().to_vec(),
                observed,
                expected: witt_invariants(&model, s),
            }
        })
        .collect();
    Ok(DiscrOutcome {
        d,
        e_rank: gram.rank(),
        factors: rows,
    })
}

/// Smallest monic irreducible cubic `t³ + c1 t + c0` over `F_p`, as `[c0, c1, c2]`.
pub fn irreducible_cubic(p: u64) -> [u64; 3] {
    for c1 in 0..p {
        for c0 in 1..p {
            if (0..p).all(|x| poly::eval(&[c0, c1, 0, 1], x, p) != 0) {
                return [c0, c1, 0];
            }
        }
    }
    unreachable!("irreducible cubics exist over every prime field")
}

/// `(t - 1)(t² - n)` with `n` the smallest non-residue, as `[c0, c1, c2]`.
/// Its discriminant is a non-square.
pub fn linear_times_quadratic_cubic(p: u64) -> [u64; 3] {
    let n = (2..p)
        .find(|&n| crate::scalars::Fp::new(n, p).pow((p as u128 - 1) / 2).value() != 1)
        .expect("non-residue exists");
    let f = poly::mul(&[p - 1, 1], &[p - n, 0, 1], p);
    [f[0], f[1], f[2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    fn fp(v: i64, p: u64) -> Fp {
        Fp::from_i64(v, p)
    }

    fn form(rows: &[&[i64]], p: u64) -> QuadraticForm<Fp> {
        QuadraticForm::new(Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| fp(v, p)).collect()).collect(),
        ))
        .unwrap()
    }

    #[test]
    fn hyperbolic_plane_over_q() {
        let f = GroundField::Rationals;
        let g = QuadraticForm::new(Matrix::from_rows(vec![
            vec![f.zero(), f.one()],
            vec![f.one(), f.zero()],
        ]))
        .unwrap();
        let d = diagonalize(&g);
        assert_eq!(d.entries, vec![f.from_i64(2), f.from_ratio(-1, 2).unwrap()]);
        assert!(d.verify(&g));
    }

    #[test]
    fn identity_and_zero_forms() {
        let id = form(&[&[1, 0], &[0, 1]], 7);
        assert_eq!(diagonalize(&id).entries, vec![fp(1, 7), fp(1, 7)]);
        let zero = form(&[&[0, 0], &[0, 0]], 7);
        let d = diagonalize(&zero);
        assert_eq!(d.rank(), 0);
        assert!(d.verify(&zero));
    }

    #[test]
    fn invariants_over_f7() {
        let h = form(&[&[1, 0], &[0, -1]], 7);
        let w = witt_invariants(&h, 0);
        assert_eq!((w.rank, w.disc, w.witt_index), (2, SquareClass::NonSquare, 1));
        let aniso = form(&[&[1, 0], &[0, 1]], 7);
        let w = witt_invariants(&aniso, 0);
        assert_eq!((w.rank, w.disc, w.witt_index), (2, SquareClass::Square, 0));
        assert_eq!(isotropic_vector(&aniso, 3), None);
        let four_h = QuadraticForm::hyperbolic(4, &fp(0, 101));
        let w = witt_invariants(&four_h, 1);
        assert_eq!((w.rank, w.disc, w.witt_index), (8, SquareClass::Square, 4));
    }

    #[test]
    fn isotropic_examples() {
        let h = form(&[&[0, 1], &[1, 0]], 11);
        assert_eq!(isotropic_vector(&h, 0), Some(vec![fp(1, 11), fp(0, 11)]));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let entries: Vec<Fp> = (0..8).map(|_| Fp::new(rng.gen_range(1..1009), 1009)).collect();
            let q = QuadraticForm::diagonal(&entries);
            let v = isotropic_vector(&q, rng.gen()).unwrap();
            assert!(q.eval(&v).is_zero() && v.iter().any(|c| !c.is_zero()));
        }
    }

    #[test]
    fn residue_factors_and_lift() {
        let p = 101;
        let f = GroundField::prime(p).unwrap();
        for c in [irreducible_cubic(p), linear_times_quadratic_cubic(p)] {
            let e = Deg3Algebra::cubic(f, c.map(|v| f.from_i64(v as i64))).unwrap();
            let factors = residue_factors(&e).unwrap();
            assert_eq!(factors.iter().map(ResidueFactor::degree).sum::<usize>(), 3);
            let lift = CrtLift::new(&e, &factors).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            let (a, b) = (e.random(&mut rng), e.random(&mut rng));
            let ab = e.mul(&a, &b).unwrap();
            for fac in &factors {
                assert_eq!(fac.map(&ab), fac.map(&a) * fac.map(&b));
            }
            let parts: Vec<Gf> = factors.iter().map(|fac| fac.map(&a)).collect();
            assert_eq!(lift.lift(&parts), a);
        }
        let d = linear_times_quadratic_cubic(p).map(|v| f.from_i64(v as i64));
        let disc = crate::deg3::cubic_discriminant(&d);
        assert!(!disc.as_fp().unwrap().is_square());
    }
}
