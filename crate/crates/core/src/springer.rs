//! Springer-form data attached to a cubic étale subalgebra `E ⊂ J`.
//!
//! `J = E ⊕ E⊥` for the bilinear trace, `E` acts on `E⊥` by
//! `a·x = -a × x`, and for `x ∈ E⊥` the adjoint splits as
//! `x^# = q_E(x) + r_E(x)` with `q_E(x) ∈ E` (the Springer form) and
//! `r_E(x) ∈ E⊥`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::deg3::{Deg3Algebra, Deg3Element, Deg3Kind};
use crate::error::{Error, Result};
use crate::jordan::{trial_rng, CubicJordanModel, JordanElement};
use crate::linalg::Matrix;
use crate::quadforms;
use crate::report::Check;
use crate::scalars::{GroundField, Scalar};
use crate::tits::TitsModel;

/// Config form of an embedding: `{"subalgebra":"first-slot"}`,
/// `{"subalgebra":"diagonal-mat3"}` or `{"subalgebra":"companion","f":[c0,c1,c2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "subalgebra", rename_all = "kebab-case")]
pub enum SubalgebraDescriptor {
    FirstSlot,
    DiagonalMat3,
    Companion { f: [String; 3] },
}

/// A linear injection `ι: E → J` of a commutative degree-3 algebra.
#[derive(Clone, Debug)]
pub struct EtaleEmbedding {
    algebra: Deg3Algebra,
    images: Vec<JordanElement>,
    gram: Matrix<Scalar>,
}

impl EtaleEmbedding {
    /// `images[k] = ι(e_k)` for the coordinate basis of `E`.
    pub fn new(model: &CubicJordanModel, algebra: Deg3Algebra, images: Vec<JordanElement>) -> Result<Self> {
        if !algebra.is_commutative() {
            return Err(Error::NotCommutative);
        }
        if algebra.field() != model.field() {
            return Err(Error::AlgebraMismatch);
        }
        if images.len() != algebra.dim() {
            return Err(Error::Dimension {
                expected: algebra.dim(),
                found: images.len(),
            });
        }
        for x in &images {
            model.check(x)?;
        }
        let mut emb = Self {
            algebra,
            images,
            gram: Matrix::zeros(3, 3, &model.field().zero()),
        };
        if emb.iota_raw(&emb.algebra.one()) != *model.unit() {
            return Err(Error::UnsupportedSubalgebra("embedding does not send 1 to 1".into()));
        }
        for i in 0..3 {
            for j in 0..3 {
                let t = model.trace_bilinear_raw(&emb.images[i], &emb.images[j]);
                emb.gram.set(i, j, t);
            }
        }
        Ok(emb)
    }

    /// `E` itself sitting in the first slot of `Tits(E, λ)`.
    pub fn first_slot(tits: &TitsModel) -> Result<Self> {
        let alg = tits.algebra().clone();
        if !alg.is_commutative() {
            return Err(Error::NotCommutative);
        }
        let images = (0..3)
            .map(|k| tits.embed_first_slot(&alg.basis(k)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tits.model(), alg, images)
    }

    /// Diagonal matrices in the first slot of `Tits(M_3, λ)`.
    pub fn diagonal_mat3(tits: &TitsModel) -> Result<Self> {
        require_mat3(tits)?;
        let f = tits.algebra().field();
        let images = (0..3)
            .map(|k| tits.embed_first_slot(&tits.algebra().basis(4 * k)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tits.model(), Deg3Algebra::split(f), images)
    }

    /// `k[t]/(f)` via companion matrices in the first slot of `Tits(M_3, λ)`.
    pub fn companion(tits: &TitsModel, f: [Scalar; 3]) -> Result<Self> {
        require_mat3(tits)?;
        let alg = Deg3Algebra::cubic(tits.algebra().field(), f)?;
        let images = (0..3)
            .map(|k| {
                let m = alg.companion_image(&alg.basis(k))?;
                tits.embed_first_slot(&m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tits.model(), alg, images)
    }

    pub fn from_descriptor(tits: &TitsModel, desc: &SubalgebraDescriptor) -> Result<Self> {
        match desc {
            SubalgebraDescriptor::FirstSlot => Self::first_slot(tits),
            SubalgebraDescriptor::DiagonalMat3 => Self::diagonal_mat3(tits),
            SubalgebraDescriptor::Companion { f } => {
                let field = tits.algebra().field();
                let c = [
                    field.parse_element(&f[0])?,
                    field.parse_element(&f[1])?,
                    field.parse_element(&f[2])?,
                ];
                Self::companion(tits, c)
            }
        }
    }

    pub fn algebra(&self) -> &Deg3Algebra {
        &self.algebra
    }

    pub fn images(&self) -> &[JordanElement] {
        &self.images
    }

    /// Gram matrix of `T` on `ι(E)`.
    pub fn gram(&self) -> &Matrix<Scalar> {
        &self.gram
    }

    fn iota_raw(&self, a: &Deg3Element) -> JordanElement {
        let mut acc = JordanElement::new(vec![self.algebra.field().zero(); self.images[0].dim()]);
        for (c, img) in a.coords().iter().zip(&self.images) {
            if !c.is_zero() {
                acc = acc.add(&img.scale(c));
            }
        }
        acc
    }

    pub fn iota(&self, a: &Deg3Element) -> Result<JordanElement> {
        self.algebra.check(a)?;
        Ok(self.iota_raw(a))
    }

    /// First sampled `a` with `N(ι a) != N(a)` or `ι(a)^# != ι(a^#)`.
    pub fn homomorphism_witness(&self, model: &CubicJordanModel, samples: usize, seed: u64) -> Option<Deg3Element> {
        (0..samples)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(seed, t);
                let a = self.algebra.random(&mut rng);
                let ia = self.iota_raw(&a);
                let ok = model.norm_raw(&ia) == self.algebra.norm_of(&a)
                    && model.sharp_raw(&ia) == self.iota_raw(&self.algebra.sharp_of(&a));
                (!ok).then_some(a)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next()
    }
}

fn require_mat3(tits: &TitsModel) -> Result<()> {
    match tits.algebra().kind() {
        Deg3Kind::Matrix3 => Ok(()),
        _ => Err(Error::UnsupportedSubalgebra(
            "this embedding needs Tits(M_3, λ)".into(),
        )),
    }
}

/// `E⊥` with the projections of `J = E ⊕ E⊥`.
#[derive(Clone, Debug)]
pub struct SpringerData {
    model: CubicJordanModel,
    embedding: EtaleEmbedding,
    basis_perp: Vec<JordanElement>,
    /// Row `i` is the functional `x ↦ T(ι(e_i), x)`.
    pairing: Matrix<Scalar>,
    gram_inv: Matrix<Scalar>,
}

pub fn orthogonal_complement(model: &CubicJordanModel, emb: &EtaleEmbedding) -> Result<SpringerData> {
    let gram_inv = emb.gram.inverse().ok_or(Error::DegenerateTrace)?;
    let g = model.trace_gram();
    let rows = emb.images.iter().map(|img| g.apply(img.coords())).collect();
    let pairing = Matrix::from_rows(rows);
    let basis_perp = pairing
        .kernel(&model.field().zero())
        .into_iter()
        .map(JordanElement::new)
        .collect();
    Ok(SpringerData {
        model: model.clone(),
        embedding: emb.clone(),
        basis_perp,
        pairing,
        gram_inv,
    })
}

impl SpringerData {
    pub fn model(&self) -> &CubicJordanModel {
        &self.model
    }

    pub fn embedding(&self) -> &EtaleEmbedding {
        &self.embedding
    }

    pub fn algebra(&self) -> &Deg3Algebra {
        &self.embedding.algebra
    }

    pub fn basis_perp(&self) -> &[JordanElement] {
        &self.basis_perp
    }

    pub fn rank(&self) -> usize {
        self.basis_perp.len()
    }

    /// Coordinates in `E` of the `E`-component of `x`.
    pub fn e_coords(&self, x: &JordanElement) -> Deg3Element {
        let t = self.pairing.apply(x.coords());
        Deg3Element::new(self.gram_inv.apply(&t))
    }

    pub fn proj_e(&self, x: &JordanElement) -> JordanElement {
        self.embedding.iota_raw(&self.e_coords(x))
    }

    pub fn proj_perp(&self, x: &JordanElement) -> JordanElement {
        x.sub(&self.proj_e(x))
    }

    pub fn in_complement(&self, x: &JordanElement) -> bool {
        self.pairing.apply(x.coords()).iter().all(Scalar::is_zero)
    }

    fn check_perp(&self, x: &JordanElement) -> Result<()> {
        self.model.check(x)?;
        if !self.in_complement(x) {
            return Err(Error::NotInComplement);
        }
        Ok(())
    }

    /// `a·x = -ι(a) × x`.
    pub fn e_action(&self, a: &Deg3Element, x: &JordanElement) -> Result<JordanElement> {
        self.algebra().check(a)?;
        self.check_perp(x)?;
        Ok(self.act_raw(a, x))
    }

    pub(crate) fn act_raw(&self, a: &Deg3Element, x: &JordanElement) -> JordanElement {
        self.model.cross_raw(&self.embedding.iota_raw(a), x).neg()
    }

    /// `(q_E(x), r_E(x))`.
    pub fn springer_form(&self, x: &JordanElement) -> Result<(Deg3Element, JordanElement)> {
        self.check_perp(x)?;
        let s = self.model.sharp_raw(x);
        let q = self.e_coords(&s);
        let r = s.sub(&self.embedding.iota_raw(&q));
        Ok((q, r))
    }

    pub(crate) fn q_raw(&self, x: &JordanElement) -> Deg3Element {
        self.e_coords(&self.model.sharp_raw(x))
    }

    /// `b(x, y) = q(x + y) - q(x) - q(y)`.
    pub fn polar(&self, x: &JordanElement, y: &JordanElement) -> Result<Deg3Element> {
        self.check_perp(x)?;
        self.check_perp(y)?;
        Ok(self.q_raw(&x.add(y)).sub(&self.q_raw(x)).sub(&self.q_raw(y)))
    }

    /// Uniform combination of the complement basis.
    pub fn random_perp<R: Rng + ?Sized>(&self, rng: &mut R) -> JordanElement {
        let field = self.model.field();
        let mut acc = self.model.zero();
        for b in &self.basis_perp {
            acc = acc.add(&b.scale(&field.random(rng)));
        }
        acc
    }

    /// Sampled checks of the decomposition, the module axioms and the
    /// quadraticity of `q_E`.
    pub fn structure_checks(&self, samples: usize, seed: u64) -> Vec<Check> {
        let alg = self.algebra().clone();
        let probe = |f: &(dyn Fn(&mut ChaCha8Rng) -> Option<Value> + Sync)| {
            (0..samples)
                .into_par_iter()
                .map(|t| f(&mut trial_rng(seed, t)).map(|w| with_trial(w, t)))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .next()
        };
        let model = &self.model;
        let orth = probe(&|rng| {
            let x = model.random(rng);
            let (e, p) = (self.proj_e(&x), self.proj_perp(&x));
            let ok = e.add(&p) == x && self.proj_e(&e) == e && self.in_complement(&p);
            (!ok).then(|| json!({ "x": x.render() }))
        });
        let unital = probe(&|rng| {
            let x = self.random_perp(rng);
            (self.act_raw(&alg.one(), &x) != x).then(|| json!({ "x": x.render() }))
        });
        let assoc = probe(&|rng| {
            let (a, b) = (alg.random(rng), alg.random(rng));
            let x = self.random_perp(rng);
            let lhs = self.act_raw(&alg.product(&a, &b), &x);
            let bx = self.act_raw(&b, &x);
            let ok = self.in_complement(&bx) && lhs == self.act_raw(&a, &bx);
            (!ok).then(|| json!({ "a": render(&a), "b": render(&b), "x": x.render() }))
        });
        let quad = probe(&|rng| {
            let a = alg.random(rng);
            let x = self.random_perp(rng);
            let lhs = self.q_raw(&self.act_raw(&a, &x));
            let rhs = alg.product(&alg.product(&a, &a), &self.q_raw(&x));
            (lhs != rhs).then(|| json!({ "a": render(&a), "x": x.render() }))
        });
        let bilinear = probe(&|rng| {
            let a = alg.random(rng);
            let (x, y) = (self.random_perp(rng), self.random_perp(rng));
            let b = |u: &JordanElement, v: &JordanElement| {
                self.q_raw(&u.add(v)).sub(&self.q_raw(u)).sub(&self.q_raw(v))
            };
            let bxy = b(&x, &y);
            let ok = bxy == b(&y, &x)
                && b(&self.act_raw(&a, &x), &y) == alg.product(&a, &bxy)
                && b(&x, &x) == self.q_raw(&x).scale(&model.field().from_i64(2));
            (!ok).then(|| json!({ "a": render(&a), "x": x.render(), "y": y.render() }))
        });
        vec![
            Check::outcome(
                "complement_rank",
                "E^\\perp",
                1,
                self.rank() + 3 == model.dim(),
                json!({ "rank": self.rank(), "dim": model.dim() }),
            ),
            Check::new("projections", "J=E\\oplus E^\\perp", samples, orth),
            Check::new("module_unit", "(a,\\,x)\\mapsto -a\\times x", samples, unital),
            Check::new("module_assoc", "(a,\\,x)\\mapsto -a\\times x", samples, assoc),
            Check::new("springer_quadratic", "x^\\#=q_E(x)+r_E(x)", samples, quad),
            Check::new("springer_polar", "x^\\#=q_E(x)+r_E(x)", samples, bilinear),
        ]
    }
}

pub(crate) fn render(a: &Deg3Element) -> Vec<String> {
    a.coords().iter().map(ToString::to_string).collect()
}

fn with_trial(mut w: Value, trial: usize) -> Value {
    if let Value::Object(m) = &mut w {
        m.insert("trial".into(), json!(trial));
    }
    w
}

#[derive(Clone, Debug, PartialEq)]
pub enum IsotropicStrategy {
    /// `v = (0, b, 0)` where `ι(b) = (m, 0, 0)` moves to `(0, m, 0)`.
    Constructive { b: Deg3Element },
    /// Conic solving over the residue fields of `E ⊗ F_p`.
    Randomized { max_trials: usize },
}

/// Default trial budget for the randomized search.
pub const DEFAULT_SEARCH_TRIALS: usize = 10_000;

/// An invertible `v ∈ E⊥` with `q_E(v) = 0`, re-verified before return.
pub fn isotropic_invertible(
    tits: &TitsModel,
    data: &SpringerData,
    strategy: &IsotropicStrategy,
    seed: u64,
) -> Result<JordanElement> {
    let v = match strategy {
        IsotropicStrategy::Constructive { b } => {
            let img = data.embedding.iota(b)?;
            let [m0, m1, m2] = tits.unpack(&img)?;
            if !(m1.is_zero() && m2.is_zero()) {
                return Err(Error::UnsupportedSubalgebra(
                    "constructive search needs E inside the first slot".into(),
                ));
            }
            let zero = tits.algebra().zero();
            let v = tits.pack(&zero, &m0, &zero)?;
            verify_isotropic(data, &v)?;
            v
        }
        IsotropicStrategy::Randomized { max_trials } => randomized_search(data, *max_trials, seed)?,
    };
    Ok(v)
}

fn verify_isotropic(data: &SpringerData, v: &JordanElement) -> Result<()> {
    let (q, _) = data.springer_form(v)?;
    if !q.is_zero() {
        return Err(Error::NotIsotropic);
    }
    if data.model.norm_raw(v).is_zero() {
        return Err(Error::NotInvertible);
    }
    Ok(())
}

fn randomized_search(data: &SpringerData, max_trials: usize, seed: u64) -> Result<JordanElement> {
    if max_trials == 0 {
        return Err(Error::InvalidTrials);
    }
    let GroundField::Prime(_) = data.model.field() else {
        return Err(Error::RequiresPrimeField);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gram = quadforms::polarize(data, rng.gen())?;
    let factors = quadforms::residue_factors(data.algebra())?;
    let local: Vec<_> = factors.iter().map(|f| f.reduce_gram(&gram)).collect();
    let lift = quadforms::CrtLift::new(data.algebra(), &factors)?;
    for trial in 0..max_trials {
        let mut rng = trial_rng(seed, trial);
        let per_factor: Option<Vec<_>> = local
            .iter()
            .map(|g| quadforms::random_isotropic(g, &mut rng))
            .collect();
        let Some(per_factor) = per_factor else {
            continue;
        };
        let mut v = data.model.zero();
        for j in 0..gram.rank() {
            let parts: Vec<_> = per_factor.iter().map(|w| w[j].clone()).collect();
            let a = lift.lift(&parts);
            v = v.add(&data.act_raw(&a, &gram.basis()[j]));
        }
        if v.is_zero() || data.model.norm_raw(&v).is_zero() {
            continue;
        }
        verify_isotropic(data, &v)?;
        return Ok(v);
    }
    Err(Error::SearchExhausted { trials: max_trials })
}

/// `ι_v: Tits(E, λ') → J`, `(a0, a1, a2) ↦ a0 - a1 × v - N(v)^{-1} a2 × v^#`.
#[derive(Clone, Debug)]
pub struct SpringerEmbedding {
    lambda_prime: Scalar,
    v: JordanElement,
    source: TitsModel,
    matrix: Matrix<Scalar>,
}

pub fn springer_embedding(data: &SpringerData, v: &JordanElement) -> Result<SpringerEmbedding> {
    let (q, _) = data.springer_form(v)?;
    if !q.is_zero() {
        return Err(Error::NotIsotropic);
    }
    let model = &data.model;
    let nv = model.norm_raw(v);
    if nv.is_zero() {
        return Err(Error::NotInvertible);
    }
    let nv_inv = nv.inverse()?;
    let alg = data.algebra().clone();
    let minus_one_cross_v = model.cross_raw(model.unit(), v).neg();
    let lambda_prime = model.norm_raw(&minus_one_cross_v);
    let v_sharp = model.sharp_raw(v);
    let mut columns = Vec::with_capacity(9);
    for slot in 0..3 {
        for k in 0..3 {
            let e = data.embedding.images[k].clone();
            let col = match slot {
                0 => e,
                1 => model.cross_raw(&e, v).neg(),
                _ => model.cross_raw(&e, &v_sharp).scale(&nv_inv).neg(),
            };
            columns.push(col.into_coords());
        }
    }
    let source = TitsModel::new(alg, lambda_prime.clone())?;
    Ok(SpringerEmbedding {
        lambda_prime,
        v: v.clone(),
        source,
        matrix: Matrix::from_columns(&columns),
    })
}

impl SpringerEmbedding {
    pub fn lambda_prime(&self) -> &Scalar {
        &self.lambda_prime
    }

    pub fn v(&self) -> &JordanElement {
        &self.v
    }

    /// `Tits(E, λ')`.
    pub fn source(&self) -> &TitsModel {
        &self.source
    }

    /// Matrix of `ι_v` (columns are images of the source basis).
    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.matrix
    }

    pub fn map(&self, x: &JordanElement) -> Result<JordanElement> {
        self.source.model().check(x)?;
        Ok(JordanElement::new(self.matrix.apply(x.coords())))
    }

    /// Unit, norm, adjoint, injectivity and `v ∈ image`, checked exactly.
    pub fn homomorphism_checks(&self, target: &CubicJordanModel, samples: usize, seed: u64) -> Vec<Check> {
        let src = self.source.model();
        let apply = |x: &JordanElement| JordanElement::new(self.matrix.apply(x.coords()));
        let anchor = "(a_0,\\,a_1,\\,a_2)\\mapsto a_0-a_1\\times v-N(v)^{-1}a_2\\times v^\\#";
        let failures: Vec<(usize, bool, bool, JordanElement)> = (0..samples)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(seed, t);
                let x = src.random(&mut rng);
                let ix = apply(&x);
                let norm_ok = target.norm_raw(&ix) == src.norm_raw(&x);
                let sharp_ok = target.sharp_raw(&ix) == apply(&src.sharp_raw(&x));
                (t, norm_ok, sharp_ok, x)
            })
            .collect();
        let first = |pick: fn(&(usize, bool, bool, JordanElement)) -> bool| {
            failures
                .iter()
                .find(|f| !pick(f))
                .map(|(t, _, _, x)| json!({ "x": x.render(), "trial": t }))
        };
        let alg = self.source.algebra();
        let zero = alg.zero();
        let e1 = self.source.pack(&zero, &alg.one(), &zero).expect("source element");
        let image_e1 = apply(&e1);
        vec![
            Check::outcome(
                "unit_preserved",
                anchor,
                1,
                apply(src.unit()) == *target.unit(),
                json!({ "image": apply(src.unit()).render() }),
            ),
            Check::new("norm_preserved", anchor, samples, first(|f| f.1)),
            Check::new("sharp_equivariant", anchor, samples, first(|f| f.2)),
            Check::outcome(
                "injective",
                anchor,
                1,
                self.matrix.rank() == src.dim(),
                json!({ "rank": self.matrix.rank() }),
            ),
            Check::outcome(
                "v_in_image",
                anchor,
                1,
                image_e1 == self.v && target.norm_raw(&image_e1) == self.lambda_prime,
                json!({ "lambda_prime": self.lambda_prime.to_string(), "image": image_e1.render() }),
            ),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> GroundField {
        GroundField::Rationals
    }

    fn nine(lambda: i64) -> (TitsModel, SpringerData) {
        let t = TitsModel::new(Deg3Algebra::split(q()), q().from_i64(lambda)).unwrap();
        let emb = EtaleEmbedding::first_slot(&t).unwrap();
        let data = orthogonal_complement(t.model(), &emb).unwrap();
        (t, data)
    }

    #[test]
    fn first_slot_complement() {
        let (t, data) = nine(2);
        assert_eq!(data.rank(), 6);
        let a = t.algebra();
        let x = t.pack(&a.zero(), &a.element_from_ints(&[1, 2, 3]).unwrap(), &a.one()).unwrap();
        assert!(data.in_complement(&x));
        assert_eq!(data.proj_e(t.model().unit()), *t.model().unit());
        assert!(data.proj_perp(t.model().unit()).is_zero());
    }

    #[test]
    fn springer_form_on_tits_fixture() {
        let (t, data) = nine(3);
        let a = t.algebra();
        let a1 = a.element_from_ints(&[2, -1, 5]).unwrap();
        let a2 = a.element_from_ints(&[7, 4, -3]).unwrap();
        let x = t.pack(&a.zero(), &a1, &a2).unwrap();
        let (qx, r) = data.springer_form(&x).unwrap();
        assert_eq!(qx, a.mul(&a1, &a2).unwrap().neg());
        assert!(data.in_complement(&r));
        let y = t.pack(&a.zero(), &a1, &a.zero()).unwrap();
        assert!(data.springer_form(&y).unwrap().0.is_zero());
        let ax = data.e_action(&a1, &x).unwrap();
        let expected = t.pack(&a.zero(), &a.mul(&a1, &a1).unwrap(), &a.mul(&a2, &a1).unwrap()).unwrap();
        assert_eq!(ax, expected);
        assert_eq!(data.e_action(&a1, t.model().unit()), Err(Error::NotInComplement));
    }

    #[test]
    fn structure_checks_pass() {
        let (_, data) = nine(-5);
        assert!(data.structure_checks(20, 3).iter().all(|c| c.passed));
    }

    #[test]
    fn degenerate_trace_detected() {
        let f = GroundField::prime(1009).unwrap();
        let t = TitsModel::new(Deg3Algebra::split(f), f.one()).unwrap();
        let mut emb = EtaleEmbedding::first_slot(&t).unwrap();
        emb.gram = Matrix::zeros(3, 3, &f.zero());
        assert_eq!(orthogonal_complement(t.model(), &emb).err(), Some(Error::DegenerateTrace));
    }

    #[test]
    fn constructive_witness_and_embedding() {
        let (t, data) = nine(2);
        let a = t.algebra();
        let b = a.element_from_ints(&[1, 2, 3]).unwrap();
        let v = isotropic_invertible(&t, &data, &IsotropicStrategy::Constructive { b: b.clone() }, 0).unwrap();
        assert_eq!(t.model().norm(&v).unwrap(), q().from_i64(12));
        let emb = springer_embedding(&data, &v).unwrap();
        assert_eq!(*emb.lambda_prime(), q().from_i64(12));
        assert!(emb.homomorphism_checks(t.model(), 10, 1).iter().all(|c| c.passed));
        let one = isotropic_invertible(&t, &data, &IsotropicStrategy::Constructive { b: a.one() }, 0).unwrap();
        let emb = springer_embedding(&data, &one).unwrap();
        assert_eq!(*emb.lambda_prime(), q().from_i64(2));
        let x = t.pack(&b, &a.zero(), &a.zero()).unwrap();
        assert_eq!(emb.map(&x).unwrap(), x);
    }

    #[test]
    fn embedding_preconditions() {
        let (t, data) = nine(1);
        let a = t.algebra();
        let one = a.one();
        let x = t.pack(&a.zero(), &one, &one).unwrap();
        assert_eq!(springer_embedding(&data, &x).err(), Some(Error::NotIsotropic));
        let b = a.element_from_ints(&[1, 0, 4]).unwrap();
        let y = t.pack(&a.zero(), &b, &a.zero()).unwrap();
        assert_eq!(springer_embedding(&data, &y).err(), Some(Error::NotInvertible));
    }

    #[test]
    fn descriptor_json() {
        let d: SubalgebraDescriptor = serde_json::from_str(r#"{"subalgebra":"companion","f":["1","2","3"]}"#).unwrap();
        assert_eq!(
            d,
            SubalgebraDescriptor::Companion {
                f: ["1".into(), "2".into(), "3".into()]
            }
        );
        let d: SubalgebraDescriptor = serde_json::from_str(r#"{"subalgebra":"diagonal-mat3"}"#).unwrap();
        assert_eq!(d, SubalgebraDescriptor::DiagonalMat3);
    }
}
