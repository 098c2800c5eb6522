//! Isotopes `J^(v)`, the autotopy predicate and words in the generators
//! of the structure group (nonzero scalars and `U`-operators).

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::jordan::{trial_rng, CubicJordanModel, JordanElement, QuadraticJordan};
use crate::linalg::Matrix;
use crate::scalars::{GroundField, Scalar};

/// Linear endomorphism of the coordinate module.
pub type LinearMap = Matrix<Scalar>;

/// Default number of sampled `x` in [`is_autotopy`].
pub const DEFAULT_AUTOTOPY_SAMPLES: usize = 32;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Letter {
    Scalar(Scalar),
    UOp(JordanElement),
}

/// A word in the generators, evaluated left to right as outermost first:
/// `[a, b]` is the map `a ∘ b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StructureWord {
    pub letters: Vec<Letter>,
}

impl StructureWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// `[{"scalar":"c"} | {"u":[coords]}]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.letters
                .iter()
                .map(|l| match l {
                    Letter::Scalar(c) => json!({ "scalar": c.to_string() }),
                    Letter::UOp(x) => json!({ "u": x.render() }),
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value, field: GroundField) -> Result<Self> {
        let bad = |what: &str| Error::Config(format!("structure word: {what}"));
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut letters = Vec::with_capacity(items.len());
        for item in items {
            if let Some(c) = item.get("scalar") {
                let s = c.as_str().ok_or_else(|| bad("scalar must be a string"))?;
                letters.push(Letter::Scalar(field.parse_element(s)?));
            } else if let Some(u) = item.get("u") {
                letters.push(Letter::UOp(parse_element_json(u, field)?));
            } else {
                return Err(bad("letter must be {\"scalar\":..} or {\"u\":[..]}"));
            }
        }
        Ok(Self { letters })
    }
}

/// Parses a JSON array of exact scalar strings (or integers) into coordinates.
pub fn parse_element_json(value: &Value, field: GroundField) -> Result<JordanElement> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Config("element must be an array of scalars".into()))?;
    let coords = items
        .iter()
        .map(|v| match v {
            Value::String(s) => field.parse_element(s),
            Value::Number(n) => field.parse_element(&n.to_string()),
            _ => Err(Error::Config("element entries must be strings or integers".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JordanElement::new(coords))
}

pub fn letter_map(model: &CubicJordanModel, letter: &Letter) -> Result<LinearMap> {
    match letter {
        Letter::Scalar(c) => {
            if c.is_zero() {
                return Err(Error::NotInvertible);
            }
            Ok(Matrix::identity(model.dim(), &model.field().zero()).scale(c))
        }
        Letter::UOp(x) => {
            if model.norm(x)?.is_zero() {
                return Err(Error::NotInvertible);
            }
            model.u_matrix(x)
        }
    }
}

pub fn eval_word(model: &CubicJordanModel, word: &StructureWord) -> Result<LinearMap> {
    let mut acc = Matrix::identity(model.dim(), &model.field().zero());
    for letter in &word.letters {
        acc = acc.mul(&letter_map(model, letter)?);
    }
    Ok(acc)
}

/// `J^(v)`: unit `v^{-1}` and `U'_x = U_x U_v`.
#[derive(Clone, Debug)]
pub struct Isotope<'a> {
    base: &'a CubicJordanModel,
    v: JordanElement,
    unit: JordanElement,
    u_v: LinearMap,
}

pub fn isotope<'a>(model: &'a CubicJordanModel, v: &JordanElement) -> Result<Isotope<'a>> {
    let unit = model.inverse(v)?;
    Ok(Isotope {
        base: model,
        v: v.clone(),
        unit,
        u_v: model.u_matrix(v)?,
    })
}

impl Isotope<'_> {
    pub fn v(&self) -> &JordanElement {
        &self.v
    }

    pub fn base(&self) -> &CubicJordanModel {
        self.base
    }

    /// Matrix of `U'_x = U_x U_v`.
    pub fn u_matrix(&self, x: &JordanElement) -> Result<LinearMap> {
        Ok(self.base.u_matrix(x)?.mul(&self.u_v))
    }
}

impl QuadraticJordan for Isotope<'_> {
    fn field(&self) -> GroundField {
        self.base.field()
    }

    fn dim(&self) -> usize {
        self.base.dim()
    }

    fn unit(&self) -> JordanElement {
        self.unit.clone()
    }

    fn u_apply(&self, x: &JordanElement, y: &JordanElement) -> JordanElement {
        let uy = JordanElement::new(self.u_v.apply(y.coords()));
        self.base.u_raw(x, &uy)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AutotopyVerdict {
    pub holds: bool,
    pub samples: usize,
    /// Sampled `x` at which `U_{g(x)} != g U_x g^{-1} U_{g(1)}`.
    pub witness: Option<JordanElement>,
}

impl AutotopyVerdict {
    /// Upper bound on the chance that a non-autotopy survives every sample
    /// over `F_p`: both sides are quadratic in `x`, so one uniform sample
    /// misses a nonzero difference with probability at most `2/p`.
    /// Rational samples are not uniform, so no bound is claimed there.
    pub fn error_bound(&self, field: GroundField) -> Option<String> {
        match field {
            GroundField::Prime(p) => Some(format!("(2/{p})^{}", self.samples)),
            GroundField::Rationals => None,
        }
    }
}

/// Randomized test of `U_{g(x)} = g U_x g^{-1} U_{g(1)}`, exact matrix
/// equality at each sampled `x`.
pub fn is_autotopy(model: &CubicJordanModel, g: &LinearMap, trials: usize, seed: u64) -> Result<AutotopyVerdict> {
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    if g.rows() != model.dim() || g.cols() != model.dim() {
        return Err(Error::Dimension {
            expected: model.dim(),
            found: g.rows(),
        });
    }
    let g_inv = g.inverse().ok_or(Error::SingularMap)?;
    let g1 = JordanElement::new(g.apply(model.unit().coords()));
    let tail = g_inv.mul(&model.u_matrix(&g1)?);
    let apply = |x: &JordanElement| JordanElement::new(g.apply(x.coords()));
    let failures: Vec<Option<JordanElement>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let x = model.random(&mut rng);
            let lhs = model.u_matrix(&apply(&x)).ok()?;
            let rhs = g.mul(&model.u_matrix(&x).ok()?).mul(&tail);
            (lhs != rhs).then_some(x)
        })
        .collect();
    let witness = failures.into_iter().flatten().next();
    Ok(AutotopyVerdict {
        holds: witness.is_none(),
        samples: trials,
        witness,
    })
}

/// Uniformly random invertible matrix (rejection on the determinant).
pub fn random_invertible_map<R: Rng + ?Sized>(field: GroundField, dim: usize, rng: &mut R) -> LinearMap {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..dim)
            .map(|_| (0..dim).map(|_| field.random(rng)).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        if !m.det().is_zero() {
            return m;
        }
    }
}
