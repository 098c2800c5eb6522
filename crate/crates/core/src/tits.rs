//! The first Tits construction `A ⊕ A ⊕ A` over a degree-3 algebra `A`
//! with parameter `λ`:
//!
//! ```text
//! 1                = (1, 0, 0)
//! N(a0, a1, a2)    = N(a0) + λ N(a1) + λ^{-1} N(a2) - T(a0 a1 a2)
//! (a0, a1, a2)^#   = (a0^# - a1 a2, λ^{-1} a2^# - a0 a1, λ a1^# - a2 a0)
//! ```
//!
//! The norm and adjoint are expanded once into coefficient tables; the
//! closed forms stay available for cross-checking.

use crate::deg3::{Deg3Algebra, Deg3Element};
use crate::error::{Error, Result};
use crate::isotopy::{eval_word, Letter, StructureWord};
use crate::jordan::{CubicJordanModel, JordanElement};
use crate::scalars::Scalar;

#[derive(Clone, Debug)]
pub struct TitsModel {
    algebra: Deg3Algebra,
    lambda: Scalar,
    model: CubicJordanModel,
}

/// Result of replaying `U_{(0,0,1)} U_{(0,y,0)} (y,0,0) = N(y) 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransMove {
    pub word: StructureWord,
    pub image: JordanElement,
    pub norm: Scalar,
    /// `image == N(y) 1`.
    pub holds: bool,
    /// `[Scalar(N(y)^{-1})] ++ word`, which should send `y` to `1`.
    pub normalized: StructureWord,
    pub lands_on_unit: bool,
}

fn closed_norm(alg: &Deg3Algebra, lambda: &Scalar, lambda_inv: &Scalar, p: &[Deg3Element; 3]) -> Scalar {
    let [a0, a1, a2] = p;
    let t = alg.trace_of(&alg.product(&alg.product(a0, a1), a2));
    alg.norm_of(a0) + lambda * &alg.norm_of(a1) + lambda_inv * &alg.norm_of(a2) - t
}

fn closed_sharp(alg: &Deg3Algebra, lambda: &Scalar, lambda_inv: &Scalar, p: &[Deg3Element; 3]) -> [Deg3Element; 3] {
    let [a0, a1, a2] = p;
    [
        alg.sharp_of(a0).sub(&alg.product(a1, a2)),
        alg.sharp_of(a2).scale(lambda_inv).sub(&alg.product(a0, a1)),
        alg.sharp_of(a1).scale(lambda).sub(&alg.product(a2, a0)),
    ]
}

fn split3(n: usize, x: &JordanElement) -> [Deg3Element; 3] {
    let c = x.coords();
    [
        Deg3Element::new(c[..n].to_vec()),
        Deg3Element::new(c[n..2 * n].to_vec()),
        Deg3Element::new(c[2 * n..].to_vec()),
    ]
}

fn join3(parts: [Deg3Element; 3]) -> JordanElement {
    JordanElement::new(parts.into_iter().flat_map(Deg3Element::into_coords).collect())
}

impl TitsModel {
    pub fn new(algebra: Deg3Algebra, lambda: Scalar) -> Result<Self> {
        if lambda.field() != algebra.field() {
            return Err(Error::AlgebraMismatch);
        }
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        let lambda_inv = lambda.inverse()?;
        let n = algebra.dim();
        let unit = join3([algebra.one(), algebra.zero(), algebra.zero()]);
        let model = CubicJordanModel::from_closed_forms(
            algebra.field(),
            3 * n,
            unit,
            |x| closed_norm(&algebra, &lambda, &lambda_inv, &split3(n, x)),
            |x| join3(closed_sharp(&algebra, &lambda, &lambda_inv, &split3(n, x))),
        )?;
        Ok(Self {
            algebra,
            lambda,
            model,
        })
    }

    pub fn algebra(&self) -> &Deg3Algebra {
        &self.algebra
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn model(&self) -> &CubicJordanModel {
        &self.model
    }

    pub fn into_model(self) -> CubicJordanModel {
        self.model
    }

    pub fn pack(&self, a0: &Deg3Element, a1: &Deg3Element, a2: &Deg3Element) -> Result<JordanElement> {
        for a in [a0, a1, a2] {
            self.algebra.check(a)?;
        }
        Ok(join3([a0.clone(), a1.clone(), a2.clone()]))
    }

    pub fn unpack(&self, x: &JordanElement) -> Result<[Deg3Element; 3]> {
        self.model.check(x)?;
        Ok(split3(self.algebra.dim(), x))
    }

    /// The defining norm formula evaluated directly, bypassing the tables.
    pub fn closed_form_norm(&self, x: &JordanElement) -> Result<Scalar> {
        let parts = self.unpack(x)?;
        Ok(closed_norm(&self.algebra, &self.lambda, &self.lambda.inverse()?, &parts))
    }

    /// The defining adjoint formula evaluated directly.
    pub fn closed_form_sharp(&self, x: &JordanElement) -> Result<JordanElement> {
        let parts = self.unpack(x)?;
        Ok(join3(closed_sharp(&self.algebra, &self.lambda, &self.lambda.inverse()?, &parts)))
    }

    /// `a ↦ (a, 0, 0)`.
    pub fn embed_first_slot(&self, a: &Deg3Element) -> Result<JordanElement> {
        self.pack(a, &self.algebra.zero(), &self.algebra.zero())
    }

    /// `U_{(0,0,1)} U_{(0,y,0)}` applied to `(y,0,0)` for invertible `y` in a
    /// commutative `E`, as a structure word and its image.
    pub fn lemma_trans_move(&self, y: &Deg3Element) -> Result<TransMove> {
        if !self.algebra.is_commutative() {
            return Err(Error::NotCommutative);
        }
        let norm = self.algebra.norm(y)?;
        if norm.is_zero() {
            return Err(Error::NotInvertible);
        }
        let zero = self.algebra.zero();
        let one = self.algebra.one();
        let word = StructureWord::new(vec![
            Letter::UOp(self.pack(&zero, &zero, &one)?),
            Letter::UOp(self.pack(&zero, y, &zero)?),
        ]);
        let ym = self.embed_first_slot(y)?;
        let image = JordanElement::new(eval_word(&self.model, &word)?.apply(ym.coords()));
        let holds = image == self.model.unit().scale(&norm);
        let mut normalized = StructureWord::new(vec![Letter::Scalar(norm.inverse()?)]);
        normalized.letters.extend(word.letters.iter().cloned());
        let landed = JordanElement::new(eval_word(&self.model, &normalized)?.apply(ym.coords()));
        Ok(TransMove {
            word,
            image,
            norm,
            holds,
            normalized,
            lands_on_unit: landed == *self.model.unit(),
        })
    }
}
