//! Run configuration read from JSON and overridden by command-line flags.
//!
//! ```json
//! {
//!   "field": "Fp:1009",
//!   "jordan": { "construction": "tits1", "algebra": { "kind": "mat3" }, "lambda": "2" },
//!   "subalgebra": { "subalgebra": "diagonal-mat3" },
//!   "trials": 1000,
//!   "seed": 7
//! }
//! ```

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::deg3::{AlgebraDescriptor, Deg3Algebra};
use crate::error::{Error, Result};
use crate::jordan::CubicJordanModel;
use crate::scalars::GroundField;
use crate::springer::SubalgebraDescriptor;
use crate::tits::TitsModel;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<GroundField>,
    #[serde(default)]
    pub jordan: JordanConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<SubalgebraDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub isotopy: IsotopyOptions,
    #[serde(default)]
    pub springer: SpringerOptions,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanConfig {
    #[serde(default = "default_construction")]
    pub construction: String,
    #[serde(default = "default_algebra")]
    pub algebra: AlgebraDescriptor,
    #[serde(default = "default_lambda")]
    pub lambda: String,
    /// Adds `delta` to one coefficient of the adjoint table.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corrupt: Option<Corruption>,
}

impl Default for JordanConfig {
    fn default() -> Self {
        Self {
            construction: default_construction(),
            algebra: default_algebra(),
            lambda: default_lambda(),
            corrupt: None,
        }
    }
}

fn default_construction() -> String {
    "tits1".into()
}

fn default_algebra() -> AlgebraDescriptor {
    AlgebraDescriptor::Split
}

fn default_lambda() -> String {
    "1".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Corruption {
    pub output: usize,
    pub i: usize,
    pub j: usize,
    pub delta: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsotopyOptions {
    /// Explicit isotopy parameters, each a coordinate array.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub v: Vec<Value>,
    /// Additional random invertible parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random_v: Option<usize>,
    /// Structure words expected to be autotopies.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub words: Vec<Value>,
    /// Explicit matrices (row-major arrays of rows) claimed to be autotopies.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<Value>,
    /// Random invertible matrices expected to be rejected.
    #[serde(default)]
    pub random_maps: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyKind {
    /// `v = (0, b, 0)`; `b` defaults to `1`.
    #[default]
    Constructive,
    Randomized,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpringerOptions {
    #[serde(default)]
    pub strategy: StrategyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn field(&self) -> Result<GroundField> {
        self.field
            .ok_or_else(|| Error::Config("no ground field given (use --field or \"field\")".into()))
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("config serializes")
    }

    pub fn algebra(&self) -> Result<Deg3Algebra> {
        Deg3Algebra::from_descriptor(self.field()?, &self.jordan.algebra)
    }

    /// The configured first Tits construction (without corruption).
    pub fn tits(&self) -> Result<TitsModel> {
        if self.jordan.construction != "tits1" {
            return Err(Error::Config(format!(
                "unknown construction {:?} (expected \"tits1\")",
                self.jordan.construction
            )));
        }
        let field = self.field()?;
        let lambda = field.parse_element(&self.jordan.lambda)?;
        TitsModel::new(self.algebra()?, lambda)
    }

    /// The configured model, with the corruption applied if present.
    pub fn model(&self) -> Result<CubicJordanModel> {
        let model = self.tits()?.into_model();
        match &self.jordan.corrupt {
            None => Ok(model),
            Some(c) => {
                let n = model.dim();
                if c.output >= n || c.i >= n || c.j >= n {
                    return Err(Error::Config("corruption index out of range".into()));
                }
                let delta = model.field().parse_element(&c.delta)?;
                model.perturb_sharp(c.output, c.i, c.j, &delta)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_full_config() {
        let c = RunConfig::from_json(
            r#"{"field":"Fp:101","jordan":{"algebra":{"kind":"cubic","f":["-2","0","0"]},"lambda":"3"},
                "subalgebra":{"subalgebra":"first-slot"},"trials":5,"seed":9,
                "springer":{"strategy":"randomized","max_trials":50}}"#,
        )
        .unwrap();
        assert_eq!(c.field, Some(GroundField::prime(101).unwrap()));
        assert_eq!(c.tits().unwrap().model().dim(), 9);
        assert_eq!(c.springer.strategy, StrategyKind::Randomized);
        assert_eq!(c.springer.max_trials, Some(50));
        let again = RunConfig::from_json(&c.to_value().to_string()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(RunConfig::from_json(r#"{"field":"Fp:4"}"#), Err(Error::Config(_))));
        assert!(matches!(RunConfig::from_json(r#"{"bogus":1}"#), Err(Error::Config(_))));
        let c = RunConfig::from_json("{}").unwrap();
        assert!(matches!(c.field(), Err(Error::Config(_))));
    }
}
