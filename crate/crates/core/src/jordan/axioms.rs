use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{CubicJordanModel, JordanElement};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalars::{GroundField, Scalar};

/// Deterministic per-trial generator: the stream index is the trial number,
/// so the samples do not depend on how trials are scheduled.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// A unital quadratic Jordan structure `(1, U)` on coordinate vectors.
pub trait QuadraticJordan: Sync {
    fn field(&self) -> GroundField;
    fn dim(&self) -> usize;
    fn unit(&self) -> JordanElement;
    fn u_apply(&self, x: &JordanElement, y: &JordanElement) -> JordanElement;

    fn triple_product(&self, x: &JordanElement, y: &JordanElement, z: &JordanElement) -> JordanElement {
        self.u_apply(&x.add(z), y)
            .sub(&self.u_apply(x, y))
            .sub(&self.u_apply(z, y))
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> JordanElement {
        let f = self.field();
        JordanElement::new((0..self.dim()).map(|_| f.random(rng)).collect())
    }
}

impl QuadraticJordan for CubicJordanModel {
    fn field(&self) -> GroundField {
        self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn unit(&self) -> JordanElement {
        self.unit.clone()
    }

    fn u_apply(&self, x: &JordanElement, y: &JordanElement) -> JordanElement {
        self.u_raw(x, y)
    }
}

/// Outcome of a batch of sampled axiom checks.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Probe<M> = (&'static str, &'static str, fn(&M, &mut ChaCha8Rng) -> Option<Value>);

fn witness(pairs: &[(&str, &JordanElement)]) -> Value {
    let map: serde_json::Map<String, Value> = pairs
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v.render())))
        .collect();
    Value::Object(map)
}

fn run_probes<M: Sync>(model: &M, probes: &[Probe<M>], trials: usize, seed: u64, salt: u64) -> Result<Vec<Check>> {
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    // first failing trial per probe, in trial order
    let per_trial: Vec<Vec<Option<Value>>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            probes
                .iter()
                .enumerate()
                .map(|(k, (_, _, probe))| {
                    let mut rng = trial_rng(seed ^ salt.rotate_left(k as u32 * 7 + 1), t);
                    probe(model, &mut rng)
                })
                .collect()
        })
        .collect();
    Ok(probes
        .iter()
        .enumerate()
        .map(|(k, (name, anchor, _))| {
            let first = per_trial.iter().enumerate().find_map(|(t, row)| {
                row[k].clone().map(|w| {
                    let mut w = w;
                    w["trial"] = json!(t);
                    w
                })
            });
            Check::new(name, anchor, trials, first)
        })
        .collect())
}

fn q_unit<M: QuadraticJordan>(m: &M, rng: &mut ChaCha8Rng) -> Option<Value> {
    let y = m.random_element(rng);
    (m.u_apply(&m.unit(), &y) != y).then(|| witness(&[("y", &y)]))
}

fn q_triple<M: QuadraticJordan>(m: &M, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random_element(rng);
    let y = m.random_element(rng);
    let z = m.random_element(rng);
    let lhs = m.triple_product(&x, &y, &m.u_apply(&x, &z));
    let rhs = m.u_apply(&x, &m.triple_product(&y, &x, &z));
    (lhs != rhs).then(|| witness(&[("x", &x), ("y", &y), ("z", &z)]))
}

fn q_fundamental<M: QuadraticJordan>(m: &M, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random_element(rng);
    let y = m.random_element(rng);
    let z = m.random_element(rng);
    let lhs = m.u_apply(&m.u_apply(&x, &y), &z);
    let rhs = m.u_apply(&x, &m.u_apply(&y, &m.u_apply(&x, &z)));
    (lhs != rhs).then(|| witness(&[("x", &x), ("y", &y), ("z", &z)]))
}

/// The three unital quadratic Jordan axioms on sampled elements; `U_{U_x y}`
/// is compared with `U_x U_y U_x` on a sampled vector `z`.
pub fn quadratic_axioms<M: QuadraticJordan>(model: &M, trials: usize, seed: u64) -> Result<SuiteReport> {
    let probes: Vec<Probe<M>> = vec![
        ("U_1 = id", "U_1=\\id_J", q_unit::<M>),
        (
            "{x,y,U_x z} = U_x {y,x,z}",
            "\\{x,\\,y,\\,U_xz\\}=U_x\\{y,\\,x,\\,z\\}",
            q_triple::<M>,
        ),
        ("U_{U_x y} = U_x U_y U_x", "U_{U_xy}=U_xU_yU_x", q_fundamental::<M>),
    ];
    Ok(SuiteReport {
        checks: run_probes(model, &probes, trials, seed, 0x9e37_79b9)?,
    })
}

fn sample_scalar(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Scalar {
    m.field.random(rng)
}

fn c_sharp_sharp(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let lhs = m.sharp_raw(&m.sharp_raw(&x));
    (lhs != x.scale(&m.norm_raw(&x))).then(|| witness(&[("x", &x)]))
}

fn c_unit(m: &CubicJordanModel, _: &mut ChaCha8Rng) -> Option<Value> {
    let ok = m.sharp_raw(&m.unit) == m.unit && m.norm_raw(&m.unit) == m.field.one();
    (!ok).then(|| witness(&[("unit", &m.unit), ("unit_sharp", &m.sharp_raw(&m.unit))]))
}

fn c_trace_sharp(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let y = m.random(rng);
    let lhs = m.trace_bilinear_raw(&m.sharp_raw(&x), &y);
    (lhs != m.partial_norm_raw(&x, &y)).then(|| witness(&[("x", &x), ("y", &y)]))
}

fn c_unit_cross(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let rhs = m.unit.scale(&m.trace_raw(&x)).sub(&x);
    (m.cross_raw(&m.unit, &x) != rhs).then(|| witness(&[("x", &x)]))
}

fn c_cubic_scaling(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let t = sample_scalar(m, rng);
    let ok = m.norm_raw(&x.scale(&t)) == &t * &t * &t * m.norm_raw(&x);
    (!ok).then(|| {
        let mut w = witness(&[("x", &x)]);
        w["t"] = json!(t.to_string());
        w
    })
}

fn c_cubic_expansion(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let y = m.random(rng);
    let rhs = m.norm_raw(&x) + m.partial_norm_raw(&x, &y) + m.partial_norm_raw(&y, &x) + m.norm_raw(&y);
    (m.norm_raw(&x.add(&y)) != rhs).then(|| witness(&[("x", &x), ("y", &y)]))
}

fn c_trace_symmetric(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let y = m.random(rng);
    let (_, xy) = m.trace_forms(&x, &y).ok()?;
    let (_, yx) = m.trace_forms(&y, &x).ok()?;
    (xy != yx).then(|| witness(&[("x", &x), ("y", &y)]))
}

fn c_homogeneity(m: &CubicJordanModel, rng: &mut ChaCha8Rng) -> Option<Value> {
    let x = m.random(rng);
    let y = m.random(rng);
    let t = sample_scalar(m, rng);
    let t2 = &t * &t;
    let tx = x.scale(&t);
    let ok = m.sharp_raw(&tx) == m.sharp_raw(&x).scale(&t2)
        && m.partial_norm_raw(&tx, &y) == &t2 * &m.partial_norm_raw(&x, &y);
    (!ok).then(|| {
        let mut w = witness(&[("x", &x), ("y", &y)]);
        w["t"] = json!(t.to_string());
        w
    })
}

/// Cubic norm structure axioms and the cubic-map conditions on sampled
/// elements.
pub fn cubic_axioms(model: &CubicJordanModel, trials: usize, seed: u64) -> Result<SuiteReport> {
    let probes: Vec<Probe<CubicJordanModel>> = vec![
        ("(x^#)^# = N(x) x", "(x^\\#)^\\#=N(x)x", c_sharp_sharp),
        ("1^# = 1, N(1) = 1", "1^\\#=1; N(1)=1", c_unit),
        ("T(x^#, y) = dN(x, y)", "T(x^\\#,\\,y)=\\delta N(x,\\,y)", c_trace_sharp),
        ("1 x x = T(x) 1 - x", "1\\times x=T(x)1-x", c_unit_cross),
        ("N(t x) = t^3 N(x)", "N(tx)=t^3N(x)", c_cubic_scaling),
        (
            "N(x+y) = N(x) + dN(x,y) + dN(y,x) + N(y)",
            "N(x+y)=N(x)+\\partial N(x,\\,y)+\\partial N(y,\\,x)+N(y)",
            c_cubic_expansion,
        ),
        ("T(x, y) = T(y, x)", "T(x,\\,y)=T(x)T(y)-N(1,\\,x,\\,y)", c_trace_symmetric),
        ("# and dN are quadratic in x", "N(tx)=t^3N(x)", c_homogeneity),
    ];
    Ok(SuiteReport {
        checks: run_probes(model, &probes, trials, seed, 0x85eb_ca6b)?,
    })
}

/// Quadratic and cubic axiom suites together.
pub fn axiom_suite(model: &CubicJordanModel, trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut checks = quadratic_axioms(model, trials, seed)?.checks;
    checks.extend(cubic_axioms(model, trials, seed)?.checks);
    Ok(SuiteReport { checks })
}
