//! Command pipelines behind the `albert-kit` binary. Each command turns a
//! [`RunConfig`] into a [`Report`]; errors map to exit code 2.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{RunConfig, StrategyKind};
use crate::error::{Error, Result};
use crate::isotopy::{
    eval_word, is_autotopy, isotope, parse_element_json, random_invertible_map, LinearMap, StructureWord,
    DEFAULT_AUTOTOPY_SAMPLES,
};
use crate::jordan::{axiom_suite, quadratic_axioms, trial_rng, JordanElement, QuadraticJordan};
use crate::linalg::Matrix;
use crate::quadforms::lemma_discr_check;
use crate::report::{Check, Report};
use crate::scalars::Scalar;
use crate::springer::{
    isotropic_invertible, orthogonal_complement, render, springer_embedding, EtaleEmbedding, IsotropicStrategy,
    SubalgebraDescriptor, DEFAULT_SEARCH_TRIALS,
};
use crate::tits::TitsModel;

pub const DEFAULT_AXIOM_TRIALS: usize = 1000;
pub const DEFAULT_TRANS_TRIALS: usize = 200;
pub const DEFAULT_HOMOMORPHISM_SAMPLES: usize = 100;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

const TRANS_ANCHOR: &str = "lies in the orbit of $1$";
const SPRINGER_ANCHOR: &str = "contained in a subalgebra of $J$";
const ISOTOPE_ANCHOR: &str = "U^{(v)}_x=U_xU_v";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    Trans,
    Springer,
    Discr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    VerifyAxioms,
    Lemma(Lemma),
    Isotopy,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyAxioms => "verify-axioms",
            Command::Lemma(Lemma::Trans) => "lemma trans",
            Command::Lemma(Lemma::Springer) => "lemma springer",
            Command::Lemma(Lemma::Discr) => "lemma discr",
            Command::Isotopy => "isotopy",
        }
    }
}

pub fn run(command: Command, config: &RunConfig) -> Result<Report> {
    match command {
        Command::VerifyAxioms => cmd_verify_axioms(config),
        Command::Lemma(which) => cmd_lemma(config, which),
        Command::Isotopy => cmd_isotopy(config),
    }
}

pub fn exit_code(outcome: &Result<Report>) -> i32 {
    match outcome {
        Ok(r) if r.passed() => EXIT_PASS,
        Ok(_) => EXIT_FAIL,
        Err(_) => EXIT_CONFIG,
    }
}

fn trials_or(config: &RunConfig, default: usize) -> Result<usize> {
    match config.trials.unwrap_or(default) {
        0 => Err(Error::InvalidTrials),
        n => Ok(n),
    }
}

pub fn cmd_verify_axioms(config: &RunConfig) -> Result<Report> {
    let trials = trials_or(config, DEFAULT_AXIOM_TRIALS)?;
    let model = config.model()?;
    let suite = axiom_suite(&model, trials, config.seed)?;
    Ok(Report::new(Command::VerifyAxioms.name(), config.to_value(), suite.checks))
}

pub fn cmd_lemma(config: &RunConfig, which: Lemma) -> Result<Report> {
    let checks = match which {
        Lemma::Trans => lemma_trans(config)?,
        Lemma::Springer => lemma_springer(config)?,
        Lemma::Discr => lemma_discr(config)?,
    };
    Ok(Report::new(Command::Lemma(which).name(), config.to_value(), checks))
}

fn lemma_trans(config: &RunConfig) -> Result<Vec<Check>> {
    let trials = trials_or(config, DEFAULT_TRANS_TRIALS)?;
    let tits = config.tits()?;
    if !tits.algebra().is_commutative() {
        return Err(Error::NotCommutative);
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            let y = tits.algebra().random_invertible(&mut rng);
            tits.lemma_trans_move(&y).map(|mv| (t, y, mv))
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = |pick: fn(&crate::tits::TransMove) -> bool| {
        outcomes.iter().find(|(_, _, mv)| !pick(mv)).map(|(t, y, mv)| {
            json!({ "y": render(y), "norm": mv.norm.to_string(), "image": mv.image.render(), "trial": t })
        })
    };
    let mut identity = Check::new("trans_identity", TRANS_ANCHOR, trials, witness(|m| m.holds));
    if let Some((_, y, mv)) = outcomes.first() {
        identity = identity.with_detail(json!({ "y": render(y), "word": mv.normalized.to_json() }));
    }
    Ok(vec![
        identity,
        Check::new("normalized_word_to_unit", TRANS_ANCHOR, trials, witness(|m| m.lands_on_unit)),
    ])
}

fn embedding_for(config: &RunConfig, tits: &TitsModel) -> Result<EtaleEmbedding> {
    let desc = match &config.subalgebra {
        Some(d) => d.clone(),
        None if tits.algebra().is_commutative() => SubalgebraDescriptor::FirstSlot,
        None => SubalgebraDescriptor::DiagonalMat3,
    };
    EtaleEmbedding::from_descriptor(tits, &desc)
}

fn lemma_springer(config: &RunConfig) -> Result<Vec<Check>> {
    let samples = config.springer.samples.unwrap_or(DEFAULT_HOMOMORPHISM_SAMPLES);
    if samples == 0 {
        return Err(Error::InvalidTrials);
    }
    let tits = config.tits()?;
    let emb = embedding_for(config, &tits)?;
    let data = orthogonal_complement(tits.model(), &emb)?;
    let e = data.algebra();
    let strategy = match config.springer.strategy {
        StrategyKind::Constructive => {
            let b = match &config.springer.b {
                None => e.one(),
                Some(coords) => {
                    let c = coords.iter().map(|s| e.field().parse_element(s)).collect::<Result<Vec<_>>>()?;
                    e.element(c)?
                }
            };
            IsotropicStrategy::Constructive { b }
        }
        StrategyKind::Randomized => IsotropicStrategy::Randomized {
            max_trials: config.springer.max_trials.unwrap_or(DEFAULT_SEARCH_TRIALS),
        },
    };
    let v = isotropic_invertible(&tits, &data, &strategy, config.seed)?;
    let embedding = springer_embedding(&data, &v)?;
    let hom_witness = emb
        .homomorphism_witness(tits.model(), samples, config.seed)
        .map(|a| json!({ "a": render(&a) }));
    let mut checks = vec![Check::new(
        "etale_embedding",
        "Let $E$ be a cubic \\'etale subalgebra of $J$",
        samples,
        hom_witness,
    )];
    checks.extend(data.structure_checks(samples, config.seed));
    checks.push(
        Check::new("isotropic_invertible", "element $v$ in $J$ such that $q_E(v)=0$", 1, None).with_detail(json!({
            "v": v.render(),
            "norm": tits.model().norm(&v)?.to_string(),
            "lambda_prime": embedding.lambda_prime().to_string(),
        })),
    );
    for mut c in embedding.homomorphism_checks(tits.model(), samples, config.seed) {
        if c.name == "v_in_image" {
            c.paper_anchor = SPRINGER_ANCHOR.into();
        }
        checks.push(c);
    }
    Ok(checks)
}

fn lemma_discr(config: &RunConfig) -> Result<Vec<Check>> {
    let tits = config.tits()?;
    let emb = embedding_for(config, &tits)?;
    let data = orthogonal_complement(tits.model(), &emb)?;
    let outcome = lemma_discr_check(&tits, &data, config.seed)?;
    Ok(outcome.checks())
}

pub fn cmd_isotopy(config: &RunConfig) -> Result<Report> {
    let trials = trials_or(config, DEFAULT_AXIOM_TRIALS)?;
    let opts = &config.isotopy;
    let samples = opts.samples.unwrap_or(DEFAULT_AUTOTOPY_SAMPLES);
    if samples == 0 {
        return Err(Error::InvalidTrials);
    }
    let field = config.field()?;
    let model = config.model()?;
    let mut params: Vec<JordanElement> = opts
        .v
        .iter()
        .map(|v| {
            let x = parse_element_json(v, field)?;
            model.check(&x)?;
            Ok(x)
        })
        .collect::<Result<_>>()?;
    let default_random = if opts.v.is_empty() { 1 } else { 0 };
    for k in 0..opts.random_v.unwrap_or(default_random) {
        let mut rng = trial_rng(config.seed ^ 0x5eed_0001, k);
        params.push(model.random_invertible(&mut rng));
    }
    let mut checks = Vec::new();
    for (k, v) in params.iter().enumerate() {
        if model.norm(v)?.is_zero() {
            return Err(Error::NotInvertible);
        }
        let iso = isotope(&model, v)?;
        let suite = quadratic_axioms(&iso, trials, config.seed)?;
        for mut c in suite.checks {
            c.name = format!("isotope_{k}.{}", c.name);
            c.detail = Some(json!({ "v": v.render() }));
            checks.push(c);
        }
        if *v == *model.unit() {
            let same_unit = QuadraticJordan::unit(&iso) == *model.unit();
            let witness = (0..samples).find_map(|t| {
                let x = model.random(&mut trial_rng(config.seed, t));
                let differ = iso.u_matrix(&x).ok()? != model.u_matrix(&x).ok()?;
                differ.then(|| json!({ "x": x.render(), "trial": t }))
            });
            let witness = if same_unit { witness } else { Some(json!({ "unit": QuadraticJordan::unit(&iso).render() })) };
            checks.push(Check::new(&format!("isotope_{k}.identical"), ISOTOPE_ANCHOR, samples, witness));
        }
    }
    let mut maps: Vec<(String, LinearMap, bool)> = Vec::new();
    for (k, w) in opts.words.iter().enumerate() {
        let word = StructureWord::from_json(w, field)?;
        maps.push((format!("word_{k}"), eval_word(&model, &word)?, true));
    }
    for (k, m) in opts.maps.iter().enumerate() {
        maps.push((format!("map_{k}"), parse_matrix(m, field, model.dim())?, true));
    }
    for k in 0..opts.random_maps {
        let mut rng = trial_rng(config.seed ^ 0x5eed_0002, k);
        maps.push((format!("random_map_{k}"), random_invertible_map(field, model.dim(), &mut rng), false));
    }
    for (k, (name, g, expect)) in maps.into_iter().enumerate() {
        let verdict = is_autotopy(&model, &g, samples, config.seed.wrapping_add(k as u64))?;
        let detail = json!({
            "is_autotopy": verdict.holds,
            "expected": expect,
            "error_bound": verdict.error_bound(field),
            "witness_x": verdict.witness.as_ref().map(JordanElement::render),
        });
        let anchor = "U_{g(x)}=gU_xg^{-1}U_{g(1)}";
        checks.push(Check::outcome(&format!("{name}.autotopy"), anchor, samples, verdict.holds == expect, detail));
    }
    Ok(Report::new(Command::Isotopy.name(), config.to_value(), checks))
}

fn parse_matrix(value: &Value, field: crate::scalars::GroundField, dim: usize) -> Result<LinearMap> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Config("map must be an array of rows".into()))?;
    let rows: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| parse_element_json(r, field).map(JordanElement::into_coords))
        .collect::<Result<_>>()?;
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Dimension {
            expected: dim,
            found: rows.len(),
        });
    }
    Ok(Matrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Corruption;
    use crate::scalars::GroundField;

    fn base(field: &str) -> RunConfig {
        RunConfig::from_json(&format!(r#"{{"field":"{field}","seed":3}}"#)).unwrap()
    }

    #[test]
    fn axioms_pass_and_corruption_fails() {
        let mut c = base("Fp:1009");
        c.trials = Some(20);
        let r = run(Command::VerifyAxioms, &c).unwrap();
        assert!(r.passed());
        c.jordan.corrupt = Some(Corruption { output: 0, i: 1, j: 2, delta: "1".into() });
        let r = run(Command::VerifyAxioms, &c);
        assert_eq!(exit_code(&r), EXIT_FAIL);
        assert!(r.unwrap().checks.iter().any(|ch| !ch.passed && ch.witness.is_some()));
    }

    #[test]
    fn lemma_springer_reports_lambda() {
        let mut c = base("Q");
        c.jordan.lambda = "5".into();
        c.springer.samples = Some(10);
        let r = run(Command::Lemma(Lemma::Springer), &c).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        let iso = r.checks.iter().find(|ch| ch.name == "isotropic_invertible").unwrap();
        assert_eq!(iso.detail.as_ref().unwrap()["lambda_prime"], "5");
    }

    #[test]
    fn lemma_discr_needs_split_model() {
        let c = base("Fp:7");
        assert_eq!(exit_code(&run(Command::Lemma(Lemma::Discr), &c)), EXIT_CONFIG);
    }

    #[test]
    fn isotopy_rejects_random_maps() {
        let mut c = base("Fp:101");
        c.trials = Some(10);
        c.isotopy.random_maps = 2;
        c.isotopy.samples = Some(4);
        c.isotopy.v = vec![json!(["1", "1", "1", "0", "0", "0", "0", "0", "0"])];
        let r = run(Command::Isotopy, &c).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(r.checks.iter().any(|ch| ch.name == "isotope_0.identical"));
        assert_eq!(GroundField::prime(101).unwrap(), c.field().unwrap());
    }

    #[test]
    fn noninvertible_v_is_config_error() {
        let mut c = base("Q");
        c.isotopy.v = vec![json!(["0", "0", "0", "0", "0", "0", "0", "0", "0"])];
        assert_eq!(run(Command::Isotopy, &c).err(), Some(Error::NotInvertible));
    }
}
