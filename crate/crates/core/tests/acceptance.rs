//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use albert_kit::cli::{run, Command, Lemma};
use albert_kit::config::{RunConfig, StrategyKind};
use albert_kit::deg3::{Deg3Algebra, Deg3Element};
use albert_kit::isotopy::{eval_word, is_autotopy, isotope, random_invertible_map, Letter, StructureWord};
use albert_kit::jordan::{cubic_axioms, quadratic_axioms, trial_rng, CubicJordanModel, QuadraticJordan};
use albert_kit::quadforms::{
    irreducible_cubic, lemma_discr_check, linear_times_quadratic_cubic, residue_factors, witt_invariants,
    QuadraticForm,
};
use albert_kit::scalars::{GroundField, Scalar};
use albert_kit::springer::{
    isotropic_invertible, orthogonal_complement, springer_embedding, EtaleEmbedding, IsotropicStrategy,
    SpringerData,
};
use albert_kit::tits::TitsModel;
use rand::Rng;
use serde_json::Value;

const BIG_PRIME: u64 = 2_147_483_647;

type Outcome = (bool, String);

fn big() -> GroundField {
    GroundField::prime(BIG_PRIME).unwrap()
}

fn q() -> GroundField {
    GroundField::Rationals
}

fn cube_root_two(f: GroundField) -> Deg3Algebra {
    Deg3Algebra::cubic(f, [f.from_i64(-2), f.zero(), f.zero()]).unwrap()
}

/// The model matrix shared by the first two criteria.
fn axiom_models() -> Vec<(String, TitsModel)> {
    let f = big();
    vec![
        ("Tits(M3,1)/Fp".into(), TitsModel::new(Deg3Algebra::matrix3(f), f.one()).unwrap()),
        ("Tits(M3,2)/Fp".into(), TitsModel::new(Deg3Algebra::matrix3(f), f.from_i64(2)).unwrap()),
        ("Tits(k^3,2)/Q".into(), TitsModel::new(Deg3Algebra::split(q()), q().from_i64(2)).unwrap()),
        ("Tits(t^3-2,1)/Q".into(), TitsModel::new(cube_root_two(q()), q().one()).unwrap()),
    ]
}

fn suite_over_models(
    run_suite: fn(&CubicJordanModel, usize, u64) -> albert_kit::Result<albert_kit::jordan::SuiteReport>,
) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, tits) in axiom_models() {
        let start = Instant::now();
        let suite = run_suite(tits.model(), 1000, 2024).unwrap();
        let elapsed = start.elapsed();
        let fast = elapsed < Duration::from_secs(60);
        let failed: Vec<_> = suite.failures().map(|c| c.name.clone()).collect();
        ok &= failed.is_empty() && fast;
        parts.push(format!(
            "{name}: {} checks x 1000 in {:.1}s{}",
            suite.checks.len(),
            elapsed.as_secs_f64(),
            if failed.is_empty() { String::new() } else { format!(" failed {failed:?}") }
        ));
    }
    (ok, parts.join("; "))
}

fn quadratic_suite(m: &CubicJordanModel, t: usize, s: u64) -> albert_kit::Result<albert_kit::jordan::SuiteReport> {
    quadratic_axioms(m, t, s)
}

fn criterion_1() -> Outcome {
    suite_over_models(quadratic_suite)
}

fn criterion_2() -> Outcome {
    suite_over_models(cubic_axioms)
}

fn criterion_3() -> Outcome {
    let cases = [
        ("k^3/Q", r#"{"field":"Q","jordan":{"algebra":{"kind":"split"},"lambda":"3"}}"#),
        ("k^3/Fp", r#"{"field":"Fp:2147483647","jordan":{"algebra":{"kind":"split"},"lambda":"5"}}"#),
        ("t^3-2/Q", r#"{"field":"Q","jordan":{"algebra":{"kind":"cubic","f":["-2","0","0"]},"lambda":"1"}}"#),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, text) in cases {
        let mut config = RunConfig::from_json(text).unwrap();
        config.trials = Some(200);
        config.seed = 17;
        let report = run(Command::Lemma(Lemma::Trans), &config).unwrap();
        let counted = report.checks.iter().all(|c| c.trials == 200);
        ok &= report.passed() && counted && report.checks.len() == 2;
        parts.push(format!("{name}: {} on 200 y", if report.passed() { "identity and word hold" } else { "FAILED" }));
    }
    (ok, parts.join("; "))
}

fn criterion_4() -> Outcome {
    let f = big();
    let tits = TitsModel::new(Deg3Algebra::matrix3(f), f.from_i64(2)).unwrap();
    let m = tits.model();
    let mut rng = trial_rng(4, 0);

    let mut isotopes_ok = true;
    for k in 0..5 {
        let v = m.random_invertible(&mut rng);
        let iso = isotope(m, &v).unwrap();
        isotopes_ok &= quadratic_axioms(&iso, 500, 100 + k).unwrap().passed();
    }

    let identity = isotope(m, m.unit()).unwrap();
    let mut identical = QuadraticJordan::unit(&identity) == *m.unit();
    for _ in 0..20 {
        let x = m.random(&mut rng);
        identical &= identity.u_matrix(&x).unwrap() == m.u_matrix(&x).unwrap();
    }

    let mut autotopies = 0;
    for k in 0..20 {
        let x = m.random_invertible(&mut rng);
        let c = f.random_nonzero(&mut rng);
        for word in [
            StructureWord::new(vec![Letter::UOp(x.clone())]),
            StructureWord::new(vec![Letter::Scalar(c.clone())]),
        ] {
            let g = eval_word(m, &word).unwrap();
            if is_autotopy(m, &g, 32, 1000 + k).unwrap().holds {
                autotopies += 1;
            }
        }
    }

    let mut rejected = 0;
    for k in 0..20 {
        let g = random_invertible_map(f, m.dim(), &mut rng);
        let verdict = is_autotopy(m, &g, 32, 2000 + k).unwrap();
        if !verdict.holds && verdict.witness.is_some() {
            rejected += 1;
        }
    }
    (
        isotopes_ok && identical && autotopies == 40 && rejected == 20,
        format!(
            "5 isotopes pass 500-trial suite: {isotopes_ok}; J^(1) identical: {identical}; \
             U_x and scalars accepted {autotopies}/40; random maps rejected {rejected}/20"
        ),
    )
}

fn nine_dim_fixtures() -> Vec<(String, TitsModel)> {
    let p = GroundField::prime(1009).unwrap();
    vec![
        ("k^3/Q".into(), TitsModel::new(Deg3Algebra::split(q()), q().from_i64(2)).unwrap()),
        ("k^3/F1009".into(), TitsModel::new(Deg3Algebra::split(p), p.from_i64(7)).unwrap()),
        ("t^3-2/Q".into(), TitsModel::new(cube_root_two(q()), q().from_ratio(-1, 3).unwrap()).unwrap()),
        ("t^3-2/F1009".into(), TitsModel::new(cube_root_two(p), p.one()).unwrap()),
    ]
}

fn first_slot_data(tits: &TitsModel) -> SpringerData {
    let emb = EtaleEmbedding::first_slot(tits).unwrap();
    orthogonal_complement(tits.model(), &emb).unwrap()
}

fn criterion_5() -> Outcome {
    let f = GroundField::prime(1009).unwrap();
    let tits = TitsModel::new(Deg3Algebra::matrix3(f), f.from_i64(2)).unwrap();
    let emb = EtaleEmbedding::diagonal_mat3(&tits).unwrap();
    let data = orthogonal_complement(tits.model(), &emb).unwrap();
    let rank_ok = data.rank() == 24;
    let checks = data.structure_checks(100, 5);
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();

    let mut fixture_ok = true;
    for (_, t) in nine_dim_fixtures() {
        let d = first_slot_data(&t);
        let a = t.algebra();
        let mut rng = trial_rng(55, 0);
        for _ in 0..100 {
            let (a1, a2) = (a.random(&mut rng), a.random(&mut rng));
            let x = t.pack(&a.zero(), &a1, &a2).unwrap();
            let (qx, _) = d.springer_form(&x).unwrap();
            fixture_ok &= qx == a.mul(&a1, &a2).unwrap().neg();
        }
    }
    (
        rank_ok && failed.is_empty() && fixture_ok,
        format!(
            "dim E-perp = {}; module axioms, projections, q(a.x) = a^2 q(x) on 100 samples: {}; \
             q((0,a1,a2)) = -a1a2 in 4 nine-dim fixtures: {fixture_ok}",
            data.rank(),
            if failed.is_empty() { "exact".to_string() } else { format!("failed {failed:?}") }
        ),
    )
}

fn embedding_passes(data: &SpringerData, target: &CubicJordanModel, v: &albert_kit::jordan::JordanElement, seed: u64) -> Option<Scalar> {
    let emb = springer_embedding(data, v).ok()?;
    let lambda_prime = emb.lambda_prime().clone();
    let expected = target.norm(&target.cross(target.unit(), v).ok()?.neg()).ok()?;
    let ok = emb.homomorphism_checks(target, 100, seed).iter().all(|c| c.passed) && lambda_prime == expected;
    ok.then_some(lambda_prime)
}

fn criterion_6() -> Outcome {
    let mut fixtures = 0;
    let mut fixture_total = 0;
    for (_, t) in nine_dim_fixtures() {
        let data = first_slot_data(&t);
        let a = t.algebra();
        let mut rng = trial_rng(66, 0);
        let bs: Vec<Deg3Element> =
            vec![a.one(), a.element_from_ints(&[1, 2, 3]).unwrap(), a.random_invertible(&mut rng)];
        for b in bs {
            fixture_total += 1;
            let v = isotropic_invertible(&t, &data, &IsotropicStrategy::Constructive { b: b.clone() }, 0).unwrap();
            let lambda_nb = t.lambda() * &a.norm(&b).unwrap();
            if embedding_passes(&data, t.model(), &v, 6) == Some(lambda_nb) {
                fixtures += 1;
            }
        }
    }

    let f = GroundField::prime(1009).unwrap();
    let tits = TitsModel::new(Deg3Algebra::matrix3(f), f.from_i64(3)).unwrap();
    let companion = irreducible_cubic(1009).map(|c| f.from_i64(c as i64));
    let embs = [
        EtaleEmbedding::diagonal_mat3(&tits).unwrap(),
        EtaleEmbedding::companion(&tits, companion).unwrap(),
    ];
    let mut randomized = 0;
    let mut randomized_total = 0;
    for (k, emb) in embs.iter().enumerate() {
        let data = orthogonal_complement(tits.model(), emb).unwrap();
        let runs = if k == 0 { 20 } else { 5 };
        for seed in 0..runs {
            randomized_total += 1;
            let v = isotropic_invertible(&tits, &data, &IsotropicStrategy::Randomized { max_trials: 10_000 }, seed)
                .unwrap();
            if embedding_passes(&data, tits.model(), &v, seed).is_some() {
                randomized += 1;
            }
        }
    }
    (
        fixtures == fixture_total && randomized == randomized_total,
        format!(
            "(0,b,0) fixtures with lambda' = lambda N(b): {fixtures}/{fixture_total}; \
             randomized v over F1009 (20 diagonal + 5 companion): {randomized}/{randomized_total}, 100 samples each"
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut rows = Vec::new();
    for p in [7u64, 101, 1009] {
        let f = GroundField::prime(p).unwrap();
        let tits = TitsModel::new(Deg3Algebra::matrix3(f), f.from_i64(2)).unwrap();
        let lift = |c: [u64; 3]| c.map(|v| f.from_i64(v as i64));
        let cases = [
            ("diag", EtaleEmbedding::diagonal_mat3(&tits).unwrap()),
            ("irr", EtaleEmbedding::companion(&tits, lift(irreducible_cubic(p))).unwrap()),
            ("lin*quad", EtaleEmbedding::companion(&tits, lift(linear_times_quadratic_cubic(p))).unwrap()),
        ];
        for (name, emb) in cases {
            let data = orthogonal_complement(tits.model(), &emb).unwrap();
            let out = lemma_discr_check(&tits, &data, p).unwrap();
            let expected_factors = residue_factors(data.algebra()).unwrap().len();
            let pass = out.passed() && out.factors.len() == expected_factors;
            ok &= pass;
            let shape: Vec<String> = out
                .factors
                .iter()
                .map(|c| format!("({},{},{})", c.observed.rank, c.observed.disc, c.observed.witt_index))
                .collect();
            rows.push(format!("p={p} {name} {}", shape.join("")));
        }
        // negative control: the split model 4h differs from q_E on the linear factor
        let emb = EtaleEmbedding::companion(&tits, lift(linear_times_quadratic_cubic(p))).unwrap();
        let data = orthogonal_complement(tits.model(), &emb).unwrap();
        let out = lemma_discr_check(&tits, &data, 1).unwrap();
        let four_h = witt_invariants(&QuadraticForm::hyperbolic(4, &albert_kit::scalars::Fp::new(0, p)), 0);
        ok &= out.factors.iter().any(|c| c.observed != four_h);
    }
    (ok, rows.join("; "))
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for f in [q(), big()] {
        let tits = TitsModel::new(Deg3Algebra::matrix3(f), f.from_i64(3)).unwrap();
        let m = tits.model();
        let one = m.generic_min_poly(m.unit()).unwrap();
        let diag = tits
            .embed_first_slot(&tits.algebra().element_from_ints(&[2, 0, 0, 0, 3, 0, 0, 0, 5]).unwrap())
            .unwrap();
        let d = m.generic_min_poly(&diag).unwrap();
        let mut rng = trial_rng(8, 0);
        let residual_zero = (0..200).all(|_| m.min_poly_residual(&m.random(&mut rng)).unwrap().is_zero());
        ok &= !one.etale && one.disc.is_zero() && d.etale && residual_zero;
        parts.push(format!(
            "{f}: disc(1) = {}, disc(diag(2,3,5)) = {}, m_x(x) = 0 for 200 x: {residual_zero}",
            one.disc, d.disc
        ));
    }
    (ok, parts.join("; "))
}

fn criterion_9() -> Outcome {
    let f = big();
    let tits = TitsModel::new(Deg3Algebra::matrix3(f), f.one()).unwrap();
    let m = tits.model();
    let mut rng = trial_rng(9, 0);
    let mut detected = 0;
    let mut sites = Vec::new();
    for k in 0..10 {
        let out = rng.gen_range(0..m.dim());
        let i = rng.gen_range(0..m.dim());
        let j = rng.gen_range(0..m.dim());
        let delta = f.random_nonzero(&mut rng);
        let broken = m.perturb_sharp(out, i, j, &delta).unwrap();
        let mut quad = quadratic_axioms(&broken, 1000, 900 + k).unwrap();
        quad.checks.extend(cubic_axioms(&broken, 1000, 900 + k).unwrap().checks);
        let caught = quad.checks.iter().filter(|c| !c.passed && c.witness.is_some()).count();
        if caught > 0 {
            detected += 1;
        }
        sites.push(format!("[{out},{i},{j}]:{caught}"));
    }
    (
        detected == 10,
        format!("{detected}/10 corruptions detected (site: failing checks) {}", sites.join(" ")),
    )
}

fn strip_timestamp(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("timestamp");
    v
}

fn criterion_10() -> Outcome {
    let mut configs: Vec<(Command, RunConfig)> = Vec::new();
    let base = |text: &str| RunConfig::from_json(text).unwrap();
    let mut axioms = base(r#"{"field":"Fp:1009","jordan":{"algebra":{"kind":"mat3"},"lambda":"2"},"seed":77}"#);
    axioms.trials = Some(100);
    configs.push((Command::VerifyAxioms, axioms));
    configs.push((Command::Lemma(Lemma::Trans), base(r#"{"field":"Q","seed":3,"trials":50}"#)));
    let mut springer = base(
        r#"{"field":"Fp:101","jordan":{"algebra":{"kind":"mat3"}},"subalgebra":{"subalgebra":"diagonal-mat3"},"seed":5}"#,
    );
    springer.springer.strategy = StrategyKind::Randomized;
    springer.springer.samples = Some(20);
    configs.push((Command::Lemma(Lemma::Springer), springer));
    configs.push((
        Command::Lemma(Lemma::Discr),
        base(r#"{"field":"Fp:7","jordan":{"algebra":{"kind":"mat3"}},"subalgebra":{"subalgebra":"companion","f":["1","1","0"]}}"#),
    ));
    let mut iso = base(r#"{"field":"Fp:1009","seed":12,"trials":50}"#);
    iso.isotopy.random_v = Some(2);
    iso.isotopy.random_maps = 2;
    configs.push((Command::Isotopy, iso));

    let mut identical = 0;
    for (cmd, config) in &configs {
        let a = strip_timestamp(&run(*cmd, config).unwrap().to_json());
        let b = strip_timestamp(&run(*cmd, config).unwrap().to_json());
        if a == b {
            identical += 1;
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"field":"Fp:101","jordan":{"algebra":{"kind":"mat3"}},"seed":8}"#).unwrap();
    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("r{k}.json"));
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_albert-kit"))
            .args(["lemma", "discr", "--config"])
            .arg(&cfg)
            .arg("--out")
            .arg(&out)
            .output()
            .unwrap();
        assert_eq!(status.status.code(), Some(0));
        outputs.push(strip_timestamp(&std::fs::read_to_string(&out).unwrap()));
    }
    let binary_same = outputs[0] == outputs[1];
    (
        identical == configs.len() && binary_same,
        format!(
            "{identical}/{} command reports identical across runs; binary reports identical: {binary_same}",
            configs.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("quadratic Jordan axioms, 1000 trials per model", criterion_1),
        ("cubic Jordan axioms, 1000 trials per model", criterion_2),
        ("transitivity move to 1 for 200 invertible y", criterion_3),
        ("isotopes and autotopies", criterion_4),
        ("Springer data on the split 27-dim model", criterion_5),
        ("Springer embedding of Tits(E, lambda')", criterion_6),
        ("q_E against <1,-d> + 3h per residue field", criterion_7),
        ("generic minimal polynomial and etale test", criterion_8),
        ("mutation sensitivity of the axiom suite", criterion_9),
        ("deterministic reports", criterion_10),
    ];
    let mut all = true;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (passed, detail) = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(outcome) => outcome,
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, format!("panicked: {msg}"))
            }
        };
        all &= passed;
        println!(
            "criterion {:2} {} {title} ({:.1}s): {detail}",
            k + 1,
            if passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
