//! Isotopes `J^(v)` and the autotopy test on the split nine-dimensional
//! model over `F_101`.
//!
//! cargo run --example isotopy

use albert_kit::deg3::Deg3Algebra;
use albert_kit::isotopy::{eval_word, is_autotopy, isotope, random_invertible_map, Letter, StructureWord};
use albert_kit::jordan::quadratic_axioms;
use albert_kit::scalars::GroundField;
use albert_kit::tits::TitsModel;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> albert_kit::Result<()> {
    let field = GroundField::prime(101)?;
    let tits = TitsModel::new(Deg3Algebra::split(field), field.from_i64(3))?;
    let model = tits.model();
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let v = model.random_invertible(&mut rng);
    let iso = isotope(model, &v)?;
    let suite = quadratic_axioms(&iso, 300, 7)?;
    println!("J^(v) for v = {v}: quadratic axioms pass = {}", suite.passed());

    let x = model.random_invertible(&mut rng);
    let word = StructureWord::new(vec![Letter::Scalar(field.from_i64(5)), Letter::UOp(x)]);
    let g = eval_word(model, &word)?;
    let verdict = is_autotopy(model, &g, 32, 9)?;
    println!("5·U_x is an autotopy: {} (error bound {:?})", verdict.holds, verdict.error_bound(field));

    let h = random_invertible_map(field, model.dim(), &mut rng);
    let verdict = is_autotopy(model, &h, 32, 9)?;
    println!("random matrix is an autotopy: {}", verdict.holds);
    if let Some(w) = verdict.witness {
        println!("  witness x = {w}");
    }
    Ok(())
}
