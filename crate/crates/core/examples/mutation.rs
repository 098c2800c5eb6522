//! Perturb one coefficient of the adjoint table and watch the axiom suite
//! catch it.
//!
//! cargo run --release --example mutation

use albert_kit::deg3::Deg3Algebra;
use albert_kit::jordan::axiom_suite;
use albert_kit::scalars::GroundField;
use albert_kit::tits::TitsModel;

fn main() -> albert_kit::Result<()> {
    let field = GroundField::prime(1009)?;
    let tits = TitsModel::new(Deg3Algebra::split(field), field.from_i64(2))?;
    let term = tits.model().sharp_terms()[4].clone();
    println!("perturbing adjoint coefficient {term:?} by 1");
    let broken = tits.model().perturb_sharp(term.out, term.i, term.j, &field.one())?;
    let suite = axiom_suite(&broken, 200, 0)?;
    for c in suite.failures() {
        println!("FAIL {} witness {}", c.name, c.witness.as_ref().map(ToString::to_string).unwrap_or_default());
    }
    println!("detected: {}", !suite.passed());
    Ok(())
}
