//! Build the split Albert algebra `Tits(M_3, λ)` over a large prime and run
//! the quadratic and cubic axiom suites.
//!
//! cargo run --release --example tits_axioms

use albert_kit::deg3::Deg3Algebra;
use albert_kit::jordan::axiom_suite;
use albert_kit::scalars::GroundField;
use albert_kit::tits::TitsModel;

fn main() -> albert_kit::Result<()> {
    let field = GroundField::prime(2_147_483_647)?;
    let tits = TitsModel::new(Deg3Algebra::matrix3(field), field.from_i64(2))?;
    let model = tits.model();
    println!(
        "dim {}, {} norm terms, {} adjoint terms",
        model.dim(),
        model.norm_terms().len(),
        model.sharp_terms().len()
    );
    let suite = axiom_suite(model, 1000, 42)?;
    for c in &suite.checks {
        println!("{:5} {:45} [{}]", if c.passed { "PASS" } else { "FAIL" }, c.name, c.paper_anchor);
    }
    println!("all passed: {}", suite.passed());
    Ok(())
}
