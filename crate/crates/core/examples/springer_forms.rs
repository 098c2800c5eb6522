//! The Springer form of the diagonal subalgebra in the split Albert algebra
//! over `F_1009`, a randomized isotropic invertible `v`, and the embedding of
//! `Tits(E, λ')` it produces.
//!
//! cargo run --release --example springer_forms

use albert_kit::deg3::Deg3Algebra;
use albert_kit::scalars::GroundField;
use albert_kit::springer::{
    isotropic_invertible, orthogonal_complement, springer_embedding, EtaleEmbedding, IsotropicStrategy,
};
use albert_kit::tits::TitsModel;

fn main() -> albert_kit::Result<()> {
    let field = GroundField::prime(1009)?;
    let tits = TitsModel::new(Deg3Algebra::matrix3(field), field.from_i64(2))?;
    let emb = EtaleEmbedding::diagonal_mat3(&tits)?;
    let data = orthogonal_complement(tits.model(), &emb)?;
    println!("dim E⊥ = {}", data.rank());
    for c in data.structure_checks(100, 1) {
        println!("  {:20} {}", c.name, c.passed);
    }

    let v = isotropic_invertible(&tits, &data, &IsotropicStrategy::Randomized { max_trials: 10_000 }, 5)?;
    let (q, _) = data.springer_form(&v)?;
    println!("v = {v}");
    println!("q_E(v) = {q}, N(v) = {}", tits.model().norm(&v)?);

    let embedding = springer_embedding(&data, &v)?;
    println!("λ' = N(-1 × v) = {}", embedding.lambda_prime());
    for c in embedding.homomorphism_checks(tits.model(), 100, 2) {
        println!("  {:20} {}", c.name, c.passed);
    }
    Ok(())
}
